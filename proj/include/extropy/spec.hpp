#pragma once

#include <string_view>
#include <vector>

#include "extropy/distribution.hpp"
#include "extropy/measures.hpp"

namespace extropy {

/// Model mini-grammar `name:p1,p2,...`:
///   exp:λ | exponential:λ | uniform:a,b | power:λ | degenerate:c | affine:scale,shift,<model>
/// Throws ParseError on malformed text and DomainError on invalid parameters.
Distribution parse_model(std::string_view text);

/// `pow:m` (alias `power:m`) or `identity`.
WeightSpec parse_weight(std::string_view text);

/// Comma-separated reals, e.g. a maximal signature "0,4,-4,1".
std::vector<double> parse_real_list(std::string_view text, std::size_t offset = 0);

/// Strict decimal real (whole text must be consumed).
double parse_real(std::string_view text, std::size_t offset = 0);

}  // namespace extropy
