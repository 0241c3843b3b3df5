#include "extropy/spec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "extropy/error.hpp"

namespace extropy {
namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
        ++offset;
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::vector<double> params(std::string_view text, std::size_t offset, std::size_t expected, const std::string& name) {
    std::vector<double> out = parse_real_list(text, offset);
    if (out.size() != expected)
        throw ParseError(name + " expects " + std::to_string(expected) + " parameter(s), got " +
                             std::to_string(out.size()),
                         offset);
    return out;
}

}  // namespace

double parse_real(std::string_view text, std::size_t offset) {
    std::size_t off = offset;
    const std::string_view t = trim(text, off);
    if (t.empty()) throw ParseError("expected a number", off);
    std::string_view body = t;
    if (body.front() == '+') body.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc() || ptr != body.data() + body.size())
        throw ParseError("invalid number '" + std::string(t) + "'", off);
    if (!std::isfinite(v)) throw ParseError("number must be finite", off);
    return v;
}

std::vector<double> parse_real_list(std::string_view text, std::size_t offset) {
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
        out.push_back(parse_real(text.substr(start, end - start), offset + start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Distribution parse_model(std::string_view text) {
    std::size_t off = 0;
    const std::string_view t = trim(text, off);
    const std::size_t colon = t.find(':');
    if (colon == std::string_view::npos) throw ParseError("model spec needs the form name:params", off + t.size());
    const std::string name = lower(t.substr(0, colon));
    const std::string_view rest = t.substr(colon + 1);
    const std::size_t at = off + colon + 1;
    if (name == "exp" || name == "exponential") return Distribution::exponential(params(rest, at, 1, name)[0]);
    if (name == "uniform") {
        const auto p = params(rest, at, 2, name);
        return Distribution::uniform(p[0], p[1]);
    }
    if (name == "power") return Distribution::power(params(rest, at, 1, name)[0]);
    if (name == "degenerate") return Distribution::degenerate(params(rest, at, 1, name)[0]);
    if (name == "affine") {
        const std::size_t c1 = rest.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? c1 : rest.find(',', c1 + 1);
        if (c2 == std::string_view::npos) throw ParseError("affine expects scale,shift,<model>", at);
        const double scale = parse_real(rest.substr(0, c1), at);
        const double shift = parse_real(rest.substr(c1 + 1, c2 - c1 - 1), at + c1 + 1);
        try {
            return Distribution::affine(parse_model(rest.substr(c2 + 1)), scale, shift);
        } catch (const ParseError& e) {
            throw ParseError(std::string("in affine base: ") + e.what(), at + c2 + 1 + e.position());
        }
    }
    throw ParseError("unknown model '" + name + "'", off);
}

WeightSpec parse_weight(std::string_view text) {
    std::size_t off = 0;
    const std::string_view t = trim(text, off);
    if (lower(t) == "identity") return WeightSpec::identity();
    const std::size_t colon = t.find(':');
    const std::string name = lower(t.substr(0, colon));
    if (colon == std::string_view::npos || (name != "pow" && name != "power"))
        throw ParseError("weight spec must be pow:m or identity", off);
    return WeightSpec::power(parse_real(t.substr(colon + 1), off + colon + 1));
}

}  // namespace extropy
