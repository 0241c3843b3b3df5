#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "extropy/quadrature.hpp"
#include "extropy/random.hpp"

namespace extropy {

struct Support {
    double lower = 0.0;
    double upper = 0.0;  // +inf for unbounded laws
};

struct UniformLaw {
    double a;
    double b;
};
struct ExponentialLaw {
    double rate;
};
/// f(x) = λ x^{λ-1} on (0, 1).
struct PowerLaw {
    double exponent;
};
struct DegenerateLaw {
    double point;
};
struct EmpiricalLaw {
    std::vector<double> sorted;
};
struct AffineLaw;
struct MixtureLaw;

/// Immutable nonnegative lifetime law. Cheap to copy; composite laws share
/// their (immutable) parts.
class Distribution {
public:
    enum class Kind { Uniform, Exponential, Power, Degenerate, Empirical, Affine, Mixture };

    using Law = std::variant<UniformLaw, ExponentialLaw, PowerLaw, DegenerateLaw, std::shared_ptr<const EmpiricalLaw>,
                             std::shared_ptr<const AffineLaw>, std::shared_ptr<const MixtureLaw>>;

    static Distribution uniform(double a, double b);
    static Distribution exponential(double rate);
    static Distribution power(double exponent);
    static Distribution degenerate(double point);
    /// Step-cdf law of a sample (right-continuous, generalized-inverse quantile).
    static Distribution empirical(std::vector<double> values);
    /// Law of scale * X + shift.
    static Distribution affine(const Distribution& base, double scale, double shift);
    /// Finite mixture. Nested mixtures are flattened.
    static Distribution mixture(const std::vector<std::pair<double, Distribution>>& components);

    Kind kind() const;
    const Law& law() const { return law_; }

    /// True when the law has a density (every part continuous).
    bool has_density() const;
    Support support() const;
    /// Interior points where the cdf or density is not smooth.
    std::vector<double> breakpoints() const;

    double cdf(double x) const;
    double survival(double x) const;
    double pdf(double x) const;
    double hazard(double x) const;
    /// Generalized inverse of the cdf. Continuous laws require u in (0,1).
    double quantile(double u) const;
    /// Point x with survival(x) = s, accurate for small s.
    double upper_quantile(double s) const;

    /// E[g(X)], computed as an integral over the probability scale
    /// (exact averages for point masses and empirical laws).
    quad::Result expectation(const std::function<double(double)>& g, const quad::Options& opts = {}) const;

    double draw(Rng& rng) const;
    std::vector<double> sample(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0) const;

    /// Mini-grammar form ("exp:1", "uniform:0,1", ...) for simple laws; a
    /// readable description otherwise.
    std::string describe() const;

    bool operator==(const Distribution& other) const;

private:
    explicit Distribution(Law law) : law_(std::move(law)) {}
    Law law_;
};

struct AffineLaw {
    Distribution base;
    double scale;
    double shift;
};

struct MixtureComponent {
    double weight;
    Distribution model;
};

struct MixtureLaw {
    std::vector<MixtureComponent> components;
};

std::string to_string(Distribution::Kind kind);

}  // namespace extropy
