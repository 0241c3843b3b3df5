#include "extropy/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "extropy/error.hpp"
#include "extropy/format.hpp"

namespace extropy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

// Smallest x in [lo, hi] with pred(x) true, for a monotone predicate.
template <class Pred>
double bisect(double lo, double hi, Pred pred) {
    for (int it = 0; it < 2000; ++it) {
        const double mid = lo + 0.5 * (hi - lo);
        if (!(mid > lo && mid < hi)) break;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

std::string to_string(Distribution::Kind kind) {
    switch (kind) {
        case Distribution::Kind::Uniform: return "uniform";
        case Distribution::Kind::Exponential: return "exponential";
        case Distribution::Kind::Power: return "power";
        case Distribution::Kind::Degenerate: return "degenerate";
        case Distribution::Kind::Empirical: return "empirical";
        case Distribution::Kind::Affine: return "affine";
        case Distribution::Kind::Mixture: return "mixture";
    }
    return "unknown";
}

Distribution Distribution::uniform(double a, double b) {
    require(std::isfinite(a) && std::isfinite(b), "uniform: parameters must be finite");
    require(a >= 0.0, "uniform: lower end must be >= 0");
    require(a < b, "uniform: requires a < b");
    return Distribution(UniformLaw{a, b});
}

Distribution Distribution::exponential(double rate) {
    require(std::isfinite(rate) && rate > 0.0, "exponential: rate must be > 0");
    return Distribution(ExponentialLaw{rate});
}

Distribution Distribution::power(double exponent) {
    require(std::isfinite(exponent) && exponent > 1.0, "power: exponent must be > 1");
    return Distribution(PowerLaw{exponent});
}

Distribution Distribution::degenerate(double point) {
    require(std::isfinite(point) && point >= 0.0, "degenerate: point must be finite and >= 0");
    return Distribution(DegenerateLaw{point});
}

Distribution Distribution::empirical(std::vector<double> values) {
    require(!values.empty(), "empirical: needs at least one value");
    for (double v : values) require(std::isfinite(v) && v >= 0.0, "empirical: values must be finite and >= 0");
    std::sort(values.begin(), values.end());
    return Distribution(std::make_shared<const EmpiricalLaw>(EmpiricalLaw{std::move(values)}));
}

Distribution Distribution::affine(const Distribution& base, double scale, double shift) {
    require(std::isfinite(scale) && scale > 0.0, "affine: scale must be > 0");
    require(std::isfinite(shift) && shift >= 0.0, "affine: shift must be >= 0");
    return Distribution(std::make_shared<const AffineLaw>(AffineLaw{base, scale, shift}));
}

Distribution Distribution::mixture(const std::vector<std::pair<double, Distribution>>& components) {
    require(!components.empty(), "mixture: needs at least one component");
    MixtureLaw law;
    double total = 0.0;
    for (const auto& [w, model] : components) {
        require(std::isfinite(w) && w > 0.0, "mixture: weights must be > 0");
        total += w;
        if (model.kind() == Kind::Mixture) {
            for (const auto& inner : std::get<std::shared_ptr<const MixtureLaw>>(model.law_)->components)
                law.components.push_back({w * inner.weight, inner.model});
        } else {
            law.components.push_back({w, model});
        }
    }
    require(std::fabs(total - 1.0) <= 1e-12, "mixture: weights must sum to 1");
    return Distribution(std::make_shared<const MixtureLaw>(std::move(law)));
}

Distribution::Kind Distribution::kind() const { return static_cast<Kind>(law_.index()); }

bool Distribution::has_density() const {
    return std::visit(overloaded{
                          [](const UniformLaw&) { return true; },
                          [](const ExponentialLaw&) { return true; },
                          [](const PowerLaw&) { return true; },
                          [](const DegenerateLaw&) { return false; },
                          [](const std::shared_ptr<const EmpiricalLaw>&) { return false; },
                          [](const std::shared_ptr<const AffineLaw>& p) { return p->base.has_density(); },
                          [](const std::shared_ptr<const MixtureLaw>& p) {
                              return std::all_of(p->components.begin(), p->components.end(),
                                                 [](const MixtureComponent& c) { return c.model.has_density(); });
                          },
                      },
                      law_);
}

Support Distribution::support() const {
    return std::visit(overloaded{
                          [](const UniformLaw& l) { return Support{l.a, l.b}; },
                          [](const ExponentialLaw&) { return Support{0.0, kInf}; },
                          [](const PowerLaw&) { return Support{0.0, 1.0}; },
                          [](const DegenerateLaw& l) { return Support{l.point, l.point}; },
                          [](const std::shared_ptr<const EmpiricalLaw>& p) {
                              return Support{p->sorted.front(), p->sorted.back()};
                          },
                          [](const std::shared_ptr<const AffineLaw>& p) {
                              const Support s = p->base.support();
                              return Support{p->scale * s.lower + p->shift, p->scale * s.upper + p->shift};
                          },
                          [](const std::shared_ptr<const MixtureLaw>& p) {
                              Support s{kInf, -kInf};
                              for (const auto& c : p->components) {
                                  const Support cs = c.model.support();
                                  s.lower = std::min(s.lower, cs.lower);
                                  s.upper = std::max(s.upper, cs.upper);
                              }
                              return s;
                          },
                      },
                      law_);
}

std::vector<double> Distribution::breakpoints() const {
    std::vector<double> pts = std::visit(
        overloaded{
            [](const UniformLaw& l) { return std::vector<double>{l.a, l.b}; },
            [](const ExponentialLaw&) { return std::vector<double>{0.0}; },
            [](const PowerLaw&) { return std::vector<double>{0.0, 1.0}; },
            [](const DegenerateLaw& l) { return std::vector<double>{l.point}; },
            [](const std::shared_ptr<const EmpiricalLaw>& p) { return p->sorted; },
            [](const std::shared_ptr<const AffineLaw>& p) {
                std::vector<double> v = p->base.breakpoints();
                for (double& x : v) x = p->scale * x + p->shift;
                return v;
            },
            [](const std::shared_ptr<const MixtureLaw>& p) {
                std::vector<double> v;
                for (const auto& c : p->components) {
                    const auto inner = c.model.breakpoints();
                    v.insert(v.end(), inner.begin(), inner.end());
                }
                return v;
            },
        },
        law_);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double Distribution::cdf(double x) const {
    return std::visit(overloaded{
                          [x](const UniformLaw& l) {
                              if (x < l.a) return 0.0;
                              if (x >= l.b) return 1.0;
                              return (x - l.a) / (l.b - l.a);
                          },
                          [this, x](const ExponentialLaw&) { return 1.0 - survival(x); },
                          [x](const PowerLaw& l) {
                              if (x <= 0.0) return 0.0;
                              if (x >= 1.0) return 1.0;
                              return std::pow(x, l.exponent);
                          },
                          [x](const DegenerateLaw& l) { return x < l.point ? 0.0 : 1.0; },
                          [x](const std::shared_ptr<const EmpiricalLaw>& p) {
                              const auto& v = p->sorted;
                              const auto count = std::upper_bound(v.begin(), v.end(), x) - v.begin();
                              return static_cast<double>(count) / static_cast<double>(v.size());
                          },
                          [x](const std::shared_ptr<const AffineLaw>& p) {
                              return p->base.cdf((x - p->shift) / p->scale);
                          },
                          [this, x](const std::shared_ptr<const MixtureLaw>&) { return 1.0 - survival(x); },
                      },
                      law_);
}

double Distribution::survival(double x) const {
    return std::visit(overloaded{
                          [this, x](const UniformLaw&) { return 1.0 - cdf(x); },
                          [x](const ExponentialLaw& l) { return x <= 0.0 ? 1.0 : std::exp(-l.rate * x); },
                          [this, x](const PowerLaw&) { return 1.0 - cdf(x); },
                          [this, x](const DegenerateLaw&) { return 1.0 - cdf(x); },
                          [this, x](const std::shared_ptr<const EmpiricalLaw>&) { return 1.0 - cdf(x); },
                          [x](const std::shared_ptr<const AffineLaw>& p) {
                              return p->base.survival((x - p->shift) / p->scale);
                          },
                          [x](const std::shared_ptr<const MixtureLaw>& p) {
                              double s = 0.0;
                              for (const auto& c : p->components) s += c.weight * c.model.survival(x);
                              return std::min(1.0, s);
                          },
                      },
                      law_);
}

double Distribution::pdf(double x) const {
    return std::visit(overloaded{
                          [x](const UniformLaw& l) { return (x >= l.a && x <= l.b) ? 1.0 / (l.b - l.a) : 0.0; },
                          [x](const ExponentialLaw& l) { return x < 0.0 ? 0.0 : l.rate * std::exp(-l.rate * x); },
                          [x](const PowerLaw& l) {
                              return (x > 0.0 && x < 1.0) ? l.exponent * std::pow(x, l.exponent - 1.0) : 0.0;
                          },
                          [](const DegenerateLaw&) -> double { throw DomainError("degenerate law has no density"); },
                          [](const std::shared_ptr<const EmpiricalLaw>&) -> double {
                              throw DomainError("empirical law has no density");
                          },
                          [x](const std::shared_ptr<const AffineLaw>& p) {
                              return p->base.pdf((x - p->shift) / p->scale) / p->scale;
                          },
                          [x](const std::shared_ptr<const MixtureLaw>& p) {
                              double f = 0.0;
                              for (const auto& c : p->components) f += c.weight * c.model.pdf(x);
                              return f;
                          },
                      },
                      law_);
}

double Distribution::hazard(double x) const {
    const double s = survival(x);
    if (!(s > 0.0)) throw DomainError("hazard: survival is zero at x = " + format_double(x));
    return pdf(x) / s;
}

double Distribution::quantile(double u) const {
    if (has_density()) {
        require(u > 0.0 && u < 1.0, "quantile: u must lie in (0,1), got " + format_double(u));
    } else {
        require(u >= 0.0 && u <= 1.0, "quantile: u must lie in [0,1], got " + format_double(u));
    }
    return std::visit(overloaded{
                          [u](const UniformLaw& l) { return l.a + (l.b - l.a) * u; },
                          [u](const ExponentialLaw& l) { return -std::log1p(-u) / l.rate; },
                          [u](const PowerLaw& l) { return std::pow(u, 1.0 / l.exponent); },
                          [](const DegenerateLaw& l) { return l.point; },
                          [u](const std::shared_ptr<const EmpiricalLaw>& p) {
                              const auto n = p->sorted.size();
                              auto k = static_cast<std::size_t>(std::ceil(u * static_cast<double>(n)));
                              k = std::clamp<std::size_t>(k, 1, n);
                              return p->sorted[k - 1];
                          },
                          [u](const std::shared_ptr<const AffineLaw>& p) {
                              return p->scale * p->base.quantile(u) + p->shift;
                          },
                          [this, u](const std::shared_ptr<const MixtureLaw>& p) {
                              double lo = kInf, hi = -kInf;
                              for (const auto& c : p->components) {
                                  const double q = c.model.quantile(u);
                                  lo = std::min(lo, q);
                                  hi = std::max(hi, q);
                              }
                              if (lo == hi) return lo;
                              if (cdf(lo) >= u) return lo;
                              return bisect(lo, hi, [&](double x) { return cdf(x) >= u; });
                          },
                      },
                      law_);
}

double Distribution::upper_quantile(double s) const {
    if (has_density()) {
        require(s > 0.0 && s < 1.0, "upper_quantile: s must lie in (0,1), got " + format_double(s));
    } else {
        require(s >= 0.0 && s <= 1.0, "upper_quantile: s must lie in [0,1], got " + format_double(s));
    }
    return std::visit(overloaded{
                          [s](const UniformLaw& l) { return l.b - (l.b - l.a) * s; },
                          [s](const ExponentialLaw& l) { return -std::log(s) / l.rate; },
                          [s](const PowerLaw& l) { return std::exp(std::log1p(-s) / l.exponent); },
                          [](const DegenerateLaw& l) { return l.point; },
                          [this, s](const std::shared_ptr<const EmpiricalLaw>&) { return quantile(1.0 - s); },
                          [s](const std::shared_ptr<const AffineLaw>& p) {
                              return p->scale * p->base.upper_quantile(s) + p->shift;
                          },
                          [this, s](const std::shared_ptr<const MixtureLaw>& p) {
                              double lo = kInf, hi = -kInf;
                              for (const auto& c : p->components) {
                                  const double q = c.model.upper_quantile(s);
                                  lo = std::min(lo, q);
                                  hi = std::max(hi, q);
                              }
                              if (lo == hi) return lo;
                              if (survival(lo) <= s) return lo;
                              return bisect(lo, hi, [&](double x) { return survival(x) <= s; });
                          },
                      },
                      law_);
}

quad::Result Distribution::expectation(const std::function<double(double)>& g, const quad::Options& opts) const {
    return std::visit(
        overloaded{
            [&](const DegenerateLaw& l) { return quad::Result{g(l.point), 0.0, 0, true}; },
            [&](const std::shared_ptr<const EmpiricalLaw>& p) {
                double sum = 0.0;
                for (double x : p->sorted) sum += g(x);
                return quad::Result{sum / static_cast<double>(p->sorted.size()), 0.0, 0, true};
            },
            [&](const std::shared_ptr<const AffineLaw>& p) {
                return p->base.expectation([&](double x) { return g(p->scale * x + p->shift); }, opts);
            },
            [&](const std::shared_ptr<const MixtureLaw>& p) {
                quad::Result total;
                for (const auto& c : p->components) {
                    const quad::Result r = c.model.expectation(g, opts);
                    total.value += c.weight * r.value;
                    total.abs_error += c.weight * r.abs_error;
                    total.intervals += r.intervals;
                    total.converged = total.converged && r.converged;
                }
                return total;
            },
            [&](const auto&) {
                // Lower half through the quantile, upper half through the upper
                // quantile so that tails are resolved without cancellation.
                const quad::Result lower = quad::integrate([&](double u) { return g(quantile(u)); }, 0.0, 0.5, opts);
                const quad::Result upper =
                    quad::integrate([&](double s) { return g(upper_quantile(s)); }, 0.0, 0.5, opts);
                return quad::Result{lower.value + upper.value, lower.abs_error + upper.abs_error,
                                    lower.intervals + upper.intervals, lower.converged && upper.converged};
            },
        },
        law_);
}

double Distribution::draw(Rng& rng) const {
    return std::visit(overloaded{
                          [&](const DegenerateLaw& l) { return l.point; },
                          [&](const std::shared_ptr<const EmpiricalLaw>& p) {
                              return p->sorted[rng.index(p->sorted.size())];
                          },
                          [&](const std::shared_ptr<const AffineLaw>& p) {
                              return p->scale * p->base.draw(rng) + p->shift;
                          },
                          [&](const std::shared_ptr<const MixtureLaw>& p) {
                              const double u = rng.uniform_open();
                              double acc = 0.0;
                              for (const auto& c : p->components) {
                                  acc += c.weight;
                                  if (u < acc) return c.model.draw(rng);
                              }
                              return p->components.back().model.draw(rng);
                          },
                          [&](const auto&) { return quantile(rng.uniform_open()); },
                      },
                      law_);
}

std::vector<double> Distribution::sample(std::size_t n, std::uint64_t seed, std::uint64_t stream) const {
    Rng rng(seed, stream);
    std::vector<double> out(n);
    for (double& x : out) x = draw(rng);
    return out;
}

std::string Distribution::describe() const {
    return std::visit(overloaded{
                          [](const UniformLaw& l) { return "uniform:" + format_double(l.a) + "," + format_double(l.b); },
                          [](const ExponentialLaw& l) { return "exp:" + format_double(l.rate); },
                          [](const PowerLaw& l) { return "power:" + format_double(l.exponent); },
                          [](const DegenerateLaw& l) { return "degenerate:" + format_double(l.point); },
                          [](const std::shared_ptr<const EmpiricalLaw>& p) {
                              return "empirical[n=" + std::to_string(p->sorted.size()) + "]";
                          },
                          [](const std::shared_ptr<const AffineLaw>& p) {
                              return "affine:" + format_double(p->scale) + "," + format_double(p->shift) + "," +
                                     p->base.describe();
                          },
                          [](const std::shared_ptr<const MixtureLaw>& p) {
                              std::string s = "mixture(";
                              for (std::size_t i = 0; i < p->components.size(); ++i) {
                                  if (i) s += " + ";
                                  s += format_double(p->components[i].weight) + "*" + p->components[i].model.describe();
                              }
                              return s + ")";
                          },
                      },
                      law_);
}

bool Distribution::operator==(const Distribution& other) const {
    if (law_.index() != other.law_.index()) return false;
    return std::visit(
        overloaded{
            [&](const UniformLaw& l) {
                const auto& r = std::get<UniformLaw>(other.law_);
                return l.a == r.a && l.b == r.b;
            },
            [&](const ExponentialLaw& l) { return l.rate == std::get<ExponentialLaw>(other.law_).rate; },
            [&](const PowerLaw& l) { return l.exponent == std::get<PowerLaw>(other.law_).exponent; },
            [&](const DegenerateLaw& l) { return l.point == std::get<DegenerateLaw>(other.law_).point; },
            [&](const std::shared_ptr<const EmpiricalLaw>& p) {
                return p->sorted == std::get<std::shared_ptr<const EmpiricalLaw>>(other.law_)->sorted;
            },
            [&](const std::shared_ptr<const AffineLaw>& p) {
                const auto& r = *std::get<std::shared_ptr<const AffineLaw>>(other.law_);
                return p->scale == r.scale && p->shift == r.shift && p->base == r.base;
            },
            [&](const std::shared_ptr<const MixtureLaw>& p) {
                const auto& r = *std::get<std::shared_ptr<const MixtureLaw>>(other.law_);
                if (p->components.size() != r.components.size()) return false;
                for (std::size_t i = 0; i < r.components.size(); ++i) {
                    if (p->components[i].weight != r.components[i].weight ||
                        !(p->components[i].model == r.components[i].model))
                        return false;
                }
                return true;
            },
        },
        law_);
}

}  // namespace extropy
