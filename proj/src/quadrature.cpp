#include "extropy/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace extropy::quad {
namespace {

constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// QUADPACK qk15 error heuristic.
Panel gk15(const Integrand& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::fabs(hlgth);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::fabs(resk);
    for (int j = 0; j < 3; ++j) {
        const int jtw = 2 * j + 1;
        const double absc = hlgth * kXgk[jtw];
        const double f1 = f(centr - absc), f2 = f(centr + absc);
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[jtw] * (f1 + f2);
        resabs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        const int jtwm1 = 2 * j;
        const double absc = hlgth * kXgk[jtwm1];
        const double f1 = f(centr - absc), f2 = f(centr + absc);
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        resk += kWgk[jtwm1] * (f1 + f2);
        resabs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    const double result = resk * hlgth;
    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0) abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) abserr = std::max(eps * 50.0 * resabs, abserr);
    return {a, b, result, abserr};
}

}  // namespace

Result integrate(const Integrand& f, std::span<const double> points, const Options& opts) {
    Result out;
    if (points.size() < 2) return out;

    std::priority_queue<Panel> queue;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(points[i + 1] > points[i])) continue;
        Panel p = gk15(f, points[i], points[i + 1]);
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }
    int count = static_cast<int>(queue.size());
    std::vector<Panel> frozen;  // panels too narrow to split further

    auto tolerance = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::fabs(total)); };
    while (!queue.empty() && total_err > tolerance() && count < opts.max_intervals) {
        if (!std::isfinite(total)) break;
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b) ||
            (worst.b - worst.a) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(worst.a), std::fabs(worst.b))) {
            frozen.push_back(worst);
            continue;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++count;
    }

    // Re-sum from the panels to shed accumulated cancellation in the running totals.
    double sum = 0.0, err = 0.0;
    while (!queue.empty()) {
        sum += queue.top().value;
        err += queue.top().error;
        queue.pop();
    }
    for (const Panel& p : frozen) {
        sum += p.value;
        err += p.error;
    }
    out.value = sum;
    out.abs_error = err;
    out.intervals = count;
    out.converged = std::isfinite(sum) && err <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(sum));
    return out;
}

Result integrate(const Integrand& f, double a, double b, const Options& opts) {
    const double pts[2] = {a, b};
    return integrate(f, std::span<const double>(pts, 2), opts);
}

Result integrate_to_infinity(const Integrand& f, double a, const Options& opts) {
    auto mapped = [&](double t) {
        const double s = 1.0 - t;
        const double x = a + t / s;
        const double v = f(x);
        return v == 0.0 ? 0.0 : v / (s * s);
    };
    return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace extropy::quad
