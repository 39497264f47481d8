#include "uavnet/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace uavnet {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_subdivisions < 1)
        throw std::invalid_argument("QuadratureSpec: rel_tol > 0, abs_tol >= 0, max_subdivisions >= 1");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
    return {rel_tol / factor, abs_tol / factor, max_subdivisions};
}

IntegralResult& IntegralResult::operator+=(const IntegralResult& other) {
    value += other.value;
    error += other.error;
    converged = converged && other.converged;
    evaluations += other.evaluations;
    return *this;
}

namespace {

// (G7,K15) abscissae/weights on [-1,1]; nodes shared between the rules.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Panel {
    double lo, hi, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const Integrand& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double fc = f(mid);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        k15 += kWgk[i] * fsum;
        if (i % 2 == 1)
            g7 += kWg[i / 2] * fsum;
    }
    k15 *= half;
    g7 *= half;
    double err = 200.0 * std::fabs(k15 - g7);
    err *= std::sqrt(err);
    // never report below round-off level of the panel itself
    err = std::max(err, std::fabs(k15) * 1e-16);
    return {lo, hi, k15, err};
}

IntegralResult integrate_over_nodes(const Integrand& f, std::vector<double> nodes,
                                    const QuadratureSpec& spec) {
    spec.validate();
    IntegralResult out;
    std::priority_queue<Panel> queue;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        if (nodes[i] == nodes[i + 1])
            continue;
        Panel p = evaluate_panel(f, nodes[i], nodes[i + 1]);
        out.evaluations += 15;
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }
    std::size_t splits = 0;
    while (!queue.empty() &&
           total_err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        if (splits >= spec.max_subdivisions) {
            out.converged = false;
            break;
        }
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) { // interval at round-off floor
            out.converged = false;
            break;
        }
        Panel left = evaluate_panel(f, worst.lo, mid);
        Panel right = evaluate_panel(f, mid, worst.hi);
        out.evaluations += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++splits;
    }
    out.value = total;
    out.error = total_err;
    return out;
}

std::vector<double> make_nodes(double lo, double hi, std::span<const double> breakpoints) {
    std::vector<double> nodes;
    nodes.reserve(breakpoints.size() + 2);
    nodes.push_back(lo);
    for (double b : breakpoints)
        if (b > lo && b < hi)
            nodes.push_back(b);
    nodes.push_back(hi);
    std::sort(nodes.begin(), nodes.end());
    return nodes;
}

} // namespace

IntegralResult integrate_finite(const Integrand& f, double lo, double hi,
                                const QuadratureSpec& spec) {
    return integrate_finite(f, lo, hi, {}, spec);
}

IntegralResult integrate_finite(const Integrand& f, double lo, double hi,
                                std::span<const double> breakpoints,
                                const QuadratureSpec& spec) {
    if (!(lo <= hi))
        throw std::invalid_argument("integrate_finite: lo must not exceed hi");
    if (lo == hi)
        return {};
    return integrate_over_nodes(f, make_nodes(lo, hi, breakpoints), spec);
}

IntegralResult integrate_semi_infinite(const Integrand& f, double lo,
                                       const QuadratureSpec& spec) {
    return integrate_semi_infinite(f, lo, {}, spec);
}

IntegralResult integrate_semi_infinite(const Integrand& f, double lo,
                                       std::span<const double> breakpoints,
                                       const QuadratureSpec& spec) {
    // u = lo + t/(1-t), du = dt/(1-t)^2, t in [0,1)
    auto g = [&f, lo](double t) {
        const double om = 1.0 - t;
        if (om <= 1e-300)
            return 0.0;
        const double fu = f(lo + t / om);
        if (fu == 0.0)
            return 0.0;
        return fu / (om * om);
    };
    std::vector<double> tb;
    tb.reserve(breakpoints.size());
    for (double b : breakpoints)
        if (b > lo)
            tb.push_back((b - lo) / (1.0 + b - lo));
    return integrate_finite(g, 0.0, 1.0, tb, spec);
}

IntegralResult gauss_kronrod_panel(const Integrand& f, double lo, double hi) {
    Panel p = evaluate_panel(f, lo, hi);
    return {p.value, p.error, true, 15};
}

} // namespace uavnet
