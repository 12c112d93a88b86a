#pragma once

#include "ellint2/config.hpp"
#include "ellint2/reduction.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace ellint2 {

// Nodes and weights on [-1, 1], generated by Newton iteration on the
// Legendre three-term recurrence and cached per node count.  First use is
// thread-safe and idempotent.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendreRule& gauss_legendre(int n);

// Fixed-order rule mapped to [lo, hi]; exact for polynomials of degree
// <= 2n - 1.
template <class F>
double integrate(F&& f, double lo, double hi, int n) {
    const GaussLegendreRule& rule = gauss_legendre(n);
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;  // |difference of the last two levels|
    int levels_used = 0;
    long nodes_total = 0;         // integrand evaluations across all levels
};

// Node-doubling Gauss-Legendre on [lo, hi]: quad_base_nodes at level 1,
// doubling until two successive levels agree to max(rel_tol*|value|,
// abs_tol) or quad_max_levels is exhausted (then error_estimate stays
// above tolerance).
QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi,
                              const ToleranceConfig& cfg = {});

// integral_0^pi sqrt(1 + a cos x) dx, |a| <= 1.
QuadResult quad1d(double a, const ToleranceConfig& cfg = {});

// integral_0^pi integral_0^pi sqrt(1 + a cos x + b cos y) dx dy,
// |a| + |b| <= 1.  Signs reduce to (|a|, |b|).  For |a| + |b| > 0.9 the
// cell holding the integrand zero at (pi, pi) is dyadically subdivided
// three times before the node-doubling loop.
QuadResult quad2d(Amplitudes p, const ToleranceConfig& cfg = {});

// Recommended rel_tol when quad2d serves as the reference value:
// 1e-11 in the interior, 1e-8 within 0.05 of the |a| + |b| = 1 boundary.
double oracle_rel_tol(Amplitudes p);

}  // namespace ellint2
