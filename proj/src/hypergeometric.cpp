#include "ellint2/hypergeometric.hpp"

#include "ellint2/elliptic.hpp"
#include "ellint2/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace ellint2 {

namespace {

constexpr double pi = std::numbers::pi;

bool nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

// Shared accumulation loop: `ratio(n)` maps term n to term n+1.  Stops on
// three consecutive terms below max(rel_tol*|partial|, abs_tol), or
// immediately on an exactly terminating series.
template <class Ratio>
SeriesResult sum_series(Ratio ratio, const ToleranceConfig& cfg) {
    SeriesResult out;
    double term = 1.0;
    double sum = 1.0;
    long used = 1;
    int small_run = 0;
    double tail = 1.0;
    bool converged = false;
    for (long n = 0; used < cfg.max_terms; ++n) {
        term *= ratio(n);
        if (term == 0.0) {
            tail = 0.0;
            converged = true;
            break;
        }
        sum += term;
        ++used;
        tail = std::fabs(term);
        if (tail <= std::max(cfg.rel_tol * std::fabs(sum), cfg.abs_tol)) {
            if (++small_run == 3) {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    out.value = sum;
    out.terms_used = used;
    out.converged = converged;
    out.tail_estimate = tail;
    return out;
}

}  // namespace

SeriesResult gauss_2f1(double alpha, double beta, double gamma, double z,
                       const ToleranceConfig& cfg) {
    validate(cfg);
    if (nonpositive_integer(gamma))
        throw domain_error("gauss_2f1: gamma must not be zero or a negative integer");
    if (std::fabs(z) > 1.0)
        throw domain_error("gauss_2f1: requires |z| < 1 (or z = 1 with gamma - alpha - beta > 0)");
    if (std::fabs(z) == 1.0 && !(z == 1.0 && gamma - alpha - beta > 0.0))
        throw domain_error("gauss_2f1: series diverges at |z| = 1 unless z = 1 with gamma - alpha - beta > 0");
    return sum_series(
        [=](long n) {
            return (alpha + n) * (beta + n) * z / ((gamma + n) * (n + 1.0));
        },
        cfg);
}

SeriesResult series_3f2(double a1, double a2, double a3, double b1, double b2,
                        double z, const ToleranceConfig& cfg) {
    validate(cfg);
    if (nonpositive_integer(b1) || nonpositive_integer(b2))
        throw domain_error("series_3f2: lower parameters must not be zero or negative integers");
    if (std::fabs(z) > 1.0)
        throw domain_error("series_3f2: requires |z| <= 1");
    return sum_series(
        [=](long n) {
            return (a1 + n) * (a2 + n) * (a3 + n) * z /
                   ((b1 + n) * (b2 + n) * (n + 1.0));
        },
        cfg);
}

SeriesResult appell_f4(double alpha, double beta, double x, double y,
                       const ToleranceConfig& cfg) {
    validate(cfg);
    if (!(x >= 0.0) || !(y >= 0.0) || !(std::sqrt(x) + std::sqrt(y) < 1.0))
        throw domain_error("appell_f4: requires x >= 0, y >= 0, sqrt(x) + sqrt(y) < 1");
    // Fixed summation order regardless of argument order, so swapped
    // arguments give identical floating-point results.
    if (y > x)
        std::swap(x, y);

    // diag[m] holds T(m, s - m); each pass advances one anti-diagonal via
    // the exact term ratios T(m, n+1)/T(m, n) = (alpha+s)(beta+s) y/(n+1)^2
    // and T(s+1, 0)/T(s, 0) = (alpha+s)(beta+s) x/(s+1)^2.  Entries that
    // underflow to zero stay zero; they are negligible against the block.
    std::vector<double> diag{1.0};
    std::vector<double> next;
    SeriesResult out;
    double total = 1.0;
    long blocks = 1;
    int small_run = 0;
    bool converged = false;
    double tail = 1.0;
    for (long s = 0; blocks < cfg.max_terms; ++s) {
        const double f = (alpha + s) * (beta + s);
        next.assign(static_cast<std::size_t>(s) + 2, 0.0);
        for (long m = 0; m <= s; ++m) {
            const double n1 = static_cast<double>(s + 1 - m);
            next[m] = diag[m] * f * y / (n1 * n1);
        }
        const double s1 = static_cast<double>(s + 1);
        next[s + 1] = diag[s] * f * x / (s1 * s1);
        diag.swap(next);

        double block = 0.0;
        for (double t : diag)
            block += t;
        total += block;
        ++blocks;
        tail = std::fabs(block);
        if (block == 0.0) {
            converged = true;
            break;
        }
        if (tail <= std::max(cfg.rel_tol * std::fabs(total), cfg.abs_tol)) {
            if (++small_run == 3) {
                converged = true;
                break;
            }
        } else {
            small_run = 0;
        }
    }
    out.value = total;
    out.terms_used = blocks;
    out.converged = converged;
    out.tail_estimate = tail;
    return out;
}

IdentityPair identity_2f1_e(double z, const ToleranceConfig& cfg) {
    if (!(z >= 0.0 && z < 1.0))
        throw domain_error("identity_2f1_e: requires 0 <= z < 1");
    const double lhs = gauss_2f1(-0.25, 0.25, 1.0, z * z, cfg).value;
    const double rhs =
        2.0 / pi * std::sqrt(1.0 + z) * complete_E(modulus_from_z(z), cfg);
    return {lhs, rhs};
}

IdentityPair identity_2f1_ke(double z, const ToleranceConfig& cfg) {
    if (!(z > 0.0 && z < 1.0))
        throw domain_error("identity_2f1_ke: requires 0 < z < 1");
    const double lhs = gauss_2f1(0.75, 1.25, 2.0, z * z, cfg).value;
    const EllipticValues ke = complete_KE(modulus_from_z(z), cfg);
    const double rhs =
        8.0 / (pi * z * z * std::sqrt(1.0 + z)) * (ke.K - (1.0 + z) * ke.E);
    return {lhs, rhs};
}

}  // namespace ellint2
