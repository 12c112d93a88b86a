#pragma once

#include "ellint2/config.hpp"

namespace ellint2 {

// A truncated series value with convergence metadata.  converged means the
// stop rule (three consecutive terms each below max(rel_tol*|partial|,
// abs_tol)) was met within max_terms; otherwise the partial sum is still
// returned and tail_estimate holds the magnitude of the last term taken.
struct SeriesResult {
    double value = 0.0;
    long terms_used = 0;
    bool converged = false;
    double tail_estimate = 0.0;
};

// Gauss series sum_n (alpha)_n (beta)_n / ((gamma)_n n!) z^n, accumulated
// with the term ratio (alpha+n)(beta+n) z / ((gamma+n)(n+1)).
// Requires |z| < 1, or z = 1 with gamma - alpha - beta > 0.
SeriesResult gauss_2f1(double alpha, double beta, double gamma, double z,
                       const ToleranceConfig& cfg = {});

// sum_n (a1)_n (a2)_n (a3)_n / ((b1)_n (b2)_n n!) z^n, |z| <= 1.  At z = 1
// the stop rule reports honest non-convergence when the terms decay too
// slowly for the configured cap.
SeriesResult series_3f2(double a1, double a2, double a3, double b1, double b2,
                        double z, const ToleranceConfig& cfg = {});

// Appell double series
//   sum_{m,n} (alpha)_{m+n} (beta)_{m+n} / ((1)_m (1)_n m! n!) x^m y^n,
// summed by anti-diagonals s = m + n; terms_used counts anti-diagonal
// blocks.  Requires x, y >= 0 and sqrt(x) + sqrt(y) < 1.
SeriesResult appell_f4(double alpha, double beta, double x, double y,
                       const ToleranceConfig& cfg = {});

// Dual evaluations of the two classical 2F1 <-> elliptic reductions with
// k = k(z) = sqrt(2z/(1+z)); the caller asserts lhs ~ rhs.  These pin the
// modulus convention used throughout.
struct IdentityPair {
    double lhs;
    double rhs;
};

// 2F1(-1/4, 1/4; 1; z^2)  vs  (2/pi) sqrt(1+z) E(k),  0 <= z < 1.
IdentityPair identity_2f1_e(double z, const ToleranceConfig& cfg = {});

// 2F1(3/4, 5/4; 2; z^2)  vs  8/(pi z^2 sqrt(1+z)) [K(k) - (1+z) E(k)],
// 0 < z < 1 (the right side carries a removable 1/z^2).
IdentityPair identity_2f1_ke(double z, const ToleranceConfig& cfg = {});

}  // namespace ellint2
