#pragma once

#include "ellint2/config.hpp"

namespace ellint2 {

// Modulus k of the complete elliptic integrals, 0 <= k <= 1 (the argument
// convention K(k), not the parameter m = k^2).  k = 1 is representable,
// E(1) = 1, but K(1) diverges.
struct EllipticModulus {
    double k;
    explicit EllipticModulus(double k_);
};

struct EllipticValues {
    double K;  // first kind
    double E;  // second kind
};

// Common limit of a_{n+1} = (a_n + b_n)/2, b_{n+1} = sqrt(a_n b_n),
// declared converged when |a_n - b_n| <= rel_tol * a_n.
double agm(double a0, double b0, const ToleranceConfig& cfg = {});

// K(k) = integral_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t) = pi / (2 agm(1, k')),
// k' = sqrt(1 - k^2).  Throws at k = 1 (logarithmic divergence).
double complete_K(EllipticModulus m, const ToleranceConfig& cfg = {});

// E(k) = integral_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt via the AGM companion
// sum E = K (1 - sum_{n>=0} 2^{n-1} c_n^2), c_0 = k, c_{n+1} = (a_n - b_n)/2.
// Returns exactly 1 at k = 1.
double complete_E(EllipticModulus m, const ToleranceConfig& cfg = {});

// Both integrals from a single AGM run.  If residual is non-null it
// receives the relative gap at the stop, a coarse bound on either value's
// relative error.
EllipticValues complete_KE(EllipticModulus m, const ToleranceConfig& cfg = {},
                           double* residual = nullptr);

}  // namespace ellint2
