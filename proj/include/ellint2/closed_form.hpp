#pragma once

#include "ellint2/config.hpp"
#include "ellint2/reduction.hpp"

#include <optional>
#include <string_view>

namespace ellint2 {

// Evaluation routes for E(a,b).  The names double as the CLI method
// strings and the `method` column of report files.
enum class Method { auto_select, elliptic7, product5, appell3, diag8, quad };

const char* method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct Evaluation {
    double value = 0.0;
    Method method = Method::auto_select;
    double error_estimate = 0.0;
};

// E(a,b) = integral_0^pi integral_0^pi sqrt(1 + a cos x + b cos y) dx dy
// as a combination of complete elliptic integrals at the reduced
// parameters (u, v) = map_uv(a, b), with k_u = k(sqrt(u)),
// S_u = sqrt(1 + sqrt(u)):
//
//   E(a,b) = 4 [ 2 S_u S_v E(k_u) E(k_v) + K(k_u) K(k_v) / (S_u S_v)
//                - (S_u/S_v) E(k_u) K(k_v) - (S_v/S_u) E(k_v) K(k_u) ].
//
// Refuses the corners (+-1, 0), (0, +-1), where the K terms diverge; use
// evaluate_axis (or method auto) there.
Evaluation evaluate_elliptic(Amplitudes p, const ToleranceConfig& cfg = {});

// E(a,b) = pi^2 [ 2F1(-1/4,1/4;1;u) 2F1(-1/4,1/4;1;v)
//                 + (uv/16) 2F1(3/4,5/4;2;u) 2F1(3/4,5/4;2;v) ],
// valid on |a| + |b| < 1.
Evaluation evaluate_product(Amplitudes p, const ToleranceConfig& cfg = {});

// E(a,b) = pi^2 F4(-1/4, 1/4; 1, 1; a^2, b^2), |a| + |b| < 1.  The F4
// arguments a^2, b^2 equal u(1-v), v(1-u) by the reduction identity.
Evaluation evaluate_appell(Amplitudes p, const ToleranceConfig& cfg = {});

// Diagonal point a = b with |a| <= 1/2.  Computes the elliptic form at
// u = (1 - sqrt(1 - 4a^2))/2, k = sqrt(2 sqrt(u)/(1 + sqrt(u))):
//   E(a,a) = 4 [ 2 (1+sqrt(u)) E^2(k) + K^2(k)/(1+sqrt(u)) - 2 E(k) K(k) ]
// and cross-evaluates pi^2 3F2(-1/4,1/4,1/2;1,1;4a^2); returns the
// elliptic value with the two-route gap as error_estimate.
Evaluation evaluate_diagonal(double a, const ToleranceConfig& cfg = {});

// Axis value E(a, 0) = 2 pi sqrt(1 + |a|) E(k(|a|)), |a| <= 1.  Finite
// through the corner |a| = 1, where E(1) = 1 gives 2 sqrt(2) pi.
Evaluation evaluate_axis(double a, const ToleranceConfig& cfg = {});

// Dispatcher.  Applies the sign reduction E(+-a, +-b) = E(|a|, |b|) first.
// auto routes axis points (including the corners) to evaluate_axis and
// everything else, boundary included, to evaluate_elliptic.
Evaluation evaluate(Amplitudes p, Method method = Method::auto_select,
                    const ToleranceConfig& cfg = {});

}  // namespace ellint2
