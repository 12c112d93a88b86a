#pragma once

#include "ellint2/elliptic.hpp"

namespace ellint2 {

// Cosine amplitudes of the double integral E(a,b); admissible when
// |a| + |b| <= 1.
struct Amplitudes {
    double a = 0.0;
    double b = 0.0;
};

// Quadratic reduction parameters, 0 <= u, v <= 1, satisfying
// u (1 - v) = a^2 and v (1 - u) = b^2.
struct ReducedPair {
    double u;
    double v;
};

// u = (1 + a^2 - b^2 - sqrt(D))/2, v = (1 - a^2 + b^2 - sqrt(D))/2 on
// (|a|, |b|), with the discriminant in factored form
//   D = (1-a-b)(1-a+b)(1+a-b)(1+a+b),
// evaluated through the conjugate quotients 2a^2/(1 + a^2 - b^2 + sqrt(D))
// so neither branch suffers cancellation as a or b approaches 0.
ReducedPair map_uv(Amplitudes p);

// k(z) = sqrt(2z / (1 + z)), 0 <= z <= 1; strictly increasing, k(1) = 1.
EllipticModulus modulus_from_z(double z);

}  // namespace ellint2
