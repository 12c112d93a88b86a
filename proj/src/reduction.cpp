#include "ellint2/reduction.hpp"

#include <cmath>
#include <sstream>

namespace ellint2 {

ReducedPair map_uv(Amplitudes p) {
    double a = std::fabs(p.a);
    double b = std::fabs(p.b);
    if (!(a + b <= 1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << "map_uv: requires |a| + |b| <= 1 (got " << a + b << ")";
        throw domain_error(msg.str());
    }
    // Canonical argument order, so swapped amplitudes yield the exact
    // floating-point exchange of (u, v).
    const bool swapped = b > a;
    if (swapped)
        std::swap(a, b);
    double D = (1.0 - a - b) * (1.0 - a + b) * (1.0 + a - b) * (1.0 + a + b);
    if (D < 0.0)
        D = 0.0;  // roundoff on the |a|+|b| = 1 boundary
    const double root = std::sqrt(D);
    const double a2 = a * a;
    const double b2 = b * b;
    const double u = a2 == 0.0 ? 0.0 : std::fmin(2.0 * a2 / ((1.0 + a2 - b2) + root), 1.0);
    const double v = b2 == 0.0 ? 0.0 : std::fmin(2.0 * b2 / ((1.0 - a2 + b2) + root), 1.0);
    return swapped ? ReducedPair{v, u} : ReducedPair{u, v};
}

EllipticModulus modulus_from_z(double z) {
    if (!(z >= 0.0 && z <= 1.0))
        throw domain_error("modulus_from_z: requires 0 <= z <= 1");
    return EllipticModulus(std::sqrt(2.0 * z / (1.0 + z)));
}

}  // namespace ellint2
