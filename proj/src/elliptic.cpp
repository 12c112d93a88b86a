#include "ellint2/elliptic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ellint2 {

namespace {

constexpr double pi = std::numbers::pi;

struct AgmRun {
    double limit;
    double residual;  // |a_n - b_n| / a_n at the stop
    double c_sum;     // sum_{n>=0} 2^{n-1} c_n^2 with c_0 supplied
};

// One AGM iteration serves both integrals: the limit gives K, the
// companion sum gives E.  c0 = 0 when only the limit is wanted.
AgmRun agm_run(double a0, double b0, double c0, const ToleranceConfig& cfg) {
    double an = a0;
    double bn = b0;
    double c_sum = 0.5 * c0 * c0;
    double pow2 = 1.0;  // 2^n while forming c_{n+1}
    for (int n = 0; n < cfg.max_iters; ++n) {
        const double gap = std::fabs(an - bn);
        if (gap <= cfg.rel_tol * an)
            return {an, gap / an, c_sum};
        const double c = 0.5 * (an - bn);
        c_sum += pow2 * c * c;
        pow2 *= 2.0;
        const double mid = 0.5 * (an + bn);
        bn = std::sqrt(an * bn);
        an = mid;
    }
    const double gap = std::fabs(an - bn);
    std::ostringstream msg;
    msg << "agm: no convergence within " << cfg.max_iters
        << " iterations (last gap " << gap << ")";
    throw convergence_error(msg.str(), gap);
}

}  // namespace

EllipticModulus::EllipticModulus(double k_) : k(k_) {
    if (!(k >= 0.0 && k <= 1.0))
        throw domain_error("elliptic modulus requires 0 <= k <= 1");
}

double agm(double a0, double b0, const ToleranceConfig& cfg) {
    validate(cfg);
    if (!(a0 > 0.0) || !(b0 > 0.0))
        throw domain_error("agm: arguments must be positive");
    return agm_run(a0, b0, 0.0, cfg).limit;
}

double complete_K(EllipticModulus m, const ToleranceConfig& cfg) {
    validate(cfg);
    if (m.k == 1.0)
        throw domain_error("complete_K: divergent at k = 1");
    const double kc = std::sqrt((1.0 - m.k) * (1.0 + m.k));
    return pi / (2.0 * agm_run(1.0, kc, 0.0, cfg).limit);
}

double complete_E(EllipticModulus m, const ToleranceConfig& cfg) {
    validate(cfg);
    if (m.k == 1.0)
        return 1.0;
    const double kc = std::sqrt((1.0 - m.k) * (1.0 + m.k));
    const AgmRun run = agm_run(1.0, kc, m.k, cfg);
    const double K = pi / (2.0 * run.limit);
    return K * (1.0 - run.c_sum);
}

EllipticValues complete_KE(EllipticModulus m, const ToleranceConfig& cfg,
                           double* residual) {
    validate(cfg);
    if (m.k == 1.0)
        throw domain_error("complete_KE: K diverges at k = 1");
    const double kc = std::sqrt((1.0 - m.k) * (1.0 + m.k));
    const AgmRun run = agm_run(1.0, kc, m.k, cfg);
    const double K = pi / (2.0 * run.limit);
    if (residual)
        *residual = run.residual;
    return {K, K * (1.0 - run.c_sum)};
}

}  // namespace ellint2
