#include "ellint2/closed_form.hpp"

#include "ellint2/elliptic.hpp"
#include "ellint2/hypergeometric.hpp"
#include "ellint2/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ellint2 {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi2 = pi * pi;

void require_admissible(double a, double b) {
    if (!(a + b <= 1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << "E(a,b) requires |a| + |b| <= 1 (got " << a + b << ")";
        throw domain_error(msg.str());
    }
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::auto_select: return "auto";
        case Method::elliptic7: return "elliptic7";
        case Method::product5: return "product5";
        case Method::appell3: return "appell3";
        case Method::diag8: return "diag8";
        case Method::quad: return "quad";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    if (name == "auto") return Method::auto_select;
    if (name == "elliptic7") return Method::elliptic7;
    if (name == "product5") return Method::product5;
    if (name == "appell3") return Method::appell3;
    if (name == "diag8") return Method::diag8;
    if (name == "quad") return Method::quad;
    return std::nullopt;
}

Evaluation evaluate_elliptic(Amplitudes p, const ToleranceConfig& cfg) {
    validate(cfg);
    const ReducedPair uv = map_uv(p);  // enforces |a| + |b| <= 1
    if (uv.u >= 1.0 || uv.v >= 1.0)
        throw corner_error(
            "elliptic7: divergent K terms at (+-1,0)/(0,+-1); "
            "the axis form handles these points (method auto)");
    const double zu = std::sqrt(uv.u);
    const double zv = std::sqrt(uv.v);
    double res_u = 0.0;
    double res_v = 0.0;
    const EllipticValues keu = complete_KE(modulus_from_z(zu), cfg, &res_u);
    const EllipticValues kev = complete_KE(modulus_from_z(zv), cfg, &res_v);
    const double su = std::sqrt(1.0 + zu);
    const double sv = std::sqrt(1.0 + zv);
    const double bracket = 2.0 * su * sv * keu.E * kev.E +
                           keu.K * kev.K / (su * sv) -
                           (su / sv) * keu.E * kev.K -
                           (sv / su) * kev.E * keu.K;
    const double value = 4.0 * bracket;
    return {value, Method::elliptic7, std::fabs(value) * (res_u + res_v)};
}

Evaluation evaluate_product(Amplitudes p, const ToleranceConfig& cfg) {
    validate(cfg);
    const double a = std::fabs(p.a);
    const double b = std::fabs(p.b);
    require_admissible(a, b);
    if (!(a + b < 1.0))
        throw domain_error(
            "product5: requires |a| + |b| < 1; use elliptic7 or quad on the boundary");
    const ReducedPair uv = map_uv(p);
    const SeriesResult e_u = gauss_2f1(-0.25, 0.25, 1.0, uv.u, cfg);
    const SeriesResult e_v = gauss_2f1(-0.25, 0.25, 1.0, uv.v, cfg);
    const SeriesResult k_u = gauss_2f1(0.75, 1.25, 2.0, uv.u, cfg);
    const SeriesResult k_v = gauss_2f1(0.75, 1.25, 2.0, uv.v, cfg);
    double worst_tail = 0.0;
    for (const SeriesResult* s : {&e_u, &e_v, &k_u, &k_v}) {
        if (!s->converged)
            worst_tail = std::fmax(worst_tail, s->tail_estimate);
    }
    if (worst_tail > 0.0)
        throw convergence_error(
            "product5: a 2F1 factor did not converge within max_terms",
            worst_tail);
    const double quarter = uv.u * uv.v / 16.0;
    const double value =
        pi2 * (e_u.value * e_v.value + quarter * k_u.value * k_v.value);
    // product-rule propagation of the series tails
    const double err =
        pi2 * (e_u.tail_estimate * std::fabs(e_v.value) +
               e_v.tail_estimate * std::fabs(e_u.value) +
               quarter * (k_u.tail_estimate * std::fabs(k_v.value) +
                          k_v.tail_estimate * std::fabs(k_u.value)));
    return {value, Method::product5, err};
}

Evaluation evaluate_appell(Amplitudes p, const ToleranceConfig& cfg) {
    validate(cfg);
    const double a = std::fabs(p.a);
    const double b = std::fabs(p.b);
    require_admissible(a, b);
    if (!(a + b < 1.0))
        throw domain_error(
            "appell3: requires |a| + |b| < 1 (series diverges on the boundary); "
            "use elliptic7 or quad there");
    const SeriesResult f4 = appell_f4(-0.25, 0.25, a * a, b * b, cfg);
    if (!f4.converged)
        throw convergence_error(
            "appell3: F4 series did not converge within max_terms",
            f4.tail_estimate);
    return {pi2 * f4.value, Method::appell3, pi2 * f4.tail_estimate};
}

Evaluation evaluate_diagonal(double a, const ToleranceConfig& cfg) {
    validate(cfg);
    const double aa = std::fabs(a);
    if (!(aa <= 0.5))
        throw domain_error("diag8: requires |a| <= 1/2");
    const double u =
        aa == 0.0
            ? 0.0
            : 2.0 * aa * aa / (1.0 + std::sqrt((1.0 - 2.0 * aa) * (1.0 + 2.0 * aa)));
    const double zu = std::sqrt(u);
    const EllipticValues ke = complete_KE(modulus_from_z(zu), cfg);
    const double s2 = 1.0 + zu;
    const double value =
        4.0 * (2.0 * s2 * ke.E * ke.E + ke.K * ke.K / s2 - 2.0 * ke.E * ke.K);
    // Cross-route: the same value as a single 3F2 series; the gap is the
    // honest error report (large tails surface here near |a| = 1/2, where
    // the series terms decay only like n^{-5/2}).
    const SeriesResult f = series_3f2(-0.25, 0.25, 0.5, 1.0, 1.0, 4.0 * aa * aa, cfg);
    return {value, Method::diag8, std::fabs(value - pi2 * f.value)};
}

Evaluation evaluate_axis(double a, const ToleranceConfig& cfg) {
    validate(cfg);
    const double aa = std::fabs(a);
    if (!(aa <= 1.0))
        throw domain_error("axis value E(a,0) requires |a| <= 1");
    const double value =
        2.0 * pi * std::sqrt(1.0 + aa) * complete_E(modulus_from_z(aa), cfg);
    return {value, Method::elliptic7, std::fabs(value) * cfg.rel_tol};
}

Evaluation evaluate(Amplitudes p, Method method, const ToleranceConfig& cfg) {
    validate(cfg);
    const double a = std::fabs(p.a);
    const double b = std::fabs(p.b);
    require_admissible(a, b);
    const Amplitudes q{a, b};
    switch (method) {
        case Method::auto_select:
            if (b == 0.0)
                return evaluate_axis(a, cfg);
            if (a == 0.0)
                return evaluate_axis(b, cfg);
            return evaluate_elliptic(q, cfg);
        case Method::elliptic7:
            return evaluate_elliptic(q, cfg);
        case Method::product5:
            return evaluate_product(q, cfg);
        case Method::appell3:
            return evaluate_appell(q, cfg);
        case Method::diag8:
            if (a != b)
                throw domain_error(
                    "diag8: requires a == b; use elliptic7 for general points");
            return evaluate_diagonal(a, cfg);
        case Method::quad: {
            const QuadResult r = quad2d(q, cfg);
            return {r.value, Method::quad, r.error_estimate};
        }
    }
    throw std::logic_error("evaluate: unhandled method");
}

}  // namespace ellint2
