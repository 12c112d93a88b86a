#include "doctest.h"

#include "ellint2/closed_form.hpp"
#include "ellint2/hypergeometric.hpp"
#include "ellint2/quadrature.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace ellint2;
using testutil::rel_dev;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi2 = pi * pi;

double quad_reference(double a, double b) {
    ToleranceConfig cfg;
    cfg.rel_tol = oracle_rel_tol({a, b});
    return quad2d({a, b}, cfg).value;
}

}  // namespace

TEST_CASE("evaluate_elliptic: anchors") {
    const Evaluation origin = evaluate_elliptic({0.0, 0.0});
    CHECK(rel_dev(origin.value, pi2) < 1e-14);
    CHECK(origin.method == Method::elliptic7);
    CHECK(origin.error_estimate >= 0.0);

    // on the axis the combination collapses to 2 pi sqrt(1+a) E(k(a))
    const Evaluation axis_form = evaluate_axis(0.5);
    const Evaluation on_axis = evaluate_elliptic({0.5, 0.0});
    CHECK(rel_dev(on_axis.value, axis_form.value) < 1e-12);
    CHECK(rel_dev(on_axis.value, 9.7052029538694469815) < 1e-12);
}

TEST_CASE("evaluate_elliptic: against the quadrature oracle") {
    CHECK(rel_dev(evaluate_elliptic({0.3, 0.4}).value, quad_reference(0.3, 0.4)) < 1e-9);
    CHECK(rel_dev(evaluate_elliptic({0.3, 0.4}).value, 9.6990408375829146133) < 1e-12);
    // boundary point with vanishing discriminant
    CHECK(rel_dev(evaluate_elliptic({0.5, 0.5}).value, quad_reference(0.5, 0.5)) < 1e-8);
    CHECK(rel_dev(evaluate_elliptic({0.5, 0.5}).value, 9.4559830850861169509) < 1e-12);
}

TEST_CASE("evaluate_elliptic: corner refusal and domain gate") {
    CHECK_THROWS_AS(evaluate_elliptic({1.0, 0.0}), corner_error);
    CHECK_THROWS_AS(evaluate_elliptic({0.0, -1.0}), corner_error);
    CHECK_THROWS_AS(evaluate_elliptic({0.8, 0.4}), domain_error);
    CHECK_NOTHROW(evaluate_elliptic({0.99, 0.0}));
}

TEST_CASE("evaluate_product: anchors and agreement") {
    CHECK(rel_dev(evaluate_product({0.0, 0.0}).value, pi2) < 1e-14);
    CHECK(rel_dev(evaluate_product({0.3, 0.4}).value,
                  evaluate_elliptic({0.3, 0.4}).value) < 1e-10);
    CHECK(rel_dev(evaluate_product({0.45, 0.45}).value,
                  evaluate_elliptic({0.45, 0.45}).value) < 1e-9);
    CHECK_THROWS_AS(evaluate_product({0.6, 0.4}), domain_error);
}

TEST_CASE("evaluate_appell: anchors and agreement") {
    CHECK(rel_dev(evaluate_appell({0.0, 0.0}).value, pi2) < 1e-14);
    // collapse at b = 0
    const double expect = pi2 * gauss_2f1(-0.25, 0.25, 1.0, 0.16).value;
    CHECK(rel_dev(evaluate_appell({0.4, 0.0}).value, expect) < 1e-13);
    CHECK(rel_dev(evaluate_appell({0.3, 0.4}).value,
                  evaluate_elliptic({0.3, 0.4}).value) < 1e-8);
    CHECK_THROWS_AS(evaluate_appell({0.6, 0.4}), domain_error);
}

TEST_CASE("evaluate_diagonal: anchors, consistency, boundary") {
    const Evaluation origin = evaluate_diagonal(0.0);
    CHECK(rel_dev(origin.value, pi2) < 1e-14);

    CHECK(rel_dev(evaluate_diagonal(0.3).value,
                  evaluate_elliptic({0.3, 0.3}).value) < 1e-10);

    // boundary |a| = 1/2: elliptic side still exact, series side slow
    const Evaluation half = evaluate_diagonal(0.5);
    CHECK(rel_dev(half.value, quad_reference(0.5, 0.5)) < 1e-7);
    CHECK(rel_dev(half.value, 9.4559830850861169509) < 1e-12);
    CHECK(half.error_estimate > 0.0);  // truncation gap of the 3F2 route

    CHECK_THROWS_AS(evaluate_diagonal(0.51), domain_error);
}

TEST_CASE("evaluate_diagonal: route gap is honest in the interior") {
    for (double a : {0.0, 0.1, 0.2, 0.3, 0.4, 0.45}) {
        const Evaluation e = evaluate_diagonal(a);
        CHECK(e.error_estimate < 1e-10);
    }
}

TEST_CASE("evaluate_axis: anchors") {
    CHECK(rel_dev(evaluate_axis(0.0).value, pi2) < 1e-14);
    CHECK(rel_dev(evaluate_axis(1.0).value, 2.0 * std::sqrt(2.0) * pi) < 1e-13);

    ToleranceConfig cfg;
    cfg.rel_tol = 1e-13;
    const double oracle = pi * quad1d(0.5, cfg).value;
    CHECK(rel_dev(evaluate_axis(0.5).value, oracle) < 1e-11);

    CHECK_THROWS_AS(evaluate_axis(1.01), domain_error);
}

TEST_CASE("dispatcher: sign symmetry is exact") {
    const Evaluation plus = evaluate({0.3, 0.4});
    for (Amplitudes p : {Amplitudes{-0.3, 0.4}, Amplitudes{0.3, -0.4},
                         Amplitudes{-0.3, -0.4}}) {
        const Evaluation e = evaluate(p);
        CHECK(e.value == plus.value);
        CHECK(e.method == plus.method);
    }
}

TEST_CASE("dispatcher: routing") {
    // corners and axis points go through the axis form
    CHECK(rel_dev(evaluate({1.0, 0.0}).value, 2.0 * std::sqrt(2.0) * pi) < 1e-13);
    CHECK(evaluate({0.0, 0.7}).value == evaluate_axis(0.7).value);
    CHECK(evaluate({0.7, 0.0}).value == evaluate_axis(0.7).value);

    // boundary stays on the elliptic route
    CHECK(evaluate({0.6, 0.4}).method == Method::elliptic7);

    // requested methods pass through
    CHECK(evaluate({0.3, 0.3}, Method::diag8).value == evaluate_diagonal(0.3).value);
    CHECK(evaluate({0.3, 0.4}, Method::quad).method == Method::quad);
    CHECK_THROWS_AS(evaluate({0.6, 0.4}, Method::appell3), domain_error);
    CHECK_THROWS_AS(evaluate({0.3, 0.4}, Method::diag8), domain_error);
    CHECK_THROWS_AS(evaluate({1.0, 0.0}, Method::elliptic7), corner_error);
    CHECK_THROWS_AS(evaluate({0.8, 0.4}), domain_error);
}

TEST_CASE("method names round-trip") {
    for (Method m : {Method::auto_select, Method::elliptic7, Method::product5,
                     Method::appell3, Method::diag8, Method::quad}) {
        const auto parsed = parse_method(method_name(m));
        REQUIRE(parsed.has_value());
        CHECK(*parsed == m);
    }
    CHECK(!parse_method("nonsense").has_value());
}

TEST_CASE("four-way agreement across the interior grid") {
    const std::vector<double> axis = {0.0, 0.05, 0.1, 0.2, 0.3, 0.4};
    double worst = 0.0;
    for (double a : axis) {
        for (double b : axis) {
            if (a + b > 0.8)
                continue;
            const double reference = quad_reference(a, b);
            for (const Evaluation& e :
                 {evaluate_elliptic({a, b}), evaluate_product({a, b}),
                  evaluate_appell({a, b})}) {
                worst = std::fmax(worst, rel_dev(e.value, reference));
            }
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("swap symmetry of the elliptic route") {
    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        const auto [a, b] = testutil::random_amplitudes(rng);
        const double ab = evaluate_elliptic({a, b}).value;
        const double ba = evaluate_elliptic({b, a}).value;
        CHECK(rel_dev(ab, ba) < 1e-13);
    }
}

TEST_CASE("diagonal and axis consistency sweeps") {
    for (int i = 0; i <= 49; ++i) {
        const double a = i / 100.0;
        CHECK(rel_dev(evaluate_diagonal(a).value,
                      evaluate_elliptic({a, a}).value) < 1e-10);
    }
    for (int i = 0; i <= 99; ++i) {
        const double a = i / 100.0;
        CHECK(rel_dev(evaluate_elliptic({a, 0.0}).value,
                      evaluate_axis(a).value) < 1e-11);
    }
}

TEST_CASE("evaluations stay inside the integrand bounds") {
    std::mt19937 rng(31415);
    for (int i = 0; i < 200; ++i) {
        const auto [a, b] = testutil::random_amplitudes(rng);
        const Evaluation e = evaluate({a, b});
        CHECK(e.value > 0.0);
        CHECK(e.value <= pi2 * std::sqrt(2.0) * (1.0 + 1e-15));
        CHECK(e.error_estimate >= 0.0);
    }
}
