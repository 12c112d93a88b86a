#include "doctest.h"

#include "ellint2/elliptic.hpp"
#include "ellint2/hypergeometric.hpp"
#include "ellint2/quadrature.hpp"
#include "ellint2/reduction.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace ellint2;
using testutil::rel_dev;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("gauss_2f1: trivial argument") {
    const SeriesResult r = gauss_2f1(-0.25, 0.25, 1.0, 0.0);
    CHECK(r.value == 1.0);
    CHECK(r.converged);
    CHECK(r.tail_estimate == 0.0);
}

TEST_CASE("gauss_2f1: value at z = 1 against the Gamma quotient") {
    // Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)) for (-1/4, 1/4; 1)
    const double reference = std::exp(std::lgamma(1.0) + std::lgamma(1.0) -
                                      std::lgamma(1.25) - std::lgamma(0.75));
    CHECK(rel_dev(reference, 2.0 * std::sqrt(2.0) / pi) < 1e-14);

    // Terms only decay like n^-2 here, so the cap is raised and the honest
    // outcome is a truncated value with a few correct digits.
    ToleranceConfig cfg;
    cfg.max_terms = 200000;
    const SeriesResult r = gauss_2f1(-0.25, 0.25, 1.0, 1.0, cfg);
    CHECK(std::fabs(r.value - reference) < 1e-6);
    CHECK(!r.converged);
    CHECK(r.terms_used == cfg.max_terms);
    CHECK(r.tail_estimate > 0.0);

    // same constant through the elliptic side: (2/pi) sqrt(2) E(1)
    const double rhs = 2.0 / pi * std::sqrt(2.0) * complete_E(EllipticModulus(1.0));
    CHECK(std::fabs(r.value - rhs) < 1e-6);
}

TEST_CASE("gauss_2f1: elliptic reduction as oracle across z") {
    for (double z : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const double lhs = gauss_2f1(-0.25, 0.25, 1.0, z * z).value;
        const double rhs =
            2.0 / pi * std::sqrt(1.0 + z) * complete_E(modulus_from_z(z));
        CHECK(rel_dev(lhs, rhs) < 1e-12);
    }
    const IdentityPair stressed = identity_2f1_e(0.99);
    CHECK(rel_dev(stressed.lhs, stressed.rhs) < 1e-10);
}

TEST_CASE("gauss_2f1: domain gates") {
    CHECK_THROWS_AS(gauss_2f1(-0.25, 0.25, 0.0, 0.5), domain_error);
    CHECK_THROWS_AS(gauss_2f1(-0.25, 0.25, -3.0, 0.5), domain_error);
    CHECK_THROWS_AS(gauss_2f1(-0.25, 0.25, 1.0, 1.25), domain_error);
    CHECK_THROWS_AS(gauss_2f1(-0.25, 0.25, 1.0, -1.0), domain_error);
    // z = 1 needs c - a - b > 0
    CHECK_THROWS_AS(gauss_2f1(1.0, 1.0, 1.0, 1.0), domain_error);
    CHECK_NOTHROW(gauss_2f1(-0.25, 0.25, 1.5, 0.5));
}

TEST_CASE("gauss_2f1: honest truncation report") {
    ToleranceConfig tiny;
    tiny.max_terms = 10;
    const SeriesResult r = gauss_2f1(0.5, 0.5, 1.5, 0.99, tiny);
    CHECK(!r.converged);
    CHECK(r.terms_used == 10);
    CHECK(r.tail_estimate > 0.0);
    CHECK(r.value > 0.0);
}

TEST_CASE("gauss_2f1: no spurious termination for quarter parameters") {
    const SeriesResult r = gauss_2f1(-0.25, 0.25, 1.0, 0.5);
    CHECK(r.converged);
    CHECK(r.terms_used > 5);
    CHECK(r.tail_estimate <= 1e-15 * std::fabs(r.value));
}

TEST_CASE("series_3f2: trivial argument and quarter-integral oracle") {
    CHECK(series_3f2(-0.25, 0.25, 0.5, 1.0, 1.0, 0.0).value == 1.0);

    // (pi^2/4) 3F2(...; 4a^2) equals a quarter of the double integral on
    // the diagonal.
    const double a = 0.3;
    ToleranceConfig quad_cfg;
    quad_cfg.rel_tol = 1e-11;
    const double quarter = 0.25 * quad2d({a, a}, quad_cfg).value;
    const SeriesResult f = series_3f2(-0.25, 0.25, 0.5, 1.0, 1.0, 4.0 * a * a);
    CHECK(f.converged);
    CHECK(rel_dev(pi * pi / 4.0 * f.value, quarter) < 1e-10);
}

TEST_CASE("series_3f2: convergent boundary z = 1") {
    ToleranceConfig cfg;
    cfg.max_terms = 5000000;  // n^{-5/2} decay needs a deep cap
    const SeriesResult f = series_3f2(-0.25, 0.25, 0.5, 1.0, 1.0, 1.0, cfg);
    CHECK(f.converged);
    CHECK(rel_dev(f.value, 0.95809139868285012803) < 1e-9);

    ToleranceConfig quad_cfg;
    quad_cfg.rel_tol = 1e-8;
    const double reference = quad2d({0.5, 0.5}, quad_cfg).value / (pi * pi);
    CHECK(rel_dev(f.value, reference) < 1e-7);
}

TEST_CASE("series_3f2: domain gates") {
    CHECK_THROWS_AS(series_3f2(-0.25, 0.25, 0.5, 0.0, 1.0, 0.5), domain_error);
    CHECK_THROWS_AS(series_3f2(-0.25, 0.25, 0.5, 1.0, -1.0, 0.5), domain_error);
    CHECK_THROWS_AS(series_3f2(-0.25, 0.25, 0.5, 1.0, 1.0, 1.5), domain_error);
}

TEST_CASE("appell_f4: trivial and collapsed arguments") {
    const SeriesResult origin = appell_f4(-0.25, 0.25, 0.0, 0.0);
    CHECK(origin.value == 1.0);
    CHECK(origin.converged);

    // y = 0 collapses to 2F1 termwise
    const double a = 0.4;
    const double collapsed = appell_f4(-0.25, 0.25, a * a, 0.0).value;
    const double f21 = gauss_2f1(-0.25, 0.25, 1.0, a * a).value;
    CHECK(rel_dev(collapsed, f21) < 1e-13);
}

TEST_CASE("appell_f4: termwise collapse across the x range") {
    for (double x : {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const double f4 = appell_f4(-0.25, 0.25, x, 0.0).value;
        const double f21 = gauss_2f1(-0.25, 0.25, 1.0, x).value;
        if (x == 0.0)
            CHECK(f4 == f21);
        else
            CHECK(rel_dev(f4, f21) < 1e-13);
    }
}

TEST_CASE("appell_f4: double integral as oracle") {
    ToleranceConfig quad_cfg;
    quad_cfg.rel_tol = 1e-11;
    const double reference = quad2d({0.3, 0.4}, quad_cfg).value;
    const SeriesResult f = appell_f4(-0.25, 0.25, 0.09, 0.16);
    CHECK(f.converged);
    CHECK(rel_dev(pi * pi * f.value, reference) < 1e-9);
    CHECK(rel_dev(pi * pi * f.value, 9.6990408375829146133) < 1e-11);
}

TEST_CASE("appell_f4: argument swap is exact") {
    std::mt19937 rng(1337);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double sx = unit(rng) * 0.95;
        const double sy = unit(rng) * (0.95 - sx);
        const double x = sx * sx;
        const double y = sy * sy;
        const SeriesResult xy = appell_f4(-0.25, 0.25, x, y);
        const SeriesResult yx = appell_f4(-0.25, 0.25, y, x);
        CHECK(xy.value == yx.value);  // canonical summation order
        CHECK(xy.terms_used == yx.terms_used);
    }
}

TEST_CASE("appell_f4: domain and truncation reporting") {
    CHECK_THROWS_AS(appell_f4(-0.25, 0.25, 0.36, 0.16), domain_error);
    CHECK_THROWS_AS(appell_f4(-0.25, 0.25, -0.1, 0.1), domain_error);
    CHECK_THROWS_AS(appell_f4(-0.25, 0.25, 1.1, 0.0), domain_error);

    ToleranceConfig tiny;
    tiny.max_terms = 5;
    const SeriesResult r = appell_f4(-0.25, 0.25, 0.2, 0.2, tiny);
    CHECK(!r.converged);
    CHECK(r.terms_used == 5);
    CHECK(r.tail_estimate > 0.0);
}

TEST_CASE("identity pair: 2F1(-1/4,1/4;1;z^2) vs (2/pi) sqrt(1+z) E(k)") {
    const IdentityPair at_zero = identity_2f1_e(0.0);
    CHECK(at_zero.lhs == 1.0);
    CHECK(at_zero.rhs == doctest::Approx(1.0).epsilon(1e-15));

    const IdentityPair mid = identity_2f1_e(0.5);
    CHECK(rel_dev(mid.lhs, mid.rhs) < 1e-12);

    const IdentityPair stress = identity_2f1_e(0.99);
    CHECK(rel_dev(stress.lhs, stress.rhs) < 1e-10);

    CHECK_THROWS_AS(identity_2f1_e(1.0), domain_error);
    CHECK_THROWS_AS(identity_2f1_e(-0.1), domain_error);
}

TEST_CASE("identity pair: 2F1(3/4,5/4;2;z^2) vs the K/E combination") {
    // removable singularity: both sides approach 1 as z -> 0
    const IdentityPair near_zero = identity_2f1_ke(1e-4);
    CHECK(std::fabs(near_zero.lhs - 1.0) < 1e-6);
    CHECK(std::fabs(near_zero.rhs - 1.0) < 1e-6);

    const IdentityPair mid = identity_2f1_ke(0.5);
    CHECK(rel_dev(mid.lhs, mid.rhs) < 1e-11);

    const IdentityPair high = identity_2f1_ke(0.9);
    CHECK(rel_dev(high.lhs, high.rhs) < 1e-9);

    CHECK_THROWS_AS(identity_2f1_ke(0.0), domain_error);
    CHECK_THROWS_AS(identity_2f1_ke(1.0), domain_error);
}

TEST_CASE("both identities lock the modulus convention across z") {
    for (double z : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const IdentityPair first = identity_2f1_e(z);
        CHECK(rel_dev(first.lhs, first.rhs) < 1e-10);
        const IdentityPair second = identity_2f1_ke(z);
        CHECK(rel_dev(second.lhs, second.rhs) < 1e-10);
    }
}

TEST_CASE("series results honor the convergence contract") {
    for (double z : {0.1, 0.5, 0.9}) {
        const SeriesResult r = gauss_2f1(0.75, 1.25, 2.0, z);
        CHECK(r.converged);
        CHECK(r.tail_estimate <= std::fmax(1e-15 * std::fabs(r.value), 0.0));
        CHECK(r.terms_used <= 20000);
    }
}
