#include "doctest.h"

#include "ellint2/closed_form.hpp"
#include "ellint2/quadrature.hpp"
#include "test_util.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace ellint2;
using testutil::rel_dev;

namespace {

// data/golden_interior.csv was frozen with `ellint2 golden` and is the
// committed regression baseline for the interior grid.

struct GoldenRow {
    double a, b, value, error_estimate;
    long nodes_total;
};

}  // namespace

TEST_CASE("golden baseline: quadrature and closed form reproduce the frozen grid") {
    std::ifstream in(std::string(ELLINT2_TEST_DATA_DIR) + "/golden_interior.csv");
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "a,b,value,error_estimate,nodes_total");

    int rows = 0;
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        GoldenRow row{};
        char comma;
        ss >> row.a >> comma >> row.b >> comma >> row.value >> comma >>
            row.error_estimate >> comma >> row.nodes_total;
        REQUIRE(!ss.fail());
        ++rows;

        ToleranceConfig cfg;
        cfg.rel_tol = 0.1 * oracle_rel_tol({row.a, row.b});
        const QuadResult q = quad2d({row.a, row.b}, cfg);
        CHECK(rel_dev(q.value, row.value) < 1e-11);
        CHECK(rel_dev(evaluate_elliptic({row.a, row.b}).value, row.value) < 1e-9);
    }
    CHECK(rows == 81);
}
