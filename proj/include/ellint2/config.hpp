#pragma once

#include <stdexcept>
#include <string>

namespace ellint2 {

// Stop criteria and resource caps shared by the iterative evaluators.
struct ToleranceConfig {
    double rel_tol = 1e-15;       // relative stop criterion
    double abs_tol = 0.0;         // absolute floor in term/step comparisons
    int max_iters = 64;           // AGM iteration cap
    long max_terms = 20000;       // series term cap (anti-diagonal blocks for F4)
    int quad_base_nodes = 32;     // Gauss-Legendre nodes per axis at the first level
    int quad_max_levels = 6;      // node-doubling levels before giving up
};

// Throws std::invalid_argument if the config violates
// rel_tol > 0, abs_tol >= 0, max_iters >= 1, max_terms >= 1,
// quad_base_nodes >= 1, quad_max_levels >= 1.
void validate(const ToleranceConfig& cfg);

// Argument outside an evaluator's admissible domain.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// The elliptic-combination route at (+-1,0)/(0,+-1), where its two K terms
// diverge individually.  The axis evaluator handles those points.
struct corner_error : domain_error {
    using domain_error::domain_error;
};

// Iteration or term cap hit before the stop criterion; carries the last
// gap (AGM) or term magnitude (series).
struct convergence_error : std::runtime_error {
    double residual;
    convergence_error(const std::string& what, double residual_)
        : std::runtime_error(what), residual(residual_) {}
};

}  // namespace ellint2
