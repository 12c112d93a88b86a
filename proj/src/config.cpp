#include "ellint2/config.hpp"

namespace ellint2 {

void validate(const ToleranceConfig& cfg) {
    if (!(cfg.rel_tol > 0.0))
        throw std::invalid_argument("ToleranceConfig: rel_tol must be > 0");
    if (!(cfg.abs_tol >= 0.0))
        throw std::invalid_argument("ToleranceConfig: abs_tol must be >= 0");
    if (cfg.max_iters < 1)
        throw std::invalid_argument("ToleranceConfig: max_iters must be >= 1");
    if (cfg.max_terms < 1)
        throw std::invalid_argument("ToleranceConfig: max_terms must be >= 1");
    if (cfg.quad_base_nodes < 1)
        throw std::invalid_argument("ToleranceConfig: quad_base_nodes must be >= 1");
    if (cfg.quad_max_levels < 1)
        throw std::invalid_argument("ToleranceConfig: quad_max_levels must be >= 1");
}

}  // namespace ellint2
