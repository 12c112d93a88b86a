#include "ellint2/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace ellint2 {

namespace {

constexpr double pi = std::numbers::pi;

GaussLegendreRule build_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // i-th root of P_n counting down from +1; Newton from the
        // Chebyshev-like initial guess.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 1.0;
        for (int pass = 0; pass < 100; ++pass) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) <= 1e-15)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[n - 1 - i] = x;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        rule.nodes[n / 2] = 0.0;
    return rule;
}

struct Cell {
    double x0, x1, y0, y1;
};

// Whole square, or 10 cells with three dyadic refinements toward the
// integrand zero at (pi, pi) when the amplitudes are near the boundary.
std::vector<Cell> make_cells(double amplitude_sum) {
    std::vector<Cell> cells;
    if (amplitude_sum <= 0.9) {
        cells.push_back({0.0, pi, 0.0, pi});
        return cells;
    }
    double x0 = 0.0, y0 = 0.0;
    const double x1 = pi, y1 = pi;
    for (int level = 0; level < 3; ++level) {
        const double xm = 0.5 * (x0 + x1);
        const double ym = 0.5 * (y0 + y1);
        cells.push_back({x0, xm, y0, ym});
        cells.push_back({xm, x1, y0, ym});
        cells.push_back({x0, xm, ym, y1});
        x0 = xm;
        y0 = ym;
    }
    cells.push_back({x0, x1, y0, y1});
    return cells;
}

double tensor_cell(double a, double b, const Cell& c,
                   const GaussLegendreRule& rule) {
    const double hx = 0.5 * (c.x1 - c.x0);
    const double mx = 0.5 * (c.x1 + c.x0);
    const double hy = 0.5 * (c.y1 - c.y0);
    const double my = 0.5 * (c.y1 + c.y0);
    const std::size_t n = rule.nodes.size();
    std::vector<double> ax(n), by(n);
    for (std::size_t i = 0; i < n; ++i) {
        ax[i] = a * std::cos(mx + hx * rule.nodes[i]);
        by[i] = b * std::cos(my + hy * rule.nodes[i]);
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            // max() guards the square root against roundoff at the
            // boundary zero.
            row += rule.weights[j] * std::sqrt(std::fmax(0.0, 1.0 + ax[i] + by[j]));
        }
        sum += rule.weights[i] * row;
    }
    return hx * hy * sum;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1)
        throw domain_error("gauss_legendre: node count must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    const std::scoped_lock lock(mutex);
    std::unique_ptr<GaussLegendreRule>& slot = cache[n];
    if (!slot)
        slot = std::make_unique<GaussLegendreRule>(build_rule(n));
    return *slot;
}

QuadResult integrate_adaptive(const std::function<double(double)>& f,
                              double lo, double hi,
                              const ToleranceConfig& cfg) {
    validate(cfg);
    QuadResult out;
    int n = cfg.quad_base_nodes;
    double prev = 0.0;
    for (int level = 1; level <= cfg.quad_max_levels; ++level) {
        out.value = integrate(f, lo, hi, n);
        out.nodes_total += n;
        out.levels_used = level;
        if (level > 1) {
            out.error_estimate = std::fabs(out.value - prev);
            if (out.error_estimate <=
                std::max(cfg.rel_tol * std::fabs(out.value), cfg.abs_tol))
                return out;
        }
        prev = out.value;
        n *= 2;
    }
    return out;  // level exhaustion: error_estimate stays above tolerance
}

QuadResult quad1d(double a, const ToleranceConfig& cfg) {
    if (!(std::fabs(a) <= 1.0))
        throw domain_error("quad1d: requires |a| <= 1");
    return integrate_adaptive(
        [a](double x) { return std::sqrt(std::fmax(0.0, 1.0 + a * std::cos(x))); },
        0.0, pi, cfg);
}

QuadResult quad2d(Amplitudes p, const ToleranceConfig& cfg) {
    validate(cfg);
    const double a = std::fabs(p.a);
    const double b = std::fabs(p.b);
    if (!(a + b <= 1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << "quad2d: requires |a| + |b| <= 1 (got " << a + b << ")";
        throw domain_error(msg.str());
    }
    const std::vector<Cell> cells = make_cells(a + b);
    QuadResult out;
    int n = cfg.quad_base_nodes;
    double prev = 0.0;
    for (int level = 1; level <= cfg.quad_max_levels; ++level) {
        const GaussLegendreRule& rule = gauss_legendre(n);
        double value = 0.0;
        for (const Cell& c : cells)
            value += tensor_cell(a, b, c, rule);
        out.value = value;
        out.nodes_total += static_cast<long>(cells.size()) * n * n;
        out.levels_used = level;
        if (level > 1) {
            out.error_estimate = std::fabs(value - prev);
            if (out.error_estimate <=
                std::max(cfg.rel_tol * std::fabs(value), cfg.abs_tol))
                return out;
        }
        prev = value;
        n *= 2;
    }
    return out;
}

double oracle_rel_tol(Amplitudes p) {
    return std::fabs(p.a) + std::fabs(p.b) > 0.95 ? 1e-8 : 1e-11;
}

}  // namespace ellint2
