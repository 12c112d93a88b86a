// Command-line surface for the E(a,b) evaluators: single evaluations,
// cross-method comparison sweeps, golden-value generation, and the
// built-in invariant selftest.
//
// Exit codes: 0 success, 2 domain error, 3 convergence failure, 4 I/O
// error (CLI parse errors exit 1).

#include "CLI11.hpp"
#include "json.hpp"

#include "ellint2/closed_form.hpp"
#include "ellint2/elliptic.hpp"
#include "ellint2/hypergeometric.hpp"
#include "ellint2/quadrature.hpp"
#include "ellint2/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace {

using namespace ellint2;

constexpr double pi = std::numbers::pi;

constexpr int exit_ok = 0;
constexpr int exit_domain = 2;
constexpr int exit_convergence = 3;
constexpr int exit_io = 4;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest locale-independent round-trip representation (<= 17 significant
// digits): report and golden files must diff stably across runs.
std::string format_double(double x) {
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

double elapsed_us(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::micro>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

double median(std::vector<double> v) {
    if (v.empty())
        return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Sweep cells are pure, so they may run on any thread; callers keep the
// output in deterministic grid order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0)
        workers = 4;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;)
                body(i);
        });
    for (std::thread& th : pool)
        th.join();
}

// ---------------------------------------------------------------------------
// shared flags

struct ToleranceFlags {
    ToleranceConfig cfg;
    CLI::Option* rel_opt = nullptr;

    bool rel_tol_explicit() const { return rel_opt && rel_opt->count() > 0; }

    // quad acting as the reference defaults to its oracle tolerance unless
    // the user pinned one
    ToleranceConfig for_quad(Amplitudes p) const {
        ToleranceConfig c = cfg;
        if (!rel_tol_explicit())
            c.rel_tol = oracle_rel_tol(p);
        return c;
    }
};

void add_tolerance_flags(CLI::App* cmd, ToleranceFlags& tf) {
    tf.rel_opt = cmd->add_option("--rel-tol", tf.cfg.rel_tol,
                                 "relative stop criterion")
                     ->check(CLI::PositiveNumber);
    cmd->add_option("--abs-tol", tf.cfg.abs_tol, "absolute tolerance floor")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--max-terms", tf.cfg.max_terms, "series term cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--quad-nodes", tf.cfg.quad_base_nodes,
                    "Gauss-Legendre nodes per axis at the first level")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--quad-levels", tf.cfg.quad_max_levels,
                    "node-doubling levels for quadrature")
        ->check(CLI::PositiveNumber);
}

struct GridSpec {
    double a_min = 0.0, a_max = 0.4;
    double b_min = 0.0, b_max = 0.4;
    int steps_a = 9, steps_b = 9;
};

void add_grid_flags(CLI::App* cmd, GridSpec& g) {
    cmd->add_option("--a-min", g.a_min, "grid start in a");
    cmd->add_option("--a-max", g.a_max, "grid end in a");
    cmd->add_option("--b-min", g.b_min, "grid start in b");
    cmd->add_option("--b-max", g.b_max, "grid end in b");
    cmd->add_option("--steps-a", g.steps_a, "grid points in a")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--steps-b", g.steps_b, "grid points in b")
        ->check(CLI::PositiveNumber);
}

std::vector<Amplitudes> build_grid(const GridSpec& g, long& skipped) {
    std::vector<Amplitudes> points;
    skipped = 0;
    for (int i = 0; i < g.steps_a; ++i) {
        const double a =
            g.steps_a == 1 ? g.a_min
                           : g.a_min + i * (g.a_max - g.a_min) / (g.steps_a - 1);
        for (int j = 0; j < g.steps_b; ++j) {
            const double b =
                g.steps_b == 1
                    ? g.b_min
                    : g.b_min + j * (g.b_max - g.b_min) / (g.steps_b - 1);
            if (std::fabs(a) + std::fabs(b) <= 1.0 + 1e-14)
                points.push_back({a, b});
            else
                ++skipped;  // inadmissible grid points are counted, not errors
        }
    }
    return points;
}

enum class CellStatus { ok, skipped_domain, nonconverged };

struct Cell {
    double value = 0.0;
    double error = 0.0;
    double micros = 0.0;
    CellStatus status = CellStatus::ok;
};

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
    if (!out.good())
        throw io_failure("cannot write " + path);
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(double a, double b, const std::string& method_str,
             const ToleranceFlags& tf, bool no_timing) {
    const auto method = parse_method(method_str);
    if (!method) {
        std::cerr << "domain error: unknown method '" << method_str << "'\n";
        return exit_domain;
    }
    std::cout << "a=" << format_double(a) << "\n";
    std::cout << "b=" << format_double(b) << "\n";
    try {
        const auto t0 = std::chrono::steady_clock::now();
        if (*method == Method::quad) {
            const ToleranceConfig cfg = tf.for_quad({a, b});
            const QuadResult r = quad2d({a, b}, cfg);
            const double us = elapsed_us(t0);
            std::cout << "method=quad\n";
            std::cout << "value=" << format_double(r.value) << "\n";
            std::cout << "error_estimate=" << format_double(r.error_estimate)
                      << "\n";
            std::cout << "levels_used=" << r.levels_used << "\n";
            std::cout << "nodes_total=" << r.nodes_total << "\n";
            if (!no_timing)
                std::cout << "time_ms=" << us / 1000.0 << "\n";
            if (r.error_estimate >
                std::max(cfg.rel_tol * std::fabs(r.value), cfg.abs_tol)) {
                std::cerr << "convergence failure: quadrature level cap reached\n";
                return exit_convergence;
            }
        } else {
            const Evaluation e = evaluate({a, b}, *method, tf.cfg);
            const double us = elapsed_us(t0);
            std::cout << "method=" << method_name(e.method) << "\n";
            std::cout << "value=" << format_double(e.value) << "\n";
            std::cout << "error_estimate=" << format_double(e.error_estimate)
                      << "\n";
            if (!no_timing)
                std::cout << "time_ms=" << us / 1000.0 << "\n";
        }
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return exit_convergence;
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// compare

int cmd_compare(const GridSpec& grid, const std::vector<std::string>& method_strs,
                const std::string& out_path, const std::string& format,
                double fail_above, bool fail_above_set,
                const ToleranceFlags& tf, bool no_timing) {
    std::vector<Method> methods;
    for (const std::string& s : method_strs) {
        const auto m = parse_method(s);
        if (!m || *m == Method::auto_select) {
            std::cerr << "domain error: unsupported compare method '" << s
                      << "'\n";
            return exit_domain;
        }
        methods.push_back(*m);
    }

    long points_skipped = 0;
    const std::vector<Amplitudes> points = build_grid(grid, points_skipped);
    if (points.empty()) {
        std::cerr << "no admissible points\n";
        return exit_domain;
    }

    std::vector<std::vector<Cell>> cells(points.size(),
                                         std::vector<Cell>(methods.size()));
    parallel_for(points.size(), [&](std::size_t i) {
        for (std::size_t j = 0; j < methods.size(); ++j) {
            Cell& cell = cells[i][j];
            const auto t0 = std::chrono::steady_clock::now();
            try {
                if (methods[j] == Method::quad) {
                    const QuadResult r = quad2d(points[i], tf.for_quad(points[i]));
                    cell.value = r.value;
                    cell.error = r.error_estimate;
                } else {
                    const Evaluation e = evaluate(points[i], methods[j], tf.cfg);
                    cell.value = e.value;
                    cell.error = e.error_estimate;
                }
            } catch (const domain_error&) {
                cell.status = CellStatus::skipped_domain;
            } catch (const convergence_error&) {
                cell.status = CellStatus::nonconverged;
            }
            cell.micros = elapsed_us(t0);
        }
    });

    const bool has_quad =
        std::find(methods.begin(), methods.end(), Method::quad) != methods.end();

    double max_abs = 0.0, max_rel = 0.0;
    double worst_a = points[0].a, worst_b = points[0].b;
    long evaluated = 0, skipped_domain = 0, nonconverged = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        // reference: quadrature when requested, the elliptic route otherwise
        double reference = 0.0;
        bool have_ref = false;
        for (std::size_t j = 0; j < methods.size() && !have_ref; ++j)
            if (methods[j] == Method::quad && cells[i][j].status == CellStatus::ok) {
                reference = cells[i][j].value;
                have_ref = true;
            }
        for (std::size_t j = 0; j < methods.size() && !have_ref; ++j)
            if (methods[j] == Method::elliptic7 &&
                cells[i][j].status == CellStatus::ok) {
                reference = cells[i][j].value;
                have_ref = true;
            }
        if (!have_ref) {
            try {
                reference = evaluate_elliptic(points[i], tf.cfg).value;
                have_ref = true;
            } catch (const std::exception&) {
            }
        }
        for (std::size_t j = 0; j < methods.size(); ++j) {
            const Cell& cell = cells[i][j];
            switch (cell.status) {
                case CellStatus::skipped_domain: ++skipped_domain; break;
                case CellStatus::nonconverged: ++nonconverged; break;
                case CellStatus::ok: ++evaluated; break;
            }
            if (cell.status != CellStatus::ok || !have_ref)
                continue;
            const double dev = std::fabs(cell.value - reference);
            const double rel = dev / std::fabs(reference);
            if (rel > max_rel) {
                max_rel = rel;
                worst_a = points[i].a;
                worst_b = points[i].b;
            }
            max_abs = std::fmax(max_abs, dev);
        }
    }

    std::cout << "points_total=" << points.size() + points_skipped << "\n";
    std::cout << "points_admissible=" << points.size() << "\n";
    std::cout << "points_skipped=" << points_skipped << "\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < methods.size(); ++j) {
            if (cells[i][j].status == CellStatus::skipped_domain)
                std::cout << "skipped-domain: a=" << format_double(points[i].a)
                          << " b=" << format_double(points[i].b)
                          << " method=" << method_name(methods[j]) << "\n";
            else if (cells[i][j].status == CellStatus::nonconverged)
                std::cout << "nonconverged: a=" << format_double(points[i].a)
                          << " b=" << format_double(points[i].b)
                          << " method=" << method_name(methods[j]) << "\n";
        }
    std::cout << "cells_evaluated=" << evaluated << "\n";
    std::cout << "cells_skipped_domain=" << skipped_domain << "\n";
    std::cout << "cells_nonconverged=" << nonconverged << "\n";
    std::cout << "reference=" << (has_quad ? "quad" : "elliptic7") << "\n";
    std::cout << "max_abs_dev=" << format_double(max_abs) << "\n";
    std::cout << "max_rel_dev=" << format_double(max_rel) << "\n";
    std::cout << "worst_a=" << format_double(worst_a) << "\n";
    std::cout << "worst_b=" << format_double(worst_b) << "\n";
    if (!no_timing)
        for (std::size_t j = 0; j < methods.size(); ++j) {
            std::vector<double> us;
            for (std::size_t i = 0; i < points.size(); ++i)
                if (cells[i][j].status == CellStatus::ok)
                    us.push_back(cells[i][j].micros);
            std::cout << "median_us_" << method_name(methods[j]) << "="
                      << median(us) << "\n";
        }

    if (!out_path.empty()) {
        if (format == "csv") {
            std::string body = "a,b,method,value,error_estimate\n";
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = 0; j < methods.size(); ++j) {
                    if (cells[i][j].status != CellStatus::ok)
                        continue;
                    body += format_double(points[i].a) + ",";
                    body += format_double(points[i].b) + ",";
                    body += method_name(methods[j]);
                    body += ",";
                    body += format_double(cells[i][j].value) + ",";
                    body += format_double(cells[i][j].error) + "\n";
                }
            write_text_file(out_path, body);
        } else {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < points.size(); ++i)
                for (std::size_t j = 0; j < methods.size(); ++j) {
                    if (cells[i][j].status != CellStatus::ok)
                        continue;
                    rows.push_back({{"a", points[i].a},
                                    {"b", points[i].b},
                                    {"method", method_name(methods[j])},
                                    {"value", cells[i][j].value},
                                    {"error_estimate", cells[i][j].error}});
                }
            write_text_file(out_path, rows.dump(2) + "\n");
        }
        std::cout << "out=" << out_path << "\n";
    }

    if (fail_above_set) {
        const bool exceeded = max_rel > fail_above;
        std::cout << "fail_above_exceeded=" << (exceeded ? 1 : 0) << "\n";
        if (exceeded)
            return 1;
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// golden

int cmd_golden(const GridSpec& grid, const std::string& out_path,
               const std::string& format, const ToleranceFlags& tf) {
    long points_skipped = 0;
    const std::vector<Amplitudes> points = build_grid(grid, points_skipped);
    if (points.empty()) {
        std::cerr << "no admissible points\n";
        return exit_domain;
    }

    struct GoldenRow {
        QuadResult r;
        bool converged = false;
    };
    std::vector<GoldenRow> rows(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        ToleranceConfig cfg = tf.cfg;
        if (!tf.rel_tol_explicit())
            cfg.rel_tol = 0.1 * oracle_rel_tol(points[i]);  // tightened oracle
        rows[i].r = quad2d(points[i], cfg);
        rows[i].converged =
            rows[i].r.error_estimate <=
            std::max(cfg.rel_tol * std::fabs(rows[i].r.value), cfg.abs_tol);
    });

    long nonconverged = 0;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!rows[i].converged) {
            ++nonconverged;
            std::cout << "nonconverged: a=" << format_double(points[i].a)
                      << " b=" << format_double(points[i].b) << " error_estimate="
                      << format_double(rows[i].r.error_estimate) << "\n";
        }

    if (format == "csv") {
        std::string body = "a,b,value,error_estimate,nodes_total\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            body += format_double(points[i].a) + ",";
            body += format_double(points[i].b) + ",";
            body += format_double(rows[i].r.value) + ",";
            body += format_double(rows[i].r.error_estimate) + ",";
            body += std::to_string(rows[i].r.nodes_total) + "\n";
        }
        write_text_file(out_path, body);
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < points.size(); ++i)
            arr.push_back({{"a", points[i].a},
                           {"b", points[i].b},
                           {"value", rows[i].r.value},
                           {"error_estimate", rows[i].r.error_estimate},
                           {"nodes_total", rows[i].r.nodes_total}});
        write_text_file(out_path, arr.dump(2) + "\n");
    }
    std::cout << "out=" << out_path << "\n";
    std::cout << "rows=" << points.size() << "\n";
    std::cout << "points_skipped=" << points_skipped << "\n";
    std::cout << "nonconverged=" << nonconverged << "\n";
    return nonconverged > 0 ? exit_convergence : exit_ok;
}

// ---------------------------------------------------------------------------
// selftest

class Checker {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok) {
            ++failed_;
            std::cout << "fail: " << what << "\n";
        }
    }
    int checks() const { return checks_; }
    int failed() const { return failed_; }

private:
    int checks_ = 0;
    int failed_ = 0;
};

double rel_dev(double x, double ref) {
    return std::fabs(x - ref) / std::fabs(ref);
}

void suite_legendre(const ToleranceConfig& cfg, Checker& c) {
    for (double k : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const double kp = std::sqrt((1.0 - k) * (1.0 + k));
        const EllipticValues ke = complete_KE(EllipticModulus(k), cfg);
        const EllipticValues kep = complete_KE(EllipticModulus(kp), cfg);
        const double lhs = ke.E * kep.K + kep.E * ke.K - ke.K * kep.K;
        c.check(rel_dev(lhs, pi / 2.0) < 1e-13,
                "legendre relation at k=" + format_double(k));
    }
}

void suite_eq6(const ToleranceConfig& cfg, Checker& c) {
    for (double z : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const IdentityPair first = identity_2f1_e(z, cfg);
        c.check(rel_dev(first.lhs, first.rhs) < 1e-10,
                "first identity at z=" + format_double(z));
        const IdentityPair second = identity_2f1_ke(z, cfg);
        c.check(rel_dev(second.lhs, second.rhs) < 1e-10,
                "second identity at z=" + format_double(z));
    }
}

void suite_reduction(const ToleranceConfig&, Checker& c) {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int bad = 0;
    for (int i = 0; i < 1000; ++i) {
        const double a = unit(rng);
        const double b = unit(rng) * (1.0 - a);
        const ReducedPair uv = map_uv({a, b});
        if (std::fabs(uv.u * (1.0 - uv.v) - a * a) > 1e-12 ||
            std::fabs(uv.v * (1.0 - uv.u) - b * b) > 1e-12)
            ++bad;
    }
    c.check(bad == 0, "reduction round-trip failures: " + std::to_string(bad));
}

void suite_fourway(const ToleranceConfig& cfg, Checker& c) {
    const std::vector<double> axis = {0.0, 0.05, 0.1, 0.2, 0.3, 0.4};
    double worst = 0.0;
    bool threw = false;
    for (double a : axis)
        for (double b : axis) {
            if (a + b > 0.8)
                continue;
            try {
                ToleranceConfig quad_cfg = cfg;
                quad_cfg.rel_tol = std::fmax(cfg.rel_tol, oracle_rel_tol({a, b}));
                const double reference = quad2d({a, b}, quad_cfg).value;
                for (double v : {evaluate_elliptic({a, b}, cfg).value,
                                 evaluate_product({a, b}, cfg).value,
                                 evaluate_appell({a, b}, cfg).value})
                    worst = std::fmax(worst, rel_dev(v, reference));
            } catch (const std::exception&) {
                threw = true;
            }
        }
    c.check(!threw, "four-way grid evaluation threw");
    c.check(worst < 1e-8, "four-way max relative deviation " + format_double(worst));
}

void suite_axis(const ToleranceConfig& cfg, Checker& c) {
    c.check(rel_dev(evaluate_axis(1.0, cfg).value, 2.0 * std::sqrt(2.0) * pi) < 1e-13,
            "axis corner value at a=1");
    double worst = 0.0;
    for (int i = 0; i <= 99; ++i) {
        const double a = i / 100.0;
        worst = std::fmax(worst, rel_dev(evaluate_elliptic({a, 0.0}, cfg).value,
                                         evaluate_axis(a, cfg).value));
    }
    c.check(worst < 1e-11, "axis consistency max deviation " + format_double(worst));
    bool refused = false;
    try {
        evaluate_elliptic({1.0, 0.0}, cfg);
    } catch (const corner_error&) {
        refused = true;
    } catch (const std::exception&) {
    }
    c.check(refused, "corner refusal of the elliptic route at (1,0)");
}

void suite_diag(const ToleranceConfig& cfg, Checker& c) {
    double worst = 0.0;
    for (double a : {0.0, 0.1, 0.2, 0.3, 0.4, 0.49})
        worst = std::fmax(worst, rel_dev(evaluate_diagonal(a, cfg).value,
                                         evaluate_elliptic({a, a}, cfg).value));
    c.check(worst < 1e-10,
            "diagonal consistency max deviation " + format_double(worst));

    ToleranceConfig quad_cfg = cfg;
    quad_cfg.rel_tol = std::fmax(cfg.rel_tol, oracle_rel_tol({0.5, 0.5}));
    const double boundary = quad2d({0.5, 0.5}, quad_cfg).value;
    c.check(rel_dev(evaluate_diagonal(0.5, cfg).value, boundary) < 1e-7,
            "diagonal boundary against quadrature");
}

// Frozen anchors: a corrupted tolerance or broken iteration surfaces here
// as a gross mismatch.
void suite_quality(const ToleranceConfig& cfg, Checker& c) {
    c.check(rel_dev(complete_K(EllipticModulus(0.5), cfg), 1.6857503548125960429) < 1e-9,
            "K(0.5) against frozen value");
    c.check(rel_dev(complete_E(EllipticModulus(0.5), cfg), 1.4674622093394271554) < 1e-9,
            "E(0.5) against frozen value");
    c.check(rel_dev(gauss_2f1(-0.25, 0.25, 1.0, 0.25, cfg).value,
                    0.98334265077516523252) < 1e-9,
            "2F1(-1/4,1/4;1;1/4) against frozen value");
    bool ok = true;
    try {
        ok = rel_dev(evaluate_elliptic({0.3, 0.4}, cfg).value,
                     9.6990408375829146133) < 1e-9;
    } catch (const std::exception&) {
        ok = false;
    }
    c.check(ok, "E(0.3,0.4) against frozen value");
}

int cmd_selftest(const std::string& only_suite, const ToleranceFlags& tf) {
    using SuiteFn = void (*)(const ToleranceConfig&, Checker&);
    const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"legendre", suite_legendre},
        {"eq6", suite_eq6},
        {"reduction", suite_reduction},
        {"fourway", suite_fourway},
        {"axis", suite_axis},
        {"diag", suite_diag},
        {"quality", suite_quality},
    };
    int total_checks = 0;
    int total_failed = 0;
    int run = 0;
    for (const auto& [name, fn] : suites) {
        if (!only_suite.empty() && only_suite != name)
            continue;
        ++run;
        Checker c;
        try {
            fn(tf.cfg, c);
        } catch (const std::exception& e) {
            c.check(false, name + std::string(" threw: ") + e.what());
        }
        std::cout << "suite=" << name << " checks=" << c.checks()
                  << " failed=" << c.failed() << "\n";
        total_checks += c.checks();
        total_failed += c.failed();
    }
    if (run == 0) {
        std::cerr << "domain error: unknown suite '" << only_suite << "'\n";
        return exit_domain;
    }
    std::cout << "selftest: suites=" << run << " checks=" << total_checks
              << " failures=" << total_failed << "\n";
    return total_failed > 0 ? 1 : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ellint2: the double integral E(a,b) over [0,pi]^2 of "
        "sqrt(1 + a cos x + b cos y), by closed elliptic form, "
        "hypergeometric series, and direct quadrature"};
    app.require_subcommand(1);

    ToleranceConfig base;
    if (const char* env = std::getenv("ELLINT2_DEFAULT_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0.0)
            base.rel_tol = v;
        else
            std::cerr << "warning: ignoring invalid ELLINT2_DEFAULT_TOL\n";
    }

    auto* eval_cmd = app.add_subcommand("eval", "evaluate E(a,b) once");
    double eval_a = 0.0, eval_b = 0.0;
    std::string eval_method = "auto";
    bool eval_no_timing = false;
    ToleranceFlags eval_tf{base};
    eval_cmd->add_option("--a", eval_a, "amplitude a")->required();
    eval_cmd->add_option("--b", eval_b, "amplitude b")->required();
    eval_cmd->add_option("--method", eval_method,
                         "auto|elliptic7|product5|appell3|diag8|quad");
    eval_cmd->add_flag("--no-timing", eval_no_timing, "suppress the timing line");
    add_tolerance_flags(eval_cmd, eval_tf);

    auto* compare_cmd =
        app.add_subcommand("compare", "cross-method sweep with deviation report");
    GridSpec compare_grid;
    std::vector<std::string> compare_methods = {"elliptic7", "product5",
                                                "appell3", "quad"};
    std::string compare_out;
    std::string compare_format = "csv";
    double compare_fail_above = 0.0;
    bool compare_no_timing = false;
    ToleranceFlags compare_tf{base};
    add_grid_flags(compare_cmd, compare_grid);
    compare_cmd->add_option("--methods", compare_methods,
                            "methods to compare (comma separated)")
        ->delimiter(',');
    compare_cmd->add_option("--out", compare_out, "report file path");
    compare_cmd->add_option("--format", compare_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    auto* fail_opt =
        compare_cmd->add_option("--fail-above", compare_fail_above,
                                "exit nonzero when max_rel_dev exceeds this");
    compare_cmd->add_flag("--no-timing", compare_no_timing,
                          "suppress timing medians");
    add_tolerance_flags(compare_cmd, compare_tf);

    auto* golden_cmd = app.add_subcommand(
        "golden", "freeze quadrature oracle values for regression");
    GridSpec golden_grid;
    std::string golden_out = "golden.csv";
    std::string golden_format = "csv";
    ToleranceFlags golden_tf{base};
    add_grid_flags(golden_cmd, golden_grid);
    golden_cmd->add_option("--out", golden_out, "output file path");
    golden_cmd->add_option("--format", golden_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    add_tolerance_flags(golden_cmd, golden_tf);

    auto* selftest_cmd =
        app.add_subcommand("selftest", "run the built-in invariant suites");
    std::string selftest_suite;
    ToleranceFlags selftest_tf{base};
    selftest_cmd->add_option(
        "--suite", selftest_suite,
        "run one suite: legendre|eq6|reduction|fourway|axis|diag|quality");
    add_tolerance_flags(selftest_cmd, selftest_tf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (eval_cmd->parsed())
            return cmd_eval(eval_a, eval_b, eval_method, eval_tf, eval_no_timing);
        if (compare_cmd->parsed())
            return cmd_compare(compare_grid, compare_methods, compare_out,
                               compare_format, compare_fail_above,
                               fail_opt->count() > 0, compare_tf,
                               compare_no_timing);
        if (golden_cmd->parsed())
            return cmd_golden(golden_grid, golden_out, golden_format, golden_tf);
        if (selftest_cmd->parsed())
            return cmd_selftest(selftest_suite, selftest_tf);
    } catch (const io_failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return exit_domain;
    } catch (const convergence_error& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return exit_convergence;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_ok;
}
