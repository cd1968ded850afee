// zetalab - batch experiments on the Riemann zeta function at the critical
// line: Riemann-Siegel evaluation, Gram-point sums, ladder iterations,
// iterated product integrals, and the Fermat-rational functionals.
//
// Every subcommand writes one machine-readable report (JSON or CSV) whose
// rows map one-to-one onto library operations.  Reports are byte-identical
// for identical (inputs, backend, version, partition count); wall-clock
// timing is added only under --timing.
//
// Exit codes: 0 success, 1 argument error, 2 numerical failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/fermat.hpp"
#include "zetalab/functionals.hpp"
#include "zetalab/gram.hpp"
#include "zetalab/ladder.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/report.hpp"
#include "zetalab/spectral.hpp"
#include "zetalab/theta.hpp"
#include "zetalab/version.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/zeta.hpp"

namespace {

using namespace zetalab;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

struct GlobalOpts {
    std::string out = "-";
    std::string format = "json";
    std::string svg_path;
    double tol = 0.0;  // 0 = library defaults
    int threads = 0;
    std::string backend = "quad";
    bool timing = false;
};

PrecisionConfig precision_of(const GlobalOpts& g) {
    PrecisionConfig cfg;
    if (g.tol > 0.0) {
        cfg.quad_rel_tol = g.tol;
        cfg.quad_abs_tol = g.tol * 1e-2;
        cfg.root_tol = std::min(1e-9, g.tol);
    }
    return cfg;
}

IntegralBackend backend_of(const GlobalOpts& g) {
    if (g.backend == "quad") return IntegralBackend::quadrature;
    if (g.backend == "main") return IntegralBackend::main_term;
    throw CLI::ValidationError("--backend", "must be 'quad' or 'main'");
}

LadderConfig ladder_of(const GlobalOpts& g) {
    LadderConfig cfg;
    cfg.precision = precision_of(g);
    cfg.backend = backend_of(g);
    return cfg;
}

void stamp_and_write(ExperimentReport& rep, const GlobalOpts& g,
                     std::chrono::steady_clock::time_point started) {
    const PrecisionConfig cfg = precision_of(g);
    rep.add_meta("version", kVersion);
    rep.add_meta("partition_count", static_cast<double>(partition_count()));
    rep.add_meta("quad_rel_tol", cfg.quad_rel_tol);
    rep.add_meta("quad_abs_tol", cfg.quad_abs_tol);
    rep.add_meta("root_tol", cfg.root_tol);
    if (g.timing) {
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started).count();
        rep.add_meta("timing_ms", ms);
    }
    if (g.format == "csv")
        write_text(g.out, to_csv(rep));
    else
        write_text(g.out, to_json(rep));
    if (!g.svg_path.empty()) write_text(g.svg_path, to_svg(rep));
}

std::vector<double> parse_ladder(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw CLI::ValidationError("ladder", "needs at least one value");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetalab - critical-line experiments on the Riemann zeta function"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config");
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out, "output path ('-' = stdout)")->capture_default_str();
    app.add_option("--format", g.format, "report format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--svg", g.svg_path, "also write a line chart to this path");
    app.add_option("--tol", g.tol, "quadrature relative tolerance (0 = defaults)");
    app.add_option("--threads", g.threads, "partition count (0 = hardware)");
    app.add_option("--backend", g.backend, "integral backend: quad|main")
        ->check(CLI::IsMember({"quad", "main"}))
        ->capture_default_str();
    app.add_flag("--timing", g.timing, "record wall-clock timing in the report");

    // ---- gram ----
    auto* cmd_gram = app.add_subcommand("gram", "Gram points by index or height range");
    std::int64_t gram_nu = 0;
    std::vector<double> gram_range;
    cmd_gram->add_option("--nu", gram_nu, "Gram index (>= 1)");
    cmd_gram->add_option("--range", gram_range, "height range A B")->expected(2);

    // ---- sum ----
    auto* cmd_sum = app.add_subcommand("sum", "even/odd Gram-point sums over a window");
    double sum_T = 0.0, sum_psi = 0.0;
    std::string sum_window = "h";
    cmd_sum->add_option("--T", sum_T, "base height")->required();
    cmd_sum->add_option("--window", sum_window, "window kind: h1|h2|h")
        ->check(CLI::IsMember({"h1", "h2", "h"}));
    cmd_sum->add_option("--psi", sum_psi, "psi parameter (h1/h2 kinds)");

    // ---- ladder ----
    auto* cmd_ladder = app.add_subcommand("ladder", "reverse iterates of the slow companion map");
    double ladder_T = 0.0;
    int ladder_k = 1;
    cmd_ladder->add_option("--T", ladder_T, "base height")->required();
    cmd_ladder->add_option("--k", ladder_k, "iteration count")->required();

    // ---- product-integral ----
    auto* cmd_prod = app.add_subcommand("product-integral", "iterated |zeta|^2 product integral");
    double prod_T = 0.0, prod_l = 1.0;
    int prod_k = 7;
    cmd_prod->add_option("--T", prod_T, "base height")->required();
    cmd_prod->add_option("--l", prod_l, "half-length parameter l");
    cmd_prod->add_option("--k", prod_k, "iteration depth");

    // ---- lemma1 ----
    auto* cmd_l1 = app.add_subcommand("lemma1", "window-sum main-term trend over a T ladder");
    std::string l1_ladder = "1e4,1e5,1e6";
    cmd_l1->add_option("--T-ladder", l1_ladder, "comma-separated T values")
        ->capture_default_str();

    // ---- lemma2 ----
    auto* cmd_l2 = app.add_subcommand("lemma2", "window sum over product integral at one T");
    double l2_T = 0.0, l2_l = 1.0;
    cmd_l2->add_option("--T", l2_T, "base height")->required();
    cmd_l2->add_option("--l", l2_l, "half-length parameter l");

    // ---- theorem1 ----
    auto* cmd_t1 = app.add_subcommand("theorem1", "scaled functional over a tau ladder");
    double t1_alpha = 1.0, t1_l = 1.0;
    std::string t1_ladder = "2,3,4";
    cmd_t1->add_option("--alpha", t1_alpha, "alpha parameter")->required();
    cmd_t1->add_option("--l", t1_l, "l parameter");
    cmd_t1->add_option("--tau-ladder", t1_ladder, "comma-separated tau values")
        ->capture_default_str();

    // ---- theorem2-scan ----
    auto* cmd_t2 = app.add_subcommand("theorem2-scan", "Fermat-rational gap scan");
    double t2_alpha = 0.0, t2_tau = 2.0;
    std::int64_t t2_bound = 10;
    int t2_nmax = 3;
    cmd_t2->add_option("--alpha", t2_alpha, "alpha parameter")->required();
    cmd_t2->add_option("--bound", t2_bound, "x,y,z enumeration bound (<= 50)");
    cmd_t2->add_option("--nmax", t2_nmax, "largest exponent n (<= 7)");
    cmd_t2->add_option("--tau", t2_tau, "tau for the finite-tau estimates");

    // ---- lemma3 ----
    auto* cmd_l3 = app.add_subcommand("lemma3", "factored window-sum identity at one tau");
    double l3_tau = 0.0, l3_l = 1.0;
    cmd_l3->add_option("--tau", l3_tau, "tau (T = tau^6)")->required();
    cmd_l3->add_option("--l", l3_l, "l parameter");

    // ---- theorem3 ----
    auto* cmd_t3 = app.add_subcommand("theorem3", "asymptotic equilibrium over a tau ladder");
    std::string t3_ladder = "10,12,15";
    cmd_t3->add_option("--tau-ladder", t3_ladder, "comma-separated tau values")
        ->capture_default_str();

    // ---- zeros ----
    auto* cmd_zeros = app.add_subcommand("zeros", "sign-change zeros in a height range");
    std::vector<double> zeros_range;
    cmd_zeros->add_option("--range", zeros_range, "height range A B")->expected(2)->required();

    // ---- n0 ----
    auto* cmd_n0 = app.add_subcommand("n0", "zero count below a height");
    double n0_T = 0.0;
    cmd_n0->add_option("--T", n0_T, "height")->required();

    // ---- titchmarsh ----
    auto* cmd_titch = app.add_subcommand("titchmarsh", "pair sum of squared Z at Gram points");
    std::int64_t ti_M = 100, ti_N = 0;
    cmd_titch->add_option("--M", ti_M, "start index (exclusive)")->capture_default_str();
    cmd_titch->add_option("--N", ti_N, "end index")->required();

    // ---- spectral ----
    auto* cmd_spec = app.add_subcommand("spectral", "local oscillator bank at a base height");
    double spec_x = 0.0;
    int spec_samples = 256;
    cmd_spec->add_option("--x", spec_x, "base height")->required();
    cmd_spec->add_option("--defect-samples", spec_samples,
                         "window sample count for the defect metadata")
        ->capture_default_str();

    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    const auto started = std::chrono::steady_clock::now();
    if (g.threads > 0) set_partition_count(g.threads);

    try {
        const PrecisionConfig cfg = precision_of(g);
        const LadderConfig lad = ladder_of(g);
        const IntegralBackend backend = backend_of(g);
        ExperimentReport rep;
        rep.backend = backend_name(backend);

        if (*cmd_gram) {
            rep.command = "gram";
            rep.columns = {"nu", "t", "theta_residual"};
            std::vector<GramPoint> pts;
            if (cmd_gram->count("--nu")) {
                rep.add_input("nu", static_cast<double>(gram_nu));
                pts.push_back(gram_point(gram_nu, cfg));
            } else if (cmd_gram->count("--range")) {
                rep.add_input("a", gram_range[0]);
                rep.add_input("b", gram_range[1]);
                pts = gram_points_in(gram_range[0], gram_range[1], cfg);
            } else {
                std::cerr << "gram: need --nu or --range\n";
                return 1;
            }
            for (const auto& p : pts)
                rep.add_row(std::to_string(p.nu),
                            {static_cast<double>(p.nu), p.t,
                             theta(CriticalHeight(p.t), cfg) - kPi * static_cast<double>(p.nu)});
            rep.add_meta("count", static_cast<double>(pts.size()));
        } else if (*cmd_sum) {
            rep.command = "sum";
            rep.add_input("T", sum_T);
            rep.add_input("window", sum_window);
            rep.add_input("psi", sum_psi);
            const WindowKind kind = sum_window == "h1"   ? WindowKind::H1
                                    : sum_window == "h2" ? WindowKind::H2
                                                         : WindowKind::H;
            const auto w = make_window(sum_T, kind, sum_psi);
            const double even = sum_even(w, cfg, backend);
            const double odd = sum_odd(w, cfg, backend);
            const double main = w.H * std::log(w.T / kTwoPi) / kTwoPi;
            rep.columns = {"T", "H", "sum_even", "sum_odd", "frozen_main_term",
                           "even_over_main", "odd_over_main"};
            rep.add_row("window", {w.T, w.H, even, odd, main, even / main, odd / main});
        } else if (*cmd_ladder) {
            rep.command = "ladder";
            rep.add_input("T", ladder_T);
            rep.add_input("k", static_cast<double>(ladder_k));
            const auto iter = reverse_iterates(ladder_T, ladder_k, lad);
            rep.columns = {"r", "height", "gap", "gap_ratio"};
            for (int r = 0; r <= iter.k; ++r) {
                const double gap = r >= 1 ? iter.heights[r] - iter.heights[r - 1] : 0.0;
                const double ratio =
                    r >= 2 ? gap / (iter.heights[r - 1] - iter.heights[r - 2]) : 0.0;
                rep.add_row(std::to_string(r),
                            {static_cast<double>(r), iter.heights[r], gap, ratio});
            }
        } else if (*cmd_prod) {
            rep.command = "product-integral";
            rep.add_input("T", prod_T);
            rep.add_input("l", prod_l);
            rep.add_input("k", static_cast<double>(prod_k));
            const auto result = product_integral(prod_T, prod_l, prod_k, lad);
            const double expected = 2.0 * prod_l * std::pow(std::log(prod_T), prod_k);
            rep.columns = {"value", "err_estimate", "evaluations", "expected_2l_lnkT", "ratio"};
            rep.add_row("integral", {result.value, result.err_estimate,
                                     static_cast<double>(result.evaluations), expected,
                                     result.value / expected});
        } else if (*cmd_l1) {
            rep.command = "lemma1";
            rep.add_input("T_ladder", l1_ladder);
            const auto table = convergence_table(parse_ladder(l1_ladder), [&](double T) {
                const auto est = lemma1_estimate(T, cfg, backend);
                return ConvergenceRow{T, est.sum, est.main_term, std::fabs(est.rel_dev)};
            });
            append_convergence(rep, table);
        } else if (*cmd_l2) {
            rep.command = "lemma2";
            rep.add_input("T", l2_T);
            rep.add_input("l", l2_l);
            const auto r = lemma2_ratio(l2_T, l2_l, lad);
            rep.columns = {"sum", "integral", "lhs_ratio", "predicted", "rel_gap"};
            rep.add_row("lemma2", {r.sum, r.integral.value, r.lhs_ratio, r.predicted, r.rel_gap});
        } else if (*cmd_t1) {
            rep.command = "theorem1";
            rep.add_input("alpha", t1_alpha);
            rep.add_input("l", t1_l);
            rep.add_input("tau_ladder", t1_ladder);
            const auto table = convergence_table(parse_ladder(t1_ladder), [&](double tau) {
                const auto est = theorem1_estimate(t1_alpha, t1_l, tau, lad);
                return ConvergenceRow{tau, est.value, est.target, est.rel_gap};
            });
            append_convergence(rep, table);
        } else if (*cmd_t2) {
            rep.command = "theorem2-scan";
            rep.add_input("alpha", t2_alpha);
            rep.add_input("bound", static_cast<double>(t2_bound));
            rep.add_input("nmax", static_cast<double>(t2_nmax));
            rep.add_input("tau", t2_tau);
            const auto records = zeta_condition_gap(t2_alpha, t2_bound, t2_nmax, t2_tau, lad);
            rep.columns = {"x", "y", "z", "n", "value", "exact_gap_positive",
                           "exact_target_gap", "estimate", "numeric_gap"};
            double min_gap = 0.0;
            bool all_positive = true;
            for (const auto& r : records) {
                min_gap = (rep.rows.empty() || r.exact_target_gap < min_gap)
                              ? r.exact_target_gap : min_gap;
                all_positive = all_positive && r.exact_gap_positive;
                std::ostringstream label;
                label << "(" << r.fr.x << "^" << r.fr.n << "+" << r.fr.y << "^" << r.fr.n
                      << ")/" << r.fr.z << "^" << r.fr.n;
                rep.add_row(label.str(),
                            {static_cast<double>(r.fr.x), static_cast<double>(r.fr.y),
                             static_cast<double>(r.fr.z), static_cast<double>(r.fr.n),
                             r.fr.value, r.exact_gap_positive ? 1.0 : 0.0, r.exact_target_gap,
                             r.estimate, r.numeric_gap});
            }
            rep.add_meta("all_exact_gaps_positive", all_positive ? "true" : "false");
            rep.add_meta("min_exact_gap", min_gap);
        } else if (*cmd_l3) {
            rep.command = "lemma3";
            rep.add_input("tau", l3_tau);
            rep.add_input("l", l3_l);
            const auto chk = lemma3_check(l3_tau, l3_l, lad);
            rep.columns = {"lhs", "short_integral", "product", "rhs", "ratio"};
            rep.add_row("lemma3", {chk.lhs, chk.short_integral, chk.product, chk.rhs, chk.ratio});
        } else if (*cmd_t3) {
            rep.command = "theorem3";
            rep.add_input("tau_ladder", t3_ladder);
            const auto table = convergence_table(parse_ladder(t3_ladder), [&](double tau) {
                const auto eq = theorem3_equilibrium(tau, lad);
                return ConvergenceRow{tau, eq.ratio, 1.0, std::fabs(eq.ratio - 1.0)};
            });
            append_convergence(rep, table);
        } else if (*cmd_zeros) {
            rep.command = "zeros";
            rep.add_input("a", zeros_range[0]);
            rep.add_input("b", zeros_range[1]);
            const auto zs = find_zeros(zeros_range[0], zeros_range[1], cfg);
            rep.columns = {"gamma", "bracket_width"};
            int idx = 0;
            for (const auto& z : zs) rep.add_row(std::to_string(idx++), {z.gamma, z.bracket_width});
            rep.add_meta("count", static_cast<double>(zs.size()));
            if (zs.size() >= 2) {
                const auto gaps = gap_report(zeros_range[0], zeros_range[1], cfg);
                rep.add_meta("max_gap", gaps.max_gap);
                rep.add_meta("max_gap_left", gaps.max_gap_left);
                rep.add_meta("ratio_sixth_power_curve", gaps.ratio_sixth_power);
            }
        } else if (*cmd_n0) {
            rep.command = "n0";
            rep.add_input("T", n0_T);
            const auto count = count_n0(n0_T, cfg);
            const double rvm = theta(CriticalHeight(std::max(n0_T, 7.5)), cfg) / kPi + 1.0;
            rep.columns = {"T", "count", "phase_density_estimate", "difference"};
            rep.add_row("count", {n0_T, static_cast<double>(count), rvm,
                                  static_cast<double>(count) - rvm});
        } else if (*cmd_titch) {
            rep.command = "titchmarsh";
            rep.add_input("M", static_cast<double>(ti_M));
            rep.add_input("N", static_cast<double>(ti_N));
            const double s = titchmarsh_pair_sum(ti_M, ti_N, cfg);
            const double norm = static_cast<double>(ti_N) *
                                std::pow(std::log(static_cast<double>(ti_N)), 4.0);
            rep.columns = {"M", "N", "pair_sum", "normalized_N_ln4N"};
            rep.add_row("sum", {static_cast<double>(ti_M), static_cast<double>(ti_N), s,
                                s / norm});
        } else if (*cmd_spec) {
            rep.command = "spectral";
            rep.add_input("x", spec_x);
            const auto d = spectral_decompose(CriticalHeight(spec_x));
            rep.columns = {"n", "amplitude", "frequency"};
            for (int n = 1; n <= d.truncation; ++n)
                rep.add_row(std::to_string(n),
                            {static_cast<double>(n), d.amplitudes[n - 1], d.frequencies[n - 1]});
            rep.add_meta("truncation", static_cast<double>(d.truncation));
            rep.add_meta("v_max", d.v_max);
            rep.add_meta("phase", d.phase);
            if (spec_samples > 0) {
                double worst = 0.0;
                for (int i = 0; i <= spec_samples; ++i) {
                    const double t = d.x + d.v_max * i / spec_samples;
                    worst = std::max(worst, std::fabs(spectral_eval(d, t) -
                                                      z_eval(CriticalHeight(t), cfg)));
                }
                rep.add_meta("max_window_defect", worst);
                rep.add_meta("defect_samples", static_cast<double>(spec_samples));
            }
        }

        stamp_and_write(rep, g, started);
        return 0;
    } catch (const tolerance_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const convergence_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 1;
    } catch (const std::range_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
