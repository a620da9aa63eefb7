#include "gtpac/figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gtpac/bounds_cbp.hpp"
#include "gtpac/bounds_coma.hpp"
#include "gtpac/bounds_dd.hpp"
#include "gtpac/csv.hpp"
#include "gtpac/designs.hpp"
#include "gtpac/errors.hpp"
#include "gtpac/montecarlo.hpp"
#include "gtpac/orderwise.hpp"
#include "gtpac/svg.hpp"

namespace gtpac {

namespace {

struct FigureContext {
    const FigureSpec& spec;
    std::ofstream csv_file;
    CsvWriter csv;
    long long dropped = 0;

    explicit FigureContext(const FigureSpec& s, const std::string& csv_path)
        : spec(s), csv_file(csv_path, std::ios::binary), csv(csv_file) {
        if (!csv_file) throw InvalidParameter("out_dir", "cannot write " + csv_path);
    }

    long long get_ll(const std::string& key, long long fallback) const {
        auto it = spec.overrides.find(key);
        return it == spec.overrides.end() ? fallback : std::stoll(it->second);
    }
    double get_d(const std::string& key, double fallback) const {
        auto it = spec.overrides.find(key);
        return it == spec.overrides.end() ? fallback : std::stod(it->second);
    }
    std::string get_s(const std::string& key, const std::string& fallback) const {
        auto it = spec.overrides.find(key);
        return it == spec.overrides.end() ? fallback : it->second;
    }
};

std::vector<double> log_space(double lo, double hi, int points) {
    std::vector<double> out;
    for (int i = 0; i < points; ++i)
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
    return out;
}

std::vector<double> lin_space(double lo, double hi, int points) {
    std::vector<double> out;
    for (int i = 0; i < points; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / (points - 1));
    return out;
}

Algorithm algo_from_name(const std::string& name) {
    if (name == "coma") return Algorithm::CoMa;
    if (name == "cbp") return Algorithm::CBP;
    if (name == "dd") return Algorithm::DD;
    throw InvalidParameter("algo", "expected coma, cbp, or dd");
}

/// Bound dispatch on direct budgets with the standard design parameters
/// (p = 1/k for CoMa/DD, s = s* for CBP).
BoundResult bound_at(Algorithm algo, long long n, long long k, double delta, long long budget) {
    const PacTarget target{0.0, delta};
    switch (algo) {
        case Algorithm::CoMa:
            return coma_sufficient_tests(n, k, 1.0 / static_cast<double>(k), target, budget);
        case Algorithm::CBP:
            return cbp_sufficient_tests(n, k, target, optimal_row_weight(n, k), 0.5, budget);
        case Algorithm::DD:
            return dd_sufficient_tests(n, k, 1.0 / static_cast<double>(k), target,
                                       DdGtildePolicy::Default, budget);
    }
    throw InvalidParameter("algo", "unknown algorithm");
}

// --- individual figures ----------------------------------------------------

void fig_minlp(FigureContext& ctx, SvgPlot& plot) {
    const double delta = ctx.get_d("delta", 0.01);
    const std::vector<std::pair<long long, long long>> populations = {
        {ctx.get_ll("n", 2500), ctx.get_ll("k", 50)}, {10000, 200}, {10000, 100}};
    const auto eps_grid = log_space(ctx.get_d("eps_lo", 1e-4), ctx.get_d("eps_hi", 0.1),
                                    static_cast<int>(ctx.get_ll("eps_points", 10)));

    ctx.csv.header({"n", "k", "eps", "delta", "m_fixed_point", "p_fixed_point", "g_fixed_point",
                    "m_grid", "p_grid", "g_grid"});
    for (const auto& [n, k] : populations) {
        std::vector<double> xs, fp_ms, grid_ms;
        for (double eps : eps_grid) {
            try {
                const ComaOptimum fp = coma_fixed_point_opt(n, k, eps, delta);
                ComaGridSpec grid_spec;
                grid_spec.p_min = 1e-4;
                grid_spec.p_max = 0.5;
                grid_spec.p_steps = 1200;
                grid_spec.g_cap = std::min<long long>(n - k, 4 * (fp.g_eps + 8));
                const ComaOptimum grid = coma_minlp_grid(n, k, eps, delta, grid_spec);
                ctx.csv.row({csv_format(n), csv_format(k), csv_format(eps), csv_format(delta),
                             csv_format(fp.m_s), csv_format(fp.p_opt), csv_format(fp.g_eps),
                             csv_format(grid.m_s), csv_format(grid.p_opt),
                             csv_format(grid.g_eps)});
                xs.push_back(eps);
                fp_ms.push_back(static_cast<double>(fp.m_s));
                grid_ms.push_back(static_cast<double>(grid.m_s));
            } catch (const Unsatisfiable& ex) {
                std::cerr << "warning: dropping point eps=" << eps << ": " << ex.what() << '\n';
                ++ctx.dropped;
            }
        }
        const std::string label = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
        plot.add_line("fixed point " + label, xs, fp_ms);
        plot.add_scatter("grid " + label, xs, grid_ms);
    }
    plot.set_log_x(true);
}

void fig_cbp_eta_approx(FigureContext& ctx, SvgPlot& plot) {
    const long long n = ctx.get_ll("n", 2500);
    const long long k = ctx.get_ll("k", 50);
    const long long g_approx = ctx.get_ll("g", 5);
    const auto log_inv_delta = lin_space(0.5, 7.0, 27);

    ctx.csv.header({"n", "k", "g", "variant", "delta", "log_inv_delta", "eta", "rho"});
    struct Variant {
        std::string name;
        long long g;
        CbpEtaRegime regime;
        bool exact;
    };
    const std::vector<Variant> variants = {
        {"exact g=0", 0, CbpEtaRegime::Auto, true},
        {"small-delta approx g=0", 0, CbpEtaRegime::SmallDelta, false},
        {"large-delta approx g=0", 0, CbpEtaRegime::LargeDelta, false},
        {"matched approx g=0", 0, CbpEtaRegime::SimilarDelta, false},
        {"exact g=" + std::to_string(g_approx), g_approx, CbpEtaRegime::Auto, true},
        {"approx g=" + std::to_string(g_approx), g_approx, CbpEtaRegime::ApproxRecovery, false},
    };
    const double s_star = optimal_row_weight(n, k);
    for (const auto& variant : variants) {
        std::vector<double> xs, ys;
        for (double lid : log_inv_delta) {
            const double delta = std::exp(-lid);
            double eta;
            if (variant.exact) {
                eta = cbp_params(n, k, variant.g, delta, s_star, 0.5).eta;
            } else {
                eta = cbp_eta_approx(n, k, variant.g, delta, variant.regime);
            }
            // Corollary form with the chosen eta.
            const CbpParams params = cbp_params(n, k, variant.g, delta, s_star, 0.5);
            const double ratio_pow =
                std::pow(static_cast<double>(n) / static_cast<double>(n - k), s_star);
            const double m_real = params.chi * static_cast<double>(k) * ratio_pow *
                                  params.expected_time_approx /
                                  (static_cast<double>(n - k) * (1.0 - eta));
            const double rho = m_real / static_cast<double>(n);
            ctx.csv.row({csv_format(n), csv_format(k), csv_format(variant.g), variant.name,
                         csv_format(delta), csv_format(lid), csv_format(eta), csv_format(rho)});
            xs.push_back(lid);
            ys.push_back(rho);
        }
        plot.add_line(variant.name, xs, ys, !variant.exact);
    }
}

void rate_figure(FigureContext& ctx, SvgPlot& plot, Algorithm algo) {
    const long long n = ctx.get_ll("n", 2500);
    const long long k = ctx.get_ll("k", 50);
    const long long trials = ctx.get_ll("trials", 1000);
    const std::uint64_t seed = static_cast<std::uint64_t>(ctx.get_ll("seed", 1));
    const bool fn_budget = algo == Algorithm::DD;
    const std::vector<long long> budgets =
        fn_budget ? std::vector<long long>{0, 2, 5} : std::vector<long long>{0, 5, 25};
    const auto log_inv_delta = lin_space(0.5, 7.0, 14);

    ctx.csv.header({"kind", "budget", "m", "trials", "failures", "p_hat", "ci_low", "ci_high",
                    "delta", "rho"});

    // Prior-art exact-recovery curve for comparison.
    {
        std::vector<double> xs, ys;
        for (double lid : log_inv_delta) {
            const double rho = baseline_bound(algo, n, k, std::exp(-lid)) / static_cast<double>(n);
            ctx.csv.row({"baseline", "0", "", "", "", "", "", "", csv_format(std::exp(-lid)),
                         csv_format(rho)});
            xs.push_back(lid);
            ys.push_back(rho);
        }
        plot.add_line("baseline exact", xs, ys, true);
    }

    for (long long budget : budgets) {
        std::vector<double> xs, ys;
        for (double lid : log_inv_delta) {
            const double delta = std::exp(-lid);
            try {
                const BoundResult bound = bound_at(algo, n, k, delta, budget);
                ctx.csv.row({"bound", csv_format(budget), csv_format(bound.m_s), "", "", "", "",
                             "", csv_format(delta), csv_format(bound.testing_rate())});
                xs.push_back(lid);
                ys.push_back(bound.testing_rate());
            } catch (const Unsatisfiable& ex) {
                std::cerr << "warning: dropping bound point: " << ex.what() << '\n';
                ++ctx.dropped;
            }
        }
        plot.add_line("bound budget=" + std::to_string(budget), xs, ys);
    }

    // Simulated rates: sweep m, plot the empirically achieved confidence.
    TrialPlan plan;
    plan.n = n;
    plan.k = k;
    plan.design = algo == Algorithm::CBP
                      ? DesignSpec{RowWeightDesign{row_weight_for_sampling(optimal_row_weight(n, k))}}
                      : DesignSpec{BernoulliDesign{1.0 / static_cast<double>(k)}};
    plan.decoder = algo;
    plan.trials = trials;
    plan.master_seed = seed;
    plan.threads = ctx.spec.threads;
    for (long long budget : {budgets.front(), budgets.back()}) {
        plan.budget = {fn_budget ? BudgetKind::FalseNegative : BudgetKind::FalsePositive, budget};
        const long long m_ref = bound_at(algo, n, k, 0.1, budget).m_s;
        std::vector<long long> m_grid;
        for (double f : lin_space(0.35, 1.1, 9))
            m_grid.push_back(std::max<long long>(1, static_cast<long long>(f * m_ref)));
        std::vector<double> xs, ys;
        for (const auto& point : empirical_rate_curve(plan, m_grid)) {
            const auto& s = point.summary;
            ctx.csv.row({"simulated", csv_format(budget), csv_format(point.m),
                         csv_format(s.trials), csv_format(s.failures), csv_format(s.p_hat),
                         csv_format(s.ci_low), csv_format(s.ci_high), "",
                         csv_format(static_cast<double>(point.m) / n)});
            if (s.p_hat > 0.0) {
                xs.push_back(std::log(1.0 / s.p_hat));
                ys.push_back(static_cast<double>(point.m) / n);
            }
        }
        plot.add_scatter("simulated budget=" + std::to_string(budget), xs, ys);
    }
}

void fig_approx_error(FigureContext& ctx, SvgPlot& plot) {
    const long long n = ctx.get_ll("n", 2500);
    const long long k = ctx.get_ll("k", 50);
    const std::vector<double> deltas = {0.3, 0.1, 0.03};
    ctx.csv.header({"algo", "delta", "budget", "m_s", "rho"});
    for (Algorithm algo : {Algorithm::CoMa, Algorithm::CBP, Algorithm::DD}) {
        const long long budget_max =
            algo == Algorithm::DD ? std::min<long long>(k - 1, 25) : ctx.get_ll("budget_max", 50);
        for (double delta : deltas) {
            std::vector<double> xs, ys;
            for (long long budget = 0; budget <= budget_max; ++budget) {
                const BoundResult bound = bound_at(algo, n, k, delta, budget);
                ctx.csv.row({to_string(algo), csv_format(delta), csv_format(budget),
                             csv_format(bound.m_s), csv_format(bound.testing_rate())});
                xs.push_back(static_cast<double>(budget));
                ys.push_back(bound.testing_rate());
            }
            plot.add_line(std::string(to_string(algo)) + " delta=" + csv_format(delta), xs, ys,
                          algo == Algorithm::DD);
        }
    }
}

void fig_delta_eps(FigureContext& ctx, SvgPlot& plot) {
    const long long n = ctx.get_ll("n", 2500);
    const long long k = ctx.get_ll("k", 50);
    const double p = ctx.get_d("p", 1.0 / static_cast<double>(k));
    const double s_star = optimal_row_weight(n, k);
    ctx.csv.header({"algo", "m", "budget", "delta"});

    const std::vector<std::pair<Algorithm, std::vector<long long>>> scans = {
        {Algorithm::CoMa, {ctx.get_ll("coma_m1", 1250), ctx.get_ll("coma_m2", 1400)}},
        {Algorithm::CBP, {ctx.get_ll("cbp_m1", 1500), ctx.get_ll("cbp_m2", 1800)}},
        {Algorithm::DD, {ctx.get_ll("dd_m1", 900), ctx.get_ll("dd_m2", 1100)}},
    };
    for (const auto& [algo, ms] : scans) {
        const long long budget_max = algo == Algorithm::DD ? std::min<long long>(k - 1, 10) : 10;
        for (long long m : ms) {
            std::vector<double> xs, ys;
            for (long long budget = 0; budget <= budget_max; ++budget) {
                double delta;
                switch (algo) {
                    case Algorithm::CoMa: delta = coma_implied_delta(n, k, p, budget, m); break;
                    case Algorithm::CBP: delta = cbp_implied_delta(n, k, budget, m, s_star); break;
                    case Algorithm::DD: delta = dd_implied_delta(n, k, p, budget, m); break;
                    default: delta = 1.0;
                }
                ctx.csv.row({to_string(algo), csv_format(m), csv_format(budget),
                             csv_format(delta)});
                if (delta > 0) {
                    xs.push_back(static_cast<double>(budget));
                    ys.push_back(delta);
                }
            }
            plot.add_line(std::string(to_string(algo)) + " m=" + std::to_string(m), xs, ys);
        }
    }
    plot.set_log_y(true);
}

void fig_eta_vs_p(FigureContext& ctx, SvgPlot& plot) {
    const long long n = ctx.get_ll("n", 2500);
    ctx.csv.header({"n", "k", "prevalence_pct", "g", "delta", "eta"});
    const std::vector<double> deltas = {1e-5, 0.05};
    const std::vector<long long> budgets = {0, 10};
    for (double delta : deltas) {
        for (long long g : budgets) {
            std::vector<double> xs, ys;
            for (long long k = 5; k <= n / 4; k += 5) {
                const double eta = cbp_params(n, k, g, delta, optimal_row_weight(n, k), 0.5).eta;
                const double prevalence = 100.0 * static_cast<double>(k) / n;
                ctx.csv.row({csv_format(n), csv_format(k), csv_format(prevalence), csv_format(g),
                             csv_format(delta), csv_format(eta)});
                xs.push_back(prevalence);
                ys.push_back(eta);
            }
            plot.add_line("delta=" + csv_format(delta) + ", g=" + std::to_string(g), xs, ys,
                          g > 0);
        }
    }
}

void fig_eta_surface(FigureContext& ctx, SvgPlot& plot) {
    const long long n = ctx.get_ll("n", 2500);
    ctx.csv.header({"prevalence_pct", "delta", "eta"});
    const auto deltas = log_space(1e-6, 0.5, 24);
    std::vector<double> prevalences;
    std::vector<std::vector<double>> z;
    for (long long k = 5; k <= n / 4; k += 25) prevalences.push_back(100.0 * k / n);
    for (double delta : deltas) {
        std::vector<double> row;
        for (long long k = 5; k <= n / 4; k += 25) {
            const double eta = cbp_params(n, k, 0, delta, optimal_row_weight(n, k), 0.5).eta;
            ctx.csv.row({csv_format(100.0 * k / n), csv_format(delta), csv_format(eta)});
            row.push_back(eta);
        }
        z.push_back(row);
    }
    plot.add_heatmap(prevalences, deltas, z);
    plot.set_log_y(true);
}

void fig_eta_vs_n(FigureContext& ctx, SvgPlot& plot) {
    const double delta = ctx.get_d("delta", 1e-5);
    ctx.csv.header({"n", "k", "prevalence_pct", "delta", "eta"});
    for (long long n : {500LL, 2500LL, 10000LL}) {
        std::vector<double> xs, ys;
        for (long long step = 1; step <= 50; ++step) {
            const long long k = std::max<long long>(1, n * step / 400);  // up to 12.5%
            const double eta = cbp_params(n, k, 0, delta, optimal_row_weight(n, k), 0.5).eta;
            const double prevalence = 100.0 * static_cast<double>(k) / n;
            ctx.csv.row({csv_format(n), csv_format(k), csv_format(prevalence), csv_format(delta),
                         csv_format(eta)});
            xs.push_back(prevalence);
            ys.push_back(eta);
        }
        plot.add_line("n=" + std::to_string(n), xs, ys);
    }
}

void fig_gtilde(FigureContext& ctx, SvgPlot& plot) {
    const double delta = ctx.get_d("delta", 0.01);
    ctx.csv.header({"n", "k", "d_eps", "m_s", "g_bar", "g_tilde"});
    std::vector<std::vector<double>> xs(3), ys(3);
    for (long long n = ctx.get_ll("n_lo", 100); n <= ctx.get_ll("n_hi", 500); n += 50) {
        for (long long k : {3LL, 5LL, 8LL}) {
            for (long long d = 0; d <= 2; ++d) {
                if (d >= k) continue;
                try {
                    const BoundResult bound =
                        dd_sufficient_tests(n, k, 1.0 / static_cast<double>(k), {0.0, delta},
                                            DdGtildePolicy::Grid, d);
                    const double g_tilde = bound.intermediates.at("g_tilde");
                    ctx.csv.row({csv_format(n), csv_format(k), csv_format(d),
                                 csv_format(bound.m_s), csv_format(bound.intermediates.at("g_bar")),
                                 csv_format(g_tilde)});
                    xs[static_cast<std::size_t>(d)].push_back(static_cast<double>(n));
                    ys[static_cast<std::size_t>(d)].push_back(g_tilde);
                } catch (const Unsatisfiable& ex) {
                    std::cerr << "warning: dropping point n=" << n << " k=" << k << ": "
                              << ex.what() << '\n';
                    ++ctx.dropped;
                }
            }
        }
    }
    for (long long d = 0; d <= 2; ++d)
        plot.add_scatter("d_eps=" + std::to_string(d), xs[static_cast<std::size_t>(d)],
                         ys[static_cast<std::size_t>(d)]);
}

void fig_surfaces(FigureContext& ctx, SvgPlot& plot) {
    const long long n = ctx.get_ll("n", 2500);
    const long long k = ctx.get_ll("k", 50);
    const Algorithm algo = algo_from_name(ctx.get_s("algo", "coma"));
    const long long budget_max =
        algo == Algorithm::DD ? std::min<long long>(k - 1, 50) : ctx.get_ll("budget_max", 50);
    ctx.csv.header({"budget", "one_minus_delta", "rho_R"});
    const auto confidences = lin_space(0.5, 0.999, 26);
    std::vector<double> budgets;
    for (long long b = 0; b <= budget_max; b += 2) budgets.push_back(static_cast<double>(b));
    std::vector<std::vector<double>> z;
    for (double conf : confidences) {
        std::vector<double> row;
        for (double budget : budgets) {
            try {
                const BoundResult bound =
                    bound_at(algo, n, k, 1.0 - conf, static_cast<long long>(budget));
                ctx.csv.row({csv_format(static_cast<long long>(budget)), csv_format(conf),
                             csv_format(bound.testing_rate())});
                row.push_back(bound.testing_rate());
            } catch (const Unsatisfiable& ex) {
                std::cerr << "warning: dropping surface point: " << ex.what() << '\n';
                ++ctx.dropped;
                row.push_back(std::nan(""));
            }
        }
        z.push_back(row);
    }
    plot.add_heatmap(budgets, confidences, z);
}

void fig_rate_vs_n(FigureContext& ctx, SvgPlot& plot) {
    const double delta = ctx.get_d("delta", 1e-3);
    const double coef = ctx.get_d("k_coef", 0.95);
    const long long budget_approx = ctx.get_ll("budget", 5);
    ctx.csv.header({"algo", "beta", "n", "k", "budget", "m_s", "rho"});
    const auto n_grid = log_space(ctx.get_d("n_lo", 1e3), ctx.get_d("n_hi", 1e6), 7);
    for (Algorithm algo : {Algorithm::CoMa, Algorithm::CBP, Algorithm::DD}) {
        for (double beta : {0.2, 0.35, 0.5}) {
            for (long long budget : {0LL, budget_approx}) {
                std::vector<double> xs, ys;
                for (double nd : n_grid) {
                    const long long n = static_cast<long long>(nd);
                    const long long k =
                        std::max<long long>(2, static_cast<long long>(std::llround(
                                                   coef * std::pow(nd, beta))));
                    const long long bud = std::min<long long>(budget, k - 1);
                    try {
                        const BoundResult bound = bound_at(algo, n, k, delta, bud);
                        ctx.csv.row({to_string(algo), csv_format(beta), csv_format(n),
                                     csv_format(k), csv_format(bud), csv_format(bound.m_s),
                                     csv_format(bound.testing_rate())});
                        xs.push_back(nd);
                        ys.push_back(bound.testing_rate());
                    } catch (const Unsatisfiable& ex) {
                        std::cerr << "warning: dropping point n=" << n << ": " << ex.what()
                                  << '\n';
                        ++ctx.dropped;
                    }
                }
                plot.add_line(std::string(to_string(algo)) + " beta=" + csv_format(beta) +
                                  " budget=" + std::to_string(budget),
                              xs, ys, budget > 0);
            }
        }
    }
    plot.set_log_x(true);
    plot.set_log_y(true);
}

}  // namespace

const std::vector<std::string>& figure_ids() {
    static const std::vector<std::string> ids = {
        "minlp",     "cbp_eta_approx", "coma",        "cbp",      "dd",
        "approx_error", "delta_eps",   "eta_vs_p",    "eta_surface", "eta_vs_n",
        "gtilde",    "surfaces",       "rate_vs_n"};
    return ids;
}

FigureOutput make_figure(const FigureSpec& spec) {
    struct Meta {
        const char* title;
        const char* x;
        const char* y;
    };
    Meta meta{"", "", ""};
    if (spec.id == "minlp") meta = {"Joint design optimization: grid search vs fixed point",
                                    "error tolerance", "sufficient tests"};
    else if (spec.id == "cbp_eta_approx")
        meta = {"CBP rate: exact vs approximated Chernoff parameter", "log(1/delta)",
                "testing rate"};
    else if (spec.id == "coma")
        meta = {"CoMa testing rate: bounds and simulation", "log(1/delta)", "testing rate"};
    else if (spec.id == "cbp")
        meta = {"CBP testing rate: bounds and simulation", "log(1/delta)", "testing rate"};
    else if (spec.id == "dd")
        meta = {"DD testing rate: bounds and simulation", "log(1/delta)", "testing rate"};
    else if (spec.id == "approx_error")
        meta = {"Testing rate vs error budget", "allowed errors", "testing rate"};
    else if (spec.id == "delta_eps")
        meta = {"Achievable confidence at fixed test counts", "allowed errors", "delta"};
    else if (spec.id == "eta_vs_p")
        meta = {"Chernoff parameter vs prevalence", "prevalence (%)", "eta"};
    else if (spec.id == "eta_surface")
        meta = {"Chernoff parameter surface", "prevalence (%)", "delta"};
    else if (spec.id == "eta_vs_n")
        meta = {"Chernoff parameter vs prevalence across population sizes", "prevalence (%)",
                "eta"};
    else if (spec.id == "gtilde")
        meta = {"Envelope offset from the grid program", "population size", "g_tilde"};
    else if (spec.id == "surfaces")
        meta = {"Sufficient testing rate surface", "error budget", "confidence"};
    else if (spec.id == "rate_vs_n")
        meta = {"Testing rate vs population size", "population size", "testing rate"};
    else
        throw InvalidParameter("id", "unknown figure id: " + spec.id);

    namespace fs = std::filesystem;
    fs::create_directories(spec.out_dir);
    const std::string base = (fs::path(spec.out_dir) / ("fig_" + spec.id)).string();
    FigureOutput output{base + ".csv", base + ".svg", 0};
    FigureContext ctx(spec, output.csv_path);

    SvgPlot plot(meta.title, meta.x, meta.y);
    if (spec.id == "minlp") fig_minlp(ctx, plot);
    else if (spec.id == "cbp_eta_approx") fig_cbp_eta_approx(ctx, plot);
    else if (spec.id == "coma") rate_figure(ctx, plot, Algorithm::CoMa);
    else if (spec.id == "cbp") rate_figure(ctx, plot, Algorithm::CBP);
    else if (spec.id == "dd") rate_figure(ctx, plot, Algorithm::DD);
    else if (spec.id == "approx_error") fig_approx_error(ctx, plot);
    else if (spec.id == "delta_eps") fig_delta_eps(ctx, plot);
    else if (spec.id == "eta_vs_p") fig_eta_vs_p(ctx, plot);
    else if (spec.id == "eta_surface") fig_eta_surface(ctx, plot);
    else if (spec.id == "eta_vs_n") fig_eta_vs_n(ctx, plot);
    else if (spec.id == "gtilde") fig_gtilde(ctx, plot);
    else if (spec.id == "surfaces") fig_surfaces(ctx, plot);
    else if (spec.id == "rate_vs_n") fig_rate_vs_n(ctx, plot);

    plot.save(output.svg_path);
    output.dropped_points = ctx.dropped;
    return output;
}

}  // namespace gtpac
