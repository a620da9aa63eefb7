// gtpac: group-testing designs, decoders, sufficiency bounds, and Monte
// Carlo verification from the command line.
//
// Subcommands: bound, simulate, figure, sweep, selftest.
// Exit codes: 0 ok, 1 usage/validation error, 2 unsatisfiable/degenerate.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "gtpac/bounds_cbp.hpp"
#include "gtpac/bounds_coma.hpp"
#include "gtpac/bounds_dd.hpp"
#include "gtpac/csv.hpp"
#include "gtpac/decoders.hpp"
#include "gtpac/designs.hpp"
#include "gtpac/errors.hpp"
#include "gtpac/figures.hpp"
#include "gtpac/json_io.hpp"
#include "gtpac/montecarlo.hpp"
#include "gtpac/orderwise.hpp"
#include "gtpac/parallel.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnsatisfiable = 2;

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw gtpac::InvalidParameter("config", "cannot read " + path);
    json cfg;
    in >> cfg;
    if (!cfg.is_object()) throw gtpac::InvalidParameter("config", "expected a JSON object");
    return cfg;
}

/// Config-file layering: a key applies only when the flag was not given on
/// the command line (CLI wins).
template <typename T>
void cfg_override(const json& cfg, const CLI::App* sub, const std::string& name, T& var) {
    if (!cfg.contains(name)) return;
    if (sub->count("--" + name) > 0) return;
    var = cfg.at(name).get<T>();
}

gtpac::Algorithm parse_algo(const std::string& name) {
    if (name == "coma") return gtpac::Algorithm::CoMa;
    if (name == "cbp") return gtpac::Algorithm::CBP;
    if (name == "dd") return gtpac::Algorithm::DD;
    throw gtpac::InvalidParameter("algo", "expected coma, cbp, or dd");
}

std::vector<long long> parse_index_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoll(item));
    }
    return out;
}

struct BoundArgs {
    std::string algo = "coma";
    long long n = 0, k = 0;
    double eps = 0.0, delta = 0.0;
    double p = -1.0, s = -1.0, c = 0.5;
    std::string gtilde_policy = "default";
    long long budget = -1;
    bool optimize_p = false;
};

int run_bound(const BoundArgs& args) {
    using namespace gtpac;
    const Algorithm algo = parse_algo(args.algo);
    const PacTarget target{args.eps, args.delta};
    std::optional<long long> budget;
    if (args.budget >= 0) budget = args.budget;

    BoundResult result;
    switch (algo) {
        case Algorithm::CoMa: {
            if (args.optimize_p) {
                const ComaOptimum opt = coma_fixed_point_opt(args.n, args.k, args.eps, args.delta);
                result = coma_sufficient_tests(args.n, args.k, opt.p_opt, target, budget);
            } else {
                const double p = args.p > 0 ? args.p : 1.0 / static_cast<double>(args.k);
                result = coma_sufficient_tests(args.n, args.k, p, target, budget);
            }
            break;
        }
        case Algorithm::CBP: {
            const double s = args.s > 0 ? args.s : optimal_row_weight(args.n, args.k);
            result = cbp_sufficient_tests(args.n, args.k, target, s, args.c, budget);
            break;
        }
        case Algorithm::DD: {
            const double p = args.p > 0 ? args.p : 1.0 / static_cast<double>(args.k);
            const DdGtildePolicy policy = args.gtilde_policy == "grid" ? DdGtildePolicy::Grid
                                                                       : DdGtildePolicy::Default;
            result = dd_sufficient_tests(args.n, args.k, p, target, policy, budget);
            break;
        }
    }
    json out = to_json(result);
    out["algo"] = args.algo;
    out["k"] = args.k;
    std::cout << out.dump(2) << '\n';
    return kExitOk;
}

struct SimulateArgs {
    long long n = 0, k = 0;
    std::string defectives;  // comma list; empty means random per trial
    std::string design = "bernoulli";
    double p = -1.0;
    long long s = -1;
    std::string decoder = "coma";
    long long m = 0;
    std::string budget_kind = "fp";
    long long budget = 0;
    long long trials = 1000;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string out;
    std::string hist_out;
};

int run_simulate(const SimulateArgs& args) {
    using namespace gtpac;
    TrialPlan plan;
    plan.n = args.n;
    plan.k = args.k;
    if (!args.defectives.empty()) {
        plan.fixed_defectives = parse_index_list(args.defectives);
        plan.k = static_cast<long long>(plan.fixed_defectives->size());
    }
    if (args.design == "bernoulli") {
        plan.design = BernoulliDesign{args.p > 0 ? args.p : 1.0 / static_cast<double>(plan.k)};
    } else if (args.design == "row_weight") {
        const long long s =
            args.s > 0 ? args.s : row_weight_for_sampling(optimal_row_weight(args.n, plan.k));
        plan.design = RowWeightDesign{s};
    } else {
        throw InvalidParameter("design", "expected bernoulli or row_weight");
    }
    plan.decoder = parse_algo(args.decoder);
    plan.m = args.m;
    if (args.budget_kind != "fp" && args.budget_kind != "fn")
        throw InvalidParameter("budget-kind", "expected fp or fn");
    plan.budget = {args.budget_kind == "fp" ? BudgetKind::FalsePositive
                                            : BudgetKind::FalseNegative,
                   args.budget};
    plan.trials = args.trials;
    plan.master_seed = args.seed;
    plan.threads = args.threads;

    const SimulationSummary summary = run_trials(plan);

    std::string design_text;
    if (const auto* b = std::get_if<BernoulliDesign>(&plan.design))
        design_text = "bernoulli:" + csv_format(b->p);
    else
        design_text = "row_weight:" + csv_format(std::get<RowWeightDesign>(plan.design).s);

    std::ostringstream buffer;
    CsvWriter csv(buffer);
    csv.header({"m", "trials", "failures", "p_hat", "ci_low", "ci_high", "budget_kind", "budget",
                "decoder", "design", "seed"});
    csv.row({csv_format(plan.m), csv_format(summary.trials), csv_format(summary.failures),
             csv_format(summary.p_hat), csv_format(summary.ci_low), csv_format(summary.ci_high),
             args.budget_kind, csv_format(plan.budget.count), args.decoder, design_text,
             csv_format(static_cast<long long>(plan.master_seed))});
    if (args.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(args.out, std::ios::binary);
        if (!file) throw InvalidParameter("out", "cannot write " + args.out);
        file << buffer.str();
    }
    if (!args.hist_out.empty()) {
        std::ofstream file(args.hist_out, std::ios::binary);
        if (!file) throw InvalidParameter("hist-out", "cannot write " + args.hist_out);
        CsvWriter hist(file);
        hist.header({"error_count", "trials"});
        for (const auto& [count, freq] : summary.error_histogram)
            hist.row({csv_format(count), csv_format(freq)});
    }
    return kExitOk;
}

struct SweepVar {
    std::string name;
    std::vector<double> values;
};

SweepVar parse_sweep_var(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw gtpac::InvalidParameter("var", "expected name=start:stop:steps");
    SweepVar var;
    var.name = text.substr(0, eq);
    std::string range = text.substr(eq + 1);
    bool log_scale = false;
    if (range.rfind("log:", 0) == 0) {
        log_scale = true;
        range = range.substr(4);
    }
    std::vector<std::string> parts;
    std::stringstream ss(range);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3)
        throw gtpac::InvalidParameter("var", "expected name=start:stop:steps");
    const double start = std::stod(parts[0]);
    const double stop = std::stod(parts[1]);
    const long long steps = std::stoll(parts[2]);
    if (steps < 0) throw gtpac::InvalidParameter("var", "steps must be nonnegative");
    for (long long i = 0; i < steps; ++i) {
        if (steps == 1) {
            var.values.push_back(start);
        } else if (log_scale) {
            var.values.push_back(start * std::pow(stop / start,
                                                  static_cast<double>(i) / (steps - 1)));
        } else {
            var.values.push_back(start + (stop - start) * static_cast<double>(i) / (steps - 1));
        }
    }
    return var;
}

struct SweepArgs {
    std::string algo = "coma";
    std::vector<std::string> vars;
    std::vector<std::string> fixes;
    std::vector<std::string> quantities;
    std::string out;
};

int run_sweep(const SweepArgs& args) {
    using namespace gtpac;
    const Algorithm algo = parse_algo(args.algo);

    std::map<std::string, double> point{{"n", 2500},   {"k", 50},  {"eps", 0.0},
                                        {"delta", 0.01}, {"p", -1}, {"s", -1},
                                        {"c", 0.5},     {"beta", -1}, {"k_coef", 0.95},
                                        {"budget", -1}};
    for (const auto& fix : args.fixes) {
        const auto eq = fix.find('=');
        if (eq == std::string::npos) throw InvalidParameter("fix", "expected name=value");
        point[fix.substr(0, eq)] = std::stod(fix.substr(eq + 1));
    }
    std::vector<SweepVar> vars;
    for (const auto& v : args.vars) vars.push_back(parse_sweep_var(v));
    std::vector<std::string> quantities = args.quantities;
    if (quantities.empty()) quantities = {"m_s", "rho"};

    std::ostringstream buffer;
    CsvWriter csv(buffer);
    csv.header({"algo", "n", "k", "eps", "delta", "p", "s", "c", "beta", "quantity", "value"});

    long long total = vars.empty() ? 1 : 1;
    for (const auto& v : vars) total *= static_cast<long long>(v.values.size());

    for (long long index = 0; index < total; ++index) {
        auto local = point;
        long long residual = index;
        for (const auto& v : vars) {
            const std::size_t size = v.values.size();
            local[v.name] = v.values[static_cast<std::size_t>(residual % size)];
            residual /= static_cast<long long>(size);
        }
        long long n = static_cast<long long>(std::llround(local["n"]));
        long long k = static_cast<long long>(std::llround(local["k"]));
        if (local["beta"] > 0)
            k = std::max<long long>(2, static_cast<long long>(std::llround(
                                           local["k_coef"] * std::pow(local["n"], local["beta"]))));
        const PacTarget target{local["eps"], local["delta"]};
        std::optional<long long> budget;
        if (local["budget"] >= 0) budget = static_cast<long long>(std::llround(local["budget"]));

        BoundResult result;
        double p_used = local["p"] > 0 ? local["p"] : 1.0 / static_cast<double>(k);
        double s_used = local["s"] > 0 ? local["s"] : optimal_row_weight(n, k);
        switch (algo) {
            case Algorithm::CoMa:
                result = coma_sufficient_tests(n, k, p_used, target, budget);
                break;
            case Algorithm::CBP:
                result = cbp_sufficient_tests(n, k, target, s_used, local["c"], budget);
                break;
            case Algorithm::DD:
                result = dd_sufficient_tests(n, k, p_used, target, DdGtildePolicy::Default,
                                             budget);
                break;
        }
        for (const auto& quantity : quantities) {
            double value;
            if (quantity == "m_s") value = static_cast<double>(result.m_s);
            else if (quantity == "rho") value = result.testing_rate();
            else if (result.intermediates.count(quantity)) value = result.intermediates.at(quantity);
            else throw InvalidParameter("quantity", "unknown quantity: " + quantity);
            csv.row({args.algo, csv_format(n), csv_format(k), csv_format(local["eps"]),
                     csv_format(local["delta"]), csv_format(p_used), csv_format(s_used),
                     csv_format(local["c"]), csv_format(local["beta"]), quantity,
                     csv_format(value)});
        }
    }

    if (args.out.empty()) {
        std::cout << buffer.str();
    } else {
        std::ofstream file(args.out, std::ios::binary);
        if (!file) throw InvalidParameter("out", "cannot write " + args.out);
        file << buffer.str();
    }
    return kExitOk;
}

int run_selftest() {
    using namespace gtpac;
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
        if (!ok) ++failures;
    };

    {
        const auto a = sample_bernoulli(64, 32, 0.1, RngStream(7, 3));
        const auto b = sample_bernoulli(64, 32, 0.1, RngStream(7, 3));
        check(a == b, "sampling is reproducible");
    }
    {
        bool equal = true, supersets = true, subsets = true;
        for (std::uint64_t trial = 0; trial < 50 && (equal && supersets && subsets); ++trial) {
            const long long n = 24;
            GroundTruth gt{n, {2, 9, 17}};
            const auto matrix = sample_bernoulli(n, 30, 0.15, RngStream(13, trial));
            const auto y = generate_outcomes(matrix, gt);
            const auto coma = decode_coma(matrix, y, gt);
            const auto cbp = decode_cbp(matrix, y, gt);
            const auto dd = decode_dd(matrix, y, gt);
            equal = equal && coma.estimate == cbp.estimate;
            supersets = supersets && coma.fn == 0;
            subsets = subsets && dd.fp == 0;
        }
        check(equal, "column and row decoding agree");
        check(supersets, "column decoding never misses a defective");
        check(subsets, "definite-defective decoding never false-alarms");
    }
    {
        const BoundResult bound = coma_sufficient_tests(2500, 50, 0.02, {0.0, 0.09});
        check(bound.m_s >= 1385 && bound.m_s <= 1415, "reference bound value");
    }
    {
        const GroundTruth gt{10, {1, 4}};
        const auto round_trip = ground_truth_from_json(to_json(gt));
        check(round_trip.n == gt.n && round_trip.defectives == gt.defectives,
              "JSON round trip");
    }
    return failures == 0 ? kExitOk : kExitUnsatisfiable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Group-testing sufficiency bounds and Monte Carlo laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (flags take precedence)");

    BoundArgs bound_args;
    auto* bound = app.add_subcommand("bound", "Evaluate a sufficiency bound");
    bound->add_option("--algo", bound_args.algo, "coma|cbp|dd")->required();
    bound->add_option("--n", bound_args.n, "population size")->required();
    bound->add_option("--k", bound_args.k, "defective count")->required();
    bound->add_option("--eps", bound_args.eps, "error tolerance")->required();
    bound->add_option("--delta", bound_args.delta, "failure probability")->required();
    bound->add_option("--p", bound_args.p, "Bernoulli participation probability");
    bound->add_option("--s", bound_args.s, "row weight (CBP)");
    bound->add_option("--c", bound_args.c, "CBP failure split in (0,1)");
    bound->add_option("--gtilde-policy", bound_args.gtilde_policy, "default|grid (DD)");
    bound->add_option("--budget", bound_args.budget, "direct error budget (overrides eps)");
    bound->add_flag("--optimize-p", bound_args.optimize_p, "CoMa: optimize p jointly");

    SimulateArgs sim_args;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo failure-rate estimate");
    simulate->add_option("--n", sim_args.n, "population size")->required();
    simulate->add_option("--k", sim_args.k, "defective count (random set per trial)");
    simulate->add_option("--defectives", sim_args.defectives, "fixed defective set, e.g. 1,5,9");
    simulate->add_option("--design", sim_args.design, "bernoulli|row_weight");
    simulate->add_option("--p", sim_args.p, "Bernoulli participation probability");
    simulate->add_option("--s", sim_args.s, "items per test (row_weight)");
    simulate->add_option("--decoder", sim_args.decoder, "coma|cbp|dd");
    simulate->add_option("--m", sim_args.m, "number of tests")->required();
    simulate->add_option("--budget-kind", sim_args.budget_kind, "fp|fn");
    simulate->add_option("--budget", sim_args.budget, "allowed errors");
    simulate->add_option("--trials", sim_args.trials, "Monte Carlo trials");
    simulate->add_option("--seed", sim_args.seed, "master seed");
    simulate->add_option("--threads", sim_args.threads, "worker threads (0 = auto)");
    simulate->add_option("--out", sim_args.out, "output CSV path (default stdout)");
    simulate->add_option("--hist-out", sim_args.hist_out, "error-count histogram CSV path");

    gtpac::FigureSpec figure_spec;
    std::vector<std::string> figure_sets;
    auto* figure = app.add_subcommand("figure", "Emit a reproducible CSV + SVG figure");
    figure->add_option("--id", figure_spec.id,
                       "figure id (see README)")->required();
    figure->add_option("--out-dir", figure_spec.out_dir, "output directory");
    figure->add_option("--set", figure_sets, "override, e.g. --set n=5000")->take_all();
    figure->add_option("--threads", figure_spec.threads, "worker threads (0 = auto)");

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Cartesian parameter sweep to long CSV");
    sweep->add_option("--algo", sweep_args.algo, "coma|cbp|dd")->required();
    sweep->add_option("--var", sweep_args.vars, "name=start:stop:steps or name=log:a:b:steps")
        ->take_all();
    sweep->add_option("--fix", sweep_args.fixes, "name=value")->take_all();
    sweep->add_option("--quantity", sweep_args.quantities, "m_s|rho|<intermediate>")->take_all();
    sweep->add_option("--out", sweep_args.out, "output CSV path (default stdout)");

    auto* selftest = app.add_subcommand("selftest", "Run quick internal checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const json cfg = load_config(config_path);
        if (bound->parsed()) {
            cfg_override(cfg, bound, "p", bound_args.p);
            cfg_override(cfg, bound, "c", bound_args.c);
            cfg_override(cfg, bound, "gtilde-policy", bound_args.gtilde_policy);
            return run_bound(bound_args);
        }
        if (simulate->parsed()) {
            cfg_override(cfg, simulate, "trials", sim_args.trials);
            cfg_override(cfg, simulate, "seed", sim_args.seed);
            cfg_override(cfg, simulate, "threads", sim_args.threads);
            return run_simulate(sim_args);
        }
        if (figure->parsed()) {
            cfg_override(cfg, figure, "out-dir", figure_spec.out_dir);
            cfg_override(cfg, figure, "threads", figure_spec.threads);
            for (const auto& kv : figure_sets) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw gtpac::InvalidParameter("set", "expected key=value");
                figure_spec.overrides[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            const auto output = gtpac::make_figure(figure_spec);
            std::cout << output.csv_path << '\n' << output.svg_path << '\n';
            return output.dropped_points > 0 ? kExitUnsatisfiable : kExitOk;
        }
        if (sweep->parsed()) return run_sweep(sweep_args);
        if (selftest->parsed()) return run_selftest();
    } catch (const gtpac::Unsatisfiable& e) {
        std::cerr << "unsatisfiable: " << e.what() << '\n';
        return kExitUnsatisfiable;
    } catch (const gtpac::NonConvergence& e) {
        std::cerr << "no convergence: " << e.what() << '\n';
        return kExitUnsatisfiable;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
