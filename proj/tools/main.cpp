#include "idea/harness.hpp"
#include "idea/landscape.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace idea;

std::string strategy_name(Strategy s) {
    return s == Strategy::best ? "best" : "rand";
}

Strategy strategy_from(const std::string& v) {
    if (v == "best") return Strategy::best;
    if (v == "rand") return Strategy::rand;
    throw std::invalid_argument("unknown strategy '" + v + "'");
}

std::string index_mode_name(IndexMode m) {
    switch (m) {
    case IndexMode::mutually_different: return "mutually_different";
    case IndexMode::allow_i1_eq_i2: return "allow_i1_eq_i2";
    case IndexMode::allow_i1_eq_i3: return "allow_i1_eq_i3";
    }
    return "?";
}

IndexMode index_mode_from(const std::string& v) {
    if (v == "mutually_different") return IndexMode::mutually_different;
    if (v == "allow_i1_eq_i2") return IndexMode::allow_i1_eq_i2;
    if (v == "allow_i1_eq_i3") return IndexMode::allow_i1_eq_i3;
    throw std::invalid_argument("unknown index_mode '" + v + "'");
}

double num(const std::string& v, const std::string& where) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + v + "' in " + where);
    }
}

long integer(const std::string& v, const std::string& where) {
    const double x = num(v, where);
    if (x != std::floor(x))
        throw std::invalid_argument("expected integer '" + v + "' in " + where);
    return static_cast<long>(x);
}

// Plain key = value sections; applies values over the resolved defaults.
// [de] configures the DE dynamics wherever they run (plain baseline and the
// inflationary loop), [idea] the restart machinery, [mbh] basin hopping.
void apply_params_file(const std::string& path, AlgoConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read params file " + path);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = path + ":" + std::to_string(lineno);
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string s;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::invalid_argument("unterminated section in " + where);
            section = s.substr(1, s.size() - 2);
            if (section != "de" && section != "idea" && section != "mbh")
                throw std::invalid_argument("unknown section [" + section + "] in " +
                                            where);
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key = value in " + where);
        const std::string key = s.substr(0, eq), val = s.substr(eq + 1);
        if (section == "de") {
            if (key == "f") cfg.de.f = cfg.idea.de.f = num(val, where);
            else if (key == "cr") cfg.de.cr = cfg.idea.de.cr = num(val, where);
            else if (key == "c") cfg.de.c = cfg.idea.de.c = num(val, where);
            else if (key == "v_max") cfg.de.v_max = cfg.idea.de.v_max = num(val, where);
            else if (key == "strategy")
                cfg.de.strategy = cfg.idea.de.strategy = strategy_from(val);
            else if (key == "index_mode")
                cfg.de.index_mode = cfg.idea.de.index_mode = index_mode_from(val);
            else if (key == "n_pop") cfg.de_n_pop = int(integer(val, where));
            else throw std::invalid_argument("unknown key '" + key + "' in " + where);
        } else if (section == "idea") {
            if (key == "n_pop") cfg.idea.n_pop = int(integer(val, where));
            else if (key == "tol_conv") cfg.idea.tol_conv = num(val, where);
            else if (key == "delta") cfg.idea.delta = num(val, where);
            else if (key == "delta_c") cfg.idea.delta_c = num(val, where);
            else if (key == "iun_max") cfg.idea.iun_max = integer(val, where);
            else if (key == "max_generations_per_epoch")
                cfg.idea.max_generations_per_epoch = integer(val, where);
            else if (key == "local_budget_per_dim")
                cfg.idea.local_budget_per_dim = integer(val, where);
            else if (key == "local_tol") cfg.idea.local_tol = num(val, where);
            else if (key == "restart_attempts")
                cfg.idea.restart_attempts = int(integer(val, where));
            else throw std::invalid_argument("unknown key '" + key + "' in " + where);
        } else if (section == "mbh") {
            if (key == "delta") cfg.mbh.delta = num(val, where);
            else if (key == "n_samples") cfg.mbh.n_samples = integer(val, where);
            else if (key == "local_budget_per_dim")
                cfg.mbh.local_budget_per_dim = integer(val, where);
            else if (key == "local_tol") cfg.mbh.local_tol = num(val, where);
            else throw std::invalid_argument("unknown key '" + key + "' in " + where);
        } else {
            throw std::invalid_argument("key outside any section in " + where);
        }
    }
}

std::string resolved_params(const AlgoConfig& cfg, const std::string& problem,
                            long budget, unsigned long long seed) {
    std::ostringstream o;
    o << "# resolved configuration\n"
      << "# problem = " << problem << "\n"
      << "# algorithm = " << to_string(cfg.kind) << "\n"
      << "# budget = " << budget << "\n"
      << "# seed = " << seed << "\n"
      << "[de]\n"
      << "f = " << cfg.de.f << "\n"
      << "cr = " << cfg.de.cr << "\n"
      << "c = " << cfg.de.c << "\n"
      << "v_max = " << cfg.de.v_max << "\n"
      << "strategy = " << strategy_name(cfg.de.strategy) << "\n"
      << "index_mode = " << index_mode_name(cfg.de.index_mode) << "\n"
      << "n_pop = " << cfg.de_n_pop << "\n"
      << "[idea]\n"
      << "n_pop = " << cfg.idea.n_pop << "\n"
      << "tol_conv = " << cfg.idea.tol_conv << "\n"
      << "delta = " << cfg.idea.delta << "\n"
      << "delta_c = " << cfg.idea.delta_c << "\n"
      << "iun_max = " << cfg.idea.iun_max << "\n"
      << "max_generations_per_epoch = " << cfg.idea.max_generations_per_epoch << "\n"
      << "local_budget_per_dim = " << cfg.idea.local_budget_per_dim << "\n"
      << "local_tol = " << cfg.idea.local_tol << "\n"
      << "restart_attempts = " << cfg.idea.restart_attempts << "\n"
      << "[mbh]\n"
      << "delta = " << cfg.mbh.delta << "\n"
      << "n_samples = " << cfg.mbh.n_samples << "\n"
      << "local_budget_per_dim = " << cfg.mbh.local_budget_per_dim << "\n"
      << "local_tol = " << cfg.mbh.local_tol << "\n";
    return o.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

AlgoConfig make_config(const Problem& p, const std::string& algo,
                       const std::string& params_path) {
    AlgoConfig cfg = AlgoConfig::for_problem(algo_from_string(algo), p);
    if (!params_path.empty()) apply_params_file(params_path, cfg);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Global-optimization toolkit: inflationary differential evolution, "
        "basin-hopping baselines, interplanetary trajectory benchmarks, a "
        "success-rate harness and funnel-landscape analysis.\n"
        "Exit codes: 0 success, 2 usage error, 3 runtime failure."};
    app.require_subcommand(1);

    int jobs = 1;
    app.add_option("--jobs", jobs, "parallel runs for bench commands")
        ->check(CLI::PositiveNumber);
    app.add_option_function<std::string>(
           "--data-dir",
           [](const std::string& v) { setenv("IDEA_DATA_DIR", v.c_str(), 1); },
           "directory holding ephemerides.txt and best_known.json "
           "(overrides the build-time default; also settable as IDEA_DATA_DIR)");

    // run -----------------------------------------------------------------
    auto* run = app.add_subcommand("run", "one optimizer run; writes trace CSV, "
                                          "archive JSONL and the resolved "
                                          "parameter set");
    std::string r_problem, r_algo = "idea", r_params, r_out = "run";
    int r_dim = 5;
    long r_budget = 0;
    unsigned long long r_seed = 0;
    run->add_option("--problem", r_problem, "problem name")->required();
    run->add_option("--dim", r_dim, "dimension for the analytic families");
    run->add_option("--algo", r_algo, "idea | de | mbh | mbh-gr");
    run->add_option("--budget", r_budget, "objective evaluation budget")
        ->required()
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", r_seed, "RNG seed");
    run->add_option("--params", r_params, "key = value parameter file")
        ->check(CLI::ExistingFile);
    run->add_option("--out", r_out, "output file prefix");
    run->callback([&] {
        const Problem p = make_problem(r_problem, r_dim);
        const AlgoConfig cfg = make_config(p, r_algo, r_params);
        const SingleRun res = run_single(p, cfg, r_budget, r_seed);
        write_trace_csv(r_out + "_trace.csv", res.report);
        write_archive_jsonl(r_out + "_archive.jsonl", res.archive);
        write_text(r_out + "_params.txt",
                   resolved_params(cfg, p.name, r_budget, r_seed));
        std::printf("problem: %s (d = %zu)\n", p.name.c_str(), p.domain.dim());
        std::printf("algorithm: %s\n", to_string(cfg.kind).c_str());
        std::printf("evaluations: %ld of %ld\n", res.report.evaluations, r_budget);
        std::printf("best f: %.10g\n", res.report.best_f);
        if (std::isfinite(p.f_best))
            std::printf("reference f: %.10g (delta %.3g)\n", p.f_best,
                        std::abs(res.report.best_f - p.f_best));
        std::printf("non-finite evaluations: %ld\n",
                    res.report.nonfinite_evaluations);
        std::printf("restarts: %ld bubble, %ld global\n",
                    res.report.restarts_bubble, res.report.restarts_global);
        std::printf("local searches: %ld\n", res.report.local_searches);
        std::printf("wrote %s_trace.csv, %s_archive.jsonl, %s_params.txt\n",
                    r_out.c_str(), r_out.c_str(), r_out.c_str());
    });

    // bench ---------------------------------------------------------------
    auto* bench = app.add_subcommand(
        "bench", "success-rate curve over evaluation budgets; deterministic "
                 "given the seed (rows in budget order, child seed per run)");
    std::string b_problem, b_algo = "idea", b_params, b_out = "bench.csv";
    int b_dim = 5, b_runs = 20;
    unsigned long long b_seed = 0;
    std::vector<long> b_budgets = {50000, 200000};
    bool b_timing = false, b_long = false;
    double b_ref = std::numeric_limits<double>::quiet_NaN();
    double b_tol = std::numeric_limits<double>::quiet_NaN();
    bench->add_option("--problem", b_problem, "problem name")->required();
    bench->add_option("--dim", b_dim, "dimension for the analytic families");
    bench->add_option("--algo", b_algo, "idea | de | mbh | mbh-gr");
    bench->add_option("--runs", b_runs, "runs per budget")
        ->check(CLI::PositiveNumber);
    bench->add_option("--budgets", b_budgets, "ascending evaluation budgets")
        ->delimiter(',');
    bench->add_option("--seed", b_seed, "master seed; run i uses child stream i");
    bench->add_option("--reference", b_ref,
                      "success reference value (default: the recorded best)");
    bench->add_option("--tol", b_tol,
                      "success tolerance on |reference - best| (default: "
                      "the recorded per-problem tolerance)");
    bench->add_option("--params", b_params, "key = value parameter file")
        ->check(CLI::ExistingFile);
    bench->add_option("--out", b_out, "output CSV path");
    bench->add_flag("--timing", b_timing,
                    "fill the wall_seconds column (breaks byte-for-byte "
                    "reproducibility of the CSV, which is otherwise exact)");
    bench->add_flag("--long-run", b_long,
                    "confirm a long experiment (more than 100 runs or "
                    "budgets beyond 3e5)");
    bench->callback([&] {
        long max_budget = 0;
        for (long n : b_budgets) max_budget = std::max(max_budget, n);
        if ((b_runs > 100 || max_budget > 300000) && !b_long)
            throw std::invalid_argument(
                "long experiment requested (runs > 100 or budget > 3e5); "
                "pass --long-run to confirm");
        const Problem p = make_problem(b_problem, b_dim);
        const AlgoConfig cfg = make_config(p, b_algo, b_params);
        const auto rows =
            performance_curve(p, cfg, b_budgets, b_runs, b_seed, jobs, b_ref, b_tol);
        write_bench_csv(b_out, rows, b_timing);
        for (const auto& r : rows)
            std::printf("N = %-8ld  j_s = %d/%d  p_s = %.3f  [%.3f, %.3f]\n",
                        r.budget, r.j_s, r.n, r.p_s, r.ci_low, r.ci_high);
        std::printf("wrote %s\n", b_out.c_str());
    });

    // harvest ---------------------------------------------------------------
    auto* harvest = app.add_subcommand(
        "harvest", "multistart local-search harvest of distinct local minima");
    std::string h_problem, h_out = "archive.jsonl";
    int h_dim = 5, h_starts = 100;
    long h_budget = 2500;
    unsigned long long h_seed = 0;
    harvest->add_option("--problem", h_problem, "problem name")->required();
    harvest->add_option("--dim", h_dim, "dimension for the analytic families");
    harvest->add_option("--starts", h_starts, "number of uniform starts")
        ->check(CLI::PositiveNumber);
    harvest->add_option("--budget", h_budget, "evaluations per local search")
        ->check(CLI::PositiveNumber);
    harvest->add_option("--seed", h_seed, "RNG seed");
    harvest->add_option("--out", h_out, "output archive path");
    harvest->callback([&] {
        const Problem p = make_problem(h_problem, h_dim);
        const Archive a = harvest_minima(p, h_starts, h_budget, h_seed);
        write_archive_jsonl(h_out, a);
        std::printf("%zu distinct minima from %d starts\n", a.size(), h_starts);
        std::printf("wrote %s\n", h_out.c_str());
    });

    // analyze ---------------------------------------------------------------
    auto* analyze = app.add_subcommand(
        "analyze", "group archived minima into objective levels and emit "
                   "intra-level/trans-level distance data");
    std::vector<std::string> a_archives;
    std::string a_problem, a_out = "landscape.csv";
    int a_dim = 5, a_levels = 8;
    std::vector<double> a_edges, a_best;
    analyze->add_option("--archive", a_archives, "archive JSONL files to merge")
        ->required()
        ->check(CLI::ExistingFile);
    analyze->add_option("--problem", a_problem,
                        "problem supplying the best-known point");
    analyze->add_option("--dim", a_dim, "dimension for the analytic families");
    analyze->add_option("--levels", a_levels, "equal-width level count")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--edges", a_edges,
                        "explicit ascending level edges (overrides --levels)")
        ->delimiter(',');
    analyze->add_option("--best-known", a_best,
                        "best-known point in unit-box coordinates (overrides "
                        "the problem's recorded one)")
        ->delimiter(',');
    analyze->add_option("--out", a_out, "output CSV path");
    analyze->callback([&] {
        Archive merged;
        for (const auto& path : a_archives) {
            const Archive a = read_archive_jsonl(path);
            for (const auto& r : a.records) {
                if (r.degenerate) continue;
                merge_minimum(merged, r);
            }
        }
        if (merged.empty()) throw std::runtime_error("merged archive is empty");
        std::vector<double> best = a_best;
        if (best.empty()) {
            if (a_problem.empty())
                throw std::invalid_argument(
                    "need --problem or --best-known for the lowest level");
            const Problem p = make_problem(a_problem, a_dim);
            if (p.x_best.empty())
                throw std::invalid_argument("problem '" + p.name +
                                            "' has no recorded best point; pass "
                                            "--best-known");
            best = normalize(p.x_best, p.domain);
        }
        std::vector<double> edges =
            a_edges.empty() ? default_edges(merged.records, a_levels) : a_edges;
        const LevelPartition part = assign_levels(merged.records, std::move(edges));
        const auto rows = level_distances(part, best);
        write_landscape_csv(a_out, rows);
        std::size_t used = 0;
        for (const auto& l : part.levels)
            if (!l.empty()) ++used;
        std::printf("%zu minima in %zu populated levels\n", part.total(), used);
        std::printf("wrote %s\n", a_out.c_str());
    });

    // sample-size -----------------------------------------------------------
    auto* ss = app.add_subcommand(
        "sample-size",
        "conservative binomial sample size n = ceil(0.25 chi2_1(alpha) / "
        "d_err^2). For (d_err, alpha) = (0.05, 0.05) this gives n = 385 and "
        "a residual error of about 0.031 at n = 1000. A widely quoted worked "
        "example states n = 175 and an error of 0.020857 for the same "
        "inputs; those numbers do not satisfy the formula, which this tool "
        "implements as printed.");
    double s_derr = 0.0, s_alpha = 0.05;
    ss->add_option("--derr", s_derr, "absolute error bound on p_s, in (0,1)")
        ->required();
    ss->add_option("--alpha", s_alpha, "significance level, in (0,1)");
    ss->callback([&] {
        const long n = required_sample_size(s_derr, s_alpha);
        std::printf("n = %ld\n", n);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
