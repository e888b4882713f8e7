// packcol: packing chromatic number toolkit.
//
//   packcol formula N
//   packcol gen --gen SPEC [--format edgelist|dimacs] [--out FILE]
//   packcol exact (--graph FILE | --gen SPEC) [--k K]
//   packcol solve --algo greedy|ls|ga (--graph FILE | --gen SPEC) [--k K] [--seed S]
//                 [--maxit M] [--pop N] [--minimize]
//   packcol bench --suite FILE --out report.csv [--format csv|json] [--jobs N]

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "packcol/bench.hpp"
#include "packcol/exact.hpp"
#include "packcol/formulas.hpp"
#include "packcol/generators.hpp"
#include "packcol/heuristics.hpp"
#include "packcol/io.hpp"

using nlohmann::json;
using namespace packcol;

namespace {

struct GraphSource {
    std::string file;
    std::string spec;
    std::string format = "edgelist";

    void add_to(CLI::App *cmd) {
        auto *f = cmd->add_option("--graph", file, "Graph file");
        auto *g = cmd->add_option("--gen", spec, "Generator spec, e.g. cayley:12, cycle:15, petersen:12,2, ti");
        f->excludes(g);
        cmd->add_option("--format", format, "Graph file format")->check(CLI::IsMember({"edgelist", "dimacs"}));
    }

    Graph load() const {
        if (!file.empty())
            return parse_graph(file, parse_format_name(format));
        if (!spec.empty())
            return graph_from_spec(spec);
        throw CLI::ValidationError("one of --graph or --gen is required");
    }
};

json coloring_json(const Coloring &c) { return json(std::vector<int>(c.values().begin(), c.values().end())); }

int cmd_formula(std::uint64_t n) {
    auto f = factorize(n);
    json factors = json::array();
    for (const auto &pp : f.factors)
        factors.push_back({pp.prime, pp.exponent});
    json out{{"n", n},
             {"factorization", factors},
             {"diameter", diameter_formula(n)},
             {"independence_number", independence_formula(n)},
             {"packing_chromatic_number", packing_chromatic_formula(n)}};
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_gen(const GraphSource &src, const std::string &out_path) {
    Graph g = src.load();
    const auto fmt = parse_format_name(src.format);
    if (out_path.empty() || out_path == "-") {
        write_graph(std::cout, g, fmt);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw std::runtime_error("cannot write " + out_path);
        write_graph(out, g, fmt);
    }
    return 0;
}

int cmd_exact(const GraphSource &src, std::optional<int> k, const SearchBudget &budget) {
    DistanceMatrix d(src.load());
    json out;
    if (k) {
        auto r = decide_packing_k(d, *k, budget);
        out = {{"k", *k}, {"status", to_string(r.status)}, {"nodes", r.nodes}, {"seconds", r.seconds}};
        if (r.coloring)
            out["certificate"] = coloring_json(*r.coloring);
    } else {
        auto r = exact_packing_chromatic(d, budget);
        out = {{"status", to_string(r.status)},
               {"lower_bound", r.lower_bound},
               {"upper_bound", r.upper_bound},
               {"nodes", r.nodes},
               {"seconds", r.seconds}};
        if (r.status == SearchStatus::Sat) {
            out["value"] = r.value;
            out["certificate"] = coloring_json(*r.certificate);
        }
    }
    std::cout << out.dump() << '\n';
    return out["status"] == "budget_exhausted" ? 2 : 0;
}

struct SolveArgs {
    std::string algo = "ga";
    std::optional<int> k;
    std::uint64_t seed = 0;
    std::optional<int> maxit;
    std::optional<int> pop;
    int greedy_runs = 6;
    bool minimize = false;
    std::optional<int> upper_bound;
};

int cmd_solve(const GraphSource &src, const SolveArgs &a) {
    DistanceMatrix d(src.load());
    const Algorithm algo = parse_algorithm(a.algo);
    MinimizeOptions opts;
    opts.algorithm = algo;
    opts.seed = a.seed;
    opts.greedy_runs = a.greedy_runs;
    opts.upper_bound = a.upper_bound;
    if (a.maxit) {
        opts.ls.max_iterations = *a.maxit;
        opts.ga.max_iterations = *a.maxit;
    }
    if (a.pop)
        opts.ga.population_size = *a.pop;

    json out{{"algorithm", to_string(algo)}, {"seed", a.seed}};
    if (a.minimize || algo == Algorithm::Greedy) {
        RunResult r = minimize_colors(d, opts);
        out["k_achieved"] = r.k_achieved;
        out["solved"] = true;
        out["certificate"] = coloring_json(r.certificate);
        out["wall_ms"] = r.wall_ms;
        out["iterations"] = r.iterations;
        if (!r.greedy_values.empty())
            out["greedy_values"] = r.greedy_values;
    } else {
        if (!a.k)
            throw CLI::ValidationError("--k is required unless --minimize is given");
        const auto t0 = std::chrono::steady_clock::now();
        HeuristicOutcome o = [&] {
            if (algo == Algorithm::LocalSearch) {
                LsConfig cfg = opts.ls;
                cfg.k = *a.k;
                cfg.seed = a.seed;
                return local_search(d, cfg);
            }
            GaConfig cfg = opts.ga;
            cfg.k = *a.k;
            cfg.seed = a.seed;
            return genetic_algorithm(d, cfg);
        }();
        out["k"] = *a.k;
        out["solved"] = o.solved();
        out["violations"] = o.best_violations;
        out["fitness"] = o.best_fitness();
        out["k_achieved"] = o.solved() ? json(o.colors_used()) : json(nullptr);
        out["certificate"] = coloring_json(o.best_coloring);
        out["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        out["iterations"] = o.iterations_used;
    }
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_bench(const std::string &suite, const std::string &out_path, const std::string &format, int jobs) {
    auto cases = load_suite(suite);
    auto report = run_suite(cases, jobs);
    emit_report(report, parse_report_format(format), out_path);
    int failed = 0;
    for (const auto &s : report.summaries) {
        std::cerr << s.case_name << " [" << s.algorithm << "] best="
                  << (s.best ? std::to_string(*s.best) : "-") << " median_ms=" << s.median_time_ms;
        if (s.pass) {
            std::cerr << (*s.pass ? " PASS" : " FAIL");
            failed += !*s.pass;
        }
        std::cerr << '\n';
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Packing chromatic number solvers and closed forms"};
    app.require_subcommand(1);

    std::uint64_t formula_n = 0;
    auto *formula = app.add_subcommand("formula", "Closed forms for the unitary Cayley graph of Z_n");
    formula->add_option("n", formula_n, "Modulus (>= 2)")->required();

    GraphSource gen_src;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen", "Write a generated graph");
    gen_src.add_to(gen);
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    GraphSource exact_src;
    std::optional<int> exact_k;
    SearchBudget budget;
    auto *exact = app.add_subcommand("exact", "Exact packing chromatic number or k-decision");
    exact_src.add_to(exact);
    exact->add_option("--k", exact_k, "Decide only this color budget");
    exact->add_option("--node-limit", budget.node_limit, "Search node limit");
    exact->add_option("--time-limit", budget.time_limit_seconds, "Wall-clock limit in seconds");

    GraphSource solve_src;
    SolveArgs solve_args;
    auto *solve = app.add_subcommand("solve", "Run a heuristic");
    solve_src.add_to(solve);
    solve->add_option("--algo", solve_args.algo, "greedy|ls|ga")->check(CLI::IsMember({"greedy", "ls", "ga"}));
    solve->add_option("--k", solve_args.k, "Color budget");
    solve->add_option("--seed", solve_args.seed, "RNG seed");
    solve->add_option("--maxit", solve_args.maxit, "Maximum iterations");
    solve->add_option("--pop", solve_args.pop, "GA population size");
    solve->add_option("--greedy-runs", solve_args.greedy_runs, "Random orders for greedy");
    solve->add_option("--upper-bound", solve_args.upper_bound, "Starting k for --minimize");
    solve->add_flag("--minimize", solve_args.minimize, "Descend k while the solver succeeds");

    std::string suite, bench_out, bench_format = "csv";
    int jobs = 1;
    auto *bench = app.add_subcommand("bench", "Run a benchmark suite");
    bench->add_option("--suite", suite, "Suite JSON file")->required();
    bench->add_option("--out", bench_out, "Report path")->required();
    bench->add_option("--format", bench_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--jobs", jobs, "Worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*formula)
            return cmd_formula(formula_n);
        if (*gen)
            return cmd_gen(gen_src, gen_out);
        if (*exact)
            return cmd_exact(exact_src, exact_k, budget);
        if (*solve)
            return cmd_solve(solve_src, solve_args);
        if (*bench)
            return cmd_bench(suite, bench_out, bench_format, jobs);
    } catch (const CLI::Error &e) {
        return app.exit(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
