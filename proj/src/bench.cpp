#include "packcol/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "packcol/generators.hpp"

namespace packcol {

using nlohmann::json;

namespace {

const std::vector<std::string> kAlgorithms{"greedy", "ls", "ga", "exact"};
const std::vector<std::string> kSources{"paper-table", "formula", "oracle"};

template <typename T>
void read_opt(const json &j, const char *key, T &out) {
    if (j.contains(key))
        out = j.at(key).get<T>();
}

BenchCase case_from_json(const json &j) {
    BenchCase c;
    c.name = j.at("name").get<std::string>();
    c.graph = j.at("graph").get<std::string>();
    if (j.contains("expected") && !j.at("expected").is_null()) {
        const auto &e = j.at("expected");
        Expectation ex;
        ex.value = e.at("value").get<int>();
        const auto kind = e.value("kind", std::string("exact"));
        if (kind != "exact" && kind != "bound")
            throw std::invalid_argument("case '" + c.name + "': expected.kind must be exact|bound");
        ex.kind = kind == "exact" ? ExpectationKind::Exact : ExpectationKind::Bound;
        ex.source = e.at("source").get<std::string>();
        if (std::find(kSources.begin(), kSources.end(), ex.source) == kSources.end())
            throw std::invalid_argument("case '" + c.name +
                                        "': expected.source must be paper-table|formula|oracle");
        c.expected = ex;
    }
    c.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    for (const auto &a : c.algorithms)
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end())
            throw std::invalid_argument("case '" + c.name + "': unknown algorithm '" + a + "'");
    read_opt(j, "seeds", c.seeds);
    if (c.seeds.empty())
        throw std::invalid_argument("case '" + c.name + "': seeds must not be empty");
    if (j.contains("k"))
        c.k = j.at("k").get<int>();
    if (j.contains("upper_bound"))
        c.upper_bound = j.at("upper_bound").get<int>();
    read_opt(j, "greedy_runs", c.greedy_runs);
    if (j.contains("ls"))
        read_opt(j.at("ls"), "max_iterations", c.ls.max_iterations);
    if (j.contains("ga")) {
        const auto &g = j.at("ga");
        read_opt(g, "max_iterations", c.ga.max_iterations);
        read_opt(g, "population_size", c.ga.population_size);
        read_opt(g, "crossover1_offspring", c.ga.crossover1_offspring);
        read_opt(g, "crossover2_offspring", c.ga.crossover2_offspring);
        read_opt(g, "mutants", c.ga.mutants);
    }
    if (j.contains("budget")) {
        read_opt(j.at("budget"), "node_limit", c.budget.node_limit);
        read_opt(j.at("budget"), "time_limit_seconds", c.budget.time_limit_seconds);
    }
    return c;
}

BenchRow new_row(const std::string &case_name, const std::string &algorithm, std::uint64_t seed) {
    BenchRow row;
    row.case_name = case_name;
    row.algorithm = algorithm;
    row.seed = seed;
    return row;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void attach(BenchRow &row, const DistanceMatrix &d, const Coloring &cert) {
    if (!is_packing_coloring(d, cert)) {
        row.status = "error";
        row.solved = false;
        row.message = "certificate failed validation";
        return;
    }
    row.certificate.assign(cert.values().begin(), cert.values().end());
    row.k_achieved = cert.colors_used();
    row.solved = true;
    row.status = "ok";
}

BenchRow run_heuristic(const BenchCase &c, const DistanceMatrix &d, Algorithm algo,
                       std::uint64_t seed) {
    BenchRow row = new_row(c.name, to_string(algo), seed);
    const auto t0 = std::chrono::steady_clock::now();
    if (!c.k) {
        MinimizeOptions opts;
        opts.algorithm = algo;
        opts.seed = seed;
        opts.ls = c.ls;
        opts.ga = c.ga;
        opts.greedy_runs = c.greedy_runs;
        opts.upper_bound = c.upper_bound;
        RunResult r = minimize_colors(d, opts);
        attach(row, d, r.certificate);
    } else if (algo == Algorithm::Greedy) {
        auto runs = greedy_runs(d, c.greedy_runs, seed);
        auto best = std::min_element(runs.begin(), runs.end(), [](const Coloring &a, const Coloring &b) {
            return a.colors_used() < b.colors_used();
        });
        Coloring cert = compact(*best);
        if (cert.colors_used() <= *c.k)
            attach(row, d, cert);
        else
            row.status = "unsolved";
    } else {
        HeuristicOutcome o = [&] {
            if (algo == Algorithm::LocalSearch) {
                LsConfig cfg = c.ls;
                cfg.k = *c.k;
                cfg.seed = seed;
                return local_search(d, cfg);
            }
            GaConfig cfg = c.ga;
            cfg.k = *c.k;
            cfg.seed = seed;
            return genetic_algorithm(d, cfg);
        }();
        if (o.solved())
            attach(row, d, compact(o.best_coloring));
        else
            row.status = "unsolved";
    }
    row.time_ms = elapsed_ms(t0);
    return row;
}

BenchRow run_exact(const BenchCase &c, const DistanceMatrix &d) {
    BenchRow row = new_row(c.name, "exact", 0);
    const auto t0 = std::chrono::steady_clock::now();
    ExactResult r = exact_packing_chromatic(d, c.budget);
    if (r.status == SearchStatus::Sat) {
        attach(row, d, *r.certificate);
    } else {
        row.status = "budget";
        row.message = "bounds [" + std::to_string(r.lower_bound) + ", " +
                      std::to_string(r.upper_bound) + "]";
    }
    row.time_ms = elapsed_ms(t0);
    return row;
}

std::vector<BenchRow> run_case(const BenchCase &c) {
    std::vector<BenchRow> rows;
    std::optional<DistanceMatrix> d;
    try {
        d.emplace(graph_from_spec(c.graph));
    } catch (const std::exception &e) {
        BenchRow row = new_row(c.name, c.algorithms.empty() ? "-" : c.algorithms.front(), 0);
        row.status = "error";
        row.message = e.what();
        rows.push_back(std::move(row));
        return rows;
    }
    for (const auto &name : c.algorithms) {
        if (name == "exact") {
            rows.push_back(run_exact(c, *d));
            continue;
        }
        const Algorithm algo = parse_algorithm(name);
        for (auto seed : c.seeds) {
            try {
                rows.push_back(run_heuristic(c, *d, algo, seed));
            } catch (const std::exception &e) {
                BenchRow row = new_row(c.name, name, seed);
                row.status = "error";
                row.message = e.what();
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

double median(std::vector<double> xs) {
    if (xs.empty())
        return 0.0;
    std::sort(xs.begin(), xs.end());
    const auto m = xs.size() / 2;
    return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2.0;
}

std::vector<BenchSummary> summarize(const BenchCase &c, const std::vector<BenchRow> &rows) {
    std::vector<BenchSummary> out;
    for (const auto &name : c.algorithms) {
        BenchSummary s;
        s.case_name = c.name;
        s.algorithm = name;
        std::vector<double> times;
        bool errored = false;
        for (const auto &r : rows) {
            if (r.algorithm != name)
                continue;
            times.push_back(r.time_ms);
            errored = errored || r.status == "error";
            if (r.status == "ok" && (!s.best || *r.k_achieved < *s.best))
                s.best = r.k_achieved;
        }
        s.median_time_ms = median(times);
        if (c.expected) {
            const auto &e = *c.expected;
            s.pass = !errored && s.best &&
                     (e.kind == ExpectationKind::Exact ? *s.best == e.value : *s.best <= e.value);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

} // namespace

std::vector<BenchCase> suite_from_json(const json &j) {
    if (!j.is_array())
        throw std::invalid_argument("suite must be a JSON array of cases");
    std::vector<BenchCase> out;
    for (const auto &c : j)
        out.push_back(case_from_json(c));
    return out;
}

std::vector<BenchCase> load_suite(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open suite file " + path.string());
    return suite_from_json(json::parse(in));
}

BenchReport run_suite(const std::vector<BenchCase> &suite, int jobs) {
    std::vector<std::vector<BenchRow>> per_case(suite.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < suite.size(); i = next++)
            per_case[i] = run_case(suite[i]);
    };
    const int workers = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(suite.size(), 1)));
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    pool.clear();

    BenchReport report;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        auto sums = summarize(suite[i], per_case[i]);
        report.summaries.insert(report.summaries.end(), sums.begin(), sums.end());
        report.rows.insert(report.rows.end(), per_case[i].begin(), per_case[i].end());
    }
    return report;
}

ReportFormat parse_report_format(const std::string &name) {
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "json")
        return ReportFormat::Json;
    throw std::invalid_argument("unknown report format '" + name + "' (expected csv|json)");
}

json report_to_json(const BenchReport &r) {
    json rows = json::array();
    for (const auto &row : r.rows) {
        rows.push_back({{"case", row.case_name},
                        {"algorithm", row.algorithm},
                        {"seed", row.seed},
                        {"k_achieved", row.k_achieved ? json(*row.k_achieved) : json(nullptr)},
                        {"solved", row.solved},
                        {"time_ms", row.time_ms},
                        {"status", row.status},
                        {"message", row.message},
                        {"certificate", row.certificate}});
    }
    json sums = json::array();
    for (const auto &s : r.summaries) {
        sums.push_back({{"case", s.case_name},
                        {"algorithm", s.algorithm},
                        {"best", s.best ? json(*s.best) : json(nullptr)},
                        {"median_time_ms", s.median_time_ms},
                        {"pass", s.pass ? json(*s.pass) : json(nullptr)}});
    }
    return {{"rows", rows}, {"summaries", sums}};
}

BenchReport report_from_json(const json &j) {
    BenchReport r;
    for (const auto &row : j.at("rows")) {
        BenchRow b;
        b.case_name = row.at("case").get<std::string>();
        b.algorithm = row.at("algorithm").get<std::string>();
        b.seed = row.at("seed").get<std::uint64_t>();
        if (!row.at("k_achieved").is_null())
            b.k_achieved = row.at("k_achieved").get<int>();
        b.solved = row.at("solved").get<bool>();
        b.time_ms = row.at("time_ms").get<double>();
        b.status = row.at("status").get<std::string>();
        b.message = row.value("message", std::string{});
        b.certificate = row.value("certificate", std::vector<int>{});
        r.rows.push_back(std::move(b));
    }
    for (const auto &s : j.at("summaries")) {
        BenchSummary b;
        b.case_name = s.at("case").get<std::string>();
        b.algorithm = s.at("algorithm").get<std::string>();
        if (!s.at("best").is_null())
            b.best = s.at("best").get<int>();
        b.median_time_ms = s.at("median_time_ms").get<double>();
        if (!s.at("pass").is_null())
            b.pass = s.at("pass").get<bool>();
        r.summaries.push_back(std::move(b));
    }
    return r;
}

void write_csv(std::ostream &out, const BenchReport &r) {
    out << "case,algorithm,seed,k_achieved,solved,time_ms,status\n";
    for (const auto &row : r.rows) {
        out << csv_field(row.case_name) << ',' << row.algorithm << ',' << row.seed << ',';
        if (row.k_achieved)
            out << *row.k_achieved;
        out << ',' << (row.solved ? "true" : "false") << ',' << row.time_ms << ',' << row.status
            << '\n';
    }
}

void emit_report(const BenchReport &r, ReportFormat format, const std::filesystem::path &path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write report to " + path.string());
    if (format == ReportFormat::Csv)
        write_csv(out, r);
    else
        out << report_to_json(r).dump(2) << '\n';
    out.flush();
    if (!out)
        throw std::runtime_error("failed while writing report to " + path.string());
}

} // namespace packcol
