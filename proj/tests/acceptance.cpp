// Acceptance checks. One PASS/FAIL/WARN line per criterion; exit status is
// nonzero when any hard criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "packcol/exact.hpp"
#include "packcol/formulas.hpp"
#include "packcol/generators.hpp"
#include "packcol/heuristics.hpp"

using namespace packcol;

namespace {

// Tolerances and limits.
constexpr int kExactTolerance = 0;
constexpr int kGaSeeds = 10;
constexpr int kGaSeedsLarge = 20;
constexpr double kRunLimitSeconds = 60.0;
constexpr double kLargeLimitSeconds = 600.0;
constexpr int kLargeGaIterations = 5000;
constexpr int kPropertyTrials = 1000;
constexpr int kGaInvariantRuns = 100;

int hard_failures = 0;

void report(const char *id, bool pass, const std::string &detail, bool hard = true) {
    const char *tag = pass ? "PASS" : (hard ? "FAIL" : "WARN");
    std::printf("[%s] %s: %s\n", tag, id, detail.c_str());
    std::fflush(stdout);
    if (!pass && hard)
        ++hard_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct GaHit {
    bool solved = false;
    std::uint64_t seed = 0;
    double slowest = 0.0;
    bool certificate_ok = true;
};

// GA at a fixed k over seeds 1..max_seeds, stopping at the first valid coloring.
GaHit ga_search(const DistanceMatrix &d, int k, int max_seeds) {
    GaHit hit;
    for (int s = 1; s <= max_seeds && !hit.solved; ++s) {
        const auto t0 = std::chrono::steady_clock::now();
        auto out = genetic_algorithm(d, GaConfig{.k = k, .seed = static_cast<std::uint64_t>(s)});
        hit.slowest = std::max(hit.slowest, seconds_since(t0));
        if (out.solved()) {
            hit.solved = true;
            hit.seed = static_cast<std::uint64_t>(s);
            hit.certificate_ok = is_packing_coloring(d, out.best_coloring) && out.best_coloring.k() <= k;
        }
    }
    return hit;
}

int exact_value(const Graph &g) {
    auto r = exact_packing_chromatic(g);
    return r.status == SearchStatus::Sat ? r.value : -1;
}

void criterion1() {
    const std::vector<int> ns{4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 22, 24, 25, 26, 27};
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream bad;
    for (int n : ns) {
        const int got = exact_value(unitary_cayley(n));
        const int want = static_cast<int>(packing_chromatic_formula(n));
        if (got < 0 || std::abs(got - want) > kExactTolerance)
            bad << " n=" << n << " exact=" << got << " formula=" << want;
    }
    std::ostringstream msg;
    msg << "formula vs exact oracle on " << ns.size() << " values of n, " << seconds_since(t0) << " s";
    report("C1 formula-oracle agreement", bad.str().empty(), msg.str() + bad.str());
}

void criterion2() {
    const std::vector<std::pair<int, int>> table{{5, 5}, {16, 9}, {21, 15}, {27, 19}, {45, 31}};
    std::ostringstream msg;
    bool ok = true;
    for (auto [n, value] : table) {
        const bool formula_ok = static_cast<int>(packing_chromatic_formula(n)) == value;
        const int seeds = n == 45 ? kGaSeedsLarge : kGaSeeds;
        DistanceMatrix d(unitary_cayley(n));
        auto hit = ga_search(d, value, seeds);
        ok = ok && formula_ok && hit.solved && hit.certificate_ok;
        msg << " n=" << n << ":" << value << (formula_ok ? "" : "(formula mismatch)");
        if (hit.solved)
            msg << " ga@seed" << hit.seed;
        else
            msg << " ga-unsolved";
    }
    report("C2 unitary Cayley table", ok, "formula and GA" + msg.str());
}

void criterion3() {
    struct Row {
        const char *name;
        Graph g;
        int value;
    };
    std::vector<Row> rows{{"C15", cycle_graph(15), 4},
                          {"C20", cycle_graph(20), 3},
                          {"P20", path_graph(20), 3},
                          {"S10", star_graph(10), 2},
                          {"K357", complete_multipartite({3, 5, 7}), 9}};
    std::ostringstream msg;
    bool ok = true;
    for (const auto &r : rows) {
        DistanceMatrix d(r.g);
        auto hit = ga_search(d, r.value, kGaSeeds);
        const int exact = exact_value(r.g);
        const bool row_ok = hit.solved && hit.certificate_ok && hit.slowest < kRunLimitSeconds &&
                            exact == r.value;
        ok = ok && row_ok;
        msg << " " << r.name << "=" << r.value << (hit.solved ? " ga@seed" + std::to_string(hit.seed) : " ga-unsolved")
            << " exact=" << exact;
    }
    report("C3 classic graph table", ok, msg.str().substr(1));
}

void criterion4() {
    struct Row {
        int n;
        std::set<int> s;
        int value;
    };
    const std::vector<Row> rows{{8, {1, 3, 5, 7}, 5},
                                {12, {1, 3, 9, 11}, 7},
                                {8, {1, 2, 3, 5, 6, 7}, 7},
                                {9, {1, 2, 3, 6, 7, 8}, 8},
                                {12, {1, 2, 3, 9, 10, 11}, 10}};
    std::ostringstream msg;
    bool ok = true;
    for (const auto &r : rows) {
        Graph g = circulant(ConnectionSet(r.n, r.s), false);
        DistanceMatrix d(g);
        const int exact = exact_value(g);
        msg << " Z" << r.n << "{";
        for (int x : r.s)
            msg << (x == *r.s.begin() ? "" : ",") << x;
        msg << "}=" << r.value << " exact=" << exact;
        bool row_ok = exact == r.value;
        for (auto algo : {Algorithm::Greedy, Algorithm::LocalSearch, Algorithm::Genetic}) {
            int best = std::numeric_limits<int>::max();
            for (int s = 1; s <= kGaSeeds && best > r.value; ++s) {
                auto res = minimize_colors(d, MinimizeOptions{.algorithm = algo, .seed = static_cast<std::uint64_t>(s)});
                if (!is_packing_coloring(d, res.certificate))
                    best = -1;
                else
                    best = std::min(best, res.k_achieved);
            }
            msg << " " << to_string(algo) << "=" << best;
            row_ok = row_ok && best == r.value;
        }
        ok = ok && row_ok;
    }
    report("C4 circulant table", ok, msg.str().substr(1));
}

void criterion5() {
    const auto t0 = std::chrono::steady_clock::now();
    std::ostringstream bad;
    for (int n = 2; n <= 200; ++n) {
        auto dia = diameter(DistanceMatrix(unitary_cayley(n)));
        if (!dia || *dia != diameter_formula(n))
            bad << " n=" << n;
    }
    const double secs = seconds_since(t0);
    std::ostringstream msg;
    msg << "n=2..200 in " << secs << " s" << bad.str();
    report("C5 diameter formula", bad.str().empty() && secs < kRunLimitSeconds, msg.str());
}

void criterion6() {
    std::ostringstream bad;
    for (int n = 2; n <= 30; ++n) {
        auto r = independence_number_exact(unitary_cayley(n));
        if (r.status != SearchStatus::Sat || r.value != static_cast<int>(independence_formula(n)))
            bad << " n=" << n;
    }
    report("C6 independence formula", bad.str().empty(), "n=2..30" + bad.str());
}

std::vector<int> random_colors(int n, int k, std::mt19937_64 &gen) {
    std::vector<int> c(n);
    for (int &x : c)
        x = 1 + static_cast<int>(gen() % k);
    return c;
}

bool fitness_property() {
    std::mt19937_64 gen(101);
    for (int t = 0; t < kPropertyTrials; ++t) {
        const int n = 1 + static_cast<int>(gen() % 10);
        const int k = 1 + static_cast<int>(gen() % 6);
        auto edges = oracle::random_edges(n, 0.5, gen);
        auto ref = oracle::distances_by_powers(oracle::adjacency(n, edges));
        auto cols = random_colors(n, k, gen);
        DistanceMatrix d(Graph(n, edges));
        auto rep = fitness(d, Coloring(cols, k));
        const auto expect = oracle::violations(ref, cols);
        if (rep.violations != expect || (expect == 0) != is_packing_coloring(d, Coloring(cols, k)) ||
            rep.fitness() != 1.0 / (1.0 + static_cast<double>(expect)))
            return false;
    }
    return true;
}

bool ls_monotone_property() {
    std::mt19937_64 gen(202);
    for (int t = 0; t < 100; ++t) {
        const int n = 4 + t % 20;
        DistanceMatrix d(Graph(n, oracle::random_edges(n, 0.25, gen)));
        std::int64_t prev = std::numeric_limits<std::int64_t>::max();
        bool ok = true;
        local_search(d, LsConfig{2 + t % 3, 200, static_cast<std::uint64_t>(t)},
                     [&](int, std::int64_t, std::int64_t best) {
                         ok = ok && best <= prev;
                         prev = best;
                     });
        if (!ok)
            return false;
    }
    return true;
}

bool ga_invariant_property() {
    std::mt19937_64 gen(303);
    for (int run = 0; run < kGaInvariantRuns; ++run) {
        const int n = 4 + run % 16;
        DistanceMatrix d(Graph(n, oracle::random_edges(n, 0.3, gen)));
        GaConfig cfg{.k = 2 + run % 3,
                     .max_iterations = 40,
                     .population_size = 12,
                     .crossover1_offspring = 6,
                     .crossover2_offspring = 6,
                     .mutants = 6,
                     .seed = static_cast<std::uint64_t>(run)};
        bool ok = true;
        std::int64_t prev_best = std::numeric_limits<std::int64_t>::max();
        std::size_t prev_distinct = 0;
        genetic_algorithm(d, cfg, [&](int, std::span<const Individual> pop) {
            ok = ok && static_cast<int>(pop.size()) == cfg.population_size;
            ok = ok && std::is_sorted(pop.begin(), pop.end(), [](const Individual &a, const Individual &b) {
                     return a.violations < b.violations;
                 });
            std::set<std::vector<int>> distinct;
            for (const auto &ind : pop)
                distinct.insert({ind.coloring.values().begin(), ind.coloring.values().end()});
            ok = ok && pop.front().violations <= prev_best && distinct.size() >= prev_distinct;
            prev_best = pop.front().violations;
            prev_distinct = distinct.size();
        });
        if (!ok)
            return false;
    }
    return true;
}

bool operator_property() {
    std::mt19937_64 gen(404);
    Rng rng(404);
    for (int t = 0; t < kPropertyTrials; ++t) {
        const int n = 2 + static_cast<int>(gen() % 20);
        const int k = 1 + static_cast<int>(gen() % 8);
        Coloring p1(random_colors(n, k, gen), k), p2(random_colors(n, k, gen), k);

        auto m = mutation(p1, rng);
        std::vector<int> a(m.values().begin(), m.values().end()), b(p1.values().begin(), p1.values().end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return false;

        auto x2 = crossover2(p1, p2, rng);
        int changed = 0;
        for (int i = 0; i < n; ++i)
            changed += x2[i] != p1[i];
        if (changed > 2)
            return false;

        auto x1 = crossover1(p1, p2, rng);
        std::set<int> colors(p1.values().begin(), p1.values().end());
        colors.insert(p2.values().begin(), p2.values().end());
        for (int i = 0; i < n; ++i)
            if (!colors.count(x1[i]))
                return false;
    }
    return true;
}

bool determinism_property() {
    DistanceMatrix d(generalized_petersen(12, 2));
    if (greedy_runs(d, 6, 5) != greedy_runs(d, 6, 5))
        return false;
    auto l1 = local_search(d, LsConfig{6, 500, 5}), l2 = local_search(d, LsConfig{6, 500, 5});
    if (!(l1.best_coloring == l2.best_coloring) || l1.iterations_used != l2.iterations_used)
        return false;
    GaConfig cfg{.k = 8, .max_iterations = 200, .seed = 5};
    auto g1 = genetic_algorithm(d, cfg), g2 = genetic_algorithm(d, cfg);
    return g1.best_coloring == g2.best_coloring && g1.iterations_used == g2.iterations_used;
}

void criterion7() {
    const bool f = fitness_property(), l = ls_monotone_property(), g = ga_invariant_property(),
               o = operator_property(), r = determinism_property();
    std::ostringstream msg;
    msg << "fitness=" << f << " ls-monotone=" << l << " ga-invariants=" << g << " operators=" << o
        << " replay=" << r;
    report("C7 property suites", f && l && g && o && r, msg.str());
}

void large_graph_case(const char *name, const Graph &g, int bound) {
    DistanceMatrix d(g);
    auto greedy = minimize_colors(d, MinimizeOptions{.algorithm = Algorithm::Greedy, .seed = 1});
    const auto [lo, hi] = std::minmax_element(greedy.greedy_values.begin(), greedy.greedy_values.end());

    int ga_best = std::numeric_limits<int>::max();
    bool certs_ok = true;
    std::uint64_t hit_seed = 0;
    double slowest = 0.0;
    for (int s = 1; s <= kGaSeedsLarge && ga_best > bound; ++s) {
        MinimizeOptions opts{.algorithm = Algorithm::Genetic, .seed = static_cast<std::uint64_t>(s)};
        opts.ga.max_iterations = kLargeGaIterations;
        const auto t0 = std::chrono::steady_clock::now();
        auto res = minimize_colors(d, opts);
        slowest = std::max(slowest, seconds_since(t0));
        certs_ok = certs_ok && is_packing_coloring(d, res.certificate);
        if (res.k_achieved < ga_best) {
            ga_best = res.k_achieved;
            hit_seed = static_cast<std::uint64_t>(s);
        }
    }

    std::ostringstream msg;
    msg << name << " greedy orders=[";
    for (std::size_t i = 0; i < greedy.greedy_values.size(); ++i)
        msg << (i ? "," : "") << greedy.greedy_values[i];
    msg << "] ga best=" << ga_best << " (seed " << hit_seed << ")";
    report((std::string("C8 ") + name + " structure").c_str(),
           *hi - *lo >= 1 && ga_best < *lo && certs_ok,
           msg.str() + " spread=" + std::to_string(*hi - *lo) + " certificates " + (certs_ok ? "valid" : "INVALID"));
    std::ostringstream bmsg;
    bmsg << name << " ga best " << ga_best << " vs bound " << bound << ", slowest run " << slowest << " s";
    report((std::string("C8 ") + name + " GA bound").c_str(),
           ga_best <= bound && slowest < kLargeLimitSeconds, bmsg.str(), false);
}

void criterion8() {
    large_graph_case("G(12,2)", generalized_petersen(12, 2), 11);
    large_graph_case("TI", truncated_icosahedron(), 17);
}

} // namespace

int main() {
    const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8};
    for (const auto &c : criteria)
        c();
    std::printf("%s (%d hard failure%s)\n", hard_failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED",
                hard_failures, hard_failures == 1 ? "" : "s");
    return hard_failures ? 1 : 0;
}
