#include "packcol/heuristics.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace packcol {

Coloring greedy_packing(const DistanceMatrix &d, std::span<const Vertex> order) {
    const int n = d.order();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("greedy order must list every vertex exactly once");
    std::vector<char> seen(n, 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("greedy order is not a permutation of the vertices");
        seen[v] = 1;
    }

    std::vector<std::vector<Vertex>> members(1);
    std::vector<int> colors(n, 0);
    for (Vertex v : order) {
        auto row = d.row(v);
        int c = 1;
        for (;; ++c) {
            if (c == static_cast<int>(members.size()))
                members.emplace_back();
            if (std::all_of(members[c].begin(), members[c].end(),
                            [&](Vertex u) { return row[u] > c; }))
                break;
        }
        members[c].push_back(v);
        colors[v] = c;
    }
    const int k = std::max(1, *std::max_element(colors.begin(), colors.end()));
    return Coloring(std::move(colors), k);
}

std::vector<Coloring> ls_neighborhood(const Coloring &c) {
    std::vector<Coloring> out;
    out.reserve(c.size() * static_cast<std::size_t>(c.k() - 1));
    for (std::size_t v = 0; v < c.size(); ++v) {
        for (int col = 1; col <= c.k(); ++col) {
            if (col == c[v])
                continue;
            Coloring nb = c;
            nb.set(static_cast<Vertex>(v), col);
            out.push_back(std::move(nb));
        }
    }
    return out;
}

namespace {

Coloring random_coloring(int n, int k, Rng &rng) {
    std::vector<int> colors(n);
    for (int &x : colors)
        x = static_cast<int>(rng.uniform(1, k));
    return Coloring(std::move(colors), k);
}

// conflicts[v * (k + 1) + col]: vertices u != v colored col with d(u, v) <= col.
class ConflictTable {
  public:
    ConflictTable(const DistanceMatrix &d, std::span<const int> colors, int k)
        : d_(d), k_(k), table_(static_cast<std::size_t>(d.order()) * (k + 1), 0) {
        const int n = d.order();
        for (Vertex v = 0; v < n; ++v) {
            auto row = d.row(v);
            for (Vertex u = 0; u < n; ++u)
                if (u != v && row[u] <= colors[u])
                    ++at(v, colors[u]);
        }
    }

    int &at(Vertex v, int col) { return table_[static_cast<std::size_t>(v) * (k_ + 1) + col]; }

    void move(Vertex v, int from, int to) {
        auto row = d_.row(v);
        for (Vertex u = 0; u < d_.order(); ++u) {
            if (u == v)
                continue;
            if (row[u] <= from)
                --at(u, from);
            if (row[u] <= to)
                ++at(u, to);
        }
    }

  private:
    const DistanceMatrix &d_;
    int k_;
    std::vector<int> table_;
};

} // namespace

HeuristicOutcome local_search_from(const DistanceMatrix &d, Coloring start, int max_iterations,
                                   const LsObserver &observer) {
    if (static_cast<int>(start.size()) != d.order())
        throw std::invalid_argument("starting coloring does not match the graph order");
    const int n = d.order();
    const int k = start.k();
    std::vector<int> current(start.values().begin(), start.values().end());
    std::int64_t violations = count_violations(d, current);

    HeuristicOutcome out{start, violations, 0};
    if (violations == 0)
        return out;

    ConflictTable conflicts(d, current, k);
    for (int it = 1; it <= max_iterations; ++it) {
        // Neighbor fitness is strictly positive, so the first neighbor always
        // beats the empty best.
        std::int64_t best_nb = std::numeric_limits<std::int64_t>::max();
        Vertex move_v = -1;
        int move_c = 0;
        for (Vertex v = 0; v < n; ++v) {
            const std::int64_t base = violations - conflicts.at(v, current[v]);
            for (int col = 1; col <= k; ++col) {
                if (col == current[v])
                    continue;
                const std::int64_t cand = base + conflicts.at(v, col);
                if (cand < best_nb) {
                    best_nb = cand;
                    move_v = v;
                    move_c = col;
                }
            }
        }
        if (move_v < 0)
            break; // k == 1: empty neighborhood
        out.iterations_used = it;

        conflicts.move(move_v, current[move_v], move_c);
        current[move_v] = move_c;
        violations = best_nb;
        if (violations < out.best_violations) {
            out.best_coloring = Coloring(current, k);
            out.best_violations = violations;
        }
        if (observer)
            observer(it, violations, out.best_violations);
        if (out.best_violations == 0)
            break;
    }
    return out;
}

HeuristicOutcome local_search(const DistanceMatrix &d, const LsConfig &cfg,
                              const LsObserver &observer) {
    if (cfg.k < 1)
        throw std::invalid_argument("local search needs k >= 1");
    if (cfg.max_iterations < 0)
        throw std::invalid_argument("local search needs max_iterations >= 0");
    Rng init = Rng(cfg.seed).split(1);
    return local_search_from(d, random_coloring(d.order(), cfg.k, init), cfg.max_iterations,
                             observer);
}

namespace {

void require_same_shape(const Coloring &p1, const Coloring &p2) {
    if (p1.size() != p2.size() || p1.k() != p2.k())
        throw std::invalid_argument("parents must have equal length and color budget");
}

std::pair<int, int> two_distinct(int n, Rng &rng) {
    if (n < 2)
        throw std::invalid_argument("operator needs at least two vertices");
    int a = rng.index(n);
    int b = rng.index(n - 1);
    if (b >= a)
        ++b;
    return {a, b};
}

// Keeps the first `size` distinct colorings in order; duplicates refill the
// tail only when there are not enough distinct ones.
void truncate_distinct(std::vector<Individual> &sorted, int size) {
    std::unordered_set<std::string_view> seen;
    std::vector<Individual> kept, dups;
    kept.reserve(size);
    for (auto &ind : sorted) {
        if (static_cast<int>(kept.size()) == size)
            break;
        auto vals = ind.coloring.values();
        std::string_view key(reinterpret_cast<const char *>(vals.data()), vals.size_bytes());
        if (seen.insert(key).second)
            kept.push_back(ind);
        else
            dups.push_back(ind);
    }
    for (std::size_t i = 0; static_cast<int>(kept.size()) < size; ++i)
        kept.push_back(dups[i]);
    sorted = std::move(kept);
}

} // namespace

Coloring crossover1(const Coloring &p1, const Coloring &p2, Rng &rng) {
    require_same_shape(p1, p2);
    std::vector<char> in_p1(p1.k() + 1, 0), in_p2(p1.k() + 1, 0);
    for (int c : p1.values())
        in_p1[c] = 1;
    for (int c : p2.values())
        in_p2[c] = 1;
    Coloring child = p2;
    const int n = static_cast<int>(child.size());
    for (int c = 1; c <= p1.k(); ++c)
        if (in_p1[c] && !in_p2[c])
            child.set(rng.index(n), c);
    return child;
}

Coloring crossover2(const Coloring &p1, const Coloring &p2, Rng &rng) {
    require_same_shape(p1, p2);
    auto [a, b] = two_distinct(static_cast<int>(p1.size()), rng);
    Coloring child = p1;
    child.set(a, p2[a]);
    child.set(b, p2[b]);
    return child;
}

Coloring mutation(const Coloring &p, Rng &rng) {
    auto [a, b] = two_distinct(static_cast<int>(p.size()), rng);
    Coloring child = p;
    child.set(a, p[b]);
    child.set(b, p[a]);
    return child;
}

HeuristicOutcome genetic_algorithm(const DistanceMatrix &d, const GaConfig &cfg,
                                   const GaObserver &observer) {
    if (cfg.k < 1)
        throw std::invalid_argument("genetic algorithm needs k >= 1");
    if (cfg.population_size < 2)
        throw std::invalid_argument("genetic algorithm needs population_size >= 2");
    if (cfg.crossover1_offspring < 0 || cfg.crossover2_offspring < 0 || cfg.mutants < 0)
        throw std::invalid_argument("offspring and mutant counts must be >= 0");
    if (cfg.max_iterations < 0)
        throw std::invalid_argument("genetic algorithm needs max_iterations >= 0");

    const int n = d.order();
    const int np = cfg.population_size;
    const Rng root(cfg.seed);
    Rng init = root.split(1), select = root.split(2), rng_x1 = root.split(3),
        rng_x2 = root.split(4), rng_mut = root.split(5);

    auto evaluate = [&](Coloring c) {
        const auto v = count_violations(d, c.values());
        return Individual{std::move(c), v};
    };
    auto by_fitness = [](const Individual &a, const Individual &b) {
        return a.violations < b.violations;
    };

    std::vector<Individual> population;
    population.reserve(np);
    for (int i = 0; i < np; ++i)
        population.push_back(evaluate(random_coloring(n, cfg.k, init)));
    std::stable_sort(population.begin(), population.end(), by_fitness);

    int iterations = 0;
    const bool pairwise_ops = n >= 2;
    std::vector<Individual> merged;
    for (int it = 1; it <= cfg.max_iterations && population.front().violations > 0; ++it) {
        iterations = it;
        merged.clear();
        auto parents = [&] { return two_distinct(np, select); };
        for (int j = 0; j < cfg.crossover1_offspring; ++j) {
            auto [a, b] = parents();
            merged.push_back(evaluate(crossover1(population[a].coloring, population[b].coloring, rng_x1)));
        }
        for (int j = 0; pairwise_ops && j < cfg.crossover2_offspring; ++j) {
            auto [a, b] = parents();
            merged.push_back(evaluate(crossover2(population[a].coloring, population[b].coloring, rng_x2)));
        }
        for (int j = 0; pairwise_ops && j < cfg.mutants; ++j) {
            const int a = select.index(np);
            merged.push_back(evaluate(mutation(population[a].coloring, rng_mut)));
        }
        merged.insert(merged.end(), population.begin(), population.end());
        std::stable_sort(merged.begin(), merged.end(), by_fitness);
        truncate_distinct(merged, np);
        std::swap(population, merged);
        if (observer)
            observer(it, population);
    }
    return HeuristicOutcome{population.front().coloring, population.front().violations, iterations};
}

std::string to_string(Algorithm a) {
    switch (a) {
    case Algorithm::Greedy:
        return "greedy";
    case Algorithm::LocalSearch:
        return "ls";
    case Algorithm::Genetic:
        return "ga";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string &name) {
    if (name == "greedy")
        return Algorithm::Greedy;
    if (name == "ls" || name == "local-search")
        return Algorithm::LocalSearch;
    if (name == "ga" || name == "genetic")
        return Algorithm::Genetic;
    throw std::invalid_argument("unknown algorithm '" + name + "' (expected greedy|ls|ga)");
}

std::vector<Coloring> greedy_runs(const DistanceMatrix &d, int runs, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Coloring> out;
    std::vector<Vertex> order(d.order());
    for (int r = 0; r < runs; ++r) {
        std::iota(order.begin(), order.end(), 0);
        for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
            std::swap(order[i], order[rng.uniform(0, i)]);
        out.push_back(greedy_packing(d, order));
    }
    return out;
}

RunResult minimize_colors(const DistanceMatrix &d, const MinimizeOptions &opts) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = d.order();
    std::vector<int> all_distinct(n);
    std::iota(all_distinct.begin(), all_distinct.end(), 1);
    RunResult res{opts.algorithm, opts.seed, n, Coloring(all_distinct, n), 0.0, 0, {}};

    if (opts.algorithm == Algorithm::Greedy) {
        if (opts.greedy_runs < 1)
            throw std::invalid_argument("greedy needs at least one run");
        auto runs = greedy_runs(d, opts.greedy_runs, opts.seed);
        std::size_t best = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            res.greedy_values.push_back(runs[i].colors_used());
            if (runs[i].colors_used() < runs[best].colors_used())
                best = i;
        }
        res.certificate = compact(runs[best]);
        res.k_achieved = res.certificate.colors_used();
        res.iterations = opts.greedy_runs;
    } else {
        const Rng root(opts.seed);
        int k = std::min(opts.upper_bound.value_or(n), n);
        while (k >= 1) {
            const std::uint64_t run_seed = root.split(static_cast<std::uint64_t>(k)).seed();
            HeuristicOutcome o = [&] {
                if (opts.algorithm == Algorithm::LocalSearch) {
                    LsConfig cfg = opts.ls;
                    cfg.k = k;
                    cfg.seed = run_seed;
                    return local_search(d, cfg);
                }
                GaConfig cfg = opts.ga;
                cfg.k = k;
                cfg.seed = run_seed;
                return genetic_algorithm(d, cfg);
            }();
            res.iterations += o.iterations_used;
            if (!o.solved())
                break;
            res.certificate = compact(o.best_coloring);
            res.k_achieved = res.certificate.colors_used();
            k = res.k_achieved - 1;
        }
    }
    res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace packcol
