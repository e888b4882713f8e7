#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "packcol/graph.hpp"
#include "packcol/rng.hpp"

namespace packcol {

struct LsConfig {
    int k = 1;
    int max_iterations = 1000;
    std::uint64_t seed = 0;
};

// Defaults match the benchmark suites.
struct GaConfig {
    int k = 1;
    int max_iterations = 500;
    int population_size = 50;
    int crossover1_offspring = 25;
    int crossover2_offspring = 25;
    int mutants = 25;
    std::uint64_t seed = 0;
};

struct HeuristicOutcome {
    Coloring best_coloring;
    std::int64_t best_violations = 0;
    int iterations_used = 0;

    double best_fitness() const { return 1.0 / (1.0 + static_cast<double>(best_violations)); }
    bool solved() const { return best_violations == 0; }
    int colors_used() const { return best_coloring.colors_used(); }
};

/// First fit along `order`: each vertex takes the smallest color whose
/// current members are all farther away than that color. Always valid.
Coloring greedy_packing(const DistanceMatrix &d, std::span<const Vertex> order);

/// Every coloring differing from c in exactly one vertex, vertex-major then
/// color-ascending; n * (k - 1) entries.
std::vector<Coloring> ls_neighborhood(const Coloring &c);

/// Per-iteration view of a local search run: the current coloring's and the
/// best-so-far violation counts after the move of that iteration.
using LsObserver = std::function<void(int iteration, std::int64_t current, std::int64_t best)>;

/// Steepest-ascent local search. Each iteration scans the full one-vertex
/// recoloring neighborhood, keeps the first neighbor of maximal fitness, moves
/// there unconditionally, and replaces the best-so-far only on strict
/// improvement. Stops at the first valid coloring or after max_iterations.
HeuristicOutcome local_search(const DistanceMatrix &d, const LsConfig &cfg,
                              const LsObserver &observer = {});

/// Same loop from a given starting coloring (its k is the budget).
HeuristicOutcome local_search_from(const DistanceMatrix &d, Coloring start, int max_iterations,
                                   const LsObserver &observer = {});

/// Offspring starts as p2; each color of p1 missing from p2 (ascending)
/// overwrites one uniformly chosen vertex.
Coloring crossover1(const Coloring &p1, const Coloring &p2, Rng &rng);
/// Offspring starts as p1; two distinct uniform vertices copy their colors from p2.
Coloring crossover2(const Coloring &p1, const Coloring &p2, Rng &rng);
/// Swaps the colors of two distinct uniform vertices.
Coloring mutation(const Coloring &p, Rng &rng);

struct Individual {
    Coloring coloring;
    std::int64_t violations;
};

/// Called after every generation with the truncated population (best first).
using GaObserver = std::function<void(int iteration, std::span<const Individual> population)>;

/// Generational GA with truncation selection: each iteration breeds
/// crossover1, crossover2 and mutation children from uniformly drawn parents,
/// merges them after the current population, stable-sorts by fitness and
/// keeps the first population_size. Returns as soon as a valid coloring
/// appears.
///
/// RNG streams (children of Rng(seed)): 1 initial population, 2 parent
/// selection, 3 crossover1, 4 crossover2, 5 mutation.
HeuristicOutcome genetic_algorithm(const DistanceMatrix &d, const GaConfig &cfg,
                                   const GaObserver &observer = {});

enum class Algorithm { Greedy, LocalSearch, Genetic };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string &name);

struct MinimizeOptions {
    Algorithm algorithm = Algorithm::Genetic;
    std::uint64_t seed = 0;
    LsConfig ls{};  // k is ignored
    GaConfig ga{};  // k and seed are ignored
    int greedy_runs = 6;
    /// Starting k for ls/ga; the vertex count when unset.
    std::optional<int> upper_bound;
};

struct RunResult {
    Algorithm algorithm;
    std::uint64_t seed;
    int k_achieved;
    Coloring certificate;
    double wall_ms;
    std::int64_t iterations;
    /// Greedy only: colors used by each random order, in run order.
    std::vector<int> greedy_values;
};

/// Random vertex order from `seed`, run `runs` first-fit passes, one per order.
std::vector<Coloring> greedy_runs(const DistanceMatrix &d, int runs, std::uint64_t seed);

/// Smallest number of colors the chosen algorithm reaches.
///
/// greedy: best of greedy_runs. ls/ga: start at the upper bound and keep
/// asking for one color fewer than the last success used; a solution that
/// leaves colors empty is compacted, so each success can drop several k at
/// once. Run for k uses seed split(k).
RunResult minimize_colors(const DistanceMatrix &d, const MinimizeOptions &opts);

} // namespace packcol
