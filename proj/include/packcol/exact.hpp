#pragma once

#include <cstdint>
#include <optional>

#include "packcol/graph.hpp"

namespace packcol {

struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double time_limit_seconds = 300.0;
};

enum class SearchStatus { Sat, Unsat, BudgetExhausted };

const char *to_string(SearchStatus s);

struct DecideResult {
    SearchStatus status = SearchStatus::Unsat;
    std::optional<Coloring> coloring; // set iff Sat
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Is there a packing coloring with colors from 1..k?
///
/// Depth-first search over vertices in descending-degree order (ties by
/// index), colors tried ascending. A color is pruned for a vertex as soon as
/// an already-colored vertex of that color lies within that distance. Two
/// further cuts never discard a solution:
///  - a capacity bound: for each color, the uncolored vertices still allowed
///    to take it are covered greedily by cliques of the "distance <= color"
///    graph; each clique can contribute at most one vertex, so if the clique
///    counts summed over colors fall short of the uncolored count, the node
///    is dead;
///  - on a connected graph every color >= diameter can hold at most one
///    vertex, so those colors are interchangeable and only the lowest unused
///    one is tried.
DecideResult decide_packing_k(const DistanceMatrix &d, int k, const SearchBudget &budget = {});

struct ExactResult {
    SearchStatus status = SearchStatus::Unsat; // Sat when value is proven
    int value = 0;                             // chi_rho when Sat
    std::optional<Coloring> certificate;
    int lower_bound = 1; // valid even when the budget ran out
    int upper_bound = 0;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Packing chromatic number by ascending k from 1. The node and time budget
/// are shared by all k.
ExactResult exact_packing_chromatic(const Graph &g, const SearchBudget &budget = {});
ExactResult exact_packing_chromatic(const DistanceMatrix &d, const SearchBudget &budget = {});

struct IndependenceResult {
    SearchStatus status = SearchStatus::Sat; // BudgetExhausted if not proven
    int value = 0;                           // best independent set size found
    int upper_bound = 0;
    std::uint64_t nodes = 0;
};

/// Branch and bound on vertex inclusion; the bound is a greedy clique cover
/// of the remaining candidates.
IndependenceResult independence_number_exact(const Graph &g, const SearchBudget &budget = {});

} // namespace packcol
