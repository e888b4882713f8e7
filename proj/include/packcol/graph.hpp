#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace packcol {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted and symmetric. Construction rejects self-loops
/// and out-of-range endpoints; repeated edges collapse to one.
class Graph {
  public:
    Graph(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Canonical edge list: u < v, lexicographically sorted.
    std::vector<Edge> edges() const;
    std::vector<int> degree_sequence() const;

    friend bool operator==(const Graph &, const Graph &) = default;

  private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

/// All-pairs unweighted shortest-path distances.
class DistanceMatrix {
  public:
    /// Sentinel for pairs in different components. It compares greater than
    /// every color, so disconnected pairs never violate a packing constraint.
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    explicit DistanceMatrix(const Graph &g);

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const {
        return dist_[static_cast<std::size_t>(u) * n_ + v];
    }
    std::span<const int> row(Vertex u) const {
        return {dist_.data() + static_cast<std::size_t>(u) * n_,
                static_cast<std::size_t>(n_)};
    }

  private:
    int n_;
    std::vector<int> dist_;
};

DistanceMatrix all_pairs_distances(const Graph &g);

/// Largest finite distance, or nullopt when the graph is disconnected.
std::optional<int> diameter(const DistanceMatrix &d);

/// Total assignment vertex -> color in 1..k. Classes may be empty.
class Coloring {
  public:
    Coloring(std::vector<int> colors, int k);

    int k() const { return k_; }
    std::size_t size() const { return colors_.size(); }
    int operator[](Vertex v) const { return colors_[v]; }
    void set(Vertex v, int color);
    std::span<const int> values() const { return colors_; }

    /// Number of distinct colors actually present.
    int colors_used() const;
    int max_color() const;

    friend bool operator==(const Coloring &, const Coloring &) = default;

  private:
    std::vector<int> colors_;
    int k_;
};

/// Relabels the used colors onto 1..colors_used() preserving their order.
/// Lowering a color only relaxes its distance requirement, so a valid packing
/// coloring stays valid.
Coloring compact(const Coloring &c);

struct Violation {
    Vertex u;
    Vertex v;
    int color;
    friend bool operator==(const Violation &, const Violation &) = default;
};

struct FitnessReport {
    std::int64_t violations = 0;
    std::vector<Violation> violating_pairs;

    double fitness() const { return 1.0 / (1.0 + static_cast<double>(violations)); }
    bool valid() const { return violations == 0; }
};

bool is_packing_coloring(const DistanceMatrix &d, const Coloring &c);

/// Counts unordered same-color pairs {u,v} with d(u,v) <= color.
FitnessReport fitness(const DistanceMatrix &d, const Coloring &c);

/// Violation count only; no pair list, no validation of color range.
std::int64_t count_violations(const DistanceMatrix &d, std::span<const int> colors);

} // namespace packcol
