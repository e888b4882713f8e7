#include "packcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace packcol {

Graph::Graph(int n, std::span<const Edge> edges) {
    if (n < 1)
        throw std::invalid_argument("graph needs at least one vertex, got n=" + std::to_string(n));
    adj_.resize(n);
    for (const auto &[u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto &nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        edge_count_ += nb.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg(adj_.size());
    std::transform(adj_.begin(), adj_.end(), deg.begin(),
                   [](const auto &nb) { return static_cast<int>(nb.size()); });
    std::sort(deg.begin(), deg.end());
    return deg;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

// BFS from every source.
DistanceMatrix::DistanceMatrix(const Graph &g)
    : n_(g.order()), dist_(static_cast<std::size_t>(n_) * n_, kUnreachable) {
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
        int *row = dist_.data() + static_cast<std::size_t>(s) * n_;
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbors(u)) {
                if (row[w] == kUnreachable) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
    }
}

DistanceMatrix all_pairs_distances(const Graph &g) { return DistanceMatrix(g); }

std::optional<int> diameter(const DistanceMatrix &d) {
    int best = 0;
    for (Vertex u = 0; u < d.order(); ++u) {
        for (int x : d.row(u)) {
            if (x == DistanceMatrix::kUnreachable)
                return std::nullopt;
            best = std::max(best, x);
        }
    }
    return best;
}

Coloring::Coloring(std::vector<int> colors, int k) : colors_(std::move(colors)), k_(k) {
    if (k_ < 1)
        throw std::invalid_argument("color budget must be positive, got " + std::to_string(k_));
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] < 1 || colors_[v] > k_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                        std::to_string(colors_[v]) + " outside 1.." +
                                        std::to_string(k_));
}

void Coloring::set(Vertex v, int color) {
    if (color < 1 || color > k_)
        throw std::invalid_argument("color " + std::to_string(color) + " outside 1.." +
                                    std::to_string(k_));
    colors_.at(v) = color;
}

int Coloring::colors_used() const {
    std::vector<bool> seen(k_ + 1, false);
    int used = 0;
    for (int c : colors_)
        if (!seen[c]) {
            seen[c] = true;
            ++used;
        }
    return used;
}

int Coloring::max_color() const {
    return colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
}

Coloring compact(const Coloring &c) {
    std::vector<int> relabel(c.k() + 1, 0);
    for (int x : c.values())
        relabel[x] = 1;
    int next = 0;
    for (int x = 1; x <= c.k(); ++x)
        if (relabel[x])
            relabel[x] = ++next;
    std::vector<int> out(c.size());
    std::transform(c.values().begin(), c.values().end(), out.begin(),
                   [&](int x) { return relabel[x]; });
    return Coloring(std::move(out), std::max(next, 1));
}

namespace {

void check_length(const DistanceMatrix &d, const Coloring &c) {
    if (static_cast<int>(c.size()) != d.order())
        throw std::invalid_argument("coloring has " + std::to_string(c.size()) +
                                    " entries but graph has " + std::to_string(d.order()) +
                                    " vertices");
}

// Vertices grouped by color, each group in ascending vertex order.
std::vector<std::vector<Vertex>> color_classes(std::span<const int> colors) {
    int top = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
    std::vector<std::vector<Vertex>> classes(std::max(top, 0) + 1);
    for (std::size_t v = 0; v < colors.size(); ++v)
        classes[colors[v]].push_back(static_cast<Vertex>(v));
    return classes;
}

} // namespace

std::int64_t count_violations(const DistanceMatrix &d, std::span<const int> colors) {
    std::int64_t total = 0;
    auto classes = color_classes(colors);
    for (std::size_t i = 1; i < classes.size(); ++i) {
        const auto &cls = classes[i];
        for (std::size_t a = 0; a < cls.size(); ++a) {
            auto row = d.row(cls[a]);
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (row[cls[b]] <= static_cast<int>(i))
                    ++total;
        }
    }
    return total;
}

FitnessReport fitness(const DistanceMatrix &d, const Coloring &c) {
    check_length(d, c);
    FitnessReport rep;
    auto classes = color_classes(c.values());
    for (std::size_t i = 1; i < classes.size(); ++i) {
        const auto &cls = classes[i];
        for (std::size_t a = 0; a < cls.size(); ++a)
            for (std::size_t b = a + 1; b < cls.size(); ++b)
                if (d(cls[a], cls[b]) <= static_cast<int>(i))
                    rep.violating_pairs.push_back({cls[a], cls[b], static_cast<int>(i)});
    }
    std::sort(rep.violating_pairs.begin(), rep.violating_pairs.end(),
              [](const Violation &x, const Violation &y) {
                  return std::tie(x.u, x.v) < std::tie(y.u, y.v);
              });
    rep.violations = static_cast<std::int64_t>(rep.violating_pairs.size());
    return rep;
}

// Direct reading of the definition: every distinct same-colored pair must be
// at distance at least color + 1.
bool is_packing_coloring(const DistanceMatrix &d, const Coloring &c) {
    check_length(d, c);
    const int n = d.order();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (c[u] == c[v] && d(u, v) < c[u] + 1)
                return false;
    return true;
}

} // namespace packcol
