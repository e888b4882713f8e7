#include "packcol/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace packcol {

const char *to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::Sat:
        return "sat";
    case SearchStatus::Unsat:
        return "unsat";
    case SearchStatus::BudgetExhausted:
        return "budget_exhausted";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
  public:
    Budget(const SearchBudget &b, std::uint64_t nodes_used = 0, double seconds_used = 0.0)
        : node_limit_(b.node_limit), nodes_(nodes_used),
          deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                       std::chrono::duration<double>(b.time_limit_seconds - seconds_used))) {}

    // Counts one node; false once either limit is hit.
    bool tick() {
        if (exhausted_)
            return false;
        if (++nodes_ > node_limit_ || ((nodes_ & 255) == 0 && Clock::now() > deadline_))
            exhausted_ = true;
        return !exhausted_;
    }
    bool exhausted() const { return exhausted_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    std::uint64_t node_limit_;
    std::uint64_t nodes_;
    Clock::time_point deadline_;
    bool exhausted_ = false;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

class PackingSearch {
  public:
    PackingSearch(const DistanceMatrix &d, int k, Budget &budget)
        : d_(d), n_(d.order()), k_(k), budget_(budget), color_(n_, 0),
          blocked_(static_cast<std::size_t>(k_ + 1) * n_, 0), class_size_(k_ + 1, 0) {
        std::vector<int> degree(n_, 0);
        for (Vertex u = 0; u < n_; ++u)
            for (int x : d_.row(u))
                degree[u] += (x == 1);
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
        auto diam = diameter(d_);
        // Colors at or above this threshold admit at most one vertex each.
        singleton_from_ = diam ? std::max(*diam, 1) : k_ + 1;
    }

    SearchStatus run() {
        if (k_ < 1)
            return SearchStatus::Unsat;
        if (expand(0))
            return SearchStatus::Sat;
        return budget_.exhausted() ? SearchStatus::BudgetExhausted : SearchStatus::Unsat;
    }

    Coloring coloring() const { return Coloring(color_, k_); }

  private:
    int &blocked(int color, Vertex v) { return blocked_[static_cast<std::size_t>(color) * n_ + v]; }

    void assign(Vertex v, int c, int delta) {
        auto row = d_.row(v);
        for (Vertex w = 0; w < n_; ++w)
            if (w != v && row[w] <= c)
                blocked(c, w) += delta;
        class_size_[c] += delta;
        color_[v] = delta > 0 ? c : 0;
    }

    // Upper bound on how many of the uncolored vertices can still be placed,
    // stopping early once it reaches `need`.
    bool capacity_suffices(int depth, int need) {
        cands_.clear();
        int total = 0;
        for (int c = 1; c <= k_ && total < need; ++c) {
            if (c >= singleton_from_) {
                total += class_size_[c] == 0;
                continue;
            }
            cands_.clear();
            for (int p = depth; p < n_; ++p)
                if (blocked(c, order_[p]) == 0)
                    cands_.push_back(order_[p]);
            total += clique_cover_size(c);
        }
        return total >= need;
    }

    // Greedy partition of cands_ into groups that are pairwise within distance c.
    int clique_cover_size(int c) {
        cliques_.clear();
        for (Vertex w : cands_) {
            auto row = d_.row(w);
            bool placed = false;
            for (auto &cl : cliques_) {
                if (std::all_of(cl.begin(), cl.end(), [&](Vertex m) { return row[m] <= c; })) {
                    cl.push_back(w);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                cliques_.push_back({w});
        }
        return static_cast<int>(cliques_.size());
    }

    bool expand(int depth) {
        if (!budget_.tick())
            return false;
        if (depth == n_)
            return true;
        const int remaining = n_ - depth;
        for (int p = depth; p < n_; ++p) {
            Vertex w = order_[p];
            bool any = false;
            for (int c = 1; c <= k_ && !any; ++c)
                any = blocked(c, w) == 0;
            if (!any)
                return false;
        }
        if (!capacity_suffices(depth, remaining))
            return false;

        const Vertex v = order_[depth];
        bool tried_fresh_singleton = false;
        for (int c = 1; c <= k_; ++c) {
            if (blocked(c, v) != 0)
                continue;
            if (c >= singleton_from_ && class_size_[c] == 0) {
                if (tried_fresh_singleton)
                    continue;
                tried_fresh_singleton = true;
            }
            assign(v, c, +1);
            if (expand(depth + 1))
                return true;
            assign(v, c, -1);
            if (budget_.exhausted())
                return false;
        }
        return false;
    }

    const DistanceMatrix &d_;
    int n_;
    int k_;
    Budget &budget_;
    std::vector<int> color_;
    std::vector<int> blocked_;
    std::vector<int> class_size_;
    std::vector<Vertex> order_;
    int singleton_from_;
    std::vector<Vertex> cands_;
    std::vector<std::vector<Vertex>> cliques_;
};

} // namespace

DecideResult decide_packing_k(const DistanceMatrix &d, int k, const SearchBudget &budget) {
    const auto t0 = Clock::now();
    Budget b(budget);
    PackingSearch search(d, k, b);
    DecideResult out;
    out.status = search.run();
    if (out.status == SearchStatus::Sat)
        out.coloring = search.coloring();
    out.nodes = b.nodes();
    out.seconds = seconds_since(t0);
    return out;
}

ExactResult exact_packing_chromatic(const DistanceMatrix &d, const SearchBudget &budget) {
    const auto t0 = Clock::now();
    ExactResult out;
    out.upper_bound = d.order();
    for (int k = 1; k <= d.order(); ++k) {
        Budget b(budget, out.nodes, seconds_since(t0));
        PackingSearch search(d, k, b);
        const auto status = search.run();
        out.nodes = b.nodes();
        if (status == SearchStatus::Unsat) {
            out.lower_bound = k + 1;
            continue;
        }
        out.status = status;
        if (status == SearchStatus::Sat) {
            out.value = k;
            out.upper_bound = k;
            out.certificate = search.coloring();
        }
        break;
    }
    out.seconds = seconds_since(t0);
    return out;
}

ExactResult exact_packing_chromatic(const Graph &g, const SearchBudget &budget) {
    return exact_packing_chromatic(DistanceMatrix(g), budget);
}

namespace {

class IndependenceSearch {
  public:
    IndependenceSearch(const Graph &g, Budget &budget)
        : n_(g.order()), adj_(static_cast<std::size_t>(n_) * n_, 0), budget_(budget) {
        for (const auto &[u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
            adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
        }
    }

    int root_bound() {
        std::vector<Vertex> all(n_);
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> cls;
        cover(all, cls);
        return all.empty() ? 0 : cls.back();
    }

    void run() {
        std::vector<Vertex> all(n_);
        std::iota(all.begin(), all.end(), 0);
        expand(all, 0);
    }

    int best() const { return best_; }

  private:
    bool adjacent(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a) * n_ + b]; }

    // Reorders cands by greedy clique index (1-based, non-decreasing) and
    // writes the index of each position into cls.
    void cover(std::vector<Vertex> &cands, std::vector<int> &cls) const {
        std::vector<std::vector<Vertex>> cliques;
        for (Vertex w : cands) {
            bool placed = false;
            for (auto &cl : cliques) {
                if (std::all_of(cl.begin(), cl.end(), [&](Vertex m) { return adjacent(w, m); })) {
                    cl.push_back(w);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                cliques.push_back({w});
        }
        cands.clear();
        cls.clear();
        for (std::size_t i = 0; i < cliques.size(); ++i)
            for (Vertex w : cliques[i]) {
                cands.push_back(w);
                cls.push_back(static_cast<int>(i) + 1);
            }
    }

    void expand(std::vector<Vertex> cands, int size) {
        if (!budget_.tick())
            return;
        std::vector<int> cls;
        cover(cands, cls);
        for (int i = static_cast<int>(cands.size()) - 1; i >= 0; --i) {
            if (size + cls[i] <= best_)
                return;
            const Vertex w = cands[i];
            std::vector<Vertex> next;
            for (int j = 0; j < i; ++j)
                if (!adjacent(w, cands[j]))
                    next.push_back(cands[j]);
            best_ = std::max(best_, size + 1);
            if (!next.empty())
                expand(std::move(next), size + 1);
            if (budget_.exhausted())
                return;
        }
    }

    int n_;
    std::vector<char> adj_;
    Budget &budget_;
    int best_ = 0;
};

} // namespace

IndependenceResult independence_number_exact(const Graph &g, const SearchBudget &budget) {
    Budget b(budget);
    IndependenceSearch search(g, b);
    IndependenceResult out;
    out.upper_bound = search.root_bound();
    search.run();
    out.value = search.best();
    out.nodes = b.nodes();
    if (b.exhausted()) {
        out.status = SearchStatus::BudgetExhausted;
    } else {
        out.status = SearchStatus::Sat;
        out.upper_bound = out.value;
    }
    return out;
}

} // namespace packcol
