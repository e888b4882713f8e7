#include "packcol/generators.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "packcol/formulas.hpp"
#include "packcol/io.hpp"

namespace packcol {

ConnectionSet::ConnectionSet(int n, std::set<int> residues) : n_(n), residues_(std::move(residues)) {
    if (n_ < 2)
        throw std::invalid_argument("circulant modulus must be >= 2, got " + std::to_string(n_));
    for (int s : residues_) {
        if (s < 1 || s >= n_)
            throw std::invalid_argument("connection residue " + std::to_string(s) +
                                        " outside 1.." + std::to_string(n_ - 1));
        closure_.insert(s);
        closure_.insert(n_ - s);
    }
}

std::set<int> units(int n) {
    std::set<int> out;
    for (int r = 1; r < n; ++r)
        if (std::gcd(r, n) == 1)
            out.insert(r);
    return out;
}

Graph unitary_cayley(int n) {
    if (n < 2)
        throw std::invalid_argument("unitary Cayley graph needs n >= 2, got " + std::to_string(n));
    return circulant(ConnectionSet(n, units(n)), false);
}

Graph circulant(const ConnectionSet &s, bool symmetrize) {
    if (!symmetrize) {
        for (int r : s.residues())
            if (!s.residues().contains(s.modulus() - r))
                throw std::invalid_argument(
                    "connection set is not symmetric: residue " + std::to_string(r) +
                    " present but " + std::to_string(s.modulus() - r) + " missing mod " +
                    std::to_string(s.modulus()));
    }
    const int n = s.modulus();
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int r : s.symmetric_closure())
            if (int v = (u + r) % n; u < v)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        edges.emplace_back(u, (u + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

Graph star_graph(int n) {
    if (n < 0)
        throw std::invalid_argument("star needs n >= 0 leaves");
    std::vector<Edge> edges;
    for (int leaf = 1; leaf <= n; ++leaf)
        edges.emplace_back(0, leaf);
    return Graph(n + 1, edges);
}

Graph complete_multipartite(const std::vector<int> &parts) {
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] < 1)
            throw std::invalid_argument("multipartite part sizes must be >= 1");
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    }
    std::vector<Edge> edges;
    const int n = static_cast<int>(part_of.size());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v])
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph direct_product(const Graph &g1, const Graph &g2) {
    const int n2 = g2.order();
    std::vector<Edge> edges;
    for (const auto &[a1, b1] : g1.edges()) {
        for (const auto &[a2, b2] : g2.edges()) {
            // each factor edge is unordered, so both orientations of the second pair
            edges.emplace_back(a1 * n2 + a2, b1 * n2 + b2);
            edges.emplace_back(a1 * n2 + b2, b1 * n2 + a2);
        }
    }
    return Graph(g1.order() * n2, edges);
}

Graph unitary_cayley_product_form(int n) {
    if (n < 2)
        throw std::invalid_argument("unitary Cayley graph needs n >= 2, got " + std::to_string(n));
    std::optional<Graph> acc;
    for (const auto &[p, r] : factorize(static_cast<std::uint64_t>(n)).factors) {
        int part = 1;
        for (int i = 1; i < r; ++i)
            part *= static_cast<int>(p);
        Graph factor = complete_multipartite(std::vector<int>(p, part));
        acc = acc ? direct_product(*acc, factor) : factor;
    }
    return *acc;
}

Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument("generalized Petersen graph needs n >= 3 and 1 <= k < n/2, got (" +
                                    std::to_string(n) + "," + std::to_string(k) + ")");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
        edges.emplace_back(n + i, n + (i + k) % n);
    }
    return Graph(2 * n, edges);
}

Graph truncated_icosahedron() {
    // Vertices numbered in BFS order from one corner of the polyhedron.
    static constexpr std::array<Edge, 90> kEdges{{
        {0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6},
        {2, 7}, {3, 8}, {3, 9}, {4, 10}, {4, 11}, {5, 12},
        {5, 13}, {6, 10}, {6, 14}, {7, 9}, {7, 15}, {8, 12},
        {8, 16}, {9, 17}, {10, 18}, {11, 13}, {11, 19}, {12, 20},
        {13, 21}, {14, 22}, {14, 23}, {15, 23}, {15, 24}, {16, 25},
        {16, 26}, {17, 25}, {17, 27}, {18, 22}, {18, 28}, {19, 28},
        {19, 29}, {20, 26}, {20, 30}, {21, 30}, {21, 31}, {22, 32},
        {23, 33}, {24, 27}, {24, 34}, {25, 35}, {26, 36}, {27, 37},
        {28, 38}, {29, 31}, {29, 39}, {30, 40}, {31, 41}, {32, 42},
        {32, 43}, {33, 34}, {33, 42}, {34, 44}, {35, 37}, {35, 45},
        {36, 45}, {36, 46}, {37, 47}, {38, 39}, {38, 43}, {39, 48},
        {40, 41}, {40, 46}, {41, 49}, {42, 50}, {43, 51}, {44, 47},
        {44, 52}, {45, 53}, {46, 54}, {47, 55}, {48, 49}, {48, 56},
        {49, 57}, {50, 51}, {50, 52}, {51, 56}, {52, 58}, {53, 54},
        {53, 55}, {54, 57}, {55, 58}, {56, 59}, {57, 59}, {58, 59},
    }};
    return Graph(60, kEdges);
}

namespace {

std::vector<int> parse_int_list(const std::string &text, const std::string &spec) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size())
            throw std::invalid_argument("bad integer '" + tok + "' in graph spec '" + spec + "'");
        out.push_back(x);
    }
    if (out.empty())
        throw std::invalid_argument("empty integer list in graph spec '" + spec + "'");
    return out;
}

int single_int(const std::string &text, const std::string &spec) {
    auto v = parse_int_list(text, spec);
    if (v.size() != 1)
        throw std::invalid_argument("expected one integer in graph spec '" + spec + "'");
    return v[0];
}

} // namespace

Graph graph_from_spec(const std::string &spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (kind == "ti" || kind == "truncated-icosahedron")
        return truncated_icosahedron();
    if (kind == "file" || kind == "edgelist")
        return parse_graph(arg, GraphFormat::EdgeList);
    if (kind == "dimacs")
        return parse_graph(arg, GraphFormat::Dimacs);
    if (kind == "complete")
        return complete_graph(single_int(arg, spec));
    if (kind == "cycle")
        return cycle_graph(single_int(arg, spec));
    if (kind == "path")
        return path_graph(single_int(arg, spec));
    if (kind == "star")
        return star_graph(single_int(arg, spec));
    if (kind == "multipartite")
        return complete_multipartite(parse_int_list(arg, spec));
    if (kind == "cayley" || kind == "unitary")
        return unitary_cayley(single_int(arg, spec));
    if (kind == "petersen") {
        auto v = parse_int_list(arg, spec);
        if (v.size() != 2)
            throw std::invalid_argument("petersen spec needs N,K: '" + spec + "'");
        return generalized_petersen(v[0], v[1]);
    }
    if (kind == "circulant" || kind == "circulant-sym") {
        const auto sep = arg.find(':');
        if (sep == std::string::npos)
            throw std::invalid_argument("circulant spec needs N:S1,S2,...: '" + spec + "'");
        const int n = single_int(arg.substr(0, sep), spec);
        auto res = parse_int_list(arg.substr(sep + 1), spec);
        return circulant(ConnectionSet(n, {res.begin(), res.end()}), kind == "circulant-sym");
    }
    throw std::invalid_argument("unknown graph spec '" + spec + "'");
}

} // namespace packcol
