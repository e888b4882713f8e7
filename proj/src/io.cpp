#include "packcol/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace packcol {

ParseError::ParseError(int line, const std::string &msg, const std::string &source)
    : std::runtime_error((source.empty() ? "" : source + ": ") +
                         (line > 0 ? "line " + std::to_string(line) + ": " : "") + msg),
      line_(line), message_(msg) {}

GraphFormat parse_format_name(const std::string &name) {
    if (name == "edgelist" || name == "edge-list" || name == "el")
        return GraphFormat::EdgeList;
    if (name == "dimacs" || name == "col")
        return GraphFormat::Dimacs;
    throw std::invalid_argument("unknown graph format '" + name + "' (expected edgelist|dimacs)");
}

namespace {

bool blank(const std::string &s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly the listed integers from a line; trailing garbage is an error.
template <typename... Ints>
bool scan(std::istringstream &ls, Ints &...xs) {
    (ls >> ... >> xs);
    if (ls.fail())
        return false;
    std::string rest;
    return !(ls >> rest);
}

void check_vertex(long long x, int n, int lineno) {
    if (x < 0 || x >= n)
        throw ParseError(lineno, "vertex index out of range for n=" + std::to_string(n));
}

Graph read_edge_list(std::istream &in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line) || line[line.find_first_not_of(" \t")] == '#')
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!scan(ls, n, m) || n < 1 || m < 0)
                throw ParseError(lineno, "expected header 'n m' with n >= 1, m >= 0");
            continue;
        }
        long long u, v;
        if (!scan(ls, u, v))
            throw ParseError(lineno, "expected edge 'u v'");
        check_vertex(u, static_cast<int>(n), lineno);
        check_vertex(v, static_cast<int>(n), lineno);
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "more edge lines than the declared " + std::to_string(m));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0)
        throw ParseError(lineno, "missing header 'n m'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                     std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

Graph read_dimacs(std::istream &in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line))
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (n >= 0)
                throw ParseError(lineno, "duplicate problem line");
            ls >> kind;
            if (kind != "edge" && kind != "col")
                throw ParseError(lineno, "expected 'p edge n m'");
            if (!scan(ls, n, m) || n < 1 || m < 0)
                throw ParseError(lineno, "expected 'p edge n m' with n >= 1, m >= 0");
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw ParseError(lineno, "edge before problem line");
            long long u, v;
            if (!scan(ls, u, v))
                throw ParseError(lineno, "expected 'e u v'");
            check_vertex(u - 1, static_cast<int>(n), lineno);
            check_vertex(v - 1, static_cast<int>(n), lineno);
            if (u == v)
                throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(lineno, "unrecognized line type '" + tag + "'");
    }
    if (n < 0)
        throw ParseError(lineno, "missing problem line 'p edge n m'");
    return Graph(static_cast<int>(n), edges);
}

} // namespace

Graph read_graph(std::istream &in, GraphFormat format) {
    return format == GraphFormat::EdgeList ? read_edge_list(in) : read_dimacs(in);
}

Graph parse_graph(const std::filesystem::path &path, GraphFormat format) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open graph file", path.string());
    try {
        return read_graph(in, format);
    } catch (const ParseError &e) {
        throw ParseError(e.line(), e.message(), path.string());
    }
}

void write_graph(std::ostream &out, const Graph &g, GraphFormat format) {
    auto edges = g.edges();
    if (format == GraphFormat::EdgeList) {
        out << g.order() << ' ' << edges.size() << '\n';
        for (const auto &[u, v] : edges)
            out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.order() << ' ' << edges.size() << '\n';
        for (const auto &[u, v] : edges)
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

} // namespace packcol
