#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oracles.hpp"
#include "packcol/formulas.hpp"
#include "packcol/generators.hpp"
#include "packcol/io.hpp"

using namespace packcol;

namespace {

std::vector<int> distance_multiset(const Graph &g) {
    DistanceMatrix d(g);
    std::vector<int> out;
    for (Vertex u = 0; u < d.order(); ++u)
        for (int x : d.row(u))
            out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_regular(const Graph &g, int degree) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree)
            return false;
    return true;
}

Graph read_string(const std::string &text, GraphFormat fmt) {
    std::istringstream in(text);
    return read_graph(in, fmt);
}

} // namespace

TEST_CASE("unitary_cayley examples") {
    CHECK(unitary_cayley(5) == complete_graph(5));
    CHECK(unitary_cayley(8) == circulant(ConnectionSet(8, {1, 3, 5, 7}), false));
    Graph k44 = complete_multipartite({4, 4});
    CHECK(unitary_cayley(8).degree_sequence() == k44.degree_sequence());
    CHECK(distance_multiset(unitary_cayley(8)) == distance_multiset(k44));
    CHECK(unitary_cayley(6) == cycle_graph(6));
    CHECK_THROWS_AS(unitary_cayley(1), std::invalid_argument);
}

TEST_CASE("unitary_cayley is phi(n)-regular") {
    for (int n = 2; n <= 500; ++n) {
        Graph g = unitary_cayley(n);
        REQUIRE(is_regular(g, static_cast<int>(oracle::gcd_phi(n))));
        CHECK(euler_phi(n) == oracle::gcd_phi(n));
    }
}

TEST_CASE("unitary_cayley of a prime is complete") {
    for (int p = 2; p <= 100; ++p)
        if (is_prime(p))
            CHECK(unitary_cayley(p) == complete_graph(p));
}

TEST_CASE("circulant over the units equals unitary_cayley") {
    for (int n = 2; n <= 200; ++n)
        CHECK(circulant(ConnectionSet(n, units(n)), false) == unitary_cayley(n));
}

TEST_CASE("circulant examples") {
    Graph g = circulant(ConnectionSet(12, {1, 3, 9, 11}), false);
    CHECK(g.order() == 12);
    CHECK(is_regular(g, 4));
    CHECK(circulant(ConnectionSet(5, {1}), true) == cycle_graph(5));
}

TEST_CASE("asymmetric connection sets need the symmetrize flag") {
    ConnectionSet s(9, {1, 3, 5, 7});
    CHECK_FALSE(s.symmetric());
    CHECK(s.symmetric_closure() == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8});
    try {
        circulant(s, false);
        FAIL("expected rejection");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("residue 1") != std::string::npos);
    }
    CHECK(circulant(s, true) == complete_graph(9));
    CHECK_THROWS_AS(ConnectionSet(5, {0}), std::invalid_argument);
    CHECK_THROWS_AS(ConnectionSet(5, {5}), std::invalid_argument);
}

TEST_CASE("classic families") {
    Graph k357 = complete_multipartite({3, 5, 7});
    CHECK(k357.order() == 15);
    CHECK(k357.edge_count() == 3 * 5 + 3 * 7 + 5 * 7);
    Graph c15 = cycle_graph(15);
    CHECK(c15.order() == 15);
    CHECK(is_regular(c15, 2));
    CHECK(path_graph(1).order() == 1);
    CHECK(path_graph(1).edge_count() == 0);
    Graph s10 = star_graph(10);
    CHECK(s10.order() == 11);
    CHECK(s10.degree(0) == 10);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("direct_product examples") {
    Graph k2 = complete_graph(2), k3 = complete_graph(3);
    Graph prod = direct_product(k2, k3);
    CHECK(prod.order() == 6);
    CHECK(is_regular(prod, 2));
    CHECK(diameter(DistanceMatrix(prod)) == 3); // connected 2-regular on 6 vertices: C6
    CHECK(distance_multiset(prod) == distance_multiset(cycle_graph(6)));

    Graph edgeless(4, std::vector<Edge>{});
    CHECK(direct_product(cycle_graph(5), edgeless).edge_count() == 0);
    CHECK(direct_product(edgeless, k3).edge_count() == 0);
}

TEST_CASE("product of multipartite factors matches unitary_cayley invariants") {
    for (int n = 4; n <= 60; ++n) {
        if (is_prime(n))
            continue;
        Graph a = unitary_cayley(n), b = unitary_cayley_product_form(n);
        REQUIRE(a.order() == b.order());
        CHECK(a.degree_sequence() == b.degree_sequence());
        CHECK(distance_multiset(a) == distance_multiset(b));
    }
}

TEST_CASE("generalized_petersen") {
    Graph pet = generalized_petersen(5, 2);
    CHECK(pet.order() == 10);
    CHECK(is_regular(pet, 3));
    CHECK(diameter(DistanceMatrix(pet)) == 2);

    Graph g122 = generalized_petersen(12, 2);
    CHECK(g122.order() == 24);
    CHECK(g122.edge_count() == 36);

    // Q3: cubic, 8 vertices, diameter 3, bipartite distance profile 1x0, 3x1, 3x2, 1x3 per vertex.
    Graph cube = generalized_petersen(4, 1);
    CHECK(cube.order() == 8);
    CHECK(is_regular(cube, 3));
    DistanceMatrix dq(cube);
    CHECK(diameter(dq) == 3);
    for (Vertex u = 0; u < 8; ++u) {
        std::vector<int> row(dq.row(u).begin(), dq.row(u).end());
        std::sort(row.begin(), row.end());
        CHECK(row == std::vector<int>{0, 1, 1, 1, 2, 2, 2, 3});
    }

    CHECK_THROWS_AS(generalized_petersen(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(generalized_petersen(2, 1), std::invalid_argument);
}

TEST_CASE("truncated_icosahedron") {
    Graph ti = truncated_icosahedron();
    CHECK(ti.order() == 60);
    CHECK(ti.edge_count() == 90);
    CHECK(is_regular(ti, 3));
    DistanceMatrix d(ti);
    CHECK(diameter(d) == 9);
    // vertex-transitive: every vertex has the same distance profile
    std::vector<int> first(d.row(0).begin(), d.row(0).end());
    std::sort(first.begin(), first.end());
    for (Vertex u = 1; u < 60; ++u) {
        std::vector<int> row(d.row(u).begin(), d.row(u).end());
        std::sort(row.begin(), row.end());
        CHECK(row == first);
    }
}

TEST_CASE("parse edge lists and DIMACS") {
    Graph p3 = read_string("3 2\n0 1\n1 2", GraphFormat::EdgeList);
    CHECK(p3 == path_graph(3));

    Graph tri = read_string("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::Dimacs);
    CHECK(tri == complete_graph(3));

    try {
        read_string("p edge 3 3\ne 1 2\ne 1 5\n", GraphFormat::Dimacs);
        FAIL("expected rejection");
    } catch (const ParseError &e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string &text, GraphFormat fmt) {
        try {
            read_string(text, fmt);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("3 2\n0 1\nx y\n", GraphFormat::EdgeList) == 3);
    CHECK(line_of("3 1\n0 0\n", GraphFormat::EdgeList) == 2);
    CHECK(line_of("3 1\n0 3\n", GraphFormat::EdgeList) == 2);
    CHECK(line_of("3 1\n0 1 2\n", GraphFormat::EdgeList) == 2);
    CHECK(line_of("3 2\n0 1\n", GraphFormat::EdgeList) == 2);
    CHECK(line_of("e 1 2\n", GraphFormat::Dimacs) == 1);
    CHECK(line_of("p edge 3 1\nq 1 2\n", GraphFormat::Dimacs) == 2);
    CHECK(line_of("p edge 3 1\ne 0 2\n", GraphFormat::Dimacs) == 2);
    CHECK_THROWS_AS(parse_graph("/nonexistent/graph.txt", GraphFormat::EdgeList), ParseError);
}

TEST_CASE("parse then write is the identity on canonical edge lists") {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 12;
        Graph g(n, oracle::random_edges(n, 0.4, gen));
        for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Dimacs}) {
            std::ostringstream out;
            write_graph(out, g, fmt);
            Graph back = read_string(out.str(), fmt);
            CHECK(back == g);
            std::ostringstream again;
            write_graph(again, back, fmt);
            CHECK(again.str() == out.str());
        }
    }
}

TEST_CASE("graph_from_spec") {
    CHECK(graph_from_spec("cayley:12") == unitary_cayley(12));
    CHECK(graph_from_spec("cycle:15") == cycle_graph(15));
    CHECK(graph_from_spec("multipartite:3,5,7") == complete_multipartite({3, 5, 7}));
    CHECK(graph_from_spec("petersen:12,2") == generalized_petersen(12, 2));
    CHECK(graph_from_spec("circulant:12:1,3,9,11").edge_count() == 24);
    CHECK(graph_from_spec("circulant-sym:5:1") == cycle_graph(5));
    CHECK(graph_from_spec("ti").order() == 60);
    CHECK_THROWS_AS(graph_from_spec("circulant:9:1,3,5,7"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_spec("nonsense:3"), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_spec("cycle:x"), std::invalid_argument);

    auto path = std::filesystem::temp_directory_path() / "packcol_spec_test.col";
    {
        std::ofstream out(path);
        out << "p edge 3 2\ne 1 2\ne 2 3\n";
    }
    CHECK(graph_from_spec("dimacs:" + path.string()) == path_graph(3));
    std::filesystem::remove(path);
}
