#pragma once

#include <set>
#include <string>
#include <vector>

#include "packcol/graph.hpp"

namespace packcol {

/// Residues of Z_n used as Cayley connection set.
class ConnectionSet {
  public:
    /// Throws if n < 2 or any residue lies outside 1..n-1.
    ConnectionSet(int n, std::set<int> residues);

    int modulus() const { return n_; }
    const std::set<int> &residues() const { return residues_; }
    /// residues() together with n - s for each s.
    const std::set<int> &symmetric_closure() const { return closure_; }
    bool symmetric() const { return residues_ == closure_; }

  private:
    int n_;
    std::set<int> residues_;
    std::set<int> closure_;
};

/// Units of Z_n: residues r in 1..n-1 with gcd(r, n) = 1.
std::set<int> units(int n);

Graph unitary_cayley(int n);

/// Cay(Z_n, S). Without symmetrize, S must already be closed under negation;
/// otherwise std::invalid_argument names the first residue whose negative is missing.
Graph circulant(const ConnectionSet &s, bool symmetrize);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// n leaves around center vertex 0.
Graph star_graph(int n);
/// Parts laid out consecutively: part 0 gets the first parts[0] indices, etc.
Graph complete_multipartite(const std::vector<int> &parts);

/// Vertex (u1, u2) is flattened to u1 * g2.order() + u2.
Graph direct_product(const Graph &g1, const Graph &g2);

/// Direct product of the complete multipartite graphs K_{p^(r-1),...,p^(r-1)}
/// (p parts) over the prime powers of n. Isomorphic to unitary_cayley(n).
Graph unitary_cayley_product_form(int n);

/// Outer cycle 0..n-1, inner vertices n..2n-1 with v_i ~ v_{i+k}, spokes u_i ~ v_i.
Graph generalized_petersen(int n, int k);

/// 60 vertices, 90 edges, cubic.
Graph truncated_icosahedron();

/// Builds a graph from a short textual spec, used by the CLI and bench suites:
///   complete:N  cycle:N  path:N  star:N  multipartite:A,B,...
///   cayley:N    circulant:N:S1,S2,...   circulant-sym:N:S1,S2,...
///   petersen:N,K  ti  file:PATH (edge list)  dimacs:PATH
Graph graph_from_spec(const std::string &spec);

} // namespace packcol
