#ifndef TCW_ORACLE_HPP
#define TCW_ORACLE_HPP

#include "tcw/graph.hpp"
#include "tcw/poly.hpp"

namespace tcw {

struct OracleResult {
  std::int64_t optimum = 0;
  // brute_is: the optimal vertex set; brute_tsp: the optimal cycle;
  // brute_dst: the optimal parent vector (parent[root] = root).
  std::vector<std::uint32_t> witness;
  std::uint64_t count = 0;  // number of feasible structures
};

// Independent sets (including the empty set), canonical order. |V| <= 24.
std::vector<std::vector<std::uint32_t>> enumerate_is(const GraphInstance& g);
// weights: valuation over vertex_universe(g)
OracleResult brute_is(const GraphInstance& g, const Valuation& weights);

// Hamiltonian cycles, canonical order; undirected graphs yield one canonical
// representative per cycle. |V| <= 18.
std::vector<VertexCycle> enumerate_ham_cycles(const GraphInstance& g);
// weights: valuation over edge_universe(g)
OracleResult brute_tsp(const GraphInstance& g, const Valuation& weights);

// Spanning out-trees over all roots, as parent vectors, canonical order. |V| <= 9.
std::vector<std::vector<std::uint32_t>> enumerate_arborescences(const GraphInstance& g);
OracleResult brute_dst(const GraphInstance& g, const Valuation& weights);

// Directed matrix-tree count of out-trees rooted at root, by exact
// fraction-free integer elimination. |V| <= 7.
std::uint64_t count_arborescences_matrix_tree(const GraphInstance& g, std::uint32_t root);

// All nice Hamiltonian cycles of the (n, k) spanning-tree family, both
// directions, canonical order. 2nk <= 12.
std::vector<VertexCycle> enumerate_nice_cycles(std::uint32_t n, std::uint32_t k);

// Reference polynomials built from the enumerations.
Polynomial oracle_is_polynomial(const GraphInstance& g);
Polynomial oracle_tsp_polynomial(const GraphInstance& g);
Polynomial oracle_dst_polynomial(const GraphInstance& g);

}  // namespace tcw

#endif
