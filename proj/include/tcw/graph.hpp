#ifndef TCW_GRAPH_HPP
#define TCW_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tcw/perm.hpp"
#include "tcw/poly.hpp"

namespace tcw {

struct LayerPos {
  std::int32_t column = 0;
  std::int32_t row = 0;
  std::int32_t sublayer = 0;
};

// Labeled graph, directed or undirected; no self-loops, no duplicate edges.
// Undirected edges are stored with the smaller vertex id first.
class GraphInstance {
 public:
  explicit GraphInstance(bool directed) : directed_(directed) {}

  bool directed() const { return directed_; }
  std::uint32_t add_vertex(const std::string& label);
  std::uint32_t add_vertex(const std::string& label, LayerPos pos);
  void add_edge(std::uint32_t u, std::uint32_t v);

  std::uint32_t num_vertices() const { return static_cast<std::uint32_t>(labels_.size()); }
  const std::string& label(std::uint32_t v) const { return labels_.at(v); }
  std::uint32_t id(const std::string& label) const;
  bool has_vertex(const std::string& label) const { return index_.count(label) > 0; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
  // Sorted unique edge list; undirected pairs have first < second.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  std::size_t num_edges() const;
  const std::set<std::uint32_t>& out_neighbors(std::uint32_t u) const { return adj_out_.at(u); }
  const std::set<std::uint32_t>& in_neighbors(std::uint32_t u) const { return adj_in_.at(u); }

  const LayerPos* layer(std::uint32_t v) const;

  // Family tag set by the generators ("Gk", "Gnk", "GnkBar", "Hnk"); empty otherwise.
  std::string family;
  std::uint32_t fam_n = 0, fam_k = 0;

 private:
  bool directed_;
  std::vector<std::string> labels_;
  std::map<std::string, std::uint32_t> index_;
  std::vector<std::set<std::uint32_t>> adj_out_, adj_in_;  // undirected: symmetric
  std::map<std::uint32_t, LayerPos> layers_;
};

struct PathDecomposition {
  std::vector<std::vector<std::uint32_t>> bags;
  std::uint32_t width() const;
};

struct DecompositionReport {
  bool ok = true;
  std::uint32_t width = 0;
  std::vector<std::string> violations;
};

DecompositionReport verify_path_decomposition(const GraphInstance& g, const PathDecomposition& d);

using Assignment = std::vector<std::uint8_t>;  // bits over [k]

// 2-CNF clause as an ordered tuple: a < b, negation bits.
struct Clause {
  std::uint32_t a, b;
  std::uint8_t na, nb;
};
// Clauses of the k-variable instance in canonical order (a, b, na, nb lexicographic).
std::vector<Clause> clause_list(std::uint32_t k);

std::pair<GraphInstance, PathDecomposition> gen_is_graph(std::uint32_t k);
// Vertex labels of the canonical independent set for the given assignment.
std::vector<std::string> canonical_solution(std::uint32_t k, const Assignment& a);

std::pair<GraphInstance, PathDecomposition> gen_dtsp_graph(std::uint32_t n, std::uint32_t k);
std::pair<GraphInstance, PathDecomposition> gen_tsp_graph(std::uint32_t n, std::uint32_t k);
std::pair<GraphInstance, PathDecomposition> gen_dst_graph(std::uint32_t n, std::uint32_t k);

// A cycle as a vertex sequence (closed implicitly); directed cycles follow
// edge directions, undirected ones are canonicalized by canonical_cycle.
using VertexCycle = std::vector<std::uint32_t>;

// Least vertex first; undirected cycles also pick the lexicographically
// smaller direction.
VertexCycle canonical_cycle(const VertexCycle& c, bool directed);

struct PermSequence {
  std::vector<Perm> perms;  // rho_1..rho_n (TSP) or rho_0..rho_n (DST)
};

PermSequence cycle_to_sequence(const GraphInstance& g, const VertexCycle& cycle);
VertexCycle sequence_to_cycle(const GraphInstance& g, const PermSequence& s);

PermSequence nice_cycle_content(const GraphInstance& g, const VertexCycle& cycle);

VertexCycle sample_nice_cycle(std::uint32_t n, std::uint32_t k, std::uint64_t seed);

enum class CountFamily { DTSP_CYCLES, DST_SEQUENCES, DST_NICE_CYCLES };
std::uint64_t count_formulas(CountFamily family, std::uint32_t n, std::uint32_t k);

// Variable naming shared by the DP compilers and oracles.
std::string vertex_var_name(const GraphInstance& g, std::uint32_t v);
std::string edge_var_name(const GraphInstance& g, std::uint32_t u, std::uint32_t v);
VarUniverse vertex_universe(const GraphInstance& g);
VarUniverse edge_universe(const GraphInstance& g);

std::string graph_to_json(const GraphInstance& g);
GraphInstance graph_from_json(const std::string& text);
std::string graph_to_dot(const GraphInstance& g);
std::string decomposition_to_json(const GraphInstance& g, const PathDecomposition& d);
PathDecomposition decomposition_from_json(const GraphInstance& g, const std::string& text);

}  // namespace tcw

#endif
