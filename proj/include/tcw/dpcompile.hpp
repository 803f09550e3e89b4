#ifndef TCW_DPCOMPILE_HPP
#define TCW_DPCOMPILE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcw/circuit.hpp"
#include "tcw/graph.hpp"

namespace tcw {

struct CompileReport {
  std::size_t gates = 0;
  std::size_t bags = 0;
  std::vector<std::size_t> states_per_bag;
};
std::string compile_report_to_json(const CompileReport& r);

// Pathwidth sweep over vertex weights; MAX_PLUS; includes the empty set.
Circuit compile_is(const GraphInstance& g, const PathDecomposition& d,
                   CompileReport* report = nullptr);

// Hamiltonian-cycle sweep over edge weights; MIN_PLUS; width <= 8.
Circuit compile_tsp_pw(const GraphInstance& g, const PathDecomposition& d, bool directed,
                       CompileReport* report = nullptr);

// Minimum spanning out-tree sweep over edge weights; MIN_PLUS; width <= 7.
Circuit compile_dst_pw(const GraphInstance& g, const PathDecomposition& d,
                       CompileReport* report = nullptr);

// Subset DP over the complete digraph on u1..uN, tour anchored at u1.
Circuit compile_held_karp(std::uint32_t N);

// Shared relaxation DAG over u1..uN with the (source, target) entry as
// output; vertices are 1-based.
Circuit compile_floyd_warshall(std::uint32_t N, std::uint32_t source, std::uint32_t target);

}  // namespace tcw

#endif
