#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "tcw/graph.hpp"

using namespace tcw;

TEST_CASE("clause instance G_k: counts and structure") {
  auto [g, d] = gen_is_graph(2);
  CHECK(g.num_vertices() == 20);  // 2*8 literal copies + 4 clauses
  CHECK(g.num_edges() == 22);     // 14 chain + 8 clause edges
  auto rep = verify_path_decomposition(g, d);
  CHECK(rep.ok);
  CHECK(rep.width <= 3);  // k + 1
  // every clause vertex has degree exactly 2
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    if (g.label(v)[0] == 'w') CHECK(g.out_neighbors(v).size() == 2);
  auto [g3, d3] = gen_is_graph(3);
  CHECK(g3.num_vertices() == 84);  // 3*24 + 12, q = 12
  CHECK(verify_path_decomposition(g3, d3).ok);
  CHECK(verify_path_decomposition(g3, d3).width <= 4);
  CHECK_THROWS_AS(gen_is_graph(1), Error);
}

TEST_CASE("canonical solutions are independent, distinct, and 2^k many") {
  auto [g, d] = gen_is_graph(2);
  std::set<std::vector<std::string>> seen;
  for (std::uint8_t b0 : {0, 1})
    for (std::uint8_t b1 : {0, 1}) {
      auto sol = canonical_solution(2, {b0, b1});
      std::set<std::uint32_t> ids;
      for (auto& name : sol) ids.insert(g.id(name));
      for (std::uint32_t u : ids)
        for (std::uint32_t v : g.out_neighbors(u)) CHECK(ids.count(v) == 0);
      std::sort(sol.begin(), sol.end());
      seen.insert(sol);
    }
  CHECK(seen.size() == 4);
  // one failed clause for the all-zeros assignment: both negation bits set
  auto sol = canonical_solution(2, {0, 0});
  CHECK(sol.size() == 9);
  CHECK(std::find(sol.begin(), sol.end(), "w[1][2][1][1]") != sol.end());
  CHECK_THROWS_AS(canonical_solution(2, {0}), Error);
  CHECK_THROWS_AS(canonical_solution(2, {0, 2}), Error);
}

TEST_CASE("layered DTSP family G_{n,k}") {
  auto [g, d] = gen_dtsp_graph(3, 2);
  CHECK(g.directed());
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 12);  // n k^2
  auto rep = verify_path_decomposition(g, d);
  CHECK(rep.ok);
  CHECK(rep.width <= 6);  // 3k
  CHECK_THROWS_AS(gen_dtsp_graph(1, 2), Error);
}

TEST_CASE("undirected reduction family") {
  auto [g, d] = gen_tsp_graph(3, 2);
  CHECK(!g.directed());
  CHECK(g.num_vertices() == 18);  // 3nk
  CHECK(g.num_edges() == 3 * 4 + 2 * 6);  // nk^2 inter + 2nk chain
  auto rep = verify_path_decomposition(g, d);
  CHECK(rep.ok);
  CHECK(rep.width <= 6);  // 3k
}

TEST_CASE("spanning-tree family H_{n,k}") {
  auto [g, d] = gen_dst_graph(2, 1);
  CHECK(g.num_vertices() == 4);
  // both columns are in {1, n}: 8 inter-column + 4 intra-column arcs
  CHECK(g.num_edges() == 12);
  CHECK(verify_path_decomposition(g, d).ok);
  auto [g32, d32] = gen_dst_graph(3, 2);
  CHECK(g32.num_vertices() == 12);
  auto rep = verify_path_decomposition(g32, d32);
  CHECK(rep.ok);
  CHECK(rep.width <= 8);  // 4k
}

TEST_CASE("decomposition verifier flags violations") {
  auto [g, d] = gen_dtsp_graph(3, 1);
  PathDecomposition all_in_one{{{0, 1, 2}}};
  auto rep = verify_path_decomposition(g, all_in_one);
  CHECK(rep.ok);
  CHECK(rep.width == 2);
  PathDecomposition bad{{{0, 1}, {2}, {0, 2}}};
  auto rep2 = verify_path_decomposition(g, bad);
  CHECK(!rep2.ok);
  bool interval = false, edge = false;
  for (auto& v : rep2.violations) {
    if (v.find("INTERVAL_BROKEN") != std::string::npos) interval = true;
    if (v.find("EDGE_UNCOVERED") != std::string::npos) edge = true;
  }
  CHECK(interval);
  CHECK(edge);
}

TEST_CASE("cycle/sequence bijection on the layered family") {
  auto [g, d] = gen_dtsp_graph(3, 1);
  VertexCycle cyc{g.id("v[1][1]"), g.id("v[2][1]"), g.id("v[3][1]")};
  auto s = cycle_to_sequence(g, cyc);
  CHECK(s.perms.size() == 3);
  for (auto& p : s.perms) CHECK(p == Perm::identity(1));
  CHECK(sequence_to_cycle(g, s) == cyc);

  auto [g32, d32] = gen_dtsp_graph(3, 2);
  // all sequences with single-cycle cyclic product, counted directly
  std::uint64_t valid = 0;
  auto s2 = enumerate_sym(2);
  for (auto& r1 : s2)
    for (auto& r2 : s2)
      for (auto& r3 : s2) {
        Perm prod = compose(r3, compose(r2, r1));
        if (!is_single_cycle(prod)) continue;
        ++valid;
        PermSequence seq{{r1, r2, r3}};
        auto cycle = sequence_to_cycle(g32, seq);
        auto back = cycle_to_sequence(g32, cycle);
        CHECK(back.perms == seq.perms);
      }
  CHECK(valid == count_formulas(CountFamily::DTSP_CYCLES, 3, 2));
  // a sequence whose product splits into two cycles is rejected
  PermSequence bad{{Perm::identity(2), Perm::identity(2), Perm::identity(2)}};
  CHECK_THROWS_AS(sequence_to_cycle(g32, bad), Error);
}

TEST_CASE("count formulas") {
  CHECK(count_formulas(CountFamily::DTSP_CYCLES, 3, 2) == 4);
  CHECK(count_formulas(CountFamily::DTSP_CYCLES, 3, 3) == 72);
  CHECK(count_formulas(CountFamily::DST_SEQUENCES, 3, 2) == 3456);
  CHECK(count_formulas(CountFamily::DST_NICE_CYCLES, 3, 2) == 6912);
  CHECK_THROWS_AS(count_formulas(CountFamily::DTSP_CYCLES, 1, 2), Error);
  CHECK_THROWS_AS(count_formulas(CountFamily::DST_SEQUENCES, 40, 10), Error);
}

TEST_CASE("nice cycle content on H_{2,1}") {
  auto [g, d] = gen_dst_graph(2, 1);
  std::set<VertexCycle> seen;
  for (std::uint64_t seed = 1; seed <= 64; ++seed) {
    auto cyc = sample_nice_cycle(2, 1, seed);
    auto s = nice_cycle_content(g, cyc);
    REQUIRE(s.perms.size() == 3);
    CHECK(s.perms[0] == Perm::from_cycles(2, {{1, 2}}));
    CHECK(s.perms[2] == Perm::from_cycles(2, {{1, 2}}));
    seen.insert(canonical_cycle(cyc, true));
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("sampled nice cycles pass the content checks at (3,2)") {
  auto [g, d] = gen_dst_graph(3, 2);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    auto cyc = sample_nice_cycle(3, 2, seed);
    auto s = nice_cycle_content(g, cyc);
    CHECK(s.perms.size() == 4);
    CHECK(is_all_two_cycles(s.perms[0]));
    CHECK(is_all_two_cycles(s.perms[3]));
  }
  CHECK(sample_nice_cycle(3, 2, 99) == sample_nice_cycle(3, 2, 99));
}

TEST_CASE("a non-nice hamiltonian cycle is rejected") {
  auto [g, d] = gen_dst_graph(2, 2);
  // zig-zag: uses three intra-column edges in column 1's side trip
  VertexCycle cyc{g.id("v[1][1]"), g.id("v[1][2]"), g.id("v[1][3]"), g.id("v[1][4]"),
                  g.id("v[2][1]"), g.id("v[2][2]"), g.id("v[2][3]"), g.id("v[2][4]")};
  CHECK_THROWS_AS(nice_cycle_content(g, cyc), Error);
  VertexCycle not_ham{g.id("v[1][1]"), g.id("v[2][1]")};
  CHECK_THROWS_AS(nice_cycle_content(g, not_ham), Error);
}

TEST_CASE("canonical cycle representation") {
  VertexCycle c{3, 1, 2};
  CHECK(canonical_cycle(c, true) == VertexCycle{1, 2, 3});
  CHECK(canonical_cycle(c, false) == VertexCycle{1, 2, 3});
  VertexCycle cc{2, 1, 3};
  CHECK(canonical_cycle(cc, false) == VertexCycle{1, 2, 3});
  CHECK(canonical_cycle(cc, true) == VertexCycle{1, 3, 2});
}

TEST_CASE("graph json and dot round trip") {
  auto [g, d] = gen_dst_graph(2, 1);
  auto g2 = graph_from_json(graph_to_json(g));
  CHECK(g2.num_vertices() == g.num_vertices());
  CHECK(g2.edges() == g.edges());
  CHECK(g2.family == "Hnk");
  CHECK(g2.layer(0) != nullptr);
  CHECK(g2.layer(0)->column == 1);
  auto d2 = decomposition_from_json(g, decomposition_to_json(g, d));
  CHECK(d2.bags == d.bags);
  CHECK(graph_to_dot(g).find("->") != std::string::npos);
  auto [gu, du] = gen_tsp_graph(2, 1);
  CHECK(graph_to_dot(gu).find("--") != std::string::npos);
}

TEST_CASE("edge and vertex universes") {
  auto [g, d] = gen_dtsp_graph(2, 1);
  auto u = edge_universe(g);
  CHECK(u.size() == 2);
  CHECK(u.contains("x[v[1][1]->v[2][1]]"));
  auto [gi, di] = gen_is_graph(2);
  CHECK(vertex_universe(gi).size() == 20);
  CHECK_THROWS_AS((void)edge_var_name(g, 0, 0), Error);
}
