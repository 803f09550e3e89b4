#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "tcw/dpcompile.hpp"
#include "tcw/oracle.hpp"
#include "tcw/rect.hpp"

using namespace tcw;

namespace {

Polynomial expanded_union(const std::vector<PolyRectangle>& rs) {
  Polynomial u;
  for (auto& r : rs) u = u.plus(r.g.times(r.h));
  return u;
}

void check_balanced(const std::vector<PolyRectangle>& rs, const std::vector<std::uint32_t>& X) {
  std::set<std::uint32_t> Xs(X.begin(), X.end());
  auto count = [&](const Polynomial& p) {
    std::uint32_t n = 0;
    for (auto v : p.support()) n += Xs.count(v);
    return n;
  };
  for (auto& r : rs) {
    CHECK(3 * count(r.g) <= 2 * Xs.size());
    CHECK(3 * count(r.h) <= 2 * Xs.size());
  }
}

std::vector<std::uint32_t> transversal_in_support(
    const std::vector<std::vector<std::uint32_t>>& layers, const Polynomial& f) {
  auto sup = f.support();
  std::vector<std::uint32_t> X;
  for (auto& l : layers)
    for (auto v : l)
      if (std::binary_search(sup.begin(), sup.end(), v)) {
        X.push_back(v);
        break;
      }
  return X;
}

}  // namespace

TEST_CASE("decomposition of a single product") {
  VarUniverse u({"x", "y"});
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  auto s = b.add_sum(b.add_input("x"), b.add_input("y"));
  auto c = b.build(s);
  std::vector<std::uint32_t> X = {u.id("x"), u.id("y")};
  auto rs = decompose_balanced(c, X);
  CHECK(rs.size() == 1);
  CHECK(poly_equiv(expanded_union(rs), extract_polynomial(c)));
  check_balanced(rs, X);
}

TEST_CASE("decomposition of x*y + x*z") {
  VarUniverse u({"x", "y", "z"});
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  auto x = b.add_input("x"), y = b.add_input("y"), z = b.add_input("z");
  auto c = b.build(b.add_ext(b.add_sum(x, y), b.add_sum(x, z)));
  std::vector<std::uint32_t> X = {u.id("x"), u.id("y"), u.id("z")};
  auto rs = decompose_balanced(c, X);
  CHECK(rs.size() <= 3);
  CHECK(poly_equiv(expanded_union(rs), extract_polynomial(c)));
  check_balanced(rs, X);
}

TEST_CASE("decomposition of compiled circuits") {
  auto hk = compile_held_karp(4);
  std::vector<std::uint32_t> X = {hk.universe().id("x[u1->u2]"), hk.universe().id("x[u2->u3]"),
                                  hk.universe().id("x[u3->u4]"), hk.universe().id("x[u4->u1]")};
  auto rs = decompose_balanced(hk, X);
  CHECK(rs.size() <= hk.size());
  CHECK(poly_equiv(expanded_union(rs), extract_polynomial(hk)));
  check_balanced(rs, X);

  auto [g, d] = gen_dtsp_graph(3, 2);
  auto c = compile_tsp_pw(g, d, true);
  auto layers = edge_layers(g);
  auto Xg = transversal_in_support(layers, extract_polynomial(c));
  CHECK(Xg.size() == 3);
  auto rs2 = decompose_balanced(c, Xg);
  CHECK(rs2.size() <= c.size());
  CHECK(poly_equiv(expanded_union(rs2), extract_polynomial(c)));
  check_balanced(rs2, Xg);
}

TEST_CASE("inhomogeneous extractions are rejected") {
  auto [g, d] = gen_is_graph(2);
  auto c = compile_is(g, d);
  CHECK_THROWS_AS(decompose_balanced(c, {0}), Error);
}

TEST_CASE("below and above") {
  VarUniverse u({"x", "y", "z"});
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  auto x = b.add_input("x"), y = b.add_input("y"), z = b.add_input("z");
  auto out = b.add_ext(b.add_sum(x, y), b.add_sum(x, z));
  auto c = b.build(out);
  auto f = extract_polynomial(c);

  CHECK(poly_equiv(below(c, out), f));
  auto a_out = above(c, out, f);
  CHECK(a_out.size() == 1);
  CHECK(a_out.monomials()[0].empty());

  CHECK(below(c, y).size() == 1);
  CHECK(below(c, y).monomials()[0] == Monomial::variable(u.id("y")));
  auto a_y = above(c, y, f);
  CHECK(a_y.size() == 1);
  CHECK(a_y.monomials()[0] == Monomial::variable(u.id("x")));

  // A_w * B_w stays inside f at every gate
  for (std::uint32_t w = 0; w < c.size(); ++w) {
    auto bw = below(c, w);
    auto aw = above(c, w, f);
    CHECK(poly_subset(aw.times(bw), f));
  }
}

TEST_CASE("useful sets and thinness on canonical splits") {
  ThinContext ctx(2);
  CHECK(ctx.canonical_solutions().size() == 4);
  for (auto& sol : ctx.canonical_solutions()) {
    SetRectangle r;
    r.sideA = {sol};
    r.sideB = {{}};
    auto [ua, ub] = ctx.useful_sets(r);
    CHECK(ua.size() == 1);
    CHECK(ub.size() == 1);
    CHECK(ctx.check_thin(r));
  }
  for (std::size_t cut = 0; cut < ctx.decomposition().bags.size(); cut += 7) {
    auto pref = ctx.prefix(cut);
    std::set<std::string> P(pref.begin(), pref.end());
    for (auto& sol : ctx.canonical_solutions()) {
      SetRectangle r;
      std::vector<std::string> A, B;
      for (auto& v : sol) (P.count(v) ? A : B).push_back(v);
      r.sideA = {A};
      r.sideB = {B};
      CHECK(ctx.check_thin(r));
    }
  }
  SetRectangle empty;
  empty.sideA = {{}};
  empty.sideB = {{}};
  CHECK_THROWS_AS(ctx.check_thin(empty), Error);
}

TEST_CASE("sampled rectangles at k=2 are thin") {
  ThinContext ctx(2);
  Rng rng(99);
  for (int t = 0; t < 500; ++t) {
    auto r = ctx.sample(rng);
    CHECK(ctx.is_set_rectangle(r));
    CHECK(ctx.check_thin(r));
  }
}

TEST_CASE("layer coloring") {
  VarUniverse u({"x", "y", "z"});
  PolyRectangle r{Polynomial({Monomial::variable(u.id("x"))}),
                  Polynomial({Monomial::variable(u.id("y"))})};
  auto reps = monochromatic_layers(r, {{u.id("x")}, {u.id("y")}, {u.id("z")}});
  CHECK(reps[0].color == LayerColor::MONO_G);
  CHECK(reps[1].color == LayerColor::MONO_H);
  CHECK(reps[2].color == LayerColor::MONO_G);

  PolyRectangle mixed{Polynomial({Monomial::variable(u.id("x"))}),
                      Polynomial({Monomial::variable(u.id("y"))})};
  auto reps2 = monochromatic_layers(mixed, {{u.id("x"), u.id("y"), u.id("z")}});
  CHECK(reps2[0].color == LayerColor::MIXED);
  CHECK(reps2[0].absent == std::vector<std::uint32_t>{u.id("z")});
  CHECK(layer_reports_to_json(reps2, u).find("\"z\"") != std::string::npos);
}

TEST_CASE("edge layers of the layered families") {
  auto [g, d] = gen_dtsp_graph(3, 2);
  auto layers = edge_layers(g);
  CHECK(layers.size() == 3);
  for (auto& l : layers) CHECK(l.size() == 4);  // k^2 edges per layer

  auto [h, hd] = gen_dst_graph(2, 1);
  auto hlayers = edge_layers(h);
  CHECK(hlayers.size() == 3);
  CHECK(hlayers[0].size() == 2);  // first-column clique, both directions
  CHECK(hlayers[1].size() == 8);  // bidirectional complete bipartite
  CHECK(hlayers[2].size() == 2);

  GraphInstance plain(true);
  plain.add_vertex("a");
  CHECK_THROWS_AS(edge_layers(plain), Error);
}

TEST_CASE("tour rectangle bound at (3,2)") {
  auto [g, d] = gen_dtsp_graph(3, 2);
  auto c = compile_tsp_pw(g, d, true);
  auto f = extract_polynomial(c);
  auto X = transversal_in_support(edge_layers(g), f);
  auto rs = decompose_balanced(c, X);
  for (auto& r : rs) {
    auto rep = check_rectangle_bound_dtsp(r, f, X, 3, 2, 2);
    CHECK(rep.holds);
  }
  PolyRectangle bad{f, Polynomial({Monomial()})};
  CHECK_THROWS_AS(check_rectangle_bound_dtsp(bad, f, X, 3, 2, 2), Error);
  CHECK(rectangles_to_json(rs, X).find("product") != std::string::npos);
}

TEST_CASE("mixed layers of out-tree rectangles expose an absent variable") {
  auto [g, d] = gen_dst_graph(3, 1);
  auto c = compile_dst_pw(g, d);
  auto f = extract_polynomial(c);
  auto layers = edge_layers(g);
  auto X = transversal_in_support(layers, f);
  auto rs = decompose_balanced(c, X);
  CHECK(poly_equiv(expanded_union(rs), f));
  for (auto& r : rs)
    for (auto& rep : monochromatic_layers(r, layers))
      if (rep.color == LayerColor::MIXED) CHECK(!rep.absent.empty());
}
