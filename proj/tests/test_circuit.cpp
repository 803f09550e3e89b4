#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tcw/circuit.hpp"

using namespace tcw;

namespace {

VarUniverse xyz() { return VarUniverse({"x", "y", "z"}); }

}  // namespace

TEST_CASE("builder, validate, evaluate") {
  CircuitBuilder b(SemiringFlavor::MAX_PLUS, xyz());
  auto x = b.add_input("x");
  auto y = b.add_input("y");
  auto m = b.add_ext(x, y);
  Circuit c = b.build(m);
  CHECK(c.size() == 3);
  CHECK(validate(c).ok);
  auto v = Valuation::from_map(c.universe(), {{"x", 3}, {"y", 5}, {"z", 0}});
  CHECK(evaluate(c, v) == 5);
}

TEST_CASE("min flavor, const0 and sum") {
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, xyz());
  auto x = b.add_input("x");
  auto y = b.add_input("y");
  auto s = b.add_sum(x, y);
  auto z = b.add_const0();
  auto m = b.add_ext(s, z);
  Circuit c = b.build(m);
  auto v = Valuation::from_map(c.universe(), {{"x", 2}, {"y", -7}, {"z", 0}});
  CHECK(evaluate(c, v) == -5);
  CHECK(evaluate(b.build(z), v) == 0);
}

TEST_CASE("validation diagnostics") {
  // self-referencing gate
  Circuit cyc = circuit_from_json(
      R"({"flavor":"max","universe":["x"],"gates":[{"op":"ext","l":0,"r":0}],"output":0})");
  auto rep = validate(cyc);
  CHECK(!rep.ok);
  CHECK(rep.errors[0].find("CYCLE_DETECTED") != std::string::npos);
  // fan-in referencing a missing gate is rejected at parse time
  CHECK_THROWS_AS(circuit_from_json(
      R"({"flavor":"max","universe":["x"],"gates":[{"op":"ext","l":0,"r":5}],"output":0})"), Error);
  // dead gates warn but stay valid and counted
  CircuitBuilder b(SemiringFlavor::MAX_PLUS, xyz());
  auto x = b.add_input("x");
  b.add_input("y");
  Circuit c = b.build(x);
  auto rep2 = validate(c);
  CHECK(rep2.ok);
  CHECK(rep2.warnings.size() == 1);
  CHECK(c.size() == 2);
}

TEST_CASE("extraction computes the monomial set bottom-up") {
  CircuitBuilder b(SemiringFlavor::MAX_PLUS, xyz());
  auto x = b.add_input("x");
  auto y = b.add_input("y");
  auto z = b.add_input("z");
  auto xy = b.add_sum(x, y);
  auto m = b.add_ext(xy, z);
  Circuit c = b.build(m);
  auto u = c.universe();
  Polynomial expect({Monomial({{u.id("x"), 1}, {u.id("y"), 1}}), Monomial({{u.id("z"), 1}})});
  CHECK(poly_equiv(extract_polynomial(c), expect));
  // x + x = x^2
  CircuitBuilder b2(SemiringFlavor::MAX_PLUS, xyz());
  auto x2 = b2.add_input("x");
  Circuit cc = b2.build(b2.add_sum(x2, x2));
  CHECK(poly_equiv(extract_polynomial(cc), Polynomial({Monomial({{u.id("x"), 2}})})));
  CHECK_THROWS_AS(extract_polynomial(cc, 1), Error);
}

TEST_CASE("calculates follows set equivalence, not syntax") {
  auto u = xyz();
  CircuitBuilder b(SemiringFlavor::MAX_PLUS, u);
  auto x = b.add_input("x");
  Circuit c = b.build(b.add_ext(x, x));  // max(x, x)
  CHECK(calculates(c, Polynomial({Monomial::variable(u.id("x"))})));
  CircuitBuilder b2(SemiringFlavor::MAX_PLUS, u);
  Circuit cxy = b2.build(b2.add_sum(b2.add_input("x"), b2.add_input("y")));
  CHECK(!calculates(cxy, Polynomial({Monomial::variable(u.id("x"))})));
  // non-multilinear extraction is rejected
  CircuitBuilder b3(SemiringFlavor::MAX_PLUS, u);
  auto x3 = b3.add_input("x");
  Circuit csq = b3.build(b3.add_sum(x3, x3));
  CHECK_THROWS_AS(calculates(csq, Polynomial({Monomial::variable(u.id("x"))})), Error);
}

TEST_CASE("evaluation agrees with the extracted polynomial") {
  for (auto flavor : {SemiringFlavor::MAX_PLUS, SemiringFlavor::MIN_PLUS}) {
    CircuitBuilder b(flavor, xyz());
    auto x = b.add_input("x");
    auto y = b.add_input("y");
    auto z = b.add_input("z");
    auto g1 = b.add_sum(x, y);
    auto g2 = b.add_ext(g1, z);
    auto g3 = b.add_sum(g2, x);
    auto g4 = b.add_ext(g3, g1);
    Circuit c = b.build(g4);
    Polynomial f = extract_polynomial(c);
    Rng rng(123);
    for (int i = 0; i < 100; ++i) {
      Valuation v(c.universe(), {rng.range(-50, 50), rng.range(-50, 50), rng.range(-50, 50)});
      CHECK(evaluate(c, v) == eval_poly(f, v, flavor));
    }
  }
}

TEST_CASE("shared arena circuits differ only in output") {
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, xyz());
  auto x = b.add_input("x");
  auto y = b.add_input("y");
  auto s = b.add_sum(x, y);
  Circuit c1 = b.build(x);
  Circuit c2 = b.build(s);
  CHECK(c1.arena() == c2.arena());
  CHECK(c1.size() == c2.size());
  auto v = Valuation::from_map(c1.universe(), {{"x", 4}, {"y", 1}, {"z", 0}});
  CHECK(evaluate(c1, v) == 4);
  CHECK(evaluate(c2, v) == 5);
}

TEST_CASE("json round trip preserves structure and semantics") {
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, xyz());
  auto x = b.add_input("x");
  auto z = b.add_const0();
  auto s = b.add_sum(x, z);
  auto m = b.add_ext(s, x);
  Circuit c = b.build(m);
  Circuit c2 = circuit_from_json(circuit_to_json(c));
  CHECK(c2.size() == c.size());
  CHECK(c2.flavor() == c.flavor());
  CHECK(c2.output() == c.output());
  auto v = Valuation::from_map(c.universe(), {{"x", -3}, {"y", 0}, {"z", 0}});
  CHECK(evaluate(c2, v) == evaluate(c, v));
  CHECK(poly_equiv(extract_polynomial(c2), extract_polynomial(c)));
  CHECK(circuit_to_json(c2) == circuit_to_json(c));
}

TEST_CASE("dot export names gates") {
  CircuitBuilder b(SemiringFlavor::MAX_PLUS, xyz());
  Circuit c = b.build(b.add_ext(b.add_input("x"), b.add_const0()));
  auto dot = circuit_to_dot(c);
  CHECK(dot.find("max") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
