#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "tcw/perm.hpp"

using namespace tcw;

TEST_CASE("perm basics") {
  Perm p({2, 3, 1});
  CHECK(p.apply(1) == 2);
  CHECK(p.inverse().apply(2) == 1);
  CHECK(Perm::identity(3).apply(2) == 2);
  CHECK(Perm::from_cycles(3, {{1, 2, 3}}) == p);
  CHECK(p.to_string() == "[2 3 1]");
  CHECK_THROWS_AS(Perm({1, 1}), Error);
}

TEST_CASE("composition applies the right factor first") {
  // (a b)(x) = a(b(x)): with a = (1 2), b = (2 3), the product maps 3 -> 2 -> 1
  Perm a = Perm::from_cycles(3, {{1, 2}});
  Perm b = Perm::from_cycles(3, {{2, 3}});
  Perm ab = compose(a, b);
  CHECK(ab.apply(3) == 1);
  CHECK(ab.apply(1) == 2);
  CHECK(ab.apply(2) == 3);
}

TEST_CASE("conjugation preserves cycle type") {
  Perm rho = Perm::from_cycles(5, {{1, 2, 3}, {4, 5}});
  for (auto& pi : enumerate_sym(5)) {
    CHECK(cycle_type(conjugate(rho, pi)) == cycle_type(rho));
  }
}

TEST_CASE("cycle type and class predicates") {
  CHECK(cycle_type(Perm::identity(4)).sizes == std::vector<std::uint32_t>{1, 1, 1, 1});
  CHECK(is_single_cycle(Perm::from_cycles(4, {{1, 3, 2, 4}})));
  CHECK(!is_single_cycle(Perm::identity(4)));
  CHECK(is_all_two_cycles(Perm::from_cycles(4, {{1, 2}, {3, 4}})));
  CHECK(!is_all_two_cycles(Perm::from_cycles(4, {{1, 2}})));
  CHECK(is_two_k_cycles(Perm::from_cycles(4, {{1, 2}, {3, 4}})));
  CHECK(is_two_k_cycles(Perm::from_cycles(6, {{1, 2, 3}, {4, 5, 6}})));
  CHECK(!is_two_k_cycles(Perm::from_cycles(6, {{1, 2}, {3, 4, 5, 6}})));
}

TEST_CASE("enumerate_sym sizes and order") {
  CHECK(enumerate_sym(1).size() == 1);
  CHECK(enumerate_sym(4).size() == 24);
  auto s3 = enumerate_sym(3);
  CHECK(std::is_sorted(s3.begin(), s3.end()));
  CHECK_THROWS_AS(enumerate_sym(9), Error);
}

TEST_CASE("single-cycle class has (k-1)! members") {
  for (std::uint32_t k : {1u, 2u, 3u, 4u, 5u}) {
    auto cls = enumerate_class(k, ClassSpec::single_cycle());
    CHECK(cls.size() == factorial(k - 1));
    for (auto& p : cls) CHECK(is_single_cycle(p));
  }
}

TEST_CASE("perfect-matching class has (2k-1)!! members") {
  for (std::uint32_t k : {1u, 2u, 3u, 4u}) {
    auto cls = enumerate_class(2 * k, ClassSpec::all_two_cycles());
    CHECK(cls.size() == double_factorial(2 * k - 1));
    for (auto& p : cls) CHECK(is_all_two_cycles(p));
  }
  CHECK_THROWS_AS(enumerate_class(3, ClassSpec::all_two_cycles()), Error);
}

TEST_CASE("two-k-cycle class has (2k-1)!/k members") {
  for (std::uint32_t k : {1u, 2u, 3u, 4u}) {
    auto cls = enumerate_class(2 * k, ClassSpec::two_k_cycles());
    CHECK(cls.size() == factorial(2 * k - 1) / k);
    for (auto& p : cls) CHECK(is_two_k_cycles(p));
  }
}

TEST_CASE("explicit cycle type enumeration") {
  auto cls = enumerate_class(4, ClassSpec::explicit_type_of({{3, 1}}));
  CHECK(cls.size() == 8);  // 4!/3 = 8 three-cycles in S_4
  CHECK_THROWS_AS(enumerate_class(4, ClassSpec::explicit_type_of({{3, 2}})), Error);
}

TEST_CASE("class enumerations agree with filtering the symmetric group") {
  for (std::uint32_t n : {4u, 6u}) {
    std::vector<Perm> single, pairs, twok;
    for (auto& p : enumerate_sym(n)) {
      if (is_single_cycle(p)) single.push_back(p);
      if (is_all_two_cycles(p)) pairs.push_back(p);
      if (is_two_k_cycles(p)) twok.push_back(p);
    }
    CHECK(enumerate_class(n, ClassSpec::single_cycle()) == single);
    CHECK(enumerate_class(n, ClassSpec::all_two_cycles()) == pairs);
    CHECK(enumerate_class(n, ClassSpec::two_k_cycles()) == twok);
  }
}

TEST_CASE("conjugator counts equal the centralizer size within a class") {
  // single n-cycles: centralizer size n
  auto c5 = enumerate_class(5, ClassSpec::single_cycle());
  CHECK(count_conjugators(c5[0], c5[1]) == 5);
  CHECK(count_conjugators(c5[0], c5[0]) == 5);
  // perfect matchings on [2k]: centralizer size (2k)!! * ... = 2^k k!
  auto m4 = enumerate_class(4, ClassSpec::all_two_cycles());
  CHECK(count_conjugators(m4[0], m4[1]) == 8);
  // different cycle types are never conjugate
  CHECK(count_conjugators(Perm::identity(4), m4[0]) == 0);
}

TEST_CASE("completion counts match (2k-2)!!") {
  for (std::uint32_t k : {1u, 2u, 3u}) {
    for (auto& rho1 : enumerate_class(2 * k, ClassSpec::all_two_cycles()))
      CHECK(count_completions(rho1) == double_factorial(2 * k - 2));
  }
  CHECK_THROWS_AS(count_completions(Perm::identity(3)), Error);
}

TEST_CASE("factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
}
