#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "tcw/compat.hpp"

using namespace tcw;

TEST_CASE("bipartite matrix small orders") {
  auto m2 = CompatMatrix::build(2, MatrixVariant::BIPARTITE);
  CHECK(m2.dim() == 2);
  CHECK_FALSE(m2.entry(0, 0));
  CHECK(m2.entry(0, 1));
  CHECK(m2.entry(1, 0));
  CHECK_FALSE(m2.entry(1, 1));

  auto m3 = CompatMatrix::build(3, MatrixVariant::BIPARTITE);
  CHECK(m3.dim() == 6);
  CHECK(m3.ones() == 12);
  for (std::uint32_t r = 0; r < 6; ++r) {
    std::uint32_t sum = 0;
    for (std::uint32_t c = 0; c < 6; ++c) sum += m3.entry(r, c);
    CHECK(sum == 2);  // (k-1)!
  }
}

TEST_CASE("clique matrix small orders") {
  auto c2 = CompatMatrix::build(2, MatrixVariant::CLIQUE);
  CHECK(c2.dim() == 3);
  for (std::uint32_t r = 0; r < 3; ++r)
    for (std::uint32_t c = 0; c < 3; ++c) CHECK(c2.entry(r, c) == (r != c));

  auto c3 = CompatMatrix::build(3, MatrixVariant::CLIQUE);
  CHECK(c3.dim() == 15);
  for (std::uint32_t r = 0; r < c3.dim(); ++r) {
    std::uint32_t sum = 0;
    for (std::uint32_t c = 0; c < c3.dim(); ++c) sum += c3.entry(r, c);
    CHECK(sum == double_factorial(2 * 3 - 2));
  }
}

TEST_CASE("rectangle predicates") {
  auto m3 = CompatMatrix::build(3, MatrixVariant::BIPARTITE);
  Rectangle empty;
  CHECK(is_rectangle(m3, empty));
  auto id = Perm::identity(3);
  auto c123 = Perm::from_cycles(3, {{1, 2, 3}});
  Rectangle r{{m3.index_of(id), m3.index_of(c123)}, {m3.index_of(c123)}};
  std::sort(r.rows.begin(), r.rows.end());
  CHECK(is_rectangle(m3, r));
  Rectangle bad{{m3.index_of(id)}, {m3.index_of(id)}};
  CHECK_FALSE(is_rectangle(m3, bad));
  CHECK_THROWS_AS(is_rectangle(m3, Rectangle{{99}, {0}}), Error);
}

TEST_CASE("maximum rectangles") {
  CHECK(max_rectangle(CompatMatrix::build(2, MatrixVariant::BIPARTITE)).size() == 1);
  CHECK(max_rectangle(CompatMatrix::build(2, MatrixVariant::CLIQUE)).size() == 2);
  auto m3 = CompatMatrix::build(3, MatrixVariant::BIPARTITE);
  auto best = max_rectangle(m3);
  CHECK(is_rectangle(m3, best));
  for (auto& r : maximal_rectangles(m3)) CHECK(r.size() <= best.size());
}

TEST_CASE("minimum covers") {
  auto c1 = min_cover(CompatMatrix::build(1, MatrixVariant::BIPARTITE));
  CHECK(c1.optimal);
  CHECK(c1.rectangles.size() == 1);

  auto m2 = CompatMatrix::build(2, MatrixVariant::BIPARTITE);
  auto c2 = min_cover(m2);
  CHECK(c2.optimal);
  CHECK(c2.rectangles.size() == 2);
  CHECK(is_valid_cover(m2, c2));

  auto q2 = CompatMatrix::build(2, MatrixVariant::CLIQUE);
  auto cq = min_cover(q2);
  CHECK(cq.optimal);
  CHECK(is_valid_cover(q2, cq));
  CHECK(cq.rectangles.size() == 3);  // 6 ones, max rectangle size 2
}

TEST_CASE("greedy cover is valid and dominated by the optimum") {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    auto m = CompatMatrix::build(k, MatrixVariant::BIPARTITE);
    auto g = greedy_cover(m);
    CHECK(is_valid_cover(m, g));
    auto exact = min_cover(m);
    CHECK(exact.optimal);
    CHECK(is_valid_cover(m, exact));
    CHECK(g.rectangles.size() >= exact.rectangles.size());
  }
}

TEST_CASE("translation preserves ones") {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    auto m = CompatMatrix::build(k, MatrixVariant::BIPARTITE);
    Rng rng(17 + k);
    auto rand_perm = [&] {
      std::vector<std::uint32_t> im(k);
      for (std::uint32_t i = 0; i < k; ++i) im[i] = i + 1;
      for (std::uint32_t i = k; i > 1; --i) std::swap(im[i - 1], im[rng.below(i)]);
      return Perm(im);
    };
    for (int t = 0; t < 2000; ++t) {
      Perm a = rand_perm(), b = rand_perm();
      std::uint32_t r = static_cast<std::uint32_t>(rng.below(m.dim()));
      std::uint32_t c = static_cast<std::uint32_t>(rng.below(m.dim()));
      auto ri = m.index_of(compose(a, compose(m.indices()[r], b)));
      auto ci = m.index_of(compose(b.inverse(), compose(m.indices()[c], a.inverse())));
      CHECK(m.entry(r, c) == m.entry(ri, ci));
    }
  }
}

TEST_CASE("randomized cover from the maximum rectangle") {
  auto m = CompatMatrix::build(3, MatrixVariant::BIPARTITE);
  auto r = max_rectangle(m);
  bool covered = false;
  for (std::uint64_t seed = 1; seed <= 10 && !covered; ++seed) {
    auto res = randomized_cover_from_rectangle(m, r, seed);
    CHECK(res.samples >= 1);
    for (auto& rect : res.cover.rectangles) CHECK(is_rectangle(m, rect));
    if (res.covers_all) {
      CHECK(is_valid_cover(m, res.cover));
      covered = true;
    }
  }
  CHECK(covered);
  // determinism
  auto a = randomized_cover_from_rectangle(m, r, 5);
  auto b = randomized_cover_from_rectangle(m, r, 5);
  CHECK(a.cover.rectangles.size() == b.cover.rectangles.size());
  for (std::size_t i = 0; i < a.cover.rectangles.size(); ++i)
    CHECK(a.cover.rectangles[i] == b.cover.rectangles[i]);
  CHECK_THROWS_AS(randomized_cover_from_rectangle(CompatMatrix::build(1, MatrixVariant::BIPARTITE),
                                                  Rectangle{{0}, {0}}, 1),
                  Error);
}

TEST_CASE("clique rectangle embedding") {
  auto q = CompatMatrix::build(2, MatrixVariant::CLIQUE);
  auto rho1 = Perm::from_cycles(4, {{1, 3}, {2, 4}});
  auto rho2 = Perm::from_cycles(4, {{1, 4}, {2, 3}});
  Rectangle r{{q.index_of(rho1)}, {q.index_of(rho2)}};
  CHECK(is_rectangle(q, r));
  auto img = embed_clique_rectangle(q, r, {1, 2});
  CHECK(img.rows.size() == 1);
  CHECK(img.cols.size() == 1);
  auto m2 = CompatMatrix::build(2, MatrixVariant::BIPARTITE);
  CHECK(is_rectangle(m2, img));
  CHECK(m2.entry(img.rows[0], img.cols[0]));
  // (1 2)(3 4) maps {1,2} into itself, so it does not respect the bipartition
  auto stay = Perm::from_cycles(4, {{1, 2}, {3, 4}});
  CHECK_THROWS_AS(embed_clique_rectangle(q, Rectangle{{q.index_of(stay)}, {q.index_of(rho2)}},
                                         std::vector<std::uint32_t>{1, 2}),
                  Error);
}

TEST_CASE("embedded products stay single cycles") {
  auto q = CompatMatrix::build(3, MatrixVariant::CLIQUE);
  std::vector<std::uint32_t> C = {1, 2, 3};
  auto m3 = CompatMatrix::build(3, MatrixVariant::BIPARTITE);
  for (std::uint32_t r = 0; r < q.dim(); ++r)
    for (std::uint32_t c = 0; c < q.dim(); ++c) {
      if (!q.entry(r, c)) continue;
      Rectangle cell{{r}, {c}};
      try {
        auto img = embed_clique_rectangle(q, cell, C);
        CHECK(m3.entry(img.rows[0], img.cols[0]));
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NOT_IN_SC);
      }
    }
}

TEST_CASE("size bound reports") {
  auto m2 = CompatMatrix::build(2, MatrixVariant::BIPARTITE);
  auto rep2 = check_size_bound(m2, 2);
  CHECK(rep2.max_rect_size == 1);
  CHECK(rep2.bound == doctest::Approx(4.0 * std::log(2.0)));  // 2!*1!*(1/2)*4*ln 2
  CHECK(rep2.holds);
  for (std::uint32_t k : {3u, 4u}) {
    auto m = CompatMatrix::build(k, MatrixVariant::BIPARTITE);
    auto cover = min_cover(m);
    REQUIRE(cover.optimal);
    auto rep = check_size_bound(m, cover.rectangles.size());
    CHECK(rep.holds);
    CHECK(rep.margin >= 1.0);
  }
  CHECK_THROWS_AS(check_size_bound(CompatMatrix::build(1, MatrixVariant::BIPARTITE), 1), Error);
}

TEST_CASE("exports") {
  auto m2 = CompatMatrix::build(2, MatrixVariant::BIPARTITE);
  auto cover = min_cover(m2);
  auto j = cover_to_json(cover);
  CHECK(j.find("\"optimal\":true") != std::string::npos);
  auto csv = ck_table_csv({{2, 2, 2, 2, 1, 2.77}});
  CHECK(csv.rfind("k,dim,ones,ck,max_rect,bound\n", 0) == 0);
  CHECK(csv.find("2,2,2,2,1,2.77") != std::string::npos);
}
