#include "tcw/compat.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "nlohmann/json.hpp"

namespace tcw {

CompatMatrix CompatMatrix::build(std::uint32_t k, MatrixVariant variant) {
  if (k < 1) throw Error(ErrorCode::INVALID_K, "matrix order");
  if (k > 5) throw Error(ErrorCode::SCALE_EXCEEDED, "matrix order limited to k <= 5");
  CompatMatrix m;
  m.variant_ = variant;
  m.k_ = k;
  if (variant == MatrixVariant::BIPARTITE) {
    m.indices_ = enumerate_sym(k);
  } else {
    m.indices_ = enumerate_class(2 * k, ClassSpec::all_two_cycles());
  }
  std::uint32_t d = static_cast<std::uint32_t>(m.indices_.size());
  m.bits_.assign(d, std::vector<bool>(d, false));
  for (std::uint32_t r = 0; r < d; ++r)
    for (std::uint32_t c = 0; c < d; ++c) {
      Perm prod = compose(m.indices_[c], m.indices_[r]);
      bool one = variant == MatrixVariant::BIPARTITE ? is_single_cycle(prod)
                                                     : is_two_k_cycles(prod);
      m.bits_[r][c] = one;
    }
  return m;
}

std::uint32_t CompatMatrix::index_of(const Perm& p) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), p);
  if (it == indices_.end() || !(*it == p))
    throw Error(ErrorCode::NOT_IN_CLASS, "permutation is not a matrix index");
  return static_cast<std::uint32_t>(it - indices_.begin());
}

bool CompatMatrix::entry(std::uint32_t row, std::uint32_t col) const {
  if (row >= dim() || col >= dim()) throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "matrix entry");
  return bits_[row][col];
}

std::uint64_t CompatMatrix::ones() const {
  std::uint64_t n = 0;
  for (auto& row : bits_)
    for (bool b : row) n += b;
  return n;
}

bool is_rectangle(const CompatMatrix& m, const Rectangle& r) {
  for (auto row : r.rows)
    for (auto col : r.cols)
      if (!m.entry(row, col)) return false;
  return true;
}

bool is_valid_cover(const CompatMatrix& m, const RectangleCover& c) {
  for (auto& r : c.rectangles)
    if (!is_rectangle(m, r)) return false;
  std::vector<std::vector<bool>> covered(m.dim(), std::vector<bool>(m.dim(), false));
  for (auto& r : c.rectangles)
    for (auto row : r.rows)
      for (auto col : r.cols) covered[row][col] = true;
  for (std::uint32_t row = 0; row < m.dim(); ++row)
    for (std::uint32_t col = 0; col < m.dim(); ++col)
      if (m.entry(row, col) && !covered[row][col]) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> row_support(const CompatMatrix& m, std::uint32_t row) {
  std::vector<std::uint32_t> s;
  for (std::uint32_t c = 0; c < m.dim(); ++c)
    if (m.entry(row, c)) s.push_back(c);
  return s;
}

std::vector<std::uint32_t> intersect(const std::vector<std::uint32_t>& a,
                                     const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Rectangle> maximal_rectangles(const CompatMatrix& m) {
  if (m.dim() > 120) throw Error(ErrorCode::SCALE_EXCEEDED, "exact search limited to dimension 120");
  std::vector<std::vector<std::uint32_t>> supports(m.dim());
  for (std::uint32_t r = 0; r < m.dim(); ++r) supports[r] = row_support(m, r);
  // Closed column sets are exactly the intersections of row supports; each
  // closed nonempty set paired with all rows containing it is a maximal
  // rectangle. Build the intersection lattice to a fixpoint.
  std::set<std::vector<std::uint32_t>> closed;
  std::vector<std::vector<std::uint32_t>> work;
  auto push = [&](std::vector<std::uint32_t> cols) {
    if (cols.empty()) return;
    if (closed.insert(cols).second) work.push_back(std::move(cols));
  };
  for (auto& s : supports) push(s);
  while (!work.empty()) {
    auto cols = std::move(work.back());
    work.pop_back();
    for (auto& s : supports) push(intersect(cols, s));
  }
  std::vector<Rectangle> out;
  for (auto& cols : closed) {
    Rectangle r;
    r.cols = cols;
    for (std::uint32_t row = 0; row < m.dim(); ++row)
      if (std::includes(supports[row].begin(), supports[row].end(), cols.begin(), cols.end()))
        r.rows.push_back(row);
    if (!r.rows.empty()) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const Rectangle& a, const Rectangle& b) {
    return std::tie(a.rows, a.cols) < std::tie(b.rows, b.cols);
  });
  return out;
}

Rectangle max_rectangle(const CompatMatrix& m) {
  auto rects = maximal_rectangles(m);
  if (rects.empty()) throw Error(ErrorCode::BAD_INPUT, "matrix has no ones");
  Rectangle best = rects.front();
  for (auto& r : rects)
    if (r.size() > best.size() || (r.size() == best.size() && r.rows < best.rows)) best = r;
  return best;
}

RectangleCover min_cover(const CompatMatrix& m, std::uint64_t budget_ms) {
  auto rects = maximal_rectangles(m);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  for (std::uint32_t r = 0; r < m.dim(); ++r)
    for (std::uint32_t c = 0; c < m.dim(); ++c)
      if (m.entry(r, c)) entries.emplace_back(r, c);
  std::uint32_t ne = static_cast<std::uint32_t>(entries.size());
  if (ne == 0) return {{}, true};
  // entry -> rectangles covering it; rectangle -> covered entries
  std::vector<std::vector<std::uint32_t>> covering(ne);
  std::vector<std::vector<std::uint32_t>> covers(rects.size());
  for (std::uint32_t ri = 0; ri < rects.size(); ++ri) {
    std::set<std::uint32_t> cols(rects[ri].cols.begin(), rects[ri].cols.end());
    std::set<std::uint32_t> rows(rects[ri].rows.begin(), rects[ri].rows.end());
    for (std::uint32_t e = 0; e < ne; ++e)
      if (rows.count(entries[e].first) && cols.count(entries[e].second)) {
        covering[e].push_back(ri);
        covers[ri].push_back(e);
      }
  }
  // greedy upper bound first
  std::vector<std::uint32_t> best_sel;
  {
    std::vector<bool> cov(ne, false);
    std::uint32_t left = ne;
    while (left > 0) {
      std::uint32_t best_r = 0, best_gain = 0;
      for (std::uint32_t ri = 0; ri < rects.size(); ++ri) {
        std::uint32_t gain = 0;
        for (auto e : covers[ri]) gain += !cov[e];
        if (gain > best_gain) {
          best_gain = gain;
          best_r = ri;
        }
      }
      best_sel.push_back(best_r);
      for (auto e : covers[best_r])
        if (!cov[e]) {
          cov[e] = true;
          --left;
        }
    }
  }
  std::size_t max_cover = 1;
  for (auto& c : covers) max_cover = std::max(max_cover, c.size());
  bool timed_out = false;
  auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
  std::vector<bool> cov(ne, false);
  std::vector<std::uint32_t> chosen;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t uncovered) {
    if (timed_out) return;
    if (std::chrono::steady_clock::now() > deadline) {
      timed_out = true;
      return;
    }
    if (uncovered == 0) {
      if (chosen.size() < best_sel.size()) best_sel = chosen;
      return;
    }
    std::size_t lower = chosen.size() + (uncovered + max_cover - 1) / max_cover;
    if (lower >= best_sel.size()) return;
    // branch on the uncovered entry with the fewest covering rectangles
    std::uint32_t pick = ne;
    std::size_t fewest = SIZE_MAX;
    for (std::uint32_t e = 0; e < ne; ++e) {
      if (cov[e]) continue;
      std::size_t cnt = covering[e].size();
      if (cnt < fewest) {
        fewest = cnt;
        pick = e;
      }
    }
    for (auto ri : covering[pick]) {
      std::vector<std::uint32_t> newly;
      for (auto e : covers[ri])
        if (!cov[e]) {
          cov[e] = true;
          newly.push_back(e);
        }
      chosen.push_back(ri);
      rec(uncovered - static_cast<std::uint32_t>(newly.size()));
      chosen.pop_back();
      for (auto e : newly) cov[e] = false;
    }
  };
  rec(ne);
  const bool min_proved = !timed_out;
  if (!timed_out) {
    // refine to the lexicographically least cover of the minimum size:
    // fix the smallest usable rectangle index, then recheck feasibility
    std::uint32_t s = static_cast<std::uint32_t>(best_sel.size());
    std::uint32_t uncovered = ne;
    std::function<bool(std::uint32_t, std::uint32_t)> decide = [&](std::uint32_t min_idx,
                                                                   std::uint32_t remaining) {
      if (uncovered == 0) return true;
      if (timed_out) return false;
      if (std::chrono::steady_clock::now() > deadline) {
        timed_out = true;
        return false;
      }
      if (static_cast<std::uint64_t>(remaining) * max_cover < uncovered) return false;
      std::uint32_t pick = ne;
      std::size_t fewest = SIZE_MAX;
      for (std::uint32_t e = 0; e < ne; ++e) {
        if (cov[e]) continue;
        std::size_t cnt = 0;
        for (auto ri : covering[e]) cnt += ri >= min_idx;
        if (cnt < fewest) {
          fewest = cnt;
          pick = e;
        }
      }
      if (fewest == 0) return false;
      for (auto ri : covering[pick]) {
        if (ri < min_idx) continue;
        std::vector<std::uint32_t> newly;
        for (auto e : covers[ri])
          if (!cov[e]) {
            cov[e] = true;
            newly.push_back(e);
          }
        uncovered -= static_cast<std::uint32_t>(newly.size());
        bool ok = decide(min_idx, remaining - 1);
        uncovered += static_cast<std::uint32_t>(newly.size());
        for (auto e : newly) cov[e] = false;
        if (ok) return true;
      }
      return false;
    };
    std::vector<std::uint32_t> lex;
    std::vector<std::vector<std::uint32_t>> applied;
    std::uint32_t floor_idx = 0;
    while (lex.size() < s && uncovered > 0 && !timed_out) {
      bool placed = false;
      for (std::uint32_t ri = floor_idx; ri < rects.size() && !timed_out; ++ri) {
        std::vector<std::uint32_t> newly;
        for (auto e : covers[ri])
          if (!cov[e]) {
            cov[e] = true;
            newly.push_back(e);
          }
        uncovered -= static_cast<std::uint32_t>(newly.size());
        if (!newly.empty() && decide(ri + 1, s - static_cast<std::uint32_t>(lex.size()) - 1)) {
          lex.push_back(ri);
          applied.push_back(std::move(newly));
          floor_idx = ri + 1;
          placed = true;
          break;
        }
        uncovered += static_cast<std::uint32_t>(newly.size());
        for (auto e : newly) cov[e] = false;
      }
      if (!placed) break;
    }
    if (!timed_out && uncovered == 0 && lex.size() <= s) best_sel = lex;
    for (auto& newly : applied)
      for (auto e : newly) cov[e] = false;
  }
  RectangleCover out;
  for (auto ri : best_sel) out.rectangles.push_back(rects[ri]);
  out.optimal = min_proved;
  return out;
}

RectangleCover greedy_cover(const CompatMatrix& m) {
  if (m.dim() > 1000) throw Error(ErrorCode::SCALE_EXCEEDED, "greedy cover limited to dimension 1000");
  std::vector<std::vector<std::uint32_t>> supports(m.dim());
  for (std::uint32_t r = 0; r < m.dim(); ++r) supports[r] = row_support(m, r);
  std::vector<std::vector<bool>> covered(m.dim(), std::vector<bool>(m.dim(), false));
  auto uncovered_in = [&](const std::vector<std::uint32_t>& rows,
                          const std::vector<std::uint32_t>& cols) {
    std::uint64_t n = 0;
    for (auto r : rows)
      for (auto c : cols) n += !covered[r][c];
    return n;
  };
  RectangleCover out;
  for (std::uint32_t seed_row = 0; seed_row < m.dim(); ++seed_row) {
    for (std::uint32_t seed_col = 0; seed_col < m.dim(); ++seed_col) {
      if (!m.entry(seed_row, seed_col) || covered[seed_row][seed_col]) continue;
      Rectangle rect;
      rect.rows = {seed_row};
      rect.cols = supports[seed_row];
      // grow by rows while the uncovered yield increases
      bool grew = true;
      while (grew) {
        grew = false;
        std::uint64_t cur = uncovered_in(rect.rows, rect.cols);
        std::uint32_t best_row = m.dim();
        std::uint64_t best_gain = cur;
        for (std::uint32_t r = 0; r < m.dim(); ++r) {
          if (std::binary_search(rect.rows.begin(), rect.rows.end(), r)) continue;
          auto cols = intersect(rect.cols, supports[r]);
          if (cols.empty() || !std::binary_search(cols.begin(), cols.end(), seed_col)) continue;
          auto rows = rect.rows;
          rows.insert(std::lower_bound(rows.begin(), rows.end(), r), r);
          std::uint64_t gain = uncovered_in(rows, cols);
          if (gain > best_gain) {
            best_gain = gain;
            best_row = r;
          }
        }
        if (best_row < m.dim()) {
          rect.cols = intersect(rect.cols, supports[best_row]);
          rect.rows.insert(std::lower_bound(rect.rows.begin(), rect.rows.end(), best_row),
                           best_row);
          grew = true;
        }
      }
      // make it row-maximal
      for (std::uint32_t r = 0; r < m.dim(); ++r)
        if (!std::binary_search(rect.rows.begin(), rect.rows.end(), r) &&
            std::includes(supports[r].begin(), supports[r].end(), rect.cols.begin(),
                          rect.cols.end()))
          rect.rows.insert(std::lower_bound(rect.rows.begin(), rect.rows.end(), r), r);
      for (auto r : rect.rows)
        for (auto c : rect.cols) covered[r][c] = true;
      out.rectangles.push_back(std::move(rect));
    }
  }
  return out;
}

RandomizedCoverResult randomized_cover_from_rectangle(const CompatMatrix& m, const Rectangle& r,
                                                      std::uint64_t seed) {
  if (m.variant() != MatrixVariant::BIPARTITE)
    throw Error(ErrorCode::INVALID_K, "randomized cover targets the bipartite matrix");
  std::uint32_t k = m.k();
  if (k < 2) throw Error(ErrorCode::INVALID_K, "randomized cover needs k >= 2");
  if (!is_rectangle(m, r) || r.size() == 0)
    throw Error(ErrorCode::NOT_A_RECTANGLE, "randomized cover seed");
  double l_exact = (static_cast<double>(factorial(k)) * static_cast<double>(factorial(k - 1)) /
                    static_cast<double>(r.size())) *
                   2.0 * k * std::log(static_cast<double>(k));
  std::uint64_t l = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(l_exact)));
  Rng rng(seed);
  auto random_perm = [&]() {
    std::vector<std::uint32_t> im(k);
    for (std::uint32_t i = 0; i < k; ++i) im[i] = i + 1;
    for (std::uint32_t i = k; i > 1; --i) std::swap(im[i - 1], im[rng.below(i)]);
    return Perm(im);
  };
  RandomizedCoverResult res;
  res.samples = l;
  for (std::uint64_t s = 0; s < l; ++s) {
    Perm alpha = random_perm(), beta = random_perm();
    Rectangle img;
    for (auto row : r.rows)
      img.rows.push_back(m.index_of(compose(alpha, compose(m.indices()[row], beta))));
    for (auto col : r.cols)
      img.cols.push_back(
          m.index_of(compose(beta.inverse(), compose(m.indices()[col], alpha.inverse()))));
    std::sort(img.rows.begin(), img.rows.end());
    std::sort(img.cols.begin(), img.cols.end());
    if (!is_rectangle(m, img))
      throw Error(ErrorCode::NOT_A_RECTANGLE, "translation image is not a rectangle");
    res.cover.rectangles.push_back(std::move(img));
  }
  std::vector<std::vector<bool>> covered(m.dim(), std::vector<bool>(m.dim(), false));
  for (auto& rect : res.cover.rectangles)
    for (auto row : rect.rows)
      for (auto col : rect.cols) covered[row][col] = true;
  res.covers_all = true;
  for (std::uint32_t row = 0; row < m.dim() && res.covers_all; ++row)
    for (std::uint32_t col = 0; col < m.dim(); ++col)
      if (m.entry(row, col) && !covered[row][col]) {
        res.covers_all = false;
        break;
      }
  return res;
}

Rectangle embed_clique_rectangle(const CompatMatrix& clique, const Rectangle& r,
                                 const std::vector<std::uint32_t>& C) {
  if (clique.variant() != MatrixVariant::CLIQUE)
    throw Error(ErrorCode::INVALID_K, "embedding starts from the clique matrix");
  std::uint32_t k = clique.k();
  std::vector<std::uint32_t> c = C;
  std::sort(c.begin(), c.end());
  if (c.size() != k || c.front() < 1 || c.back() > 2 * k ||
      std::adjacent_find(c.begin(), c.end()) != c.end())
    throw Error(ErrorCode::BAD_INPUT, "C must be a k-subset of [2k]");
  std::vector<std::uint32_t> d;
  for (std::uint32_t x = 1; x <= 2 * k; ++x)
    if (!std::binary_search(c.begin(), c.end(), x)) d.push_back(x);
  std::vector<std::uint32_t> pos_c(2 * k + 1, 0), pos_d(2 * k + 1, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    pos_c[c[i]] = i + 1;
    pos_d[d[i]] = i + 1;
  }
  auto bip = enumerate_sym(k);
  auto bip_index = [&](const Perm& p) {
    auto it = std::lower_bound(bip.begin(), bip.end(), p);
    return static_cast<std::uint32_t>(it - bip.begin());
  };
  // rows: rho -> d^-1 rho c, i.e. i -> position in d of rho(c_i)
  auto map_perm = [&](const Perm& rho, const std::vector<std::uint32_t>& from,
                      const std::vector<std::uint32_t>& to_pos) {
    std::vector<std::uint32_t> im(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      std::uint32_t y = rho.apply(from[i]);
      if (to_pos[y] == 0)
        throw Error(ErrorCode::NOT_IN_SC, "permutation does not respect the bipartition");
      im[i] = to_pos[y];
    }
    return Perm(im);
  };
  Rectangle out;
  for (auto row : r.rows) out.rows.push_back(bip_index(map_perm(clique.indices()[row], c, pos_d)));
  for (auto col : r.cols) out.cols.push_back(bip_index(map_perm(clique.indices()[col], d, pos_c)));
  std::sort(out.rows.begin(), out.rows.end());
  std::sort(out.cols.begin(), out.cols.end());
  return out;
}

SizeBoundReport check_size_bound(const CompatMatrix& m, std::uint64_t ck) {
  if (m.k() < 2) throw Error(ErrorCode::INVALID_K, "size bound needs k >= 2");
  if (ck == 0) throw Error(ErrorCode::BAD_INPUT, "ck must be positive");
  SizeBoundReport rep;
  rep.max_rect_size = max_rectangle(m).size();
  double numerator = m.variant() == MatrixVariant::BIPARTITE
                         ? static_cast<double>(factorial(m.k())) *
                               static_cast<double>(factorial(m.k() - 1))
                         : static_cast<double>(factorial(2 * m.k() - 1));
  rep.bound = numerator / static_cast<double>(ck) * 2.0 * m.k() * std::log(m.k());
  rep.holds = static_cast<double>(rep.max_rect_size) <= rep.bound;
  rep.margin = rep.bound / static_cast<double>(rep.max_rect_size);
  return rep;
}

std::string ck_table_csv(const std::vector<CkRow>& rows) {
  std::ostringstream os;
  os << "k,dim,ones,ck,max_rect,bound\n";
  for (auto& r : rows)
    os << r.k << ',' << r.dim << ',' << r.ones << ',' << r.ck << ',' << r.max_rect << ','
       << r.bound << '\n';
  return os.str();
}

std::string cover_to_json(const RectangleCover& c) {
  nlohmann::json j;
  j["optimal"] = c.optimal;
  auto& jr = j["rectangles"] = nlohmann::json::array();
  for (auto& r : c.rectangles) jr.push_back({{"rows", r.rows}, {"cols", r.cols}});
  return j.dump();
}

}  // namespace tcw
