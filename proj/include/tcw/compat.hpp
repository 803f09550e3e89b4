#ifndef TCW_COMPAT_HPP
#define TCW_COMPAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcw/perm.hpp"

namespace tcw {

enum class MatrixVariant { BIPARTITE, CLIQUE };

// Matching compatibility matrix: rows/columns indexed by a canonical
// (lexicographic) permutation sequence, entry(r1, r2) = 1 iff the product
// compose(col, row) lies in the defining class.
class CompatMatrix {
 public:
  static CompatMatrix build(std::uint32_t k, MatrixVariant variant);

  MatrixVariant variant() const { return variant_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t dim() const { return static_cast<std::uint32_t>(indices_.size()); }
  const std::vector<Perm>& indices() const { return indices_; }
  std::uint32_t index_of(const Perm& p) const;
  bool entry(std::uint32_t row, std::uint32_t col) const;
  std::uint64_t ones() const;

 private:
  MatrixVariant variant_ = MatrixVariant::BIPARTITE;
  std::uint32_t k_ = 0;
  std::vector<Perm> indices_;
  std::vector<std::vector<bool>> bits_;
};

struct Rectangle {
  std::vector<std::uint32_t> rows, cols;  // sorted, unique
  std::uint64_t size() const { return static_cast<std::uint64_t>(rows.size()) * cols.size(); }
  bool operator==(const Rectangle& o) const = default;
};

struct RectangleCover {
  std::vector<Rectangle> rectangles;
  bool optimal = false;  // set by min_cover when the search completed
};

bool is_rectangle(const CompatMatrix& m, const Rectangle& r);
// Every 1-entry covered and every rectangle all-ones.
bool is_valid_cover(const CompatMatrix& m, const RectangleCover& c);

// All maximal rectangles (inclusion-maximal all-ones submatrices with
// nonempty sides), canonical order.
std::vector<Rectangle> maximal_rectangles(const CompatMatrix& m);

// Exact maximum-size rectangle; ties broken by lexicographically least rows.
Rectangle max_rectangle(const CompatMatrix& m);

// Exact set-cover branch and bound over maximal rectangles; falls back to
// best-found with optimal=false when the budget (milliseconds) runs out.
RectangleCover min_cover(const CompatMatrix& m, std::uint64_t budget_ms = 10'000);

RectangleCover greedy_cover(const CompatMatrix& m);

struct RandomizedCoverResult {
  RectangleCover cover;
  bool covers_all = false;
  std::uint64_t samples = 0;
};

// The conjugation-translation construction: l = max(1, ceil((k!(k-1)!/|r|) *
// 2k ln k)) sampled pairs (alpha, beta), each mapping (r1, r2) to
// (alpha r1 beta, beta^-1 r2 alpha^-1).
RandomizedCoverResult randomized_cover_from_rectangle(const CompatMatrix& m, const Rectangle& r,
                                                      std::uint64_t seed);

// Rows via rho -> d^-1 rho c, cols via rho -> c^-1 rho d, where c and d list
// C and its complement in increasing order.
Rectangle embed_clique_rectangle(const CompatMatrix& clique, const Rectangle& r,
                                 const std::vector<std::uint32_t>& C);

struct SizeBoundReport {
  std::uint64_t max_rect_size = 0;
  double bound = 0.0;
  bool holds = false;
  double margin = 0.0;  // bound / max_rect_size
};

SizeBoundReport check_size_bound(const CompatMatrix& m, std::uint64_t ck);

struct CkRow {
  std::uint32_t k, dim;
  std::uint64_t ones, ck, max_rect;
  double bound;
};
std::string ck_table_csv(const std::vector<CkRow>& rows);
std::string cover_to_json(const RectangleCover& c);

}  // namespace tcw

#endif
