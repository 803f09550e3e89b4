#ifndef TCW_POLY_HPP
#define TCW_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcw/common.hpp"

namespace tcw {

// A finite, explicitly enumerated variable universe. Variables are referred
// to by dense index; indices follow the lexicographic order of the names, so
// index order is the canonical order everywhere.
class VarUniverse {
 public:
  VarUniverse() = default;
  explicit VarUniverse(std::vector<std::string> names);

  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }
  // Throws SUPPORT_NOT_IN_UNIVERSE when absent.
  std::uint32_t id(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool operator==(const VarUniverse& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;  // sorted, unique
};

// Canonical form: entries sorted by variable id, exponents >= 1.
// The empty monomial is the tropical constant 0 (multiplicative identity).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> entries);
  static Monomial variable(std::uint32_t id) { return Monomial({{id, 1}}); }

  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool is_multilinear() const;
  std::uint32_t degree() const;
  std::vector<std::uint32_t> support() const;
  bool contains_var(std::uint32_t id) const;

  Monomial times(const Monomial& o) const;
  // Multilinear quotient: *this minus sub; requires sub to divide *this.
  bool divides(const Monomial& sub) const;  // sub divides *this
  Monomial divided_by(const Monomial& sub) const;

  auto operator<=>(const Monomial& o) const = default;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries_;
};

enum class SemiringFlavor { MAX_PLUS, MIN_PLUS };

// Total valuation over a universe.
class Valuation {
 public:
  Valuation(const VarUniverse& u, std::vector<std::int64_t> values);
  static Valuation from_map(const VarUniverse& u, const std::map<std::string, std::int64_t>& m);

  std::int64_t operator[](std::uint32_t id) const { return values_.at(id); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }
  const std::vector<std::int64_t>& values() const { return values_; }

 private:
  std::vector<std::int64_t> values_;
};

// A set of distinct monomials; flavor-independent.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Monomial> monomials);  // dedups and sorts

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool empty() const { return monomials_.empty(); }
  bool contains(const Monomial& m) const;
  bool is_multilinear() const;
  bool is_homogeneous() const;
  std::vector<std::uint32_t> support() const;

  Polynomial plus(const Polynomial& o) const;   // monomial-set union
  Polynomial times(const Polynomial& o) const;  // pairwise products, collapsed

  bool operator==(const Polynomial& o) const { return monomials_ == o.monomials_; }

 private:
  std::vector<Monomial> monomials_;  // sorted, unique
};

std::int64_t eval_monomial(const Monomial& m, const Valuation& v);
std::int64_t eval_poly(const Polynomial& p, const Valuation& v, SemiringFlavor f);

// chi_m: 1 on sup(m), -1 elsewhere.
Valuation characteristic_valuation(const Monomial& m, const VarUniverse& universe);

bool poly_subset(const Polynomial& p, const Polynomial& q);
bool poly_equiv(const Polynomial& p, const Polynomial& q);

// JSON: {"variables":[...], "monomials":[[["x",1],["y",2]], ...]}
std::string poly_to_json(const Polynomial& p, const VarUniverse& u);
std::pair<Polynomial, VarUniverse> poly_from_json(const std::string& text);

}  // namespace tcw

#endif
