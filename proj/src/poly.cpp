#include "tcw/poly.hpp"

#include <algorithm>
#include <set>

#include "nlohmann/json.hpp"

namespace tcw {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MISSING_VARIABLE: return "MISSING_VARIABLE";
    case ErrorCode::OVERFLOW_DETECTED: return "OVERFLOW";
    case ErrorCode::EMPTY_POLYNOMIAL: return "EMPTY_POLYNOMIAL";
    case ErrorCode::SUPPORT_NOT_IN_UNIVERSE: return "SUPPORT_NOT_IN_UNIVERSE";
    case ErrorCode::CYCLE_DETECTED: return "CYCLE_DETECTED";
    case ErrorCode::BAD_FANIN: return "BAD_FANIN";
    case ErrorCode::CAP_EXCEEDED: return "CAP_EXCEEDED";
    case ErrorCode::NOT_MULTILINEAR: return "NOT_MULTILINEAR";
    case ErrorCode::DOMAIN_MISMATCH: return "DOMAIN_MISMATCH";
    case ErrorCode::INVALID_SPEC: return "INVALID_SPEC";
    case ErrorCode::NOT_IN_CLASS: return "NOT_IN_CLASS";
    case ErrorCode::SCALE_EXCEEDED: return "SCALE_EXCEEDED";
    case ErrorCode::INDEX_OUT_OF_RANGE: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::NOT_A_RECTANGLE: return "NOT_A_RECTANGLE";
    case ErrorCode::INVALID_K: return "INVALID_K";
    case ErrorCode::NOT_IN_SC: return "NOT_IN_SC";
    case ErrorCode::INVALID_PARAMS: return "INVALID_PARAMS";
    case ErrorCode::NOT_HAMILTONIAN: return "NOT_HAMILTONIAN";
    case ErrorCode::PRODUCT_NOT_SINGLE_CYCLE: return "PRODUCT_NOT_SINGLE_CYCLE";
    case ErrorCode::NOT_NICE: return "NOT_NICE";
    case ErrorCode::DECOMPOSITION_INVALID: return "DECOMPOSITION_INVALID";
    case ErrorCode::WIDTH_EXCEEDED: return "WIDTH_EXCEEDED";
    case ErrorCode::NO_HAMILTONIAN_CYCLE: return "NO_HAMILTONIAN_CYCLE";
    case ErrorCode::NOT_CONNECTED: return "NOT_CONNECTED";
    case ErrorCode::NOT_HOMOGENEOUS: return "NOT_HOMOGENEOUS";
    case ErrorCode::NOT_BALANCED: return "NOT_BALANCED";
    case ErrorCode::PRECONDITION_UNMET: return "PRECONDITION_UNMET";
    case ErrorCode::BAD_INPUT: return "BAD_INPUT";
  }
  return "UNKNOWN";
}

VarUniverse::VarUniverse(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  auto it = std::unique(names_.begin(), names_.end());
  if (it != names_.end()) throw Error(ErrorCode::BAD_INPUT, "duplicate variable names");
}

std::uint32_t VarUniverse::id(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw Error(ErrorCode::SUPPORT_NOT_IN_UNIVERSE, name);
  return static_cast<std::uint32_t>(it - names_.begin());
}

bool VarUniverse::contains(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

Monomial::Monomial(std::vector<std::pair<std::uint32_t, std::uint32_t>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  // merge duplicate variables
  std::vector<std::pair<std::uint32_t, std::uint32_t>> merged;
  for (auto& [v, e] : entries_) {
    if (e == 0) throw Error(ErrorCode::BAD_INPUT, "zero exponent");
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  entries_ = std::move(merged);
}

bool Monomial::is_multilinear() const {
  for (auto& [v, e] : entries_)
    if (e != 1) return false;
  return true;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto& [v, e] : entries_) d += e;
  return d;
}

std::vector<std::uint32_t> Monomial::support() const {
  std::vector<std::uint32_t> s;
  s.reserve(entries_.size());
  for (auto& [v, e] : entries_) s.push_back(v);
  return s;
}

bool Monomial::contains_var(std::uint32_t id) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), id,
                             [](const auto& p, std::uint32_t v) { return p.first < v; });
  return it != entries_.end() && it->first == id;
}

Monomial Monomial::times(const Monomial& o) const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(entries_.size() + o.entries_.size());
  auto a = entries_.begin();
  auto b = o.entries_.begin();
  while (a != entries_.end() && b != o.entries_.end()) {
    if (a->first < b->first)
      out.push_back(*a++);
    else if (b->first < a->first)
      out.push_back(*b++);
    else {
      out.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, entries_.end());
  out.insert(out.end(), b, o.entries_.end());
  Monomial m;
  m.entries_ = std::move(out);
  return m;
}

bool Monomial::divides(const Monomial& sub) const {
  auto a = entries_.begin();
  for (auto& [v, e] : sub.entries_) {
    while (a != entries_.end() && a->first < v) ++a;
    if (a == entries_.end() || a->first != v || a->second < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& sub) const {
  if (!divides(sub)) throw Error(ErrorCode::BAD_INPUT, "monomial quotient undefined");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  auto b = sub.entries_.begin();
  for (auto& [v, e] : entries_) {
    std::uint32_t rem = e;
    if (b != sub.entries_.end() && b->first == v) {
      rem = e - b->second;
      ++b;
    }
    if (rem > 0) out.emplace_back(v, rem);
  }
  Monomial m;
  m.entries_ = std::move(out);
  return m;
}

Valuation::Valuation(const VarUniverse& u, std::vector<std::int64_t> values)
    : values_(std::move(values)) {
  if (values_.size() != u.size())
    throw Error(ErrorCode::MISSING_VARIABLE, "valuation not total over universe");
}

Valuation Valuation::from_map(const VarUniverse& u, const std::map<std::string, std::int64_t>& m) {
  std::vector<std::int64_t> vals(u.size());
  for (std::uint32_t i = 0; i < u.size(); ++i) {
    auto it = m.find(u.name(i));
    if (it == m.end()) throw Error(ErrorCode::MISSING_VARIABLE, u.name(i));
    vals[i] = it->second;
  }
  return Valuation(u, std::move(vals));
}

Polynomial::Polynomial(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

bool Polynomial::is_multilinear() const {
  for (auto& m : monomials_)
    if (!m.is_multilinear()) return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  if (monomials_.empty()) return true;
  std::uint32_t d = monomials_.front().degree();
  for (auto& m : monomials_)
    if (m.degree() != d) return false;
  return true;
}

std::vector<std::uint32_t> Polynomial::support() const {
  std::set<std::uint32_t> s;
  for (auto& m : monomials_)
    for (auto& [v, e] : m.entries()) s.insert(v);
  return {s.begin(), s.end()};
}

Polynomial Polynomial::plus(const Polynomial& o) const {
  std::vector<Monomial> out = monomials_;
  out.insert(out.end(), o.monomials_.begin(), o.monomials_.end());
  return Polynomial(std::move(out));
}

Polynomial Polynomial::times(const Polynomial& o) const {
  std::vector<Monomial> out;
  out.reserve(monomials_.size() * o.monomials_.size());
  for (auto& a : monomials_)
    for (auto& b : o.monomials_) out.push_back(a.times(b));
  return Polynomial(std::move(out));
}

std::int64_t eval_monomial(const Monomial& m, const Valuation& v) {
  std::int64_t acc = 0;
  for (auto& [var, e] : m.entries()) {
    if (var >= v.size()) throw Error(ErrorCode::MISSING_VARIABLE, "variable id out of range");
    acc = checked_add(acc, checked_mul(static_cast<std::int64_t>(e), v[var]));
  }
  return acc;
}

std::int64_t eval_poly(const Polynomial& p, const Valuation& v, SemiringFlavor f) {
  if (p.empty()) throw Error(ErrorCode::EMPTY_POLYNOMIAL, "eval_poly");
  bool first = true;
  std::int64_t best = 0;
  for (auto& m : p.monomials()) {
    std::int64_t x = eval_monomial(m, v);
    if (first || (f == SemiringFlavor::MAX_PLUS ? x > best : x < best)) best = x;
    first = false;
  }
  return best;
}

Valuation characteristic_valuation(const Monomial& m, const VarUniverse& universe) {
  std::vector<std::int64_t> vals(universe.size(), -1);
  for (auto& [v, e] : m.entries()) {
    if (v >= universe.size())
      throw Error(ErrorCode::SUPPORT_NOT_IN_UNIVERSE, "monomial variable outside universe");
    vals[v] = 1;
  }
  return Valuation(universe, std::move(vals));
}

bool poly_subset(const Polynomial& p, const Polynomial& q) {
  for (auto& m : p.monomials())
    if (!q.contains(m)) return false;
  return true;
}

bool poly_equiv(const Polynomial& p, const Polynomial& q) {
  return p.monomials() == q.monomials();
}

std::string poly_to_json(const Polynomial& p, const VarUniverse& u) {
  nlohmann::json j;
  j["variables"] = u.names();
  auto& ms = j["monomials"] = nlohmann::json::array();
  for (auto& m : p.monomials()) {
    nlohmann::json jm = nlohmann::json::array();
    for (auto& [v, e] : m.entries()) jm.push_back({u.name(v), e});
    ms.push_back(jm);
  }
  return j.dump();
}

std::pair<Polynomial, VarUniverse> poly_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  VarUniverse u(j.at("variables").get<std::vector<std::string>>());
  std::vector<Monomial> ms;
  for (auto& jm : j.at("monomials")) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
    for (auto& je : jm)
      entries.emplace_back(u.id(je.at(0).get<std::string>()), je.at(1).get<std::uint32_t>());
    ms.emplace_back(std::move(entries));
  }
  return {Polynomial(std::move(ms)), std::move(u)};
}

}  // namespace tcw
