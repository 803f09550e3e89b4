#ifndef TCW_PERM_HPP
#define TCW_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcw/common.hpp"

namespace tcw {

// Permutation of [n], 1-based domain, stored as image sequence:
// images()[i-1] is the image of i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);
  static Perm identity(std::uint32_t n);
  // Cycle notation constructor for tests: cycles over [n].
  static Perm from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t n() const { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t apply(std::uint32_t x) const { return images_.at(x - 1); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Perm inverse() const;
  std::string to_string() const;

  auto operator<=>(const Perm& o) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

// Multiset of cycle sizes (sorted descending), fixed points included as 1s.
struct CycleType {
  std::vector<std::uint32_t> sizes;
  auto operator<=>(const CycleType& o) const = default;
};

enum class ClassVariant { SINGLE_CYCLE, ALL_TWO_CYCLES, TWO_K_CYCLES, EXPLICIT };

struct ClassSpec {
  ClassVariant variant;
  CycleType explicit_type;  // used only for EXPLICIT
  static ClassSpec single_cycle() { return {ClassVariant::SINGLE_CYCLE, {}}; }
  static ClassSpec all_two_cycles() { return {ClassVariant::ALL_TWO_CYCLES, {}}; }
  static ClassSpec two_k_cycles() { return {ClassVariant::TWO_K_CYCLES, {}}; }
  static ClassSpec explicit_type_of(CycleType t) { return {ClassVariant::EXPLICIT, std::move(t)}; }
};

// (a o b)(x) = a(b(x)); "ab" in product notation applies b first.
Perm compose(const Perm& a, const Perm& b);
// pi^{-1} rho pi
Perm conjugate(const Perm& rho, const Perm& pi);
CycleType cycle_type(const Perm& rho);

bool is_single_cycle(const Perm& rho);
bool is_all_two_cycles(const Perm& rho);   // k cycles of size 2 on [2k]
bool is_two_k_cycles(const Perm& rho);     // 2 cycles of size k on [2k]

// All permutations of [n] in lexicographic order of image sequences.
// Guarded: n <= 8.
std::vector<Perm> enumerate_sym(std::uint32_t n);

// Class members in lexicographic order of image sequences.
std::vector<Perm> enumerate_class(std::uint32_t n, const ClassSpec& spec);

// |{pi : pi^{-1} rho1 pi = rho2}| by enumeration; n <= 8.
std::uint64_t count_conjugators(const Perm& rho1, const Perm& rho2);

// |{rho2 in S^2_{2k} : rho2 rho1 in S^k_{2k}}| by enumeration over the class.
std::uint64_t count_completions(const Perm& rho1);

std::uint64_t factorial(std::uint32_t n);
std::uint64_t double_factorial(std::uint32_t n);  // n!! with (-1)!! = 0!! = 1

}  // namespace tcw

#endif
