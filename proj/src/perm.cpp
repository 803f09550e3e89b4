#include "tcw/perm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace tcw {

Perm::Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x : images_) {
    if (x < 1 || x > images_.size() || seen[x - 1])
      throw Error(ErrorCode::BAD_INPUT, "not a bijection on [n]");
    seen[x - 1] = true;
  }
}

Perm Perm::identity(std::uint32_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1u);
  return Perm(std::move(im));
}

Perm Perm::from_cycles(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1u);
  for (auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::uint32_t from = c[i];
      std::uint32_t to = c[(i + 1) % c.size()];
      if (from < 1 || from > n) throw Error(ErrorCode::BAD_INPUT, "cycle element out of range");
      im[from - 1] = to;
    }
  }
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> im(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = i + 1;
  return Perm(std::move(im));
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << images_[i];
  }
  os << ']';
  return os.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.n() != b.n()) throw Error(ErrorCode::DOMAIN_MISMATCH, "compose");
  std::vector<std::uint32_t> im(a.n());
  for (std::uint32_t x = 1; x <= a.n(); ++x) im[x - 1] = a.apply(b.apply(x));
  return Perm(std::move(im));
}

Perm conjugate(const Perm& rho, const Perm& pi) {
  if (rho.n() != pi.n()) throw Error(ErrorCode::DOMAIN_MISMATCH, "conjugate");
  return compose(pi.inverse(), compose(rho, pi));
}

CycleType cycle_type(const Perm& rho) {
  std::vector<bool> seen(rho.n(), false);
  CycleType t;
  for (std::uint32_t x = 1; x <= rho.n(); ++x) {
    if (seen[x - 1]) continue;
    std::uint32_t len = 0, y = x;
    do {
      seen[y - 1] = true;
      ++len;
      y = rho.apply(y);
    } while (y != x);
    t.sizes.push_back(len);
  }
  std::sort(t.sizes.begin(), t.sizes.end(), std::greater<>());
  return t;
}

bool is_single_cycle(const Perm& rho) {
  auto t = cycle_type(rho);
  return t.sizes.size() == 1 && t.sizes[0] == rho.n();
}

bool is_all_two_cycles(const Perm& rho) {
  if (rho.n() % 2 != 0) return false;
  auto t = cycle_type(rho);
  for (std::uint32_t s : t.sizes)
    if (s != 2) return false;
  return true;
}

bool is_two_k_cycles(const Perm& rho) {
  if (rho.n() % 2 != 0) return false;
  auto t = cycle_type(rho);
  return t.sizes.size() == 2 && t.sizes[0] == rho.n() / 2 && t.sizes[1] == rho.n() / 2;
}

std::vector<Perm> enumerate_sym(std::uint32_t n) {
  if (n > 8) throw Error(ErrorCode::SCALE_EXCEEDED, "enumerate_sym limited to n <= 8");
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 1u);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

namespace {

// All single n-cycles: fix 1 as cycle start, permute the rest as cycle order.
void gen_single_cycles(std::uint32_t n, std::vector<Perm>& out) {
  if (n == 0) return;
  std::vector<std::uint32_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2u);
  do {
    std::vector<std::uint32_t> cyc{1};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    out.push_back(Perm::from_cycles(n, {cyc}));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

// All fixed-point-free involutions of [n] (n even) via recursive pairing.
void gen_pairings(std::vector<std::uint32_t>& unused, std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                  std::uint32_t n, std::vector<Perm>& out) {
  if (unused.empty()) {
    std::vector<std::vector<std::uint32_t>> cycles;
    for (auto& [a, b] : pairs) cycles.push_back({a, b});
    out.push_back(Perm::from_cycles(n, cycles));
    return;
  }
  std::uint32_t a = unused.front();
  for (std::size_t i = 1; i < unused.size(); ++i) {
    std::uint32_t b = unused[i];
    std::vector<std::uint32_t> rest;
    for (std::size_t j = 1; j < unused.size(); ++j)
      if (j != i) rest.push_back(unused[j]);
    pairs.emplace_back(a, b);
    gen_pairings(rest, pairs, n, out);
    pairs.pop_back();
  }
}

// All permutations of [2k] with exactly two k-cycles: choose the cycle
// containing 1, then cyclic orders on both halves.
void gen_two_k_cycles(std::uint32_t n, std::vector<Perm>& out) {
  std::uint32_t k = n / 2;
  std::vector<std::uint32_t> elems(n - 1);
  std::iota(elems.begin(), elems.end(), 2u);
  // choose the k-1 companions of element 1, then cyclic orders on both halves
  auto emit = [&](const std::vector<std::uint32_t>& with1) {
    std::vector<std::uint32_t> other;
    std::vector<bool> inw(n + 1, false);
    for (auto x : with1) inw[x] = true;
    inw[1] = true;
    for (std::uint32_t x = 2; x <= n; ++x)
      if (!inw[x]) other.push_back(x);
    // cyclic orders: fix smallest element first in each cycle
    std::vector<std::uint32_t> restA(with1);
    std::sort(restA.begin(), restA.end());
    std::vector<std::uint32_t> restB(other.begin() + 1, other.end());
    do {
      std::vector<std::uint32_t> cycA{1};
      cycA.insert(cycA.end(), restA.begin(), restA.end());
      std::vector<std::uint32_t> rb(restB);
      std::sort(rb.begin(), rb.end());
      do {
        std::vector<std::uint32_t> cycB{other[0]};
        cycB.insert(cycB.end(), rb.begin(), rb.end());
        out.push_back(Perm::from_cycles(n, {cycA, cycB}));
      } while (std::next_permutation(rb.begin(), rb.end()));
    } while (std::next_permutation(restA.begin(), restA.end()));
  };
  // combinations of k-1 elements from elems
  std::vector<std::uint32_t> comb;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (comb.size() == k - 1) {
      emit(comb);
      return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) {
      comb.push_back(elems[i]);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<Perm> enumerate_class(std::uint32_t n, const ClassSpec& spec) {
  std::vector<Perm> out;
  switch (spec.variant) {
    case ClassVariant::SINGLE_CYCLE:
      if (n < 1) throw Error(ErrorCode::INVALID_SPEC, "SINGLE_CYCLE needs n >= 1");
      gen_single_cycles(n, out);
      break;
    case ClassVariant::ALL_TWO_CYCLES: {
      if (n % 2 != 0 || n == 0) throw Error(ErrorCode::INVALID_SPEC, "ALL_TWO_CYCLES needs even n");
      if (n > 14) throw Error(ErrorCode::SCALE_EXCEEDED, "pairing enumeration limited to n <= 14");
      std::vector<std::uint32_t> all(n);
      std::iota(all.begin(), all.end(), 1u);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      gen_pairings(all, pairs, n, out);
      break;
    }
    case ClassVariant::TWO_K_CYCLES:
      if (n % 2 != 0 || n == 0) throw Error(ErrorCode::INVALID_SPEC, "TWO_K_CYCLES needs even n");
      if (n > 12) throw Error(ErrorCode::SCALE_EXCEEDED, "two-k-cycle enumeration limited to n <= 12");
      gen_two_k_cycles(n, out);
      break;
    case ClassVariant::EXPLICIT: {
      std::uint64_t total = 0;
      for (auto s : spec.explicit_type.sizes) total += s;
      if (total != n) throw Error(ErrorCode::INVALID_SPEC, "cycle type does not sum to n");
      for (auto& p : enumerate_sym(n))
        if (cycle_type(p) == spec.explicit_type) out.push_back(p);
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t count_conjugators(const Perm& rho1, const Perm& rho2) {
  if (rho1.n() != rho2.n()) throw Error(ErrorCode::DOMAIN_MISMATCH, "count_conjugators");
  std::uint64_t count = 0;
  for (auto& pi : enumerate_sym(rho1.n()))
    if (conjugate(rho1, pi) == rho2) ++count;
  return count;
}

std::uint64_t count_completions(const Perm& rho1) {
  if (!is_all_two_cycles(rho1)) throw Error(ErrorCode::NOT_IN_CLASS, "rho1 not in S^2_{2k}");
  std::uint64_t count = 0;
  for (auto& rho2 : enumerate_class(rho1.n(), ClassSpec::all_two_cycles()))
    if (is_two_k_cycles(compose(rho2, rho1))) ++count;
  return count;
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 2; i <= n; ++i) r *= i;
  return r;
}

std::uint64_t double_factorial(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = n; i > 1; i -= 2) r *= i;
  return r;
}

}  // namespace tcw
