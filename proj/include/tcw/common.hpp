#ifndef TCW_COMMON_HPP
#define TCW_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcw {

enum class ErrorCode {
  MISSING_VARIABLE,
  OVERFLOW_DETECTED,
  EMPTY_POLYNOMIAL,
  SUPPORT_NOT_IN_UNIVERSE,
  CYCLE_DETECTED,
  BAD_FANIN,
  CAP_EXCEEDED,
  NOT_MULTILINEAR,
  DOMAIN_MISMATCH,
  INVALID_SPEC,
  NOT_IN_CLASS,
  SCALE_EXCEEDED,
  INDEX_OUT_OF_RANGE,
  NOT_A_RECTANGLE,
  INVALID_K,
  NOT_IN_SC,
  INVALID_PARAMS,
  NOT_HAMILTONIAN,
  PRODUCT_NOT_SINGLE_CYCLE,
  NOT_NICE,
  DECOMPOSITION_INVALID,
  WIDTH_EXCEEDED,
  NO_HAMILTONIAN_CYCLE,
  NOT_CONNECTED,
  NOT_HOMOGENEOUS,
  NOT_BALANCED,
  PRECONDITION_UNMET,
  BAD_INPUT,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Checked 64-bit arithmetic; every weight in the workbench goes through these.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::OVERFLOW_DETECTED, "add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::OVERFLOW_DETECTED, "mul");
  return r;
}

// Deterministic, platform-independent PRNG. std::mt19937_64 has a pinned
// algorithm in the standard; the bounded draw below avoids the
// implementation-defined std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // xorshift* variant (Vigna); fixed across platforms.
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545F4914F6CDD1DULL;
  }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw Error(ErrorCode::BAD_INPUT, "Rng::below(0)");
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace tcw

#endif
