#ifndef TCW_CIRCUIT_HPP
#define TCW_CIRCUIT_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tcw/poly.hpp"

namespace tcw {

struct Gate {
  enum class Kind { INPUT, CONST_ZERO, EXTREMUM, SUM };
  Kind kind;
  std::uint32_t var = 0;  // INPUT only
  std::uint32_t l = 0, r = 0;  // EXTREMUM / SUM only
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

// Immutable circuit. Several circuits may share one gate arena and differ
// only in the designated output (multi-output constructions).
class Circuit {
 public:
  Circuit(SemiringFlavor flavor, VarUniverse universe,
          std::shared_ptr<const std::vector<Gate>> gates, std::uint32_t output);

  SemiringFlavor flavor() const { return flavor_; }
  const VarUniverse& universe() const { return universe_; }
  const std::vector<Gate>& gates() const { return *gates_; }
  std::shared_ptr<const std::vector<Gate>> arena() const { return gates_; }
  std::uint32_t output() const { return output_; }
  std::size_t size() const { return gates_->size(); }

 private:
  SemiringFlavor flavor_;
  VarUniverse universe_;
  std::shared_ptr<const std::vector<Gate>> gates_;
  std::uint32_t output_;
};

// Append-only construction; build() may be called several times with
// different outputs, all sharing the arena built so far.
class CircuitBuilder {
 public:
  CircuitBuilder(SemiringFlavor flavor, VarUniverse universe);

  std::uint32_t add_input(std::uint32_t var);
  std::uint32_t add_input(const std::string& name) { return add_input(universe_.id(name)); }
  std::uint32_t add_const0();
  std::uint32_t add_ext(std::uint32_t l, std::uint32_t r);
  std::uint32_t add_sum(std::uint32_t l, std::uint32_t r);
  std::size_t size() const { return gates_.size(); }

  Circuit build(std::uint32_t output);

 private:
  SemiringFlavor flavor_;
  VarUniverse universe_;
  std::vector<Gate> gates_;
  std::shared_ptr<const std::vector<Gate>> built_;  // reused while no gate is added
};

ValidationReport validate(const Circuit& c);

// Gate indices in dependency order; throws CYCLE_DETECTED.
std::vector<std::uint32_t> topological_order(const std::vector<Gate>& gates);

std::int64_t evaluate(const Circuit& c, const Valuation& v);

inline constexpr std::size_t kDefaultExtractionCap = 2'000'000;

// Bottom-up monomial sets for the output gate. cap bounds the total number of
// monomial slots held across gates; CAP_EXCEEDED when the budget runs out.
Polynomial extract_polynomial(const Circuit& c, std::size_t cap = kDefaultExtractionCap);

// Monomial sets for every gate (dead gates included), same cap discipline.
std::vector<Polynomial> extract_all_gates(const Circuit& c,
                                          std::size_t cap = kDefaultExtractionCap);

bool calculates(const Circuit& c, const Polynomial& p,
                std::size_t cap = kDefaultExtractionCap);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);
std::string circuit_to_dot(const Circuit& c);

}  // namespace tcw

#endif
