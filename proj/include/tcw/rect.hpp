#ifndef TCW_RECT_HPP
#define TCW_RECT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tcw/circuit.hpp"
#include "tcw/graph.hpp"

namespace tcw {

// A product rectangle g*h inside a reference polynomial.
struct PolyRectangle {
  Polynomial g, h;
};

struct AboveBelow {
  std::uint32_t gate = 0;
  Polynomial below, above;
};

// Balanced parse-walk decomposition: every monomial of the extraction is
// assigned to the first gate (walking from the output) whose below factor
// meets the 2/3 threshold on X. Rectangles come out keyed by gate index.
std::vector<PolyRectangle> decompose_balanced(const Circuit& c,
                                              const std::vector<std::uint32_t>& X,
                                              std::size_t cap = kDefaultExtractionCap);

// Extraction rooted at gate w.
Polynomial below(const Circuit& c, std::uint32_t w, std::size_t cap = kDefaultExtractionCap);
// All multilinear monomials m over sup(f) with m * below(w) contained in f.
Polynomial above(const Circuit& c, std::uint32_t w, const Polynomial& f,
                 std::size_t cap = kDefaultExtractionCap);

// Families of vertex-label sets on the two sides of a graph rectangle.
struct SetRectangle {
  std::vector<std::vector<std::string>> sideA, sideB;
};

// Shared context for thin-rectangle work on one clause graph.
class ThinContext {
 public:
  explicit ThinContext(std::uint32_t k);

  const GraphInstance& graph() const { return g_; }
  const PathDecomposition& decomposition() const { return d_; }
  const std::vector<std::vector<std::string>>& canonical_solutions() const { return canon_; }
  // Labels of the vertices covered by bags [0, cut]; the complement is the suffix.
  std::vector<std::string> prefix(std::size_t cut) const;

  bool is_set_rectangle(const SetRectangle& r) const;
  // Members of each side completable by the other side to a canonical solution.
  std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>>
  useful_sets(const SetRectangle& r) const;
  // min(|usefulA|, |usefulB|) <= 1; needs a canonical solution inside.
  bool check_thin(const SetRectangle& r) const;

  // A rectangle around a random canonical split with 10% mutation + repair.
  SetRectangle sample(Rng& rng) const;

 private:
  std::uint32_t k_;
  GraphInstance g_;
  PathDecomposition d_;
  std::vector<std::vector<std::string>> canon_;  // each sorted
};

std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>>
useful_sets(const SetRectangle& r, std::uint32_t k);
bool check_thin(const SetRectangle& r, std::uint32_t k);

enum class LayerColor { MONO_G, MONO_H, MIXED };

struct LayerReport {
  LayerColor color = LayerColor::MONO_G;
  std::vector<std::uint32_t> absent;  // layer variables missing from sup(g) u sup(h)
};

std::vector<LayerReport> monochromatic_layers(const PolyRectangle& r,
                                              const std::vector<std::vector<std::uint32_t>>& layers);

// Layer edge-variable id sets over edge_universe(g) for the layered families.
std::vector<std::vector<std::uint32_t>> edge_layers(const GraphInstance& g);
// Smallest variable id of each layer (a transversal for balance checks).
std::vector<std::uint32_t> one_per_layer(const std::vector<std::vector<std::uint32_t>>& layers);

struct DtspBoundReport {
  std::uint64_t product_size = 0;
  double bound = 0.0;
  bool holds = false;
};

DtspBoundReport check_rectangle_bound_dtsp(const PolyRectangle& r, const Polynomial& f,
                                           const std::vector<std::uint32_t>& X, std::uint32_t n,
                                           std::uint32_t k, std::uint64_t ck);

std::string rectangles_to_json(const std::vector<PolyRectangle>& rs,
                               const std::vector<std::uint32_t>& X);
std::string layer_reports_to_json(const std::vector<LayerReport>& reports, const VarUniverse& u);

}  // namespace tcw

#endif
