#include "tcw/rect.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "nlohmann/json.hpp"
#include "tcw/perm.hpp"

namespace tcw {

namespace {

std::uint32_t count_in(const Monomial& m, const std::set<std::uint32_t>& X) {
  std::uint32_t n = 0;
  for (auto v : m.support()) n += X.count(v);
  return n;
}

std::uint32_t count_in(const Polynomial& p, const std::set<std::uint32_t>& X) {
  std::uint32_t n = 0;
  for (auto v : p.support()) n += X.count(v);
  return n;
}

}  // namespace

std::vector<PolyRectangle> decompose_balanced(const Circuit& c,
                                              const std::vector<std::uint32_t>& X,
                                              std::size_t cap) {
  auto polys = extract_all_gates(c, cap);
  const Polynomial& f = polys[c.output()];
  if (!f.is_homogeneous()) throw Error(ErrorCode::NOT_HOMOGENEOUS, "extraction is not homogeneous");
  auto sup = f.support();
  for (auto x : X)
    if (!std::binary_search(sup.begin(), sup.end(), x))
      throw Error(ErrorCode::BAD_INPUT, "X must lie inside the extraction support");
  std::set<std::uint32_t> Xs(X.begin(), X.end());
  if (Xs.size() < 2) throw Error(ErrorCode::BAD_INPUT, "X needs at least two variables");
  auto over = [&](std::uint32_t cnt) { return 3 * cnt > 2 * Xs.size(); };

  auto& gates = c.gates();
  // Rectangles are keyed by (stop gate, X-signature of the below factor):
  // within one key the below union equals the signature, which the halving
  // walk keeps within (1/3, 2/3] of X, and the contexts are support-disjoint
  // from it, so both union balances hold.
  using Key = std::pair<std::uint32_t, std::vector<std::uint32_t>>;
  std::map<Key, std::pair<std::vector<Monomial>, std::vector<Monomial>>> parts;
  for (const Monomial& m : f.monomials()) {
    Monomial cur = m, context;
    std::uint32_t w = c.output();
    while (over(count_in(cur, Xs))) {
      const Gate& gt = gates[w];
      if (gt.kind == Gate::Kind::EXTREMUM) {
        std::uint32_t lo = std::min(gt.l, gt.r), hi = std::max(gt.l, gt.r);
        w = polys[lo].contains(cur) ? lo : hi;
      } else if (gt.kind == Gate::Kind::SUM) {
        // first factorization in canonical order, then descend into the
        // X-heavier part (ties: smaller gate index)
        bool found = false;
        for (const Monomial& b : polys[gt.l].monomials()) {
          if (!cur.divides(b)) continue;
          Monomial q = cur.divided_by(b);
          if (!polys[gt.r].contains(q)) continue;
          std::uint32_t cl = count_in(b, Xs), cr = count_in(q, Xs);
          bool go_left = cl > cr || (cl == cr && gt.l < gt.r);
          if (go_left) {
            context = context.times(q);
            cur = b;
            w = gt.l;
          } else {
            context = context.times(b);
            cur = q;
            w = gt.r;
          }
          found = true;
          break;
        }
        if (!found) throw Error(ErrorCode::BAD_INPUT, "monomial has no parse at a sum gate");
      } else {
        break;  // input or constant: nothing left to split
      }
    }
    std::vector<std::uint32_t> sig;
    for (auto v : cur.support())
      if (Xs.count(v)) sig.push_back(v);
    auto& slot = parts[{w, std::move(sig)}];
    slot.first.push_back(cur);
    slot.second.push_back(context);
  }
  std::vector<PolyRectangle> out;
  for (auto& [key, gh] : parts)
    out.push_back({Polynomial(std::move(gh.first)), Polynomial(std::move(gh.second))});
  return out;
}

Polynomial below(const Circuit& c, std::uint32_t w, std::size_t cap) {
  Circuit sub(c.flavor(), c.universe(), c.arena(), w);
  return extract_polynomial(sub, cap);
}

Polynomial above(const Circuit& c, std::uint32_t w, const Polynomial& f, std::size_t cap) {
  if (!f.is_multilinear()) throw Error(ErrorCode::NOT_MULTILINEAR, "reference polynomial");
  Polynomial bw = below(c, w, cap);
  std::set<Monomial> candidates;
  for (const Monomial& m : f.monomials())
    for (const Monomial& b : bw.monomials())
      if (m.divides(b)) candidates.insert(m.divided_by(b));
  std::vector<Monomial> keep;
  for (const Monomial& cand : candidates) {
    bool all = true;
    for (const Monomial& b : bw.monomials())
      if (!f.contains(cand.times(b))) {
        all = false;
        break;
      }
    if (all) keep.push_back(cand);
  }
  return Polynomial(std::move(keep));
}

ThinContext::ThinContext(std::uint32_t k) : k_(k), g_(false) {
  auto [g, d] = gen_is_graph(k);
  g_ = std::move(g);
  d_ = std::move(d);
  for (std::uint32_t a = 0; a < (1u << k); ++a) {
    Assignment asg(k);
    for (std::uint32_t i = 0; i < k; ++i) asg[i] = (a >> i) & 1;
    auto sol = canonical_solution(k, asg);
    std::sort(sol.begin(), sol.end());
    canon_.push_back(std::move(sol));
  }
}

std::vector<std::string> ThinContext::prefix(std::size_t cut) const {
  std::set<std::string> p;
  for (std::size_t i = 0; i <= cut && i < d_.bags.size(); ++i)
    for (auto v : d_.bags[i]) p.insert(g_.label(v));
  return {p.begin(), p.end()};
}

bool ThinContext::is_set_rectangle(const SetRectangle& r) const {
  for (auto& A : r.sideA)
    for (auto& B : r.sideB) {
      for (auto& a : A)
        if (std::find(B.begin(), B.end(), a) != B.end()) return false;
      for (auto& a : A)
        for (auto& b : B)
          if (g_.has_edge(g_.id(a), g_.id(b))) return false;
    }
  return true;
}

std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>>
ThinContext::useful_sets(const SetRectangle& r) const {
  if (!is_set_rectangle(r)) throw Error(ErrorCode::NOT_A_RECTANGLE, "set rectangle");
  std::set<std::vector<std::string>> canon(canon_.begin(), canon_.end());
  auto joins = [&](const std::vector<std::string>& A, const std::vector<std::string>& B) {
    std::vector<std::string> u = A;
    u.insert(u.end(), B.begin(), B.end());
    std::sort(u.begin(), u.end());
    return canon.count(u) > 0;
  };
  // sides are set families: a repeated set counts once
  std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>> out;
  std::set<std::vector<std::string>> seen;
  for (auto& A : r.sideA) {
    std::vector<std::string> key = A;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;
    for (auto& B : r.sideB)
      if (joins(A, B)) {
        out.first.push_back(A);
        break;
      }
  }
  seen.clear();
  for (auto& B : r.sideB) {
    std::vector<std::string> key = B;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) continue;
    for (auto& A : r.sideA)
      if (joins(A, B)) {
        out.second.push_back(B);
        break;
      }
  }
  return out;
}

bool ThinContext::check_thin(const SetRectangle& r) const {
  auto [ua, ub] = useful_sets(r);
  if (ua.empty() && ub.empty())
    throw Error(ErrorCode::PRECONDITION_UNMET, "no canonical solution inside the rectangle");
  return std::min(ua.size(), ub.size()) <= 1;
}

SetRectangle ThinContext::sample(Rng& rng) const {
  std::size_t cut = rng.below(d_.bags.size());
  auto pref = prefix(cut);
  std::set<std::string> P(pref.begin(), pref.end());
  const auto& sol = canon_[rng.below(canon_.size())];
  std::vector<std::string> A0, B0;
  for (auto& v : sol) (P.count(v) ? A0 : B0).push_back(v);

  auto adjacent = [&](const std::string& a, const std::string& b) {
    return g_.has_edge(g_.id(a), g_.id(b));
  };
  // toggle 10% of the side's ground set, then drop anything that conflicts
  auto mutate = [&](const std::vector<std::string>& base, const std::set<std::string>& ground,
                    const std::vector<std::vector<std::string>>& fixed_other) {
    std::set<std::string> s(base.begin(), base.end());
    for (auto& v : ground)
      if (rng.below(10) == 0) {
        if (s.count(v))
          s.erase(v);
        else
          s.insert(v);
      }
    std::vector<std::string> keep;
    for (auto& v : s) {
      bool ok = true;
      for (auto& w : keep) ok &= !adjacent(v, w);
      for (auto& other : fixed_other)
        for (auto& w : other) ok &= v != w && !adjacent(v, w);
      if (ok) keep.push_back(v);
    }
    return keep;
  };
  std::set<std::string> S;
  for (std::uint32_t v = 0; v < g_.num_vertices(); ++v)
    if (!P.count(g_.label(v))) S.insert(g_.label(v));

  SetRectangle r;
  r.sideA = {A0};
  auto mutA = mutate(A0, P, {B0});
  if (mutA != A0) r.sideA.push_back(mutA);
  r.sideB = {B0};
  auto mutB = mutate(B0, S, r.sideA);
  if (mutB != B0) r.sideB.push_back(mutB);
  return r;
}

std::pair<std::vector<std::vector<std::string>>, std::vector<std::vector<std::string>>>
useful_sets(const SetRectangle& r, std::uint32_t k) {
  return ThinContext(k).useful_sets(r);
}

bool check_thin(const SetRectangle& r, std::uint32_t k) { return ThinContext(k).check_thin(r); }

std::vector<LayerReport> monochromatic_layers(
    const PolyRectangle& r, const std::vector<std::vector<std::uint32_t>>& layers) {
  auto gs = r.g.support(), hs = r.h.support();
  std::vector<LayerReport> out;
  for (auto& layer : layers) {
    bool in_g = false, in_h = false;
    for (auto v : layer) {
      in_g |= std::binary_search(gs.begin(), gs.end(), v);
      in_h |= std::binary_search(hs.begin(), hs.end(), v);
    }
    LayerReport rep;
    if (in_g && in_h) {
      rep.color = LayerColor::MIXED;
      for (auto v : layer)
        if (!std::binary_search(gs.begin(), gs.end(), v) &&
            !std::binary_search(hs.begin(), hs.end(), v))
          rep.absent.push_back(v);
    } else {
      rep.color = in_h ? LayerColor::MONO_H : LayerColor::MONO_G;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> edge_layers(const GraphInstance& g) {
  if (g.family != "Gnk" && g.family != "Hnk")
    throw Error(ErrorCode::BAD_INPUT, "layers defined for the layered families only");
  std::uint32_t n = g.fam_n;
  VarUniverse u = edge_universe(g);
  std::size_t count = g.family == "Gnk" ? n : n + 1;
  std::vector<std::vector<std::uint32_t>> layers(count);
  for (auto [x, y] : g.edges()) {
    std::uint32_t cx = static_cast<std::uint32_t>(g.layer(x)->column);
    std::uint32_t cy = static_cast<std::uint32_t>(g.layer(y)->column);
    std::size_t idx;
    if (g.family == "Gnk") {
      idx = cx - 1;  // edges run from column c to (c mod n) + 1
    } else if (cx == cy) {
      idx = cx == 1 ? 0 : n;
    } else {
      idx = std::min(cx, cy);
    }
    layers[idx].push_back(u.id(edge_var_name(g, x, y)));
  }
  for (auto& l : layers) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return layers;
}

std::vector<std::uint32_t> one_per_layer(const std::vector<std::vector<std::uint32_t>>& layers) {
  std::vector<std::uint32_t> out;
  for (auto& l : layers) {
    if (l.empty()) throw Error(ErrorCode::BAD_INPUT, "empty layer");
    out.push_back(l.front());
  }
  return out;
}

DtspBoundReport check_rectangle_bound_dtsp(const PolyRectangle& r, const Polynomial& f,
                                           const std::vector<std::uint32_t>& X, std::uint32_t n,
                                           std::uint32_t k, std::uint64_t ck) {
  if (k < 2) throw Error(ErrorCode::INVALID_K, "bound needs k >= 2");
  if (ck == 0) throw Error(ErrorCode::BAD_INPUT, "ck must be positive");
  std::set<std::uint32_t> Xs(X.begin(), X.end());
  if (3 * count_in(r.g, Xs) > 2 * Xs.size() || 3 * count_in(r.h, Xs) > 2 * Xs.size())
    throw Error(ErrorCode::NOT_BALANCED, "rectangle exceeds the 2/3 threshold");
  Polynomial product = r.g.times(r.h);
  if (!poly_subset(product, f))
    throw Error(ErrorCode::NOT_A_RECTANGLE, "product leaves the reference polynomial");
  DtspBoundReport rep;
  rep.product_size = product.size();
  double tours = static_cast<double>(factorial(k - 1));
  for (std::uint32_t i = 1; i < n; ++i) tours *= static_cast<double>(factorial(k));
  rep.bound = tours / static_cast<double>(ck) * 2.0 * k * std::log(static_cast<double>(k));
  rep.holds = static_cast<double>(rep.product_size) <= rep.bound;
  return rep;
}

std::string rectangles_to_json(const std::vector<PolyRectangle>& rs,
                               const std::vector<std::uint32_t>& X) {
  std::set<std::uint32_t> Xs(X.begin(), X.end());
  nlohmann::json j = nlohmann::json::array();
  for (auto& r : rs)
    j.push_back({{"g_monomials", r.g.size()},
                 {"h_monomials", r.h.size()},
                 {"g_on_X", count_in(r.g, Xs)},
                 {"h_on_X", count_in(r.h, Xs)},
                 {"product", r.g.times(r.h).size()}});
  return j.dump();
}

std::string layer_reports_to_json(const std::vector<LayerReport>& reports, const VarUniverse& u) {
  nlohmann::json j = nlohmann::json::array();
  for (auto& r : reports) {
    const char* color = r.color == LayerColor::MIXED
                            ? "mixed"
                            : (r.color == LayerColor::MONO_G ? "mono_g" : "mono_h");
    nlohmann::json absent = nlohmann::json::array();
    for (auto v : r.absent) absent.push_back(u.name(v));
    j.push_back({{"color", color}, {"absent", absent}});
  }
  return j.dump();
}

}  // namespace tcw
