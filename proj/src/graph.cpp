#include "tcw/graph.hpp"

#include <algorithm>
#include <sstream>

#include "nlohmann/json.hpp"

namespace tcw {

namespace {

std::string vlabel(std::uint32_t c, std::uint32_t r) {
  return "v[" + std::to_string(c) + "][" + std::to_string(r) + "]";
}

std::string vlabel3(std::uint32_t c, std::uint32_t r, std::int32_t s) {
  return vlabel(c, r) + "[" + std::to_string(s) + "]";
}

std::string wlabel(const Clause& cl) {
  return "w[" + std::to_string(cl.a) + "][" + std::to_string(cl.b) + "][" +
         std::to_string(cl.na) + "][" + std::to_string(cl.nb) + "]";
}

}  // namespace

std::uint32_t GraphInstance::add_vertex(const std::string& label) {
  if (index_.count(label)) throw Error(ErrorCode::BAD_INPUT, "duplicate vertex " + label);
  std::uint32_t id = static_cast<std::uint32_t>(labels_.size());
  labels_.push_back(label);
  index_[label] = id;
  adj_out_.emplace_back();
  adj_in_.emplace_back();
  return id;
}

std::uint32_t GraphInstance::add_vertex(const std::string& label, LayerPos pos) {
  std::uint32_t id = add_vertex(label);
  layers_[id] = pos;
  return id;
}

void GraphInstance::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= labels_.size() || v >= labels_.size())
    throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "edge endpoint");
  if (u == v) throw Error(ErrorCode::BAD_INPUT, "self-loop");
  adj_out_[u].insert(v);
  adj_in_[v].insert(u);
  if (!directed_) {
    adj_out_[v].insert(u);
    adj_in_[u].insert(v);
  }
}

std::uint32_t GraphInstance::id(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::BAD_INPUT, "unknown vertex " + label);
  return it->second;
}

bool GraphInstance::has_edge(std::uint32_t u, std::uint32_t v) const {
  if (u >= labels_.size() || v >= labels_.size()) return false;
  return adj_out_[u].count(v) > 0;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> GraphInstance::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t u = 0; u < labels_.size(); ++u)
    for (std::uint32_t v : adj_out_[u])
      if (directed_ || u < v) out.emplace_back(u, v);
  return out;
}

std::size_t GraphInstance::num_edges() const { return edges().size(); }

const LayerPos* GraphInstance::layer(std::uint32_t v) const {
  auto it = layers_.find(v);
  return it == layers_.end() ? nullptr : &it->second;
}

std::uint32_t PathDecomposition::width() const {
  std::size_t mx = 0;
  for (auto& b : bags) mx = std::max(mx, b.size());
  return mx == 0 ? 0 : static_cast<std::uint32_t>(mx - 1);
}

DecompositionReport verify_path_decomposition(const GraphInstance& g, const PathDecomposition& d) {
  DecompositionReport rep;
  std::vector<std::set<std::uint32_t>> bags;
  for (auto& b : d.bags) bags.emplace_back(b.begin(), b.end());
  for (auto& b : bags)
    for (std::uint32_t v : b)
      if (v >= g.num_vertices()) {
        rep.ok = false;
        rep.violations.push_back("UNKNOWN_VERTEX: id " + std::to_string(v));
        return rep;
      }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (auto& b : bags)
      if (b.count(u) && b.count(v)) {
        covered = true;
        break;
      }
    if (!covered) {
      rep.ok = false;
      rep.violations.push_back("EDGE_UNCOVERED: " + g.label(u) + " - " + g.label(v));
    }
  }
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < bags.size(); ++i)
      if (bags[i].count(v)) where.push_back(i);
    if (where.empty()) {
      rep.ok = false;
      rep.violations.push_back("VERTEX_UNCOVERED: " + g.label(v));
    } else if (where.back() - where.front() + 1 != where.size()) {
      rep.ok = false;
      rep.violations.push_back("INTERVAL_BROKEN: " + g.label(v));
    }
  }
  if (rep.ok) rep.width = d.width();
  return rep;
}

std::vector<Clause> clause_list(std::uint32_t k) {
  std::vector<Clause> out;
  for (std::uint32_t a = 1; a < k; ++a)
    for (std::uint32_t b = a + 1; b <= k; ++b)
      for (std::uint8_t na = 0; na <= 1; ++na)
        for (std::uint8_t nb = 0; nb <= 1; ++nb) out.push_back({a, b, na, nb});
  return out;
}

std::pair<GraphInstance, PathDecomposition> gen_is_graph(std::uint32_t k) {
  if (k < 2) throw Error(ErrorCode::INVALID_K, "gen_is_graph needs k >= 2");
  auto clauses = clause_list(k);
  std::uint32_t q = static_cast<std::uint32_t>(clauses.size());  // 4*C(k,2)
  GraphInstance g(false);
  g.family = "Gk";
  g.fam_k = k;
  // literal chains: v[i][j], i in [k], j in 0..2q-1
  std::vector<std::vector<std::uint32_t>> v(k + 1, std::vector<std::uint32_t>(2 * q));
  for (std::uint32_t i = 1; i <= k; ++i)
    for (std::uint32_t j = 0; j < 2 * q; ++j)
      v[i][j] = g.add_vertex(vlabel(i, j), {static_cast<std::int32_t>(j),
                                            static_cast<std::int32_t>(i), 0});
  std::vector<std::uint32_t> w(q + 1);
  for (std::uint32_t i = 1; i <= q; ++i)
    w[i] = g.add_vertex(wlabel(clauses[i - 1]), {static_cast<std::int32_t>(2 * (i - 1)), 0, 0});
  for (std::uint32_t i = 1; i <= k; ++i)
    for (std::uint32_t j = 1; j < 2 * q; ++j) g.add_edge(v[i][j - 1], v[i][j]);
  for (std::uint32_t i = 1; i <= q; ++i) {
    auto& cl = clauses[i - 1];
    g.add_edge(w[i], v[cl.a][2 * (i - 1) + cl.na]);
    g.add_edge(w[i], v[cl.b][2 * (i - 1) + cl.nb]);
  }
  // Decomposition: sweep columns left to right, shifting one row at a time.
  // The clause vertex of the even->odd transition joins a bag where both of
  // its literals are present, which requires shifting bit-1 rows first.
  PathDecomposition d;
  std::vector<std::uint32_t> cur;
  for (std::uint32_t i = 1; i <= k; ++i) cur.push_back(v[i][0]);
  d.bags.push_back(cur);
  for (std::uint32_t c = 0; c + 1 < 2 * q; ++c) {
    const Clause* cl = (c % 2 == 0) ? &clauses[c / 2] : nullptr;
    std::vector<std::uint32_t> order;
    if (cl) {
      if (cl->na == 1) order.push_back(cl->a);
      if (cl->nb == 1) order.push_back(cl->b);
    }
    for (std::uint32_t i = 1; i <= k; ++i)
      if (std::find(order.begin(), order.end(), i) == order.end()) order.push_back(i);
    std::size_t clause_at = cl ? static_cast<std::size_t>(cl->na + cl->nb) : order.size() + 1;
    for (std::size_t idx = 0; idx <= order.size(); ++idx) {
      if (cl && idx == clause_at) {
        auto bag = cur;
        bag.push_back(w[c / 2 + 1]);
        d.bags.push_back(bag);
      }
      if (idx == order.size()) break;
      std::uint32_t row = order[idx];
      auto bag = cur;
      bag.push_back(v[row][c + 1]);
      d.bags.push_back(bag);
      std::replace(cur.begin(), cur.end(), v[row][c], v[row][c + 1]);
      d.bags.push_back(cur);
    }
  }
  return {std::move(g), std::move(d)};
}

std::vector<std::string> canonical_solution(std::uint32_t k, const Assignment& a) {
  if (k < 2) throw Error(ErrorCode::INVALID_K, "canonical_solution needs k >= 2");
  if (a.size() != k) throw Error(ErrorCode::BAD_INPUT, "assignment not total on [k]");
  for (auto bit : a)
    if (bit > 1) throw Error(ErrorCode::BAD_INPUT, "assignment bits must be 0/1");
  auto clauses = clause_list(k);
  std::uint32_t q = static_cast<std::uint32_t>(clauses.size());
  std::vector<std::string> out;
  for (std::uint32_t i = 1; i <= k; ++i)
    for (std::uint32_t j = 0; j < q; ++j) out.push_back(vlabel(i, 2 * j + a[i - 1]));
  for (std::uint32_t i = 1; i <= q; ++i) {
    auto& cl = clauses[i - 1];
    if (a[cl.a - 1] != cl.na && a[cl.b - 1] != cl.nb) out.push_back(wlabel(clauses[i - 1]));
  }
  return out;
}

std::pair<GraphInstance, PathDecomposition> gen_dtsp_graph(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k < 1) throw Error(ErrorCode::INVALID_PARAMS, "gen_dtsp_graph needs n >= 2, k >= 1");
  GraphInstance g(true);
  g.family = "Gnk";
  g.fam_n = n;
  g.fam_k = k;
  std::vector<std::vector<std::uint32_t>> v(n + 1, std::vector<std::uint32_t>(k + 1));
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::uint32_t r = 1; r <= k; ++r)
      v[c][r] = g.add_vertex(vlabel(c, r), {static_cast<std::int32_t>(c),
                                            static_cast<std::int32_t>(r), 0});
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::uint32_t r1 = 1; r1 <= k; ++r1)
      for (std::uint32_t r2 = 1; r2 <= k; ++r2) g.add_edge(v[c][r1], v[c % n + 1][r2]);
  PathDecomposition d;
  for (std::uint32_t c = 1; c + 1 <= n; ++c) {
    std::vector<std::uint32_t> bag;
    for (std::uint32_t r = 1; r <= k; ++r) bag.push_back(v[1][r]);
    for (std::uint32_t r = 1; r <= k; ++r)
      if (c != 1) bag.push_back(v[c][r]);
    for (std::uint32_t r = 1; r <= k; ++r) bag.push_back(v[c + 1][r]);
    d.bags.push_back(std::move(bag));
  }
  return {std::move(g), std::move(d)};
}

std::pair<GraphInstance, PathDecomposition> gen_tsp_graph(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k < 1) throw Error(ErrorCode::INVALID_PARAMS, "gen_tsp_graph needs n >= 2, k >= 1");
  GraphInstance g(false);
  g.family = "GnkBar";
  g.fam_n = n;
  g.fam_k = k;
  auto vid = [&](std::uint32_t c, std::uint32_t r, std::int32_t s) {
    return g.id(vlabel3(c, r, s));
  };
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::uint32_t r = 1; r <= k; ++r)
      for (std::int32_t s : {-1, 0, 1})
        g.add_vertex(vlabel3(c, r, s),
                     {static_cast<std::int32_t>(c), static_cast<std::int32_t>(r), s});
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::uint32_t r = 1; r <= k; ++r) {
      g.add_edge(vid(c, r, -1), vid(c, r, 0));
      g.add_edge(vid(c, r, 0), vid(c, r, 1));
    }
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::uint32_t r1 = 1; r1 <= k; ++r1)
      for (std::uint32_t r2 = 1; r2 <= k; ++r2) g.add_edge(vid(c, r1, 1), vid(c % n + 1, r2, -1));
  // Anchor the first column's -1 sublayer through the whole sweep so the
  // wrap-around edges from column n are covered.
  PathDecomposition d;
  std::vector<std::uint32_t> anchor;
  for (std::uint32_t r = 1; r <= k; ++r) anchor.push_back(vid(1, r, -1));
  for (std::uint32_t c = 1; c <= n; ++c) {
    std::vector<std::uint32_t> b1 = anchor, b2 = anchor, b3 = anchor;
    for (std::uint32_t r = 1; r <= k; ++r) {
      if (c != 1) b1.push_back(vid(c, r, -1));
      b1.push_back(vid(c, r, 0));
      b2.push_back(vid(c, r, 0));
      b2.push_back(vid(c, r, 1));
      b3.push_back(vid(c, r, 1));
      if (c != n) b3.push_back(vid(c + 1, r, -1));
    }
    d.bags.push_back(std::move(b1));
    d.bags.push_back(std::move(b2));
    d.bags.push_back(std::move(b3));
  }
  return {std::move(g), std::move(d)};
}

std::pair<GraphInstance, PathDecomposition> gen_dst_graph(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k < 1) throw Error(ErrorCode::INVALID_PARAMS, "gen_dst_graph needs n >= 2, k >= 1");
  GraphInstance g(true);
  g.family = "Hnk";
  g.fam_n = n;
  g.fam_k = k;
  std::vector<std::vector<std::uint32_t>> v(n + 1, std::vector<std::uint32_t>(2 * k + 1));
  for (std::uint32_t c = 1; c <= n; ++c)
    for (std::uint32_t r = 1; r <= 2 * k; ++r)
      v[c][r] = g.add_vertex(vlabel(c, r), {static_cast<std::int32_t>(c),
                                            static_cast<std::int32_t>(r), 0});
  for (std::uint32_t c = 1; c + 1 <= n; ++c)
    for (std::uint32_t r1 = 1; r1 <= 2 * k; ++r1)
      for (std::uint32_t r2 = 1; r2 <= 2 * k; ++r2) {
        g.add_edge(v[c][r1], v[c + 1][r2]);
        g.add_edge(v[c + 1][r2], v[c][r1]);
      }
  for (std::uint32_t c : {1u, n})
    for (std::uint32_t r1 = 1; r1 <= 2 * k; ++r1)
      for (std::uint32_t r2 = 1; r2 <= 2 * k; ++r2)
        if (r1 != r2) g.add_edge(v[c][r1], v[c][r2]);
  PathDecomposition d;
  for (std::uint32_t c = 1; c + 1 <= n; ++c) {
    std::vector<std::uint32_t> bag;
    for (std::uint32_t r = 1; r <= 2 * k; ++r) bag.push_back(v[c][r]);
    for (std::uint32_t r = 1; r <= 2 * k; ++r) bag.push_back(v[c + 1][r]);
    d.bags.push_back(std::move(bag));
  }
  return {std::move(g), std::move(d)};
}

VertexCycle canonical_cycle(const VertexCycle& c, bool directed) {
  if (c.empty()) return c;
  auto rotate_min = [](VertexCycle cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    return cyc;
  };
  VertexCycle fwd = rotate_min(c);
  if (directed) return fwd;
  VertexCycle rev(c.rbegin(), c.rend());
  rev = rotate_min(rev);
  return std::min(fwd, rev);
}

namespace {

void check_hamiltonian(const GraphInstance& g, const VertexCycle& cycle) {
  if (cycle.size() != g.num_vertices())
    throw Error(ErrorCode::NOT_HAMILTONIAN, "cycle does not visit every vertex once");
  std::vector<bool> seen(g.num_vertices(), false);
  for (std::uint32_t v : cycle) {
    if (v >= g.num_vertices() || seen[v])
      throw Error(ErrorCode::NOT_HAMILTONIAN, "repeated or unknown vertex");
    seen[v] = true;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
      throw Error(ErrorCode::NOT_HAMILTONIAN, "missing edge along cycle");
}

}  // namespace

PermSequence cycle_to_sequence(const GraphInstance& g, const VertexCycle& cycle) {
  if (g.family != "Gnk") throw Error(ErrorCode::PRECONDITION_UNMET, "expects the layered DTSP family");
  std::uint32_t n = g.fam_n, k = g.fam_k;
  check_hamiltonian(g, cycle);
  std::vector<std::vector<std::uint32_t>> images(n + 1, std::vector<std::uint32_t>(k, 0));
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto* lu = g.layer(cycle[i]);
    auto* lv = g.layer(cycle[(i + 1) % cycle.size()]);
    images[lu->column][lu->row - 1] = static_cast<std::uint32_t>(lv->row);
  }
  PermSequence s;
  for (std::uint32_t c = 1; c <= n; ++c) s.perms.emplace_back(images[c]);
  Perm prod = s.perms[0];
  for (std::uint32_t c = 1; c < n; ++c) prod = compose(s.perms[c], prod);
  if (!is_single_cycle(prod))
    throw Error(ErrorCode::PRODUCT_NOT_SINGLE_CYCLE, "cycle_to_sequence");
  return s;
}

VertexCycle sequence_to_cycle(const GraphInstance& g, const PermSequence& s) {
  if (g.family != "Gnk") throw Error(ErrorCode::PRECONDITION_UNMET, "expects the layered DTSP family");
  std::uint32_t n = g.fam_n, k = g.fam_k;
  if (s.perms.size() != n) throw Error(ErrorCode::BAD_INPUT, "need n permutations");
  for (auto& p : s.perms)
    if (p.n() != k) throw Error(ErrorCode::BAD_INPUT, "permutation domain must be [k]");
  Perm prod = s.perms[0];
  for (std::uint32_t c = 1; c < n; ++c) prod = compose(s.perms[c], prod);
  if (!is_single_cycle(prod))
    throw Error(ErrorCode::PRODUCT_NOT_SINGLE_CYCLE, "sequence_to_cycle");
  VertexCycle cycle;
  std::uint32_t c = 1, r = 1;
  for (std::uint32_t step = 0; step < n * k; ++step) {
    cycle.push_back(g.id(vlabel(c, r)));
    r = s.perms[c - 1].apply(r);
    c = c % n + 1;
  }
  return cycle;
}

PermSequence nice_cycle_content(const GraphInstance& g, const VertexCycle& cycle) {
  if (g.family != "Hnk") throw Error(ErrorCode::PRECONDITION_UNMET, "expects the DST family");
  std::uint32_t n = g.fam_n, k = g.fam_k;
  check_hamiltonian(g, cycle);
  // rho_i for i in [n-1] maps column-i rows to column-(i+1) rows; rho_0 and
  // rho_n are intra-column involutions. Direction of traversal is ignored.
  std::vector<std::vector<std::uint32_t>> images(n + 1, std::vector<std::uint32_t>(2 * k, 0));
  auto set_image = [&](std::uint32_t i, std::uint32_t s, std::uint32_t t) {
    if (images[i][s - 1] != 0 && images[i][s - 1] != t)
      throw Error(ErrorCode::NOT_NICE, "layer intersection is not a matching");
    images[i][s - 1] = t;
  };
  for (std::size_t p = 0; p < cycle.size(); ++p) {
    auto* lu = g.layer(cycle[p]);
    auto* lv = g.layer(cycle[(p + 1) % cycle.size()]);
    std::uint32_t cu = lu->column, cv = lv->column;
    std::uint32_t ru = lu->row, rv = lv->row;
    if (cu == cv) {
      std::uint32_t i = (cu == 1) ? 0 : n;
      set_image(i, ru, rv);
      set_image(i, rv, ru);
    } else if (cu + 1 == cv) {
      set_image(cu, ru, rv);
    } else {
      set_image(cv, rv, ru);
    }
  }
  PermSequence s;
  for (std::uint32_t i = 0; i <= n; ++i) {
    for (auto im : images[i])
      if (im == 0) throw Error(ErrorCode::NOT_NICE, "layer intersection is not perfect");
    s.perms.emplace_back(images[i]);
  }
  if (!is_all_two_cycles(s.perms[0]) || !is_all_two_cycles(s.perms[n]))
    throw Error(ErrorCode::NOT_NICE, "end layers are not perfect matchings");
  // membership condition at every cut position
  for (std::uint32_t i = 1; i <= n; ++i) {
    Perm left_ctx = Perm::identity(2 * k);
    for (std::uint32_t j = 1; j + 1 <= i; ++j) left_ctx = compose(s.perms[j], left_ctx);
    Perm right_ctx = Perm::identity(2 * k);
    for (std::uint32_t j = i; j + 1 <= n; ++j) right_ctx = compose(s.perms[j], right_ctx);
    Perm left = compose(left_ctx, compose(s.perms[0], left_ctx.inverse()));
    Perm right = compose(right_ctx.inverse(), compose(s.perms[n], right_ctx));
    if (!is_two_k_cycles(compose(left, right)))
      throw Error(ErrorCode::NOT_NICE, "closure condition fails at cut " + std::to_string(i));
  }
  return s;
}

VertexCycle sample_nice_cycle(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  if (n < 2 || k < 1) throw Error(ErrorCode::INVALID_PARAMS, "sample_nice_cycle needs n >= 2, k >= 1");
  Rng rng(seed);
  auto hid = [&](std::uint32_t c, std::uint32_t r) { return (c - 1) * 2 * k + (r - 1); };
  std::uint32_t total = 2 * n * k;
  std::vector<std::uint32_t> next(total, total);
  std::vector<std::uint32_t> indeg(total, 0);
  auto add = [&](std::uint32_t u, std::uint32_t v) {
    next[u] = v;
    ++indeg[v];
  };
  // uniform perfect matching of the first column, fair independent orientations
  std::vector<std::uint32_t> rows(2 * k);
  for (std::uint32_t r = 0; r < 2 * k; ++r) rows[r] = r + 1;
  std::vector<bool> is_tail(2 * k + 1, false);  // row has its intra edge outgoing
  while (!rows.empty()) {
    std::uint32_t a = rows.front();
    rows.erase(rows.begin());
    std::size_t j = static_cast<std::size_t>(rng.below(rows.size()));
    std::uint32_t b = rows[j];
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(j));
    if (rng.next() & 1) std::swap(a, b);
    add(hid(1, a), hid(1, b));
    is_tail[a] = true;
  }
  // middle layers: uniform matchings, orientations propagated
  for (std::uint32_t i = 1; i + 1 <= n; ++i) {
    std::vector<std::uint32_t> im(2 * k);
    for (std::uint32_t r = 0; r < 2 * k; ++r) im[r] = r + 1;
    for (std::uint32_t r = 2 * k; r > 1; --r)
      std::swap(im[r - 1], im[rng.below(r)]);
    std::vector<bool> next_tail(2 * k + 1, false);
    for (std::uint32_t r1 = 1; r1 <= 2 * k; ++r1) {
      std::uint32_t r2 = im[r1 - 1];
      if (is_tail[r1]) {
        add(hid(i + 1, r2), hid(i, r1));
        next_tail[r2] = true;
      } else {
        add(hid(i, r1), hid(i + 1, r2));
      }
    }
    is_tail = next_tail;
  }
  // close the k paths inside column n with a uniform cyclic order
  std::vector<std::uint32_t> sources;
  for (std::uint32_t r = 1; r <= 2 * k; ++r)
    if (is_tail[r]) sources.push_back(r);  // still needs an incoming edge
  std::vector<std::uint32_t> path_sink(sources.size());
  for (std::size_t p = 0; p < sources.size(); ++p) {
    std::uint32_t u = hid(n, sources[p]);
    while (next[u] != total) u = next[u];
    path_sink[p] = u;
  }
  std::vector<std::uint32_t> order(sources.size());
  for (std::uint32_t p = 0; p < order.size(); ++p) order[p] = p;
  for (std::uint32_t p = static_cast<std::uint32_t>(order.size()); p > 2; --p)
    std::swap(order[p - 1], order[1 + rng.below(p - 1)]);  // first path stays fixed
  for (std::size_t j = 0; j < order.size(); ++j)
    add(path_sink[order[j]], hid(n, sources[order[(j + 1) % order.size()]]));
  VertexCycle cycle;
  std::uint32_t u = 0;
  for (std::uint32_t step = 0; step < total; ++step) {
    cycle.push_back(u);
    u = next[u];
  }
  return cycle;
}

std::uint64_t count_formulas(CountFamily family, std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k < 1) throw Error(ErrorCode::INVALID_PARAMS, "count_formulas needs n >= 2, k >= 1");
  if (k > 10) throw Error(ErrorCode::OVERFLOW_DETECTED, "factorial range");
  auto powmul = [](std::int64_t base, std::uint32_t e, std::int64_t acc) {
    for (std::uint32_t i = 0; i < e; ++i) acc = checked_mul(acc, base);
    return acc;
  };
  std::int64_t r;
  switch (family) {
    case CountFamily::DTSP_CYCLES:
      r = powmul(static_cast<std::int64_t>(factorial(k)), n - 1,
                 static_cast<std::int64_t>(factorial(k - 1)));
      break;
    case CountFamily::DST_SEQUENCES:
      r = powmul(static_cast<std::int64_t>(factorial(2 * k)), n - 1,
                 static_cast<std::int64_t>(factorial(2 * k - 1)));
      break;
    case CountFamily::DST_NICE_CYCLES:
      r = checked_mul(2, static_cast<std::int64_t>(count_formulas(CountFamily::DST_SEQUENCES, n, k)));
      break;
    default:
      throw Error(ErrorCode::INVALID_PARAMS, "unknown family");
  }
  return static_cast<std::uint64_t>(r);
}

std::string vertex_var_name(const GraphInstance& g, std::uint32_t v) { return g.label(v); }

std::string edge_var_name(const GraphInstance& g, std::uint32_t u, std::uint32_t v) {
  if (!g.has_edge(u, v)) throw Error(ErrorCode::BAD_INPUT, "not an edge");
  if (g.directed()) return "x[" + g.label(u) + "->" + g.label(v) + "]";
  if (u > v) std::swap(u, v);
  return "x[" + g.label(u) + "--" + g.label(v) + "]";
}

VarUniverse vertex_universe(const GraphInstance& g) {
  std::vector<std::string> names;
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) names.push_back(g.label(v));
  return VarUniverse(std::move(names));
}

VarUniverse edge_universe(const GraphInstance& g) {
  std::vector<std::string> names;
  for (auto [u, v] : g.edges()) names.push_back(edge_var_name(g, u, v));
  return VarUniverse(std::move(names));
}

std::string graph_to_json(const GraphInstance& g) {
  nlohmann::json j;
  j["directed"] = g.directed();
  auto& jv = j["vertices"] = nlohmann::json::array();
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) jv.push_back(g.label(v));
  auto& je = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) je.push_back({g.label(u), g.label(v)});
  auto& jl = j["layers"] = nlohmann::json::object();
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    if (auto* l = g.layer(v)) jl[g.label(v)] = {l->column, l->row, l->sublayer};
  if (!g.family.empty()) j["family"] = {{"name", g.family}, {"n", g.fam_n}, {"k", g.fam_k}};
  return j.dump();
}

GraphInstance graph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  GraphInstance g(j.at("directed").get<bool>());
  auto jl = j.value("layers", nlohmann::json::object());
  for (auto& jv : j.at("vertices")) {
    std::string label = jv.get<std::string>();
    if (jl.contains(label)) {
      auto& p = jl[label];
      g.add_vertex(label, {p.at(0).get<std::int32_t>(), p.at(1).get<std::int32_t>(),
                           p.at(2).get<std::int32_t>()});
    } else {
      g.add_vertex(label);
    }
  }
  for (auto& je : j.at("edges"))
    g.add_edge(g.id(je.at(0).get<std::string>()), g.id(je.at(1).get<std::string>()));
  if (j.contains("family")) {
    g.family = j["family"].at("name").get<std::string>();
    g.fam_n = j["family"].at("n").get<std::uint32_t>();
    g.fam_k = j["family"].at("k").get<std::uint32_t>();
  }
  return g;
}

std::string graph_to_dot(const GraphInstance& g) {
  std::ostringstream os;
  os << (g.directed() ? "digraph" : "graph") << " g {\n";
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    os << "  n" << v << " [label=\"" << g.label(v) << "\"];\n";
  const char* arrow = g.directed() ? " -> " : " -- ";
  for (auto [u, v] : g.edges()) os << "  n" << u << arrow << "n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string decomposition_to_json(const GraphInstance& g, const PathDecomposition& d) {
  nlohmann::json j;
  auto& jb = j["bags"] = nlohmann::json::array();
  for (auto& b : d.bags) {
    nlohmann::json bag = nlohmann::json::array();
    for (std::uint32_t v : b) bag.push_back(g.label(v));
    jb.push_back(bag);
  }
  return j.dump();
}

PathDecomposition decomposition_from_json(const GraphInstance& g, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  PathDecomposition d;
  for (auto& jb : j.at("bags")) {
    std::vector<std::uint32_t> bag;
    for (auto& jv : jb) bag.push_back(g.id(jv.get<std::string>()));
    d.bags.push_back(std::move(bag));
  }
  return d;
}

}  // namespace tcw
