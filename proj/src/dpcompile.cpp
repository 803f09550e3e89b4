#include "tcw/dpcompile.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nlohmann/json.hpp"

namespace tcw {

namespace {

// One bag of the left-to-right sweep: vertices leaving, vertices entering,
// then the edges whose first covering bag this is.
struct SweepBag {
  std::vector<std::uint32_t> forgets, intros;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

std::vector<SweepBag> make_sweep(const GraphInstance& g, const PathDecomposition& d) {
  auto rep = verify_path_decomposition(g, d);
  if (!rep.ok) throw Error(ErrorCode::DECOMPOSITION_INVALID, "decomposition does not verify");
  std::vector<SweepBag> sweep(d.bags.size() + 1);
  std::set<std::uint32_t> cur;
  for (std::size_t i = 0; i < d.bags.size(); ++i) {
    std::set<std::uint32_t> bag(d.bags[i].begin(), d.bags[i].end());
    for (auto v : cur)
      if (!bag.count(v)) sweep[i].forgets.push_back(v);
    for (auto v : bag)
      if (!cur.count(v)) sweep[i].intros.push_back(v);
    cur = bag;
  }
  // trailing pseudo-bag forgets everything left
  sweep.back().forgets.assign(cur.begin(), cur.end());
  for (auto [u, v] : g.edges()) {
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
      auto& b = d.bags[i];
      if (std::find(b.begin(), b.end(), u) != b.end() &&
          std::find(b.begin(), b.end(), v) != b.end()) {
        sweep[i].edges.emplace_back(u, v);
        break;
      }
    }
  }
  return sweep;
}

// extremum-accumulate into a keyed state table
template <typename K>
void accum(std::map<K, std::uint32_t>& states, const K& key, std::uint32_t gate,
           CircuitBuilder& b) {
  auto it = states.find(key);
  if (it == states.end())
    states.emplace(key, gate);
  else
    it->second = b.add_ext(it->second, gate);
}

}  // namespace

std::string compile_report_to_json(const CompileReport& r) {
  nlohmann::json j;
  j["gates"] = r.gates;
  j["bags"] = r.bags;
  j["states_per_bag"] = r.states_per_bag;
  return j.dump();
}

Circuit compile_is(const GraphInstance& g, const PathDecomposition& d, CompileReport* report) {
  auto sweep = make_sweep(g, d);
  VarUniverse u = vertex_universe(g);
  CircuitBuilder b(SemiringFlavor::MAX_PLUS, u);
  std::vector<std::uint32_t> input(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v)
    input[v] = b.add_input(vertex_var_name(g, v));

  using Key = std::vector<std::uint32_t>;  // chosen vertices of the current bag
  std::map<Key, std::uint32_t> states;
  states[{}] = b.add_const0();
  std::vector<std::size_t> per_bag;
  for (auto& step : sweep) {
    for (auto v : step.forgets) {
      std::map<Key, std::uint32_t> next;
      for (auto& [key, gate] : states) {
        Key k2 = key;
        k2.erase(std::remove(k2.begin(), k2.end(), v), k2.end());
        accum(next, k2, gate, b);
      }
      states = std::move(next);
    }
    for (auto v : step.intros) {
      std::map<Key, std::uint32_t> next;
      for (auto& [key, gate] : states) {
        next.emplace(key, gate);
        Key k2 = key;
        k2.insert(std::lower_bound(k2.begin(), k2.end(), v), v);
        next.emplace(std::move(k2), b.add_sum(gate, input[v]));
      }
      states = std::move(next);
    }
    for (auto [x, y] : step.edges) {
      for (auto it = states.begin(); it != states.end();) {
        bool both = std::binary_search(it->first.begin(), it->first.end(), x) &&
                    std::binary_search(it->first.begin(), it->first.end(), y);
        it = both ? states.erase(it) : std::next(it);
      }
    }
    per_bag.push_back(states.size());
  }
  std::uint32_t out = states.at({});
  if (report) {
    report->gates = b.size();
    report->bags = d.bags.size();
    report->states_per_bag = per_bag;
  }
  return b.build(out);
}

namespace {

// Open paths as endpoint pairs over current-bag vertex ids; a vertex absent
// from every pair has full degree, a (v, v) pair is an isolated vertex.
struct TourState {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> paths;  // sorted
  bool closed = false;
  auto operator<=>(const TourState& o) const = default;
};

}  // namespace

Circuit compile_tsp_pw(const GraphInstance& g, const PathDecomposition& d, bool directed,
                       CompileReport* report) {
  if (directed != g.directed()) throw Error(ErrorCode::BAD_INPUT, "direction flag mismatch");
  if (g.num_vertices() < 3) throw Error(ErrorCode::BAD_INPUT, "tours need at least 3 vertices");
  if (d.width() > 8) throw Error(ErrorCode::WIDTH_EXCEEDED, "tour sweep limited to width 8");
  auto sweep = make_sweep(g, d);
  VarUniverse u = edge_universe(g);
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  std::map<std::string, std::uint32_t> input;
  for (auto [x, y] : g.edges()) {
    auto n = edge_var_name(g, x, y);
    if (!input.count(n)) input[n] = b.add_input(n);
  }

  std::map<TourState, std::uint32_t> states;
  states[{}] = b.add_const0();
  std::vector<std::size_t> per_bag;
  for (auto& step : sweep) {
    for (auto v : step.forgets) {
      std::map<TourState, std::uint32_t> next;
      for (auto& [s, gate] : states) {
        bool endpoint = false;
        for (auto& [a, bb] : s.paths) endpoint |= a == v || bb == v;
        if (!endpoint) accum(next, s, gate, b);
      }
      states = std::move(next);
    }
    for (auto v : step.intros) {
      std::map<TourState, std::uint32_t> next;
      for (auto& [s, gate] : states) {
        if (s.closed) continue;  // nothing can attach the newcomer anymore
        TourState s2 = s;
        s2.paths.emplace_back(v, v);
        std::sort(s2.paths.begin(), s2.paths.end());
        next.emplace(std::move(s2), gate);
      }
      states = std::move(next);
    }
    for (auto [x, y] : step.edges) {
      std::map<TourState, std::uint32_t> next = states;  // skip branch
      for (auto& [s, gate] : states) {
        if (s.closed) continue;
        // directed: x must end a path, y must start one; undirected path
        // pairs are unordered so check both slots
        int pe = -1, ps = -1;
        for (std::size_t i = 0; i < s.paths.size(); ++i) {
          auto [a, bb] = s.paths[i];
          if (directed) {
            if (bb == x) pe = static_cast<int>(i);
            if (a == y) ps = static_cast<int>(i);
          } else {
            if (a == x || bb == x) pe = static_cast<int>(i);
            if (a == y || bb == y) ps = static_cast<int>(i);
          }
        }
        if (pe < 0 || ps < 0) continue;
        if (pe == ps) {
          auto [a, bb] = s.paths[pe];
          if (a == bb) continue;           // would need a self-loop
          if (s.paths.size() != 1) continue;  // stranded paths can never finish
          TourState s2;
          s2.closed = true;
          accum(next, s2, b.add_sum(gate, input.at(edge_var_name(g, x, y))), b);
        } else {
          auto other = [&](std::size_t i, std::uint32_t used) {
            auto [a, bb] = s.paths[i];
            return a == used ? bb : a;
          };
          std::uint32_t na, nb;
          if (directed) {
            na = s.paths[pe].first;    // new start
            nb = s.paths[ps].second;   // new end
          } else {
            na = other(pe, x);
            nb = other(ps, y);
            if (na > nb) std::swap(na, nb);
          }
          TourState s2;
          for (std::size_t i = 0; i < s.paths.size(); ++i)
            if (static_cast<int>(i) != pe && static_cast<int>(i) != ps)
              s2.paths.push_back(s.paths[i]);
          s2.paths.emplace_back(na, nb);
          std::sort(s2.paths.begin(), s2.paths.end());
          accum(next, s2, b.add_sum(gate, input.at(edge_var_name(g, x, y))), b);
        }
      }
      states = std::move(next);
    }
    per_bag.push_back(states.size());
  }
  TourState accept;
  accept.closed = true;
  auto it = states.find(accept);
  if (it == states.end())
    throw Error(ErrorCode::NO_HAMILTONIAN_CYCLE, "graph admits no Hamiltonian cycle");
  if (report) {
    report->gates = b.size();
    report->bags = d.bags.size();
    report->states_per_bag = per_bag;
  }
  return b.build(it->second);
}

namespace {

// Partial out-forest over the current bag: block partition, per-vertex
// parent-assigned flag, per-block "root already forgotten" flag, and a
// completed flag once the single finished tree has left the bag entirely.
struct DstState {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> vp;  // (vertex, block*2+parented), sorted
  std::vector<bool> rooted;                                 // by block id
  bool completed = false;

  void canonicalize() {
    std::sort(vp.begin(), vp.end());
    std::vector<std::int32_t> relabel(rooted.size(), -1);
    std::uint32_t next = 0;
    for (auto& [v, code] : vp) {
      std::uint32_t blk = code / 2;
      if (relabel[blk] < 0) relabel[blk] = static_cast<std::int32_t>(next++);
      code = static_cast<std::uint32_t>(relabel[blk]) * 2 + code % 2;
    }
    std::vector<bool> nr(next, false);
    for (std::uint32_t blk = 0; blk < rooted.size(); ++blk)
      if (relabel[blk] >= 0) nr[relabel[blk]] = rooted[blk];
    rooted = std::move(nr);
    std::sort(vp.begin(), vp.end());
  }
  auto operator<=>(const DstState& o) const = default;
};

}  // namespace

Circuit compile_dst_pw(const GraphInstance& g, const PathDecomposition& d,
                       CompileReport* report) {
  if (!g.directed()) throw Error(ErrorCode::BAD_INPUT, "out-trees need a digraph");
  if (d.width() > 7) throw Error(ErrorCode::WIDTH_EXCEEDED, "out-tree sweep limited to width 7");
  auto sweep = make_sweep(g, d);
  VarUniverse u = edge_universe(g);
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  std::map<std::string, std::uint32_t> input;
  for (auto [x, y] : g.edges()) {
    auto n = edge_var_name(g, x, y);
    if (!input.count(n)) input[n] = b.add_input(n);
  }

  std::map<DstState, std::uint32_t> states;
  states[{}] = b.add_const0();
  std::vector<std::size_t> per_bag;
  for (auto& step : sweep) {
    for (auto v : step.forgets) {
      std::map<DstState, std::uint32_t> next;
      for (auto& [s, gate] : states) {
        DstState s2 = s;
        std::uint32_t blk = 0;
        bool parented = false;
        for (auto it = s2.vp.begin(); it != s2.vp.end(); ++it)
          if (it->first == v) {
            blk = it->second / 2;
            parented = it->second % 2;
            s2.vp.erase(it);
            break;
          }
        if (!parented) {
          // v leaves as the root of the whole tree; only one such block ever
          bool seen = false;
          for (bool r : s2.rooted) seen |= r;
          if (seen) continue;
          s2.rooted[blk] = true;
        }
        bool block_alive = false;
        for (auto& [w, code] : s2.vp) block_alive |= code / 2 == blk;
        if (!block_alive) {
          if (!s2.rooted[blk]) continue;  // lost its root for good
          if (!s2.vp.empty()) continue;   // finished tree cut off from the rest
          s2.rooted.clear();
          s2.completed = true;
        }
        s2.canonicalize();
        accum(next, s2, gate, b);
      }
      states = std::move(next);
    }
    for (auto v : step.intros) {
      std::map<DstState, std::uint32_t> next;
      for (auto& [s, gate] : states) {
        if (s.completed) continue;
        DstState s2 = s;
        std::uint32_t blk = static_cast<std::uint32_t>(s2.rooted.size());
        s2.rooted.push_back(false);
        s2.vp.emplace_back(v, blk * 2 + 0);
        s2.canonicalize();
        accum(next, s2, gate, b);
      }
      states = std::move(next);
    }
    for (auto [x, y] : step.edges) {
      std::map<DstState, std::uint32_t> next = states;  // skip branch
      for (auto& [s, gate] : states) {
        if (s.completed) continue;
        std::uint32_t bx = 0, by = 0, code_y = 0;
        bool fx = false, fy = false;
        for (auto& [w, code] : s.vp) {
          if (w == x) {
            bx = code / 2;
            fx = true;
          }
          if (w == y) {
            by = code / 2;
            code_y = code;
            fy = true;
          }
        }
        if (!fx || !fy || bx == by || code_y % 2 == 1) continue;
        DstState s2 = s;
        for (auto& [w, code] : s2.vp) {
          if (w == y) code = bx * 2 + 1;
          else if (code / 2 == by) code = bx * 2 + code % 2;
        }
        // the merged block keeps x's root status; y's block just lost its root
        s2.canonicalize();
        accum(next, s2, b.add_sum(gate, input.at(edge_var_name(g, x, y))), b);
      }
      states = std::move(next);
    }
    per_bag.push_back(states.size());
  }
  DstState accept;
  accept.completed = true;
  auto it = states.find(accept);
  if (it == states.end())
    throw Error(ErrorCode::NOT_CONNECTED, "graph admits no spanning out-tree");
  if (report) {
    report->gates = b.size();
    report->bags = d.bags.size();
    report->states_per_bag = per_bag;
  }
  return b.build(it->second);
}

namespace {

std::string hk_var(std::uint32_t i, std::uint32_t j) {
  return "x[u" + std::to_string(i) + "->u" + std::to_string(j) + "]";
}

}  // namespace

Circuit compile_held_karp(std::uint32_t N) {
  if (N < 3 || N > 14) throw Error(ErrorCode::SCALE_EXCEEDED, "subset DP limited to 3 <= N <= 14");
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= N; ++i)
    for (std::uint32_t j = 1; j <= N; ++j)
      if (i != j) names.push_back(hk_var(i, j));
  VarUniverse u(names);
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  std::vector<std::vector<std::uint32_t>> x(N + 1, std::vector<std::uint32_t>(N + 1, 0));
  for (std::uint32_t i = 1; i <= N; ++i)
    for (std::uint32_t j = 1; j <= N; ++j)
      if (i != j) x[i][j] = b.add_input(hk_var(i, j));
  // D[mask][v]: cheapest path u1 -> v through exactly {u_{i+2} : bit i of mask}
  std::uint32_t bits = N - 1;
  std::vector<std::vector<std::uint32_t>> D(1u << bits,
                                            std::vector<std::uint32_t>(N + 1, UINT32_MAX));
  for (std::uint32_t mask = 1; mask < (1u << bits); ++mask)
    for (std::uint32_t i = 0; i < bits; ++i) {
      if (!(mask & (1u << i))) continue;
      std::uint32_t v = i + 2;
      std::uint32_t rest = mask & ~(1u << i);
      if (rest == 0) {
        D[mask][v] = x[1][v];
        continue;
      }
      std::uint32_t acc = UINT32_MAX;
      for (std::uint32_t j = 0; j < bits; ++j) {
        if (!(rest & (1u << j))) continue;
        std::uint32_t w = j + 2;
        std::uint32_t cand = b.add_sum(D[rest][w], x[w][v]);
        acc = acc == UINT32_MAX ? cand : b.add_ext(acc, cand);
      }
      D[mask][v] = acc;
    }
  std::uint32_t full = (1u << bits) - 1;
  std::uint32_t out = UINT32_MAX;
  for (std::uint32_t v = 2; v <= N; ++v) {
    std::uint32_t cand = b.add_sum(D[full][v], x[v][1]);
    out = out == UINT32_MAX ? cand : b.add_ext(out, cand);
  }
  return b.build(out);
}

Circuit compile_floyd_warshall(std::uint32_t N, std::uint32_t source, std::uint32_t target) {
  if (N < 2 || N > 30) throw Error(ErrorCode::SCALE_EXCEEDED, "relaxation limited to 2 <= N <= 30");
  if (source == target || source < 1 || target < 1 || source > N || target > N)
    throw Error(ErrorCode::BAD_INPUT, "source/target must be distinct vertices in [1, N]");
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= N; ++i)
    for (std::uint32_t j = 1; j <= N; ++j)
      if (i != j) names.push_back(hk_var(i, j));
  VarUniverse u(names);
  CircuitBuilder b(SemiringFlavor::MIN_PLUS, u);
  std::vector<std::vector<std::uint32_t>> dist(N + 1, std::vector<std::uint32_t>(N + 1, 0));
  for (std::uint32_t i = 1; i <= N; ++i)
    for (std::uint32_t j = 1; j <= N; ++j)
      if (i != j) dist[i][j] = b.add_input(hk_var(i, j));
  for (std::uint32_t m = 1; m <= N; ++m)
    for (std::uint32_t i = 1; i <= N; ++i)
      for (std::uint32_t j = 1; j <= N; ++j) {
        if (i == j || i == m || j == m) continue;
        dist[i][j] = b.add_ext(dist[i][j], b.add_sum(dist[i][m], dist[m][j]));
      }
  return b.build(dist[source][target]);
}

}  // namespace tcw
