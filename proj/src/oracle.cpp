#include "tcw/oracle.hpp"

#include <algorithm>
#include <functional>

namespace tcw {

namespace {

std::vector<std::int64_t> vertex_weights(const GraphInstance& g, const Valuation& w) {
  auto u = vertex_universe(g);
  if (w.size() != u.size()) throw Error(ErrorCode::MISSING_VARIABLE, "vertex weights");
  std::vector<std::int64_t> out(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) out[v] = w[u.id(g.label(v))];
  return out;
}

std::vector<std::vector<std::int64_t>> edge_weights(const GraphInstance& g, const Valuation& w) {
  auto u = edge_universe(g);
  if (w.size() != u.size()) throw Error(ErrorCode::MISSING_VARIABLE, "edge weights");
  std::vector<std::vector<std::int64_t>> out(g.num_vertices(),
                                             std::vector<std::int64_t>(g.num_vertices(), 0));
  for (auto [a, b] : g.edges()) {
    std::int64_t x = w[u.id(edge_var_name(g, a, b))];
    out[a][b] = x;
    if (!g.directed()) out[b][a] = x;
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_is(const GraphInstance& g) {
  std::uint32_t n = g.num_vertices();
  if (n > 24) throw Error(ErrorCode::SCALE_EXCEEDED, "enumerate_is limited to 24 vertices");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t v) {
    if (v == n) {
      out.push_back(cur);
      return;
    }
    rec(v + 1);
    bool free = true;
    for (std::uint32_t x : cur)
      if (g.has_edge(x, v) || g.has_edge(v, x)) {
        free = false;
        break;
      }
    if (free) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

OracleResult brute_is(const GraphInstance& g, const Valuation& weights) {
  auto w = vertex_weights(g, weights);
  OracleResult res;
  res.optimum = 0;  // empty set
  std::vector<std::uint32_t> cur;
  std::int64_t sum = 0;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t v) {
    if (v == g.num_vertices()) {
      ++res.count;
      if (res.count == 1 || sum > res.optimum) {
        res.optimum = sum;
        res.witness = cur;
      }
      return;
    }
    rec(v + 1);
    for (std::uint32_t x : cur)
      if (g.has_edge(x, v) || g.has_edge(v, x)) return;
    cur.push_back(v);
    sum = checked_add(sum, w[v]);
    rec(v + 1);
    sum -= w[v];
    cur.pop_back();
  };
  if (g.num_vertices() > 24) throw Error(ErrorCode::SCALE_EXCEEDED, "brute_is limited to 24 vertices");
  rec(0);
  return res;
}

std::vector<VertexCycle> enumerate_ham_cycles(const GraphInstance& g) {
  std::uint32_t n = g.num_vertices();
  if (n > 18) throw Error(ErrorCode::SCALE_EXCEEDED, "hamiltonian enumeration limited to 18 vertices");
  std::vector<VertexCycle> out;
  if (n < 2 || (n == 2 && !g.directed())) return out;
  std::vector<bool> used(n, false);
  VertexCycle path{0};
  used[0] = true;
  std::function<void()> rec = [&]() {
    if (path.size() == n) {
      if (g.has_edge(path.back(), 0)) {
        if (!g.directed() && path[1] > path.back()) return;  // one direction only
        out.push_back(path);
      }
      return;
    }
    for (std::uint32_t v : g.out_neighbors(path.back())) {
      if (used[v]) continue;
      used[v] = true;
      path.push_back(v);
      rec();
      path.pop_back();
      used[v] = false;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

OracleResult brute_tsp(const GraphInstance& g, const Valuation& weights) {
  auto w = edge_weights(g, weights);
  auto cycles = enumerate_ham_cycles(g);
  if (cycles.empty()) throw Error(ErrorCode::NO_HAMILTONIAN_CYCLE, "brute_tsp");
  OracleResult res;
  res.count = cycles.size();
  bool first = true;
  for (auto& c : cycles) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      sum = checked_add(sum, w[c[i]][c[(i + 1) % c.size()]]);
    if (first || sum < res.optimum) {
      res.optimum = sum;
      res.witness = c;
      first = false;
    }
  }
  return res;
}

std::vector<std::vector<std::uint32_t>> enumerate_arborescences(const GraphInstance& g) {
  std::uint32_t n = g.num_vertices();
  if (n > 9) throw Error(ErrorCode::SCALE_EXCEEDED, "arborescence enumeration limited to 9 vertices");
  if (!g.directed()) throw Error(ErrorCode::BAD_INPUT, "arborescences need a directed graph");
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> parent(n, 0);
  for (std::uint32_t root = 0; root < n; ++root) {
    parent[root] = root;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t v) {
      if (v == n) {
        // every vertex must reach the root through parents, acyclically
        for (std::uint32_t u = 0; u < n; ++u) {
          std::uint32_t x = u, steps = 0;
          while (x != root) {
            x = parent[x];
            if (++steps > n) return;
          }
        }
        out.push_back(parent);
        return;
      }
      if (v == root) {
        rec(v + 1);
        return;
      }
      for (std::uint32_t p : g.in_neighbors(v)) {
        parent[v] = p;
        rec(v + 1);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

OracleResult brute_dst(const GraphInstance& g, const Valuation& weights) {
  auto w = edge_weights(g, weights);
  auto trees = enumerate_arborescences(g);
  if (trees.empty()) throw Error(ErrorCode::NOT_CONNECTED, "no spanning out-tree");
  OracleResult res;
  res.count = trees.size();
  bool first = true;
  for (auto& t : trees) {
    std::int64_t sum = 0;
    for (std::uint32_t v = 0; v < t.size(); ++v)
      if (t[v] != v) sum = checked_add(sum, w[t[v]][v]);
    if (first || sum < res.optimum) {
      res.optimum = sum;
      res.witness = t;
      first = false;
    }
  }
  return res;
}

std::uint64_t count_arborescences_matrix_tree(const GraphInstance& g, std::uint32_t root) {
  std::uint32_t n = g.num_vertices();
  if (n > 7) throw Error(ErrorCode::SCALE_EXCEEDED, "matrix-tree count limited to 7 vertices");
  if (!g.directed()) throw Error(ErrorCode::BAD_INPUT, "matrix-tree count needs a directed graph");
  if (root >= n) throw Error(ErrorCode::INDEX_OUT_OF_RANGE, "root");
  if (n == 1) return 1;
  // in-degree Laplacian minor with the root's row/column removed
  std::vector<std::vector<std::int64_t>> m(n - 1, std::vector<std::int64_t>(n - 1, 0));
  auto idx = [&](std::uint32_t v) { return v < root ? v : v - 1; };
  for (std::uint32_t v = 0; v < n; ++v) {
    if (v == root) continue;
    m[idx(v)][idx(v)] = static_cast<std::int64_t>(g.in_neighbors(v).size());
  }
  for (auto [u, v] : g.edges()) {
    if (u == root || v == root) continue;
    m[idx(u)][idx(v)] -= 1;
  }
  // fraction-free (Bareiss) determinant over exact integers
  std::uint32_t d = n - 1;
  std::int64_t prev = 1, sign = 1;
  for (std::uint32_t k = 0; k < d; ++k) {
    if (m[k][k] == 0) {
      std::uint32_t swap_row = k + 1;
      while (swap_row < d && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == d) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::uint32_t i = k + 1; i < d; ++i)
      for (std::uint32_t j = k + 1; j < d; ++j) {
        auto num = checked_add(checked_mul(m[i][j], m[k][k]), -checked_mul(m[i][k], m[k][j]));
        m[i][j] = num / prev;  // exact by Bareiss
      }
    prev = m[k][k];
  }
  std::int64_t det = sign * m[d - 1][d - 1];
  if (det < 0) throw Error(ErrorCode::BAD_INPUT, "negative tree count");
  return static_cast<std::uint64_t>(det);
}

std::vector<VertexCycle> enumerate_nice_cycles(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k < 1) throw Error(ErrorCode::INVALID_PARAMS, "enumerate_nice_cycles");
  if (2 * n * k > 12) throw Error(ErrorCode::SCALE_EXCEEDED, "nice-cycle enumeration limited to 12 vertices");
  std::uint32_t total = 2 * n * k;
  auto hid = [&](std::uint32_t c, std::uint32_t r) { return (c - 1) * 2 * k + (r - 1); };
  auto ends = enumerate_class(2 * k, ClassSpec::all_two_cycles());
  auto mids = enumerate_sym(2 * k);
  std::vector<VertexCycle> out;
  std::vector<Perm> seq(n + 1, Perm::identity(2 * k));
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t i) {
    if (i > n) {
      // union of the matchings: 2-regular undirected graph; keep it only if
      // it is a single cycle through all vertices
      std::vector<std::vector<std::uint32_t>> adj(total);
      for (std::uint32_t r = 1; r <= 2 * k; ++r) {
        if (r < seq[0].apply(r)) {
          adj[hid(1, r)].push_back(hid(1, seq[0].apply(r)));
          adj[hid(1, seq[0].apply(r))].push_back(hid(1, r));
        }
        if (r < seq[n].apply(r)) {
          adj[hid(n, r)].push_back(hid(n, seq[n].apply(r)));
          adj[hid(n, seq[n].apply(r))].push_back(hid(n, r));
        }
        for (std::uint32_t c = 1; c + 1 <= n; ++c) {
          adj[hid(c, r)].push_back(hid(c + 1, seq[c].apply(r)));
          adj[hid(c + 1, seq[c].apply(r))].push_back(hid(c, r));
        }
      }
      for (int dir = 0; dir < 2; ++dir) {
        VertexCycle cyc{0, adj[0][dir]};
        while (cyc.size() < total) {
          std::uint32_t prev = cyc[cyc.size() - 2], at = cyc.back();
          std::uint32_t next = adj[at][0] == prev ? adj[at][1] : adj[at][0];
          if (next == 0) break;
          cyc.push_back(next);
        }
        if (cyc.size() == total && (adj[cyc.back()][0] == 0 || adj[cyc.back()][1] == 0))
          out.push_back(cyc);
      }
      return;
    }
    auto& pool = (i == 0 || i == n) ? ends : mids;
    for (auto& p : pool) {
      seq[i] = p;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial oracle_is_polynomial(const GraphInstance& g) {
  auto u = vertex_universe(g);
  std::vector<Monomial> ms;
  for (auto& is : enumerate_is(g)) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t v : is) es.emplace_back(u.id(g.label(v)), 1);
    ms.emplace_back(std::move(es));
  }
  return Polynomial(std::move(ms));
}

Polynomial oracle_tsp_polynomial(const GraphInstance& g) {
  auto u = edge_universe(g);
  std::vector<Monomial> ms;
  for (auto& c : enumerate_ham_cycles(g)) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::size_t i = 0; i < c.size(); ++i)
      es.emplace_back(u.id(edge_var_name(g, c[i], c[(i + 1) % c.size()])), 1);
    ms.emplace_back(std::move(es));
  }
  return Polynomial(std::move(ms));
}

Polynomial oracle_dst_polynomial(const GraphInstance& g) {
  auto u = edge_universe(g);
  std::vector<Monomial> ms;
  for (auto& t : enumerate_arborescences(g)) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
    for (std::uint32_t v = 0; v < t.size(); ++v)
      if (t[v] != v) es.emplace_back(u.id(edge_var_name(g, t[v], v)), 1);
    ms.emplace_back(std::move(es));
  }
  return Polynomial(std::move(ms));
}

}  // namespace tcw
