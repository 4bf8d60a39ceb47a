// Copyright 2026 The taitpoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "taitpoly/bipoly.hpp"
#include "taitpoly/error.hpp"
#include "taitpoly/signed_map.hpp"

namespace taitpoly {

/// Unembedded, unsigned multigraph. Edge order follows the source map's
/// edge order, so "lowest edge" means lowest stable id.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Multigraph underlying(const SignedMap& g) {
  Multigraph m;
  m.n = static_cast<int>(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) m.edges.push_back(g.endpoints(i));
  return m;
}

enum class Pivot { lowest, highest };

struct TutteOptions {
  Pivot pivot = Pivot::lowest;
  bool memoize = true;
};

namespace detail {

inline BiPoly cycle_poly(int n) {
  BiPoly p = BiPoly::y();
  for (int i = 1; i < n; ++i) p += BiPoly::monomial(1, i, 0);
  return p;
}

inline BiPoly multiedge_poly(int k) {
  BiPoly p = BiPoly::x();
  for (int j = 1; j < k; ++j) p += BiPoly::monomial(1, 0, j);
  return p;
}

// Biconnected pieces of a loopless multigraph, as lists of edge indices.
inline std::vector<std::vector<int>> biconnected_pieces(const Multigraph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  struct Frame {
    int v, parent_edge;
    std::size_t next;
  };
  for (int root = 0; root < g.n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.v].size()) {
        auto [w, e] = adj[f.v][f.next++];
        if (e == f.parent_edge) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& parent = stack.back();
      low[parent.v] = std::min(low[parent.v], low[done.v]);
      if (low[done.v] >= disc[parent.v]) {
        std::vector<int> piece;
        while (true) {
          const int e = edge_stack.back();
          edge_stack.pop_back();
          piece.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(piece.begin(), piece.end());
        out.push_back(std::move(piece));
      }
    }
  }
  return out;
}

// Relabels the endpoints of `edge_ids` onto 0..m-1 in first-seen order.
inline Multigraph compact(const Multigraph& g, const std::vector<int>& edge_ids) {
  std::vector<int> relabel(g.n, -1);
  Multigraph out;
  for (int e : edge_ids) {
    auto [u, v] = g.edges[e];
    if (relabel[u] == -1) relabel[u] = out.n++;
    if (relabel[v] == -1) relabel[v] = out.n++;
    out.edges.push_back({relabel[u], relabel[v]});
  }
  return out;
}

/// Memo key determining a loopless multigraph up to isomorphism. Color
/// refinement orders the vertices; ties inside refined cells are resolved by
/// trying every within-cell permutation when that is cheap. Past the budget
/// the key is one exact encoding rather than the minimum: still a faithful
/// description of the graph, merely not shared by all its relabelings.
inline std::string canonical_key(const Multigraph& g) {
  const int n = g.n;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges) {
    ++mult[u][v];
    if (u != v) ++mult[v][u];
  }
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v)
    color[v] = std::accumulate(mult[v].begin(), mult[v].end(), 0);
  {
    // compress initial degrees to ranks
    std::vector<int> vals = color;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int& c : color) c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
  }
  for (int round = 0; round < n; ++round) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int w = 0; w < n; ++w)
        if (mult[v][w] > 0 && w != v) sig[v].second.push_back({color[w], mult[v][w]});
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::vector<Sig> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    const bool stable = static_cast<int>(uniq.size()) ==
                        1 + *std::max_element(color.begin(), color.end());
    color = std::move(next);
    if (stable) break;
  }
  std::vector<std::vector<int>> cells;
  {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    for (auto& [c, vs] : by_color) cells.push_back(std::move(vs));
  }
  long long budget = 1;
  for (const auto& cell : cells) {
    for (std::size_t k = 2; k <= cell.size() && budget <= 5040; ++k) budget *= static_cast<long long>(k);
  }
  auto encode = [&](const std::vector<int>& order) {
    std::string s;
    s.reserve(2 + n * (n - 1) / 2);
    s.push_back(static_cast<char>(n));
    s.push_back('|');
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s.push_back(static_cast<char>(mult[order[i]][order[j]]));
    return s;
  };
  if (budget > 5040) {
    std::vector<int> order;
    for (const auto& cell : cells) order.insert(order.end(), cell.begin(), cell.end());
    return encode(order);
  }
  std::string best;
  bool have = false;
  std::vector<std::vector<int>> perm = cells;
  std::vector<int> order;
  auto recurse = [&](auto& self, std::size_t ci) -> void {
    if (ci == perm.size()) {
      order.clear();
      for (const auto& cell : perm) order.insert(order.end(), cell.begin(), cell.end());
      std::string s = encode(order);
      if (!have || s < best) {
        best = std::move(s);
        have = true;
      }
      return;
    }
    std::sort(perm[ci].begin(), perm[ci].end());
    do {
      self(self, ci + 1);
    } while (std::next_permutation(perm[ci].begin(), perm[ci].end()));
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace detail

/// Deletion-contraction with block factorization and a per-engine memo.
///
/// Loops are stripped as y factors and the loopless remainder is split into
/// blocks; bridges give x, k-fold multiedges and cycles have closed forms.
/// Remaining blocks pivot on their lowest (or highest) edge.
class TutteEngine {
 public:
  explicit TutteEngine(TutteOptions options = {}) : options_(options) {}

  BiPoly operator()(const Multigraph& g) { return compute(g); }
  BiPoly operator()(const SignedMap& g) { return compute(underlying(g)); }

  std::size_t cache_size() const { return memo_.size(); }
  std::size_t cache_hits() const { return hits_; }

 private:
  BiPoly compute(const Multigraph& g) {
    unsigned loops = 0;
    Multigraph rest;
    rest.n = g.n;
    for (auto e : g.edges) {
      if (e.first == e.second) ++loops; else rest.edges.push_back(e);
    }
    BiPoly result = BiPoly::monomial(1, 0, loops);
    for (const auto& piece : detail::biconnected_pieces(rest))
      result *= block(detail::compact(rest, piece));
    return result;
  }

  // g is a single bridge or a loopless 2-connected multigraph.
  BiPoly block(const Multigraph& g) {
    const int m = static_cast<int>(g.edges.size());
    if (m == 1) return BiPoly::x();
    if (g.n == 2) return detail::multiedge_poly(m);
    if (m == g.n) return detail::cycle_poly(g.n);
    std::string key;
    if (options_.memoize) {
      key = detail::canonical_key(g);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++hits_;
        return it->second;
      }
    }
    const int pivot = options_.pivot == Pivot::lowest ? 0 : m - 1;
    BiPoly r = compute(without(g, pivot)) + compute(contracted(g, pivot));
    if (options_.memoize) memo_.emplace(std::move(key), r);
    return r;
  }

  static Multigraph without(const Multigraph& g, int e) {
    Multigraph out = g;
    out.edges.erase(out.edges.begin() + e);
    return out;
  }

  // Merges the pivot's second endpoint into its first; the last vertex takes
  // the freed label.
  static Multigraph contracted(const Multigraph& g, int e) {
    const auto [keep, gone] = g.edges[e];
    Multigraph out;
    out.n = g.n - 1;
    auto relabel = [&](int v) {
      if (v == gone) v = keep;
      return v == g.n - 1 ? gone : v;
    };
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
      if (i == e) continue;
      out.edges.push_back({relabel(g.edges[i].first), relabel(g.edges[i].second)});
    }
    return out;
  }

  TutteOptions options_;
  std::unordered_map<std::string, BiPoly> memo_;
  std::size_t hits_ = 0;
};

/// Tutte polynomial; signs are ignored.
inline BiPoly tutte(const SignedMap& g, TutteOptions options = {}) {
  return TutteEngine(options)(g);
}

inline BiPoly tutte(const Multigraph& g, TutteOptions options = {}) {
  return TutteEngine(options)(g);
}

namespace detail {

struct Dsu {
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

inline void require_cap(const char* what, std::size_t edges, std::size_t cap) {
  if (edges > cap) throw CapExceededError(what, edges, cap);
}

}  // namespace detail

inline constexpr std::size_t kOracleCap = 14;

/// Whitney rank-nullity expansion over all edge subsets:
/// sum (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A)).
inline BiPoly tutte_oracle(const Multigraph& g, std::size_t cap = kOracleCap) {
  const std::size_t m = g.edges.size();
  detail::require_cap("tutte_oracle", m, cap);
  auto rank = [&](std::uint32_t mask) {
    detail::Dsu dsu(g.n);
    int r = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1u) r += dsu.unite(g.edges[e].first, g.edges[e].second);
    return r;
  };
  const int full = rank(m == 0 ? 0u : static_cast<std::uint32_t>((1ull << m) - 1));
  std::map<std::pair<int, int>, Integer> counts;
  for (std::uint32_t mask = 0; mask < (1ull << m); ++mask) {
    const int r = rank(mask);
    const int size = __builtin_popcount(mask);
    counts[{full - r, size - r}] += 1;
  }
  const BiPoly xm = BiPoly::x() - BiPoly::one();
  const BiPoly ym = BiPoly::y() - BiPoly::one();
  BiPoly out;
  for (const auto& [ab, c] : counts)
    out += BiPoly::constant(c) * pow(xm, ab.first) * pow(ym, ab.second);
  return out;
}

inline BiPoly tutte_oracle(const SignedMap& g, std::size_t cap = kOracleCap) {
  return tutte_oracle(underlying(g), cap);
}

inline constexpr std::size_t kKookCap = 16;

/// Brute-force sum over H of chi(G|H)(0,t) * chi(G/H)(t,0).
inline BiPoly kook_sum(const SignedMap& g, std::size_t cap = kKookCap) {
  const std::size_t m = g.edge_count();
  detail::require_cap("kook_sum", m, cap);
  const std::vector<EdgeId> ids = g.all_edges().ids();
  TutteEngine engine;
  BiPoly sum;
  for (std::uint32_t mask = 0; mask < (1ull << m); ++mask) {
    std::vector<EdgeId> h;
    for (std::size_t e = 0; e < m; ++e)
      if (mask >> e & 1u) h.push_back(ids[e]);
    const EdgeSet hs(std::move(h));
    sum += specialize(engine(restrict_to(g, hs)), Specialization::x_to_zero) *
           specialize(engine(contract(g, hs)), Specialization::y_to_zero);
  }
  return sum;
}

/// tutte(dual) == tutte with x and y exchanged.
inline bool dual_symmetry_check(const SignedMap& g) {
  return tutte(planar_dual(g)) == tutte(g).swapped();
}

inline Integer spanning_tree_count(const SignedMap& g) {
  return eval(tutte(g), 1, 1);
}

inline constexpr std::size_t kTreeEnumerationCap = 24;

/// Direct count of maximal spanning forests (spanning trees when connected):
/// acyclic edge subsets of size n - k.
inline Integer enumerate_spanning_trees(const Multigraph& g,
                                        std::size_t cap = kTreeEnumerationCap) {
  const int m = static_cast<int>(g.edges.size());
  detail::require_cap("enumerate_spanning_trees", g.edges.size(), cap);
  detail::Dsu all(g.n);
  int target = 0;
  for (auto [u, v] : g.edges) target += all.unite(u, v);
  Integer count = 0;
  std::vector<int> chosen;
  // choose `target` edges in increasing order, pruning on the first cycle
  auto recurse = [&](auto& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == target) {
      ++count;
      return;
    }
    for (int e = start; e + (target - static_cast<int>(chosen.size())) <= m; ++e) {
      chosen.push_back(e);
      detail::Dsu dsu(g.n);
      bool acyclic = true;
      for (int c : chosen)
        if (!dsu.unite(g.edges[c].first, g.edges[c].second)) {
          acyclic = false;
          break;
        }
      if (acyclic) self(self, e + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  return count;
}

inline Integer enumerate_spanning_trees(const SignedMap& g,
                                        std::size_t cap = kTreeEnumerationCap) {
  return enumerate_spanning_trees(underlying(g), cap);
}

}  // namespace taitpoly
