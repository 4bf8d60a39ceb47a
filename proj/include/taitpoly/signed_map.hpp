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
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "taitpoly/error.hpp"

namespace taitpoly {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// Stable edge identity. Survives restriction, deletion and contraction, so a
/// crossing keeps its edge through any amount of graph surgery.
using EdgeId = int;

/// Half-edge handle local to one SignedMap: edge index * 2 + side.
using Dart = int;

/// A set of stable edge ids, kept sorted.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<EdgeId> ids) : ids_(ids) { normalize(); }
  explicit EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    normalize();
  }

  bool contains(EdgeId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }
  void insert(EdgeId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) ids_.insert(it, id);
  }
  void erase(EdgeId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it != ids_.end() && *it == id) ids_.erase(it);
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  EdgeSet minus(const EdgeSet& o) const {
    std::vector<EdgeId> out;
    std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                        std::back_inserter(out));
    return EdgeSet(std::move(out));
  }
  EdgeSet united(const EdgeSet& o) const {
    std::vector<EdgeId> out;
    std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                   std::back_inserter(out));
    return EdgeSet(std::move(out));
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<EdgeId> ids_;
};

struct MapEdge {
  EdgeId id = 0;
  Sign sign = Sign::plus;
  std::string label;
};

/// One face of an embedded map: the cyclic dart sequence d, next(d), ...
/// where next(d) = rot_next(twin(d)). An isolated vertex has an empty walk
/// and contributes one face of its own.
struct Face {
  std::vector<Dart> darts;
  int isolated_vertex = -1;
};

struct FaceTrace {
  std::vector<Face> faces;
  std::vector<int> face_of_dart;
  std::optional<int> outer;
};

struct ComponentInfo {
  int count = 0;
  std::vector<int> component_of_vertex;
};

struct EdgeClasses {
  EdgeSet bridges;
  EdgeSet loops;
};

/// Signed planar multigraph carried as a combinatorial map.
///
/// Every vertex holds the counterclockwise cyclic order of its darts; edge
/// `i` owns darts 2i and 2i+1. Edges are stored in increasing id order. An
/// optional outer dart marks the unbounded face (the face whose walk
/// contains that dart).
class SignedMap {
 public:
  SignedMap() = default;

  SignedMap(std::vector<std::vector<Dart>> rotations, std::vector<MapEdge> edges,
            std::optional<Dart> outer = std::nullopt)
      : rotations_(std::move(rotations)), edges_(std::move(edges)),
        outer_(outer) {
    index();
  }

  static constexpr Dart twin(Dart d) { return d ^ 1; }
  static constexpr int edge_index_of(Dart d) { return d >> 1; }

  std::size_t vertex_count() const { return rotations_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
  const std::vector<MapEdge>& edges() const { return edges_; }
  const MapEdge& edge(std::size_t index) const { return edges_[index]; }
  std::optional<Dart> outer_dart() const { return outer_; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  Dart rot_next(Dart d) const {
    const auto& r = rotations_[vertex_of_[d]];
    return r[(position_[d] + 1) % r.size()];
  }
  Dart rot_prev(Dart d) const {
    const auto& r = rotations_[vertex_of_[d]];
    return r[(position_[d] + r.size() - 1) % r.size()];
  }
  /// Successor of d along its face walk.
  Dart face_next(Dart d) const { return rot_next(twin(d)); }

  std::pair<int, int> endpoints(std::size_t index) const {
    return {vertex_of_[2 * index], vertex_of_[2 * index + 1]};
  }
  bool is_loop(std::size_t index) const {
    auto [u, v] = endpoints(index);
    return u == v;
  }

  std::optional<std::size_t> index_of(EdgeId id) const {
    auto it = std::lower_bound(
        edges_.begin(), edges_.end(), id,
        [](const MapEdge& e, EdgeId v) { return e.id < v; });
    if (it == edges_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }
  bool has_edge(EdgeId id) const { return index_of(id).has_value(); }
  const MapEdge& edge_by_id(EdgeId id) const {
    auto idx = index_of(id);
    if (!idx) throw UnknownEdgeError("unknown edge id " + std::to_string(id));
    return edges_[*idx];
  }

  EdgeSet all_edges() const {
    std::vector<EdgeId> ids;
    for (const auto& e : edges_) ids.push_back(e.id);
    return EdgeSet(std::move(ids));
  }
  EdgeSet edges_with_sign(Sign s) const {
    std::vector<EdgeId> ids;
    for (const auto& e : edges_)
      if (e.sign == s) ids.push_back(e.id);
    return EdgeSet(std::move(ids));
  }

  /// Same embedding with every edge sign reversed.
  SignedMap with_signs_flipped() const {
    SignedMap out = *this;
    for (auto& e : out.edges_) e.sign = flip(e.sign);
    return out;
  }

  SignedMap with_outer_dart(std::optional<Dart> outer) const {
    SignedMap out = *this;
    if (outer && (*outer < 0 || *outer >= static_cast<Dart>(2 * edges_.size())))
      throw InputError("outer dart out of range");
    out.outer_ = outer;
    return out;
  }

  /// Throws UnknownEdgeError unless every id of h is an edge of this map.
  void require_subset(const EdgeSet& h) const {
    for (EdgeId id : h)
      if (!has_edge(id))
        throw UnknownEdgeError("edge id " + std::to_string(id) +
                               " is not an edge of the map");
  }

 private:
  void index() {
    const std::size_t darts = 2 * edges_.size();
    vertex_of_.assign(darts, -1);
    position_.assign(darts, -1);
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
      for (std::size_t p = 0; p < rotations_[v].size(); ++p) {
        const Dart d = rotations_[v][p];
        if (d < 0 || static_cast<std::size_t>(d) >= darts)
          throw InputError("dart " + std::to_string(d) + " out of range");
        if (vertex_of_[d] != -1)
          throw InputError("dart " + std::to_string(d) +
                           " appears in more than one rotation");
        vertex_of_[d] = static_cast<int>(v);
        position_[d] = static_cast<int>(p);
      }
    }
    for (std::size_t d = 0; d < darts; ++d)
      if (vertex_of_[d] == -1)
        throw InputError("dart " + std::to_string(d) +
                         " appears in no vertex rotation");
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i - 1].id >= edges_[i].id)
        throw InputError("edge ids must be strictly increasing");
    if (outer_ && (*outer_ < 0 || static_cast<std::size_t>(*outer_) >= darts))
      throw InputError("outer dart out of range");
  }

  std::vector<std::vector<Dart>> rotations_;
  std::vector<MapEdge> edges_;
  std::optional<Dart> outer_;
  std::vector<int> vertex_of_;
  std::vector<int> position_;
};

namespace detail {

/// Mutable working copy used for deletion and contraction. Darts keep their
/// original numbering until `finish` compacts the map.
class MapEditor {
 public:
  explicit MapEditor(const SignedMap& g)
      : rotations_(g.rotations()), edges_(g.edges()), outer_(g.outer_dart()),
        alive_edge_(g.edge_count(), true), alive_vertex_(g.vertex_count(), true),
        vertex_of_(2 * g.edge_count()) {
    for (std::size_t v = 0; v < rotations_.size(); ++v)
      for (Dart d : rotations_[v]) vertex_of_[d] = static_cast<int>(v);
  }

  void remove_edge(std::size_t index) {
    const Dart d0 = static_cast<Dart>(2 * index), d1 = d0 + 1;
    relocate_outer(d0, d1);
    erase_dart(d0);
    erase_dart(d1);
    alive_edge_[index] = false;
  }

  void contract_edge(std::size_t index) {
    const Dart d0 = static_cast<Dart>(2 * index), d1 = d0 + 1;
    const int u = vertex_of_[d0], v = vertex_of_[d1];
    if (u == v) {
      remove_edge(index);
      return;
    }
    relocate_outer(d0, d1);
    std::vector<Dart> merged = rotation_after(u, d0);
    std::vector<Dart> from_v = rotation_after(v, d1);
    for (Dart d : from_v) vertex_of_[d] = u;
    merged.insert(merged.end(), from_v.begin(), from_v.end());
    rotations_[u] = std::move(merged);
    rotations_[v].clear();
    alive_vertex_[v] = false;
    alive_edge_[index] = false;
  }

  SignedMap finish() const {
    std::vector<int> new_edge(edges_.size(), -1);
    std::vector<MapEdge> edges;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (!alive_edge_[i]) continue;
      new_edge[i] = static_cast<int>(edges.size());
      edges.push_back(edges_[i]);
    }
    auto remap = [&](Dart d) { return 2 * new_edge[d >> 1] + (d & 1); };
    std::vector<std::vector<Dart>> rotations;
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
      if (!alive_vertex_[v]) continue;
      std::vector<Dart> r;
      r.reserve(rotations_[v].size());
      for (Dart d : rotations_[v]) r.push_back(remap(d));
      rotations.push_back(std::move(r));
    }
    std::optional<Dart> outer;
    if (outer_) outer = remap(*outer_);
    return SignedMap(std::move(rotations), std::move(edges), outer);
  }

 private:
  Dart rot_next(Dart d) const {
    const auto& r = rotations_[vertex_of_[d]];
    auto it = std::find(r.begin(), r.end(), d);
    ++it;
    return it == r.end() ? r.front() : *it;
  }

  // Darts of u's rotation strictly after `d` going around back to it.
  std::vector<Dart> rotation_after(int u, Dart d) const {
    const auto& r = rotations_[u];
    auto pos = static_cast<std::size_t>(std::find(r.begin(), r.end(), d) - r.begin());
    std::vector<Dart> out;
    for (std::size_t k = 1; k < r.size(); ++k) out.push_back(r[(pos + k) % r.size()]);
    return out;
  }

  void erase_dart(Dart d) {
    auto& r = rotations_[vertex_of_[d]];
    r.erase(std::find(r.begin(), r.end(), d));
  }

  // Moves the outer marker off darts about to disappear by following the
  // face walk; the successor darts border the same (possibly merged) face.
  // Moves the marker to another dart of its face. A face bounded by the
  // removed edge alone merges with the face across it, so that one is
  // walked next.
  void relocate_outer(Dart d0, Dart d1) {
    if (!outer_ || (*outer_ != d0 && *outer_ != d1)) return;
    for (Dart start : {*outer_, *outer_ ^ 1}) {
      Dart cur = start;
      for (std::size_t steps = 0; steps < 2 * edges_.size() + 2; ++steps) {
        cur = rot_next(cur ^ 1);
        if (cur != d0 && cur != d1) {
          outer_ = cur;
          return;
        }
      }
    }
    outer_.reset();
  }

  std::vector<std::vector<Dart>> rotations_;
  std::vector<MapEdge> edges_;
  std::optional<Dart> outer_;
  std::vector<bool> alive_edge_;
  std::vector<bool> alive_vertex_;
  std::vector<int> vertex_of_;
};

inline std::vector<std::size_t> indices_of(const SignedMap& g, const EdgeSet& h) {
  g.require_subset(h);
  std::vector<std::size_t> out;
  for (EdgeId id : h) out.push_back(*g.index_of(id));
  return out;
}

}  // namespace detail

/// G - H: removes the edges of h, keeping every vertex.
inline SignedMap delete_edges(const SignedMap& g, const EdgeSet& h) {
  detail::MapEditor ed(g);
  for (std::size_t i : detail::indices_of(g, h)) ed.remove_edge(i);
  return ed.finish();
}

/// G|H: the spanning submap on the edges of h.
inline SignedMap restrict_to(const SignedMap& g, const EdgeSet& h) {
  g.require_subset(h);
  return delete_edges(g, g.all_edges().minus(h));
}

/// G/H: contracts the edges of h in increasing id order. Contracting a loop
/// deletes it; a non-loop contraction splices the two endpoint rotations at
/// the contracted edge so the embedding stays planar.
inline SignedMap contract(const SignedMap& g, const EdgeSet& h) {
  detail::MapEditor ed(g);
  for (std::size_t i : detail::indices_of(g, h)) ed.contract_edge(i);
  return ed.finish();
}

inline ComponentInfo components(const SignedMap& g) {
  ComponentInfo info;
  info.component_of_vertex.assign(g.vertex_count(), -1);
  std::vector<int> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (info.component_of_vertex[s] != -1) continue;
    const int c = info.count++;
    info.component_of_vertex[s] = c;
    stack.push_back(static_cast<int>(s));
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (Dart d : g.rotations()[v]) {
        const int w = g.vertex_of(SignedMap::twin(d));
        if (info.component_of_vertex[w] == -1) {
          info.component_of_vertex[w] = c;
          stack.push_back(w);
        }
      }
    }
  }
  return info;
}

inline bool is_connected(const SignedMap& g) {
  return g.vertex_count() > 0 && components(g).count == 1;
}

namespace detail {

// Iterative lowlink DFS over the loopless part of the map. Calls
// on_bridge(edge index) for every bridge and, when `blocks` is non-null,
// fills it with the edge indices of each biconnected component.
inline void lowlink_scan(const SignedMap& g, std::vector<std::size_t>* bridges,
                         std::vector<std::vector<std::size_t>>* blocks) {
  const std::size_t n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::size_t> edge_stack;
  int timer = 0;
  struct Frame {
    int v;
    int parent_edge;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{static_cast<int>(root), -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& rot = g.rotations()[f.v];
      if (f.next < rot.size()) {
        const Dart d = rot[f.next++];
        const int e = SignedMap::edge_index_of(d);
        if (g.is_loop(e) || e == f.parent_edge) continue;
        const int w = g.vertex_of(SignedMap::twin(d));
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
      if (low[done.v] > disc[parent.v] && bridges)
        bridges->push_back(done.parent_edge);
      if (low[done.v] >= disc[parent.v] && blocks) {
        std::vector<std::size_t> block;
        while (true) {
          const std::size_t e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (static_cast<int>(e) == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks->push_back(std::move(block));
      }
    }
  }
}

}  // namespace detail

inline EdgeClasses classify_edges(const SignedMap& g) {
  EdgeClasses out;
  std::vector<std::size_t> bridges;
  detail::lowlink_scan(g, &bridges, nullptr);
  for (std::size_t i : bridges) out.bridges.insert(g.edge(i).id);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.is_loop(i)) out.loops.insert(g.edge(i).id);
  return out;
}

/// Edge id -> whether some cycle contains it (true exactly for non-bridges).
inline std::map<EdgeId, bool> cycle_membership(const SignedMap& g) {
  const EdgeSet bridges = classify_edges(g).bridges;
  std::map<EdgeId, bool> out;
  for (const auto& e : g.edges()) out[e.id] = !bridges.contains(e.id);
  return out;
}

namespace detail {

// Submap induced by a list of edge indices plus a vertex list, rotations
// restricted to the kept darts.
inline SignedMap submap(const SignedMap& g, const std::vector<int>& vertices,
                        const std::vector<std::size_t>& edge_indices) {
  std::vector<int> new_edge(g.edge_count(), -1);
  std::vector<MapEdge> edges;
  std::vector<std::size_t> sorted = edge_indices;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i : sorted) {
    new_edge[i] = static_cast<int>(edges.size());
    edges.push_back(g.edge(i));
  }
  std::vector<std::vector<Dart>> rotations;
  for (int v : vertices) {
    std::vector<Dart> r;
    for (Dart d : g.rotations()[v])
      if (new_edge[d >> 1] != -1) r.push_back(2 * new_edge[d >> 1] + (d & 1));
    rotations.push_back(std::move(r));
  }
  return SignedMap(std::move(rotations), std::move(edges));
}

}  // namespace detail

/// Block decomposition: isolated vertices, loops, bridges and maximal
/// 2-connected pieces, each returned as its own map.
inline std::vector<SignedMap> blocks(const SignedMap& g) {
  std::vector<std::vector<std::size_t>> pieces;
  detail::lowlink_scan(g, nullptr, &pieces);
  std::vector<SignedMap> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.rotations()[v].empty())
      out.push_back(detail::submap(g, {static_cast<int>(v)}, {}));
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (g.is_loop(i)) out.push_back(detail::submap(g, {g.endpoints(i).first}, {i}));
  for (const auto& piece : pieces) {
    std::vector<int> verts;
    for (std::size_t i : piece) {
      auto [u, w] = g.endpoints(i);
      verts.push_back(u);
      verts.push_back(w);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.push_back(detail::submap(g, verts, piece));
  }
  return out;
}

/// Face tracing by the rule next(d) = rot_next(twin(d)).
inline FaceTrace faces(const SignedMap& g) {
  FaceTrace tr;
  const std::size_t darts = 2 * g.edge_count();
  tr.face_of_dart.assign(darts, -1);
  for (std::size_t s = 0; s < darts; ++s) {
    if (tr.face_of_dart[s] != -1) continue;
    Face f;
    Dart d = static_cast<Dart>(s);
    const int id = static_cast<int>(tr.faces.size());
    do {
      tr.face_of_dart[d] = id;
      f.darts.push_back(d);
      d = g.face_next(d);
    } while (d != static_cast<Dart>(s));
    tr.faces.push_back(std::move(f));
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!g.rotations()[v].empty()) continue;
    Face f;
    f.isolated_vertex = static_cast<int>(v);
    tr.faces.push_back(std::move(f));
  }
  if (g.outer_dart()) tr.outer = tr.face_of_dart[*g.outer_dart()];
  return tr;
}

/// v - e + f computed from face tracing; equals 2 for connected plane maps.
inline long euler_characteristic(const SignedMap& g) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
         static_cast<long>(faces(g).faces.size());
}

inline bool is_plane_embedding(const SignedMap& g) {
  return euler_characteristic(g) == 2L * components(g).count;
}

/// Planar dual: one vertex per face (rotation = face walk order), one edge
/// per edge keeping id, sign and label. Signs are not changed; a recolored
/// Tait graph is the dual with signs flipped.
inline SignedMap planar_dual(const SignedMap& g) {
  if (!is_connected(g)) throw DisconnectedError("planar_dual needs a connected map");
  FaceTrace tr = faces(g);
  std::vector<std::vector<Dart>> rotations;
  for (const Face& f : tr.faces) rotations.push_back(f.darts);
  return SignedMap(std::move(rotations), g.edges());
}

/// Vertex bijection test. With `respect_signs` the edge multiset between each
/// vertex pair must also agree per sign. Embeddings and labels are ignored.
inline bool are_isomorphic(const SignedMap& a, const SignedMap& b,
                           bool respect_signs = true) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  using Cell = std::pair<int, int>;  // (plus count, minus count)
  auto matrix = [&](const SignedMap& g) {
    std::vector<std::vector<Cell>> m(n, std::vector<Cell>(n, {0, 0}));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      auto [u, v] = g.endpoints(i);
      const bool plus = !respect_signs || g.edge(i).sign == Sign::plus;
      auto bump = [&](int x, int y) {
        if (plus) ++m[x][y].first; else ++m[x][y].second;
      };
      bump(u, v);
      if (u != v) bump(v, u);
    }
    return m;
  };
  const auto ma = matrix(a), mb = matrix(b);
  auto signature = [&](const std::vector<std::vector<Cell>>& m, std::size_t v) {
    std::vector<Cell> row = m[v];
    std::sort(row.begin(), row.end());
    row.push_back(m[v][v]);
    return row;
  };
  std::vector<std::vector<Cell>> sig_a(n), sig_b(n);
  for (std::size_t v = 0; v < n; ++v) {
    sig_a[v] = signature(ma, v);
    sig_b[v] = signature(mb, v);
  }
  {
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map_to(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) -> bool {
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      bool ok = ma[v][v] == mb[w][w];
      for (std::size_t u = 0; ok && u < v; ++u)
        ok = ma[v][u] == mb[w][map_to[u]];
      if (!ok) continue;
      map_to[v] = static_cast<int>(w);
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    map_to[v] = -1;
    return false;
  };
  return extend(0);
}

// ---------------------------------------------------------------------------
// JSON graph format:
//   {"vertices": [[half ids, ccw], ...],
//    "edges": [{"halves": [h1, h2], "sign": "+"|"-", "label": "..."}, ...],
//    "outer_face": optional half id}

inline nlohmann::json to_json(const SignedMap& g) {
  nlohmann::json j;
  j["vertices"] = g.rotations();
  nlohmann::json edges = nlohmann::json::array();
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto& e = g.edge(i);
    edges.push_back({{"halves", {2 * i, 2 * i + 1}},
                     {"sign", std::string(1, sign_char(e.sign))},
                     {"label", e.label}});
  }
  j["edges"] = std::move(edges);
  if (g.outer_dart()) j["outer_face"] = *g.outer_dart();
  return j;
}

inline SignedMap signed_map_from_json(const nlohmann::json& j) {
  try {
    if (!j.contains("vertices") || !j.contains("edges"))
      throw InputError("graph JSON needs \"vertices\" and \"edges\"");
    std::map<long long, Dart> dart_of;
    std::vector<MapEdge> edges;
    const auto& je = j.at("edges");
    for (std::size_t i = 0; i < je.size(); ++i) {
      const auto& e = je[i];
      const auto& halves = e.at("halves");
      if (halves.size() != 2) throw InputError("edge needs exactly two halves");
      for (int s = 0; s < 2; ++s) {
        const long long h = halves[s].get<long long>();
        if (!dart_of.emplace(h, static_cast<Dart>(2 * i + s)).second)
          throw InputError("half-edge " + std::to_string(h) +
                           " appears in more than one edge");
      }
      MapEdge me;
      me.id = static_cast<EdgeId>(i);
      const std::string sign = e.value("sign", std::string("+"));
      if (sign != "+" && sign != "-")
        throw InputError("edge sign must be \"+\" or \"-\"");
      me.sign = sign == "+" ? Sign::plus : Sign::minus;
      me.label = e.value("label", std::to_string(i));
      edges.push_back(std::move(me));
    }
    std::vector<std::vector<Dart>> rotations;
    for (const auto& jv : j.at("vertices")) {
      std::vector<Dart> r;
      for (const auto& h : jv) {
        auto it = dart_of.find(h.get<long long>());
        if (it == dart_of.end())
          throw InputError("vertex lists unknown half-edge " + h.dump());
        r.push_back(it->second);
      }
      rotations.push_back(std::move(r));
    }
    std::optional<Dart> outer;
    if (j.contains("outer_face") && !j["outer_face"].is_null()) {
      auto it = dart_of.find(j["outer_face"].get<long long>());
      if (it == dart_of.end()) throw InputError("outer_face names an unknown half-edge");
      outer = it->second;
    }
    return SignedMap(std::move(rotations), std::move(edges), outer);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Small named maps.

/// Cycle C_n (n >= 1; C_1 is a single loop, C_2 a double edge).
inline SignedMap cycle_map(int n, Sign sign = Sign::plus) {
  std::vector<MapEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, sign, std::to_string(i)});
  std::vector<std::vector<Dart>> rot(n);
  // edge i joins vertex i (side 0) to vertex i+1 mod n (side 1)
  for (int i = 0; i < n; ++i) {
    rot[i].push_back(2 * i);
    rot[(i + 1) % n].push_back(2 * i + 1);
  }
  return SignedMap(std::move(rot), std::move(edges), Dart{0});
}

/// Path of `length` edges on length + 1 vertices.
inline SignedMap path_map(int length, Sign sign = Sign::plus) {
  std::vector<MapEdge> edges;
  std::vector<std::vector<Dart>> rot(length + 1);
  for (int i = 0; i < length; ++i) {
    edges.push_back({i, sign, std::to_string(i)});
    rot[i].push_back(2 * i);
    rot[i + 1].push_back(2 * i + 1);
  }
  std::optional<Dart> outer;
  if (length > 0) outer = 0;
  return SignedMap(std::move(rot), std::move(edges), outer);
}

/// k parallel edges between two vertices.
inline SignedMap multiedge_map(int k, Sign sign = Sign::plus) {
  std::vector<MapEdge> edges;
  std::vector<std::vector<Dart>> rot(2);
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, sign, std::to_string(i)});
    rot[0].push_back(2 * i);
  }
  for (int i = k - 1; i >= 0; --i) rot[1].push_back(2 * i + 1);
  std::optional<Dart> outer;
  if (k > 0) outer = 0;
  return SignedMap(std::move(rot), std::move(edges), outer);
}

/// Path of n double edges (n + 1 vertices, 2n edges).
inline SignedMap path_of_double_edges(int n, Sign sign = Sign::plus) {
  std::vector<MapEdge> edges;
  std::vector<std::vector<Dart>> rot(n + 1);
  for (int i = 0; i < n; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    edges.push_back({a, sign, std::to_string(a)});
    edges.push_back({b, sign, std::to_string(b)});
    // ccw at vertex i: ..., a, b ; at vertex i+1: b, a, ...
    rot[i].push_back(2 * a);
    rot[i].push_back(2 * b);
    rot[i + 1].insert(rot[i + 1].begin(), {2 * b + 1, 2 * a + 1});
  }
  std::optional<Dart> outer;
  if (n > 0) outer = 0;
  return SignedMap(std::move(rot), std::move(edges), outer);
}

/// Edgeless map on n vertices.
inline SignedMap edgeless_map(int n) {
  return SignedMap(std::vector<std::vector<Dart>>(n), {});
}

}  // namespace taitpoly
