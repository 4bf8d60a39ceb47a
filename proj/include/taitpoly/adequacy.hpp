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
#include <vector>

#include "taitpoly/bipoly.hpp"
#include "taitpoly/diagram.hpp"
#include "taitpoly/error.hpp"
#include "taitpoly/signed_map.hpp"
#include "taitpoly/tutte.hpp"

namespace taitpoly {

namespace detail {

inline void require_connected_nonempty(const SignedMap& g, const char* what) {
  if (!is_connected(g)) throw DisconnectedError(std::string(what) + " needs a connected graph");
  if (g.edge_count() == 0) throw InputError(std::string(what) + " needs at least one edge");
}

inline void require_reduced(const SignedMap& g, const char* what) {
  const EdgeClasses ec = classify_edges(g);
  if (!ec.bridges.empty() || !ec.loops.empty())
    throw InputError(std::string(what) + " needs a graph without bridges and loops");
}

}  // namespace detail

/// G|E has no bridges and G/E has no loops.
inline bool adequate_by_partition(const SignedMap& g, const EdgeSet& e_sigma) {
  detail::require_connected_nonempty(g, "adequate_by_partition");
  g.require_subset(e_sigma);
  return classify_edges(restrict_to(g, e_sigma)).bridges.empty() &&
         classify_edges(contract(g, e_sigma)).loops.empty();
}

/// Cycle form: every edge of E lies on a cycle of G|E, and no edge outside E
/// has both ends in one component of G|E.
inline bool adequate_by_cycles(const SignedMap& g, const EdgeSet& e_sigma) {
  detail::require_connected_nonempty(g, "adequate_by_cycles");
  g.require_subset(e_sigma);
  const SignedMap sub = restrict_to(g, e_sigma);
  for (const auto& [id, on_cycle] : cycle_membership(sub))
    if (!on_cycle) return false;
  const ComponentInfo comp = components(sub);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (e_sigma.contains(g.edge(i).id)) continue;
    auto [u, v] = g.endpoints(i);
    if (comp.component_of_vertex[u] == comp.component_of_vertex[v]) return false;
  }
  return true;
}

/// chi(G|E)(0,t) * chi(G/E)(t,0), using a caller-owned engine.
inline BiPoly phi(const SignedMap& g, const EdgeSet& e_sigma, TutteEngine& engine) {
  detail::require_connected_nonempty(g, "phi");
  g.require_subset(e_sigma);
  return specialize(engine(restrict_to(g, e_sigma)), Specialization::x_to_zero) *
         specialize(engine(contract(g, e_sigma)), Specialization::y_to_zero);
}

inline BiPoly phi(const SignedMap& g, const EdgeSet& e_sigma) {
  TutteEngine engine;
  return phi(g, e_sigma, engine);
}

/// Bitmask form of the partition test for enumeration. Bit i is edge index i.
class PartitionChecker {
 public:
  explicit PartitionChecker(const SignedMap& g) : n_(static_cast<int>(g.vertex_count())) {
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      ends_.push_back(g.endpoints(i));
      ids_.push_back(g.edge(i).id);
    }
  }

  std::size_t edge_count() const { return ends_.size(); }
  const std::vector<EdgeId>& ids() const { return ids_; }

  EdgeSet to_edge_set(std::uint64_t mask) const {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (mask >> i & 1u) out.push_back(ids_[i]);
    return EdgeSet(std::move(out));
  }

  bool operator()(std::uint64_t mask) const {
    return !contracts_to_loop(mask) && !has_bridge(mask);
  }

  /// Some edge outside the mask joins two vertices already joined inside.
  bool contracts_to_loop(std::uint64_t mask) const {
    detail::Dsu dsu(n_);
    for (std::size_t i = 0; i < ends_.size(); ++i)
      if (mask >> i & 1u) dsu.unite(ends_[i].first, ends_[i].second);
    for (std::size_t i = 0; i < ends_.size(); ++i)
      if (!(mask >> i & 1u) && dsu.find(ends_[i].first) == dsu.find(ends_[i].second)) return true;
    return false;
  }

  bool has_bridge(std::uint64_t mask) const { return bridge_mask(mask) != 0; }

  /// Bridges of the subgraph spanned by `mask`.
  std::uint64_t bridge_mask(std::uint64_t mask) const {
    std::uint64_t bridges = 0;
    std::vector<std::vector<std::pair<int, int>>> adj(n_);
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      auto [u, v] = ends_[i];
      if (u == v) continue;
      adj[u].push_back({v, static_cast<int>(i)});
      adj[v].push_back({u, static_cast<int>(i)});
    }
    std::vector<int> disc(n_, -1), low(n_, 0);
    int timer = 0;
    struct Frame {
      int v, parent_edge;
      std::size_t next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n_; ++root) {
      if (disc[root] != -1 || adj[root].empty()) continue;
      disc[root] = low[root] = timer++;
      stack.push_back({root, -1, 0});
      while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj[f.v].size()) {
          auto [w, e] = adj[f.v][f.next++];
          if (e == f.parent_edge) continue;
          if (disc[w] == -1) {
            disc[w] = low[w] = timer++;
            stack.push_back({w, e, 0});
          } else {
            low[f.v] = std::min(low[f.v], disc[w]);
          }
          continue;
        }
        const Frame done = f;
        stack.pop_back();
        if (stack.empty()) break;
        low[stack.back().v] = std::min(low[stack.back().v], low[done.v]);
        if (low[done.v] > disc[stack.back().v]) bridges |= std::uint64_t{1} << done.parent_edge;
      }
    }
    return bridges;
  }

  /// Depth-first generation with early rejection: once an edge is decided
  /// out, its ends must never be joined by decided-in edges, and no
  /// decided-in edge may be a bridge of the edges still allowed in.
  std::vector<std::uint64_t> pruned_candidates() const {
    std::vector<std::uint64_t> out;
    const std::size_t m = ends_.size();
    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    auto recurse = [&](auto& self, std::size_t i, std::uint64_t in_mask,
                       std::vector<std::size_t>& outs) -> void {
      if (i == m) {
        if (!has_bridge(in_mask)) out.push_back(in_mask);
        return;
      }
      const std::uint64_t with = in_mask | (std::uint64_t{1} << i);
      const std::uint64_t later = i + 1 == m ? 0 : ~std::uint64_t{0} << (i + 1) & full;
      if (!violates(with, outs) && !(bridge_mask(with | later) & with)) self(self, i + 1, with, outs);
      outs.push_back(i);
      if (!violates(in_mask, outs) && !(bridge_mask(in_mask | later) & in_mask))
        self(self, i + 1, in_mask, outs);
      outs.pop_back();
    };
    std::vector<std::size_t> outs;
    recurse(recurse, 0, 0, outs);
    return out;
  }

 private:
  bool violates(std::uint64_t in_mask, const std::vector<std::size_t>& outs) const {
    if (outs.empty()) return false;
    detail::Dsu dsu(n_);
    for (std::size_t i = 0; i < ends_.size(); ++i)
      if (in_mask >> i & 1u) dsu.unite(ends_[i].first, ends_[i].second);
    for (std::size_t i : outs)
      if (dsu.find(ends_[i].first) == dsu.find(ends_[i].second)) return true;
    return false;
  }

  int n_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<EdgeId> ids_;
};

// ---------------------------------------------------------------------------
// Homogeneity

struct HomogeneityConditions {
  bool components_pure = true;      // each component of G|E is single-signed
  bool bounded_regions_pure = true;  // complement edges per bounded face of G|E
  bool outer_region_pure = true;    // complement edges in the unbounded face
  bool has_outer = false;

  bool all() const { return components_pure && bounded_regions_pure && outer_region_pure; }
};

/// Faces of G|E are unions of faces of G glued across complement edges; each
/// complement edge lies in the face it was glued through. Without an outer
/// marker every face counts as bounded.
inline HomogeneityConditions homogeneity_conditions(const SignedMap& g, const EdgeSet& e_sigma) {
  g.require_subset(e_sigma);
  HomogeneityConditions out;
  auto sign_bit = [](Sign s) { return s == Sign::plus ? 1 : 2; };
  {
    detail::Dsu dsu(static_cast<int>(g.vertex_count()));
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (e_sigma.contains(g.edge(i).id)) dsu.unite(g.endpoints(i).first, g.endpoints(i).second);
    std::map<int, int> mask;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      if (e_sigma.contains(g.edge(i).id)) mask[dsu.find(g.endpoints(i).first)] |= sign_bit(g.edge(i).sign);
    for (const auto& [root, bits] : mask)
      if (bits == 3) out.components_pure = false;
  }
  const FaceTrace tr = faces(g);
  detail::Dsu dsu(static_cast<int>(tr.faces.size()));
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!e_sigma.contains(g.edge(i).id)) dsu.unite(tr.face_of_dart[2 * i], tr.face_of_dart[2 * i + 1]);
  std::map<int, int> mask;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (!e_sigma.contains(g.edge(i).id)) mask[dsu.find(tr.face_of_dart[2 * i])] |= sign_bit(g.edge(i).sign);
  out.has_outer = tr.outer.has_value();
  const int outer_root = tr.outer ? dsu.find(*tr.outer) : -1;
  for (const auto& [root, bits] : mask) {
    if (bits != 3) continue;
    if (root == outer_root) out.outer_region_pure = false;
    else out.bounded_regions_pure = false;
  }
  return out;
}

/// Adequate by partition and all three purity conditions; requires a graph
/// without bridges and loops.
inline bool homogeneous_adequate(const SignedMap& g, const EdgeSet& e_sigma) {
  detail::require_reduced(g, "homogeneous_adequate");
  return adequate_by_partition(g, e_sigma) && homogeneity_conditions(g, e_sigma).all();
}

// ---------------------------------------------------------------------------
// Enumeration

enum class Strategy { plain, pruned };

struct EnumerateOptions {
  std::size_t max_edges = 24;
  Strategy strategy = Strategy::plain;
  /// Throw VerificationError when the state sum misses chi(t,t).
  bool require_verified = true;
  bool homogeneity = false;
};

struct AdequateState {
  State state;
  EdgeSet e_sigma;
  BiPoly phi;
  bool homogeneous = false;
  HomogeneityConditions conditions;
};

struct AdequacyReport {
  std::vector<AdequateState> states;
  BiPoly state_sum;
  BiPoly chi_diag;
  Integer tree_count;
  bool verified = false;
  bool homogeneity_evaluated = false;
  std::size_t edge_count = 0;
  /// Adequate states found, kept when `states` is filtered.
  std::size_t adequate_count = 0;

  /// 2 <= N <= chi(1,1).
  bool bounds_hold() const {
    const Integer n = adequate_count;
    return n >= 2 && n <= tree_count;
  }
  std::size_t homogeneous_count() const {
    return static_cast<std::size_t>(std::count_if(
        states.begin(), states.end(), [](const AdequateState& s) { return s.homogeneous; }));
  }
};

/// All adequate partitions of E(G), sorted by size then by edge ids, with
/// their phi polynomials and the state-sum check against chi(t,t).
inline AdequacyReport enumerate(const SignedMap& g, const EnumerateOptions& options = {}) {
  detail::require_connected_nonempty(g, "enumerate");
  const std::size_t m = g.edge_count();
  if (m > options.max_edges) throw CapExceededError("enumerate", m, options.max_edges);
  if (m > 63) throw CapExceededError("enumerate", m, 63);
  if (options.homogeneity) detail::require_reduced(g, "homogeneity filtering");

  const PartitionChecker check(g);
  std::vector<std::uint64_t> masks;
  if (options.strategy == Strategy::pruned) {
    masks = check.pruned_candidates();
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
      if (check(mask)) masks.push_back(mask);
  }

  AdequacyReport rep;
  rep.edge_count = m;
  rep.homogeneity_evaluated = options.homogeneity;
  TutteEngine engine;
  for (std::uint64_t mask : masks) {
    AdequateState s;
    s.e_sigma = check.to_edge_set(mask);
    s.state = state_from_partition(g, s.e_sigma);
    s.phi = phi(g, s.e_sigma, engine);
    if (options.homogeneity) {
      s.conditions = homogeneity_conditions(g, s.e_sigma);
      s.homogeneous = s.conditions.all();
    }
    rep.states.push_back(std::move(s));
  }
  std::sort(rep.states.begin(), rep.states.end(), [](const AdequateState& a, const AdequateState& b) {
    if (a.e_sigma.size() != b.e_sigma.size()) return a.e_sigma.size() < b.e_sigma.size();
    return a.e_sigma.ids() < b.e_sigma.ids();
  });
  rep.adequate_count = rep.states.size();
  for (const auto& s : rep.states) rep.state_sum += s.phi;
  const BiPoly chi = engine(g);
  rep.chi_diag = specialize(chi, Specialization::x_equals_y);
  rep.tree_count = eval(chi, 1, 1);
  rep.verified = rep.state_sum == rep.chi_diag;
  if (options.require_verified && !rep.verified)
    throw VerificationError("state sum " + rep.state_sum.to_t_string() + " differs from chi(t,t) " +
                            rep.chi_diag.to_t_string());
  return rep;
}

/// enumerate restricted to homogeneously adequate states.
inline AdequacyReport enumerate_homogeneous(const SignedMap& g, EnumerateOptions options = {}) {
  options.homogeneity = true;
  AdequacyReport rep = enumerate(g, options);
  std::erase_if(rep.states, [](const AdequateState& s) { return !s.homogeneous; });
  return rep;
}

struct AbAdequacy {
  bool a_adequate = false;
  bool b_adequate = false;
  BiPoly phi_plus;
  BiPoly phi_minus;
};

/// The all-A state has E = E+, the all-B state E = E-; each is adequate
/// exactly when its phi is nonzero.
inline AbAdequacy ab_adequacy(const SignedMap& g) {
  AbAdequacy out;
  TutteEngine engine;
  out.phi_plus = phi(g, g.edges_with_sign(Sign::plus), engine);
  out.phi_minus = phi(g, g.edges_with_sign(Sign::minus), engine);
  out.a_adequate = !out.phi_plus.is_zero();
  out.b_adequate = !out.phi_minus.is_zero();
  return out;
}

}  // namespace taitpoly
