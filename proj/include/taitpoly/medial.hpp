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

#include <optional>
#include <vector>

#include "taitpoly/diagram.hpp"
#include "taitpoly/error.hpp"
#include "taitpoly/signed_map.hpp"

namespace taitpoly {

/// Builds a link diagram whose canonical Tait graph is `g`: one crossing per
/// edge (crossing c for edge index c), black faces at the vertices.
///
/// Ports of edge e = (d0 at u, d1 at v), counterclockwise around its
/// crossing: 0 = u-side after d0, 1 = u-side before d0, 2 = v-side after d1,
/// 3 = v-side before d1. Port corners 0 and 2 face the vertices. Strands run
/// 0-2 and 1-3; a + edge passes under along 1-3.
inline LinkDiagram diagram_from_map(const SignedMap& g) {
  if (g.edge_count() == 0) throw InputError("diagram_from_map needs at least one edge");
  if (!is_connected(g)) throw DisconnectedError("diagram_from_map needs a connected map");
  const int m = static_cast<int>(g.edge_count());
  std::vector<int> link(4 * m, -1);
  for (Dart d = 0; d < 2 * m; ++d) {
    const Dart nd = g.rot_next(d);
    const int a = 4 * SignedMap::edge_index_of(d) + (d % 2 == 0 ? 0 : 2);
    const int b = 4 * SignedMap::edge_index_of(nd) + (nd % 2 == 0 ? 1 : 3);
    link[a] = b;
    link[b] = a;
  }
  auto opposite = [](int port) { return 4 * (port / 4) + (port % 4 + 2) % 4; };
  // The unbounded face is the white corner (e, pc) for the outer dart, or
  // corner (0, 1). Tracing first into port pc+1 puts that corner on the left
  // of the first arc.
  int outer_edge = 0, outer_corner = 1;
  if (g.outer_dart()) {
    const Dart o = *g.outer_dart();
    outer_edge = SignedMap::edge_index_of(o);
    outer_corner = o % 2 == 0 ? 1 : 3;
  }
  // A component passing only over carries no orientation in PD code, so a
  // traversal may be read back reversed; other starting ports are tried then.
  auto build = [&](int first) -> std::optional<LinkDiagram> {
    std::vector<int> label(4 * m, 0);
    std::vector<bool> head(4 * m, false);
    int next_label = 1;
    for (int i = -1; i < 4 * m; ++i) {
      const int start = i < 0 ? first : i;
      if (label[start] != 0) continue;
      int cur = start;
      while (label[cur] == 0) {
        const int q = link[cur];
        label[cur] = label[q] = next_label++;
        head[q] = true;
        cur = opposite(q);
      }
    }
    std::vector<PdCrossing> crossings(m);
    int outer_offset = 0;
    for (int e = 0; e < m; ++e) {
      const int low = g.edge(e).sign == Sign::plus ? 1 : 0;
      const int off = head[4 * e + low] ? low : low + 2;
      if (e == outer_edge) outer_offset = off;
      for (int j = 0; j < 4; ++j) crossings[e].arcs[j] = label[4 * e + (off + j) % 4];
    }
    LinkDiagram d(std::move(crossings));
    const int target = d.face_of_corner(outer_edge, outer_corner - outer_offset + 4);
    for (int arc : d.arc_labels())
      if (d.left_face(arc) == target) return d.with_outer_arc(arc);
    return std::nullopt;
  };
  if (auto d = build(link[4 * outer_edge + (outer_corner + 1) % 4])) return *d;
  for (int port = 0; port < 4 * m; ++port)
    if (auto d = build(port)) return *d;
  throw Error("diagram_from_map: no arc has the outer face on its left");
}

/// Standard diagram of the (2,n) torus link.
inline LinkDiagram torus_link_diagram(int n) {
  return diagram_from_map(cycle_map(n));
}

/// Connected sum of n standard Hopf link diagrams.
inline LinkDiagram hopf_sum_diagram(int n) {
  return diagram_from_map(path_of_double_edges(n));
}

}  // namespace taitpoly
