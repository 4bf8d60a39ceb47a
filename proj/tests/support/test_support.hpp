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
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "taitpoly/taitpoly.hpp"

namespace taitpoly::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

#ifdef TAITPOLY_DATA_DIR
inline std::string data_path(const std::string& name) {
  return std::string(TAITPOLY_DATA_DIR) + "/" + name;
}
inline LinkDiagram load_diagram(const std::string& name, DiagramOptions o = {}) {
  return parse_pd(read_file(data_path(name)), o);
}
#endif

inline const std::vector<std::string>& alternating_knots() {
  static const std::vector<std::string> names{"3_1.pd", "4_1.pd", "5_1.pd", "5_2.pd", "6_2.pd", "7_1.pd"};
  return names;
}
inline const std::vector<std::string>& nonalternating_knots() {
  static const std::vector<std::string> names{"8_19.pd", "8_20.pd", "9_42.pd", "11n34.pd", "11n95.pd"};
  return names;
}

/// t-polynomial from coefficients listed from t^0 upward.
inline BiPoly tpoly(std::initializer_list<long long> coeffs) {
  std::vector<Integer> c;
  for (long long v : coeffs) c.emplace_back(v);
  return BiPoly::from_t_coefficients(c);
}

/// Random connected plane map grown by pendant edges and face chords. Every
/// step keeps the embedding planar; chords may close loops or parallel edges.
inline SignedMap random_plane_map(std::mt19937_64& rng, int edges, double chord_bias = 0.6,
                                  bool allow_loops = true) {
  std::vector<std::vector<Dart>> rot{{0}, {1}};
  std::vector<MapEdge> list{{0, Sign::plus, "0"}};
  auto coin = [&](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  while (static_cast<int>(list.size()) < edges) {
    const int i = static_cast<int>(list.size());
    const SignedMap cur(rot, list);
    if (coin(chord_bias)) {
      const FaceTrace tr = faces(cur);
      const Face& f = tr.faces[pick(tr.faces.size())];
      if (f.darts.empty()) continue;
      const Dart y1 = f.darts[pick(f.darts.size())];
      const Dart y2 = f.darts[pick(f.darts.size())];
      if (y1 == y2 && !allow_loops) continue;
      auto next = rot;
      auto insert_before = [&](Dart y, Dart nd) {
        auto& r = next[cur.vertex_of(y)];
        r.insert(std::find(r.begin(), r.end(), y), nd);
      };
      insert_before(y1, 2 * i);
      insert_before(y2, 2 * i + 1);
      auto trial = list;
      trial.push_back({i, Sign::plus, std::to_string(i)});
      const SignedMap cand(next, trial);
      if (cand.is_loop(i) && !allow_loops) continue;
      if (!is_plane_embedding(cand)) continue;
      rot = std::move(next);
      list = std::move(trial);
    } else {
      const std::size_t v = pick(rot.size());
      auto& r = rot[v];
      r.insert(r.begin() + static_cast<long>(pick(r.size() + 1)), 2 * i);
      rot.push_back({2 * i + 1});
      list.push_back({i, Sign::plus, std::to_string(i)});
    }
  }
  for (auto& e : list) e.sign = coin(0.5) ? Sign::plus : Sign::minus;
  const SignedMap out(rot, list);
  return out.with_outer_dart(static_cast<Dart>(pick(2 * list.size())));
}

/// The twenty phi polynomials of the 11n95 diagram, as a multiset.
inline std::vector<BiPoly> eleven_n95_phis() {
  return {tpoly({0, 3, 9, 11, 8, 4, 1}), tpoly({0, 0, 3, 8, 8, 4, 1}), tpoly({0, 0, 1, 3, 2, 1}),
          tpoly({0, 0, 1, 2, 2, 1}),     tpoly({0, 0, 1, 2, 1}),       tpoly({0, 0, 1, 2, 1}),
          tpoly({0, 0, 0, 1, 2, 1}),     tpoly({0, 0, 0, 1, 2, 1}),    tpoly({0, 0, 0, 1, 1}),
          tpoly({0, 0, 1, 2, 1}),        tpoly({0, 0, 1, 3, 3, 1}),    tpoly({0, 0, 1, 2, 1}),
          tpoly({0, 0, 1, 2, 1}),        tpoly({0, 0, 1, 2, 1}),       tpoly({0, 0, 0, 1, 2, 1}),
          tpoly({0, 0, 0, 1, 1}),        tpoly({0, 0, 1, 2, 1}),       tpoly({0, 0, 2, 5, 4, 1}),
          tpoly({0, 3, 9, 10, 5, 1}),    tpoly({0, 0, 0, 1, 1})};
}

/// Random plane map without bridges or loops (a reduced Tait graph).
inline SignedMap random_reduced_map(std::mt19937_64& rng, int edges) {
  while (true) {
    SignedMap g = random_plane_map(rng, edges, 0.8, false);
    const EdgeClasses ec = classify_edges(g);
    if (ec.bridges.empty() && ec.loops.empty()) return g;
  }
}

/// Random connected multigraph without any embedding (loops allowed).
inline Multigraph random_multigraph(std::mt19937_64& rng, int max_vertices, int edges) {
  Multigraph g;
  g.n = std::min(std::uniform_int_distribution<int>(1, max_vertices)(rng), edges + 1);
  std::uniform_int_distribution<int> vert(0, g.n - 1);
  for (int v = 1; v < g.n; ++v)
    g.edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  while (static_cast<int>(g.edges.size()) < edges) g.edges.push_back({vert(rng), vert(rng)});
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

/// Random connected diagram with at most `max_crossings` crossings.
inline LinkDiagram random_diagram(std::mt19937_64& rng, int max_crossings) {
  const int m = std::uniform_int_distribution<int>(1, max_crossings)(rng);
  return diagram_from_map(random_plane_map(rng, m));
}

/// Sorted rendering of a polynomial multiset, for order-free comparison.
inline std::vector<std::string> sorted_strings(const std::vector<BiPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace taitpoly::testing
