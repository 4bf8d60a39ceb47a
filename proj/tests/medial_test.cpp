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

#include <random>

#include <gtest/gtest.h>

#include "support/test_support.hpp"

namespace taitpoly {
namespace {

TEST(Medial, RejectsEmptyAndDisconnected) {
  EXPECT_THROW(diagram_from_map(edgeless_map(1)), InputError);
  EXPECT_THROW(diagram_from_map(restrict_to(path_map(2), {0})), DisconnectedError);
}

TEST(Medial, Examples) {
  for (int n = 2; n <= 7; ++n) {
    const LinkDiagram d = torus_link_diagram(n);
    EXPECT_EQ(d.crossing_count(), static_cast<std::size_t>(n));
    EXPECT_EQ(d.face_count(), static_cast<std::size_t>(n + 2));
    EXPECT_TRUE(d.is_alternating());
  }
  EXPECT_EQ(hopf_sum_diagram(3).crossing_count(), 6u);
}

TEST(Medial, TaitGraphRecoversMap) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 150; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 14);
    const LinkDiagram d = diagram_from_map(g);
    const SignedMap h = tait_graph(d);
    ASSERT_TRUE(are_isomorphic(h, g)) << d.to_pd_string();
    for (std::size_t i = 0; i < g.edge_count(); ++i) EXPECT_EQ(h.edge(i).sign, g.edge(i).sign);
    EXPECT_FALSE(d.is_black(d.outer_face()));
  }
}

TEST(Medial, OuterFaceIsPreserved) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 10);
    const SignedMap h = tait_graph(diagram_from_map(g));
    const FaceTrace fg = faces(g), fh = faces(h);
    ASSERT_TRUE(fh.outer.has_value());
    auto edge_multiset = [](const Face& f, const SignedMap& m) {
      std::multiset<EdgeId> out;
      for (Dart x : f.darts) out.insert(m.edge(SignedMap::edge_index_of(x)).id);
      return out;
    };
    EXPECT_EQ(edge_multiset(fh.faces[*fh.outer], h), edge_multiset(fg.faces[*fg.outer], g));
  }
}

TEST(Medial, RoundTripThroughPdText) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const LinkDiagram d = testing::random_diagram(rng, 12);
    const LinkDiagram e = parse_pd(d.to_pd_string(), d.options());
    EXPECT_EQ(e.crossings(), d.crossings());
    EXPECT_TRUE(are_isomorphic(tait_graph(e), tait_graph(d)));
  }
}

}  // namespace
}  // namespace taitpoly
