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

// Two triangles joined by a bridge: vertices 0,1,2 and 3,4,5, bridge 2-3.
SignedMap two_triangles() {
  std::vector<MapEdge> edges;
  for (int i = 0; i < 7; ++i) edges.push_back({i, Sign::plus, std::to_string(i)});
  // 0:(0,1) 1:(1,2) 2:(2,0) 3:(2,3) 4:(3,4) 5:(4,5) 6:(5,3)
  std::vector<std::vector<Dart>> rot{{0, 5}, {1, 2}, {3, 4, 6}, {7, 8, 13}, {9, 10}, {11, 12}};
  return SignedMap(rot, edges);
}

TEST(SignedMap, RejectsMalformedRotations) {
  std::vector<MapEdge> e{{0, Sign::plus, "0"}};
  EXPECT_THROW(SignedMap({{0}}, e), InputError);
  EXPECT_THROW(SignedMap({{0, 1}, {1}}, e), InputError);
  EXPECT_THROW(SignedMap({{0, 7}, {1}}, e), InputError);
}

TEST(SignedMap, RestrictExamples) {
  const SignedMap c3 = cycle_map(3);
  EXPECT_TRUE(are_isomorphic(restrict_to(c3, c3.all_edges()), c3));
  const SignedMap none = restrict_to(c3, {});
  EXPECT_EQ(none.vertex_count(), 3u);
  EXPECT_EQ(none.edge_count(), 0u);
  const SignedMap one = restrict_to(c3, {1});
  EXPECT_EQ(one.edge_count(), 1u);
  EXPECT_EQ(components(one).count, 2);
  EXPECT_EQ(classify_edges(one).bridges, EdgeSet({1}));
  EXPECT_EQ(one.edge(0).label, "1");
  EXPECT_THROW(restrict_to(c3, {5}), UnknownEdgeError);
}

TEST(SignedMap, ContractExamples) {
  const SignedMap two = multiedge_map(2);
  const SignedMap c = contract(two, {0});
  EXPECT_EQ(c.vertex_count(), 1u);
  EXPECT_EQ(c.edge_count(), 1u);
  EXPECT_EQ(classify_edges(c).loops, EdgeSet({1}));
  EXPECT_TRUE(are_isomorphic(contract(two, {}), two));
  for (int n = 3; n <= 8; ++n) {
    const SignedMap cn = contract(cycle_map(n), {n / 2});
    EXPECT_TRUE(are_isomorphic(cn, cycle_map(n - 1)));
    EXPECT_TRUE(is_plane_embedding(cn));
  }
  EXPECT_THROW(contract(two, {9}), UnknownEdgeError);
}

TEST(SignedMap, DeleteExamples) {
  const SignedMap two = multiedge_map(2);
  EXPECT_TRUE(are_isomorphic(delete_edges(two, {}), two));
  const SignedMap single = delete_edges(two, {1});
  EXPECT_EQ(single.edge_count(), 1u);
  EXPECT_EQ(classify_edges(single).bridges, EdgeSet({0}));
  for (int n = 3; n <= 8; ++n)
    EXPECT_TRUE(are_isomorphic(delete_edges(cycle_map(n), {0}), path_map(n - 1)));
}

TEST(SignedMap, Components) {
  EXPECT_EQ(components(edgeless_map(5)).count, 5);
  EXPECT_EQ(components(cycle_map(6)).count, 1);
}

TEST(SignedMap, ClassifyEdges) {
  auto c = classify_edges(cycle_map(5));
  EXPECT_TRUE(c.bridges.empty());
  EXPECT_TRUE(c.loops.empty());
  EXPECT_EQ(classify_edges(path_map(4)).bridges, path_map(4).all_edges());
  auto l = classify_edges(cycle_map(1));
  EXPECT_EQ(l.loops, EdgeSet({0}));
  EXPECT_TRUE(l.bridges.empty());
  EXPECT_EQ(classify_edges(two_triangles()).bridges, EdgeSet({3}));
}

TEST(SignedMap, Blocks) {
  EXPECT_EQ(blocks(two_triangles()).size(), 3u);
  EXPECT_EQ(blocks(cycle_map(6)).size(), 1u);
  for (int n = 1; n <= 5; ++n) {
    const auto b = blocks(path_of_double_edges(n));
    ASSERT_EQ(b.size(), static_cast<std::size_t>(n));
    for (const auto& blk : b) EXPECT_TRUE(are_isomorphic(blk, multiedge_map(2)));
  }
  EXPECT_EQ(blocks(edgeless_map(1)).size(), 1u);
}

TEST(SignedMap, Faces) {
  EXPECT_EQ(faces(cycle_map(3)).faces.size(), 2u);
  EXPECT_EQ(faces(multiedge_map(2)).faces.size(), 2u);
  EXPECT_EQ(faces(edgeless_map(1)).faces.size(), 1u);
  const FaceTrace tr = faces(cycle_map(4));
  ASSERT_TRUE(tr.outer.has_value());
  EXPECT_EQ(*tr.outer, tr.face_of_dart[0]);
}

TEST(SignedMap, PlanarDualExamples) {
  for (int n = 2; n <= 7; ++n) EXPECT_TRUE(are_isomorphic(planar_dual(cycle_map(n)), multiedge_map(n)));
  const SignedMap loop = planar_dual(path_map(1));
  EXPECT_EQ(loop.vertex_count(), 1u);
  EXPECT_EQ(classify_edges(loop).loops, EdgeSet({0}));
  EXPECT_THROW(planar_dual(edgeless_map(2)), DisconnectedError);
}

TEST(SignedMap, CycleMembership) {
  for (const auto& [id, on] : cycle_membership(cycle_map(4))) EXPECT_TRUE(on);
  EXPECT_FALSE(cycle_membership(path_map(1)).at(0));
  EXPECT_TRUE(cycle_membership(cycle_map(1)).at(0));
}

TEST(SignedMap, JsonRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 6);
    const SignedMap h = signed_map_from_json(to_json(g));
    EXPECT_EQ(h.rotations(), g.rotations());
    EXPECT_EQ(h.outer_dart(), g.outer_dart());
    for (std::size_t i = 0; i < g.edge_count(); ++i) EXPECT_EQ(h.edge(i).sign, g.edge(i).sign);
  }
  const auto j = nlohmann::json::parse(
      R"({"vertices":[[10,20],[11,21]],"edges":[{"halves":[10,11],"sign":"-","label":"a"},{"halves":[20,21],"sign":"+","label":"b"}],"outer_face":11})");
  const SignedMap g = signed_map_from_json(j);
  EXPECT_EQ(g.edge(0).label, "a");
  EXPECT_EQ(g.edge(0).sign, Sign::minus);
  EXPECT_EQ(g.outer_dart(), Dart{1});
  EXPECT_THROW(signed_map_from_json(nlohmann::json::parse(R"({"vertices":[[1]],"edges":[]})")), InputError);
}

// Properties over random plane maps.

TEST(SignedMapProperties, DeleteEqualsRestrictOfComplement) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 10);
    std::vector<EdgeId> pick;
    for (const auto& e : g.edges())
      if (rng() & 1u) pick.push_back(e.id);
    const EdgeSet h(pick);
    const SignedMap a = delete_edges(g, h), b = restrict_to(g, g.all_edges().minus(h));
    EXPECT_EQ(a.rotations(), b.rotations());
    EXPECT_EQ(a.edge_count(), b.edge_count());
    EXPECT_EQ(a.outer_dart(), b.outer_dart());
  }
}

TEST(SignedMapProperties, ContractionOrderIndependent) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 2 + trial % 8);
    std::vector<EdgeId> ids = g.all_edges().ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(ids.size() / 2 + 1);
    const SignedMap forward = contract(g, EdgeSet(ids));
    SignedMap backward = g;
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) backward = contract(backward, {*it});
    EXPECT_TRUE(are_isomorphic(forward, backward));
    EXPECT_TRUE(is_plane_embedding(forward));
    EXPECT_TRUE(is_plane_embedding(backward));
  }
}

TEST(SignedMapProperties, EulerAfterSurgery) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 12);
    ASSERT_TRUE(is_plane_embedding(g));
    EXPECT_EQ(euler_characteristic(g), 2);
    std::vector<EdgeId> pick;
    for (const auto& e : g.edges())
      if (rng() % 3 == 0) pick.push_back(e.id);
    EXPECT_TRUE(is_plane_embedding(restrict_to(g, EdgeSet(pick))));
    EXPECT_TRUE(is_plane_embedding(delete_edges(g, EdgeSet(pick))));
    const SignedMap c = contract(g, EdgeSet(pick));
    EXPECT_TRUE(is_plane_embedding(c));
    EXPECT_EQ(euler_characteristic(c), 2);
    const SignedMap d = planar_dual(g);
    EXPECT_EQ(euler_characteristic(d), 2);
    EXPECT_EQ(d.vertex_count(), faces(g).faces.size());
  }
}

TEST(SignedMapProperties, DualInvolutionAndBridgeLoopSwap) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 12);
    const SignedMap d = planar_dual(g);
    EXPECT_TRUE(are_isomorphic(planar_dual(d), g));
    const EdgeClasses cg = classify_edges(g), cd = classify_edges(d);
    EXPECT_EQ(cg.bridges, cd.loops);
    EXPECT_EQ(cg.loops, cd.bridges);
    EXPECT_TRUE(cg.bridges.minus(cg.loops).size() == cg.bridges.size());
  }
}

TEST(SignedMapProperties, OuterMarkerSurvivesDeletion) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 2 + trial % 8);
    const SignedMap h = delete_edges(g, {g.edge(*g.outer_dart() / 2).id});
    EXPECT_TRUE(h.outer_dart().has_value());
    const SignedMap c = contract(g, {g.edge(*g.outer_dart() / 2).id});
    EXPECT_TRUE(c.outer_dart().has_value());
  }
}

TEST(SignedMap, IsomorphismDistinguishesSigns) {
  const SignedMap a = cycle_map(3);
  SignedMap b = a.with_signs_flipped();
  EXPECT_FALSE(are_isomorphic(a, b));
  EXPECT_TRUE(are_isomorphic(a, b, false));
  EXPECT_FALSE(are_isomorphic(cycle_map(4), path_of_double_edges(2)));
}

}  // namespace
}  // namespace taitpoly
