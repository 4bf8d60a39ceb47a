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

using testing::tpoly;

std::vector<BiPoly> phis(const AdequacyReport& rep) {
  std::vector<BiPoly> out;
  for (const auto& s : rep.states) out.push_back(s.phi);
  return out;
}

std::set<EdgeSet> partitions(const AdequacyReport& rep) {
  std::set<EdgeSet> out;
  for (const auto& s : rep.states) out.insert(s.e_sigma);
  return out;
}

TEST(Adequacy, EmptyGraphRejected) {
  EXPECT_THROW(adequate_by_partition(edgeless_map(1), {}), InputError);
  EXPECT_THROW(enumerate(edgeless_map(1)), InputError);
  EXPECT_THROW(adequate_by_partition(cycle_map(3), {7}), UnknownEdgeError);
}

TEST(Adequacy, CycleExamples) {
  const SignedMap c3 = cycle_map(3);
  EXPECT_TRUE(adequate_by_partition(c3, {}));
  EXPECT_TRUE(adequate_by_partition(c3, c3.all_edges()));
  EXPECT_FALSE(adequate_by_partition(c3, {0}));
  EXPECT_FALSE(adequate_by_partition(c3, {0, 1}));
  EXPECT_EQ(phi(c3, {}), tpoly({0, 1, 1}));
  EXPECT_EQ(phi(c3, c3.all_edges()), BiPoly::t());
  EXPECT_TRUE(phi(c3, {0}).is_zero());
}

TEST(Adequacy, TorusLinks) {
  for (int n = 2; n <= 10; ++n) {
    const AdequacyReport rep = enumerate(tait_graph(torus_link_diagram(n)));
    ASSERT_EQ(rep.states.size(), 2u);
    BiPoly big;
    for (int i = 1; i < n; ++i) big += BiPoly::monomial(1, i, 0);
    EXPECT_EQ(testing::sorted_strings(phis(rep)), testing::sorted_strings({big, BiPoly::t()}));
    EXPECT_EQ(rep.state_sum, big + BiPoly::t());
    EXPECT_TRUE(rep.verified);
  }
}

TEST(Adequacy, HopfSumsAttainTreeBound) {
  for (int n = 1; n <= 6; ++n) {
    const AdequacyReport rep = enumerate(path_of_double_edges(n));
    EXPECT_EQ(rep.states.size(), std::size_t{1} << n);
    EXPECT_EQ(rep.chi_diag, pow(BiPoly::monomial(2, 1, 0), n));
    EXPECT_EQ(rep.tree_count, Integer(1) << n);
  }
}

TEST(Adequacy, ElevenN95) {
  const SignedMap g = tait_graph(testing::load_diagram("11n95.pd"));
  EXPECT_EQ(g.edge_count(), 11u);
  const AdequacyReport rep = enumerate(g, {.homogeneity = true});
  EXPECT_EQ(rep.states.size(), 20u);
  EXPECT_EQ(rep.chi_diag, tpoly({0, 6, 33, 62, 48, 16, 2}));
  EXPECT_EQ(rep.tree_count, 167);
  EXPECT_TRUE(rep.verified);
  EXPECT_EQ(testing::sorted_strings(phis(rep)), testing::sorted_strings(testing::eleven_n95_phis()));
  EXPECT_EQ(rep.homogeneous_count(), 0u);
  int pure_components = 0;
  for (const auto& s : rep.states) {
    if (!s.conditions.components_pure) continue;
    ++pure_components;
    EXPECT_TRUE(s.conditions.bounded_regions_pure);
    EXPECT_FALSE(s.conditions.outer_region_pure);
  }
  EXPECT_EQ(pure_components, 4);
  EXPECT_TRUE(enumerate_homogeneous(g).states.empty());
  const AbAdequacy ab = ab_adequacy(g);
  EXPECT_FALSE(ab.a_adequate);
  EXPECT_FALSE(ab.b_adequate);
}

TEST(Adequacy, SwappedElevenN95KeepsCountAndSum) {
  const SignedMap g = tait_graph(testing::load_diagram("11n95.pd", {.coloring = Coloring::swapped}));
  const AdequacyReport rep = enumerate(g);
  EXPECT_EQ(rep.states.size(), 20u);
  EXPECT_EQ(rep.state_sum, tpoly({0, 6, 33, 62, 48, 16, 2}));
}

TEST(Adequacy, CapExceeded) {
  EXPECT_THROW(enumerate(cycle_map(30)), CapExceededError);
  EXPECT_EQ(enumerate(cycle_map(30), {.max_edges = 30, .strategy = Strategy::pruned}).states.size(), 2u);
}

TEST(Adequacy, AbAdequacyOfAlternating) {
  for (const auto& name : testing::alternating_knots()) {
    const AbAdequacy ab = ab_adequacy(tait_graph(testing::load_diagram(name)));
    EXPECT_TRUE(ab.a_adequate) << name;
    EXPECT_TRUE(ab.b_adequate) << name;
  }
}

TEST(Adequacy, HomogeneityExamples) {
  // mixed signs around one face: only the outer region matters
  SignedMap c3 = cycle_map(3);
  EXPECT_TRUE(homogeneity_conditions(c3, {}).all());
  std::vector<MapEdge> e = c3.edges();
  e[1].sign = Sign::minus;
  const SignedMap mixed(c3.rotations(), e, c3.outer_dart());
  const HomogeneityConditions h = homogeneity_conditions(mixed, {});
  EXPECT_TRUE(h.components_pure);
  EXPECT_FALSE(h.outer_region_pure);
  EXPECT_FALSE(homogeneous_adequate(mixed, {}));
  EXPECT_THROW(homogeneous_adequate(path_map(2), {}), InputError);
  for (const auto& name : testing::alternating_knots()) {
    const SignedMap g = tait_graph(testing::load_diagram(name));
    const AdequacyReport rep = enumerate(g, {.homogeneity = true});
    EXPECT_EQ(rep.homogeneous_count(), rep.states.size()) << name;
  }
  for (int n = 2; n <= 8; ++n)
    EXPECT_EQ(enumerate_homogeneous(tait_graph(torus_link_diagram(n))).states.size(), 2u);
}

// Properties

TEST(AdequacyProperties, ThreeTestsAgree) {
  std::mt19937_64 rng(61);
  TutteEngine engine;
  for (int trial = 0; trial < 40; ++trial) {
    const LinkDiagram d = testing::random_diagram(rng, 8);
    const SignedMap g = tait_graph(d);
    const int n = static_cast<int>(d.crossing_count());
    const PartitionChecker check(g);
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      const State s = State::from_mask(n, mask);
      const EdgeSet e = classify(g, s).e_sigma();
      const bool by_circles = segment_self_touch(d, s).empty();
      ASSERT_EQ(adequate_by_partition(g, e), by_circles);
      ASSERT_EQ(!phi(g, e, engine).is_zero(), by_circles);
      if (is_reduced(d)) ASSERT_EQ(adequate_by_cycles(g, e), by_circles);
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < check.edge_count(); ++i)
        if (e.contains(check.ids()[i])) m |= 1ull << i;
      ASSERT_EQ(check(m), by_circles);
    }
  }
}

TEST(AdequacyProperties, StateSumAndBounds) {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 80; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 12);
    const AdequacyReport rep = enumerate(g, {.require_verified = false});
    EXPECT_TRUE(rep.verified);
    for (const auto& s : rep.states) {
      EXPECT_TRUE(s.phi.has_nonnegative_coefficients());
      EXPECT_FALSE(s.phi.is_zero());
      EXPECT_EQ(state_from_partition(g, s.e_sigma), s.state);
    }
    const EdgeClasses ec = classify_edges(g);
    if (ec.bridges.empty() && ec.loops.empty()) {
      EXPECT_TRUE(rep.bounds_hold());
      EXPECT_TRUE(partitions(rep).contains(EdgeSet{}));
      EXPECT_TRUE(partitions(rep).contains(g.all_edges()));
    }
  }
}

TEST(AdequacyProperties, PrunedMatchesPlain) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    const SignedMap g = testing::random_plane_map(rng, 1 + trial % 14);
    const AdequacyReport a = enumerate(g), b = enumerate(g, {.strategy = Strategy::pruned});
    EXPECT_EQ(partitions(a), partitions(b));
    EXPECT_EQ(a.state_sum, b.state_sum);
  }
}

TEST(AdequacyProperties, DualAndMirrorTakeComplements) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedMap g = testing::random_reduced_map(rng, 2 + trial % 10);
    const AdequacyReport rep = enumerate(g);
    std::set<EdgeSet> comp;
    for (const auto& e : partitions(rep)) comp.insert(g.all_edges().minus(e));
    const AdequacyReport dual = enumerate(planar_dual(g).with_signs_flipped());
    EXPECT_EQ(dual.states.size(), rep.states.size());
    EXPECT_EQ(dual.state_sum, rep.state_sum);
    const AdequacyReport mirrored = enumerate(g.with_signs_flipped());
    EXPECT_EQ(mirrored.states.size(), rep.states.size());
    EXPECT_EQ(partitions(mirrored), partitions(rep));
    for (const auto& s : mirrored.states) {
      // same partition, but every crossing resolved the other way
      EXPECT_EQ(s.state, state_from_partition(g, s.e_sigma).dual());
      EXPECT_TRUE(comp.contains(g.all_edges().minus(s.e_sigma)));
    }
  }
}

TEST(AdequacyProperties, MirrorSwapsAbAdequacy) {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 40; ++trial) {
    const LinkDiagram d = testing::random_diagram(rng, 10);
    const AbAdequacy a = ab_adequacy(tait_graph(d)), b = ab_adequacy(tait_graph(mirror(d)));
    EXPECT_EQ(a.a_adequate, b.b_adequate);
    EXPECT_EQ(a.b_adequate, b.a_adequate);
    const int n = static_cast<int>(d.crossing_count());
    EXPECT_EQ(a.a_adequate, segment_self_touch(d, State::uniform(n, Resolution::A)).empty());
  }
}

TEST(AdequacyProperties, HomogeneityMatchesDiagramRegions) {
  std::mt19937_64 rng(66);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedMap g = testing::random_reduced_map(rng, 2 + trial % 9);
    const LinkDiagram d = diagram_from_map(g);
    const SignedMap t = tait_graph(d);
    for (const auto& s : enumerate(t, {.homogeneity = true}).states)
      ASSERT_EQ(s.homogeneous, state_is_homogeneous(d, s.state)) << d.to_pd_string();
  }
}

}  // namespace
}  // namespace taitpoly
