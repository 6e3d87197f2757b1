#include <gtest/gtest.h>

#include "ocvx/polycases.hpp"
#include "ocvx/reductions.hpp"
#include "support/oracles.hpp"
#include "support/sweeps.hpp"

namespace {

using namespace ocvx;

constexpr ConvexityKind kGeo = ConvexityKind::Geodetic;
constexpr ConvexityKind kP3 = ConvexityKind::TwoPath;
constexpr ConvexityKind kP3s = ConvexityKind::DistTwo;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidParams;
}

Vertex at(const OrientedGraph& g, const std::string& label) { return *g.find(label); }

// -------------------------------------------------------------------- B_D

TEST(BdTransform, SingleArcBecomesFourPath) {
  const auto out = bd_transform(fixtures::single_arc(), 5);
  const auto& g = out.graph;
  EXPECT_EQ(serialize_arclist(g), "u^i\nu^o\nv^i\nv^o\nu^i u^o\nu^o v^i\nv^i v^o\n");
  EXPECT_EQ(out.target_budget, 5u);
  EXPECT_EQ(out.roles, (std::vector<std::string>{"in", "out", "in", "out"}));
}

TEST(BdTransform, ThreeCycleBecomesSixCycle) {
  const auto g = bd_transform(fixtures::cycle3()).graph;
  EXPECT_EQ(g.n(), 6u);
  EXPECT_EQ(g.m(), 6u);
  EXPECT_TRUE(is_strongly_connected(g));
  EXPECT_EQ(directed_girth(g, all_pairs_distances(g)), 6u);
}

TEST(BdTransform, Errors) {
  EXPECT_EQ(code_of([] { bd_transform(OrientedGraph(1, {})); }), ErrorCode::TooSmall);
  EXPECT_EQ(code_of([] { bd_transform(fixtures::graph("a b\nc d\n")); }),
            ErrorCode::NotConnected);
}

TEST(BdTransform, PreservesGeodeticParameters) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = random_connected_oriented(2 + uniform_index(rng, 4), 0.3, rng);
    const auto b = bd_transform(d).graph;
    ASSERT_TRUE(underlying_bipartition(b).has_value());
    for (const auto p : {Parameter::Interval, Parameter::Hull}) {
      EXPECT_EQ(brute_min(d, kGeo, p).value, brute_min(b, kGeo, p).value)
          << serialize_arclist(d);
    }
  }
}

// ------------------------------------------------------------ hitting set

TEST(HittingSetGadget, SingleElementTwoSets) {
  const HittingSetInstance instance{1, {{0}, {0}}, 1};
  const auto out = hitting_set_to_twopath_hull(instance);
  EXPECT_EQ(out.graph.n(), 11u);
  EXPECT_EQ(out.target_budget, 3u);
  EXPECT_FALSE(out.degenerate);
  EXPECT_TRUE(is_acyclic(out.graph));
  EXPECT_TRUE(underlying_bipartition(out.graph).has_value());
  EXPECT_EQ(brute_min(out.graph, kP3, Parameter::Hull).value, 3u);

  const auto geo = hitting_set_to_geodetic_hull(instance);
  EXPECT_TRUE(is_acyclic(geo.graph));
  EXPECT_EQ(brute_min(geo.graph, kGeo, Parameter::Hull).value, 3u);
}

TEST(HittingSetGadget, NoHitterOfSizeOneMeansHullAboveBudget) {
  const HittingSetInstance instance{2, {{0}, {1}}, 1};
  EXPECT_EQ(brute_hitting_set(instance), 2u);
  const auto out = hitting_set_to_twopath_hull(instance);
  EXPECT_TRUE(out.degenerate);
  EXPECT_GT(brute_min(out.graph, kP3, Parameter::Hull).value, 3u);
}

TEST(HittingSetGadget, XIsSourceAndXPrimeIsSink) {
  const auto out = hitting_set_to_twopath_hull({3, {{0, 1}, {1, 2}, {0, 2}}, 1});
  const auto& g = out.graph;
  EXPECT_EQ(g.in_degree(at(g, "x")), 0u);
  EXPECT_EQ(g.out_degree(at(g, "x'")), 0u);
  const auto forced = forced_constraints(g, kP3).forced;
  EXPECT_TRUE(forced.contains(at(g, "x")));
  EXPECT_TRUE(forced.contains(at(g, "x'")));
}

TEST(HittingSetGadget, LabelsAndRolesCoverEveryVertex) {
  const auto out = hitting_set_to_geodetic_hull({2, {{0, 1}, {0, 1}, {1}}, 1});
  const auto& g = out.graph;
  ASSERT_EQ(out.roles.size(), g.n());
  for (const char* label : {"w[1]", "w[3]", "x", "x'", "u[1]^2", "a[1]^1", "b[2]^2",
                            "c[2]^1", "p[2]^3", "q[2]^2"}) {
    EXPECT_TRUE(g.find(label).has_value()) << label;
  }
  EXPECT_FALSE(g.find("p[1]^1").has_value());
  EXPECT_EQ(out.roles[at(g, "q[2]^3")], "q");
  EXPECT_TRUE(g.has_arc(at(g, "x"), at(g, "x'")));
  EXPECT_TRUE(g.has_arc(at(g, "q[2]^2"), at(g, "x'")));
  EXPECT_TRUE(g.has_arc(at(g, "x"), at(g, "w[2]")));
  EXPECT_FALSE(underlying_bipartition(g).has_value());
}

TEST(HittingSetGadget, InvalidInstances) {
  EXPECT_EQ(code_of([] { hitting_set_to_twopath_hull({2, {{0}, {}}, 1}); }),
            ErrorCode::InvalidInstance);
  EXPECT_EQ(code_of([] { hitting_set_to_twopath_hull({2, {{0}, {0}}, 1}); }),
            ErrorCode::InvalidInstance);
  EXPECT_EQ(code_of([] { hitting_set_to_twopath_hull({1, {{0, 3}}, 1}); }),
            ErrorCode::InvalidInstance);
}

TEST(HittingSetGadget, EquivalenceOnSmallInstances) {
  for (const auto& instance : sweeps::hitting_set_instances(2, 3, 2)) {
    const bool yes = brute_hitting_set(instance) <= instance.budget;
    const auto p3 = hitting_set_to_twopath_hull(instance);
    const auto geo = hitting_set_to_geodetic_hull(instance);
    EXPECT_TRUE(is_acyclic(p3.graph));
    EXPECT_TRUE(underlying_bipartition(p3.graph).has_value());
    EXPECT_TRUE(is_acyclic(geo.graph));
    EXPECT_EQ(p3.target_budget, instance.budget + 2);
    EXPECT_EQ(yes, solve_min(p3.graph, kP3, Parameter::Hull).value <= p3.target_budget);
    EXPECT_EQ(yes, solve_min(geo.graph, kGeo, Parameter::Hull).value <= geo.target_budget);
  }
}

// ---------------------------------------------------------- dominating set

TEST(DominatingSet, SingleEdge) {
  const DominatingSetInstance instance{2, {{0, 1}}, {true, false}, 1};
  EXPECT_EQ(brute_dominating_set(instance), 1u);
  const auto out = dominating_set_to_twopath_interval(instance);
  const auto& g = out.graph;
  EXPECT_EQ(g.n(), 4u);
  EXPECT_TRUE(g.has_arc(at(g, "z[1]"), at(g, "v[1]")));
  EXPECT_TRUE(g.has_arc(at(g, "v[1]"), at(g, "v[2]")));
  EXPECT_TRUE(g.has_arc(at(g, "v[2]"), at(g, "z[2]")));
  EXPECT_EQ(out.target_budget, 3u);
  EXPECT_EQ(brute_min(g, kP3, Parameter::Interval).value, 3u);
}

TEST(DominatingSet, Star) {
  const DominatingSetInstance instance{3, {{0, 1}, {0, 2}}, {true, false, false}, 1};
  const auto out = dominating_set_to_twopath_interval(instance);
  EXPECT_EQ(brute_min(out.graph, kP3, Parameter::Interval).value, 4u);
}

TEST(DominatingSet, Errors) {
  EXPECT_EQ(code_of([] {
              dominating_set_to_twopath_interval({2, {{0, 1}}, {true, true}, 1});
            }),
            ErrorCode::NotBipartite);
}

TEST(DominatingSet, EquivalenceAndStructureOnSmallBipartiteGraphs) {
  for (const auto& instance : sweeps::bipartite_graphs(4)) {
    const auto out = dominating_set_to_twopath_interval(instance);
    const auto m = oracle::from_graph(out.graph);
    EXPECT_TRUE(is_acyclic(out.graph));
    EXPECT_TRUE(oracle::chordal_bipartite(m));
    const auto gamma = brute_dominating_set(instance);
    const auto value = static_cast<std::size_t>(
        oracle::min_parameter(m, kP3, Parameter::Interval));
    // gamma <= k iff value <= k + n for every k, i.e. value = gamma + n.
    EXPECT_EQ(value, gamma + instance.n);
  }
}

// --------------------------------------------------------------- set cover

TEST(SetCover, SingleSetCoveringEverything) {
  const SetCoverInstance instance{3, {{0, 1, 2}}, 1};
  const auto out = set_cover_to_twopath_interval(instance);
  EXPECT_EQ(out.graph.n(), 6u);
  EXPECT_EQ(out.target_budget, 3u);
  EXPECT_EQ(brute_min(out.graph, kP3, Parameter::Interval).value, 3u);
  const auto split = recognize_split(out.graph);
  EXPECT_TRUE(split.clique.contains(at(out.graph, "v")));
  EXPECT_TRUE(split.clique.contains(at(out.graph, "f[1]")));
}

TEST(SetCover, TwoHalvesNeedTwoSets) {
  const SetCoverInstance instance{4, {{0, 1}, {2, 3}}, 1};
  EXPECT_EQ(brute_set_cover(instance), 2u);
  const auto out = set_cover_to_twopath_interval(instance);
  EXPECT_GT(brute_min(out.graph, kP3, Parameter::Interval).value, 3u);
}

TEST(SetCover, Preconditions) {
  EXPECT_EQ(code_of([] { set_cover_to_twopath_interval({3, {{0, 1, 2}}, 2}); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { set_cover_to_twopath_interval({3, {{0, 1}}, 1}); }),
            ErrorCode::PreconditionViolated);
}

TEST(SetCover, EquivalenceAndDistTwoAgreement) {
  for (const auto& instance : sweeps::set_cover_instances(4, 2)) {
    const auto out = set_cover_to_twopath_interval(instance);
    const auto& g = out.graph;
    const auto split = recognize_split(g);
    for (const auto& label : {"v", "f[1]"}) EXPECT_TRUE(split.clique.contains(at(g, label)));
    const auto best = *brute_set_cover(instance);
    const auto p3 = brute_min(g, kP3, Parameter::Interval).value;
    EXPECT_EQ(best <= instance.budget, p3 <= out.target_budget);
    EXPECT_EQ(p3, brute_min(g, kP3s, Parameter::Interval).value);
  }
}

// ------------------------------------------------------------------ oracles

TEST(SourceOracles, Examples) {
  EXPECT_EQ(brute_hitting_set({1, {{0}}, 1}), 1u);
  EXPECT_EQ(brute_set_cover({3, {{0, 1}, {2}}, 1}), 2u);
  EXPECT_FALSE(brute_set_cover({3, {{0, 1}}, 1}).has_value());
  EXPECT_EQ(brute_dominating_set({2, {{0, 1}}, {true, false}, 1}), 1u);
}

TEST(SourceOracles, CapIsEnforced) {
  HittingSetInstance big{21, {}, 1};
  for (std::size_t e = 0; e < 21; ++e) big.sets.push_back({e});
  EXPECT_EQ(code_of([&] { brute_hitting_set(big); }), ErrorCode::OracleCapExceeded);
}

}  // namespace
