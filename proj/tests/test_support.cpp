#include <gtest/gtest.h>

#include <random>

#include "family.hpp"
#include "oracles.hpp"
#include "xmg/hom.hpp"
#include "xmg/hullcover.hpp"

// The generators and oracles other suites lean on, checked against counts
// worked out by hand.

namespace xmg::testing {
namespace {

TEST(ArcActions, ClassCountsByHand) {
  // Orbit decompositions: S2 into sizes 1 and 2; S3 into 1, 2, 3, 6; an
  // idempotent is fixed by the partition of n into fibre sizes.
  const std::vector<std::pair<ContextPtr, std::vector<std::size_t>>> cases{
      {trivial_context(0), {1, 1, 1, 1, 1}},
      {s2_on(2), {1, 1, 2, 2, 3}},
      {s3_on(3), {1, 1, 2, 3, 4}},
      {idempotent_context(1), {1, 1, 2, 3, 5}},
  };
  for (const auto& [ctx, counts] : cases) {
    for (std::size_t n = 0; n < counts.size(); ++n) {
      EXPECT_EQ(arc_actions(*ctx, n).size(), counts[n]) << "n = " << n;
    }
  }
}

TEST(ArcActions, TablesObeyTheLaws) {
  for (const auto& [name, ctx] : count_contexts()) {
    for (std::size_t n = 0; n <= 3; ++n) {
      for (const auto& t : arc_actions(*ctx, n)) {
        const std::size_t w = ctx->elements();
        for (ArcId a = 0; a < n; ++a) {
          EXPECT_EQ(t[a * w + ctx->identity()], a) << name;
          for (Elem m = 0; m < w; ++m) {
            for (Elem m2 = 0; m2 < w; ++m2) {
              EXPECT_EQ(t[t[a * w + m] * w + m2], t[a * w + ctx->mul(m2, m)]) << name;
            }
          }
        }
      }
    }
  }
}

TEST(ExhaustiveFamily, SmallCounts) {
  // Without points or symmetry a graph is just its two counts.
  EXPECT_EQ(exhaustive_family(trivial_context(0), 2, 2).size(), 9u);
  // Quivers: empty; a vertex with or without a loop.
  EXPECT_EQ(exhaustive_family(trivial_context(2), 1, 1).size(), 3u);
  // Plus two vertices with nothing, a loop, or an edge between them.
  EXPECT_EQ(exhaustive_family(trivial_context(2), 2, 1).size(), 6u);
}

TEST(ExhaustiveFamily, PairwiseNonIsomorphic) {
  for (const auto& [name, ctx] : family_contexts()) {
    const auto family = tiny_family(ctx);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        EXPECT_FALSE(isomorphic(family[i], family[j])) << name << " " << i << " " << j;
      }
    }
  }
}

TEST(RandomGraphs, ValidAndBounded) {
  std::mt19937_64 rng(11);
  for (const auto& [name, ctx] : family_contexts()) {
    for (int i = 0; i < 10; ++i) {
      XMGraph g = random_graph(ctx, rng, 1 << 12);
      EXPECT_LE(inj_arc_count(g), std::uint64_t{1} << 12) << name;
      EXPECT_NO_THROW(validate_graph(ctx, g.num_vertices(), g.num_arcs(), g.incidence_table(),
                                     g.action_table()));
      GraphMorphism p = random_projection(g, rng);
      EXPECT_TRUE(morphism_classify(p).epi) << name;
      EXPECT_TRUE(isomorphic(g, g));
    }
  }
}

TEST(Isomorphism, OverFixedPart) {
  ContextPtr q = trivial_context(2);
  // 0 -> 1 plus an extra loop at 0, against the same with the loop at 1.
  XMGraph a = validate_graph(q, 2, 2, {0, 1, 0, 0}, {0, 1});
  XMGraph b = validate_graph(q, 2, 2, {0, 1, 1, 1}, {0, 1});
  EXPECT_FALSE(isomorphic(a, b));
  XMGraph c = validate_graph(q, 2, 2, {0, 1, 0, 0}, {0, 1});
  EXPECT_TRUE(isomorphic_over(a, c, 2, 1));
  XMGraph loops = validate_graph(q, 2, 2, {0, 0, 1, 1}, {0, 1});
  XMGraph swapped = validate_graph(q, 2, 2, {1, 1, 0, 0}, {0, 1});
  EXPECT_TRUE(isomorphic(loops, swapped));
  EXPECT_TRUE(isomorphic_over(loops, swapped, 2, 0));
  EXPECT_FALSE(isomorphic_over(loops, swapped, 2, 2));
}

TEST(Oracles, ExtensionAndLiftingOnKnownObjects) {
  ContextPtr q = trivial_context(2);
  const auto family = tiny_family(q);
  const auto monos = monos_among(family);
  const auto epis = epis_among(family);
  EXPECT_FALSE(extension_failure(terminal_graph(q), monos).has_value());
  auto fail = extension_failure(discrete_graph(q, 1), monos);
  ASSERT_TRUE(fail.has_value());
  EXPECT_TRUE(morphism_classify(fail->mono).mono);
  EXPECT_FALSE(lifting_failure(representable(q, Sort::Vertex), epis).has_value());
  auto lift = lifting_failure(terminal_graph(q), epis);
  ASSERT_TRUE(lift.has_value());
  EXPECT_TRUE(morphism_classify(lift->epi).epi);
}

TEST(Oracles, EssentialExtensionsOfAPoint) {
  ContextPtr c = trivial_context(1);
  ExtensionSearch s = essential_extensions(discrete_graph(c, 1), 4);
  EXPECT_FALSE(s.truncated);
  // The point itself and the point with one loop; two loops can be merged.
  ASSERT_EQ(s.essential.size(), 2u);
  EXPECT_EQ(s.essential[1], terminal_graph(c));
}

TEST(HyperFamily, CountsByHand) {
  // Up to two vertices and one edge: no vertices (none, or the empty edge),
  // one vertex (none, empty, {0}), two vertices (none, empty, {0}, {0,1}).
  EXPECT_EQ(hyper_family(2, 1).size(), 9u);
  EXPECT_EQ(pi_family(2, 1, 1).size(), 3u);
}

TEST(Splitting, SectionsExistExactlyWhenExpected) {
  Hypergraph e2 = hyper_e(2);
  HypergraphMorphism fold = make_hyper_morphism(e2, hyper_e(1), {0, 0}, {0});
  EXPECT_FALSE(hyper_splits(fold));
  Hypergraph two_points = make_hypergraph(2, {});
  EXPECT_TRUE(hyper_splits(make_hyper_morphism(two_points, hyper_point(), {0, 0}, {})));
  PiGraph loop = make_pigraph(2, 1, {{0, 0}});
  PiGraph edge = make_pigraph(2, 2, {{0, 1}});
  EXPECT_FALSE(pi_splits(make_pi_morphism(edge, loop, {0, 0}, {0})));
}

}  // namespace
}  // namespace xmg::testing
