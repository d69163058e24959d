#include <gtest/gtest.h>

#include <algorithm>

#include "family.hpp"
#include "oracles.hpp"
#include "xmg/error.hpp"
#include "xmg/hom.hpp"
#include "xmg/hullcover.hpp"
#include "xmg/pigraph.hpp"

namespace xmg {
namespace {

std::size_t multichoose(std::size_t n, std::size_t k) {
  // C(n + k - 1, k)
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n + k - i) / i;
  return n == 0 ? (k == 0) : r;
}

TEST(SymPower, Counts) {
  EXPECT_EQ(sym_power(2, 2), (std::vector<Multiset>{{0, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(sym_power(2, 3).size(), 4u);
  for (std::size_t y = 0; y <= 4; ++y) {
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(sym_power(y, k).size(), multichoose(y, k));
  }
}

TEST(SymPower, MapsAndUnit) {
  const std::vector<std::size_t> constant{0, 0, 0};
  for (const Multiset& q : sym_power(3, 2)) EXPECT_EQ(sym_power_map(q, constant), (Multiset{0, 0}));
  const std::vector<std::size_t> swap{1, 0};
  EXPECT_EQ(sym_power_map({0, 0, 1}, swap), (Multiset{0, 1, 1}));
  EXPECT_EQ(sym_unit(2, 3), (Multiset{2, 2, 2}));
  EXPECT_EQ(canonical({2, 0, 1, 0}), (Multiset{0, 0, 1, 2}));
}

TEST(PiGraph, Validation) {
  PiGraph p = make_pigraph(2, 2, {{1, 0}});
  EXPECT_EQ(p.phi(0), (Multiset{0, 1}));
  EXPECT_THROW(make_pigraph(2, 2, {{0}}), LawViolation);
  EXPECT_THROW(make_pigraph(2, 2, {{0, 2}}), LawViolation);
  PiGraph loop = make_pigraph(2, 1, {{0, 0}});
  EXPECT_TRUE(is_pi_morphism(p, loop, std::vector<VertexId>{0, 0}, std::vector<EdgeId>{0}));
  EXPECT_FALSE(is_pi_morphism(loop, p, std::vector<VertexId>{0}, std::vector<EdgeId>{0}));
}

TEST(PiNerve, SingleEdge) {
  ContextPtr s2 = aut_context(2);
  PiGraph p = make_pigraph(2, 2, {{0, 1}});
  PiNerve n = nerve_pi(s2, p);
  ASSERT_EQ(n.graph.num_arcs(), 2u);
  EXPECT_EQ(n.graph.act(0, 1), 1u);
  PiRealization r = realize_pi(n.graph);
  EXPECT_EQ(r.pi, p);
  EXPECT_EQ(r.edge_of_arc, (std::vector<EdgeId>{0, 0}));
}

TEST(PiNerve, LoopIsFixed) {
  ContextPtr s2 = aut_context(2);
  PiNerve n = nerve_pi(s2, make_pigraph(2, 1, {{0, 0}}));
  ASSERT_EQ(n.graph.num_arcs(), 1u);
  EXPECT_EQ(n.graph.act(0, 1), 0u);
  EXPECT_EQ(nerve_pi(s2, make_pigraph(2, 3, {})).graph.num_arcs(), 0u);
}

TEST(PiNerve, Errors) {
  EXPECT_THROW(nerve_pi(idempotent_context(2), make_pigraph(2, 1, {{0, 0}})), MonoidNotAut);
  EXPECT_THROW(nerve_pi(aut_context(3), make_pigraph(2, 1, {{0, 0}})), Error);
}

// The nerve's arcs over an edge are exactly the orderings of its label.
TEST(PiNerve, ArcCountsArePermutationCounts) {
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    ContextPtr ctx = aut_context(arity);
    for (const PiGraph& p : testing::pi_family(arity, 3, 2)) {
      PiNerve n = nerve_pi(ctx, p);
      std::size_t expected = 0;
      for (const Multiset& q : p.phi_table()) {
        Multiset perm = q;
        std::size_t orderings = 0;
        do ++orderings;
        while (std::next_permutation(perm.begin(), perm.end()));
        expected += orderings;
      }
      EXPECT_EQ(n.graph.num_arcs(), expected);
    }
  }
}

TEST(PiNerve, FullAndFaithful) {
  for (std::size_t arity = 2; arity <= 3; ++arity) {
    ContextPtr ctx = aut_context(arity);
    const auto family = testing::pi_family(arity, 2, 2);
    for (const PiGraph& s : family) {
      for (const PiGraph& t : family) {
        const auto homs = pi_hom_enumerate(s, t);
        const XMGraph ns = nerve_pi(ctx, s).graph;
        const XMGraph nt = nerve_pi(ctx, t).graph;
        const auto ghoms = hom_enumerate(ns, nt);
        ASSERT_EQ(homs.size(), ghoms.size());
        std::vector<GraphMorphism> images;
        for (const PiMorphism& f : homs) images.push_back(nerve_pi_map(ctx, f));
        for (const GraphMorphism& g : ghoms) {
          EXPECT_EQ(std::count(images.begin(), images.end(), g), 1);
        }
      }
    }
  }
}

TEST(PiUnit, EpiAndBijectiveOnVertices) {
  ContextPtr ctx = aut_context(2);
  for (const XMGraph& g : testing::exhaustive_family(ctx, 3, 4)) {
    GraphMorphism eta = unit_pi(g);
    MorphismKind k = morphism_classify(eta);
    EXPECT_TRUE(k.epi) << testing::describe(g);
    for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(eta.vmap[v], v);
    EXPECT_EQ(eta.target.num_vertices(), g.num_vertices());
  }
}

TEST(PiCounit, IsoOnNerves) {
  ContextPtr ctx = aut_context(2);
  for (const PiGraph& p : testing::pi_family(2, 3, 2)) {
    PiMorphism eps = counit_pi(ctx, p);
    EXPECT_TRUE(pi_is_mono(eps) && pi_is_epi(eps));
  }
}

TEST(PiDeciders, Examples) {
  ContextPtr s2 = aut_context(2);
  // Every multiset over two vertices.
  PiGraph full = make_pigraph(2, 2, {{0, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(pi_deciders(s2, full).injective);
  PiGraph free = make_pigraph(2, 5, {{0, 1}, {2, 3}});
  EXPECT_TRUE(pi_deciders(s2, free).projective);
  PiGraph loop = make_pigraph(2, 1, {{0, 0}});
  EXPECT_FALSE(pi_deciders(s2, loop).projective);
  EXPECT_TRUE(pi_deciders(s2, loop).injective);
}

TEST(PiDeciders, AgreeWithOracles) {
  ContextPtr ctx = aut_context(2);
  const auto family = testing::pi_family(2, 2, 2);
  const auto monos = testing::pi_monos_among(family);
  const auto epis = testing::pi_epis_among(family);
  for (const PiGraph& q : family) {
    PiDeciders d = pi_deciders(ctx, q);
    EXPECT_EQ(d.injective, !testing::pi_extension_failure(q, monos).has_value());
    if (!d.projective) {
      // The cover of the nerve, realized, gives an epi onto q with no section.
      PiMorphism onto = realize_pi_map(projective_cover(nerve_pi(ctx, q).graph).projection);
      PiMorphism split{onto.source, q, onto.vmap, {}};
      PiMorphism eps = counit_pi(ctx, q);
      for (EdgeId e : onto.emap) split.emap.push_back(eps.emap[e]);
      EXPECT_TRUE(pi_is_epi(split));
      EXPECT_FALSE(testing::pi_splits(split));
    } else {
      EXPECT_FALSE(testing::pi_lifting_failure(q, epis).has_value());
    }
  }
}

}  // namespace
}  // namespace xmg
