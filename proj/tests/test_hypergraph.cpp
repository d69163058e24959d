#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "family.hpp"
#include "oracles.hpp"
#include "xmg/error.hpp"
#include "xmg/hom.hpp"
#include "xmg/hullcover.hpp"
#include "xmg/hypergraph.hpp"

namespace xmg {
namespace {

Hypergraph pair_edge() { return make_hypergraph(2, {{0, 1}}); }
Hypergraph big_edge() { return make_hypergraph(4, {{0, 1, 2, 3}}); }

std::vector<VertexId> boundary_of(const XMGraph& g, ArcId a) {
  return {g.boundary(a).begin(), g.boundary(a).end()};
}

TEST(Hypergraph, CanonicalizesEdges) {
  Hypergraph h = make_hypergraph(3, {{2, 0, 2}, {}});
  EXPECT_EQ(h.phi(0), (VertexSet{0, 2}));
  EXPECT_TRUE(h.phi(1).empty());
  EXPECT_EQ(h.max_edge_size(), 2u);
  EXPECT_THROW(make_hypergraph(2, {{0, 5}}), LawViolation);
}

TEST(Hypergraph, MorphismsUseDirectImage) {
  Hypergraph e2 = hyper_e(2);
  Hypergraph e1 = hyper_e(1);
  EXPECT_TRUE(is_hyper_morphism(e2, e1, std::vector<VertexId>{0, 0}, std::vector<EdgeId>{0}));
  EXPECT_FALSE(is_hyper_morphism(e1, e2, std::vector<VertexId>{0}, std::vector<EdgeId>{0}));
  EXPECT_THROW(make_hyper_morphism(e1, e2, {0}, {0}), LawViolation);
  EXPECT_EQ(hyper_hom_enumerate(e2, e2).size(), 2u);
  EXPECT_TRUE(hyper_is_epi(make_hyper_morphism(e2, e1, {0, 0}, {0})));
}

TEST(Interpretation, Objects) {
  Hypergraph v = hyper_point();
  EXPECT_EQ(v.num_vertices(), 1u);
  EXPECT_EQ(v.num_edges(), 0u);
  Hypergraph a = hyper_full_edge(3);
  EXPECT_EQ(a.num_vertices(), 3u);
  ASSERT_EQ(a.num_edges(), 1u);
  EXPECT_EQ(a.phi(0), (VertexSet{0, 1, 2}));
  EXPECT_EQ(hyper_e(0).phi(0), VertexSet{});
}

TEST(Nerve, PairEdgeOverThreePoints) {
  ContextPtr s3 = aut_context(3);
  HyperNerve n = nerve_hyper(s3, pair_edge());
  ASSERT_EQ(n.graph.num_arcs(), 6u);
  std::set<std::vector<VertexId>> maps;
  for (ArcId a = 0; a < 6; ++a) maps.insert(boundary_of(n.graph, a));
  EXPECT_EQ(maps, (std::set<std::vector<VertexId>>{
                      {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  HyperRealization r = realize_hyper(n.graph);
  EXPECT_EQ(r.hyper.num_vertices(), 2u);
  ASSERT_EQ(r.hyper.num_edges(), 2u);
  EXPECT_EQ(r.hyper.phi(0), (VertexSet{0, 1}));
  EXPECT_EQ(r.hyper.phi(1), (VertexSet{0, 1}));
  // One orbit holds the maps with a single 1, the other those with two.
  for (ArcId a = 0; a < 6; ++a) {
    const auto f = boundary_of(n.graph, a);
    const std::size_t ones = std::count(f.begin(), f.end(), VertexId{1});
    for (ArcId b = 0; b < 6; ++b) {
      const auto g = boundary_of(n.graph, b);
      EXPECT_EQ(r.edge_of_arc[a] == r.edge_of_arc[b],
                ones == static_cast<std::size_t>(std::count(g.begin(), g.end(), VertexId{1})));
    }
  }
  HypergraphMorphism eps = counit_hyper(s3, pair_edge());
  EXPECT_EQ(eps.emap, (std::vector<EdgeId>{0, 0}));
  EXPECT_TRUE(hyper_is_epi(eps));
}

TEST(Nerve, OversizedEdgeHasNoArcs) {
  ContextPtr s3 = aut_context(3);
  EXPECT_EQ(nerve_hyper(s3, big_edge()).graph.num_arcs(), 0u);
  HypergraphMorphism eps = counit_hyper(s3, big_edge());
  EXPECT_EQ(eps.source.num_edges(), 0u);
  EXPECT_EQ(eps.vmap, (std::vector<VertexId>{0, 1, 2, 3}));
  EXPECT_FALSE(hyper_is_epi(eps));
  EXPECT_EQ(nerve_hyper(s3, make_hypergraph(3, {})).graph.num_arcs(), 0u);
}

TEST(Nerve, RequiresFullAutomorphisms) {
  EXPECT_THROW(nerve_hyper(idempotent_context(2), pair_edge()), MonoidNotAut);
  EXPECT_THROW(realize_hyper(terminal_graph(idempotent_context(2))), MonoidNotAut);
}

TEST(Realization, RepresentableAndArcless) {
  for (std::size_t n = 1; n <= 3; ++n) {
    ContextPtr ctx = aut_context(n);
    Hypergraph r = realize_hyper(representable(ctx, Sort::Arc)).hyper;
    EXPECT_EQ(r, hyper_full_edge(n));
    EXPECT_EQ(realize_hyper(discrete_graph(ctx, 2)).hyper.num_edges(), 0u);
  }
}

TEST(Counit, EpiExactlyWhenEdgesFitInX) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 3; ++n) {
    ContextPtr ctx = aut_context(n);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t nv = 1 + rng() % 4;
      std::vector<VertexSet> phi(rng() % 4);
      for (auto& e : phi) {
        for (VertexId v = 0; v < nv; ++v) {
          if (rng() % 2) e.push_back(v);
        }
        if (e.empty() && rng() % 3) e.push_back(0);
      }
      Hypergraph h = make_hypergraph(nv, phi);
      const bool fits = h.num_edges() == 0 || h.max_edge_size() <= n;
      const bool no_empty =
          std::none_of(phi.begin(), phi.end(), [](const VertexSet& e) { return e.empty(); });
      // An empty edge is never an image of X -> H(V) once X is inhabited.
      EXPECT_EQ(hyper_is_epi(counit_hyper(ctx, h)), fits && no_empty);
    }
  }
}

TEST(Coreflection, Examples) {
  Coreflection c = coreflect_k(big_edge(), 3);
  EXPECT_EQ(c.core.num_vertices(), 4u);
  EXPECT_EQ(c.core.num_edges(), 0u);
  Hypergraph h = make_hypergraph(3, {{0, 1}, {}, {2}});
  EXPECT_EQ(coreflect_k(h, 2).core, h);
  Coreflection z = coreflect_k(h, 0);
  ASSERT_EQ(z.core.num_edges(), 1u);
  EXPECT_EQ(z.inclusion.emap, std::vector<EdgeId>{1});
}

// Every map from a k-bounded T into H factors uniquely through r(H).
TEST(Coreflection, CouniversalByCounting) {
  const auto family = testing::hyper_family(2, 2);
  for (std::size_t k = 0; k <= 2; ++k) {
    for (const Hypergraph& h : family) {
      Coreflection c = coreflect_k(h, k);
      for (const Hypergraph& t : family) {
        if (t.num_edges() > 0 && t.max_edge_size() > k) continue;
        EXPECT_EQ(hyper_hom_enumerate(t, c.core).size(), hyper_hom_enumerate(t, h).size());
      }
    }
  }
}

TEST(HyperInjective, Examples) {
  EXPECT_TRUE(hyper_is_injective(make_hypergraph(2, {{}, {0}, {1}, {0, 1}})));
  HyperInjectivity r = hyper_injectivity(make_hypergraph(2, {{0}, {1}, {0, 1}}));
  EXPECT_FALSE(r.injective);
  ASSERT_TRUE(r.unrealized.has_value());
  EXPECT_TRUE(r.unrealized->empty());
  EXPECT_FALSE(hyper_is_injective(Hypergraph()));
}

// Injective Q has an injective nerve over X = Q(V). The converse misses the
// empty edge, which no map out of an inhabited X can reach.
TEST(HyperInjective, NerveTransfer) {
  for (const Hypergraph& q : testing::hyper_family(3, 8)) {
    if (q.num_vertices() == 0) continue;
    ContextPtr ctx = aut_context(q.num_vertices());
    const bool nerve_inj = is_injective(nerve_hyper(ctx, q).graph);
    if (hyper_is_injective(q)) EXPECT_TRUE(nerve_inj);
    const bool has_empty = std::any_of(q.phi_table().begin(), q.phi_table().end(),
                                       [](const VertexSet& e) { return e.empty(); });
    if (nerve_inj && has_empty) EXPECT_TRUE(hyper_is_injective(q));
  }
  Hypergraph no_empty = make_hypergraph(2, {{0}, {1}, {0, 1}});
  EXPECT_TRUE(is_injective(nerve_hyper(aut_context(2), no_empty).graph));
  EXPECT_FALSE(hyper_is_injective(no_empty));
}

TEST(HyperInjective, AgreesWithExtensionOracle) {
  auto objects = testing::hyper_family(2, 2);
  const auto monos = testing::hyper_monos_among(objects);
  for (const Hypergraph& q : objects) {
    EXPECT_EQ(hyper_is_injective(q), !testing::hyper_extension_failure(q, monos).has_value());
  }
}

TEST(HyperProjective, Modes) {
  Hypergraph edgeless = make_hypergraph(3, {});
  EXPECT_TRUE(hyper_is_projective(edgeless));
  EXPECT_TRUE(hyper_is_projective(edgeless, 2));
  EXPECT_FALSE(hyper_is_projective(hyper_e(2)));
  EXPECT_TRUE(hyper_is_projective(hyper_e(2), 2));
  EXPECT_FALSE(hyper_is_projective(make_hypergraph(3, {{0, 1}, {1, 2}}), 2));
  EXPECT_FALSE(hyper_is_projective(make_hypergraph(3, {{0}}), 2));
  EXPECT_THROW(hyper_is_projective(hyper_e(3), 2), NotKBounded);
}

// E_3 -> E_1 is epi but there is no morphism E_2 -> E_3 at all, so
// E_2 -> E_1 does not lift.
TEST(HyperProjective, EdgeHasNoLiftThroughLargerEdge) {
  Hypergraph e2 = hyper_e(2), e3 = hyper_e(3), e1 = hyper_e(1);
  HypergraphMorphism collapse = make_hyper_morphism(e3, e1, {0, 0, 0}, {0});
  EXPECT_TRUE(hyper_is_epi(collapse));
  EXPECT_TRUE(hyper_hom_enumerate(e2, e3).empty());
  auto failure = testing::hyper_lifting_failure(e2, {collapse});
  ASSERT_TRUE(failure.has_value());
  EXPECT_EQ(failure->target, e1);
}

TEST(Separators, DistinguishParallelPairs) {
  const auto family = testing::hyper_family(2, 2);
  for (const Hypergraph& s : family) {
    for (const Hypergraph& t : family) {
      const auto homs = hyper_hom_enumerate(s, t);
      for (std::size_t i = 0; i < homs.size(); ++i) {
        for (std::size_t j = 0; j < homs.size(); ++j) {
          auto sep = find_separator(homs[i], homs[j]);
          ASSERT_EQ(sep.has_value(), i != j);
          if (!sep) continue;
          EXPECT_NE(hyper_compose(homs[i], sep->probe), hyper_compose(homs[j], sep->probe));
          if (!sep->on_vertex) EXPECT_LE(sep->probe_size, s.max_edge_size());
        }
      }
    }
  }
}

TEST(Naturality, CounitAndUnit) {
  for (std::size_t n = 1; n <= 3; ++n) {
    ContextPtr ctx = aut_context(n);
    const auto family = testing::hyper_family(2, 2);
    for (const Hypergraph& s : family) {
      for (const Hypergraph& t : family) {
        for (const HypergraphMorphism& f : hyper_hom_enumerate(s, t)) {
          HypergraphMorphism rnf = realize_hyper_map(nerve_hyper_map(ctx, f));
          EXPECT_EQ(hyper_compose(counit_hyper(ctx, t), rnf),
                    hyper_compose(f, counit_hyper(ctx, s)));
        }
      }
    }
    for (const XMGraph& g : testing::exhaustive_family(ctx, 2, 3)) {
      GraphMorphism eta = unit_hyper(g);
      for (VertexId v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(eta.vmap[v], v);
      for (const GraphMorphism& f : hom_enumerate(g, g)) {
        GraphMorphism nrf = nerve_hyper_map(ctx, realize_hyper_map(f));
        EXPECT_EQ(compose(nrf, eta), compose(eta, f));
      }
    }
  }
}

}  // namespace
}  // namespace xmg
