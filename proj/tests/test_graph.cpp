#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <tuple>

#include "family.hpp"
#include "xmg/error.hpp"
#include "xmg/graph.hpp"
#include "xmg/hom.hpp"

namespace xmg {
namespace {

constexpr Elem kSigma = 1;

// Naturality checked directly from the tables.
bool squares_commute(const XMGraph& g, const XMGraph& h, const std::vector<VertexId>& vm,
                     const std::vector<ArcId>& am) {
  const Context& c = *g.context();
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    for (Point x = 0; x < c.points(); ++x) {
      if (vm[g.incidence(a, x)] != h.incidence(am[a], x)) return false;
    }
    for (Elem m = 0; m < c.elements(); ++m) {
      if (am[g.act(a, m)] != h.act(am[a], m)) return false;
    }
  }
  return true;
}

// Every pair of functions, filtered by the squares.
std::size_t brute_hom_count(const XMGraph& g, const XMGraph& h) {
  std::vector<VertexId> vm(g.num_vertices());
  std::vector<ArcId> am(g.num_arcs());
  std::size_t count = 0;
  std::function<void(std::size_t)> arcs = [&](std::size_t i) {
    if (i == am.size()) {
      count += squares_commute(g, h, vm, am);
      return;
    }
    for (ArcId b = 0; b < h.num_arcs(); ++b) {
      am[i] = b;
      arcs(i + 1);
    }
  };
  std::function<void(std::size_t)> verts = [&](std::size_t i) {
    if (i == vm.size()) return arcs(0);
    for (VertexId w = 0; w < h.num_vertices(); ++w) {
      vm[i] = w;
      verts(i + 1);
    }
  };
  verts(0);
  return count;
}

TEST(Graph, InitialAndTerminalValidate) {
  for (const auto& [name, ctx] : testing::count_contexts()) {
    XMGraph i = initial_graph(ctx);
    EXPECT_TRUE(i.is_initial());
    XMGraph t = terminal_graph(ctx);
    EXPECT_EQ(t.num_vertices(), 1u);
    EXPECT_EQ(t.num_arcs(), 1u);
    EXPECT_NO_THROW(validate_graph(ctx, 1, 1, t.incidence_table(), t.action_table())) << name;
  }
}

TEST(Graph, IncidenceCompatibilityWitness) {
  ContextPtr s2 = aut_context(2);
  const std::vector<VertexId> inc{0, 1, 0, 0};
  const std::vector<ArcId> act{0, 1, 1, 0};
  try {
    validate_graph(s2, 2, 2, inc, act);
    FAIL() << "accepted";
  } catch (const LawViolation& e) {
    ASSERT_EQ(e.law(), Law::IncidenceCompat);
    const auto& w = e.witness();
    const ArcId moved = act[w[0] * 2 + w[1]];
    EXPECT_NE(inc[moved * 2 + w[2]], inc[w[0] * 2 + s2->act(w[2], w[1])]);
  }
}

TEST(Graph, UnitAndCompositionWitnesses) {
  ContextPtr s2 = testing::s2_on(0);
  try {
    validate_graph(s2, 0, 2, {}, {1, 1, 0, 0});
    FAIL();
  } catch (const LawViolation& e) {
    EXPECT_EQ(e.law(), Law::UnitLaw);
    EXPECT_EQ(e.witness(), std::vector<std::size_t>{0});
  }
  // Idempotent z sending a.z = b but b.z = a: (a.z).z = a while a.(z z) = b.
  ContextPtr z = idempotent_context(0);
  try {
    validate_graph(z, 0, 2, {}, {0, 1, 1, 0});
    FAIL();
  } catch (const LawViolation& e) {
    EXPECT_EQ(e.law(), Law::CompositionLaw);
  }
  EXPECT_THROW(validate_graph(s2, 1, 1, {}, {0}), LawViolation);
}

TEST(Representable, VertexAndArcShapes) {
  for (const auto& [name, ctx] : testing::count_contexts()) {
    XMGraph v = representable(ctx, Sort::Vertex);
    EXPECT_EQ(v.num_vertices(), 1u);
    EXPECT_EQ(v.num_arcs(), 0u);
    XMGraph a = representable(ctx, Sort::Arc);
    EXPECT_EQ(a.num_vertices(), ctx->points()) << name;
    EXPECT_EQ(a.num_arcs(), ctx->elements()) << name;
    EXPECT_NO_THROW(validate_graph(ctx, a.num_vertices(), a.num_arcs(), a.incidence_table(),
                                   a.action_table()))
        << name;
    for (Elem m = 0; m < ctx->elements(); ++m) {
      for (Point x = 0; x < ctx->points(); ++x) EXPECT_EQ(a.incidence(m, x), ctx->act(x, m));
      for (Elem n = 0; n < ctx->elements(); ++n) EXPECT_EQ(a.act(m, n), ctx->mul(n, m));
    }
  }
}

TEST(Representable, UndirectedEdge) {
  XMGraph a = representable(aut_context(2), Sort::Arc);
  EXPECT_EQ(std::vector<VertexId>(a.boundary(0).begin(), a.boundary(0).end()),
            (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(std::vector<VertexId>(a.boundary(kSigma).begin(), a.boundary(kSigma).end()),
            (std::vector<VertexId>{1, 0}));
  EXPECT_EQ(a.act(0, kSigma), kSigma);
  EXPECT_EQ(a.act(kSigma, kSigma), 0u);
  XMGraph a3 = representable(aut_context(3), Sort::Arc);
  EXPECT_EQ(a3.num_vertices(), 3u);
  EXPECT_EQ(a3.num_arcs(), 6u);
}

TEST(Morphism, RejectsBrokenSquares) {
  ContextPtr s2 = aut_context(2);
  XMGraph a = representable(s2, Sort::Arc);
  EXPECT_NO_THROW(make_morphism(a, a, {1, 0}, {1, 0}));
  EXPECT_THROW(make_morphism(a, a, {0, 1}, {1, 0}), LawViolation);
  EXPECT_THROW(make_morphism(a, a, {0, 0}, {0, 0}), LawViolation);
  EXPECT_THROW(make_morphism(a, representable(aut_context(3), Sort::Arc), {0, 1}, {0, 1}),
               ContextMismatch);
}

TEST(Morphism, ClassifyArc) {
  ContextPtr s2 = aut_context(2);
  XMGraph a = representable(s2, Sort::Arc);
  EXPECT_EQ(classify_arc(a, 0), identity_morphism(a));
  XMGraph t = terminal_graph(s2);
  GraphMorphism to_one = classify_arc(t, 0);
  EXPECT_EQ(to_one.vmap, (std::vector<VertexId>{0, 0}));
  EXPECT_EQ(to_one.amap, (std::vector<ArcId>{0, 0}));
  EXPECT_THROW(classify_arc(t, 1), UnknownElement);
  EXPECT_THROW(classify_vertex(t, 4), UnknownElement);
}

TEST(Morphism, ClassifyArcWithCollapsingOrbit) {
  ContextPtr s2 = aut_context(2);
  // One arc fixed by sigma, a loop at vertex 0.
  XMGraph g = validate_graph(s2, 1, 1, {0, 0}, {0, 0});
  GraphMorphism f = classify_arc(g, 0);
  EXPECT_EQ(f.amap, (std::vector<ArcId>{0, 0}));
  EXPECT_TRUE(squares_commute(f.source, f.target, f.vmap, f.amap));
}

TEST(Hom, YonedaCounts) {
  for (const auto& [name, ctx] : testing::family_contexts()) {
    XMGraph v = representable(ctx, Sort::Vertex);
    XMGraph a = representable(ctx, Sort::Arc);
    for (const XMGraph& h : testing::exhaustive_family(ctx, 2, 3)) {
      EXPECT_EQ(count_homs(v, h), h.num_vertices()) << name;
      ASSERT_EQ(count_homs(a, h), h.num_arcs()) << name << " " << testing::describe(h);
      std::vector<GraphMorphism> all = hom_enumerate(a, h);
      for (ArcId b = 0; b < h.num_arcs(); ++b) {
        GraphMorphism c = classify_arc(h, b);
        EXPECT_EQ(c.amap[h.context()->identity()], b);
        EXPECT_NE(std::find(all.begin(), all.end(), c), all.end());
      }
    }
  }
}

TEST(Hom, SelfMapsOfUndirectedEdge) {
  XMGraph a = representable(aut_context(2), Sort::Arc);
  EXPECT_EQ(hom_enumerate(a, a).size(), 2u);
  EXPECT_EQ(brute_hom_count(a, a), 2u);
}

TEST(Hom, AgreesWithBruteForce) {
  for (const auto& [name, ctx] : testing::family_contexts()) {
    const auto family = testing::tiny_family(ctx);
    for (const XMGraph& g : family) {
      for (const XMGraph& h : family) {
        const auto list = hom_enumerate(g, h);
        ASSERT_EQ(list.size(), brute_hom_count(g, h)) << name;
        EXPECT_EQ(count_homs(g, h), list.size());
        for (std::size_t i = 1; i < list.size(); ++i) {
          EXPECT_TRUE(std::tie(list[i - 1].vmap, list[i - 1].amap) <
                      std::tie(list[i].vmap, list[i].amap));
        }
        for (const GraphMorphism& f : list) EXPECT_TRUE(squares_commute(g, h, f.vmap, f.amap));
      }
    }
  }
}

TEST(Hom, ExtendingRespectsFixedImages) {
  ContextPtr s2 = aut_context(2);
  XMGraph a = representable(s2, Sort::Arc);
  XMGraph two = coproduct(s2, {a, a}).object;
  std::vector<VertexId> fv(2, npos);
  std::vector<ArcId> fa{2, npos};
  std::size_t seen = 0;
  for_each_hom_extending(a, two, fv, fa, [&](auto vm, auto am) {
    EXPECT_EQ(am[0], 2u);
    EXPECT_EQ(vm[0], 2u);
    ++seen;
    return true;
  });
  EXPECT_EQ(seen, 1u);
  EXPECT_THROW(hom_enumerate(a, representable(aut_context(3), Sort::Arc)), ContextMismatch);
}

TEST(Classify, FoldAndIdentity) {
  ContextPtr s2 = aut_context(2);
  XMGraph v = representable(s2, Sort::Vertex);
  MorphismKind id = morphism_classify(identity_morphism(v));
  EXPECT_TRUE(id.mono && id.epi && id.iso);
  Coproduct vv = coproduct(s2, {v, v});
  MorphismKind fold = morphism_classify(make_morphism(vv.object, v, {0, 0}, {}));
  EXPECT_TRUE(fold.epi);
  EXPECT_FALSE(fold.mono);
  EXPECT_FALSE(fold.iso);
}

TEST(Coproduct, CountsAndUniversalProperty) {
  ContextPtr s2 = aut_context(2);
  XMGraph v = representable(s2, Sort::Vertex);
  XMGraph a = representable(s2, Sort::Arc);
  EXPECT_TRUE(coproduct(s2, {}).object.is_initial());
  Coproduct va = coproduct(s2, {v, a});
  EXPECT_EQ(va.object.num_vertices(), 3u);
  EXPECT_EQ(va.object.num_arcs(), 2u);
  for (const auto& inj : va.injections) EXPECT_TRUE(morphism_classify(inj).mono);
  // hom(V + A, H) = hom(V, H) x hom(A, H).
  for (const XMGraph& h : testing::tiny_family(s2)) {
    EXPECT_EQ(count_homs(va.object, h), count_homs(v, h) * count_homs(a, h));
  }
  EXPECT_THROW(coproduct(s2, {representable(aut_context(3), Sort::Vertex)}), ContextMismatch);
}

TEST(Morphism, ComposeIsAssociativeOnHoms) {
  ContextPtr ctx = idempotent_context(2);
  const auto family = testing::tiny_family(ctx);
  for (const XMGraph& g : family) {
    for (const XMGraph& h : family) {
      for (const GraphMorphism& f : hom_enumerate(g, h)) {
        EXPECT_EQ(compose(identity_morphism(h), f), f);
        EXPECT_EQ(compose(f, identity_morphism(g)), f);
        for (const GraphMorphism& k : hom_enumerate(h, h)) {
          GraphMorphism kf = compose(k, f);
          for (VertexId x = 0; x < g.num_vertices(); ++x) EXPECT_EQ(kf.vmap[x], k.vmap[f.vmap[x]]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace xmg
