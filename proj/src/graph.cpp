#include "xmg/graph.hpp"

#include <algorithm>

#include "xmg/error.hpp"

namespace xmg {

XMGraph::XMGraph() : XMGraph(unchecked(trivial_context(0), 0, 0, {}, {})) {}

bool XMGraph::operator==(const XMGraph& other) const {
  if (d_ == other.d_) return true;
  return d_->num_vertices == other.d_->num_vertices && d_->num_arcs == other.d_->num_arcs &&
         same_context(d_->ctx, other.d_->ctx) && d_->incidence == other.d_->incidence &&
         d_->action == other.d_->action;
}

XMGraph XMGraph::unchecked(ContextPtr ctx, std::size_t num_vertices, std::size_t num_arcs,
                           std::vector<VertexId> incidence, std::vector<ArcId> action) {
  if (incidence.size() != num_arcs * ctx->points() ||
      action.size() != num_arcs * ctx->elements()) {
    throw LawViolation(Law::TableShape, {incidence.size(), action.size()});
  }
  auto d = std::make_shared<Data>();
  d->ctx = std::move(ctx);
  d->num_vertices = num_vertices;
  d->num_arcs = num_arcs;
  d->incidence = std::move(incidence);
  d->action = std::move(action);
  return XMGraph(std::move(d));
}

XMGraph validate_graph(ContextPtr ctx, std::size_t num_vertices, std::size_t num_arcs,
                       std::vector<VertexId> incidence, std::vector<ArcId> action) {
  XMGraph g = XMGraph::unchecked(std::move(ctx), num_vertices, num_arcs, std::move(incidence),
                                 std::move(action));
  const Context& c = *g.context();
  for (ArcId a = 0; a < num_arcs; ++a) {
    for (Point x = 0; x < c.points(); ++x) {
      if (g.incidence(a, x) >= num_vertices) throw LawViolation(Law::TableShape, {a, x});
    }
    for (Elem m = 0; m < c.elements(); ++m) {
      if (g.act(a, m) >= num_arcs) throw LawViolation(Law::TableShape, {a, m});
    }
  }
  for (ArcId a = 0; a < num_arcs; ++a) {
    if (g.act(a, c.identity()) != a) throw LawViolation(Law::UnitLaw, {a});
  }
  for (ArcId a = 0; a < num_arcs; ++a) {
    for (Elem m = 0; m < c.elements(); ++m) {
      for (Elem n = 0; n < c.elements(); ++n) {
        if (g.act(g.act(a, m), n) != g.act(a, c.mul(n, m))) {
          throw LawViolation(Law::CompositionLaw, {a, m, n});
        }
      }
    }
  }
  for (ArcId a = 0; a < num_arcs; ++a) {
    for (Elem m = 0; m < c.elements(); ++m) {
      for (Point x = 0; x < c.points(); ++x) {
        if (g.incidence(g.act(a, m), x) != g.incidence(a, c.act(x, m))) {
          throw LawViolation(Law::IncidenceCompat, {a, m, x});
        }
      }
    }
  }
  return g;
}

XMGraph initial_graph(ContextPtr ctx) { return XMGraph::unchecked(std::move(ctx), 0, 0, {}, {}); }

XMGraph terminal_graph(ContextPtr ctx) {
  const std::size_t w = ctx->points();
  const std::size_t k = ctx->elements();
  return XMGraph::unchecked(std::move(ctx), 1, 1, std::vector<VertexId>(w, 0),
                            std::vector<ArcId>(k, 0));
}

XMGraph discrete_graph(ContextPtr ctx, std::size_t n) {
  return XMGraph::unchecked(std::move(ctx), n, 0, {}, {});
}

XMGraph representable(ContextPtr ctx, Sort sort) {
  if (sort == Sort::Vertex) return discrete_graph(std::move(ctx), 1);
  const Context& c = *ctx;
  std::vector<VertexId> inc;
  std::vector<ArcId> act;
  inc.reserve(c.elements() * c.points());
  act.reserve(c.elements() * c.elements());
  for (Elem a = 0; a < c.elements(); ++a) {
    for (Point x = 0; x < c.points(); ++x) inc.push_back(c.act(x, a));
    for (Elem m = 0; m < c.elements(); ++m) act.push_back(c.mul(m, a));
  }
  const std::size_t nv = c.points();
  const std::size_t na = c.elements();
  return XMGraph::unchecked(std::move(ctx), nv, na, std::move(inc), std::move(act));
}

namespace {

// Throws on the first failing square.
void check_morphism(const XMGraph& s, const XMGraph& t, std::span<const VertexId> vmap,
                    std::span<const ArcId> amap) {
  if (!same_context(s.context(), t.context())) throw ContextMismatch();
  if (vmap.size() != s.num_vertices() || amap.size() != s.num_arcs()) {
    throw LawViolation(Law::TableShape, {vmap.size(), amap.size()});
  }
  for (VertexId v : vmap) {
    if (v >= t.num_vertices()) throw LawViolation(Law::TableShape, {v});
  }
  for (ArcId a : amap) {
    if (a >= t.num_arcs()) throw LawViolation(Law::TableShape, {a});
  }
  const Context& c = *s.context();
  for (ArcId a = 0; a < s.num_arcs(); ++a) {
    for (Point x = 0; x < c.points(); ++x) {
      if (vmap[s.incidence(a, x)] != t.incidence(amap[a], x)) {
        throw LawViolation(Law::VertexSquare, {a, x});
      }
    }
    for (Elem m = 0; m < c.elements(); ++m) {
      if (amap[s.act(a, m)] != t.act(amap[a], m)) throw LawViolation(Law::ArcSquare, {a, m});
    }
  }
}

}  // namespace

GraphMorphism make_morphism(XMGraph source, XMGraph target, std::vector<VertexId> vmap,
                            std::vector<ArcId> amap) {
  check_morphism(source, target, vmap, amap);
  return {std::move(source), std::move(target), std::move(vmap), std::move(amap)};
}

bool is_morphism(const XMGraph& source, const XMGraph& target, std::span<const VertexId> vmap,
                 std::span<const ArcId> amap) {
  try {
    check_morphism(source, target, vmap, amap);
    return true;
  } catch (const Error&) {
    return false;
  }
}

GraphMorphism identity_morphism(const XMGraph& g) {
  std::vector<VertexId> vmap(g.num_vertices());
  std::vector<ArcId> amap(g.num_arcs());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  for (ArcId a = 0; a < amap.size(); ++a) amap[a] = a;
  return {g, g, std::move(vmap), std::move(amap)};
}

GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f) {
  if (!(f.target == g.source)) throw ContextMismatch();
  std::vector<VertexId> vmap(f.vmap.size());
  std::vector<ArcId> amap(f.amap.size());
  for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = g.vmap[f.vmap[i]];
  for (std::size_t i = 0; i < amap.size(); ++i) amap[i] = g.amap[f.amap[i]];
  return {f.source, g.target, std::move(vmap), std::move(amap)};
}

GraphMorphism classify_arc(const XMGraph& g, ArcId alpha) {
  if (alpha >= g.num_arcs()) {
    throw UnknownElement("arc " + std::to_string(alpha) + " does not exist");
  }
  const Context& c = *g.context();
  std::vector<VertexId> vmap(c.points());
  std::vector<ArcId> amap(c.elements());
  for (Point x = 0; x < c.points(); ++x) vmap[x] = g.incidence(alpha, x);
  for (Elem m = 0; m < c.elements(); ++m) amap[m] = g.act(alpha, m);
  return {representable(g.context(), Sort::Arc), g, std::move(vmap), std::move(amap)};
}

GraphMorphism classify_vertex(const XMGraph& g, VertexId v) {
  if (v >= g.num_vertices()) {
    throw UnknownElement("vertex " + std::to_string(v) + " does not exist");
  }
  return {representable(g.context(), Sort::Vertex), g, {v}, {}};
}

namespace {

bool injective(std::span<const std::size_t> map, std::size_t codomain) {
  std::vector<bool> hit(codomain, false);
  for (std::size_t y : map) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool surjective(std::span<const std::size_t> map, std::size_t codomain) {
  std::vector<bool> hit(codomain, false);
  std::size_t count = 0;
  for (std::size_t y : map) {
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count == codomain;
}

}  // namespace

MorphismKind morphism_classify(const GraphMorphism& f) {
  MorphismKind k;
  k.mono = injective(f.vmap, f.target.num_vertices()) && injective(f.amap, f.target.num_arcs());
  k.epi = surjective(f.vmap, f.target.num_vertices()) && surjective(f.amap, f.target.num_arcs());
  k.iso = k.mono && k.epi;
  return k;
}

Coproduct coproduct(const ContextPtr& ctx, const std::vector<XMGraph>& summands) {
  std::size_t nv = 0;
  std::size_t na = 0;
  for (const XMGraph& g : summands) {
    if (!same_context(ctx, g.context())) throw ContextMismatch();
    nv += g.num_vertices();
    na += g.num_arcs();
  }
  std::vector<VertexId> inc;
  std::vector<ArcId> act;
  inc.reserve(na * ctx->points());
  act.reserve(na * ctx->elements());
  std::vector<std::pair<std::size_t, std::size_t>> offsets;
  std::size_t voff = 0;
  std::size_t aoff = 0;
  for (const XMGraph& g : summands) {
    offsets.emplace_back(voff, aoff);
    for (VertexId v : g.incidence_table()) inc.push_back(v + voff);
    for (ArcId a : g.action_table()) act.push_back(a + aoff);
    voff += g.num_vertices();
    aoff += g.num_arcs();
  }
  XMGraph object = XMGraph::unchecked(ctx, nv, na, std::move(inc), std::move(act));
  std::vector<GraphMorphism> injections;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const XMGraph& g = summands[i];
    std::vector<VertexId> vmap(g.num_vertices());
    std::vector<ArcId> amap(g.num_arcs());
    for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v + offsets[i].first;
    for (ArcId a = 0; a < amap.size(); ++a) amap[a] = a + offsets[i].second;
    injections.push_back({g, object, std::move(vmap), std::move(amap)});
  }
  return {std::move(object), std::move(injections)};
}

}  // namespace xmg
