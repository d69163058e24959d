#include "xmg/quotient.hpp"

#include <algorithm>
#include <deque>

#include "xmg/error.hpp"

namespace xmg {

std::vector<std::size_t> DisjointSets::labels() {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_label(parent_.size(), unset);
  std::vector<std::size_t> out(parent_.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    std::size_t r = find(i);
    if (root_label[r] == unset) root_label[r] = next++;
    out[i] = root_label[r];
  }
  return out;
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

void check_element(const XMGraph& g, Element z) {
  const std::size_t bound = z.sort == Sort::Vertex ? g.num_vertices() : g.num_arcs();
  if (z.id >= bound) {
    throw UnknownElement(std::string(z.sort == Sort::Vertex ? "vertex " : "arc ") +
                         std::to_string(z.id) + " does not exist");
  }
}

std::size_t count_classes(const std::vector<std::size_t>& labels) {
  std::size_t n = 0;
  for (std::size_t l : labels) n = std::max(n, l + 1);
  return n;
}

Congruence finish(DisjointSets& vs, DisjointSets& as) {
  Congruence c;
  c.vertex_class = vs.labels();
  c.arc_class = as.labels();
  c.num_vertex_classes = count_classes(c.vertex_class);
  c.num_arc_classes = count_classes(c.arc_class);
  return c;
}

}  // namespace

Congruence generate_congruence(const XMGraph& g, const std::vector<ElementPair>& pairs) {
  DisjointSets vs(g.num_vertices());
  DisjointSets as(g.num_arcs());
  std::deque<std::pair<ArcId, ArcId>> work;
  for (const auto& [a, b] : pairs) {
    check_element(g, a);
    check_element(g, b);
    if (a.sort != b.sort) throw SortMismatch("a pair mixes a vertex with an arc");
    if (a.sort == Sort::Vertex) {
      vs.unite(a.id, b.id);
    } else if (as.unite(a.id, b.id)) {
      work.emplace_back(a.id, b.id);
    }
  }
  const Context& c = *g.context();
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    for (Elem m = 0; m < c.elements(); ++m) {
      ArcId am = g.act(a, m);
      ArcId bm = g.act(b, m);
      if (as.unite(am, bm)) work.emplace_back(am, bm);
    }
    for (Point x = 0; x < c.points(); ++x) vs.unite(g.incidence(a, x), g.incidence(b, x));
  }
  return finish(vs, as);
}

Quotient quotient_by(const XMGraph& g, const Congruence& c) {
  const Context& ctx = *g.context();
  std::vector<VertexId> inc(c.num_arc_classes * ctx.points());
  std::vector<ArcId> act(c.num_arc_classes * ctx.elements());
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const std::size_t k = c.arc_class[a];
    for (Point x = 0; x < ctx.points(); ++x) {
      inc[k * ctx.points() + x] = c.vertex_class[g.incidence(a, x)];
    }
    for (Elem m = 0; m < ctx.elements(); ++m) {
      act[k * ctx.elements() + m] = c.arc_class[g.act(a, m)];
    }
  }
  XMGraph object = XMGraph::unchecked(g.context(), c.num_vertex_classes, c.num_arc_classes,
                                      std::move(inc), std::move(act));
  GraphMorphism projection{g, object, c.vertex_class, c.arc_class};
  return {c, std::move(object), std::move(projection)};
}

Quotient congruence_quotient(const XMGraph& g, const std::vector<ElementPair>& pairs) {
  return quotient_by(g, generate_congruence(g, pairs));
}

Congruence kernel(const GraphMorphism& f) {
  DisjointSets vs(f.vmap.size());
  DisjointSets as(f.amap.size());
  std::vector<std::size_t> first_v(f.target.num_vertices(), kUnset);
  std::vector<std::size_t> first_a(f.target.num_arcs(), kUnset);
  for (VertexId v = 0; v < f.vmap.size(); ++v) {
    auto& slot = first_v[f.vmap[v]];
    if (slot == kUnset) slot = v; else vs.unite(slot, v);
  }
  for (ArcId a = 0; a < f.amap.size(); ++a) {
    auto& slot = first_a[f.amap[a]];
    if (slot == kUnset) slot = a; else as.unite(slot, a);
  }
  return finish(vs, as);
}

ImageFactorization image_factorization(const GraphMorphism& f) {
  Quotient q = quotient_by(f.source, kernel(f));
  std::vector<VertexId> vmap(q.congruence.num_vertex_classes);
  std::vector<ArcId> amap(q.congruence.num_arc_classes);
  for (VertexId v = 0; v < f.vmap.size(); ++v) vmap[q.congruence.vertex_class[v]] = f.vmap[v];
  for (ArcId a = 0; a < f.amap.size(); ++a) amap[q.congruence.arc_class[a]] = f.amap[a];
  GraphMorphism mono{q.object, f.target, std::move(vmap), std::move(amap)};
  return {std::move(q), std::move(mono)};
}

Subgraph closure(const XMGraph& g, const std::vector<Element>& seeds) {
  Subgraph s{std::vector<bool>(g.num_vertices(), false), std::vector<bool>(g.num_arcs(), false)};
  std::deque<ArcId> work;
  for (Element z : seeds) {
    check_element(g, z);
    if (z.sort == Sort::Vertex) {
      s.vertices[z.id] = true;
    } else if (!s.arcs[z.id]) {
      s.arcs[z.id] = true;
      work.push_back(z.id);
    }
  }
  const Context& c = *g.context();
  while (!work.empty()) {
    ArcId a = work.front();
    work.pop_front();
    for (Point x = 0; x < c.points(); ++x) s.vertices[g.incidence(a, x)] = true;
    for (Elem m = 0; m < c.elements(); ++m) {
      ArcId b = g.act(a, m);
      if (!s.arcs[b]) {
        s.arcs[b] = true;
        work.push_back(b);
      }
    }
  }
  return s;
}

Subgraph avoiding(const XMGraph& g, Element z) {
  check_element(g, z);
  // w reaches z when z lies in closure({w}); walk the reachability
  // relation backwards from z and keep the complement.
  const Context& c = *g.context();
  std::vector<bool> reaches_v(g.num_vertices(), false);
  std::vector<bool> reaches_a(g.num_arcs(), false);
  if (z.sort == Sort::Vertex) {
    reaches_v[z.id] = true;
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      for (Point x = 0; x < c.points(); ++x) {
        if (g.incidence(a, x) == z.id) reaches_a[a] = true;
      }
    }
  } else {
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      for (Elem m = 0; m < c.elements(); ++m) {
        if (g.act(a, m) == z.id) reaches_a[a] = true;
      }
    }
  }
  Subgraph s{std::vector<bool>(g.num_vertices()), std::vector<bool>(g.num_arcs())};
  for (VertexId v = 0; v < g.num_vertices(); ++v) s.vertices[v] = !reaches_v[v];
  for (ArcId a = 0; a < g.num_arcs(); ++a) s.arcs[a] = !reaches_a[a];
  return s;
}

bool is_subgraph(const XMGraph& g, const Subgraph& s) {
  if (s.vertices.size() != g.num_vertices() || s.arcs.size() != g.num_arcs()) return false;
  const Context& c = *g.context();
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (!s.arcs[a]) continue;
    for (Point x = 0; x < c.points(); ++x) {
      if (!s.vertices[g.incidence(a, x)]) return false;
    }
    for (Elem m = 0; m < c.elements(); ++m) {
      if (!s.arcs[g.act(a, m)]) return false;
    }
  }
  return true;
}

GraphMorphism subgraph_inclusion(const XMGraph& g, const Subgraph& s) {
  const Context& c = *g.context();
  std::vector<VertexId> vmap;
  std::vector<ArcId> amap;
  std::vector<std::size_t> vnew(g.num_vertices());
  std::vector<std::size_t> anew(g.num_arcs());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (s.vertices[v]) {
      vnew[v] = vmap.size();
      vmap.push_back(v);
    }
  }
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (s.arcs[a]) {
      anew[a] = amap.size();
      amap.push_back(a);
    }
  }
  std::vector<VertexId> inc;
  std::vector<ArcId> act;
  for (ArcId a : amap) {
    for (Point x = 0; x < c.points(); ++x) inc.push_back(vnew[g.incidence(a, x)]);
    for (Elem m = 0; m < c.elements(); ++m) act.push_back(anew[g.act(a, m)]);
  }
  XMGraph sub = XMGraph::unchecked(g.context(), vmap.size(), amap.size(), std::move(inc),
                                   std::move(act));
  return {std::move(sub), g, std::move(vmap), std::move(amap)};
}

}  // namespace xmg
