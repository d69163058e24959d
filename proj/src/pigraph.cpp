#include "xmg/pigraph.hpp"

#include <algorithm>
#include <map>

#include "labelled_homs.hpp"
#include "xmg/error.hpp"
#include "xmg/hom.hpp"
#include "xmg/hullcover.hpp"
#include "xmg/quotient.hpp"

namespace xmg {

Multiset canonical(std::vector<VertexId> tuple) {
  std::sort(tuple.begin(), tuple.end());
  return tuple;
}

std::vector<Multiset> sym_power(std::size_t y, std::size_t arity) {
  std::vector<Multiset> out;
  if (y == 0) {
    if (arity == 0) out.emplace_back();
    return out;
  }
  Multiset q(arity, 0);
  while (true) {
    out.push_back(q);
    // Next non-decreasing tuple in lexicographic order.
    std::size_t i = arity;
    while (i > 0 && q[i - 1] == y - 1) --i;
    if (i == 0) return out;
    const VertexId v = q[i - 1] + 1;
    std::fill(q.begin() + static_cast<std::ptrdiff_t>(i - 1), q.end(), v);
  }
}

Multiset sym_power_map(const Multiset& q, std::span<const std::size_t> j) {
  Multiset out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = j[q[i]];
  return canonical(std::move(out));
}

Multiset sym_unit(VertexId y, std::size_t arity) { return Multiset(arity, y); }

PiGraph make_pigraph(std::size_t arity, std::size_t num_vertices, std::vector<Multiset> phi) {
  for (EdgeId e = 0; e < phi.size(); ++e) {
    if (phi[e].size() != arity) throw LawViolation(Law::TableShape, {e});
    for (VertexId v : phi[e]) {
      if (v >= num_vertices) throw LawViolation(Law::TableShape, {e, v});
    }
    std::sort(phi[e].begin(), phi[e].end());
  }
  PiGraph p;
  p.arity_ = arity;
  p.num_vertices_ = num_vertices;
  p.phi_ = std::move(phi);
  return p;
}

namespace {

Multiset relabel(const Multiset& q, std::span<const VertexId> vmap) {
  return sym_power_map(q, vmap);
}

void require_aut(const Context& ctx) {
  if (!is_full_automorphism_context(ctx)) throw MonoidNotAut();
}

template <class Map>
bool all_distinct(const Map& m, std::size_t bound) {
  std::vector<bool> hit(bound, false);
  for (auto x : m) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

template <class Map>
bool covers(const Map& m, std::size_t bound) {
  std::vector<bool> hit(bound, false);
  for (auto x : m) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool is_pi_morphism(const PiGraph& s, const PiGraph& t, std::span<const VertexId> vmap,
                    std::span<const EdgeId> emap) {
  if (s.arity() != t.arity()) return false;
  if (vmap.size() != s.num_vertices() || emap.size() != s.num_edges()) return false;
  for (VertexId w : vmap) {
    if (w >= t.num_vertices()) return false;
  }
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (emap[e] >= t.num_edges() || t.phi(emap[e]) != relabel(s.phi(e), vmap)) return false;
  }
  return true;
}

PiMorphism make_pi_morphism(PiGraph s, PiGraph t, std::vector<VertexId> vmap,
                            std::vector<EdgeId> emap) {
  if (s.arity() != t.arity() || vmap.size() != s.num_vertices() ||
      emap.size() != s.num_edges()) {
    throw LawViolation(Law::TableShape, {vmap.size(), emap.size()});
  }
  for (VertexId v = 0; v < vmap.size(); ++v) {
    if (vmap[v] >= t.num_vertices()) throw LawViolation(Law::TableShape, {v});
  }
  for (EdgeId e = 0; e < emap.size(); ++e) {
    if (emap[e] >= t.num_edges()) throw LawViolation(Law::TableShape, {e});
    if (t.phi(emap[e]) != relabel(s.phi(e), vmap)) throw LawViolation(Law::EdgeSquare, {e});
  }
  return {std::move(s), std::move(t), std::move(vmap), std::move(emap)};
}

bool pi_is_mono(const PiMorphism& f) {
  return all_distinct(f.vmap, f.target.num_vertices()) &&
         all_distinct(f.emap, f.target.num_edges());
}

bool pi_is_epi(const PiMorphism& f) {
  return covers(f.vmap, f.target.num_vertices()) && covers(f.emap, f.target.num_edges());
}

bool for_each_pi_hom(const PiGraph& s, const PiGraph& t, std::span<const VertexId> fixed_v,
                     std::span<const EdgeId> fixed_e, const PiHomVisitor& visit) {
  if (s.arity() != t.arity()) return true;
  return detail::for_each_labelled_hom(s.num_vertices(), s.phi_table(), t.num_vertices(),
                                       t.phi_table(), relabel, fixed_v, fixed_e, visit);
}

std::vector<PiMorphism> pi_hom_enumerate(const PiGraph& s, const PiGraph& t) {
  std::vector<PiMorphism> out;
  for_each_pi_hom(s, t, {}, {}, [&](std::span<const VertexId> v, std::span<const EdgeId> e) {
    out.push_back({s, t, {v.begin(), v.end()}, {e.begin(), e.end()}});
    return true;
  });
  return out;
}

bool pi_hom_exists(const PiGraph& s, const PiGraph& t, std::span<const VertexId> fixed_v,
                   std::span<const EdgeId> fixed_e) {
  if (s.arity() != t.arity()) return false;
  return detail::labelled_hom_exists(s.num_vertices(), s.phi_table(), t.num_vertices(),
                                     t.phi_table(), relabel, fixed_v, fixed_e);
}

namespace {

using ArcIndex = std::map<std::pair<EdgeId, std::vector<VertexId>>, ArcId>;

PiNerve build_nerve(const ContextPtr& ctx, const PiGraph& p, ArcIndex* index_out) {
  require_aut(*ctx);
  if (p.arity() != ctx->points()) throw Error("Pi-graph arity differs from |X|");
  const std::size_t nx = ctx->points();
  ArcIndex index;
  std::vector<VertexId> inc;
  std::vector<EdgeId> edge_of_arc;
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    std::vector<VertexId> g = p.phi(e);
    do {
      index.emplace(std::make_pair(e, g), edge_of_arc.size());
      edge_of_arc.push_back(e);
      inc.insert(inc.end(), g.begin(), g.end());
    } while (std::next_permutation(g.begin(), g.end()));
  }
  std::vector<ArcId> act;
  std::vector<VertexId> g(nx);
  for (ArcId a = 0; a < edge_of_arc.size(); ++a) {
    for (Elem m = 0; m < ctx->elements(); ++m) {
      for (Point x = 0; x < nx; ++x) g[x] = inc[a * nx + ctx->act(x, m)];
      act.push_back(index.at({edge_of_arc[a], g}));
    }
  }
  XMGraph graph = XMGraph::unchecked(ctx, p.num_vertices(), edge_of_arc.size(), std::move(inc),
                                     std::move(act));
  if (index_out) *index_out = std::move(index);
  return {std::move(graph), std::move(edge_of_arc)};
}

}  // namespace

PiNerve nerve_pi(const ContextPtr& ctx, const PiGraph& p) { return build_nerve(ctx, p, nullptr); }

GraphMorphism nerve_pi_map(const ContextPtr& ctx, const PiMorphism& f) {
  PiNerve src = build_nerve(ctx, f.source, nullptr);
  ArcIndex index;
  PiNerve dst = build_nerve(ctx, f.target, &index);
  std::vector<ArcId> amap(src.graph.num_arcs());
  std::vector<VertexId> g(ctx->points());
  for (ArcId a = 0; a < amap.size(); ++a) {
    for (Point x = 0; x < g.size(); ++x) g[x] = f.vmap[src.graph.incidence(a, x)];
    amap[a] = index.at({f.emap[src.edge_of_arc[a]], g});
  }
  return {src.graph, dst.graph, f.vmap, std::move(amap)};
}

PiRealization realize_pi(const XMGraph& g) {
  const Context& ctx = *g.context();
  require_aut(ctx);
  DisjointSets orbits(g.num_arcs());
  for (Elem t : transposition_elements(ctx)) {
    for (ArcId a = 0; a < g.num_arcs(); ++a) orbits.unite(a, g.act(a, t));
  }
  std::vector<EdgeId> cls = orbits.labels();
  std::size_t n = 0;
  for (EdgeId c : cls) n = std::max(n, c + 1);
  std::vector<Multiset> phi(n);
  std::vector<bool> done(n, false);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (done[cls[a]]) continue;
    done[cls[a]] = true;
    auto b = g.boundary(a);
    phi[cls[a]] = canonical({b.begin(), b.end()});
  }
  return {make_pigraph(ctx.points(), g.num_vertices(), std::move(phi)), std::move(cls)};
}

PiMorphism realize_pi_map(const GraphMorphism& f) {
  PiRealization src = realize_pi(f.source);
  PiRealization dst = realize_pi(f.target);
  std::vector<EdgeId> emap(src.pi.num_edges());
  for (ArcId a = 0; a < f.amap.size(); ++a) emap[src.edge_of_arc[a]] = dst.edge_of_arc[f.amap[a]];
  return {src.pi, dst.pi, f.vmap, std::move(emap)};
}

GraphMorphism unit_pi(const XMGraph& g) {
  PiRealization r = realize_pi(g);
  ArcIndex index;
  PiNerve n = build_nerve(g.context(), r.pi, &index);
  std::vector<VertexId> vmap(g.num_vertices());
  std::vector<ArcId> amap(g.num_arcs());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  for (ArcId a = 0; a < amap.size(); ++a) {
    auto b = g.boundary(a);
    amap[a] = index.at({r.edge_of_arc[a], {b.begin(), b.end()}});
  }
  return {g, n.graph, std::move(vmap), std::move(amap)};
}

PiMorphism counit_pi(const ContextPtr& ctx, const PiGraph& p) {
  PiNerve n = nerve_pi(ctx, p);
  PiRealization r = realize_pi(n.graph);
  std::vector<EdgeId> emap(r.pi.num_edges());
  for (ArcId a = 0; a < n.graph.num_arcs(); ++a) emap[r.edge_of_arc[a]] = n.edge_of_arc[a];
  std::vector<VertexId> vmap(p.num_vertices());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  return {r.pi, p, std::move(vmap), std::move(emap)};
}

PiDeciders pi_deciders(const ContextPtr& ctx, const PiGraph& q) {
  const XMGraph n = nerve_pi(ctx, q).graph;
  return {is_injective(n), is_projective(n)};
}

}  // namespace xmg
