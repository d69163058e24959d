#include "xmg/hypergraph.hpp"

#include <algorithm>

#include "labelled_homs.hpp"
#include "xmg/error.hpp"
#include "xmg/hom.hpp"
#include "xmg/quotient.hpp"

namespace xmg {

std::size_t Hypergraph::max_edge_size() const {
  std::size_t k = 0;
  for (const auto& s : phi_) k = std::max(k, s.size());
  return k;
}

Hypergraph make_hypergraph(std::size_t num_vertices, std::vector<VertexSet> phi) {
  for (EdgeId e = 0; e < phi.size(); ++e) {
    for (VertexId v : phi[e]) {
      if (v >= num_vertices) throw LawViolation(Law::TableShape, {e, v});
    }
    std::sort(phi[e].begin(), phi[e].end());
    phi[e].erase(std::unique(phi[e].begin(), phi[e].end()), phi[e].end());
  }
  Hypergraph h;
  h.num_vertices_ = num_vertices;
  h.phi_ = std::move(phi);
  return h;
}

namespace {

VertexSet image_of(const VertexSet& s, std::span<const VertexId> vmap) {
  VertexSet out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(vmap[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_aut(const Context& ctx) {
  if (!is_full_automorphism_context(ctx)) throw MonoidNotAut();
}

}  // namespace

bool is_hyper_morphism(const Hypergraph& s, const Hypergraph& t, std::span<const VertexId> vmap,
                       std::span<const EdgeId> emap) {
  if (vmap.size() != s.num_vertices() || emap.size() != s.num_edges()) return false;
  for (VertexId w : vmap) {
    if (w >= t.num_vertices()) return false;
  }
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (emap[e] >= t.num_edges() || t.phi(emap[e]) != image_of(s.phi(e), vmap)) return false;
  }
  return true;
}

HypergraphMorphism make_hyper_morphism(Hypergraph s, Hypergraph t, std::vector<VertexId> vmap,
                                       std::vector<EdgeId> emap) {
  if (vmap.size() != s.num_vertices() || emap.size() != s.num_edges()) {
    throw LawViolation(Law::TableShape, {vmap.size(), emap.size()});
  }
  for (VertexId v = 0; v < vmap.size(); ++v) {
    if (vmap[v] >= t.num_vertices()) throw LawViolation(Law::TableShape, {v});
  }
  for (EdgeId e = 0; e < emap.size(); ++e) {
    if (emap[e] >= t.num_edges()) throw LawViolation(Law::TableShape, {e});
    if (t.phi(emap[e]) != image_of(s.phi(e), vmap)) throw LawViolation(Law::EdgeSquare, {e});
  }
  return {std::move(s), std::move(t), std::move(vmap), std::move(emap)};
}

HypergraphMorphism hyper_identity(const Hypergraph& h) {
  std::vector<VertexId> v(h.num_vertices());
  std::vector<EdgeId> e(h.num_edges());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = i;
  return {h, h, std::move(v), std::move(e)};
}

HypergraphMorphism hyper_compose(const HypergraphMorphism& g, const HypergraphMorphism& f) {
  if (!(f.target == g.source)) throw Error("hypergraph morphisms are not composable");
  std::vector<VertexId> v(f.vmap.size());
  std::vector<EdgeId> e(f.emap.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = g.vmap[f.vmap[i]];
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = g.emap[f.emap[i]];
  return {f.source, g.target, std::move(v), std::move(e)};
}

namespace {

template <class Map>
bool injective(const Map& m, std::size_t bound) {
  std::vector<bool> hit(bound, false);
  for (auto x : m) {
    if (hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

template <class Map>
bool surjective(const Map& m, std::size_t bound) {
  std::vector<bool> hit(bound, false);
  for (auto x : m) hit[x] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace

bool hyper_is_mono(const HypergraphMorphism& f) {
  return injective(f.vmap, f.target.num_vertices()) && injective(f.emap, f.target.num_edges());
}

bool hyper_is_epi(const HypergraphMorphism& f) {
  return surjective(f.vmap, f.target.num_vertices()) && surjective(f.emap, f.target.num_edges());
}

bool for_each_hyper_hom(const Hypergraph& s, const Hypergraph& t, std::span<const VertexId> fixed_v,
                        std::span<const EdgeId> fixed_e, const HyperHomVisitor& visit) {
  return detail::for_each_labelled_hom(s.num_vertices(), s.phi_table(), t.num_vertices(),
                                       t.phi_table(), image_of, fixed_v, fixed_e, visit);
}

bool for_each_hyper_hom(const Hypergraph& s, const Hypergraph& t, const HyperHomVisitor& visit) {
  return for_each_hyper_hom(s, t, {}, {}, visit);
}

std::vector<HypergraphMorphism> hyper_hom_enumerate(const Hypergraph& s, const Hypergraph& t) {
  std::vector<HypergraphMorphism> out;
  for_each_hyper_hom(s, t, [&](std::span<const VertexId> v, std::span<const EdgeId> e) {
    out.push_back({s, t, {v.begin(), v.end()}, {e.begin(), e.end()}});
    return true;
  });
  return out;
}

bool hyper_hom_exists(const Hypergraph& s, const Hypergraph& t, std::span<const VertexId> fixed_v,
                      std::span<const EdgeId> fixed_e) {
  return detail::labelled_hom_exists(s.num_vertices(), s.phi_table(), t.num_vertices(),
                                     t.phi_table(), image_of, fixed_v, fixed_e);
}

Hypergraph hyper_point() { return make_hypergraph(1, {}); }

Hypergraph hyper_full_edge(std::size_t n) {
  VertexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return make_hypergraph(n, {all});
}

namespace {

// Arc ids of the nerve, indexed by edge and by the map X -> phi(e) written
// in local digits (positions within phi(e)).
struct NerveIndex {
  std::vector<std::vector<ArcId>> arc;  // [edge][local code]
};

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

HyperNerve build_nerve(const ContextPtr& ctx, const Hypergraph& h, NerveIndex* index_out) {
  require_aut(*ctx);
  const std::size_t nx = ctx->points();
  const std::size_t nm = ctx->elements();
  NerveIndex index;
  index.arc.resize(h.num_edges());
  std::vector<VertexId> inc;
  std::vector<EdgeId> edge_of_arc;
  std::vector<std::vector<std::size_t>> local_of_arc;
  std::vector<std::size_t> digits(nx);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const VertexSet& p = h.phi(e);
    const std::size_t n = power(p.size(), nx);
    if (p.empty() && nx > 0) continue;
    index.arc[e].assign(n, npos);
    for (std::size_t code = 0; code < n; ++code) {
      std::size_t c = code;
      std::vector<bool> hit(p.size(), false);
      for (std::size_t i = nx; i-- > 0;) {
        digits[i] = c % p.size();
        c /= p.size();
        hit[digits[i]] = true;
      }
      if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) continue;
      index.arc[e][code] = edge_of_arc.size();
      edge_of_arc.push_back(e);
      local_of_arc.push_back(digits);
      for (Point x = 0; x < nx; ++x) inc.push_back(p[digits[x]]);
    }
  }
  std::vector<ArcId> act;
  act.reserve(edge_of_arc.size() * nm);
  for (ArcId a = 0; a < edge_of_arc.size(); ++a) {
    const std::size_t base = h.phi(edge_of_arc[a]).size();
    for (Elem m = 0; m < nm; ++m) {
      std::size_t code = 0;
      for (Point x = 0; x < nx; ++x) code = code * base + local_of_arc[a][ctx->act(x, m)];
      act.push_back(index.arc[edge_of_arc[a]][code]);
    }
  }
  XMGraph g = XMGraph::unchecked(ctx, h.num_vertices(), edge_of_arc.size(), std::move(inc),
                                 std::move(act));
  if (index_out) *index_out = std::move(index);
  return {std::move(g), std::move(edge_of_arc)};
}

// Arc of the nerve over edge e with incidence f (image(f) = phi(e)).
ArcId nerve_lookup(const Hypergraph& h, const NerveIndex& index, EdgeId e,
                   std::span<const VertexId> f) {
  const VertexSet& p = h.phi(e);
  std::size_t code = 0;
  for (VertexId v : f) {
    code = code * p.size() + static_cast<std::size_t>(std::lower_bound(p.begin(), p.end(), v) - p.begin());
  }
  return index.arc[e][code];
}

}  // namespace

HyperNerve nerve_hyper(const ContextPtr& ctx, const Hypergraph& h) {
  return build_nerve(ctx, h, nullptr);
}

GraphMorphism nerve_hyper_map(const ContextPtr& ctx, const HypergraphMorphism& f) {
  HyperNerve src = build_nerve(ctx, f.source, nullptr);
  NerveIndex index;
  HyperNerve dst = build_nerve(ctx, f.target, &index);
  std::vector<ArcId> amap(src.graph.num_arcs());
  std::vector<VertexId> img(ctx->points());
  for (ArcId a = 0; a < amap.size(); ++a) {
    for (Point x = 0; x < img.size(); ++x) img[x] = f.vmap[src.graph.incidence(a, x)];
    amap[a] = nerve_lookup(f.target, index, f.emap[src.edge_of_arc[a]], img);
  }
  return {src.graph, dst.graph, f.vmap, std::move(amap)};
}

HyperRealization realize_hyper(const XMGraph& g) {
  const Context& ctx = *g.context();
  require_aut(ctx);
  DisjointSets orbits(g.num_arcs());
  for (Elem t : transposition_elements(ctx)) {
    for (ArcId a = 0; a < g.num_arcs(); ++a) orbits.unite(a, g.act(a, t));
  }
  std::vector<EdgeId> cls = orbits.labels();
  std::size_t n = 0;
  for (EdgeId c : cls) n = std::max(n, c + 1);
  std::vector<VertexSet> phi(n);
  std::vector<bool> done(n, false);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (done[cls[a]]) continue;
    done[cls[a]] = true;
    auto b = g.boundary(a);
    phi[cls[a]].assign(b.begin(), b.end());
  }
  return {make_hypergraph(g.num_vertices(), std::move(phi)), std::move(cls)};
}

HypergraphMorphism realize_hyper_map(const GraphMorphism& f) {
  HyperRealization src = realize_hyper(f.source);
  HyperRealization dst = realize_hyper(f.target);
  std::vector<EdgeId> emap(src.hyper.num_edges());
  for (ArcId a = 0; a < f.amap.size(); ++a) emap[src.edge_of_arc[a]] = dst.edge_of_arc[f.amap[a]];
  return {src.hyper, dst.hyper, f.vmap, std::move(emap)};
}

HypergraphMorphism counit_hyper(const ContextPtr& ctx, const Hypergraph& h) {
  HyperNerve n = nerve_hyper(ctx, h);
  HyperRealization r = realize_hyper(n.graph);
  std::vector<EdgeId> emap(r.hyper.num_edges());
  for (ArcId a = 0; a < n.graph.num_arcs(); ++a) emap[r.edge_of_arc[a]] = n.edge_of_arc[a];
  std::vector<VertexId> vmap(h.num_vertices());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  return {r.hyper, h, std::move(vmap), std::move(emap)};
}

GraphMorphism unit_hyper(const XMGraph& g) {
  HyperRealization r = realize_hyper(g);
  NerveIndex index;
  HyperNerve n = build_nerve(g.context(), r.hyper, &index);
  std::vector<VertexId> vmap(g.num_vertices());
  std::vector<ArcId> amap(g.num_arcs());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  for (ArcId a = 0; a < amap.size(); ++a) {
    amap[a] = nerve_lookup(r.hyper, index, r.edge_of_arc[a], g.boundary(a));
  }
  return {g, n.graph, std::move(vmap), std::move(amap)};
}

Coreflection coreflect_k(const Hypergraph& h, std::size_t k) {
  std::vector<VertexSet> kept;
  std::vector<EdgeId> emap;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.phi(e).size() <= k) {
      kept.push_back(h.phi(e));
      emap.push_back(e);
    }
  }
  Hypergraph core = make_hypergraph(h.num_vertices(), std::move(kept));
  std::vector<VertexId> vmap(h.num_vertices());
  for (VertexId v = 0; v < vmap.size(); ++v) vmap[v] = v;
  HypergraphMorphism inc{core, h, std::move(vmap), std::move(emap)};
  return {std::move(core), std::move(inc)};
}

HyperInjectivity hyper_injectivity(const Hypergraph& q) {
  HyperInjectivity r;
  const std::size_t nv = q.num_vertices();
  if (nv == 0) return r;
  if (nv > 24) throw Error("too many vertices to enumerate every subset");
  r.realizer.assign(std::size_t{1} << nv, npos);
  for (EdgeId e = q.num_edges(); e-- > 0;) {
    std::size_t mask = 0;
    for (VertexId v : q.phi(e)) mask |= std::size_t{1} << v;
    r.realizer[mask] = e;
  }
  for (std::size_t mask = 0; mask < r.realizer.size(); ++mask) {
    if (r.realizer[mask] != npos) continue;
    VertexSet s;
    for (VertexId v = 0; v < nv; ++v) {
      if (mask >> v & 1) s.push_back(v);
    }
    r.unrealized = std::move(s);
    return r;
  }
  r.injective = true;
  return r;
}

bool hyper_is_injective(const Hypergraph& q) { return hyper_injectivity(q).injective; }

bool hyper_is_projective(const Hypergraph& p, std::optional<std::size_t> k) {
  if (!k) return p.num_edges() == 0;
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    if (p.phi(e).size() > *k) throw NotKBounded(e, p.phi(e).size(), *k);
  }
  std::vector<bool> used(p.num_vertices(), false);
  for (EdgeId e = 0; e < p.num_edges(); ++e) {
    if (p.phi(e).size() != *k) return false;
    for (VertexId v : p.phi(e)) {
      if (used[v]) return false;
      used[v] = true;
    }
  }
  return true;
}

std::optional<Separator> find_separator(const HypergraphMorphism& f, const HypergraphMorphism& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw Error("separators compare parallel morphisms only");
  }
  const Hypergraph& s = f.source;
  std::optional<Separator> found;
  auto differs = [&](std::span<const VertexId> v, std::span<const EdgeId> e) {
    for (VertexId w : v) {
      if (f.vmap[w] != g.vmap[w]) return true;
    }
    for (EdgeId d : e) {
      if (f.emap[d] != g.emap[d]) return true;
    }
    return false;
  };
  const Hypergraph point = hyper_point();
  for_each_hyper_hom(point, s, [&](std::span<const VertexId> v, std::span<const EdgeId> e) {
    if (!differs(v, e)) return true;
    found = Separator{0, true, {point, s, {v.begin(), v.end()}, {e.begin(), e.end()}}};
    return false;
  });
  for (std::size_t k = 0; !found && k <= s.max_edge_size(); ++k) {
    const Hypergraph probe = hyper_e(k);
    for_each_hyper_hom(probe, s, [&](std::span<const VertexId> v, std::span<const EdgeId> e) {
      if (!differs(v, e)) return true;
      found = Separator{k, false, {probe, s, {v.begin(), v.end()}, {e.begin(), e.end()}}};
      return false;
    });
  }
  return found;
}

}  // namespace xmg
