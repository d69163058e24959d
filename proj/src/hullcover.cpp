#include "xmg/hullcover.hpp"

#include <algorithm>
#include <string>

#include "xmg/adjunction.hpp"
#include "xmg/error.hpp"
#include "xmg/hom.hpp"

namespace xmg {

std::size_t map_count(std::size_t num_vertices, std::size_t points) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < points; ++i) n *= num_vertices;
  return n;
}

std::vector<VertexId> decode_map(std::size_t code, std::size_t num_vertices, std::size_t points) {
  std::vector<VertexId> f(points);
  for (std::size_t i = points; i-- > 0;) {
    f[i] = code % num_vertices;
    code /= num_vertices;
  }
  return f;
}

std::size_t encode_map(std::span<const VertexId> f, std::size_t num_vertices) {
  std::size_t code = 0;
  for (VertexId v : f) code = code * num_vertices + v;
  return code;
}

InjectivityCertificate injectivity_certificate(const XMGraph& q) {
  InjectivityCertificate cert;
  const std::size_t nv = q.num_vertices();
  if (nv == 0) return cert;
  const std::size_t nx = q.context()->points();
  cert.realizer.assign(map_count(nv, nx), npos);
  for (ArcId a = q.num_arcs(); a-- > 0;) cert.realizer[encode_map(q.boundary(a), nv)] = a;
  for (std::size_t code = 0; code < cert.realizer.size(); ++code) {
    if (cert.realizer[code] == npos) {
      cert.unrealized = decode_map(code, nv, nx);
      return cert;
    }
  }
  cert.injective = true;
  return cert;
}

bool is_injective(const XMGraph& q) { return injectivity_certificate(q).injective; }

namespace {

// The morphism from the coproduct of |S| copies of V and |T| copies of A
// onto G sending copies to the chosen vertices and arcs via classification.
GraphMorphism copies_morphism(const XMGraph& g, const std::vector<VertexId>& s,
                              const std::vector<ArcId>& t) {
  const ContextPtr& ctx = g.context();
  const SetPair sets{s.size(), t.size()};
  const ExtensionLayout l = extension_layout(*ctx, sets);
  XMGraph cover = iota_extend(ctx, sets);
  std::vector<VertexId> vmap(cover.num_vertices());
  std::vector<ArcId> amap(cover.num_arcs());
  for (std::size_t i = 0; i < s.size(); ++i) vmap[l.vertex(i)] = s[i];
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (Point x = 0; x < ctx->points(); ++x) vmap[l.arc_vertex(j, x)] = g.incidence(t[j], x);
    for (Elem m = 0; m < ctx->elements(); ++m) amap[l.arc(j, m)] = g.act(t[j], m);
  }
  return {std::move(cover), g, std::move(vmap), std::move(amap)};
}

std::vector<VertexId> isolated_vertices(const XMGraph& g) {
  std::vector<bool> touched(g.num_vertices(), false);
  for (VertexId v : g.incidence_table()) touched[v] = true;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!touched[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<ProjectiveDecomposition> decompose_projective(const XMGraph& p) {
  const Context& ctx = *p.context();
  const std::size_t nm = ctx.elements();
  DisjointSets blocks(p.num_arcs());
  for (ArcId a = 0; a < p.num_arcs(); ++a) {
    for (Elem m = 0; m < nm; ++m) blocks.unite(a, p.act(a, m));
  }
  const std::vector<std::size_t> label = blocks.labels();
  std::size_t num_blocks = 0;
  for (std::size_t l : label) num_blocks = std::max(num_blocks, l + 1);
  std::vector<std::vector<ArcId>> members(num_blocks);
  for (ArcId a = 0; a < p.num_arcs(); ++a) members[label[a]].push_back(a);

  std::vector<ArcId> generators;
  std::vector<std::size_t> owner(p.num_vertices(), npos);
  std::vector<bool> seen_arc(p.num_arcs());
  std::vector<bool> seen_point(p.num_vertices());
  for (std::size_t b = 0; b < num_blocks; ++b) {
    if (members[b].size() != nm) return std::nullopt;
    std::optional<ArcId> gen;
    for (ArcId g : members[b]) {
      bool ok = true;
      for (Elem m = 0; m < nm && ok; ++m) {
        ArcId gm = p.act(g, m);
        if (seen_arc[gm]) ok = false;
        seen_arc[gm] = true;
      }
      for (Elem m = 0; m < nm; ++m) seen_arc[p.act(g, m)] = false;
      for (Point x = 0; x < ctx.points() && ok; ++x) {
        VertexId v = p.incidence(g, x);
        if (seen_point[v]) ok = false;
        seen_point[v] = true;
      }
      for (Point x = 0; x < ctx.points(); ++x) seen_point[p.incidence(g, x)] = false;
      if (ok) {
        gen = g;
        break;
      }
    }
    if (!gen) return std::nullopt;
    for (Point x = 0; x < ctx.points(); ++x) {
      VertexId v = p.incidence(*gen, x);
      if (owner[v] != npos) return std::nullopt;
      owner[v] = b;
    }
    generators.push_back(*gen);
  }
  std::vector<VertexId> isolated = isolated_vertices(p);
  GraphMorphism iso = copies_morphism(p, isolated, generators);
  return ProjectiveDecomposition{std::move(isolated), std::move(generators), std::move(iso)};
}

bool is_projective(const XMGraph& p) { return decompose_projective(p).has_value(); }

namespace {

// Backtracking search for c on the realized maps reachable from the
// unrealized ones, with boundary(c(h)) = h and c(h . rho_m) = c(h).m.
class SectionSearch {
 public:
  SectionSearch(const XMGraph& g, std::vector<std::size_t> domain,
                const std::vector<std::vector<ArcId>>& candidates,
                const std::vector<std::vector<std::size_t>>& precompose)
      : g_(g), domain_(std::move(domain)), candidates_(candidates), precompose_(precompose),
        section_(candidates.size(), npos) {}

  bool run() { return solve(0); }
  const std::vector<ArcId>& section() const { return section_; }
  std::size_t obstruction() const { return obstruction_; }

 private:
  bool solve(std::size_t i) {
    while (i < domain_.size() && section_[domain_[i]] != npos) ++i;
    if (i == domain_.size()) return true;
    const std::size_t h = domain_[i];
    for (ArcId beta : candidates_[h]) {
      const std::size_t mark = trail_.size();
      if (force(h, beta) && solve(i + 1)) return true;
      while (trail_.size() > mark) {
        section_[trail_.back()] = npos;
        trail_.pop_back();
      }
    }
    obstruction_ = h;
    return false;
  }

  bool force(std::size_t h, ArcId beta) {
    const std::size_t nm = g_.context()->elements();
    for (Elem m = 0; m < nm; ++m) {
      const std::size_t hm = precompose_[h][m];
      const ArcId bm = g_.act(beta, m);
      if (section_[hm] == npos) {
        section_[hm] = bm;
        trail_.push_back(hm);
      } else if (section_[hm] != bm) {
        return false;
      }
    }
    return true;
  }

  const XMGraph& g_;
  std::vector<std::size_t> domain_;
  const std::vector<std::vector<ArcId>>& candidates_;
  const std::vector<std::vector<std::size_t>>& precompose_;
  std::vector<ArcId> section_;
  std::vector<std::size_t> trail_;
  std::size_t obstruction_ = npos;
};

}  // namespace

HullResult injective_hull(const XMGraph& g) {
  const ContextPtr& ctx = g.context();
  const std::size_t nx = ctx->points();
  const std::size_t nm = ctx->elements();
  if (g.is_initial()) {
    XMGraph t = terminal_graph(ctx);
    GraphMorphism emb{g, t, {}, {}};
    return {std::move(t), std::move(emb), {std::vector<VertexId>(nx, 0)}};
  }
  if (g.num_vertices() == 0) {
    // Only possible for empty X: every map X -> V is already realized, so
    // adding a vertex is all that is missing.
    XMGraph h = XMGraph::unchecked(ctx, 1, g.num_arcs(), g.incidence_table(), g.action_table());
    std::vector<ArcId> amap(g.num_arcs());
    for (ArcId a = 0; a < g.num_arcs(); ++a) amap[a] = a;
    GraphMorphism emb{g, h, {}, std::move(amap)};
    return {std::move(h), std::move(emb), {}};
  }

  const std::size_t nv = g.num_vertices();
  const std::size_t na = g.num_arcs();
  const std::size_t codes = map_count(nv, nx);
  std::vector<std::vector<ArcId>> candidates(codes);
  for (ArcId a = 0; a < na; ++a) candidates[encode_map(g.boundary(a), nv)].push_back(a);
  // precompose[h][m] = code of h . rho_m
  std::vector<std::vector<std::size_t>> precompose(codes, std::vector<std::size_t>(nm));
  std::vector<VertexId> hm(nx);
  for (std::size_t h = 0; h < codes; ++h) {
    const auto f = decode_map(h, nv, nx);
    for (Elem m = 0; m < nm; ++m) {
      for (Point x = 0; x < nx; ++x) hm[x] = f[ctx->act(x, m)];
      precompose[h][m] = encode_map(hm, nv);
    }
  }

  std::vector<std::size_t> added;
  std::vector<std::size_t> added_id(codes, npos);
  for (std::size_t h = 0; h < codes; ++h) {
    if (candidates[h].empty()) {
      added_id[h] = na + added.size();
      added.push_back(h);
    }
  }

  std::vector<ArcId> section(codes, npos);
  if (!ctx->monoid.is_group()) {
    std::vector<bool> in_domain(codes, false);
    for (std::size_t f : added) {
      for (Elem m = 0; m < nm; ++m) {
        const std::size_t h = precompose[f][m];
        if (!candidates[h].empty()) in_domain[h] = true;
      }
    }
    std::vector<std::size_t> domain;
    for (std::size_t h = 0; h < codes; ++h) {
      if (in_domain[h]) domain.push_back(h);
    }
    SectionSearch search(g, std::move(domain), candidates, precompose);
    if (!search.run()) throw HullSectionNotFound(decode_map(search.obstruction(), nv, nx));
    section = search.section();
  }

  std::vector<VertexId> inc = g.incidence_table();
  std::vector<ArcId> act = g.action_table();
  std::vector<std::vector<VertexId>> added_maps;
  for (std::size_t f : added) {
    const auto fm = decode_map(f, nv, nx);
    inc.insert(inc.end(), fm.begin(), fm.end());
    for (Elem m = 0; m < nm; ++m) {
      const std::size_t h = precompose[f][m];
      act.push_back(candidates[h].empty() ? added_id[h] : section[h]);
    }
    added_maps.push_back(fm);
  }
  XMGraph hull = validate_graph(ctx, nv, na + added.size(), std::move(inc), std::move(act));
  std::vector<VertexId> vmap(nv);
  std::vector<ArcId> amap(na);
  for (VertexId v = 0; v < nv; ++v) vmap[v] = v;
  for (ArcId a = 0; a < na; ++a) amap[a] = a;
  GraphMorphism emb{g, hull, std::move(vmap), std::move(amap)};
  return {std::move(hull), std::move(emb), std::move(added_maps)};
}

std::vector<ArcId> hull_into_coextension(const HullResult& h, const XMGraph& g) {
  if (g.num_arcs() == 0 || g.num_vertices() == 0) {
    throw Error("the hull embeds into the coextension only when G has a vertex and an arc");
  }
  Coextension inj(g.context(), restriction(g));
  const std::size_t na = g.num_arcs();
  const std::size_t nm = g.context()->elements();
  std::vector<ArcId> codes(h.hull.num_arcs());
  std::vector<ArcId> s(nm);
  for (ArcId b = 0; b < h.hull.num_arcs(); ++b) {
    for (Elem m = 0; m < nm; ++m) {
      const ArcId bm = h.hull.act(b, m);
      s[m] = bm < na ? bm : 0;
    }
    codes[b] = inj.encode(h.hull.boundary(b), s);
  }
  return codes;
}

std::vector<ArcId> minimal_generating_arcs(const XMGraph& g) {
  const std::size_t n = g.num_arcs();
  const std::size_t nm = g.context()->elements();
  // Iterative Tarjan.
  std::vector<std::size_t> index(n, npos), low(n, 0), comp(n, npos);
  std::vector<bool> on_stack(n, false);
  std::vector<ArcId> stack;
  std::vector<std::pair<ArcId, Elem>> call;
  std::size_t counter = 0;
  std::size_t num_comps = 0;
  for (ArcId root = 0; root < n; ++root) {
    if (index[root] != npos) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [a, m] = call.back();
      if (m < nm) {
        const ArcId b = g.act(a, m++);
        if (index[b] == npos) {
          index[b] = low[b] = counter++;
          stack.push_back(b);
          on_stack[b] = true;
          call.emplace_back(b, 0);
        } else if (on_stack[b]) {
          low[a] = std::min(low[a], index[b]);
        }
        continue;
      }
      const ArcId done = a;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        ArcId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = num_comps;
        } while (w != done);
        ++num_comps;
      }
    }
  }
  std::vector<bool> has_incoming(num_comps, false);
  std::vector<ArcId> smallest(num_comps, npos);
  for (ArcId a = 0; a < n; ++a) {
    smallest[comp[a]] = std::min(smallest[comp[a]], a);
    for (Elem m = 0; m < nm; ++m) {
      const ArcId b = g.act(a, m);
      if (comp[b] != comp[a]) has_incoming[comp[b]] = true;
    }
  }
  std::vector<ArcId> out;
  for (std::size_t c = 0; c < num_comps; ++c) {
    if (!has_incoming[c]) out.push_back(smallest[c]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CoverResult projective_cover(const XMGraph& g) {
  std::vector<VertexId> s = isolated_vertices(g);
  std::vector<ArcId> t = minimal_generating_arcs(g);
  GraphMorphism e = copies_morphism(g, s, t);
  XMGraph cover = e.source;
  return {std::move(cover), std::move(e), std::move(s), std::move(t)};
}

GraphMorphism cover_into_proj(const CoverResult& c, const XMGraph& g) {
  const ContextPtr& ctx = g.context();
  const ExtensionLayout from = extension_layout(*ctx, {c.isolated.size(), c.generators.size()});
  const ExtensionLayout to = extension_layout(*ctx, restriction(g));
  std::vector<VertexId> vmap(c.cover.num_vertices());
  std::vector<ArcId> amap(c.cover.num_arcs());
  for (std::size_t i = 0; i < c.isolated.size(); ++i) vmap[from.vertex(i)] = to.vertex(c.isolated[i]);
  for (std::size_t j = 0; j < c.generators.size(); ++j) {
    for (Point x = 0; x < ctx->points(); ++x) {
      vmap[from.arc_vertex(j, x)] = to.arc_vertex(c.generators[j], x);
    }
    for (Elem m = 0; m < ctx->elements(); ++m) {
      amap[from.arc(j, m)] = to.arc(c.generators[j], m);
    }
  }
  return {c.cover, iota_extend(ctx, restriction(g)), std::move(vmap), std::move(amap)};
}

EssentialMonoResult is_essential_mono(const GraphMorphism& i) {
  if (!morphism_classify(i).mono) throw NotMono();
  const XMGraph& t = i.target;
  std::vector<bool> img_v(t.num_vertices(), false);
  std::vector<bool> img_a(t.num_arcs(), false);
  for (VertexId v : i.vmap) img_v[v] = true;
  for (ArcId a : i.amap) img_a[a] = true;

  // Vertex merges force nothing, so a vertex pair collapses the image only
  // when both ends lie in it.
  for (VertexId u = 0; u < t.num_vertices(); ++u) {
    for (VertexId w = u + 1; w < t.num_vertices(); ++w) {
      if (!(img_v[u] && img_v[w])) {
        return {false, ElementPair{{Sort::Vertex, u}, {Sort::Vertex, w}}};
      }
    }
  }
  std::vector<std::size_t> hits_v, hits_a;
  for (ArcId a = 0; a < t.num_arcs(); ++a) {
    for (ArcId b = a + 1; b < t.num_arcs(); ++b) {
      if (img_a[a] && img_a[b]) continue;
      const Congruence c = generate_congruence(t, {{{Sort::Arc, a}, {Sort::Arc, b}}});
      hits_v.assign(c.num_vertex_classes, 0);
      hits_a.assign(c.num_arc_classes, 0);
      bool collapses = false;
      for (VertexId v : i.vmap) collapses = collapses || ++hits_v[c.vertex_class[v]] > 1;
      for (ArcId x : i.amap) collapses = collapses || ++hits_a[c.arc_class[x]] > 1;
      if (!collapses) return {false, ElementPair{{Sort::Arc, a}, {Sort::Arc, b}}};
    }
  }
  return {true, std::nullopt};
}

EssentialEpiResult is_essential_epi(const GraphMorphism& e) {
  if (!morphism_classify(e).epi) throw NotEpi();
  const XMGraph& s = e.source;
  const XMGraph& t = e.target;
  auto still_epi = [&](const Subgraph& sub) {
    std::vector<bool> hit_v(t.num_vertices(), false);
    std::vector<bool> hit_a(t.num_arcs(), false);
    for (VertexId v = 0; v < s.num_vertices(); ++v) {
      if (sub.vertices[v]) hit_v[e.vmap[v]] = true;
    }
    for (ArcId a = 0; a < s.num_arcs(); ++a) {
      if (sub.arcs[a]) hit_a[e.amap[a]] = true;
    }
    return std::all_of(hit_v.begin(), hit_v.end(), [](bool b) { return b; }) &&
           std::all_of(hit_a.begin(), hit_a.end(), [](bool b) { return b; });
  };
  for (VertexId v = 0; v < s.num_vertices(); ++v) {
    if (still_epi(avoiding(s, {Sort::Vertex, v}))) return {false, Element{Sort::Vertex, v}};
  }
  for (ArcId a = 0; a < s.num_arcs(); ++a) {
    if (still_epi(avoiding(s, {Sort::Arc, a}))) return {false, Element{Sort::Arc, a}};
  }
  return {true, std::nullopt};
}

}  // namespace xmg
