#include "xmg/adjunction.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "xmg/error.hpp"

namespace xmg {

namespace {

constexpr std::uint64_t kIndexLimit = std::uint64_t{1} << 62;

// base^exp, or nullopt past kIndexLimit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kIndexLimit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// Visiting every arc of a huge coextension is pointless; stride instead.
constexpr std::uint64_t kTriangleVisitLimit = std::uint64_t{1} << 20;

std::string at(const char* what, std::size_t id) {
  return std::string(what) + " " + std::to_string(id);
}

}  // namespace

SetPair restriction(const XMGraph& g) { return {g.num_vertices(), g.num_arcs()}; }

ExtensionLayout extension_layout(const Context& ctx, SetPair s) {
  return {s, ctx.points(), ctx.elements()};
}

XMGraph iota_extend(const ContextPtr& ctx, SetPair s) {
  const ExtensionLayout l = extension_layout(*ctx, s);
  const std::size_t nx = ctx->points();
  const std::size_t nm = ctx->elements();
  std::vector<VertexId> inc(s.arcs * nm * nx);
  std::vector<ArcId> act(s.arcs * nm * nm);
  for (std::size_t a = 0; a < s.arcs; ++a) {
    for (Elem m = 0; m < nm; ++m) {
      const ArcId id = l.arc(a, m);
      for (Point x = 0; x < nx; ++x) inc[id * nx + x] = l.arc_vertex(a, ctx->act(x, m));
      for (Elem m2 = 0; m2 < nm; ++m2) act[id * nm + m2] = l.arc(a, ctx->mul(m2, m));
    }
  }
  return XMGraph::unchecked(ctx, s.vertices + s.arcs * nx, s.arcs * nm, std::move(inc),
                            std::move(act));
}

Coextension::Coextension(ContextPtr ctx, SetPair s) : ctx_(std::move(ctx)), sets_(s) {
  auto f = checked_pow(s.vertices, ctx_->points());
  auto g = checked_pow(s.arcs, ctx_->elements());
  if (!f || !g || (*g != 0 && *f > kIndexLimit / *g)) {
    throw Error("coextension has too many arcs to index");
  }
  f_count_ = *f;
  s_count_ = *g;
  num_arcs_ = *f * *g;
}

ArcId Coextension::encode(std::span<const VertexId> f, std::span<const ArcId> s) const {
  std::uint64_t cf = 0;
  for (VertexId v : f) cf = cf * sets_.vertices + v;
  std::uint64_t cs = 0;
  for (ArcId a : s) cs = cs * sets_.arcs + a;
  return cf * s_count_ + cs;
}

std::vector<VertexId> Coextension::f_part(ArcId code) const {
  std::vector<VertexId> f(ctx_->points());
  std::uint64_t cf = code / s_count_;
  for (std::size_t i = f.size(); i-- > 0;) {
    f[i] = cf % sets_.vertices;
    cf /= sets_.vertices;
  }
  return f;
}

std::vector<ArcId> Coextension::s_part(ArcId code) const {
  std::vector<ArcId> s(ctx_->elements());
  std::uint64_t cs = code % s_count_;
  for (std::size_t i = s.size(); i-- > 0;) {
    s[i] = cs % sets_.arcs;
    cs /= sets_.arcs;
  }
  return s;
}

VertexId Coextension::incidence(ArcId code, Point x) const { return f_part(code)[x]; }

ArcId Coextension::act(ArcId code, Elem m) const {
  const auto f = f_part(code);
  const auto s = s_part(code);
  std::vector<VertexId> f2(f.size());
  std::vector<ArcId> s2(s.size());
  for (Point x = 0; x < f.size(); ++x) f2[x] = f[ctx_->act(x, m)];
  for (Elem m2 = 0; m2 < s.size(); ++m2) s2[m2] = s[ctx_->mul(m2, m)];
  return encode(f2, s2);
}

RawTables coextension_tables(const Context& ctx, SetPair s, CoextensionReading reading) {
  Coextension shape(std::make_shared<const Context>(ctx), s);
  if (shape.num_arcs() > Coextension::kMaterializeLimit) {
    throw Error("coextension has " + std::to_string(shape.num_arcs()) +
                " arcs, too many to materialize");
  }
  const std::size_t nx = ctx.points();
  const std::size_t nm = ctx.elements();
  const std::size_t n = shape.num_arcs();
  RawTables t;
  t.num_vertices = s.vertices;
  t.num_arcs = n;
  t.incidence.resize(n * nx);
  t.action.resize(n * nm);
  std::vector<VertexId> f2(nx);
  std::vector<ArcId> s2(nm);
  for (ArcId code = 0; code < n; ++code) {
    const auto f = shape.f_part(code);
    const auto sp = shape.s_part(code);
    std::copy(f.begin(), f.end(), t.incidence.begin() + code * nx);
    for (Elem m = 0; m < nm; ++m) {
      for (Point x = 0; x < nx; ++x) f2[x] = f[ctx.act(x, m)];
      for (Elem m2 = 0; m2 < nm; ++m2) {
        s2[m2] = sp[reading == CoextensionReading::Consistent ? ctx.mul(m2, m) : ctx.mul(m, m2)];
      }
      t.action[code * nm + m] = shape.encode(f2, s2);
    }
  }
  return t;
}

XMGraph Coextension::materialize() const {
  RawTables t = coextension_tables(*ctx_, sets_, CoextensionReading::Consistent);
  return XMGraph::unchecked(ctx_, t.num_vertices, t.num_arcs, std::move(t.incidence),
                            std::move(t.action));
}

XMGraph iota_coextend(const ContextPtr& ctx, SetPair s) {
  return Coextension(ctx, s).materialize();
}

namespace {

// Counit components of Proj(G) -> G, given the layout of Proj(G).
GraphMorphism counit_from(const XMGraph& g, XMGraph proj) {
  const Context& ctx = *g.context();
  const ExtensionLayout l = extension_layout(ctx, restriction(g));
  std::vector<VertexId> vmap(proj.num_vertices());
  std::vector<ArcId> amap(proj.num_arcs());
  for (VertexId v = 0; v < g.num_vertices(); ++v) vmap[l.vertex(v)] = v;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    for (Point x = 0; x < ctx.points(); ++x) vmap[l.arc_vertex(a, x)] = g.incidence(a, x);
    for (Elem m = 0; m < ctx.elements(); ++m) amap[l.arc(a, m)] = g.act(a, m);
  }
  return {std::move(proj), g, std::move(vmap), std::move(amap)};
}

}  // namespace

Refinement proj_refinement(const XMGraph& g) {
  XMGraph proj = iota_extend(g.context(), restriction(g));
  GraphMorphism eps = counit_from(g, proj);
  return {std::move(proj), std::move(eps)};
}

ArcId unit_arc(const Coextension& inj, const XMGraph& g, ArcId alpha) {
  return inj.encode(g.boundary(alpha), g.orbit_row(alpha));
}

Refinement inj_refinement(const XMGraph& g) {
  Coextension inj(g.context(), restriction(g));
  XMGraph obj = inj.materialize();
  std::vector<VertexId> vmap(g.num_vertices());
  std::vector<ArcId> amap(g.num_arcs());
  for (VertexId v = 0; v < g.num_vertices(); ++v) vmap[v] = v;
  for (ArcId a = 0; a < g.num_arcs(); ++a) amap[a] = unit_arc(inj, g, a);
  GraphMorphism eta{g, obj, std::move(vmap), std::move(amap)};
  return {std::move(obj), std::move(eta)};
}

GraphMorphism proj_map(const GraphMorphism& phi) {
  if (!same_context(phi.source.context(), phi.target.context())) throw ContextMismatch();
  const Context& ctx = *phi.source.context();
  const ExtensionLayout from = extension_layout(ctx, restriction(phi.source));
  const ExtensionLayout to = extension_layout(ctx, restriction(phi.target));
  XMGraph src = iota_extend(phi.source.context(), from.sets);
  XMGraph dst = iota_extend(phi.target.context(), to.sets);
  std::vector<VertexId> vmap(src.num_vertices());
  std::vector<ArcId> amap(src.num_arcs());
  for (VertexId v = 0; v < from.sets.vertices; ++v) vmap[from.vertex(v)] = to.vertex(phi.vmap[v]);
  for (ArcId a = 0; a < from.sets.arcs; ++a) {
    for (Point x = 0; x < ctx.points(); ++x) {
      vmap[from.arc_vertex(a, x)] = to.arc_vertex(phi.amap[a], x);
    }
    for (Elem m = 0; m < ctx.elements(); ++m) amap[from.arc(a, m)] = to.arc(phi.amap[a], m);
  }
  return {std::move(src), std::move(dst), std::move(vmap), std::move(amap)};
}

ArcId inj_map_arc(const Coextension& from, const Coextension& to, const GraphMorphism& phi,
                  ArcId code) {
  auto f = from.f_part(code);
  auto s = from.s_part(code);
  for (auto& v : f) v = phi.vmap[v];
  for (auto& a : s) a = phi.amap[a];
  return to.encode(f, s);
}

GraphMorphism inj_map(const GraphMorphism& phi) {
  if (!same_context(phi.source.context(), phi.target.context())) throw ContextMismatch();
  Coextension from(phi.source.context(), restriction(phi.source));
  Coextension to(phi.target.context(), restriction(phi.target));
  XMGraph src = from.materialize();
  XMGraph dst = to.materialize();
  std::vector<ArcId> amap(src.num_arcs());
  for (ArcId code = 0; code < src.num_arcs(); ++code) amap[code] = inj_map_arc(from, to, phi, code);
  return {std::move(src), std::move(dst), phi.vmap, std::move(amap)};
}

namespace {

// epsilon_{extend S} . extend(u_S) = id.
void triangle_extend(const ContextPtr& ctx, SetPair s, TriangleReport& r) {
  const ExtensionLayout small = extension_layout(*ctx, s);
  XMGraph ext = iota_extend(ctx, s);
  const ExtensionLayout big = extension_layout(*ctx, restriction(ext));
  GraphMorphism eps = counit_from(ext, iota_extend(ctx, restriction(ext)));
  // extend(u_S) sends the copy of v to the copy of u(v), and the copy of a to
  // the copy of u(a) = (a, e).
  const Elem e = ctx->identity();
  for (std::size_t v = 0; v < s.vertices; ++v) {
    ++r.identities_checked;
    if (eps.vmap[big.vertex(small.vertex(v))] != small.vertex(v)) {
      r.failures.push_back("extend triangle fails at " + at("vertex copy", v));
    }
  }
  for (std::size_t a = 0; a < s.arcs; ++a) {
    const std::size_t ua = small.arc(a, e);
    for (Point x = 0; x < ctx->points(); ++x) {
      ++r.identities_checked;
      if (eps.vmap[big.arc_vertex(ua, x)] != small.arc_vertex(a, x)) {
        r.failures.push_back("extend triangle fails at " + at("vertex", small.arc_vertex(a, x)));
      }
    }
    for (Elem m = 0; m < ctx->elements(); ++m) {
      ++r.identities_checked;
      if (eps.amap[big.arc(ua, m)] != small.arc(a, m)) {
        r.failures.push_back("extend triangle fails at " + at("arc", small.arc(a, m)));
      }
    }
  }
}

// coextend(c_S) . eta_{coextend S} = id, elementwise on codes.
void triangle_coextend(const ContextPtr& ctx, SetPair s, TriangleReport& r) {
  Coextension inj(ctx, s);
  const std::uint64_t n = inj.num_arcs();
  const std::uint64_t stride = n > kTriangleVisitLimit ? (n + kTriangleVisitLimit - 1) / kTriangleVisitLimit : 1;
  if (stride > 1) r.sampled = true;
  const Elem e = ctx->identity();
  std::vector<ArcId> s2(ctx->elements());
  for (std::uint64_t code = 0; code < n; code += stride) {
    // eta(code) = (f, m |-> code.m); coextend(c) keeps f and applies c.
    const auto f = inj.f_part(code);
    for (Elem m = 0; m < ctx->elements(); ++m) s2[m] = inj.s_part(inj.act(code, m))[e];
    ++r.identities_checked;
    if (inj.encode(f, s2) != code) {
      r.failures.push_back("coextend triangle fails at " + at("arc code", code));
    }
  }
}

}  // namespace

TriangleReport check_triangles(const ContextPtr& ctx, SetPair s) {
  TriangleReport r;
  triangle_extend(ctx, s, r);
  triangle_coextend(ctx, s, r);
  return r;
}

TriangleReport check_triangles(const XMGraph& g, const std::vector<GraphMorphism>& morphisms) {
  const ContextPtr& ctx = g.context();
  TriangleReport r = check_triangles(ctx, restriction(g));
  const Elem e = ctx->identity();

  // restrict(eps_G) . u_{restrict G} = id.
  Refinement proj = proj_refinement(g);
  const ExtensionLayout l = extension_layout(*ctx, restriction(g));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    ++r.identities_checked;
    if (proj.map.vmap[l.vertex(v)] != v) {
      r.failures.push_back("restrict triangle (left) fails at " + at("vertex", v));
    }
  }
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    ++r.identities_checked;
    if (proj.map.amap[l.arc(a, e)] != a) {
      r.failures.push_back("restrict triangle (left) fails at " + at("arc", a));
    }
  }

  // c_{restrict G} . restrict(eta_G) = id. Vertices are fixed by both.
  Coextension inj(ctx, restriction(g));
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    ++r.identities_checked;
    if (inj.s_part(unit_arc(inj, g, a))[e] != a) {
      r.failures.push_back("restrict triangle (right) fails at " + at("arc", a));
    }
  }

  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const GraphMorphism& phi = morphisms[i];
    if (!(phi.source == g)) throw Error("morphism " + std::to_string(i) + " does not start at G");
    const std::string tag = "morphism " + std::to_string(i) + ": ";
    // eps_H . Proj(phi) = phi . eps_G
    GraphMorphism pm = proj_map(phi);
    Refinement proj_h = proj_refinement(phi.target);
    for (VertexId v = 0; v < pm.source.num_vertices(); ++v) {
      ++r.squares_checked;
      if (proj_h.map.vmap[pm.vmap[v]] != phi.vmap[proj.map.vmap[v]]) {
        r.failures.push_back(tag + "counit square fails at " + at("vertex", v));
      }
    }
    for (ArcId a = 0; a < pm.source.num_arcs(); ++a) {
      ++r.squares_checked;
      if (proj_h.map.amap[pm.amap[a]] != phi.amap[proj.map.amap[a]]) {
        r.failures.push_back(tag + "counit square fails at " + at("arc", a));
      }
    }
    // eta_H . phi = Inj(phi) . eta_G, vertexwise trivially.
    Coextension inj_h(ctx, restriction(phi.target));
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      ++r.squares_checked;
      if (unit_arc(inj_h, phi.target, phi.amap[a]) != inj_map_arc(inj, inj_h, phi, unit_arc(inj, g, a))) {
        r.failures.push_back(tag + "unit square fails at " + at("arc", a));
      }
    }
  }
  return r;
}

}  // namespace xmg
