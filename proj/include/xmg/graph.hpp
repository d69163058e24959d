#pragma once

// (X,M)-graphs: presheaves on the two-object theory with X : V -> A and
// M acting on A. Ids are dense; every table is total.
//
// Conventions (checked by validate_graph):
//   alpha.e = alpha
//   (alpha.m).m' = alpha.(m' m)      arcs carry an anti-action of M
//   (alpha.m).x  = alpha.(x.m)       incidence is compatible with the action

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "xmg/algebra.hpp"

namespace xmg {

using VertexId = std::size_t;
using ArcId = std::size_t;

enum class Sort { Vertex, Arc };

struct Element {
  Sort sort;
  std::size_t id;
  auto operator<=>(const Element&) const = default;
};

class XMGraph {
 public:
  // The initial graph over the trivial empty context.
  XMGraph();

  const ContextPtr& context() const noexcept { return d_->ctx; }
  std::size_t num_vertices() const noexcept { return d_->num_vertices; }
  std::size_t num_arcs() const noexcept { return d_->num_arcs; }

  // alpha.x
  VertexId incidence(ArcId a, Point x) const noexcept {
    return d_->incidence[a * d_->ctx->points() + x];
  }
  // alpha.m
  ArcId act(ArcId a, Elem m) const noexcept { return d_->action[a * d_->ctx->elements() + m]; }

  // The parametrized incidence of alpha, indexed by x.
  std::span<const VertexId> boundary(ArcId a) const noexcept {
    const std::size_t w = d_->ctx->points();
    return {d_->incidence.data() + a * w, w};
  }
  // m |-> alpha.m
  std::span<const ArcId> orbit_row(ArcId a) const noexcept {
    const std::size_t w = d_->ctx->elements();
    return {d_->action.data() + a * w, w};
  }

  const std::vector<VertexId>& incidence_table() const noexcept { return d_->incidence; }
  const std::vector<ArcId>& action_table() const noexcept { return d_->action; }

  bool is_initial() const noexcept { return num_vertices() == 0 && num_arcs() == 0; }

  bool operator==(const XMGraph& other) const;

  // Builds without checking laws. Only table shapes are asserted.
  static XMGraph unchecked(ContextPtr ctx, std::size_t num_vertices, std::size_t num_arcs,
                           std::vector<VertexId> incidence, std::vector<ArcId> action);

 private:
  struct Data {
    ContextPtr ctx;
    std::size_t num_vertices = 0;
    std::size_t num_arcs = 0;
    std::vector<VertexId> incidence;  // [arc * |X| + x]
    std::vector<ArcId> action;        // [arc * |M| + m]
  };
  explicit XMGraph(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Checks shapes and the unit, composition, and incidence-compatibility laws.
// Throws LawViolation with witness (alpha), (alpha, m, m'), or (alpha, m, x).
XMGraph validate_graph(ContextPtr ctx, std::size_t num_vertices, std::size_t num_arcs,
                       std::vector<VertexId> incidence, std::vector<ArcId> action);

XMGraph initial_graph(ContextPtr ctx);
// One vertex, one arc, all actions trivial.
XMGraph terminal_graph(ContextPtr ctx);
// n vertices, no arcs.
XMGraph discrete_graph(ContextPtr ctx, std::size_t n);

// The representable V (one vertex) or A (vertices X, arcs M,
// incidence a.x = x.a, action a.m = m a).
XMGraph representable(ContextPtr ctx, Sort sort);

struct GraphMorphism {
  XMGraph source;
  XMGraph target;
  std::vector<VertexId> vmap;
  std::vector<ArcId> amap;

  bool operator==(const GraphMorphism& o) const {
    return vmap == o.vmap && amap == o.amap && source == o.source && target == o.target;
  }
};

// Checks both naturality squares; throws LawViolation (VertexSquare /
// ArcSquare / TableShape) or ContextMismatch.
GraphMorphism make_morphism(XMGraph source, XMGraph target, std::vector<VertexId> vmap,
                            std::vector<ArcId> amap);
bool is_morphism(const XMGraph& source, const XMGraph& target,
                 std::span<const VertexId> vmap, std::span<const ArcId> amap);

GraphMorphism identity_morphism(const XMGraph& g);
// g after f. Throws ContextMismatch when f's target is not g's source.
GraphMorphism compose(const GraphMorphism& g, const GraphMorphism& f);

// The Yoneda morphism A -> G classifying an arc: x |-> alpha.x, m |-> alpha.m.
// Throws UnknownElement.
GraphMorphism classify_arc(const XMGraph& g, ArcId alpha);
// The morphism V -> G picking a vertex.
GraphMorphism classify_vertex(const XMGraph& g, VertexId v);

struct MorphismKind {
  bool mono = false;
  bool epi = false;
  bool iso = false;
};

// Presheaf monos and epis are componentwise.
MorphismKind morphism_classify(const GraphMorphism& f);

struct Coproduct {
  XMGraph object;
  std::vector<GraphMorphism> injections;
};

// Disjoint union; summand i occupies a contiguous block of vertex and arc
// ids after summands 0..i-1. An empty list yields the initial graph over ctx.
Coproduct coproduct(const ContextPtr& ctx, const std::vector<XMGraph>& summands);

}  // namespace xmg
