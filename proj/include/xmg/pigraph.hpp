#pragma once

// Symmetric powers and Pi_X-graphs: edges labelled by multisets of |X|
// vertices, with the nerve into (X, Aut(X))-graphs and its realization.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "xmg/graph.hpp"
#include "xmg/hypergraph.hpp"

namespace xmg {

// Canonical form: the sorted tuple.
using Multiset = std::vector<VertexId>;

Multiset canonical(std::vector<VertexId> tuple);
// Every multiset of the given size over y elements, in lexicographic order.
std::vector<Multiset> sym_power(std::size_t y, std::size_t arity);
// The induced map Pi(Y) -> Pi(Z) along j : Y -> Z.
Multiset sym_power_map(const Multiset& q, std::span<const std::size_t> j);
// y |-> (y, ..., y)
Multiset sym_unit(VertexId y, std::size_t arity);

class PiGraph {
 public:
  PiGraph() = default;

  std::size_t arity() const noexcept { return arity_; }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return phi_.size(); }
  const Multiset& phi(EdgeId e) const { return phi_[e]; }
  const std::vector<Multiset>& phi_table() const noexcept { return phi_; }

  bool operator==(const PiGraph&) const = default;

 private:
  friend PiGraph make_pigraph(std::size_t, std::size_t, std::vector<Multiset>);
  std::size_t arity_ = 0;
  std::size_t num_vertices_ = 0;
  std::vector<Multiset> phi_;
};

// Canonicalizes each label. Throws LawViolation (TableShape) with witness
// (edge) for a wrong cardinality or (edge, vertex) for an unknown vertex.
PiGraph make_pigraph(std::size_t arity, std::size_t num_vertices, std::vector<Multiset> phi);

struct PiMorphism {
  PiGraph source;
  PiGraph target;
  std::vector<VertexId> vmap;
  std::vector<EdgeId> emap;

  bool operator==(const PiMorphism&) const = default;
};

bool is_pi_morphism(const PiGraph& s, const PiGraph& t, std::span<const VertexId> vmap,
                    std::span<const EdgeId> emap);
// Throws LawViolation (EdgeSquare / TableShape).
PiMorphism make_pi_morphism(PiGraph s, PiGraph t, std::vector<VertexId> vmap,
                            std::vector<EdgeId> emap);
bool pi_is_mono(const PiMorphism& f);
bool pi_is_epi(const PiMorphism& f);

using PiHomVisitor = std::function<bool(std::span<const VertexId>, std::span<const EdgeId>)>;
bool for_each_pi_hom(const PiGraph& s, const PiGraph& t, std::span<const VertexId> fixed_v,
                     std::span<const EdgeId> fixed_e, const PiHomVisitor& visit);
std::vector<PiMorphism> pi_hom_enumerate(const PiGraph& s, const PiGraph& t);
bool pi_hom_exists(const PiGraph& s, const PiGraph& t, std::span<const VertexId> fixed_v,
                   std::span<const EdgeId> fixed_e);

struct PiNerve {
  XMGraph graph;
  std::vector<EdgeId> edge_of_arc;
};

// Arcs are (e, g : X -> P(V)) with sorted(g) = phi(e), grouped by edge and
// then lexicographically on g. Throws MonoidNotAut, or Error when the
// arity differs from |X|.
PiNerve nerve_pi(const ContextPtr& ctx, const PiGraph& p);
GraphMorphism nerve_pi_map(const ContextPtr& ctx, const PiMorphism& f);

struct PiRealization {
  PiGraph pi;
  std::vector<EdgeId> edge_of_arc;
};

// Edges are arc orbits, numbered by smallest member; phi([a]) is the
// multiset of boundary(a). Throws MonoidNotAut.
PiRealization realize_pi(const XMGraph& g);
PiMorphism realize_pi_map(const GraphMorphism& f);

// G -> N(R(G)): identity on vertices, a |-> ([a], boundary(a)).
GraphMorphism unit_pi(const XMGraph& g);
// R(N(P)) -> P: identity on vertices, [(e, g)] |-> e.
PiMorphism counit_pi(const ContextPtr& ctx, const PiGraph& p);

struct PiDeciders {
  bool injective = false;
  bool projective = false;
};

// The (X,M)-graph deciders applied to the nerve.
PiDeciders pi_deciders(const ContextPtr& ctx, const PiGraph& q);

}  // namespace xmg
