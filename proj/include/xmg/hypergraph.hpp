#pragma once

// Hypergraphs (edges carry vertex sets, possibly empty), their k-bounded
// coreflection, and the nerve/realization bridge to (X, Aut(X))-graphs.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xmg/graph.hpp"

namespace xmg {

using EdgeId = std::size_t;
using VertexSet = std::vector<VertexId>;  // sorted, no repeats

class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_edges() const noexcept { return phi_.size(); }
  const VertexSet& phi(EdgeId e) const { return phi_[e]; }
  const std::vector<VertexSet>& phi_table() const noexcept { return phi_; }
  std::size_t max_edge_size() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  friend Hypergraph make_hypergraph(std::size_t, std::vector<VertexSet>);
  std::size_t num_vertices_ = 0;
  std::vector<VertexSet> phi_;
};

// Sorts and deduplicates each edge set. Throws LawViolation (TableShape)
// with witness (edge, vertex) for an out-of-range vertex.
Hypergraph make_hypergraph(std::size_t num_vertices, std::vector<VertexSet> phi);

struct HypergraphMorphism {
  Hypergraph source;
  Hypergraph target;
  std::vector<VertexId> vmap;
  std::vector<EdgeId> emap;

  bool operator==(const HypergraphMorphism&) const = default;
};

// phi'(emap(e)) = vmap[phi(e)], the direct image.
bool is_hyper_morphism(const Hypergraph& s, const Hypergraph& t, std::span<const VertexId> vmap,
                       std::span<const EdgeId> emap);
// Throws LawViolation (EdgeSquare / TableShape).
HypergraphMorphism make_hyper_morphism(Hypergraph s, Hypergraph t, std::vector<VertexId> vmap,
                                       std::vector<EdgeId> emap);
HypergraphMorphism hyper_identity(const Hypergraph& h);
HypergraphMorphism hyper_compose(const HypergraphMorphism& g, const HypergraphMorphism& f);
bool hyper_is_mono(const HypergraphMorphism& f);
bool hyper_is_epi(const HypergraphMorphism& f);

using HyperHomVisitor = std::function<bool(std::span<const VertexId>, std::span<const EdgeId>)>;
// Enumerates every morphism S -> T agreeing with the fixed entries (npos =
// free); vertices vary slowest. Returns false if the visitor stopped.
bool for_each_hyper_hom(const Hypergraph& s, const Hypergraph& t, std::span<const VertexId> fixed_v,
                        std::span<const EdgeId> fixed_e, const HyperHomVisitor& visit);
bool for_each_hyper_hom(const Hypergraph& s, const Hypergraph& t, const HyperHomVisitor& visit);
std::vector<HypergraphMorphism> hyper_hom_enumerate(const Hypergraph& s, const Hypergraph& t);
// Whether some morphism S -> T extends the fixed entries; cheaper than
// enumeration because edges are chosen independently.
bool hyper_hom_exists(const Hypergraph& s, const Hypergraph& t, std::span<const VertexId> fixed_v,
                      std::span<const EdgeId> fixed_e);

// I(V): one vertex, no edges.
Hypergraph hyper_point();
// I(A) for |X| = n: n vertices and one edge on all of them.
Hypergraph hyper_full_edge(std::size_t n);
// E_k: k vertices and one edge on all of them (E_0 is a lone empty edge).
inline Hypergraph hyper_e(std::size_t k) { return hyper_full_edge(k); }

struct HyperNerve {
  XMGraph graph;
  std::vector<EdgeId> edge_of_arc;
};

// Arcs are (e, f : X -> H(V)) with image(f) = phi(e), grouped by edge and
// then by map code; (e, f).sigma = (e, f . rho_sigma). Throws MonoidNotAut.
HyperNerve nerve_hyper(const ContextPtr& ctx, const Hypergraph& h);
GraphMorphism nerve_hyper_map(const ContextPtr& ctx, const HypergraphMorphism& f);

struct HyperRealization {
  Hypergraph hyper;
  std::vector<EdgeId> edge_of_arc;  // the orbit class of each arc
};

// Edges are arc orbits, numbered by smallest member; phi([a]) = image of
// boundary(a). Throws MonoidNotAut.
HyperRealization realize_hyper(const XMGraph& g);
HypergraphMorphism realize_hyper_map(const GraphMorphism& f);

// R(N(H)) -> H: identity on vertices, [(e, f)] |-> e.
HypergraphMorphism counit_hyper(const ContextPtr& ctx, const Hypergraph& h);
// G -> N(R(G)): identity on vertices, a |-> ([a], boundary(a)).
GraphMorphism unit_hyper(const XMGraph& g);

struct Coreflection {
  Hypergraph core;
  HypergraphMorphism inclusion;  // core -> H
};

// Keeps every vertex and the edges with at most k vertices.
Coreflection coreflect_k(const Hypergraph& h, std::size_t k);

struct HyperInjectivity {
  bool injective = false;
  // realizer[mask] = smallest edge with phi = the subset with bitmask mask.
  std::vector<EdgeId> realizer;
  std::optional<VertexSet> unrealized;
};

// Q has a vertex and every subset of Q(V) is some phi(e). Throws Error past
// 24 vertices.
HyperInjectivity hyper_injectivity(const Hypergraph& q);
bool hyper_is_injective(const Hypergraph& q);

// Without k: edgeless. With k: every edge has exactly k vertices and edges
// are pairwise disjoint. Throws NotKBounded if an edge exceeds k.
bool hyper_is_projective(const Hypergraph& p, std::optional<std::size_t> k = std::nullopt);

struct Separator {
  std::size_t probe_size = 0;  // k for E_k; 0 with on_vertex for I(V)
  bool on_vertex = false;
  HypergraphMorphism probe;
};

// A morphism from I(V) or some E_k, k up to the largest edge of the source,
// on which the parallel pair f, g differ; nullopt when f = g.
std::optional<Separator> find_separator(const HypergraphMorphism& f, const HypergraphMorphism& g);

}  // namespace xmg
