#pragma once

// Injective and projective (X,M)-graphs: deciders, hulls, covers, and
// essentiality checks.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "xmg/graph.hpp"
#include "xmg/quotient.hpp"

namespace xmg {

// Maps X -> V are indexed by the base-|V| number with x = 0 most significant.
std::size_t map_count(std::size_t num_vertices, std::size_t points);
std::vector<VertexId> decode_map(std::size_t code, std::size_t num_vertices, std::size_t points);
std::size_t encode_map(std::span<const VertexId> f, std::size_t num_vertices);

struct InjectivityCertificate {
  bool injective = false;
  // For each map code, the smallest arc with that incidence (npos if none).
  std::vector<ArcId> realizer;
  // Set when not injective and Q has a vertex.
  std::optional<std::vector<VertexId>> unrealized;
};

// Q has a vertex and every map X -> Q(V) is the incidence of some arc.
InjectivityCertificate injectivity_certificate(const XMGraph& q);
bool is_injective(const XMGraph& q);

struct ProjectiveDecomposition {
  std::vector<VertexId> isolated;   // S, ascending
  std::vector<ArcId> generators;    // T, one per block, ascending
  GraphMorphism iso;                // coproduct of S copies of V and T copies of A, onto P
};

std::optional<ProjectiveDecomposition> decompose_projective(const XMGraph& p);
bool is_projective(const XMGraph& p);

struct HullResult {
  XMGraph hull;
  GraphMorphism embedding;
  std::vector<std::vector<VertexId>> added_arcs;  // incidence of each added arc, in id order
};

// Throws HullSectionNotFound when no equivariant section exists.
HullResult injective_hull(const XMGraph& g);

// The mono hull -> Inj(G) as arc codes of Coextension(restriction(G)):
// beta |-> (boundary(beta), m |-> tau(beta.m)) with tau fixing G(A) and
// sending added arcs to arc 0. Vertices map identically. Needs an arc in G.
std::vector<ArcId> hull_into_coextension(const HullResult& h, const XMGraph& g);

// In the digraph on arcs with edges alpha -> alpha.m, the smallest arc of
// each source strongly connected component, ascending.
std::vector<ArcId> minimal_generating_arcs(const XMGraph& g);

struct CoverResult {
  XMGraph cover;
  GraphMorphism projection;
  std::vector<VertexId> isolated;
  std::vector<ArcId> generators;
};

CoverResult projective_cover(const XMGraph& g);

// The copy-to-copy mono cover -> Proj(G).
GraphMorphism cover_into_proj(const CoverResult& c, const XMGraph& g);

struct EssentialMonoResult {
  bool essential = false;
  // A pair whose generated congruence is injective on the image.
  std::optional<ElementPair> witness;
};

// Throws NotMono.
EssentialMonoResult is_essential_mono(const GraphMorphism& i);

struct EssentialEpiResult {
  bool essential = false;
  // An element whose avoiding subgraph still maps onto the target.
  std::optional<Element> witness;
};

// Throws NotEpi.
EssentialEpiResult is_essential_epi(const GraphMorphism& e);

}  // namespace xmg
