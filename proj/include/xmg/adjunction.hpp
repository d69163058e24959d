#pragma once

// The adjoint triple extend -| restrict -| coextend between pairs of sets and
// (X,M)-graphs, and the refinements Proj = extend . restrict and
// Inj = coextend . restrict with their counit and unit.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "xmg/graph.hpp"

namespace xmg {

// A pair of finite sets (S(V), S(A)) with dense ids.
struct SetPair {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  auto operator<=>(const SetPair&) const = default;
};

// A morphism of pairs of sets.
struct SetPairMap {
  std::vector<std::size_t> vmap;
  std::vector<std::size_t> amap;
  bool operator==(const SetPairMap&) const = default;
};

SetPair restriction(const XMGraph& g);

// Where the copies live inside the extension of S: first one vertex per
// element of S(V), then |X| vertices and |M| arcs per element of S(A).
struct ExtensionLayout {
  SetPair sets;
  std::size_t points = 0;
  std::size_t elements = 0;

  VertexId vertex(std::size_t v) const { return v; }
  VertexId arc_vertex(std::size_t a, Point x) const { return sets.vertices + a * points + x; }
  ArcId arc(std::size_t a, Elem m) const { return a * elements + m; }
};

ExtensionLayout extension_layout(const Context& ctx, SetPair s);
XMGraph iota_extend(const ContextPtr& ctx, SetPair s);

// The coextension of S: vertices S(V), arcs all pairs (f : X -> S(V),
// s : M -> S(A)) with (f,s).x = f(x) and (f,s).m = (f . rho_m, m' |-> s(m' m)).
// Arcs are numbered lexicographically on (f, s) with x = 0 and m = 0 most
// significant; nothing is materialized until asked.
class Coextension {
 public:
  Coextension(ContextPtr ctx, SetPair s);

  const ContextPtr& context() const noexcept { return ctx_; }
  SetPair sets() const noexcept { return sets_; }
  std::size_t num_vertices() const noexcept { return sets_.vertices; }
  std::uint64_t num_arcs() const noexcept { return num_arcs_; }

  ArcId encode(std::span<const VertexId> f, std::span<const ArcId> s) const;
  std::vector<VertexId> f_part(ArcId code) const;
  std::vector<ArcId> s_part(ArcId code) const;

  VertexId incidence(ArcId code, Point x) const;
  ArcId act(ArcId code, Elem m) const;

  // Throws Error when the arc set is too large to hold in memory.
  XMGraph materialize() const;

  static constexpr std::uint64_t kMaterializeLimit = std::uint64_t{1} << 22;

 private:
  ContextPtr ctx_;
  SetPair sets_;
  std::uint64_t f_count_ = 1;
  std::uint64_t s_count_ = 1;
  std::uint64_t num_arcs_ = 0;
};

XMGraph iota_coextend(const ContextPtr& ctx, SetPair s);

// How the s-component of the coextension is acted on.
enum class CoextensionReading {
  Consistent,  // (s.m)(m') = s(m' m)
  Literal,     // (s.m)(m') = s(m m'), the other reading order
};

struct RawTables {
  std::size_t num_vertices = 0;
  std::size_t num_arcs = 0;
  std::vector<VertexId> incidence;
  std::vector<ArcId> action;
};

// Unvalidated tables of the coextension under either reading, for feeding
// to validate_graph.
RawTables coextension_tables(const Context& ctx, SetPair s, CoextensionReading reading);

struct Refinement {
  XMGraph object;
  GraphMorphism map;  // counit Proj(G) -> G, or unit G -> Inj(G)
};

// Proj(G) with the epimorphism induced by classifying every vertex and arc.
Refinement proj_refinement(const XMGraph& g);
// Inj(G) with the unit alpha |-> (boundary(alpha), m |-> alpha.m).
Refinement inj_refinement(const XMGraph& g);

// Code of the unit image of alpha inside Coextension(restriction(G)).
ArcId unit_arc(const Coextension& inj, const XMGraph& g, ArcId alpha);

// The refinement functors on a morphism phi : G -> H.
GraphMorphism proj_map(const GraphMorphism& phi);
GraphMorphism inj_map(const GraphMorphism& phi);
// Inj(phi) on a single arc code, without materializing either side.
ArcId inj_map_arc(const Coextension& from, const Coextension& to, const GraphMorphism& phi,
                  ArcId code);

struct TriangleReport {
  std::vector<std::string> failures;
  std::size_t identities_checked = 0;
  std::size_t squares_checked = 0;
  bool sampled = false;  // the coextension triangle visited a stride sample

  bool ok() const noexcept { return failures.empty(); }
};

// Both triangle identities of both adjunctions, at G and at S = restriction(G),
// plus the naturality squares of the counit and unit for every supplied
// morphism (each must start at G).
TriangleReport check_triangles(const XMGraph& g, const std::vector<GraphMorphism>& morphisms = {});
// Triangle identities at S only.
TriangleReport check_triangles(const ContextPtr& ctx, SetPair s);

}  // namespace xmg
