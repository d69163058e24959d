#pragma once

// Generators for test inputs: the context list, exhaustive small graph
// families (up to isomorphism), and seeded random quotients of coproducts of
// representables.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xmg/algebra.hpp"
#include "xmg/graph.hpp"

namespace xmg::testing {

struct NamedContext {
  std::string name;
  ContextPtr ctx;
};

// S2 on n points: swaps 0 and 1 when n >= 2, trivial otherwise.
ContextPtr s2_on(std::size_t n);
// S3 on n points: natural for n = 3, by sign for n = 2, trivial below.
ContextPtr s3_on(std::size_t n);

// |X| = 0..3 crossed with M in {1, S2, S3, idempotent}.
std::vector<NamedContext> count_contexts();
// The contexts the exhaustive family is generated over.
std::vector<NamedContext> family_contexts();

// Right M-set tables on n arcs up to isomorphism, flattened [a * |M| + m]
// with the anti-action convention alpha.(m' m) = (alpha.m).m'.
std::vector<std::vector<ArcId>> arc_actions(const Context& ctx, std::size_t n);

// Every graph with at most max_vertices vertices and max_arcs arcs, one per
// isomorphism class.
std::vector<XMGraph> exhaustive_family(const ContextPtr& ctx, std::size_t max_vertices,
                                       std::size_t max_arcs);
inline std::vector<XMGraph> tiny_family(const ContextPtr& ctx) {
  return exhaustive_family(ctx, 2, 2);
}

// |G(V)|^|X| * |G(A)|^|M|, saturating at UINT64_MAX.
std::uint64_t inj_arc_count(const XMGraph& g);

// A quotient of a random coproduct of V's and A's by a few random pairs,
// with Inj(G) at most inj_limit arcs.
XMGraph random_graph(const ContextPtr& ctx, std::mt19937_64& rng,
                     std::uint64_t inj_limit = std::uint64_t{1} << 20);

// A morphism out of g onto a further random quotient.
GraphMorphism random_projection(const XMGraph& g, std::mt19937_64& rng);

bool isomorphic(const XMGraph& a, const XMGraph& b);
// An isomorphism a -> b restricting to the identity on the first
// num_fixed_vertices vertices and num_fixed_arcs arcs.
bool isomorphic_over(const XMGraph& a, const XMGraph& b, std::size_t num_fixed_vertices,
                     std::size_t num_fixed_arcs);

std::string describe(const XMGraph& g);

}  // namespace xmg::testing
