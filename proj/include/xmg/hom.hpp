#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "xmg/graph.hpp"

namespace xmg {

// Receives each morphism as (vmap, amap); return false to stop.
using HomVisitor = std::function<bool(std::span<const VertexId>, std::span<const ArcId>)>;

// Backtracking over G -> H. Arcs are assigned in id order; an assignment
// alpha |-> beta forces alpha.m |-> beta.m and alpha.x |-> beta.x, so only
// arcs not yet forced branch. Vertices never touched by an arc branch last.
// Visit order is deterministic but not lexicographic. Returns false if the
// visitor stopped the search.
bool for_each_hom(const XMGraph& g, const XMGraph& h, const HomVisitor& visit);

// Like for_each_hom, with some images fixed in advance (npos = free).
bool for_each_hom_extending(const XMGraph& g, const XMGraph& h,
                            std::span<const VertexId> fixed_vmap,
                            std::span<const ArcId> fixed_amap, const HomVisitor& visit);

std::size_t count_homs(const XMGraph& g, const XMGraph& h);

// Complete duplicate-free list, sorted lexicographically on (vmap, amap).
// Throws ContextMismatch.
std::vector<GraphMorphism> hom_enumerate(const XMGraph& g, const XMGraph& h);

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace xmg
