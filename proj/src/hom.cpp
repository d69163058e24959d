#include "xmg/hom.hpp"

#include <algorithm>

#include "xmg/error.hpp"

namespace xmg {

namespace {

class HomSearch {
 public:
  HomSearch(const XMGraph& g, const XMGraph& h, const HomVisitor& visit)
      : g_(g), h_(h), ctx_(*g.context()), visit_(visit),
        vmap_(g.num_vertices(), npos), amap_(g.num_arcs(), npos) {}

  // Seeds fixed images; false if they are already inconsistent.
  bool seed(std::span<const VertexId> fixed_v, std::span<const ArcId> fixed_a) {
    for (VertexId v = 0; v < fixed_v.size(); ++v) {
      if (fixed_v[v] != npos) vmap_[v] = fixed_v[v];
    }
    for (ArcId a = 0; a < fixed_a.size(); ++a) {
      if (fixed_a[a] == npos || amap_[a] != npos) continue;
      if (!assign(a, fixed_a[a])) return false;
    }
    trail_v_.clear();
    trail_a_.clear();
    return true;
  }

  bool run() {
    free_vertices_.clear();
    std::vector<bool> touched(g_.num_vertices(), false);
    for (VertexId v : g_.incidence_table()) touched[v] = true;
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      if (!touched[v] && vmap_[v] == npos) free_vertices_.push_back(v);
    }
    return arcs(0);
  }

 private:
  // Assigns alpha |-> beta and everything it forces; undo via trails.
  bool assign(ArcId alpha, ArcId beta) {
    for (Elem m = 0; m < ctx_.elements(); ++m) {
      ArcId a = g_.act(alpha, m);
      ArcId b = h_.act(beta, m);
      if (amap_[a] == npos) {
        amap_[a] = b;
        trail_a_.push_back(a);
      } else if (amap_[a] != b) {
        return false;
      }
    }
    for (Point x = 0; x < ctx_.points(); ++x) {
      VertexId v = g_.incidence(alpha, x);
      VertexId w = h_.incidence(beta, x);
      if (vmap_[v] == npos) {
        vmap_[v] = w;
        trail_v_.push_back(v);
      } else if (vmap_[v] != w) {
        return false;
      }
    }
    return true;
  }

  void undo(std::size_t va, std::size_t aa) {
    while (trail_v_.size() > va) {
      vmap_[trail_v_.back()] = npos;
      trail_v_.pop_back();
    }
    while (trail_a_.size() > aa) {
      amap_[trail_a_.back()] = npos;
      trail_a_.pop_back();
    }
  }

  bool arcs(ArcId next) {
    while (next < g_.num_arcs() && amap_[next] != npos) ++next;
    if (next == g_.num_arcs()) return vertices(0);
    for (ArcId beta = 0; beta < h_.num_arcs(); ++beta) {
      const std::size_t va = trail_v_.size();
      const std::size_t aa = trail_a_.size();
      bool keep_going = true;
      if (assign(next, beta)) keep_going = arcs(next + 1);
      undo(va, aa);
      if (!keep_going) return false;
    }
    return true;
  }

  bool vertices(std::size_t i) {
    if (i == free_vertices_.size()) return visit_(vmap_, amap_);
    const VertexId v = free_vertices_[i];
    for (VertexId w = 0; w < h_.num_vertices(); ++w) {
      vmap_[v] = w;
      if (!vertices(i + 1)) {
        vmap_[v] = npos;
        return false;
      }
    }
    vmap_[v] = npos;
    return true;
  }

  const XMGraph& g_;
  const XMGraph& h_;
  const Context& ctx_;
  const HomVisitor& visit_;
  std::vector<VertexId> vmap_;
  std::vector<ArcId> amap_;
  std::vector<VertexId> trail_v_;
  std::vector<ArcId> trail_a_;
  std::vector<VertexId> free_vertices_;
};

}  // namespace

bool for_each_hom(const XMGraph& g, const XMGraph& h, const HomVisitor& visit) {
  if (!same_context(g.context(), h.context())) throw ContextMismatch();
  HomSearch search(g, h, visit);
  return search.run();
}

bool for_each_hom_extending(const XMGraph& g, const XMGraph& h,
                            std::span<const VertexId> fixed_vmap,
                            std::span<const ArcId> fixed_amap, const HomVisitor& visit) {
  if (!same_context(g.context(), h.context())) throw ContextMismatch();
  HomSearch search(g, h, visit);
  // Vertices are seeded first, so an arc forcing a conflicting image fails.
  if (!search.seed(fixed_vmap, fixed_amap)) return true;
  return search.run();
}

std::size_t count_homs(const XMGraph& g, const XMGraph& h) {
  std::size_t n = 0;
  for_each_hom(g, h, [&](auto, auto) {
    ++n;
    return true;
  });
  return n;
}

std::vector<GraphMorphism> hom_enumerate(const XMGraph& g, const XMGraph& h) {
  std::vector<std::pair<std::vector<VertexId>, std::vector<ArcId>>> found;
  for_each_hom(g, h, [&](std::span<const VertexId> v, std::span<const ArcId> a) {
    found.emplace_back(std::vector<VertexId>(v.begin(), v.end()),
                       std::vector<ArcId>(a.begin(), a.end()));
    return true;
  });
  std::sort(found.begin(), found.end());
  std::vector<GraphMorphism> out;
  out.reserve(found.size());
  for (auto& [v, a] : found) out.push_back({g, h, std::move(v), std::move(a)});
  return out;
}

}  // namespace xmg
