#pragma once

// Morphism search shared by hypergraphs and Pi-graphs: both are a vertex set
// plus edges labelled by a vertex collection, and a morphism is a vertex map
// with an edge map respecting the relabelled labels.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "xmg/hom.hpp"

namespace xmg::detail {

using Label = std::vector<std::size_t>;

// For each vertex map agreeing with fixed_v (vertices vary slowest), hands
// the per-edge candidate lists to on_vertices when none is empty. Returns
// false as soon as on_vertices does.
template <class Image, class F>
bool over_vertex_maps(std::size_t s_vertices, const std::vector<Label>& s_labels,
                      std::size_t t_vertices, const std::vector<Label>& t_labels, Image image,
                      std::span<const std::size_t> fixed_v, std::span<const std::size_t> fixed_e,
                      F&& on_vertices) {
  std::map<Label, std::vector<std::size_t>> by_label;
  for (std::size_t e = 0; e < t_labels.size(); ++e) by_label[t_labels[e]].push_back(e);
  std::vector<std::size_t> vmap(s_vertices, 0);
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < s_vertices; ++v) {
    if (v < fixed_v.size() && fixed_v[v] != npos) {
      vmap[v] = fixed_v[v];
    } else {
      free.push_back(v);
    }
  }
  if (!free.empty() && t_vertices == 0) return true;
  const std::vector<std::size_t> none;
  std::vector<std::vector<std::size_t>> candidates(s_labels.size());
  while (true) {
    bool feasible = true;
    for (std::size_t e = 0; e < s_labels.size() && feasible; ++e) {
      auto it = by_label.find(image(s_labels[e], vmap));
      const auto& all = it == by_label.end() ? none : it->second;
      candidates[e].clear();
      if (e < fixed_e.size() && fixed_e[e] != npos) {
        if (std::find(all.begin(), all.end(), fixed_e[e]) != all.end()) {
          candidates[e].push_back(fixed_e[e]);
        }
      } else {
        candidates[e] = all;
      }
      feasible = !candidates[e].empty();
    }
    if (feasible && !on_vertices(std::as_const(vmap), std::as_const(candidates))) return false;
    std::size_t i = free.size();
    while (i > 0) {
      --i;
      if (++vmap[free[i]] < t_vertices) break;
      vmap[free[i]] = 0;
      if (i == 0) return true;
    }
    if (free.empty()) return true;
  }
}

template <class Image, class Visit>
bool for_each_labelled_hom(std::size_t s_vertices, const std::vector<Label>& s_labels,
                           std::size_t t_vertices, const std::vector<Label>& t_labels,
                           Image image, std::span<const std::size_t> fixed_v,
                           std::span<const std::size_t> fixed_e, const Visit& visit) {
  return over_vertex_maps(
      s_vertices, s_labels, t_vertices, t_labels, image, fixed_v, fixed_e,
      [&](const std::vector<std::size_t>& vmap,
          const std::vector<std::vector<std::size_t>>& cand) {
        std::vector<std::size_t> pick(cand.size(), 0);
        std::vector<std::size_t> emap(cand.size());
        while (true) {
          for (std::size_t e = 0; e < cand.size(); ++e) emap[e] = cand[e][pick[e]];
          if (!visit(std::span<const std::size_t>(vmap), std::span<const std::size_t>(emap))) {
            return false;
          }
          std::size_t i = cand.size();
          while (i > 0) {
            --i;
            if (++pick[i] < cand[i].size()) break;
            pick[i] = 0;
            if (i == 0) return true;
          }
          if (cand.empty()) return true;
        }
      });
}

template <class Image>
bool labelled_hom_exists(std::size_t s_vertices, const std::vector<Label>& s_labels,
                         std::size_t t_vertices, const std::vector<Label>& t_labels, Image image,
                         std::span<const std::size_t> fixed_v,
                         std::span<const std::size_t> fixed_e) {
  return !over_vertex_maps(s_vertices, s_labels, t_vertices, t_labels, image, fixed_v, fixed_e,
                           [](const auto&, const auto&) { return false; });
}

}  // namespace xmg::detail
