#pragma once

// Congruences, quotients, subgraphs, and image factorization.

#include <cstddef>
#include <utility>
#include <vector>

#include "xmg/graph.hpp"

namespace xmg {

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    return true;
  }

  std::size_t size() const noexcept { return parent_.size(); }

  // Class index per element, numbered by first occurrence.
  std::vector<std::size_t> labels();

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

// Compatible equivalences on vertices and arcs, as canonical class labels
// (classes numbered in order of their smallest member).
struct Congruence {
  std::vector<std::size_t> vertex_class;
  std::vector<std::size_t> arc_class;
  std::size_t num_vertex_classes = 0;
  std::size_t num_arc_classes = 0;

  bool operator==(const Congruence&) const = default;
};

using ElementPair = std::pair<Element, Element>;

// Smallest congruence containing the pairs: alpha ~ beta forces
// alpha.m ~ beta.m and alpha.x ~ beta.x. Vertex merges force nothing.
// Throws SortMismatch or UnknownElement.
Congruence generate_congruence(const XMGraph& g, const std::vector<ElementPair>& pairs);

struct Quotient {
  Congruence congruence;
  XMGraph object;
  GraphMorphism projection;
};

Quotient congruence_quotient(const XMGraph& g, const std::vector<ElementPair>& pairs);
Quotient quotient_by(const XMGraph& g, const Congruence& c);

// f(alpha) = f(beta) and f(v) = f(w).
Congruence kernel(const GraphMorphism& f);

// f = mono after epi, through the quotient by the kernel.
struct ImageFactorization {
  Quotient image;
  GraphMorphism mono;
};
ImageFactorization image_factorization(const GraphMorphism& f);

// A subset of vertices and arcs closed under incidence and action.
struct Subgraph {
  std::vector<bool> vertices;
  std::vector<bool> arcs;

  bool contains(Element z) const {
    return z.sort == Sort::Vertex ? vertices[z.id] : arcs[z.id];
  }
  bool operator==(const Subgraph&) const = default;
};

// Smallest subgraph containing the seeds. Throws UnknownElement.
Subgraph closure(const XMGraph& g, const std::vector<Element>& seeds);

// Largest subgraph not containing z: every w whose closure misses z.
// Throws UnknownElement.
Subgraph avoiding(const XMGraph& g, Element z);

bool is_subgraph(const XMGraph& g, const Subgraph& s);

// The subgraph as a graph in its own right, with its inclusion.
GraphMorphism subgraph_inclusion(const XMGraph& g, const Subgraph& s);

}  // namespace xmg
