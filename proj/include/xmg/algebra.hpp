#pragma once

// Finite monoids, right M-sets, and the (X, M) contexts every graph lives over.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace xmg {

using Elem = std::size_t;   // element of the monoid M
using Point = std::size_t;  // element of the carrier X

// A finite monoid stored as a dense multiplication table.
class FiniteMonoid {
 public:
  FiniteMonoid();  // the trivial monoid

  std::size_t size() const noexcept { return size_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[a * size_ + b]; }

  bool is_group() const;
  std::optional<Elem> inverse(Elem a) const;

  // A small set of elements whose closure under left multiplication by
  // generators, starting from the identity, is all of M.
  std::vector<Elem> generators() const;

  std::vector<std::vector<Elem>> table() const;

  bool operator==(const FiniteMonoid&) const = default;

 private:
  friend FiniteMonoid build_monoid(const std::vector<std::vector<Elem>>&, Elem);
  std::size_t size_;
  Elem identity_;
  std::vector<Elem> table_;
};

// Validates the table; throws LawViolation (Associativity / Identity /
// TableShape) with a witness.
FiniteMonoid build_monoid(const std::vector<std::vector<Elem>>& table, Elem identity);

// A right action X x M -> X.
class RightMSet {
 public:
  RightMSet() = default;

  std::size_t size() const noexcept { return size_; }
  std::size_t monoid_size() const noexcept { return monoid_size_; }
  Point act(Point x, Elem m) const noexcept { return table_[x * monoid_size_ + m]; }

  // act as a table indexed [x][m].
  std::vector<std::vector<Point>> table() const;

  bool operator==(const RightMSet&) const = default;

 private:
  friend RightMSet validate_mset(const FiniteMonoid&, const std::vector<std::vector<Point>>&);
  std::size_t size_ = 0;
  std::size_t monoid_size_ = 1;
  std::vector<Point> table_;
};

// act[x][m] = x.m; the carrier size is act.size(), so X may be empty.
// Throws LawViolation (UnitLaw / ActionLaw / TableShape).
RightMSet validate_mset(const FiniteMonoid& monoid, const std::vector<std::vector<Point>>& act);

struct TransformationMonoid {
  FiniteMonoid monoid;
  RightMSet carrier;
  std::vector<std::vector<Point>> maps;  // maps[m] is the self-map of element m
};

// Closure of the generators (and the identity) under composition.
// Multiplication is diagrammatic: mul(f, g) applies f first, then g, so
// evaluation x.f = f(x) is a right action. The identity is element 0 and
// further elements appear in breadth-first order.
TransformationMonoid transformation_monoid(std::size_t n,
                                           const std::vector<std::vector<Point>>& generators);

// The pair (M, X) a family of graphs is defined over.
struct Context {
  FiniteMonoid monoid;
  RightMSet carrier;

  std::size_t points() const noexcept { return carrier.size(); }
  std::size_t elements() const noexcept { return monoid.size(); }
  Point act(Point x, Elem m) const noexcept { return carrier.act(x, m); }
  Elem mul(Elem a, Elem b) const noexcept { return monoid.mul(a, b); }
  Elem identity() const noexcept { return monoid.identity(); }

  bool operator==(const Context&) const = default;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(FiniteMonoid monoid, RightMSet carrier);
bool same_context(const ContextPtr& a, const ContextPtr& b);

// Trivial monoid acting on an n-point set.
ContextPtr trivial_context(std::size_t n);
// Aut(X) for |X| = n, generated by adjacent transpositions.
ContextPtr aut_context(std::size_t n);
// {e, z} with z z = z acting on n points by x.z = 0.
ContextPtr idempotent_context(std::size_t n);
// Submonoid of End(X) generated by the given self-maps.
ContextPtr transformation_context(std::size_t n,
                                  const std::vector<std::vector<Point>>& generators);

// True when M acts on X as the full symmetric group: |M| = n! and the
// action is faithful and by bijections.
bool is_full_automorphism_context(const Context& ctx);

// Elements of M acting on X as transpositions.
std::vector<Elem> transposition_elements(const Context& ctx);

}  // namespace xmg
