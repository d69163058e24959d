#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xmg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Which algebraic law a table failed.
enum class Law {
  Associativity,    // (a b) c = a (b c)            witness: a, b, c
  Identity,         // e a = a e = a                witness: a
  UnitLaw,          // x.e = x / alpha.e = alpha    witness: x or alpha
  ActionLaw,        // (x.m).m' = x.(m m')          witness: x, m, m'
  CompositionLaw,   // (alpha.m).m' = alpha.(m' m)  witness: alpha, m, m'
  IncidenceCompat,  // (alpha.m).x = alpha.(x.m)    witness: alpha, m, x
  VertexSquare,     // f_V(alpha.x) = f_A(alpha).x  witness: alpha, x
  ArcSquare,        // f_A(alpha.m) = f_A(alpha).m  witness: alpha, m
  EdgeSquare,       // phi'(f_E(e)) = f_V[phi(e)]   witness: e
  TableShape,       // a table has the wrong size or an out-of-range entry
};

std::string_view law_name(Law law);

// A table failed one of the laws above; `witness` replays the failure.
class LawViolation : public Error {
 public:
  LawViolation(Law law, std::vector<std::size_t> witness);

  Law law() const noexcept { return law_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Law law_;
  std::vector<std::size_t> witness_;
};

class ContextMismatch : public Error {
 public:
  ContextMismatch() : Error("objects live over different (X,M) contexts") {}
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class SortMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidGenerator : public Error {
 public:
  explicit InvalidGenerator(std::size_t index)
      : Error("generator " + std::to_string(index) + " is not a total self-map"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NotMono : public Error {
 public:
  NotMono() : Error("morphism is not a monomorphism") {}
};

class NotEpi : public Error {
 public:
  NotEpi() : Error("morphism is not an epimorphism") {}
};

class MonoidNotAut : public Error {
 public:
  MonoidNotAut() : Error("context monoid is not the full automorphism group of X") {}
};

class NotKBounded : public Error {
 public:
  NotKBounded(std::size_t edge, std::size_t size, std::size_t k)
      : Error("edge " + std::to_string(edge) + " has " + std::to_string(size) +
              " vertices, more than k = " + std::to_string(k)),
        edge_(edge) {}
  std::size_t edge() const noexcept { return edge_; }

 private:
  std::size_t edge_;
};

// No equivariant section of the incidence map exists over the realized maps
// reachable from the added arcs; `obstruction` is the incidence map whose
// candidates were exhausted.
class HullSectionNotFound : public Error {
 public:
  explicit HullSectionNotFound(std::vector<std::size_t> obstruction)
      : Error("no equivariant section for the hull action"),
        obstruction_(std::move(obstruction)) {}
  const std::vector<std::size_t>& obstruction() const noexcept { return obstruction_; }

 private:
  std::vector<std::size_t> obstruction_;
};

}  // namespace xmg
