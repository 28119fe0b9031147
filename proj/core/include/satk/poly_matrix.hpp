#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <vector>

#include "satk/finite_field.hpp"
#include "satk/lattice.hpp"

namespace satk {

/// Polynomial over F_q in the uniformizer t: coefficient i multiplies t^i.
/// Normalized with no trailing zeros; the empty vector is zero.
using FqPoly = std::vector<FiniteField::Elem>;

/// Arithmetic in F_q[t].
class FqPolyRing {
 public:
  explicit FqPolyRing(std::shared_ptr<const FiniteField> field) : field_(std::move(field)) {}

  const FiniteField& field() const noexcept { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const noexcept { return field_; }

  static constexpr Int kInfinity = std::numeric_limits<Int>::max();

  /// c * t^k
  FqPoly monomial(FiniteField::Elem c, std::size_t k) const;
  FqPoly add(const FqPoly& a, const FqPoly& b) const;
  FqPoly sub(const FqPoly& a, const FqPoly& b) const;
  FqPoly mul(const FqPoly& a, const FqPoly& b) const;
  /// Largest k with t^k | a; kInfinity for zero.
  static Int valuation(const FqPoly& a);
  /// -1 for zero.
  static Int degree(const FqPoly& a) { return static_cast<Int>(a.size()) - 1; }

 private:
  std::shared_ptr<const FiniteField> field_;
};

/// Square matrix over t^{-d} F_q[t]: the value is entries / t^denominator.
struct PolyMatrix {
  std::size_t n = 0;
  std::vector<FqPoly> entries;  // row-major
  Int denominator = 0;

  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t size) : n(size), entries(size * size) {}

  FqPoly& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
  const FqPoly& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

/// diag(t^{e_1}, ..., t^{e_n}); negative exponents go into the denominator.
PolyMatrix diagonal_powers(const FqPolyRing& ring, const IntVector& exponents);

PolyMatrix multiply(const FqPolyRing& ring, const PolyMatrix& a, const PolyMatrix& b);

/// Determinant of the numerator (ignores the denominator).
FqPoly determinant(const FqPolyRing& ring, const PolyMatrix& m);

/// Adjugate of the numerator: adjugate(m) * m = det(m) * I.
PolyMatrix adjugate(const FqPolyRing& ring, const PolyMatrix& m);

/// Elementary divisor exponents over F_q[[t]], weakly decreasing: the
/// successive differences of the minimal t-adic valuations of k x k minors,
/// shifted by the denominator. Throws DomainError for singular matrices.
IntVector smith_invariants(const FqPolyRing& ring, const PolyMatrix& m);

}  // namespace satk
