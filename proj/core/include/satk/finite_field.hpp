#pragma once

#include <cstdint>
#include <vector>

#include "satk/lattice.hpp"

namespace satk {

/// The field F_q, q = p^e, with elements encoded as 0..q-1 (base-p digits
/// are the coefficients of a polynomial in a root of a fixed irreducible
/// polynomial). Arithmetic is table driven, so q is capped.
class FiniteField {
 public:
  using Elem = std::uint16_t;
  static constexpr std::uint32_t kMaxOrder = 256;

  /// Throws DomainError unless q is a prime power in [2, kMaxOrder].
  explicit FiniteField(std::uint32_t q);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return e_; }
  /// Coefficients (low to high, monic) of the defining polynomial.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error for zero.
  Elem inv(Elem a) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(Int v) const;

 private:
  std::uint32_t q_, p_, e_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_, mul_, neg_, inv_;
};

/// Prime p and exponent e with q = p^e, or {0, 0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace satk
