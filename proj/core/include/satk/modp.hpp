#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "satk/error.hpp"
#include "satk/lattice.hpp"

namespace satk {

bool is_prime(std::uint64_t n);

/// Validates a modulus for F_p coefficients (prime, below 2^31).
std::uint32_t checked_prime(Int p);

inline std::uint32_t reduce_mod(Int value, std::uint32_t p) {
  const Int r = value % static_cast<Int>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

/// Finite F_p-linear combination of coweights with nonzero coefficients in
/// {1, ..., p-1}. The tag separates the three algebras that share this
/// representation: classes [IC_mu] in K_0, the tau basis of the Hecke
/// algebra, and monomials of F_p[X_*(T)_-].
template <class Tag>
class ModPSum {
 public:
  using Terms = std::map<Coweight, std::uint32_t>;

  explicit ModPSum(std::uint32_t p) : p_(checked_prime(p)) {}

  /// Zero element with the same modulus.
  ModPSum zero_like() const { return ModPSum(p_, Trusted{}); }

  std::uint32_t modulus() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  std::uint32_t coeff(const Coweight& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }

  /// Adds value * c, reducing mod p and dropping zero coefficients.
  void add_term(const Coweight& c, Int value) {
    const std::uint32_t v = reduce_mod(value, p_);
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(c, v);
    if (inserted) return;
    it->second = static_cast<std::uint32_t>((std::uint64_t{it->second} + v) % p_);
    if (it->second == 0) terms_.erase(it);
  }

  ModPSum& operator+=(const ModPSum& other) {
    check_modulus(other);
    for (const auto& [c, v] : other.terms_) add_term(c, v);
    return *this;
  }
  ModPSum& operator-=(const ModPSum& other) {
    check_modulus(other);
    for (const auto& [c, v] : other.terms_) add_term(c, Int{p_} - v);
    return *this;
  }
  friend ModPSum operator+(ModPSum a, const ModPSum& b) { return a += b; }
  friend ModPSum operator-(ModPSum a, const ModPSum& b) { return a -= b; }

  ModPSum scaled(Int factor) const {
    ModPSum out = zero_like();
    const std::uint64_t f = reduce_mod(factor, p_);
    for (const auto& [c, v] : terms_) out.add_term(c, static_cast<Int>((f * v) % p_));
    return out;
  }

  void check_modulus(const ModPSum& other) const {
    if (other.p_ != p_)
      throw DomainError("modulus-mismatch", "moduli differ: " + std::to_string(p_) + " vs " +
                                                std::to_string(other.p_));
  }

  friend bool operator==(const ModPSum&, const ModPSum&) = default;

 private:
  struct Trusted {};
  ModPSum(std::uint32_t p, Trusted) : p_(p) {}

  std::uint32_t p_;
  Terms terms_;
};

struct K0Tag {};
struct HeckeTag {};
struct AntiDomTag {};

/// Classes [IC_mu] in K_0 of the Satake category, tensored with F_p.
using K0Element = ModPSum<K0Tag>;
/// Coefficients in the basis tau_mu of the mod p spherical Hecke algebra.
using HeckeElement = ModPSum<HeckeTag>;
/// Elements of F_p[X_*(T)_-], the target of the Satake transform.
using AntiDomElement = ModPSum<AntiDomTag>;

}  // namespace satk
