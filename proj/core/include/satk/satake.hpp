#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "satk/modp.hpp"
#include "satk/root_datum.hpp"

namespace satk {

/// [IC_mu] * [IC_lambda] = [IC_{mu + lambda}], extended bilinearly.
K0Element k0_mul(const K0Element& x, const K0Element& y);

/// Total dimension of hypercohomology: the sum of the canonical lifts of the
/// coefficients to {0, ..., p-1}. This is the length of the effective class
/// with those lifts.
Int h_dim(const K0Element& x);

/// Monoid algebra product on F_p[X_*(T)_-].
AntiDomElement antidom_mul(const AntiDomElement& a, const AntiDomElement& b);

enum class Cone { kDominant, kAntiDominant };

/// The maps relating K_0 (x) F_p, the spherical Hecke algebra, and
/// F_p[X_*(T)_-] for one root datum:
///
///   T([IC_mu])  = sum_{lambda <= mu} tau_lambda          (mu dominant)
///   alpha(mu)   = [IC_{w_0 mu}]                          (mu anti-dominant)
///   S^{-1}(mu)  = sum_{lambda >= mu anti-dominant} tau_lambda
///
/// and S, T^{-1}, alpha^{-1} by inversion. tau keys are always stored under
/// the dominant representative (tau_mu = tau_{w_0 mu}).
///
/// Thread-safe: the only mutable state is the Moebius memo, which is guarded
/// and only ever grows with final values.
class SatakeAlgebra {
 public:
  explicit SatakeAlgebra(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const noexcept { return *datum_; }

  K0Element ic(const Coweight& mu, std::uint32_t p) const;
  /// tau_key; any Weyl conjugate of the key is accepted.
  HeckeElement tau(const Coweight& key, std::uint32_t p) const;
  AntiDomElement monomial(const Coweight& mu, std::uint32_t p) const;

  /// Throw DomainError when a key is off its cone or has the wrong length.
  void validate(const K0Element& x) const;
  void validate(const HeckeElement& f) const;
  void validate(const AntiDomElement& m) const;

  HeckeElement t_map(const K0Element& x) const;
  K0Element t_map_inverse(const HeckeElement& f) const;

  K0Element alpha_map(const AntiDomElement& m) const;
  AntiDomElement alpha_inverse(const K0Element& x) const;

  HeckeElement satake_inverse(const AntiDomElement& m) const;
  AntiDomElement satake_transform(const HeckeElement& f) const;

  /// Convolution product, computed as S^{-1}(S(f) S(g)).
  HeckeElement hecke_mul(const HeckeElement& f, const HeckeElement& g) const;
  /// The same product through K_0: T(T^{-1}(f) T^{-1}(g)).
  HeckeElement hecke_mul_via_k0(const HeckeElement& f, const HeckeElement& g) const;

  /// Moebius function of the dominance order restricted to a cone, over the
  /// integers. Requires nu <= lambda, both in the cone.
  Int mobius(const Coweight& nu, const Coweight& lambda, Cone cone) const;

 private:
  Int mobius_dominant(const Coweight& low, const Coweight& high) const;

  std::shared_ptr<const RootDatum> datum_;
  mutable std::shared_mutex mobius_mutex_;
  mutable std::map<std::pair<Coweight, Coweight>, Int> mobius_memo_;
};

}  // namespace satk
