#include "satk/satake.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "satk/error.hpp"

namespace satk {

K0Element k0_mul(const K0Element& x, const K0Element& y) {
  x.check_modulus(y);
  K0Element out = x.zero_like();
  const std::uint64_t p = x.modulus();
  for (const auto& [mu, a] : x.terms())
    for (const auto& [lambda, b] : y.terms())
      out.add_term(mu + lambda, static_cast<Int>((std::uint64_t{a} * b) % p));
  return out;
}

Int h_dim(const K0Element& x) {
  Int total = 0;
  for (const auto& [mu, c] : x.terms()) total += c;
  return total;
}

AntiDomElement antidom_mul(const AntiDomElement& a, const AntiDomElement& b) {
  a.check_modulus(b);
  AntiDomElement out = a.zero_like();
  const std::uint64_t p = a.modulus();
  for (const auto& [mu, x] : a.terms())
    for (const auto& [lambda, y] : b.terms())
      out.add_term(mu + lambda, static_cast<Int>((std::uint64_t{x} * y) % p));
  return out;
}

SatakeAlgebra::SatakeAlgebra(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {
  if (!datum_) throw std::invalid_argument("SatakeAlgebra: null root datum");
}

K0Element SatakeAlgebra::ic(const Coweight& mu, std::uint32_t p) const {
  if (!datum_->is_dominant(mu))
    throw DomainError("not-dominant", "IC_mu needs dominant mu, got " + mu.to_string());
  K0Element x(p);
  x.add_term(mu, 1);
  return x;
}

HeckeElement SatakeAlgebra::tau(const Coweight& key, std::uint32_t p) const {
  datum_->check_length(key);
  HeckeElement f(p);
  if (datum_->is_dominant(key)) {
    f.add_term(key, 1);
  } else if (datum_->is_antidominant(key)) {
    f.add_term(datum_->w0(key), 1);
  } else {
    f.add_term(datum_->dominate(key).first, 1);
  }
  return f;
}

AntiDomElement SatakeAlgebra::monomial(const Coweight& mu, std::uint32_t p) const {
  if (!datum_->is_antidominant(mu))
    throw DomainError("not-antidominant", "monomial needs anti-dominant mu, got " + mu.to_string());
  AntiDomElement m(p);
  m.add_term(mu, 1);
  return m;
}

void SatakeAlgebra::validate(const K0Element& x) const {
  for (const auto& [mu, c] : x.terms())
    if (!datum_->is_dominant(mu))
      throw DomainError("not-dominant", "K0 term " + mu.to_string() + " is not dominant");
}

void SatakeAlgebra::validate(const HeckeElement& f) const {
  for (const auto& [mu, c] : f.terms())
    if (!datum_->is_dominant(mu))
      throw DomainError("not-dominant", "Hecke term " + mu.to_string() + " is not dominant");
}

void SatakeAlgebra::validate(const AntiDomElement& m) const {
  for (const auto& [mu, c] : m.terms())
    if (!datum_->is_antidominant(mu))
      throw DomainError("not-antidominant", "term " + mu.to_string() + " is not anti-dominant");
}

HeckeElement SatakeAlgebra::t_map(const K0Element& x) const {
  HeckeElement out(x.modulus());
  for (const auto& [mu, c] : x.terms())
    for (const auto& lambda : datum_->strata_below(mu)) out.add_term(lambda, c);
  return out;
}

K0Element SatakeAlgebra::t_map_inverse(const HeckeElement& f) const {
  // T is unitriangular for dominance; peel off a maximal term each round.
  // Terms of maximal 2<rho, .> are dominance-maximal.
  K0Element out(f.modulus());
  HeckeElement rest = f;
  const std::uint32_t p = f.modulus();
  while (!rest.is_zero()) {
    auto top = std::max_element(rest.terms().begin(), rest.terms().end(), [&](const auto& a, const auto& b) {
      const Int ha = datum_->two_rho(a.first), hb = datum_->two_rho(b.first);
      return ha != hb ? ha < hb : a.first < b.first;
    });
    const Coweight nu = top->first;
    const std::uint32_t c = top->second;
    out.add_term(nu, c);
    for (const auto& lambda : datum_->strata_below(nu)) rest.add_term(lambda, Int{p} - c);
  }
  return out;
}

K0Element SatakeAlgebra::alpha_map(const AntiDomElement& m) const {
  K0Element out(m.modulus());
  for (const auto& [mu, c] : m.terms()) {
    Coweight image = datum_->w0(mu);
    if (!datum_->is_dominant(image))
      throw DomainError("not-antidominant", "alpha: " + mu.to_string() + " is not anti-dominant");
    out.add_term(image, c);
  }
  return out;
}

AntiDomElement SatakeAlgebra::alpha_inverse(const K0Element& x) const {
  AntiDomElement out(x.modulus());
  for (const auto& [mu, c] : x.terms()) {
    Coweight image = datum_->w0(mu);
    if (!datum_->is_antidominant(image))
      throw DomainError("not-dominant", "alpha^-1: " + mu.to_string() + " is not dominant");
    out.add_term(image, c);
  }
  return out;
}

HeckeElement SatakeAlgebra::satake_inverse(const AntiDomElement& m) const {
  HeckeElement out(m.modulus());
  for (const auto& [mu, c] : m.terms()) {
    if (!datum_->is_antidominant(mu))
      throw DomainError("not-antidominant", "S^-1: " + mu.to_string() + " is not anti-dominant");
    // {lambda anti-dominant : lambda >= mu} = w_0 {kappa dominant : kappa <= w_0 mu}
    for (const auto& kappa : datum_->strata_below(datum_->w0(mu))) {
      const Coweight lambda = datum_->w0(kappa);
      out.add_term(datum_->w0(lambda), c);  // tau_lambda = tau_{w_0 lambda}
    }
  }
  return out;
}

AntiDomElement SatakeAlgebra::satake_transform(const HeckeElement& f) const {
  AntiDomElement out(f.modulus());
  for (const auto& [nu, c] : f.terms()) {
    if (!datum_->is_dominant(nu))
      throw DomainError("not-dominant", "Hecke term " + nu.to_string() + " is not dominant");
    // S(tau_nu) = sum over anti-dominant lambda >= w_0 nu of
    // mobius(w_0 nu, lambda) * lambda; with lambda = w_0 kappa the Moebius
    // value is mobius_dominant(kappa, nu).
    const Coweight nu_anti = datum_->w0(nu);
    for (const auto& kappa : datum_->strata_below(nu)) {
      const Int m = mobius(nu_anti, datum_->w0(kappa), Cone::kAntiDominant);
      out.add_term(datum_->w0(kappa), static_cast<Int>(reduce_mod(m, f.modulus())) * c);
    }
  }
  return out;
}

HeckeElement SatakeAlgebra::hecke_mul(const HeckeElement& f, const HeckeElement& g) const {
  f.check_modulus(g);
  return satake_inverse(antidom_mul(satake_transform(f), satake_transform(g)));
}

HeckeElement SatakeAlgebra::hecke_mul_via_k0(const HeckeElement& f, const HeckeElement& g) const {
  f.check_modulus(g);
  return t_map(k0_mul(t_map_inverse(f), t_map_inverse(g)));
}

Int SatakeAlgebra::mobius(const Coweight& nu, const Coweight& lambda, Cone cone) const {
  const RootDatum& d = *datum_;
  const bool in_cone = cone == Cone::kDominant ? d.is_dominant(nu) && d.is_dominant(lambda)
                                               : d.is_antidominant(nu) && d.is_antidominant(lambda);
  if (!in_cone)
    throw DomainError(cone == Cone::kDominant ? "not-dominant" : "not-antidominant",
                      "Moebius arguments " + nu.to_string() + ", " + lambda.to_string() +
                          " are not in the cone");
  if (!d.dominance_leq(nu, lambda))
    throw DomainError("not-comparable", nu.to_string() + " is not <= " + lambda.to_string());
  if (cone == Cone::kDominant) return mobius_dominant(nu, lambda);
  // w_0 reverses the order between the cones, and reversing a poset
  // transposes its Moebius function.
  return mobius_dominant(d.w0(lambda), d.w0(nu));
}

Int SatakeAlgebra::mobius_dominant(const Coweight& low, const Coweight& high) const {
  const auto key = std::make_pair(low, high);
  {
    std::shared_lock lock(mobius_mutex_);
    if (auto it = mobius_memo_.find(key); it != mobius_memo_.end()) return it->second;
  }

  const RootDatum& d = *datum_;
  std::vector<Coweight> interval;
  for (auto& kappa : d.strata_below(high))
    if (d.dominance_leq(low, kappa)) interval.push_back(std::move(kappa));
  std::sort(interval.begin(), interval.end(), [&](const Coweight& a, const Coweight& b) {
    const Int ha = d.two_rho(a), hb = d.two_rho(b);
    return ha != hb ? ha < hb : a < b;
  });

  // interval[0] == low; sweep upward so every smaller element is done first.
  std::vector<Int> values(interval.size(), 0);
  values[0] = 1;
  for (std::size_t i = 1; i < interval.size(); ++i) {
    Int sum = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (d.dominance_leq(interval[j], interval[i])) sum += values[j];
    values[i] = -sum;
  }

  std::unique_lock lock(mobius_mutex_);
  Int result = 0;
  for (std::size_t i = 0; i < interval.size(); ++i) {
    mobius_memo_.emplace(std::make_pair(low, interval[i]), values[i]);
    if (interval[i] == high) result = values[i];
  }
  return result;
}

}  // namespace satk
