#include "satk/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "satk/error.hpp"
#include "satk/modp.hpp"

namespace satk {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q) {
  if (q < 2) return {0, 0};
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1 ? std::make_pair(p, e) : std::make_pair(0u, 0u);
}

namespace {

std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> d(e);
  for (auto& x : d) {
    x = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

// Product of two residues modulo the monic polynomial `f` of degree e.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p, std::uint32_t e,
                          const std::vector<std::uint32_t>& f) {
  const auto da = digits(a, p, e), db = digits(b, p, e);
  std::vector<std::uint32_t> prod(2 * e, 0);
  for (std::uint32_t i = 0; i < e; ++i)
    for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (std::uint32_t k = 2 * e - 1; k >= e; --k) {
    const std::uint32_t c = prod[k];
    if (c != 0) {
      // x^k = x^{k-e} * x^e and x^e = -sum f_i x^i
      for (std::uint32_t i = 0; i < e; ++i) prod[k - e + i] = (prod[k - e + i] + (p - f[i]) * c) % p;
      prod[k] = 0;
    }
    if (k == e) break;
  }
  prod.resize(e);
  return encode(prod, p);
}

}  // namespace

FiniteField::FiniteField(std::uint32_t q) : q_(q) {
  const auto [p, e] = prime_power(q);
  if (p == 0 || q > kMaxOrder)
    throw DomainError("invalid-field", "F_q needs a prime power q <= " + std::to_string(kMaxOrder) +
                                           ", got " + std::to_string(q));
  p_ = p;
  e_ = e;

  add_.resize(q * q);
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto da = digits(a, p, e);
    std::vector<std::uint32_t> dn(e);
    for (std::uint32_t i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Elem>(encode(dn, p));
    for (std::uint32_t b = 0; b < q; ++b) {
      const auto db = digits(b, p, e);
      std::vector<std::uint32_t> ds(e);
      for (std::uint32_t i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = static_cast<Elem>(encode(ds, p));
    }
  }

  // Search monic polynomials of degree e until the quotient ring is a field.
  for (std::uint32_t low = 0; low < q; ++low) {
    std::vector<std::uint32_t> f = digits(low, p, e);
    if (f[0] == 0 && e > 1) continue;
    mul_.assign(q * q, 0);
    inv_.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = a; b < q; ++b) {
        const auto v = static_cast<Elem>(poly_mulmod(a, b, p, e, f));
        mul_[a * q + b] = mul_[b * q + a] = v;
        if (v == 1) inv_[a] = static_cast<Elem>(b), inv_[b] = static_cast<Elem>(a);
      }
    bool field = true;
    for (std::uint32_t a = 1; a < q && field; ++a) field = inv_[a] != 0;
    if (field) {
      f.push_back(1);
      modulus_ = std::move(f);
      return;
    }
  }
  throw std::logic_error("no irreducible polynomial found for q = " + std::to_string(q));
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inv_[a];
}

FiniteField::Elem FiniteField::from_int(Int v) const { return static_cast<Elem>(reduce_mod(v, p_)); }

}  // namespace satk
