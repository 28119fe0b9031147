#include "satk/monoid.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "satk/error.hpp"

namespace satk {

bool monoid_is_group(const RootDatum& d) { return d.is_torus(); }

K0Tensor comultiplication(const K0Element& x) {
  K0Tensor out{x.modulus(), {}};
  for (const auto& [mu, c] : x.terms()) out.terms.emplace(std::make_pair(mu, mu), c);
  return out;
}

bool FpMatrix::is_upper_triangular() const {
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (entries[r][c] != 0) return false;
  return true;
}

bool FpMatrix::is_strictly_upper_triangular() const {
  if (!is_upper_triangular()) return false;
  for (std::size_t r = 0; r < size(); ++r)
    if (entries[r][r] != 0) return false;
  return true;
}

bool FpMatrix::is_identity() const {
  for (std::size_t r = 0; r < size(); ++r)
    for (std::size_t c = 0; c < size(); ++c)
      if (entries[r][c] != (r == c ? 1u : 0u)) return false;
  return true;
}

bool FpMatrix::is_zero() const {
  for (const auto& row : entries)
    for (auto v : row)
      if (v != 0) return false;
  return true;
}

std::size_t FpMatrix::nilpotency_index() const {
  if (size() == 0) return 0;
  FpMatrix power = *this;
  for (std::size_t k = 1; k <= size() + 1; ++k) {
    if (power.is_zero()) return k;
    power = power * *this;
  }
  return 0;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix c{a.p, a.basis, std::vector<std::vector<std::uint32_t>>(a.size(), std::vector<std::uint32_t>(a.size(), 0))};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) {
      const std::uint64_t x = a.entries[i][k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.size(); ++j)
        c.entries[i][j] = static_cast<std::uint32_t>((c.entries[i][j] + x * b.entries[k][j]) % a.p);
    }
  return c;
}

std::vector<Coweight> downward_closure(const RootDatum& d, const std::vector<Coweight>& generators) {
  std::set<Coweight> closed;
  for (const auto& g : generators)
    for (auto& lambda : d.strata_below(g)) closed.insert(std::move(lambda));
  return {closed.begin(), closed.end()};
}

FpMatrix truncated_regular_representation(const RootDatum& d, const std::vector<Coweight>& set,
                                          const K0Element& x) {
  const std::set<Coweight> members(set.begin(), set.end());
  for (const auto& s : members) {
    if (!d.is_dominant(s))
      throw DomainError("not-dominant", "truncation set contains non-dominant " + s.to_string());
    for (const auto& lambda : d.strata_below(s))
      if (!members.contains(lambda))
        throw DomainError("not-downward-closed",
                          "truncation set misses " + lambda.to_string() + " <= " + s.to_string());
  }
  for (const auto& [mu, c] : x.terms())
    if (!d.is_dominant(mu)) throw DomainError("not-dominant", "K0 term " + mu.to_string() + " is not dominant");

  IntVector zeta(d.rank(), 0);
  const IntVector ones(d.rank(), 1);
  for (const auto& w : d.weyl_group()) {
    const IntVector image = d.act_on_weight(w, ones);
    for (std::size_t i = 0; i < zeta.size(); ++i) zeta[i] += image[i];
  }

  std::vector<Coweight> basis(members.begin(), members.end());
  std::sort(basis.begin(), basis.end(), [&](const Coweight& a, const Coweight& b) {
    return std::make_tuple(d.two_rho(a), dot(zeta, a.coords()), a) >
           std::make_tuple(d.two_rho(b), dot(zeta, b.coords()), b);
  });

  std::map<Coweight, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  FpMatrix m{x.modulus(), basis,
             std::vector<std::vector<std::uint32_t>>(basis.size(), std::vector<std::uint32_t>(basis.size(), 0))};
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [mu, c] : x.terms()) {
      auto it = index.find(basis[col] + mu);
      if (it == index.end()) continue;
      auto& entry = m.entries[it->second][col];
      entry = static_cast<std::uint32_t>((std::uint64_t{entry} + c) % m.p);
    }
  return m;
}

}  // namespace satk
