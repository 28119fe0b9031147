#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "satk/modp.hpp"
#include "satk/root_datum.hpp"

namespace satk {

/// X_*(T)^+ is a group exactly when there are no roots, i.e. G is a torus.
bool monoid_is_group(const RootDatum& d);

/// Element of F_p[X_*(T)^+] (x) F_p[X_*(T)^+].
struct K0Tensor {
  std::uint32_t p;
  std::map<std::pair<Coweight, Coweight>, std::uint32_t> terms;

  friend bool operator==(const K0Tensor&, const K0Tensor&) = default;
};

/// mu |-> mu (x) mu, extended linearly.
K0Tensor comultiplication(const K0Element& x);

/// Square matrix over F_p acting on column vectors indexed by `basis`.
struct FpMatrix {
  std::uint32_t p = 2;
  std::vector<Coweight> basis;
  std::vector<std::vector<std::uint32_t>> entries;  // entries[row][col]

  std::size_t size() const noexcept { return basis.size(); }
  bool is_upper_triangular() const;
  bool is_strictly_upper_triangular() const;
  bool is_identity() const;
  bool is_zero() const;
  /// Smallest k with M^k = 0, or 0 if M is not nilpotent within size() + 1 steps.
  std::size_t nilpotency_index() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
};

/// Downward closure under dominance of a set of dominant coweights, sorted.
std::vector<Coweight> downward_closure(const RootDatum& d, const std::vector<Coweight>& generators);

/// Matrix of multiplication by x on the quotient F_p[S] of F_p[X_*(T)^+]:
/// [IC_mu] sends basis vector lambda to mu + lambda when that lies in S and to
/// zero otherwise.
///
/// The basis is sorted by decreasing 2<rho, .>, then by decreasing central
/// degree <zeta, .> (zeta the Weyl-symmetrised sum of coordinates), then
/// lexicographically. Column lambda can only hit rows mu + lambda, so the
/// matrix is upper triangular whenever each term mu of x is zero, non-central,
/// or central with positive central degree; that covers every x on
/// semisimple data and every x supported on coweights with nonnegative
/// entries for GL_n. Without an [IC_0] term it is then strictly triangular.
///
/// Throws DomainError if S contains a non-dominant coweight or is not
/// downward closed.
FpMatrix truncated_regular_representation(const RootDatum& d, const std::vector<Coweight>& set,
                                          const K0Element& x);

}  // namespace satk
