#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "satk/modp.hpp"
#include "satk/poly_matrix.hpp"
#include "satk/root_datum.hpp"

namespace satk {

/// Enumeration caps for the lattice counts.
struct OracleLimits {
  std::size_t max_n = 3;
  Int max_depth = 4;
  std::uint32_t max_q = 5;
};

/// Column Hermite bases of the F_q[t]-lattices M with t^depth L <= M <= L,
/// L = F_q[t]^n: upper triangular, diagonal t^{a_i}, entries right of the
/// diagonal in row i of degree < a_i. Each lattice appears exactly once.
class LatticeCursor {
 public:
  /// If `det_valuation` is set, only lattices of that index valuation
  /// (sum of a_i) are produced.
  LatticeCursor(const FqPolyRing& ring, std::size_t n, Int depth,
                std::optional<Int> det_valuation = std::nullopt);

  /// Next lattice basis, or nullopt at the end.
  std::optional<PolyMatrix> next();

 private:
  bool advance_exponents();
  bool advance_entries();
  PolyMatrix current() const;

  const FqPolyRing& ring_;
  std::size_t n_;
  Int depth_;
  std::optional<Int> det_valuation_;
  IntVector exponents_;
  // Off-diagonal entries (i < j) as base-q digit strings of length a_i.
  std::vector<std::vector<FiniteField::Elem>> digits_;
  bool started_ = false;
  bool done_ = false;
};

void check_oracle_limits(std::size_t n, Int depth, std::uint32_t q, const OracleLimits& limits);

/// Every full-rank sublattice M with t^depth L <= M <= L.
std::vector<PolyMatrix> enumerate_lattices(std::size_t n, Int depth, std::uint32_t q,
                                           const OracleLimits& limits = {});

struct StructureConstant {
  std::uint64_t count = 0;
  bool central_mismatch = false;
};

/// Counts of the GL_n spherical Hecke algebra over F_q((t)) in the tau basis:
/// the coefficient of tau_nu in tau_mu * tau_lambda is the number of
/// lattices M with inv(L, M) = mu and inv(M, nu(t) L) = lambda.
///
/// Inputs are translated by central cocharacters so their entries are
/// nonnegative before counting.
class LatticeOracle {
 public:
  LatticeOracle(std::size_t n, std::uint32_t q, OracleLimits limits = {});

  std::size_t n() const noexcept { return n_; }
  std::uint32_t q() const noexcept { return ring_.field().order(); }
  std::uint32_t characteristic() const noexcept { return ring_.field().characteristic(); }
  const FqPolyRing& ring() const noexcept { return ring_; }
  const RootDatum& datum() const noexcept { return *datum_; }

  /// inv(L, M) for a lattice basis of M.
  IntVector invariant(const PolyMatrix& basis) const { return smith_invariants(ring_, basis); }

  /// All nu with nonzero coefficient in tau_mu * tau_lambda, with counts.
  std::map<Coweight, std::uint64_t> structure_constants(const Coweight& mu, const Coweight& lambda) const;

  StructureConstant structure_constant(const Coweight& mu, const Coweight& lambda, const Coweight& nu) const;

  /// Product reduced mod p; the Hecke modulus must be the characteristic of F_q.
  HeckeElement hecke_mul(const HeckeElement& f, const HeckeElement& g) const;

 private:
  const std::vector<PolyMatrix>& lattices_with_invariant(const Coweight& mu) const;
  void check_weakly_decreasing(const Coweight& c) const;

  std::size_t n_;
  FqPolyRing ring_;
  OracleLimits limits_;
  std::shared_ptr<const RootDatum> datum_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Coweight, std::shared_ptr<const std::vector<PolyMatrix>>> cache_;
};

/// tau_mu * tau_lambda counted on lattices; see LatticeOracle.
StructureConstant structure_constant(std::size_t n, std::uint32_t q, const Coweight& mu,
                                     const Coweight& lambda, const Coweight& nu,
                                     const OracleLimits& limits = {});

HeckeElement oracle_hecke_mul(std::size_t n, std::uint32_t q, const HeckeElement& f,
                              const HeckeElement& g, const OracleLimits& limits = {});

struct OracleCase {
  Coweight mu;
  Coweight lambda;
  HeckeElement product_oracle;
  HeckeElement product_formula;
  bool match = false;
};

struct OracleReport {
  std::size_t n = 0;
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  std::vector<OracleCase> cases;

  bool all_match() const;
};

/// Compares lattice counts with the Satake-transported product for all
/// tau_mu * tau_lambda with mu, lambda dominant and entries in [0, max_entry].
/// Cases are distributed over `threads` workers; the report order is fixed.
OracleReport verify_oracle(std::size_t n, std::uint32_t q, Int max_entry,
                           const OracleLimits& limits = {}, unsigned threads = 0);

}  // namespace satk
