#include "satk/lattice_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "satk/error.hpp"
#include "satk/satake.hpp"

namespace satk {

LatticeCursor::LatticeCursor(const FqPolyRing& ring, std::size_t n, Int depth, std::optional<Int> det_valuation)
    : ring_(ring), n_(n), depth_(depth), det_valuation_(det_valuation), exponents_(n, 0) {
  if (n == 0) throw std::invalid_argument("LatticeCursor: n must be positive");
}

bool LatticeCursor::advance_exponents() {
  for (;;) {
    std::size_t k = n_;
    bool carried_out = true;
    while (k > 0) {
      --k;
      if (exponents_[k] < depth_) {
        ++exponents_[k];
        carried_out = false;
        break;
      }
      exponents_[k] = 0;
    }
    if (carried_out) return false;
    if (!det_valuation_ || std::accumulate(exponents_.begin(), exponents_.end(), Int{0}) == *det_valuation_)
      return true;
  }
}

bool LatticeCursor::advance_entries() {
  const auto q = static_cast<FiniteField::Elem>(ring_.field().order());
  for (auto& entry : digits_)
    for (auto& d : entry) {
      if (++d < q) return true;
      d = 0;
    }
  return false;
}

PolyMatrix LatticeCursor::current() const {
  PolyMatrix m(n_);
  std::size_t pair = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    m.at(i, i) = ring_.monomial(1, static_cast<std::size_t>(exponents_[i]));
    for (std::size_t j = i + 1; j < n_; ++j, ++pair) {
      FqPoly entry(digits_[pair].begin(), digits_[pair].end());
      while (!entry.empty() && entry.back() == 0) entry.pop_back();
      m.at(i, j) = std::move(entry);
    }
  }
  return m;
}

std::optional<PolyMatrix> LatticeCursor::next() {
  auto reset_digits = [&] {
    digits_.clear();
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        digits_.emplace_back(static_cast<std::size_t>(exponents_[i]), FiniteField::Elem{0});
  };
  while (!done_) {
    if (!started_) {
      started_ = true;
      if (det_valuation_ && *det_valuation_ != 0 && !advance_exponents()) {
        done_ = true;
        break;
      }
      reset_digits();
    } else if (!advance_entries()) {
      if (!advance_exponents()) {
        done_ = true;
        break;
      }
      reset_digits();
    }
    PolyMatrix m = current();
    // t^depth L <= M iff every elementary divisor is at most depth.
    if (smith_invariants(ring_, m).front() <= depth_) return m;
  }
  return std::nullopt;
}

void check_oracle_limits(std::size_t n, Int depth, std::uint32_t q, const OracleLimits& limits) {
  if (n == 0 || n > limits.max_n)
    throw DomainError("oracle-cap", "lattice dimension " + std::to_string(n) + " outside [1, " +
                                        std::to_string(limits.max_n) + "]");
  if (depth < 0 || depth > limits.max_depth)
    throw DomainError("oracle-cap", "lattice depth " + std::to_string(depth) + " outside [0, " +
                                        std::to_string(limits.max_depth) + "]");
  if (q > limits.max_q)
    throw DomainError("oracle-cap", "field order " + std::to_string(q) + " exceeds cap " +
                                        std::to_string(limits.max_q));
}

std::vector<PolyMatrix> enumerate_lattices(std::size_t n, Int depth, std::uint32_t q, const OracleLimits& limits) {
  check_oracle_limits(n, depth, q, limits);
  const FqPolyRing ring(std::make_shared<const FiniteField>(q));
  std::vector<PolyMatrix> out;
  LatticeCursor cursor(ring, n, depth);
  while (auto m = cursor.next()) out.push_back(std::move(*m));
  return out;
}

LatticeOracle::LatticeOracle(std::size_t n, std::uint32_t q, OracleLimits limits)
    : n_(n),
      ring_(std::make_shared<const FiniteField>(q)),
      limits_(limits),
      datum_(std::make_shared<const RootDatum>(build_root_datum("GL", n))) {
  check_oracle_limits(n, 0, q, limits_);
}

void LatticeOracle::check_weakly_decreasing(const Coweight& c) const {
  if (c.size() != n_)
    throw DomainError("length-mismatch", "coweight " + c.to_string() + " needs length " + std::to_string(n_));
  for (std::size_t i = 0; i + 1 < n_; ++i)
    if (c[i] < c[i + 1]) throw DomainError("not-dominant", "coweight " + c.to_string() + " is not dominant");
}

const std::vector<PolyMatrix>& LatticeOracle::lattices_with_invariant(const Coweight& mu) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(mu); it != cache_.end()) return *it->second;
  }
  // mu has nonnegative entries here, so inv(L, M) = mu forces t^{mu_1} L <= M <= L.
  const Int depth = mu[0];
  check_oracle_limits(n_, depth, q(), limits_);
  const Int index = std::accumulate(mu.coords().begin(), mu.coords().end(), Int{0});
  auto found = std::make_shared<std::vector<PolyMatrix>>();
  LatticeCursor cursor(ring_, n_, depth, index);
  while (auto m = cursor.next())
    if (invariant(*m) == mu.coords()) found->push_back(std::move(*m));

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(mu, std::move(found));
  return *it->second;
}

namespace {

Coweight shifted(const Coweight& c, Int by) {
  Coweight out = c;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += by;
  return out;
}

// Weakly decreasing n-tuples of nonnegative integers summing to `total`.
void partitions(std::size_t n, Int total, Int cap, IntVector& prefix, std::vector<Coweight>& out) {
  if (prefix.size() == n) {
    if (total == 0) out.emplace_back(prefix);
    return;
  }
  const Int remaining = static_cast<Int>(n - prefix.size());
  for (Int v = std::min(cap, total); v >= 0 && v * remaining >= total; --v) {
    prefix.push_back(v);
    partitions(n, total - v, v, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::map<Coweight, std::uint64_t> LatticeOracle::structure_constants(const Coweight& mu, const Coweight& lambda) const {
  check_weakly_decreasing(mu);
  check_weakly_decreasing(lambda);
  const Int mu_shift = mu[n_ - 1], lambda_shift = lambda[n_ - 1];
  const Coweight mu0 = shifted(mu, -mu_shift), lambda0 = shifted(lambda, -lambda_shift);

  // Any nu with a nonzero count has nu(t) L <= M <= L, hence nonnegative
  // entries and the index of mu + lambda.
  const Int total = std::accumulate(mu0.coords().begin(), mu0.coords().end(), Int{0}) +
                    std::accumulate(lambda0.coords().begin(), lambda0.coords().end(), Int{0});
  std::vector<Coweight> candidates;
  IntVector prefix;
  partitions(n_, total, total, prefix, candidates);

  std::map<Coweight, std::uint64_t> counts;
  const auto& lattices = lattices_with_invariant(mu0);
  const Int index = std::accumulate(mu0.coords().begin(), mu0.coords().end(), Int{0});
  for (const auto& basis : lattices) {
    // Basis of nu(t) L in terms of the basis of M: B^{-1} D = adj(B) D / t^{index}.
    PolyMatrix adj = adjugate(ring_, basis);
    adj.denominator = index;
    for (const auto& nu0 : candidates) {
      const PolyMatrix relative = multiply(ring_, adj, diagonal_powers(ring_, nu0.coords()));
      if (smith_invariants(ring_, relative) == lambda0.coords()) ++counts[nu0];
    }
  }

  std::map<Coweight, std::uint64_t> out;
  const Coweight sum = mu + lambda;
  for (const auto& [nu0, count] : counts) {
    Coweight nu = shifted(nu0, mu_shift + lambda_shift);
    if (!datum_->dominance_leq(nu, sum))
      throw std::logic_error("oracle: support " + nu.to_string() + " is not below " + sum.to_string());
    out.emplace(std::move(nu), count);
  }
  return out;
}

StructureConstant LatticeOracle::structure_constant(const Coweight& mu, const Coweight& lambda, const Coweight& nu) const {
  check_weakly_decreasing(nu);
  const auto sum = [](const Coweight& c) { return std::accumulate(c.coords().begin(), c.coords().end(), Int{0}); };
  if (sum(mu) + sum(lambda) != sum(nu)) return {0, true};
  const auto counts = structure_constants(mu, lambda);
  auto it = counts.find(nu);
  return {it == counts.end() ? 0 : it->second, false};
}

HeckeElement LatticeOracle::hecke_mul(const HeckeElement& f, const HeckeElement& g) const {
  f.check_modulus(g);
  const std::uint32_t p = f.modulus();
  if (p != characteristic())
    throw DomainError("modulus-mismatch", "Hecke modulus " + std::to_string(p) + " is not the characteristic of F_" +
                                              std::to_string(q()));
  HeckeElement out = f.zero_like();
  for (const auto& [mu, a] : f.terms())
    for (const auto& [lambda, b] : g.terms()) {
      const std::uint64_t ab = (std::uint64_t{a} * b) % p;
      for (const auto& [nu, count] : structure_constants(mu, lambda))
        out.add_term(nu, static_cast<Int>((ab * (count % p)) % p));
    }
  return out;
}

StructureConstant structure_constant(std::size_t n, std::uint32_t q, const Coweight& mu, const Coweight& lambda,
                                     const Coweight& nu, const OracleLimits& limits) {
  return LatticeOracle(n, q, limits).structure_constant(mu, lambda, nu);
}

HeckeElement oracle_hecke_mul(std::size_t n, std::uint32_t q, const HeckeElement& f, const HeckeElement& g,
                              const OracleLimits& limits) {
  return LatticeOracle(n, q, limits).hecke_mul(f, g);
}

bool OracleReport::all_match() const {
  return std::all_of(cases.begin(), cases.end(), [](const OracleCase& c) { return c.match; });
}

OracleReport verify_oracle(std::size_t n, std::uint32_t q, Int max_entry, const OracleLimits& limits,
                           unsigned threads) {
  if (max_entry < 0) throw DomainError("invalid-argument", "max entry must be nonnegative");
  const LatticeOracle oracle(n, q, limits);
  const std::uint32_t p = oracle.characteristic();
  const SatakeAlgebra algebra(std::make_shared<const RootDatum>(oracle.datum()));

  std::vector<Coweight> dominant;
  IntVector prefix;
  for (Int total = 0; total <= max_entry * static_cast<Int>(n); ++total) partitions(n, total, max_entry, prefix, dominant);
  std::sort(dominant.begin(), dominant.end());
  // Fail on caps before spawning workers.
  check_oracle_limits(n, max_entry, q, limits);

  OracleReport report{n, q, p, {}};
  for (const auto& mu : dominant)
    for (const auto& lambda : dominant) report.cases.push_back({mu, lambda, HeckeElement(p), HeckeElement(p), false});

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, report.cases.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < report.cases.size(); i = next++) {
      try {
        auto& c = report.cases[i];
        const HeckeElement lhs = algebra.tau(c.mu, p), rhs = algebra.tau(c.lambda, p);
        c.product_oracle = oracle.hecke_mul(lhs, rhs);
        c.product_formula = algebra.hecke_mul(lhs, rhs);
        c.match = c.product_oracle == c.product_formula;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return report;
}

}  // namespace satk
