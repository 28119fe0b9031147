#include <gtest/gtest.h>

#include "satk/error.hpp"
#include "satk/poly_matrix.hpp"
#include "support/oracles.hpp"

using namespace satk;
using satk::brute::uniform;

namespace {

FqPolyRing ring(std::uint32_t q) { return FqPolyRing(std::make_shared<FiniteField>(q)); }

FqPoly random_poly(const FqPolyRing& r, int max_degree) {
  FqPoly out;
  const Int deg = uniform(-1, max_degree);
  for (Int k = 0; k <= deg; ++k)
    out = r.add(out, r.monomial(static_cast<FiniteField::Elem>(uniform(0, r.field().order() - 1)),
                                static_cast<std::size_t>(k)));
  return out;
}

// Unimodular over F_q[t] (hence over F_q[[t]]): a product of elementary
// matrices and a diagonal of units.
PolyMatrix random_unimodular(const FqPolyRing& r, std::size_t n) {
  PolyMatrix u = diagonal_powers(r, IntVector(n, 0));
  for (int step = 0; step < 4; ++step) {
    PolyMatrix e = diagonal_powers(r, IntVector(n, 0));
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<Int>(n) - 1));
    if (i == j) {
      e.at(i, i) = r.monomial(static_cast<FiniteField::Elem>(uniform(1, r.field().order() - 1)), 0);
    } else {
      e.at(i, j) = random_poly(r, 2);
    }
    u = multiply(r, u, e);
  }
  return u;
}

}  // namespace

TEST(PolyRing, Basics) {
  const auto r = ring(3);
  const FqPoly t = r.monomial(1, 1);
  EXPECT_EQ(r.mul(t, t), r.monomial(1, 2));
  EXPECT_EQ(FqPolyRing::valuation(r.add(r.monomial(2, 3), r.monomial(1, 5))), 3);
  EXPECT_EQ(FqPolyRing::valuation({}), FqPolyRing::kInfinity);
  EXPECT_TRUE(r.sub(t, t).empty());
  EXPECT_EQ(FqPolyRing::degree({}), -1);
}

TEST(SmithInvariants, Examples) {
  const auto r = ring(2);
  EXPECT_EQ(smith_invariants(r, diagonal_powers(r, {2, 0})), (IntVector{2, 0}));
  EXPECT_EQ(smith_invariants(r, diagonal_powers(r, {0, 2})), (IntVector{2, 0}));
  EXPECT_EQ(smith_invariants(r, diagonal_powers(r, {3, 1})), (IntVector{3, 1}));
  PolyMatrix m(2);
  m.at(0, 0) = r.monomial(1, 1);
  m.at(0, 1) = r.monomial(1, 0);
  m.at(1, 1) = r.monomial(1, 1);
  EXPECT_EQ(smith_invariants(r, m), (IntVector{2, 0}));
  EXPECT_EQ(smith_invariants(r, diagonal_powers(r, {1, -2})), (IntVector{1, -2}));
  EXPECT_THROW(smith_invariants(r, PolyMatrix(2)), DomainError);
}

TEST(SmithInvariants, InvariantUnderUnimodularChange) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto r = ring(q);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = static_cast<std::size_t>(uniform(2, 3));
      IntVector e(n);
      for (auto& x : e) x = uniform(0, 3);
      const PolyMatrix d = diagonal_powers(r, e);
      std::sort(e.rbegin(), e.rend());
      const PolyMatrix m = multiply(r, multiply(r, random_unimodular(r, n), d), random_unimodular(r, n));
      EXPECT_EQ(smith_invariants(r, m), e) << "q=" << q << " trial " << trial;
    }
  }
}

TEST(PolyMatrix, AdjugateIdentity) {
  const auto r = ring(5);
  for (int trial = 0; trial < 50; ++trial) {
    PolyMatrix m(3);
    for (auto& e : m.entries) e = random_poly(r, 2);
    const FqPoly det = determinant(r, m);
    const PolyMatrix prod = multiply(r, adjugate(r, m), m);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(prod.at(i, j), i == j ? det : FqPoly{});
  }
}
