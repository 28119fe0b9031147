#include <gtest/gtest.h>

#include "satk/error.hpp"
#include "satk/finite_field.hpp"

using namespace satk;

class FieldAxioms : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(FieldAxioms, Hold) {
  const FiniteField f(GetParam());
  const std::uint32_t q = f.order();
  using E = FiniteField::Elem;
  for (E a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0);
    EXPECT_EQ(f.sub(a, a), 0);
    if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
    for (E b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      if (a != 0 && b != 0) EXPECT_NE(f.mul(a, b), 0);
      for (E c = 0; c < q; c += 1) {
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      }
    }
  }
  // Characteristic p: p * 1 = 0 and the multiplicative group is cyclic of order q - 1.
  E sum = 0;
  for (std::uint32_t i = 0; i < f.characteristic(); ++i) sum = f.add(sum, 1);
  EXPECT_EQ(sum, 0);
  bool has_generator = false;
  for (E g = 1; g < q && !has_generator; ++g) {
    E x = g;
    std::uint32_t order = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++order;
    }
    has_generator = order == q - 1;
  }
  EXPECT_TRUE(has_generator);
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms, ::testing::Values(2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u));

TEST(FiniteField, Parameters) {
  const FiniteField f8(8);
  EXPECT_EQ(f8.characteristic(), 2u);
  EXPECT_EQ(f8.degree(), 3u);
  EXPECT_EQ(f8.from_int(3), 1);
  EXPECT_EQ(FiniteField(5).from_int(-1), 4);
  EXPECT_EQ(prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(prime_power(12), (std::pair<std::uint32_t, std::uint32_t>{0, 0}));
  EXPECT_THROW(FiniteField(6), DomainError);
  EXPECT_THROW(FiniteField(1), DomainError);
  EXPECT_THROW(FiniteField(512), DomainError);
  EXPECT_THROW(FiniteField(3).inv(0), std::domain_error);
}
