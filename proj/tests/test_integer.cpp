#include <gtest/gtest.h>

#include <random>

#include "gwalk/integer.hpp"

using gwalk::Int;

namespace {

mpz_class random_mpz(std::mt19937_64& rng) {
  // Mix of tiny values, values around the inline boundary, and multi-limb values.
  mpz_class z;
  switch (rng() % 4) {
    case 0:
      z = static_cast<long>(rng() % 200) - 100;
      break;
    case 1:
      z = (mpz_class(1) << 62) + static_cast<long>(rng() % 7) - 3;
      break;
    case 2:
      z = static_cast<unsigned long>(rng());
      break;
    default:
      z = static_cast<unsigned long>(rng());
      z <<= 64 + rng() % 70;
      z += static_cast<unsigned long>(rng());
  }
  if (rng() % 2) z = -z;
  return z;
}

}  // namespace

TEST(Int, ArithmeticMatchesGmp) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    const mpz_class a = random_mpz(rng);
    const mpz_class b = random_mpz(rng);
    const Int x(a);
    const Int y(b);
    EXPECT_EQ((x + y).to_mpz(), a + b);
    EXPECT_EQ((x - y).to_mpz(), a - b);
    EXPECT_EQ((x * y).to_mpz(), a * b);
    EXPECT_EQ((-x).to_mpz(), -a);
    EXPECT_EQ(x < y, a < b);
    EXPECT_EQ(x == y, a == b);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    EXPECT_EQ(gcd(x, y).to_mpz(), g);
    if (b != 0) {
      EXPECT_EQ((x * y).divexact(y).to_mpz(), a);
    }
  }
}

TEST(Int, NormalizesBackToInline) {
  const Int big(mpz_class("1000000000000000000000000"));
  EXPECT_FALSE(big.is_small());
  const Int back = big - big + Int(5);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Int(5));
  Int edge(std::int64_t{1} << 61);
  edge += edge;  // 2^62 no longer fits inline
  EXPECT_FALSE(edge.is_small());
  EXPECT_EQ(edge.to_string(), "4611686018427387904");
}

TEST(Int, CopiesAreIndependent) {
  Int a(mpz_class("123456789012345678901234567890"));
  Int b = a;
  b += Int(1);
  EXPECT_EQ(a.to_string(), "123456789012345678901234567890");
  EXPECT_EQ(b.to_string(), "123456789012345678901234567891");
  a = b;
  EXPECT_EQ(a, b);
}

TEST(Int, PrimitiveVector) {
  const auto v = gwalk::primitive({Int(-6), Int(8), Int(0)});
  EXPECT_EQ(v, (gwalk::IntVector{Int(-3), Int(4), Int(0)}));
  const auto z = gwalk::primitive({Int(0), Int(0)});
  EXPECT_EQ(z, (gwalk::IntVector{Int(0), Int(0)}));
}

TEST(Int, RejectsMalformedLiteral) { EXPECT_THROW(Int("12a"), std::invalid_argument); }
