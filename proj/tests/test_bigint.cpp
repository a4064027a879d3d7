#include "fracideal/bigint.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace fracideal;
using Wide = boost::multiprecision::cpp_int;
using WideRat = boost::multiprecision::cpp_rational;

namespace {

Wide wide(const BigInt& x) { return x.to_wide(); }
WideRat wide(const Rat& x) { return WideRat(x.num().to_wide(), x.den().to_wide()); }

}  // namespace

TEST(BigInt, PromotesOnOverflow) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  BigInt x(big);
  BigInt y = x + BigInt(1);
  EXPECT_FALSE(y.fits_int64());
  EXPECT_EQ(wide(y), Wide(big) + 1);
  EXPECT_EQ(y - BigInt(1), x);
  EXPECT_TRUE((y - BigInt(1)).fits_int64());
  BigInt sq = x * x;
  EXPECT_EQ(wide(sq), Wide(big) * Wide(big));
  EXPECT_EQ(sq / x, x);
  BigInt minv(std::numeric_limits<std::int64_t>::min());
  EXPECT_EQ(wide(-minv), -Wide(std::numeric_limits<std::int64_t>::min()));
  EXPECT_EQ(wide(minv / BigInt(-1)), -Wide(std::numeric_limits<std::int64_t>::min()));
  EXPECT_EQ(minv % BigInt(-1), BigInt(0));
}

TEST(BigInt, CanonicalZero) {
  BigInt big = BigInt(std::numeric_limits<std::int64_t>::max()) * BigInt(4);
  BigInt zero = big - big;
  EXPECT_TRUE(zero.fits_int64());
  EXPECT_EQ(zero, BigInt(0));
  EXPECT_EQ(zero.sign(), 0);
}

TEST(BigInt, MatchesWideArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(std::numeric_limits<std::int64_t>::min() / 2,
                                                   std::numeric_limits<std::int64_t>::max() / 2);
  for (int i = 0; i < 2000; ++i) {
    BigInt a(dist(rng)), b(dist(rng));
    if (i % 3 == 0) a = a * BigInt(dist(rng));
    if (b.sign() == 0) continue;
    EXPECT_EQ(wide(a + b), wide(a) + wide(b));
    EXPECT_EQ(wide(a - b), wide(a) - wide(b));
    EXPECT_EQ(wide(a * b), wide(a) * wide(b));
    EXPECT_EQ(wide(a / b), wide(a) / wide(b));
    EXPECT_EQ(wide(a % b), wide(a) % wide(b));
    EXPECT_EQ(a < b, wide(a) < wide(b));
    EXPECT_EQ(wide(gcd_of(a, b)), boost::multiprecision::gcd(wide(a), wide(b)));
    BigInt q = floor_div(a, b);
    BigInt r = mod_floor(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_TRUE(r.sign() == 0 || r.sign() == b.sign());
  }
}

TEST(BigInt, ExtendedGcd) {
  for (std::int64_t a = -30; a <= 30; ++a)
    for (std::int64_t b = -30; b <= 30; ++b) {
      auto [g, x, y] = xgcd(BigInt(a), BigInt(b));
      EXPECT_EQ(g, gcd_of(BigInt(a), BigInt(b)));
      EXPECT_EQ(BigInt(a) * x + BigInt(b) * y, g);
    }
}

TEST(Rat, AlwaysReduced) {
  Rat r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.num(), BigInt(-3));
  EXPECT_EQ(r.den(), BigInt(2));
  EXPECT_EQ(Rat(0, 5).den(), BigInt(1));
  EXPECT_THROW(Rat(1, 0), std::domain_error);
  EXPECT_EQ(parse_rat("-10/4"), Rat(-5, 2));
  EXPECT_EQ(to_string(Rat(7, 1)), "7");
  EXPECT_EQ(to_string(Rat(-7, 3)), "-7/3");
}

TEST(Rat, MatchesWideRationals) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-1'000'000'007LL, 1'000'000'007LL);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t d1 = dist(rng), d2 = dist(rng);
    if (d1 == 0 || d2 == 0) continue;
    Rat a(dist(rng), d1), b(dist(rng), d2);
    EXPECT_EQ(wide(a + b), wide(a) + wide(b));
    EXPECT_EQ(wide(a - b), wide(a) - wide(b));
    EXPECT_EQ(wide(a * b), wide(a) * wide(b));
    if (b.sign() != 0) EXPECT_EQ(wide(a / b), wide(a) / wide(b));
    EXPECT_EQ(a < b, wide(a) < wide(b));
    EXPECT_GT(a.den(), BigInt(0));
    EXPECT_EQ(gcd_of(a.num(), a.den()), BigInt(1));
  }
}
