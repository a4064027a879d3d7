#include "fracideal/backends.hpp"
#include "fracideal/box_oracle.hpp"
#include "fracideal/classify.hpp"
#include "fracideal/numsg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace fracideal;
namespace orc = fracideal::oracle;

namespace {

struct TwoThree : ::testing::Test {
  SemigroupRef s = make_semigroup({2, 3});
  SGIdeal S = sg_whole(s);
  SGIdeal M = SGIdeal(s, 2, {});  // {2, 3, 4, ...}
};

std::set<std::int64_t> range_from(std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> out;
  for (std::int64_t z = lo; z <= hi; ++z) out.insert(z);
  return out;
}

}  // namespace

TEST(NumSemigroup, Invariants) {
  auto s = make_semigroup({3, 5, 7});
  EXPECT_EQ(s->conductor(), 5);
  EXPECT_EQ(s->gaps(), (std::vector<std::int64_t>{1, 2, 4}));
  EXPECT_EQ(s->minimal_generators(), (std::vector<std::int64_t>{3, 5, 7}));
  EXPECT_EQ(make_semigroup({4, 6, 9, 8})->minimal_generators(), (std::vector<std::int64_t>{4, 6, 9}));
  EXPECT_EQ(make_semigroup({1})->conductor(), 0);
  EXPECT_THROW(make_semigroup({2, 4}), std::invalid_argument);
  EXPECT_THROW(make_semigroup({0, 3}), std::invalid_argument);
}

TEST_F(TwoThree, SumExamples) {
  EXPECT_EQ(sg_sum(M, S), M);
  auto minv = sg_colon(S, M);
  EXPECT_EQ(sg_sum(M, minv), M);
  EXPECT_FALSE(sg_sum(M, minv) == S);
  SGIdeal I(s, -1, {0});
  SGIdeal J(s, 5, {});
  EXPECT_EQ(sg_sum(I, J).offset(), I.offset() + J.offset());
}

TEST_F(TwoThree, ColonExamples) {
  EXPECT_EQ(sg_colon(S, S), S);
  auto minv = sg_colon(S, M);
  EXPECT_EQ(minv, SGIdeal(s, 0, {}));  // every integer >= 0
  EXPECT_TRUE(minv.contains(1));
  EXPECT_FALSE(S.contains(1));
  for (std::int64_t n : {-3, 0, 2, 7}) {
    SGIdeal I(s, -1, {0});
    EXPECT_EQ(sg_colon(I, sg_principal(s, n)), sg_shift(I, -n));
  }
}

TEST_F(TwoThree, DivisorialButNotVInvertible) {
  EXPECT_EQ(sg_v(M), M);
  EXPECT_FALSE(is_v_invertible<SemigroupBackend>(M));
  EXPECT_FALSE(v_invertible_direct<SemigroupBackend>(M));
  for (std::int64_t n : {-4, 0, 3})
    EXPECT_EQ(sg_v(sg_principal(s, n)), sg_principal(s, n));
}

TEST(NumSemigroup, NaturalNumbers) {
  auto n = make_semigroup({1});
  for (std::int64_t a = -3; a <= 3; ++a)
    for (std::int64_t b = -3; b <= 3; ++b) {
      auto I = sg_union_gen(n, a, b);
      EXPECT_EQ(I, sg_principal(n, std::min(a, b)));
      EXPECT_TRUE(is_v_invertible<SemigroupBackend>(I));
    }
}

TEST(NumSemigroup, RejectsNonIdeals) {
  auto s = make_semigroup({2, 3});
  EXPECT_THROW(SGIdeal(s, 0, {2}), std::invalid_argument);  // 0 + 2 missing
  EXPECT_THROW(SGIdeal(s, 0, {5}), std::invalid_argument);  // outside (0, 2)
}

TEST(NumSemigroup, OperationsMatchIntegerSets) {
  std::mt19937_64 rng(8);
  for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5, 7}, {4, 6, 9}, {5, 7, 11}, {3, 7}}) {
    auto s = make_semigroup(gens);
    SeededRng draw(rng());
    const std::int64_t c = s->conductor();
    for (int i = 0; i < 60; ++i) {
      auto a = SemigroupBackend::random_ideal(s, draw, 0);
      auto b = SemigroupBackend::random_ideal(s, draw, 0);
      const std::int64_t lo = std::min(a.offset(), b.offset()) - 2 * c - 5;
      const std::int64_t hi = std::max(a.offset(), b.offset()) + 3 * c + 5;
      auto col = orc::members_on(sg_colon(a, b), lo, hi);
      EXPECT_EQ(col, orc::naive_colon(a, b, lo, hi, 2 * c + 2));
      EXPECT_EQ(col, orc::naive_colon(a, b, lo, hi, 5 * c + 20));
      const std::int64_t slo = a.offset() + b.offset();
      EXPECT_EQ(orc::members_on(sg_sum(a, b), slo, hi), orc::naive_sum(a, b, slo, hi));
      for (std::int64_t z = lo; z <= hi; ++z) {
        EXPECT_EQ(sg_intersect(a, b).contains(z), a.contains(z) && b.contains(z));
        EXPECT_EQ(sg_union(a, b).contains(z), a.contains(z) || b.contains(z));
      }
    }
  }
}

TEST(NumSemigroup, ResiduationIdentitiesExhaustive) {
  for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 4}, {3, 5, 7}, {4, 5, 6, 7}, {2, 7}}) {
    auto s = make_semigroup(gens);
    auto sweep = SemigroupBackend::canonical_ideals(s, 0);
    ASSERT_TRUE(sweep.complete);
    auto S = sg_whole(s);
    for (const auto& x : sweep.ideals) {
      const auto& I = x.ideal;
      auto inv = sg_inverse(I);
      EXPECT_TRUE(sg_v(I).contains(I));
      EXPECT_EQ(sg_inverse(sg_v(I)), inv);
      EXPECT_EQ(sg_v(inv), inv);
      EXPECT_TRUE(S.contains(sg_sum(I, inv)));
      EXPECT_EQ(is_v_invertible<SemigroupBackend>(I), v_invertible_direct<SemigroupBackend>(I));
      for (const auto& y : sweep.ideals)
        if (I.contains(y.ideal)) EXPECT_TRUE(sg_inverse(y.ideal).contains(inv));
    }
  }
}

TEST(NumSemigroup, TwoGeneratedInverse) {
  for (auto gens : std::vector<std::vector<std::int64_t>>{{2, 3}, {3, 5, 7}, {4, 6, 9}}) {
    auto s = make_semigroup(gens);
    for (std::int64_t a = -10; a <= 10; ++a)
      for (std::int64_t b = -10; b <= 10; ++b) {
        auto lhs = sg_inverse(sg_union_gen(s, a, b));
        auto rhs = sg_shift(sg_intersect(sg_principal(s, a), sg_principal(s, b)), -a - b);
        EXPECT_EQ(lhs, rhs) << a << " " << b;
      }
  }
}

TEST(NumSemigroup, CanonicalSweepIsComplete) {
  // <3,5,7> has gaps {1,2,4}: the offset-0 ideals are the S-closed supersets of S inside N.
  auto s = make_semigroup({3, 5, 7});
  auto sweep = SemigroupBackend::canonical_ideals(s, 0);
  std::set<std::set<std::int64_t>> seen;
  for (const auto& x : sweep.ideals) seen.insert(orc::members_on(x.ideal, 0, 10));
  EXPECT_EQ(seen.size(), sweep.ideals.size());
  int brute = 0;
  for (int mask = 0; mask < 8; ++mask) {
    std::set<std::int64_t> holes;
    const std::int64_t gaps[3] = {1, 2, 4};
    for (int k = 0; k < 3; ++k)
      if (!(mask >> k & 1)) holes.insert(gaps[k]);
    try {
      SGIdeal(s, 0, std::vector<std::int64_t>(holes.begin(), holes.end()));
      ++brute;
    } catch (const std::invalid_argument&) {
    }
  }
  EXPECT_EQ(static_cast<int>(sweep.ideals.size()), brute);
  EXPECT_EQ(orc::members_on(sg_whole(make_semigroup({1})), 0, 5), range_from(0, 5));
}
