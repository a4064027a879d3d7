#include "fracideal/backends.hpp"
#include "fracideal/box_oracle.hpp"
#include "fracideal/quadratic.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fracideal;
namespace orc = fracideal::oracle;

namespace {

QElem el(const QuadOrder& o, std::int64_t u, std::int64_t v) { return from_order_coords(o, u, v); }

// In Z[sqrt(-3)] (d = -3, f = 2) the order generator w is sqrt(-3).
struct Eisenstein2 : ::testing::Test {
  QuadOrder o{-3, 2};
  FracIdealQ D = unit_ideal(o);
  FracIdealQ P = generated(o, {el(o, 2, 0), el(o, 1, 1)});  // (2, 1+sqrt(-3))
  FracIdealQ maximal = maximal_order_module(o);
};

std::int64_t den_lcm(std::initializer_list<const FracIdealQ*> ideals) {
  BigInt l(1);
  for (auto* x : ideals)
    for (const auto& s : orc::surd_basis(*x))
      for (const auto& c : s) l = lcm_of(l, c.den());
  return l.to_int64();
}

FracIdealQ random_ideal(const QuadOrder& o, std::mt19937_64& rng, std::int64_t h = 10) {
  std::uniform_int_distribution<std::int64_t> e(-h, h);
  auto draw = [&] {
    for (;;) {
      auto u = e(rng), v = e(rng);
      if (u || v) return el(o, u, v);
    }
  };
  return generated(o, {draw(), draw()});
}

}  // namespace

TEST(QuadOrder, Validation) {
  EXPECT_THROW(QuadOrder(4, 1), std::invalid_argument);
  EXPECT_THROW(QuadOrder(1, 1), std::invalid_argument);
  EXPECT_THROW(QuadOrder(0, 1), std::invalid_argument);
  EXPECT_THROW(QuadOrder(-1, 0), std::invalid_argument);
  EXPECT_TRUE(is_maximal_order(QuadOrder(-1, 1)));
  EXPECT_FALSE(is_maximal_order(QuadOrder(-3, 2)));
  EXPECT_TRUE(is_maximal_order(QuadOrder(-3, 1)));
}

TEST(QuadOrder, GeneratorIsCanonical) {
  // w = (delta + sqrt(Delta))/2 with Delta = f^2 * disc.
  QuadOrder o(-3, 2);
  auto w = orc::to_surd(o, el(o, 0, 1));
  EXPECT_EQ(w[0], Rat(0));
  EXPECT_EQ(w[1], Rat(1));
  QuadOrder o3(-3, 3);
  auto w3 = orc::to_surd(o3, el(o3, 0, 1));
  EXPECT_EQ(w3[0], Rat(1, 2));
  EXPECT_EQ(w3[1], Rat(3, 2));
  for (auto [d, f] : std::vector<std::pair<int, int>>{{-1, 1}, {-3, 2}, {5, 3}, {2, 2}, {-7, 4}}) {
    QuadOrder q(d, f);
    auto b = orc::order_basis(q);
    auto g = unit_ideal(q);
    EXPECT_TRUE(g.contains(el(q, 1, 0)));
    EXPECT_TRUE(g.contains(el(q, 0, 1)));
    EXPECT_TRUE(orc::in_span(b, orc::to_surd(q, el(q, 0, 1))));
    EXPECT_TRUE(orc::in_span(orc::surd_basis(g), b[1]));
  }
}

TEST(Element, Formatting) {
  QuadOrder o(-1, 1);
  EXPECT_EQ(format_element(o, el(o, 1, 1)), "1+w");
  EXPECT_EQ(format_element(o, el(o, 0, -1)), "-w");
  EXPECT_EQ(format_element(o, from_order_coords(o, Rat(-1, 2), Rat(3, 2))), "-1/2+3/2*w");
}

TEST_F(Eisenstein2, PrincipalAndProduct) {
  EXPECT_EQ(principal(o, el(o, 1, 0)), D);
  auto two = principal(o, el(o, 2, 0));
  EXPECT_TRUE(two.contains(el(o, 2, 0)));
  EXPECT_TRUE(two.contains(el(o, 0, 2)));
  EXPECT_FALSE(two.contains(el(o, 0, 1)));
  EXPECT_EQ(ideal_mul(P, D), P);
  EXPECT_EQ(ideal_mul(P, P), ideal_mul(two, P));
  EXPECT_THROW(principal(o, el(o, 0, 0)), ZeroElement);
  EXPECT_THROW(ideal_mul(P, unit_ideal(QuadOrder(-3, 1))), MixedOrders);
}

TEST(Product, GaussianConjugates) {
  QuadOrder o(-1, 1);
  EXPECT_EQ(ideal_mul(principal(o, el(o, 1, 1)), principal(o, el(o, 1, -1))), principal(o, el(o, 2, 0)));
}

TEST_F(Eisenstein2, ColonAgainstBox) {
  auto pinv = colon(D, P);
  EXPECT_EQ(pinv, maximal);
  EXPECT_EQ(inverse(P), maximal);
  // x = (u + v*sqrt(-3))/2 with |u|, |v| <= 20.
  EXPECT_EQ(orc::colon_disagreement(D, P, pinv, 20, 2), std::nullopt);
  auto ring = colon(pinv, pinv);
  EXPECT_EQ(ring, maximal);
  EXPECT_EQ(orc::colon_disagreement(pinv, pinv, ring, 20, 2), std::nullopt);
  EXPECT_EQ(v_closure(P), P);
  EXPECT_EQ(orc::colon_disagreement(D, pinv, v_closure(P), 20, 2), std::nullopt);
  EXPECT_EQ(colon(D, D), D);
  EXPECT_EQ(inverse(D), D);
}

TEST_F(Eisenstein2, IntersectionAgainstBox) {
  auto a = principal(o, el(o, 2, 0));
  auto b = principal(o, el(o, 1, 1));
  auto meet = ideal_intersect(a, b);
  EXPECT_EQ(orc::intersection_disagreement(a, b, meet, 30, 1), std::nullopt);
  EXPECT_EQ(ideal_intersect(P, P), P);
  EXPECT_EQ(ideal_add(P, P), P);
}

TEST(Colon, PrincipalDivisor) {
  std::mt19937_64 rng(1);
  for (auto [d, f] : std::vector<std::pair<int, int>>{{-1, 1}, {-3, 2}, {-5, 1}, {2, 1}, {5, 2}}) {
    QuadOrder o(d, f);
    for (int i = 0; i < 30; ++i) {
      auto a = random_ideal(o, rng, 5);
      auto x = el(o, 1 + i % 4, i % 3 - 1);
      EXPECT_EQ(colon(a, principal(o, x)), scale_ideal(a, qinv(o, x)));
      EXPECT_EQ(inverse(principal(o, x)), principal(o, qinv(o, x)));
      EXPECT_EQ(ideal_mul(principal(o, x), principal(o, qinv(o, x))), unit_ideal(o));
      EXPECT_EQ(v_closure(principal(o, x)), principal(o, x));
    }
  }
}

TEST(Colon, RandomAgainstBox) {
  std::mt19937_64 rng(2);
  for (auto [d, f] : std::vector<std::pair<int, int>>{{-1, 1}, {-3, 2}, {-5, 1}, {2, 1}, {5, 2}, {-7, 3}}) {
    QuadOrder o(d, f);
    for (int i = 0; i < 6; ++i) {
      auto a = random_ideal(o, rng, 3);
      auto b = random_ideal(o, rng, 3);
      auto c = colon(a, b);
      auto m = ideal_intersect(a, b);
      std::int64_t den = den_lcm({&c, &m});
      EXPECT_EQ(orc::colon_disagreement(a, b, c, 10, den), std::nullopt) << o.name();
      EXPECT_EQ(orc::intersection_disagreement(a, b, m, 10, den), std::nullopt) << o.name();
      EXPECT_EQ(orc::product_missing(a, b, ideal_mul(a, b)), std::nullopt);
    }
  }
}

TEST(Identities, SampledProperties) {
  std::mt19937_64 rng(4);
  for (auto [d, f] : std::vector<std::pair<int, int>>{{-1, 1}, {-3, 2}, {-5, 1}, {5, 2}, {-7, 3}}) {
    QuadOrder o(d, f);
    auto D = unit_ideal(o);
    for (int i = 0; i < 100; ++i) {
      auto a = random_ideal(o, rng);
      auto b = random_ideal(o, rng);
      auto ainv = inverse(a);
      auto av = v_closure(a);
      EXPECT_TRUE(D.contains(ideal_mul(a, ainv)));
      EXPECT_TRUE(av.contains(a));
      EXPECT_EQ(v_closure(av), av);
      EXPECT_EQ(inverse(av), ainv);
      EXPECT_EQ(v_closure(ainv), ainv);
      EXPECT_EQ(t_closure(a), av);
      auto meet = ideal_intersect(a, b);
      EXPECT_TRUE(a.contains(meet));
      EXPECT_TRUE(ideal_add(a, b).contains(a));
      EXPECT_TRUE(inverse(meet).contains(ainv));
      EXPECT_TRUE(av.contains(v_closure(meet)));
      EXPECT_TRUE(colon(ainv, ainv).contains(colon(a, a)));
      EXPECT_EQ(colon(ainv, ainv), colon(av, av));
    }
  }
}

TEST(Identities, TwoGeneratedInverse) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> e(-8, 8);
  for (auto [d, f] : std::vector<std::pair<int, int>>{{-1, 1}, {-3, 2}, {-5, 1}, {3, 1}}) {
    QuadOrder o(d, f);
    for (int i = 0; i < 200; ++i) {
      auto a = el(o, e(rng), e(rng)), b = el(o, e(rng), e(rng));
      if (a.is_zero() || b.is_zero()) continue;
      auto lhs = inverse(generated(o, {a, b}));
      auto rhs = scale_ideal(ideal_intersect(principal(o, a), principal(o, b)), qmul(o, qinv(o, a), qinv(o, b)));
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(lhs, ideal_intersect(principal(o, qinv(o, a)), principal(o, qinv(o, b))));
    }
  }
}

TEST(Closure, TClosureGuard) {
  QuadOrder o(-3, 2);
  EXPECT_EQ(t_closure(unit_ideal(o)), unit_ideal(o));
}

TEST(Construction, RejectsNonModules) {
  QuadOrder o(-1, 1);
  // span{(1,0), (0,2)} = Z + 2iZ is not closed under multiplication by i.
  EXPECT_THROW(FracIdealQ(o, Lattice2::hnf({IVec2{1, 0}, IVec2{0, 2}})), NotAnIdeal);
}

TEST(Essential, Examples) {
  for (const auto& pa : essential_at(QuadOrder(-1, 1), 5)) {
    EXPECT_TRUE(pa.essential);
    EXPECT_TRUE(pa.invertible);
  }
  EXPECT_EQ(essential_at(QuadOrder(-1, 1), 5).size(), 2u);
  auto two = essential_at(QuadOrder(-3, 2), 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_FALSE(two[0].essential);
  EXPECT_FALSE(two[0].invertible);
  QuadOrder o(-3, 2);
  EXPECT_EQ(two[0].ideal, generated(o, {el(o, 2, 0), el(o, 1, 1)}));
  for (const auto& pa : essential_at(QuadOrder(-3, 2), 5)) EXPECT_TRUE(pa.essential && pa.invertible);
  for (const auto& pa : essential_at(QuadOrder(-3, 2), 7)) EXPECT_TRUE(pa.essential && pa.invertible);
  EXPECT_THROW(essential_at(QuadOrder(-1, 1), 6), std::invalid_argument);
}
