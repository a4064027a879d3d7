#include "fracideal/expr.hpp"
#include "fracideal/spec_file.hpp"

#include <gtest/gtest.h>

using namespace fracideal;
using QB = QuadraticBackend;
using SB = SemigroupBackend;

namespace {

QElem el(const QuadOrder& o, std::int64_t u, std::int64_t v) { return from_order_coords(o, u, v); }

std::size_t error_offset(const QuadOrder& o, const std::string& text) {
  try {
    evaluate_expression<QB>(o, text);
  } catch (const ExprError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "no error for " << text;
  return 0;
}

}  // namespace

TEST(Expr, ColonOfIntersection) {
  QuadOrder o(-3, 2);
  auto r = evaluate_expression<QB>(o, "((2) ∩ (1+w)) : ((2) ∩ (1+w))");
  EXPECT_EQ(r, maximal_order_module(o));
  EXPECT_EQ(containment_summary<QB>(r), "≠ D, ⊃ D");
  EXPECT_EQ(evaluate_expression<QB>(o, "((2) ^ (1+w)) : ((2) ^ (1+w))"), r);
}

TEST(Expr, UnitAndPrincipal) {
  QuadOrder o(-5, 1);
  EXPECT_EQ(evaluate_expression<QB>(o, "D^-1"), unit_ideal(o));
  EXPECT_EQ(containment_summary<QB>(evaluate_expression<QB>(o, "D^-1")), "= D");
  EXPECT_EQ(evaluate_expression<QB>(o, "(3+2*w)^v"), principal(o, el(o, 3, 2)));
  EXPECT_EQ(evaluate_expression<QB>(o, "(3+2w)^t"), principal(o, el(o, 3, 2)));
  EXPECT_EQ(evaluate_expression<QB>(o, "-1/2 * (2)"), unit_ideal(o));
}

TEST(Expr, Precedence) {
  QuadOrder o(-5, 1);
  auto P = generated(o, {el(o, 2, 0), el(o, 1, 1)});
  auto Q = generated(o, {el(o, 3, 0), el(o, 1, 1)});
  EXPECT_EQ(evaluate_expression<QB>(o, "(2, 1+w) * (3, 1+w) + (2)"), ideal_add(ideal_mul(P, Q), principal(o, el(o, 2, 0))));
  EXPECT_EQ(evaluate_expression<QB>(o, "(2, 1+w) + (3, 1+w) ∩ (2)"),
            ideal_add(P, ideal_intersect(Q, principal(o, el(o, 2, 0)))));
  EXPECT_EQ(evaluate_expression<QB>(o, "D : (2, 1+w) : (3, 1+w)"), colon(colon(unit_ideal(o), P), Q));
  EXPECT_EQ(evaluate_expression<QB>(o, "(2, 1+w)^-1^-1"), v_closure(P));
  EXPECT_EQ(evaluate_expression<QB>(o, "((2, 1+w) * (2, 1-w))"), principal(o, el(o, 2, 0)));
  EXPECT_EQ(evaluate_expression<QB>(o, "2 * (1+w)"), principal(o, el(o, 2, 2)));
}

TEST(Expr, RationalCoefficients) {
  QuadOrder o(-3, 1);
  auto x = from_order_coords(o, Rat(-1, 2), Rat(3, 2));
  EXPECT_EQ(evaluate_expression<QB>(o, "(-1/2+3/2*w)"), principal(o, x));
}

TEST(Expr, CaretDiagnostics) {
  QuadOrder o(-1, 1);
  EXPECT_EQ(error_offset(o, "(2, 1+w"), 0u);
  EXPECT_EQ(error_offset(o, "(2) ++ (3)"), 5u);
  EXPECT_EQ(error_offset(o, "(2)^x"), 4u);
  EXPECT_EQ(error_offset(o, "(0)"), 0u);
  EXPECT_EQ(error_offset(o, "(1/0)"), 3u);
  EXPECT_EQ(error_offset(o, "S"), 0u);
  try {
    evaluate_expression<QB>(o, "(2) ∩ (3) ? (1)");
    FAIL();
  } catch (const ExprError& e) {
    auto diag = caret_diagnostic("(2) ∩ (3) ? (1)", e);
    EXPECT_NE(diag.find("\n            ^"), std::string::npos) << diag;
  }
}

TEST(Expr, Semigroup) {
  auto s = make_semigroup({2, 3});
  auto M = evaluate_expression<SB>(s, "(2, 3)");
  EXPECT_EQ(M, SGIdeal(s, 2, {}));
  EXPECT_EQ(evaluate_expression<SB>(s, "S : (2, 3)"), SGIdeal(s, 0, {}));
  EXPECT_EQ(evaluate_expression<SB>(s, "(2,3)^v"), M);
  EXPECT_EQ(evaluate_expression<SB>(s, "D"), sg_whole(s));
  EXPECT_EQ(evaluate_expression<SB>(s, "(-3)"), sg_principal(s, -3));
  EXPECT_THROW(evaluate_expression<SB>(s, "(w)"), ExprError);
}

TEST(SpecFile, ParsesFileForm) {
  auto spec = parse_domain_spec("# comment\nkind = quadratic\nd = -3   # trailing\nf = 2\nbound = 6\nprimes = 2, 3\n");
  EXPECT_EQ(spec.kind, DomainKind::Quadratic);
  EXPECT_EQ(spec.d, -3);
  EXPECT_EQ(spec.f, 2);
  EXPECT_EQ(spec.bound, 6);
  EXPECT_EQ(spec.primes, (std::vector<std::int64_t>{2, 3}));
  EXPECT_EQ(parse_domain_spec(spec.echo(), true).echo(), spec.echo());
}

TEST(SpecFile, ParsesInlineForm) {
  auto spec = parse_domain_spec("kind=numerical-semigroup; generators=3,5,7; seed=9", true);
  EXPECT_EQ(spec.kind, DomainKind::Semigroup);
  EXPECT_EQ(spec.generators, (std::vector<std::int64_t>{3, 5, 7}));
  EXPECT_EQ(spec.seed, 9u);
  auto minus = parse_domain_spec("kind=quadratic; d=\xE2\x88\x92" "1", true);
  EXPECT_EQ(minus.d, -1);
}

TEST(SpecFile, ErrorsCarryPosition) {
  auto where = [](const std::string& text, bool inl = false) {
    try {
      parse_domain_spec(text, inl);
    } catch (const SpecParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair(std::size_t{0}, std::size_t{0});
  };
  EXPECT_EQ(where("kind = quadratic\nd = x3\n"), std::make_pair(std::size_t{2}, std::size_t{5}));
  EXPECT_EQ(where("kind = quadratic\n  colour = 3\n"), std::make_pair(std::size_t{2}, std::size_t{3}));
  EXPECT_EQ(where("kind = cubic\n"), std::make_pair(std::size_t{1}, std::size_t{8}));
  EXPECT_EQ(where("kind=quadratic; d 5", true), std::make_pair(std::size_t{1}, std::size_t{17}));
  EXPECT_EQ(where("kind=numerical-semigroup; generators=2, ,3", true), std::make_pair(std::size_t{1}, std::size_t{41}));
  EXPECT_THROW(parse_domain_spec("kind = quadratic\nd = 4\n"), SpecParseError);
  EXPECT_THROW(parse_domain_spec("kind = numerical-semigroup\ngenerators = 4, 6\n"), SpecParseError);
  EXPECT_THROW(parse_domain_spec("d = -1\n"), SpecParseError);
}
