#pragma once

// Invariant and oracle-equivalence suites runnable from the command line.
// Each suite stops at its first failing case, which is the smallest in the
// suite's fixed enumeration order, and reports it.

#include "fracideal/box_oracle.hpp"
#include "fracideal/classify.hpp"
#include "fracideal/expr.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace fracideal {

/// Quadratic backend whose colon uses only the first basis element of the
/// divisor.  Used to check that the suites catch arithmetic faults.
struct FaultyQuadraticBackend : QuadraticBackend {
  static Ideal colon(const Ideal& a, const Ideal& b) { return scale_ideal(a, qinv(b.order(), b.basis()[0])); }
  static Ideal inverse(const Ideal& a) { return colon(unit_ideal(a.order()), a); }
  static Ideal v(const Ideal& a) { return inverse(inverse(a)); }
  static Ideal t(const Ideal& a) { return v(a); }
};

struct SelftestOptions {
  std::int64_t bound = 4;
  std::int64_t samples = 200;
  std::uint64_t seed = 1;
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
  double ms = 0;
};

struct SelftestResult {
  std::vector<SuiteResult> suites;
  bool passed() const {
    for (const auto& s : suites)
      if (!s.passed) return false;
    return true;
  }
};

inline std::vector<QuadOrder> selftest_orders() {
  return {QuadOrder(-1, 1), QuadOrder(-3, 1), QuadOrder(-3, 2), QuadOrder(-5, 1),
          QuadOrder(2, 1),  QuadOrder(5, 2),  QuadOrder(-7, 3)};
}

inline std::vector<SemigroupRef> selftest_semigroups() {
  return {make_semigroup({2, 3}), make_semigroup({3, 5, 7}), make_semigroup({4, 6, 9}), make_semigroup({5, 7, 11}),
          make_semigroup({2, 5})};
}

namespace detail {

/// Runs `check` on cases 0..n-1; a case fails by returning a non-empty
/// description or by throwing.
inline SuiteResult run_suite(const std::string& name, std::size_t n,
                             const std::function<std::string(std::size_t)>& check) {
  SuiteResult r;
  r.name = name;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < n; ++i) {
    std::string bad;
    try {
      bad = check(i);
    } catch (const std::exception& e) {
      bad = std::string("exception: ") + e.what();
    }
    ++r.cases;
    if (!bad.empty()) {
      r.passed = false;
      r.counterexample = bad;
      break;
    }
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

template <class B>
std::string identity_failures(const typename B::Ideal& a, const typename B::Ideal& b, const typename B::Ideal& c) {
  const auto& dom = B::domain_of(a);
  const auto one = B::one(dom);
  auto sub = [](const auto& x, const auto& y) { return y.contains(x); };
  auto where = [&](const std::string& what) {
    return what + " for A = " + B::ideal_expr(a) + ", B = " + B::ideal_expr(b) + ", C = " + B::ideal_expr(c);
  };
  auto av = B::v(a);
  auto ainv = B::inverse(a);
  if (!sub(a, av)) return where("A not inside A^v");
  if (!(B::v(av) == av)) return where("A^v not idempotent");
  if (!(B::inverse(av) == ainv) || !(B::v(ainv) == ainv)) return where("triple-inverse identity fails");
  if (!sub(B::mul(a, ainv), one)) return where("A A^-1 not inside D");
  auto meet = B::intersect(a, b);
  auto sum = B::add(a, b);
  if (!sub(meet, a) || !sub(a, sum)) return where("A ∩ B ⊆ A ⊆ A + B fails");
  if (!sub(ainv, B::inverse(meet))) return where("inverse is not antitone on A ∩ B ⊆ A");
  if (!sub(B::v(meet), av)) return where("v is not monotone on A ∩ B ⊆ A");
  if (!(B::t(a) == av)) return where("t-closure differs from v-closure");
  if (!sub(B::colon(a, a), B::colon(ainv, ainv))) return where("(A:A) not inside (A^-1:A^-1)");
  if (!(B::colon(ainv, ainv) == B::colon(av, av))) return where("(A^-1:A^-1) != (A^v:A^v)");
  if (!(B::colon(B::colon(a, b), c) == B::colon(a, B::mul(b, c)))) return where("((A:B):C) != (A:BC)");
  if (!(is_v_invertible<B>(a) == v_invertible_direct<B>(a))) return where("v-invertibility criteria disagree");
  return {};
}

template <class B>
std::string two_generated_failure(const typename B::Domain& dom, const typename B::Element& a,
                                  const typename B::Element& b) {
  std::array<typename B::Element, 2> g{a, b};
  auto lhs = B::inverse(B::generated(dom, g));
  auto meet = B::intersect(B::principal(dom, a), B::principal(dom, b));
  auto rhs = B::mul(B::principal(dom, B::el_mul(dom, B::el_inv(dom, a), B::el_inv(dom, b))), meet);
  if (lhs == rhs) return {};
  return "(a,b)^-1 != a^-1 b^-1 ((a) ∩ (b)) for a = " + B::format_element(dom, a) + ", b = " +
         B::format_element(dom, b);
}

template <class B>
std::string witness_recheck(const typename B::Domain& dom, const std::string& property, const Verdict& v) {
  if (!v.witness) return {};
  const auto& w = *v.witness;
  auto lhs = evaluate_expression<B>(dom, w.lhs_expr);
  auto rhs = evaluate_expression<B>(dom, w.rhs_expr);
  if (B::format_ideal(lhs) != w.lhs || B::format_ideal(rhs) != w.rhs)
    return property + " witness does not re-evaluate: " + w.lhs_expr + " gives " + B::format_ideal(lhs) +
           ", report says " + w.lhs;
  if (lhs == rhs) return property + " witness sides are equal on re-evaluation: " + w.lhs_expr;
  return {};
}

inline std::int64_t surd_denominator_lcm(const FracIdealQ& x) {
  BigInt l(1);
  for (const auto& s : oracle::surd_basis(x))
    for (const auto& c : s) l = lcm_of(l, c.den());
  return l.to_int64();
}

template <class QB>
SelftestResult run_suites(const SelftestOptions& opt, std::ostream* progress) {
  using SB = SemigroupBackend;
  SelftestResult result;
  auto report = [&](SuiteResult r) {
    if (progress) {
      *progress << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, "
                << static_cast<long long>(r.ms) << " ms)\n";
      if (!r.passed) *progress << "  counterexample: " << r.counterexample << "\n";
    }
    result.suites.push_back(std::move(r));
  };
  const auto orders = selftest_orders();
  const auto semigroups = selftest_semigroups();
  const auto samples = static_cast<std::size_t>(opt.samples);

  // 1. v-invertibility: colon criterion against (A A^-1)^v = D.
  {
    SeededRng rng(opt.seed);
    std::vector<std::pair<std::size_t, FracIdealQ>> qs;
    for (std::size_t k = 0; k < orders.size(); ++k)
      for (std::size_t i = 0; i < samples; ++i) qs.emplace_back(k, QB::random_ideal(orders[k], rng, 4));
    std::vector<SGIdeal> ss;
    for (const auto& s : semigroups)
      for (std::size_t i = 0; i < samples; ++i) ss.push_back(SB::random_ideal(s, rng, 0));
    report(run_suite("v-invertibility differential", qs.size() + ss.size(), [&](std::size_t i) -> std::string {
      if (i < qs.size()) {
        const auto& a = qs[i].second;
        if (is_v_invertible<QB>(a) != v_invertible_direct<QB>(a))
          return "criteria disagree on " + QB::ideal_expr(a) + " in " + a.order().name();
        return {};
      }
      const auto& a = ss[i - qs.size()];
      if (is_v_invertible<SB>(a) != v_invertible_direct<SB>(a))
        return "criteria disagree on " + SB::ideal_expr(a) + " in " + a.semigroup()->name();
      return {};
    }));
  }

  // 2. Closure and residuation identities.
  {
    SeededRng rng(opt.seed + 1);
    const std::size_t per = std::max<std::size_t>(1, samples / 4);
    std::vector<std::array<FracIdealQ, 3>> qs;
    for (const auto& o : orders)
      for (std::size_t i = 0; i < per; ++i)
        qs.push_back({QB::random_ideal(o, rng, 3), QB::random_ideal(o, rng, 3), QB::random_ideal(o, rng, 3)});
    std::vector<std::array<SGIdeal, 3>> ss;
    for (const auto& s : semigroups)
      for (std::size_t i = 0; i < per; ++i)
        ss.push_back({SB::random_ideal(s, rng, 0), SB::random_ideal(s, rng, 0), SB::random_ideal(s, rng, 0)});
    report(run_suite("closure identities", qs.size() + ss.size(), [&](std::size_t i) {
      if (i < qs.size()) return identity_failures<QB>(qs[i][0], qs[i][1], qs[i][2]);
      const auto& t = ss[i - qs.size()];
      return identity_failures<SB>(t[0], t[1], t[2]);
    }));
  }

  // 3. (a,b)^-1 = a^-1 b^-1 ((a) ∩ (b)).
  {
    SeededRng rng(opt.seed + 2);
    std::vector<std::tuple<std::size_t, QElem, QElem>> qs;
    for (std::size_t k = 0; k < orders.size(); ++k)
      for (std::size_t i = 0; i < samples; ++i) {
        auto draw = [&] {
          for (;;) {
            auto u = rng.uniform(-6, 6), v = rng.uniform(-6, 6);
            if (u || v) return from_order_coords(orders[k], u, v);
          }
        };
        qs.emplace_back(k, draw(), draw());
      }
    std::vector<std::tuple<std::size_t, std::int64_t, std::int64_t>> ss;
    for (std::size_t k = 0; k < semigroups.size(); ++k)
      for (std::size_t i = 0; i < samples; ++i) ss.emplace_back(k, rng.uniform(-20, 20), rng.uniform(-20, 20));
    report(run_suite("two-generated inverse identity", qs.size() + ss.size(), [&](std::size_t i) {
      if (i < qs.size()) {
        auto& [k, a, b] = qs[i];
        return two_generated_failure<QB>(orders[k], a, b);
      }
      auto& [k, a, b] = ss[i - qs.size()];
      return two_generated_failure<SB>(semigroups[k], a, b);
    }));
  }

  // 4. Per-pair v-domain conditions agree on every pair up to the bound.
  {
    std::vector<std::function<std::string()>> cases;
    for (const auto& o : orders)
      for (const auto& c : pair_candidates<QB>(o, opt.bound, false))
        cases.push_back([&o, c] {
          vdomain_pair_check<QB>(o, c.a, c.b);
          return std::string();
        });
    for (const auto& s : semigroups)
      for (const auto& c : pair_candidates<SB>(s, 2 * s->conductor() + opt.bound))
        cases.push_back([&s, c] {
          vdomain_pair_check<SB>(s, c.a, c.b);
          return std::string();
        });
    report(run_suite("per-pair v-domain conditions", cases.size(), [&](std::size_t i) { return cases[i](); }));
  }

  // 5. Quadratic colon and intersection against box enumeration.
  {
    SeededRng rng(opt.seed + 3);
    const std::size_t per = std::max<std::size_t>(1, samples / 20);
    std::vector<std::pair<FracIdealQ, FracIdealQ>> qs;
    for (const auto& o : orders)
      for (std::size_t i = 0; i < per; ++i) {
        qs.emplace_back(QB::random_ideal(o, rng, 2), QB::random_ideal(o, rng, 2));
        qs.emplace_back(QB::one(o), QB::random_ideal(o, rng, 2));
      }
    report(run_suite("box-enumeration oracle", qs.size(), [&](std::size_t i) -> std::string {
      const auto& [a, b] = qs[i];
      auto col = QB::colon(a, b);
      auto meet = QB::intersect(a, b);
      std::int64_t den = std::lcm(surd_denominator_lcm(col), surd_denominator_lcm(meet));
      std::string where = " for A = " + QB::ideal_expr(a) + ", B = " + QB::ideal_expr(b) + " in " + a.order().name();
      if (auto bad = oracle::colon_disagreement(a, b, col, 8, den)) return "colon: " + *bad + where;
      if (auto bad = oracle::intersection_disagreement(a, b, meet, 8, den)) return "intersection: " + *bad + where;
      if (auto bad = oracle::product_missing(a, b, QB::mul(a, b))) return "product misses " + *bad + where;
      return {};
    }));
  }

  // 6. Semigroup operations against integer sets, at two window sizes.
  {
    SeededRng rng(opt.seed + 4);
    std::vector<std::pair<SGIdeal, SGIdeal>> ss;
    for (const auto& s : semigroups)
      for (std::size_t i = 0; i < std::max<std::size_t>(1, samples / 4); ++i)
        ss.emplace_back(SB::random_ideal(s, rng, 0), SB::random_ideal(s, rng, 0));
    report(run_suite("semigroup window oracle", ss.size(), [&](std::size_t i) -> std::string {
      const auto& [a, b] = ss[i];
      const std::int64_t c = a.semigroup()->conductor();
      const std::int64_t lo = -4 * c - 10, hi = 4 * c + 10;
      std::string where = " for I = " + SB::ideal_expr(a) + ", J = " + SB::ideal_expr(b);
      auto col = oracle::members_on(sg_colon(a, b), lo, hi);
      if (col != oracle::naive_colon(a, b, lo, hi, 2 * c + 5) || col != oracle::naive_colon(a, b, lo, hi, 4 * c + 10))
        return "colon" + where;
      // Sums are complete on the window once both summands start inside it.
      auto sum_lo = a.offset() + b.offset();
      if (oracle::members_on(sg_sum(a, b), sum_lo, hi) != oracle::naive_sum(a, b, sum_lo, hi)) return "sum" + where;
      for (std::int64_t z = lo; z <= hi; ++z) {
        if (sg_intersect(a, b).contains(z) != (a.contains(z) && b.contains(z))) return "intersection" + where;
        if (sg_union(a, b).contains(z) != (a.contains(z) || b.contains(z))) return "union" + where;
      }
      return {};
    }));
  }

  // 7. Classification: implications, oracle concordance, witness round trip.
  {
    ClassifyOptions copt;
    copt.bound = opt.bound;
    std::vector<std::function<std::string()>> cases;
    for (const auto& o : orders)
      cases.push_back([&o, &copt]() -> std::string {
        auto r = classify_domain<QB>(o, copt);
        bool maximal = is_maximal_order(o);
        for (const char* p : {kVDomain, kCIC, kKrull, kPvMD})
          if (r.get(p).is_refuted() == maximal)
            return std::string(p) + " disagrees with the maximality oracle on " + o.name();
        for (const auto& row : r.properties)
          if (auto bad = witness_recheck<QB>(o, row.name, row.verdict); !bad.empty()) return bad;
        return {};
      });
    for (const auto& s : semigroups)
      cases.push_back([&s, &copt]() -> std::string {
        auto r = classify_domain<SB>(s, copt);
        for (const auto& row : r.properties)
          if (auto bad = witness_recheck<SB>(s, row.name, row.verdict); !bad.empty()) return bad;
        return {};
      });
    report(run_suite("classification consistency", cases.size(), [&](std::size_t i) { return cases[i](); }));
  }
  return result;
}

}  // namespace detail

inline SelftestResult run_selftest(const SelftestOptions& opt, std::ostream* progress = nullptr) {
  if (opt.inject_fault) return detail::run_suites<FaultyQuadraticBackend>(opt, progress);
  return detail::run_suites<QuadraticBackend>(opt, progress);
}

}  // namespace fracideal
