#pragma once

// Brute-force reference computations used by the tests and the self-test.
//
// They share no code with the lattice or ideal algorithms: quadratic
// elements are handled as r + s*sqrt(d) with schoolbook multiplication,
// membership is decided by Cramer's rule on a Z-basis, and colon ideals and
// intersections are compared pointwise on a finite box of candidates.
// Semigroup ideals are compared against plain integer sets on a window.

#include "fracideal/numsg.hpp"
#include "fracideal/quadratic.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fracideal::oracle {

/// r + s*sqrt(d).
using Surd = std::array<Rat, 2>;

inline Surd to_surd(const QuadOrder& o, const QElem& x) {
  // Internal coordinates are over (1, omega), omega = (1+sqrt(d))/2 or sqrt(d).
  if (((o.d() % 4) + 4) % 4 == 1) {
    Rat half(1, 2);
    return {x.u + x.v * half, x.v * half};
  }
  return {x.u, x.v};
}

inline Surd surd_mul(std::int64_t d, const Surd& x, const Surd& y) {
  return {x[0] * y[0] + Rat(d) * x[1] * y[1], x[0] * y[1] + x[1] * y[0]};
}

/// Z-basis of an ideal in surd coordinates.
inline std::array<Surd, 2> surd_basis(const FracIdealQ& a) {
  auto b = a.basis();
  return {to_surd(a.order(), b[0]), to_surd(a.order(), b[1])};
}

/// x ∈ Z g1 + Z g2, by Cramer's rule.
inline bool in_span(const std::array<Surd, 2>& g, const Surd& x) {
  Rat det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
  Rat m = (x[0] * g[1][1] - x[1] * g[1][0]) / det;
  Rat n = (g[0][0] * x[1] - g[0][1] * x[0]) / det;
  return is_integral(m) && is_integral(n);
}

/// Z-basis of the order: 1 and (delta + sqrt(Delta))/2, computed from d and f.
inline std::array<Surd, 2> order_basis(const QuadOrder& o) {
  const bool one_mod_four = ((o.d() % 4) + 4) % 4 == 1;
  // Delta = f^2 * disc, disc = d or 4d; sqrt(Delta) = f * (1 or 2) * sqrt(d).
  const std::int64_t root = o.f() * (one_mod_four ? 1 : 2);
  const std::int64_t disc = one_mod_four ? o.d() : 4 * o.d();
  const std::int64_t delta = ((o.f() * o.f() * disc) % 2 + 2) % 2;
  return {Surd{Rat(1), Rat(0)}, Surd{Rat(delta, 2), Rat(root, 2)}};
}

/// Candidates (p + q*sqrt(d)) / den with |p|, |q| <= radius.
inline std::vector<Surd> box(std::int64_t radius, std::int64_t den) {
  std::vector<Surd> out;
  for (std::int64_t p = -radius; p <= radius; ++p)
    for (std::int64_t q = -radius; q <= radius; ++q) out.push_back({Rat(p, den), Rat(q, den)});
  return out;
}

inline std::string show(const Surd& x) { return to_string(x[0]) + " + " + to_string(x[1]) + "*sqrt(d)"; }

/// x*B ⊆ A, checked on a Z-basis of B.
inline bool multiplies_into(std::int64_t d, const Surd& x, const std::array<Surd, 2>& b,
                            const std::array<Surd, 2>& a) {
  return in_span(a, surd_mul(d, x, b[0])) && in_span(a, surd_mul(d, x, b[1]));
}

/// First box point where membership in `claimed` differs from x*B ⊆ A.
inline std::optional<std::string> colon_disagreement(const FracIdealQ& a, const FracIdealQ& b,
                                                     const FracIdealQ& claimed, std::int64_t radius,
                                                     std::int64_t den) {
  const auto d = a.order().d();
  auto ga = surd_basis(a), gb = surd_basis(b), gc = surd_basis(claimed);
  for (const auto& x : box(radius, den)) {
    bool brute = multiplies_into(d, x, gb, ga);
    if (brute != in_span(gc, x))
      return show(x) + (brute ? " multiplies B into A but is not in the colon" : " is in the colon but x*B is not in A");
  }
  return std::nullopt;
}

inline std::optional<std::string> intersection_disagreement(const FracIdealQ& a, const FracIdealQ& b,
                                                            const FracIdealQ& claimed, std::int64_t radius,
                                                            std::int64_t den) {
  auto ga = surd_basis(a), gb = surd_basis(b), gc = surd_basis(claimed);
  for (const auto& x : box(radius, den))
    if ((in_span(ga, x) && in_span(gb, x)) != in_span(gc, x)) return show(x);
  return std::nullopt;
}

/// First product of basis elements of A and B missing from `claimed`.
inline std::optional<std::string> product_missing(const FracIdealQ& a, const FracIdealQ& b,
                                                  const FracIdealQ& claimed) {
  const auto d = a.order().d();
  auto ga = surd_basis(a), gb = surd_basis(b), gc = surd_basis(claimed);
  for (const auto& x : ga)
    for (const auto& y : gb)
      if (!in_span(gc, surd_mul(d, x, y))) return show(surd_mul(d, x, y));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Semigroup ideals as integer sets on [lo, hi]

struct WindowSet {
  std::int64_t lo, hi;
  std::set<std::int64_t> members;
};

inline WindowSet window_of(const SGIdeal& i, std::int64_t lo, std::int64_t hi) {
  WindowSet w{lo, hi, {}};
  for (std::int64_t z = lo; z <= hi; ++z)
    if (i.contains(z)) w.members.insert(z);
  return w;
}

/// Naive residuation: z ∈ (I:J) iff z + y ∈ I for every y ∈ J up to
/// min(J) + reach.
inline std::set<std::int64_t> naive_colon(const SGIdeal& i, const SGIdeal& j, std::int64_t lo, std::int64_t hi,
                                          std::int64_t reach) {
  std::set<std::int64_t> out;
  for (std::int64_t z = lo; z <= hi; ++z) {
    bool ok = true;
    for (std::int64_t y = j.offset(); y <= j.offset() + reach && ok; ++y)
      if (j.contains(y) && !i.contains(z + y)) ok = false;
    if (ok) out.insert(z);
  }
  return out;
}

inline std::set<std::int64_t> naive_sum(const SGIdeal& i, const SGIdeal& j, std::int64_t lo, std::int64_t hi) {
  std::set<std::int64_t> out;
  for (std::int64_t x = i.offset(); x <= hi - j.offset(); ++x) {
    if (!i.contains(x)) continue;
    for (std::int64_t y = j.offset(); x + y <= hi; ++y)
      if (j.contains(y) && x + y >= lo) out.insert(x + y);
  }
  return out;
}

inline std::set<std::int64_t> members_on(const SGIdeal& i, std::int64_t lo, std::int64_t hi) {
  return window_of(i, lo, hi).members;
}

}  // namespace fracideal::oracle
