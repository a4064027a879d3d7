#pragma once

// Backend adapters.  The classifiers in classify.hpp are written against this
// static interface so that the same predicates run over quadratic orders and
// over numerical semigroups.
//
//   Domain, Ideal, Element
//   one, principal, generated, add, mul, intersect, colon, inverse, v, t
//   el_mul, el_inv, contains
//   elements(dom, bound)           nonzero elements of D by increasing height
//   extra_pairs(dom, bound)        degenerate pairs outside the height box
//   pairs_complete(dom, bound)     the pair sweep covers every pair up to symmetry
//   canonical_ideals(dom, bound)   ideals swept by CIC / Mori / t-invertibility
//   ideal_elements(I, height)      elements of I by increasing height
//   ideal_basis(I)                 a generating set of I
//   oracle_maximal(dom)            theory oracle when one exists
//   format_* / *_expr              renderings; *_expr re-parse as expressions

#include "fracideal/numsg.hpp"
#include "fracideal/quadratic.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fracideal {

/// Seeded generator with a platform-independent bounded draw.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Sort key for small integers: 0, 1, -1, 2, -2, ...
inline std::int64_t coefficient_rank(std::int64_t x) { return x > 0 ? 2 * x - 1 : -2 * x; }

template <class Ideal>
struct NamedIdeal {
  Ideal ideal;
  std::string expr;  // generator-list expression evaluating to ideal
};

template <class Ideal>
struct IdealSweep {
  std::vector<NamedIdeal<Ideal>> ideals;
  bool complete = false;
};

struct QuadraticBackend {
  using Domain = QuadOrder;
  using Ideal = FracIdealQ;
  using Element = QElem;
  static constexpr const char* kind = "quadratic";
  static constexpr bool has_essential = true;

  static Ideal one(const Domain& o) { return unit_ideal(o); }
  static Ideal principal(const Domain& o, const Element& x) { return fracideal::principal(o, x); }
  static Ideal generated(const Domain& o, std::span<const Element> g) { return fracideal::generated(o, g); }
  static Ideal add(const Ideal& a, const Ideal& b) { return ideal_add(a, b); }
  static Ideal mul(const Ideal& a, const Ideal& b) { return ideal_mul(a, b); }
  static Ideal intersect(const Ideal& a, const Ideal& b) { return ideal_intersect(a, b); }
  static Ideal colon(const Ideal& a, const Ideal& b) { return fracideal::colon(a, b); }
  static Ideal inverse(const Ideal& a) { return fracideal::inverse(a); }
  static Ideal v(const Ideal& a) { return v_closure(a); }
  static Ideal t(const Ideal& a) { return t_closure(a); }
  static const Domain& domain_of(const Ideal& a) { return a.order(); }

  static Element el_mul(const Domain& o, const Element& x, const Element& y) { return qmul(o, x, y); }
  static Element el_inv(const Domain& o, const Element& x) { return qinv(o, x); }
  static bool contains(const Ideal& a, const Element& x) { return a.contains(x); }

  static Element from_coords(const Domain& o, std::int64_t u, std::int64_t v) { return from_order_coords(o, u, v); }

  static std::int64_t height(const Domain& o, const Element& x) {
    auto [u, v] = to_order_coords(o, x);
    auto mag = [](const Rat& r) { return abs_of(r.num()).to_int64(); };
    return std::max(mag(u), mag(v));
  }

  /// Nonzero u + v*w with |u|, |v| <= bound, ordered by (max|coef|, rank(u), rank(v)).
  static std::vector<Element> elements(const Domain& o, std::int64_t bound) {
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    for (std::int64_t u = -bound; u <= bound; ++u)
      for (std::int64_t v = -bound; v <= bound; ++v)
        if (u != 0 || v != 0) coords.emplace_back(u, v);
    std::sort(coords.begin(), coords.end(), [](auto& p, auto& q) {
      auto key = [](auto& c) {
        return std::tuple(std::max(std::llabs(c.first), std::llabs(c.second)), coefficient_rank(c.first),
                          coefficient_rank(c.second));
      };
      return key(p) < key(q);
    });
    std::vector<Element> out;
    out.reserve(coords.size());
    for (auto [u, v] : coords) out.push_back(from_order_coords(o, u, v));
    return out;
  }

  /// The conductor pair (f, f*omega) when it lies outside the height box.
  static std::vector<std::pair<Element, Element>> extra_pairs(const Domain& o, std::int64_t bound) {
    if (o.f() == 1) return {};
    Element a{Rat(o.f()), Rat(0)};
    Element b{Rat(0), Rat(o.f())};
    if (std::max(height(o, a), height(o, b)) <= bound) return {};
    return {{a, b}};
  }

  static bool pairs_complete(const Domain&, std::int64_t) { return false; }

  /// Integral ideals with Hermite basis (a + b*w, c*w), 1 <= a, c <= bound,
  /// 0 <= b < c, content 1; plus the conductor if it lies outside the box.
  static IdealSweep<Ideal> canonical_ideals(const Domain& o, std::int64_t bound) {
    IdealSweep<Ideal> out;
    for (std::int64_t h = 1; h <= bound; ++h)
      for (std::int64_t a = 1; a <= h; ++a)
        for (std::int64_t c = 1; c <= h; ++c) {
          if (std::max(a, c) != h) continue;
          for (std::int64_t b = 0; b < c; ++b) {
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            Element g1 = from_order_coords(o, a, b);
            Element g2 = from_order_coords(o, 0, c);
            std::array<Vec2, 2> rows{g1.coords(), g2.coords()};
            try {
              Ideal I(o, Lattice2::from_generators(std::span<const Vec2>(rows)));
              out.ideals.push_back({std::move(I), "(" + format_element(o, g1) + ", " + format_element(o, g2) + ")"});
            } catch (const NotAnIdeal&) {
            }
          }
        }
    if (o.f() > bound) {
      Ideal cond = conductor_ideal(o);
      out.ideals.push_back({cond, ideal_expr(cond)});
    }
    return out;
  }

  /// m*g1 + n*g2 for the Z-basis (g1, g2), ordered by (max(|m|,|n|), rank(m), rank(n)).
  static std::vector<Element> ideal_elements(const Ideal& a, std::int64_t h) {
    auto g = a.basis();
    std::vector<std::pair<std::int64_t, std::int64_t>> coords;
    for (std::int64_t m = -h; m <= h; ++m)
      for (std::int64_t n = -h; n <= h; ++n)
        if (m != 0 || n != 0) coords.emplace_back(m, n);
    std::sort(coords.begin(), coords.end(), [](auto& p, auto& q) {
      auto key = [](auto& c) {
        return std::tuple(std::max(std::llabs(c.first), std::llabs(c.second)), coefficient_rank(c.first),
                          coefficient_rank(c.second));
      };
      return key(p) < key(q);
    });
    std::vector<Element> out;
    for (auto [m, n] : coords)
      out.push_back(Element{Rat(m) * g[0].u + Rat(n) * g[1].u, Rat(m) * g[0].v + Rat(n) * g[1].v});
    return out;
  }

  static std::vector<Element> ideal_basis(const Ideal& a) {
    auto g = a.basis();
    return {g[0], g[1]};
  }

  static std::optional<bool> oracle_maximal(const Domain& o) { return is_maximal_order(o); }

  static Ideal random_ideal(const Domain& o, SeededRng& rng, std::int64_t height_cap) {
    auto draw = [&](std::int64_t cap) {
      for (;;) {
        std::int64_t u = rng.uniform(-cap, cap), v = rng.uniform(-cap, cap);
        if (u != 0 || v != 0) return from_order_coords(o, u, v);
      }
    };
    Element a = draw(height_cap), b = draw(height_cap), c = draw(3);
    std::array<Element, 2> gens{a, b};
    return scale_ideal(generated(o, gens), qinv(o, c));
  }

  static std::string format_element(const Domain& o, const Element& x) { return fracideal::format_element(o, x); }
  static std::string element_expr(const Domain& o, const Element& x) { return format_element(o, x); }
  static std::string format_ideal(const Ideal& a) { return fracideal::format_ideal(a); }
  static std::string ideal_expr(const Ideal& a) {
    auto g = a.basis();
    return "(" + format_element(a.order(), g[0]) + ", " + format_element(a.order(), g[1]) + ")";
  }
  static std::string describe(const Domain& o) {
    const std::int64_t disc = o.discriminant();
    std::string w = (disc % 4 == 0) ? "sqrt(" + std::to_string(disc / 4) + ")"
                                    : "(1+sqrt(" + std::to_string(disc) + "))/2";
    return "Z[w] in Q(sqrt(" + std::to_string(o.d()) + ")), conductor " + std::to_string(o.f()) +
           ", discriminant " + std::to_string(disc) + ", w = " + w;
  }
  static std::string unit_name() { return "D"; }
};

struct SemigroupBackend {
  using Domain = SemigroupRef;
  using Ideal = SGIdeal;
  using Element = std::int64_t;
  static constexpr const char* kind = "numerical-semigroup";
  static constexpr bool has_essential = false;

  static Ideal one(const Domain& s) { return sg_whole(s); }
  static Ideal principal(const Domain& s, Element x) { return sg_principal(s, x); }
  static Ideal generated(const Domain& s, std::span<const Element> g) { return sg_generated(s, g); }
  static Ideal add(const Ideal& a, const Ideal& b) { return sg_union(a, b); }
  static Ideal mul(const Ideal& a, const Ideal& b) { return sg_sum(a, b); }
  static Ideal intersect(const Ideal& a, const Ideal& b) { return sg_intersect(a, b); }
  static Ideal colon(const Ideal& a, const Ideal& b) { return sg_colon(a, b); }
  static Ideal inverse(const Ideal& a) { return sg_inverse(a); }
  static Ideal v(const Ideal& a) { return sg_v(a); }
  static Ideal t(const Ideal& a) { return sg_t(a); }
  static const Domain& domain_of(const Ideal& a) { return a.semigroup(); }

  static Element el_mul(const Domain&, Element x, Element y) { return x + y; }
  static Element el_inv(const Domain&, Element x) { return -x; }
  static bool contains(const Ideal& a, Element x) { return a.contains(x); }

  static std::int64_t height(const Domain&, Element x) { return x < 0 ? -x : x; }

  /// Elements of S up to bound.  S plays the role of D \ {0}, so 0 is included.
  static std::vector<Element> elements(const Domain& s, std::int64_t bound) { return s->elements_up_to(bound); }

  static std::vector<std::pair<Element, Element>> extra_pairs(const Domain&, std::int64_t) { return {}; }

  /// Pairs (a, b) and (a + n, b + n) give translated ideals with the same
  /// colon rings, and b - a in S gives a principal ideal, so every case is
  /// realised by (c, c + k) with 0 <= k < c.  Heights up to 2c - 1 suffice.
  static bool pairs_complete(const Domain& s, std::int64_t bound) {
    return bound >= 2 * s->conductor() - 1;
  }

  /// All ideals with minimum 0 (every ideal is a translate of one), as long as
  /// there are at most `cap` of them.
  static IdealSweep<Ideal> canonical_ideals(const Domain& s, std::int64_t /*bound*/, std::size_t cap = 1u << 14) {
    IdealSweep<Ideal> out;
    const auto& gaps = s->gaps();
    std::vector<bool> chosen(gaps.size(), false);
    std::vector<std::vector<std::int64_t>> hole_sets;
    bool truncated = false;
    // Decide gaps from the largest down so closure can be checked locally.
    auto in_ideal = [&](std::int64_t z) {
      if (s->contains(z)) return true;
      auto it = std::lower_bound(gaps.begin(), gaps.end(), z);
      return it != gaps.end() && *it == z && chosen[static_cast<std::size_t>(it - gaps.begin())];
    };
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      if (truncated) return;
      if (k == 0) {
        if (hole_sets.size() >= cap) {
          truncated = true;
          return;
        }
        std::vector<std::int64_t> holes;
        for (std::size_t i = 0; i < gaps.size(); ++i)
          if (!chosen[i] && gaps[i] > 0) holes.push_back(gaps[i]);
        hole_sets.push_back(std::move(holes));
        return;
      }
      std::size_t i = k - 1;
      chosen[i] = false;
      self(self, k - 1);
      bool closed = true;
      for (auto g : s->minimal_generators())
        if (!in_ideal(gaps[i] + g)) closed = false;
      if (closed) {
        chosen[i] = true;
        self(self, k - 1);
        chosen[i] = false;
      }
    };
    dfs(dfs, gaps.size());
    std::sort(hole_sets.begin(), hole_sets.end(), [](auto& x, auto& y) {
      return std::pair(x.size(), x) > std::pair(y.size(), y);
    });
    for (auto& holes : hole_sets) {
      // Offset 0 requires 0 in the set; gaps never contain 0, and S contains it.
      SGIdeal I(s, 0, holes);
      out.ideals.push_back({I, ideal_expr(I)});
    }
    out.complete = !truncated;
    return out;
  }

  static std::vector<Element> ideal_elements(const Ideal& a, std::int64_t h) { return a.elements(h + 1); }

  static std::vector<Element> ideal_basis(const Ideal& a) { return a.minimal_generators(); }

  static std::optional<bool> oracle_maximal(const Domain&) { return std::nullopt; }

  static Ideal random_ideal(const Domain& s, SeededRng& rng, std::int64_t) {
    const std::int64_t c = std::max<std::int64_t>(s->conductor(), 1);
    std::int64_t n = rng.uniform(1, 3);
    std::vector<Element> gens;
    for (std::int64_t i = 0; i < n; ++i) gens.push_back(rng.uniform(-c, 2 * c));
    return sg_generated(s, gens);
  }

  static std::string format_element(const Domain&, Element x) { return std::to_string(x); }
  static std::string element_expr(const Domain&, Element x) { return std::to_string(x); }
  static std::string format_ideal(const Ideal& a) { return format_sg_ideal(a); }
  static std::string ideal_expr(const Ideal& a) {
    auto g = a.minimal_generators();
    std::string s = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(g[i]);
    }
    return s + ")";
  }
  static std::string describe(const Domain& s) {
    return "S = " + s->name() + ", conductor " + std::to_string(s->conductor());
  }
  static std::string unit_name() { return "S"; }
};

}  // namespace fracideal
