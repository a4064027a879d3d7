#pragma once

// Fractional ideals of the quadratic order D = Z + f*omega*Z in K = Q(sqrt d).
//
// Elements of K are stored in coordinates with respect to (1, omega), where
// omega = (1 + sqrt d)/2 for d = 1 mod 4 and omega = sqrt d otherwise.  For
// input and output the library uses the order's own generator
//   w = (delta + sqrt(disc))/2,  disc = f^2 * disc(K), delta = disc mod 4,
// so that D = Z[w] = Z + Z*w and elements of D print as "u+v*w" with integer
// u, v.  Internally w = f*omega + shift.

#include "fracideal/bigint.hpp"
#include "fracideal/lattice.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fracideal {

class MixedOrders : public std::invalid_argument {
 public:
  MixedOrders() : std::invalid_argument("ideals belong to different orders") {}
};

class ZeroElement : public std::invalid_argument {
 public:
  ZeroElement() : std::invalid_argument("zero element where a nonzero one is required") {}
};

class NotAnIdeal : public std::invalid_argument {
 public:
  explicit NotAnIdeal(const std::string& what) : std::invalid_argument(what) {}
};

inline bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  for (std::uint64_t p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// The order of conductor f in Q(sqrt d).
class QuadOrder {
 public:
  QuadOrder(std::int64_t d, std::int64_t f) : d_(d), f_(f) {
    if (d == 1 || !is_squarefree(d))
      throw std::invalid_argument("d must be a squarefree integer different from 0 and 1, got " +
                                  std::to_string(d));
    if (f < 1) throw std::invalid_argument("conductor f must be >= 1, got " + std::to_string(f));
    mod4_ = ((d % 4) + 4) % 4 == 1;
    // omega^2 = trace*omega + constant
    trace_ = mod4_ ? 1 : 0;
    constant_ = mod4_ ? (d - 1) / 4 : d;
    // w = f*omega + shift
    if (mod4_) {
      std::int64_t delta = (f % 2 == 0) ? 0 : 1;
      shift_ = (delta - f) / 2;
    } else {
      shift_ = 0;
    }
  }

  std::int64_t d() const { return d_; }
  std::int64_t f() const { return f_; }
  bool omega_is_half() const { return mod4_; }
  std::int64_t omega_trace() const { return trace_; }
  std::int64_t omega_constant() const { return constant_; }
  std::int64_t generator_shift() const { return shift_; }

  /// Discriminant of the order, f^2 * disc(K).
  std::int64_t discriminant() const { return f_ * f_ * (mod4_ ? d_ : 4 * d_); }

  friend bool operator==(const QuadOrder& x, const QuadOrder& y) { return x.d_ == y.d_ && x.f_ == y.f_; }

  std::string name() const { return "Q(sqrt(" + std::to_string(d_) + ")) order of conductor " + std::to_string(f_); }

 private:
  std::int64_t d_, f_;
  bool mod4_ = false;
  std::int64_t trace_ = 0, constant_ = 0, shift_ = 0;
};

/// An element u + v*omega of K.
struct QElem {
  Rat u, v;
  bool is_zero() const { return u == 0 && v == 0; }
  Vec2 coords() const { return {u, v}; }
  friend bool operator==(const QElem&, const QElem&) = default;
};

inline QElem qmul(const QuadOrder& o, const QElem& x, const QElem& y) {
  Rat t(o.omega_trace()), m(o.omega_constant());
  Rat be = x.v * y.v;
  return {x.u * y.u + be * m, x.u * y.v + x.v * y.u + be * t};
}

inline Rat qnorm(const QuadOrder& o, const QElem& x) {
  return x.u * x.u + Rat(o.omega_trace()) * x.u * x.v - Rat(o.omega_constant()) * x.v * x.v;
}

inline QElem qconj(const QuadOrder& o, const QElem& x) { return {x.u + x.v * Rat(o.omega_trace()), -x.v}; }

inline QElem qinv(const QuadOrder& o, const QElem& x) {
  if (x.is_zero()) throw ZeroElement();
  Rat n = qnorm(o, x);
  QElem c = qconj(o, x);
  return {c.u / n, c.v / n};
}

/// Matrix of multiplication by x on (1, omega)-coordinates (row-vector convention).
inline Mat2 mul_matrix(const QuadOrder& o, const QElem& x) {
  Rat t(o.omega_trace()), m(o.omega_constant());
  return Mat2{Vec2{x.u, x.v}, Vec2{x.v * m, x.u + x.v * t}};
}

/// Element u + v*w written in the order's own generator w.
inline QElem from_order_coords(const QuadOrder& o, const Rat& u, const Rat& v) {
  return {u + v * Rat(o.generator_shift()), v * Rat(o.f())};
}

/// Inverse of from_order_coords: (u, v) with x = u + v*w.
inline std::pair<Rat, Rat> to_order_coords(const QuadOrder& o, const QElem& x) {
  Rat v = x.v / Rat(o.f());
  return {x.u - v * Rat(o.generator_shift()), v};
}

/// Renders x as "u+v*w" in the order's generator, e.g. "1+w", "-1/2+3/2*w", "w", "2".
inline std::string format_element(const QuadOrder& o, const QElem& x) {
  auto [u, v] = to_order_coords(o, x);
  if (v == 0) return to_string(u);
  std::string vpart;
  if (v == 1)
    vpart = "w";
  else if (v == -1)
    vpart = "-w";
  else
    vpart = to_string(v) + "*w";
  if (u == 0) return vpart;
  std::string out = to_string(u);
  if (vpart[0] != '-') out += "+";
  return out + vpart;
}

class FracIdealQ {
 public:
  /// Wraps a lattice after checking it is a D-module.
  FracIdealQ(QuadOrder order, Lattice2 module) : order_(order), module_(std::move(module)) {
    Mat2 w = mul_matrix(order_, QElem{Rat(order_.generator_shift()), Rat(order_.f())});
    for (const auto& g : module_.generators())
      if (!module_.contains(row_times(g, w)))
        throw NotAnIdeal("lattice " + module_.debug_string() + " is not closed under multiplication by w");
  }

  const QuadOrder& order() const { return order_; }
  const Lattice2& module() const { return module_; }

  /// Z-basis of the ideal.
  std::array<QElem, 2> basis() const {
    auto g = module_.generators();
    return {QElem{g[0][0], g[0][1]}, QElem{g[1][0], g[1][1]}};
  }

  bool contains(const QElem& x) const { return module_.contains(x.coords()); }
  bool contains(const FracIdealQ& other) const { return module_.contains(other.module_); }

  friend bool operator==(const FracIdealQ& x, const FracIdealQ& y) {
    return x.order_ == y.order_ && x.module_ == y.module_;
  }

 private:
  struct Unchecked {};
  FracIdealQ(QuadOrder order, Lattice2 module, Unchecked) : order_(order), module_(std::move(module)) {}
  friend FracIdealQ make_ideal_unchecked(const QuadOrder&, Lattice2);

  QuadOrder order_;
  Lattice2 module_;
};

// Results of ideal operations are D-modules by construction; skip the closure check.
inline FracIdealQ make_ideal_unchecked(const QuadOrder& o, Lattice2 l) {
  return FracIdealQ(o, std::move(l), FracIdealQ::Unchecked{});
}

inline void require_same_order(const FracIdealQ& a, const FracIdealQ& b) {
  if (!(a.order() == b.order())) throw MixedOrders();
}

/// The order D itself.
inline FracIdealQ unit_ideal(const QuadOrder& o) {
  return make_ideal_unchecked(o, Lattice2::hnf({IVec2{1, 0}, IVec2{0, o.f()}}));
}

/// The maximal order O_K as a fractional ideal of D (an over-ring, not a D-ideal of D only).
inline FracIdealQ maximal_order_module(const QuadOrder& o) { return make_ideal_unchecked(o, Lattice2::standard()); }

/// The conductor f*O_K, the largest O_K-ideal contained in D.
inline FracIdealQ conductor_ideal(const QuadOrder& o) {
  return make_ideal_unchecked(o, Lattice2::hnf({IVec2{o.f(), 0}, IVec2{0, o.f()}}));
}

/// D-ideal generated by the given elements: the Z-span of g and g*w for each g.
inline FracIdealQ generated(const QuadOrder& o, std::span<const QElem> gens) {
  Mat2 w = mul_matrix(o, QElem{Rat(o.generator_shift()), Rat(o.f())});
  std::vector<Vec2> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    rows.push_back(g.coords());
    rows.push_back(row_times(g.coords(), w));
  }
  if (rows.empty()) throw ZeroElement();
  return make_ideal_unchecked(o, Lattice2::from_generators(std::span<const Vec2>(rows)));
}

inline FracIdealQ generated(const QuadOrder& o, std::initializer_list<QElem> gens) {
  return generated(o, std::span<const QElem>(gens.begin(), gens.size()));
}

inline FracIdealQ principal(const QuadOrder& o, const QElem& x) {
  if (x.is_zero()) throw ZeroElement();
  return make_ideal_unchecked(o, unit_ideal(o).module().transformed(mul_matrix(o, x)));
}

inline FracIdealQ scale_ideal(const FracIdealQ& a, const QElem& x) {
  if (x.is_zero()) throw ZeroElement();
  return make_ideal_unchecked(a.order(), a.module().transformed(mul_matrix(a.order(), x)));
}

inline FracIdealQ ideal_add(const FracIdealQ& a, const FracIdealQ& b) {
  require_same_order(a, b);
  return make_ideal_unchecked(a.order(), lattice_sum(a.module(), b.module()));
}

inline FracIdealQ ideal_intersect(const FracIdealQ& a, const FracIdealQ& b) {
  require_same_order(a, b);
  return make_ideal_unchecked(a.order(), lattice_intersect(a.module(), b.module()));
}

inline FracIdealQ ideal_mul(const FracIdealQ& a, const FracIdealQ& b) {
  require_same_order(a, b);
  const QuadOrder& o = a.order();
  auto ga = a.basis();
  auto gb = b.basis();
  std::array<Vec2, 4> prods;
  std::size_t k = 0;
  for (const auto& x : ga)
    for (const auto& y : gb) prods[k++] = qmul(o, x, y).coords();
  return make_ideal_unchecked(o, Lattice2::from_generators(std::span<const Vec2>(prods)));
}

/// (A : B) = {x in K : xB ⊆ A}.  For a Z-basis (b1, b2) of B this is b1^-1 A ∩ b2^-1 A.
inline FracIdealQ colon(const FracIdealQ& a, const FracIdealQ& b) {
  require_same_order(a, b);
  const QuadOrder& o = a.order();
  auto gb = b.basis();
  Lattice2 first = a.module().transformed(mul_matrix(o, qinv(o, gb[0])));
  Lattice2 second = a.module().transformed(mul_matrix(o, qinv(o, gb[1])));
  return make_ideal_unchecked(o, lattice_intersect(first, second));
}

inline FracIdealQ inverse(const FracIdealQ& a) { return colon(unit_ideal(a.order()), a); }

inline FracIdealQ v_closure(const FracIdealQ& a) { return inverse(inverse(a)); }

class ClosureGuardFailure : public std::logic_error {
 public:
  explicit ClosureGuardFailure(const std::string& what) : std::logic_error(what) {}
};

/// t-closure.  D is Noetherian, so the union of F^v over finitely generated
/// F ⊆ A is attained at F = A and A^t = A^v.  The guard checks that the
/// v-closures of the one- and two-element subideals built from A's Z-basis
/// stay inside the result.
inline FracIdealQ t_closure(const FracIdealQ& a) {
  FracIdealQ result = v_closure(a);
  const QuadOrder& o = a.order();
  auto g = a.basis();
  for (const auto& f : {principal(o, g[0]), principal(o, g[1]), generated(o, {g[0], g[1]})}) {
    if (!result.contains(v_closure(f)))
      throw ClosureGuardFailure("v-closure of a finitely generated subideal escapes A^t");
  }
  return result;
}

inline bool is_maximal_order(const QuadOrder& o) { return o.f() == 1; }

/// Minimal polynomial x^2 - trace*x + norm of the order generator w.
inline std::pair<BigInt, BigInt> generator_min_poly(const QuadOrder& o) {
  QElem w{Rat(o.generator_shift()), Rat(o.f())};
  // trace(u + v*omega) = 2u + v*trace(omega)
  Rat tr = Rat(2) * w.u + w.v * Rat(o.omega_trace());
  return {numerator_of(tr), numerator_of(qnorm(o, w))};
}

struct PrimeAbove {
  FracIdealQ ideal;
  std::string description;  // e.g. "(5, w-2)"
  bool essential;           // D_P is a valuation domain
  bool invertible;          // P * P^-1 = D, an independent check of the same fact
};

/// Primes of D above the rational prime p, each flagged essential iff it does
/// not contain the conductor f*O_K.  D = Z[w], so the primes above p are
/// (p, g(w)) for the irreducible factors g of the minimal polynomial mod p.
inline std::vector<PrimeAbove> essential_at(const QuadOrder& o, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not a prime");
  auto [tr, nm] = generator_min_poly(o);
  BigInt bp(p);
  std::vector<std::int64_t> roots;
  for (std::int64_t r = 0; r < p; ++r) {
    BigInt val = BigInt(r) * r - tr * r + nm;
    if (mod_floor(val, bp) == 0) roots.push_back(r);
  }
  std::vector<std::pair<FracIdealQ, std::string>> primes;
  QElem pe{Rat(p), Rat(0)};
  if (roots.empty()) {
    primes.emplace_back(principal(o, pe), "(" + std::to_string(p) + ")");
  } else {
    for (std::int64_t r : roots) {
      QElem g = from_order_coords(o, Rat(-r), Rat(1));
      primes.emplace_back(generated(o, {pe, g}), "(" + std::to_string(p) + ", " + format_element(o, g) + ")");
    }
  }
  FracIdealQ cond = conductor_ideal(o);
  FracIdealQ one = unit_ideal(o);
  std::vector<PrimeAbove> out;
  for (auto& [ideal, desc] : primes) {
    bool essential = !ideal.contains(cond);
    bool invertible = ideal_mul(ideal, inverse(ideal)) == one;
    out.push_back(PrimeAbove{ideal, desc, essential, invertible});
  }
  return out;
}

/// Z-basis rendering, e.g. "<2, 1+w>".
inline std::string format_ideal(const FracIdealQ& a) {
  auto g = a.basis();
  return "<" + format_element(a.order(), g[0]) + ", " + format_element(a.order(), g[1]) + ">";
}

}  // namespace fracideal
