#pragma once

// Rank-2 Z-modules inside Q^2 kept in a canonical Hermite form.
//
// A Lattice2 represents scale * span_Z{(a, b), (0, c)} where
//   a > 0, c > 0, 0 <= b < c, gcd(a, b, c) = 1, scale > 0.
// Every full-rank finitely generated submodule of Q^2 has exactly one such
// representative, so module equality is field-wise equality.

#include "fracideal/bigint.hpp"

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracideal {

using IVec2 = std::array<BigInt, 2>;
using Vec2 = std::array<Rat, 2>;

// 2x2 rational matrix acting on row vectors: v -> v * m.
using Mat2 = std::array<Vec2, 2>;

class RankDeficient : public std::domain_error {
 public:
  RankDeficient() : std::domain_error("generators span a module of rank < 2") {}
};

inline Vec2 row_times(const Vec2& v, const Mat2& m) {
  return {v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]};
}

class Lattice2 {
 public:
  /// Canonical form of the Z-span of integer rows.
  static Lattice2 hnf(std::span<const IVec2> rows) {
    std::vector<IVec2> work(rows.begin(), rows.end());
    return from_integer_rows(std::move(work), Rat(1));
  }

  static Lattice2 hnf(std::initializer_list<IVec2> rows) {
    return hnf(std::span<const IVec2>(rows.begin(), rows.size()));
  }

  /// Canonical form of the Z-span of rational generators.
  static Lattice2 from_generators(std::span<const Vec2> gens) {
    BigInt den = 1;
    for (const auto& g : gens)
      for (const auto& x : g) den = lcm_of(den, denominator_of(x));
    std::vector<IVec2> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
      IVec2 r;
      for (int i = 0; i < 2; ++i) r[i] = numerator_of(g[i]) * (den / denominator_of(g[i]));
      rows.push_back(std::move(r));
    }
    return from_integer_rows(std::move(rows), Rat(BigInt(1), den));
  }

  static Lattice2 from_generators(std::initializer_list<Vec2> gens) {
    return from_generators(std::span<const Vec2>(gens.begin(), gens.size()));
  }

  static Lattice2 standard() { return hnf({IVec2{1, 0}, IVec2{0, 1}}); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const Rat& scale() const { return scale_; }

  /// The integer Hermite basis [[a, b], [0, c]].
  std::array<IVec2, 2> basis() const { return {IVec2{a_, b_}, IVec2{0, c_}}; }

  /// Z-basis of the module itself (basis rows times scale).
  std::array<Vec2, 2> generators() const {
    return {Vec2{scale_ * Rat(a_), scale_ * Rat(b_)}, Vec2{Rat(0), scale_ * Rat(c_)}};
  }

  /// Covolume relative to Z^2.
  Rat covolume() const { return scale_ * scale_ * Rat(a_ * c_); }

  bool contains(const Vec2& v) const {
    Rat k1 = v[0] / (scale_ * Rat(a_));
    if (!is_integral(k1)) return false;
    Rat rest = v[1] / scale_ - k1 * Rat(b_);
    return is_integral(rest / Rat(c_));
  }

  /// True iff other is a submodule of *this.
  bool contains(const Lattice2& other) const {
    for (const auto& g : other.generators())
      if (!contains(g)) return false;
    return true;
  }

  Lattice2 scaled(const Rat& s) const {
    if (s == 0) throw RankDeficient();
    Lattice2 r = *this;
    if (s > 0) {
      r.scale_ *= s;
      return r;
    }
    // -L = L as a module.
    r.scale_ *= -s;
    return r;
  }

  /// Image under an invertible linear map.
  Lattice2 transformed(const Mat2& m) const {
    auto g = generators();
    std::array<Vec2, 2> img{row_times(g[0], m), row_times(g[1], m)};
    return from_generators(std::span<const Vec2>(img));
  }

  /// Dual module {y : <y, x> in Z for all x in *this}.
  Lattice2 dual() const {
    // Basis matrix B = s[[a,b],[0,c]]; dual basis rows are the columns of B^-1.
    Rat inv_s = Rat(1) / scale_;
    Rat ia = inv_s / Rat(a_);
    Rat ic = inv_s / Rat(c_);
    Rat off = -inv_s * Rat(b_) / Rat(a_ * c_);
    std::array<Vec2, 2> rows{Vec2{ia, Rat(0)}, Vec2{off, ic}};
    return from_generators(std::span<const Vec2>(rows));
  }

  friend bool operator==(const Lattice2&, const Lattice2&) = default;

  std::string debug_string() const {
    return "[[" + to_string(a_) + ", " + to_string(b_) + "], [0, " + to_string(c_) + "]] * " +
           to_string(scale_);
  }

 private:
  Lattice2() = default;

  static Lattice2 from_integer_rows(std::vector<IVec2> rows, Rat scale) {
    // Eliminate the first column by repeated Euclidean reduction.
    std::size_t pivot = rows.size();
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][0] == 0) continue;
        if (best == rows.size() || abs_of(rows[i][0]) < abs_of(rows[best][0])) best = i;
      }
      if (best == rows.size()) break;
      bool reduced_any = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == best || rows[i][0] == 0) continue;
        BigInt q = rows[i][0] / rows[best][0];
        rows[i][0] -= q * rows[best][0];
        rows[i][1] -= q * rows[best][1];
        reduced_any = true;
      }
      if (!reduced_any) {
        pivot = best;
        break;
      }
    }
    if (pivot == rows.size()) throw RankDeficient();
    BigInt a = rows[pivot][0];
    BigInt b = rows[pivot][1];
    if (a < 0) {
      a = -a;
      b = -b;
    }
    BigInt c = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != pivot) c = gcd_of(c, rows[i][1]);
    if (c == 0) throw RankDeficient();
    c = abs_of(c);
    b = mod_floor(b, c);

    BigInt content = gcd_of(gcd_of(a, b), c);
    Lattice2 out;
    out.a_ = a / content;
    out.b_ = b / content;
    out.c_ = c / content;
    out.scale_ = scale * Rat(content);
    return out;
  }

  BigInt a_, b_, c_;
  Rat scale_;
};

inline Lattice2 lattice_sum(const Lattice2& x, const Lattice2& y) {
  auto gx = x.generators();
  auto gy = y.generators();
  std::array<Vec2, 4> all{gx[0], gx[1], gy[0], gy[1]};
  return Lattice2::from_generators(std::span<const Vec2>(all));
}

/// x ∩ y, computed as the dual of the sum of the duals.
inline Lattice2 lattice_intersect(const Lattice2& x, const Lattice2& y) {
  if (x == y) return x;
  return lattice_sum(x.dual(), y.dual()).dual();
}

inline bool lattice_member(const Vec2& v, const Lattice2& l) { return l.contains(v); }

}  // namespace fracideal
