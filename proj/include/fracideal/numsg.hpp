#pragma once

// Ideals of a numerical semigroup S, the additive analogue of fractional
// ideals: subsets I of Z, bounded below, with I + S ⊆ I.  "Product" is the
// Minkowski sum and (I : J) is the residual {z : z + J ⊆ I}.
//
// An ideal with minimum m contains m + S, hence every integer >= m + c where
// c is the conductor of S.  It is therefore stored exactly as its minimum
// plus the finite set of holes in (m, m + c).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracideal {

class MixedSemigroups : public std::invalid_argument {
 public:
  MixedSemigroups() : std::invalid_argument("ideals belong to different semigroups") {}
};

class NumSemigroup {
 public:
  explicit NumSemigroup(std::vector<std::int64_t> generators) {
    if (generators.empty()) throw std::invalid_argument("a numerical semigroup needs at least one generator");
    std::int64_t g = 0;
    for (auto x : generators) {
      if (x <= 0) throw std::invalid_argument("generators must be positive, got " + std::to_string(x));
      g = std::gcd(g, x);
    }
    if (g != 1) throw std::invalid_argument("generators must have gcd 1, got gcd " + std::to_string(g));
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    // Frobenius number <= (min-1)(max-1) - 1.
    std::int64_t limit = (generators.front() - 1) * (generators.back() - 1) + 1;
    std::vector<bool> in(static_cast<std::size_t>(limit + 1), false);
    in[0] = true;
    for (std::int64_t n = 1; n <= limit; ++n)
      for (auto x : generators)
        if (x <= n && in[static_cast<std::size_t>(n - x)]) {
          in[static_cast<std::size_t>(n)] = true;
          break;
        }
    conductor_ = 0;
    for (std::int64_t n = limit; n >= 0; --n)
      if (!in[static_cast<std::size_t>(n)]) {
        conductor_ = n + 1;
        break;
      }
    member_.assign(in.begin(), in.begin() + conductor_);
    for (std::int64_t n = 0; n < conductor_; ++n)
      if (!member_[static_cast<std::size_t>(n)]) gaps_.push_back(n);

    for (auto x : generators) {
      // x is a minimal generator iff it is not a sum of two nonzero elements.
      bool decomposable = false;
      for (std::int64_t y = 1; y < x && !decomposable; ++y)
        decomposable = contains(y) && contains(x - y);
      if (!decomposable) minimal_generators_.push_back(x);
    }
  }

  bool contains(std::int64_t n) const {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[static_cast<std::size_t>(n)];
  }

  std::int64_t conductor() const { return conductor_; }
  std::int64_t frobenius() const { return conductor_ - 1; }
  std::int64_t multiplicity() const { return minimal_generators_.front(); }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  const std::vector<std::int64_t>& minimal_generators() const { return minimal_generators_; }

  /// Elements of S in [0, bound], increasing.
  std::vector<std::int64_t> elements_up_to(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= bound; ++n)
      if (contains(n)) out.push_back(n);
    return out;
  }

  std::string name() const {
    std::string s = "<";
    for (std::size_t i = 0; i < minimal_generators_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(minimal_generators_[i]);
    }
    return s + ">";
  }

  friend bool operator==(const NumSemigroup& x, const NumSemigroup& y) {
    return x.minimal_generators_ == y.minimal_generators_;
  }

 private:
  std::vector<bool> member_;  // membership for [0, conductor)
  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> minimal_generators_;
  std::int64_t conductor_ = 0;
};

using SemigroupRef = std::shared_ptr<const NumSemigroup>;

inline SemigroupRef make_semigroup(std::vector<std::int64_t> generators) {
  return std::make_shared<const NumSemigroup>(std::move(generators));
}

class SGIdeal {
 public:
  /// Builds an ideal from its minimum and holes; checks S-closure.
  SGIdeal(SemigroupRef s, std::int64_t offset, std::vector<std::int64_t> holes)
      : s_(std::move(s)), offset_(offset), holes_(std::move(holes)) {
    std::sort(holes_.begin(), holes_.end());
    holes_.erase(std::unique(holes_.begin(), holes_.end()), holes_.end());
    const std::int64_t c = s_->conductor();
    for (auto h : holes_)
      if (h <= offset_ || h >= offset_ + c)
        throw std::invalid_argument("hole " + std::to_string(h) + " outside (offset, offset + conductor)");
    for (std::int64_t z = offset_; z < offset_ + c; ++z) {
      if (!contains(z)) continue;
      for (auto g : s_->minimal_generators())
        if (!contains(z + g))
          throw std::invalid_argument("set is not closed under adding semigroup elements: " + std::to_string(z) +
                                      " + " + std::to_string(g) + " missing");
    }
  }

  /// Canonical ideal of all z >= lo with member(z), given that member is
  /// S-closed and true for every z >= full_from.
  static SGIdeal from_predicate(SemigroupRef s, std::int64_t lo, std::int64_t full_from,
                                const std::function<bool(std::int64_t)>& member) {
    std::int64_t m = lo;
    while (m < full_from && !member(m)) ++m;
    std::vector<std::int64_t> holes;
    for (std::int64_t z = m + 1; z < m + s->conductor(); ++z)
      if (z < full_from && !member(z)) holes.push_back(z);
    SGIdeal out(std::move(s));
    out.offset_ = m;
    out.holes_ = std::move(holes);
    return out;
  }

  const SemigroupRef& semigroup() const { return s_; }
  std::int64_t offset() const { return offset_; }
  const std::vector<std::int64_t>& holes() const { return holes_; }

  bool contains(std::int64_t z) const {
    if (z < offset_) return false;
    if (z >= offset_ + s_->conductor()) return true;
    return !std::binary_search(holes_.begin(), holes_.end(), z);
  }

  /// True iff other ⊆ *this.
  bool contains(const SGIdeal& other) const {
    if (other.offset_ < offset_) return false;
    for (std::int64_t z = other.offset_; z < offset_ + s_->conductor(); ++z)
      if (other.contains(z) && !contains(z)) return false;
    return true;
  }

  /// Elements in [offset, offset + span), increasing.
  std::vector<std::int64_t> elements(std::int64_t span) const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = offset_; z < offset_ + span; ++z)
      if (contains(z)) out.push_back(z);
    return out;
  }

  /// Minimal generators: elements not of the form x + s with x in I, s in S \ {0}.
  std::vector<std::int64_t> minimal_generators() const {
    std::vector<std::int64_t> out;
    const std::int64_t c = s_->conductor();
    const std::int64_t top = offset_ + c + s_->multiplicity();
    for (std::int64_t z = offset_; z < top; ++z) {
      if (!contains(z)) continue;
      bool reducible = false;
      for (auto g : s_->minimal_generators())
        if (contains(z - g)) {
          reducible = true;
          break;
        }
      if (!reducible) out.push_back(z);
    }
    return out;
  }

  friend bool operator==(const SGIdeal& x, const SGIdeal& y) {
    return *x.s_ == *y.s_ && x.offset_ == y.offset_ && x.holes_ == y.holes_;
  }

 private:
  explicit SGIdeal(SemigroupRef s) : s_(std::move(s)) {}

  SemigroupRef s_;
  std::int64_t offset_ = 0;
  std::vector<std::int64_t> holes_;
};

inline void require_same_semigroup(const SGIdeal& i, const SGIdeal& j) {
  if (!(*i.semigroup() == *j.semigroup())) throw MixedSemigroups();
}

inline SGIdeal sg_principal(const SemigroupRef& s, std::int64_t n) {
  return SGIdeal::from_predicate(s, n, n + s->conductor(), [&](std::int64_t z) { return s->contains(z - n); });
}

inline SGIdeal sg_whole(const SemigroupRef& s) { return sg_principal(s, 0); }

/// Minkowski sum I + J (the ideal product).
inline SGIdeal sg_sum(const SGIdeal& i, const SGIdeal& j) {
  require_same_semigroup(i, j);
  const std::int64_t m = i.offset() + j.offset();
  return SGIdeal::from_predicate(i.semigroup(), m, m + i.semigroup()->conductor(), [&](std::int64_t z) {
    for (std::int64_t x = i.offset(); x <= z - j.offset(); ++x)
      if (i.contains(x) && j.contains(z - x)) return true;
    return false;
  });
}

/// Residual I - J = {z : z + J ⊆ I}.
inline SGIdeal sg_colon(const SGIdeal& i, const SGIdeal& j) {
  require_same_semigroup(i, j);
  const std::int64_t c = i.semigroup()->conductor();
  const std::int64_t lo = i.offset() - j.offset();
  // For y >= j.offset() + c, z + y >= i.offset() + c lies in I whenever z >= lo.
  return SGIdeal::from_predicate(i.semigroup(), lo, lo + c, [&](std::int64_t z) {
    for (std::int64_t y = j.offset(); y < j.offset() + c; ++y)
      if (j.contains(y) && !i.contains(z + y)) return false;
    return true;
  });
}

inline SGIdeal sg_intersect(const SGIdeal& i, const SGIdeal& j) {
  require_same_semigroup(i, j);
  const std::int64_t lo = std::max(i.offset(), j.offset());
  return SGIdeal::from_predicate(i.semigroup(), lo, lo + i.semigroup()->conductor(),
                                 [&](std::int64_t z) { return i.contains(z) && j.contains(z); });
}

/// I ∪ J, the ideal sum.
inline SGIdeal sg_union(const SGIdeal& i, const SGIdeal& j) {
  require_same_semigroup(i, j);
  const std::int64_t lo = std::min(i.offset(), j.offset());
  return SGIdeal::from_predicate(i.semigroup(), lo, lo + i.semigroup()->conductor(),
                                 [&](std::int64_t z) { return i.contains(z) || j.contains(z); });
}

/// The ideal generated by the given integers: the union of the n + S.
inline SGIdeal sg_generated(const SemigroupRef& s, std::span<const std::int64_t> gens) {
  if (gens.empty()) throw std::invalid_argument("an ideal needs at least one generator");
  const std::int64_t lo = *std::min_element(gens.begin(), gens.end());
  return SGIdeal::from_predicate(s, lo, lo + s->conductor(), [&](std::int64_t z) {
    for (auto g : gens)
      if (s->contains(z - g)) return true;
    return false;
  });
}

/// The two-generated ideal (a + S) ∪ (b + S).
inline SGIdeal sg_union_gen(const SemigroupRef& s, std::int64_t a, std::int64_t b) {
  std::int64_t gens[2] = {a, b};
  return sg_generated(s, gens);
}

inline SGIdeal sg_inverse(const SGIdeal& i) { return sg_colon(sg_whole(i.semigroup()), i); }

inline SGIdeal sg_v(const SGIdeal& i) { return sg_inverse(sg_inverse(i)); }

/// Translate by n: I + n.
inline SGIdeal sg_shift(const SGIdeal& i, std::int64_t n) {
  std::vector<std::int64_t> holes = i.holes();
  for (auto& h : holes) h += n;
  return SGIdeal(i.semigroup(), i.offset() + n, std::move(holes));
}

/// t-closure; every S-ideal is finitely generated, so it equals the v-closure.
/// The guard checks that v-closures of single minimal generators and of the
/// first two stay inside the result.
inline SGIdeal sg_t(const SGIdeal& i) {
  SGIdeal result = sg_v(i);
  auto gens = i.minimal_generators();
  for (std::size_t k = 0; k < gens.size() && k < 2; ++k)
    if (!result.contains(sg_v(sg_principal(i.semigroup(), gens[k]))))
      throw std::logic_error("v-closure of a finitely generated subideal escapes I^t");
  if (gens.size() >= 2 && !result.contains(sg_v(sg_union_gen(i.semigroup(), gens[0], gens[1]))))
    throw std::logic_error("v-closure of a finitely generated subideal escapes I^t");
  return result;
}

/// Rendering such as "{0,2,3,...}" listing elements up to min + conductor.
inline std::string format_sg_ideal(const SGIdeal& i) {
  std::string s = "{";
  const std::int64_t c = i.semigroup()->conductor();
  bool first = true;
  for (std::int64_t z = i.offset(); z <= i.offset() + c; ++z) {
    if (!i.contains(z)) continue;
    if (!first) s += ",";
    s += std::to_string(z);
    first = false;
  }
  return s + ",...}";
}

}  // namespace fracideal
