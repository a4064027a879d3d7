#pragma once

// Star-operation-free criteria as executable predicates and witness searches.
//
// Everything here is generic over a backend B (see backends.hpp).  The
// per-ideal tests are exact; the per-domain tests are sweeps that return a
// three-valued Verdict, with Holds reserved for sweeps that are complete up
// to symmetry or are backed by a theory oracle.

#include "fracideal/backends.hpp"
#include "fracideal/verdict.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace fracideal {

struct ClassifyOptions {
  std::int64_t bound = 8;           // pair / ideal height for sweeps
  std::int64_t recheck_bound = 20;  // height cap for element searches inside witnesses
  std::size_t mori_max_elements = 4;
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Per-ideal predicates

/// (A^-1 : A^-1).
template <class B>
typename B::Ideal inverse_colon_ring(const typename B::Ideal& a) {
  auto inv = B::inverse(a);
  return B::colon(inv, inv);
}

/// A is v-invertible iff (A^-1 : A^-1) = D.
template <class B>
bool is_v_invertible(const typename B::Ideal& a) {
  return inverse_colon_ring<B>(a) == B::one(B::domain_of(a));
}

/// Direct form of the definition: (A A^-1)^v = D.
template <class B>
bool v_invertible_direct(const typename B::Ideal& a) {
  return B::v(B::mul(a, B::inverse(a))) == B::one(B::domain_of(a));
}

/// F^-1 is a v-ideal of finite type: here (x1, x2, ...)^v = F^-1 for a
/// generating set of F^-1.
template <class B>
bool inverse_has_finite_type(const typename B::Ideal& f) {
  auto inv = B::inverse(f);
  auto gens = B::ideal_basis(inv);
  return B::v(B::generated(B::domain_of(f), gens)) == inv;
}

/// t-invertible iff v-invertible with F^-1 of finite type.
template <class B>
bool is_t_invertible(const typename B::Ideal& f) {
  return is_v_invertible<B>(f) && inverse_has_finite_type<B>(f);
}

// ---------------------------------------------------------------------------
// Per-pair v-domain conditions

template <class B>
struct PairConditions {
  bool inverse_ring = false;       // ((a,b)^-1 : (a,b)^-1) = D, with (a,b)^-1 = (D : (a,b))
  bool closure_ring = false;       // ((a,b)^v : (a,b)^v) = D
  bool two_generated_ring = false; // same, with (a,b)^-1 computed as (a^-1) ∩ (b^-1)
  bool intersection_ring = false;  // ((a)∩(b) : (a)∩(b)) = D
  typename B::Ideal ring;          // the common colon ring
  bool holds() const { return intersection_ring; }
};

/// Evaluates the four per-pair conditions and checks that they agree.  They
/// are the same ring: (F^-1:F^-1) = (F^v:F^v) for any F, and
/// (a,b)^-1 = (a^-1) ∩ (b^-1) = a^-1 b^-1 ((a)∩(b)).
template <class B>
PairConditions<B> vdomain_pair_check(const typename B::Domain& dom, const typename B::Element& a,
                                     const typename B::Element& b) {
  using Ideal = typename B::Ideal;
  const Ideal one = B::one(dom);
  std::array<typename B::Element, 2> gens{a, b};
  const Ideal f = B::generated(dom, gens);
  const Ideal f_inv = B::inverse(f);
  const Ideal ring_ii = B::colon(f_inv, f_inv);
  const Ideal f_v = B::inverse(f_inv);
  const Ideal ring_iii = B::colon(f_v, f_v);
  const Ideal two_gen_inv = B::intersect(B::principal(dom, B::el_inv(dom, a)), B::principal(dom, B::el_inv(dom, b)));
  const Ideal ring_iv = B::colon(two_gen_inv, two_gen_inv);
  const Ideal meet = B::intersect(B::principal(dom, a), B::principal(dom, b));
  const Ideal ring_v = B::colon(meet, meet);

  PairConditions<B> out{ring_ii == one, ring_iii == one, ring_iv == one, ring_v == one, ring_v};
  if (!(ring_ii == ring_iii && ring_iii == ring_iv && ring_iv == ring_v)) {
    throw InternalInconsistency("v-domain conditions disagree for pair (" + B::format_element(dom, a) + ", " +
                                B::format_element(dom, b) + "): rings " + B::format_ideal(ring_ii) + ", " +
                                B::format_ideal(ring_iii) + ", " + B::format_ideal(ring_iv) + ", " +
                                B::format_ideal(ring_v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Candidate enumeration

template <class B>
struct PairCandidate {
  typename B::Element a, b;
  std::vector<std::int64_t> key;  // (height, i, j)
};

/// Unordered pairs of sweep elements up to height `bound`, ordered by
/// (max height, index of a, index of b), followed by the backend's extra pairs.
/// Elements differing by a unit sign generate the same ideals, so the
/// quadratic sweep uses one representative per sign class.
template <class B>
std::vector<PairCandidate<B>> pair_candidates(const typename B::Domain& dom, std::int64_t bound,
                                              bool one_per_sign = true) {
  auto all = B::elements(dom, bound);
  std::vector<typename B::Element> elems;
  std::vector<std::int64_t> heights;
  for (const auto& x : all) {
    if constexpr (std::is_same_v<B, QuadraticBackend> || std::is_base_of_v<QuadraticBackend, B>) {
      if (one_per_sign) {
        auto [u, v] = to_order_coords(dom, x);
        if (!(u > 0 || (u == 0 && v > 0))) continue;
      }
    }
    elems.push_back(x);
    heights.push_back(B::height(dom, x));
  }
  std::vector<PairCandidate<B>> out;
  out.reserve(elems.size() * (elems.size() + 1) / 2);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      out.push_back({elems[i], elems[j],
                     {std::max(heights[i], heights[j]), static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)}});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.key < y.key; });
  std::int64_t extra_index = static_cast<std::int64_t>(elems.size());
  for (auto& [a, b] : B::extra_pairs(dom, bound)) {
    std::int64_t h = std::max(B::height(dom, a), B::height(dom, b));
    out.push_back({a, b, {h, extra_index, extra_index}});
    ++extra_index;
  }
  return out;
}

/// Index of the first candidate failing `ok`, or n.  With threads > 1 the
/// range is split into contiguous chunks and the smallest failing index wins,
/// so the answer does not depend on the thread count.
template <class Pred>
std::size_t first_failure(std::size_t n, const Pred& ok, unsigned threads) {
  auto scan = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      if (!ok(i)) return i;
    return n;
  };
  if (threads <= 1 || n < 2 * threads) return scan(0, n);
  std::vector<std::future<std::size_t>> parts;
  std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t lo = 0; lo < n; lo += chunk)
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(n, lo + chunk)));
  std::size_t best = n;
  for (auto& p : parts) best = std::min(best, p.get());
  return best;
}

template <class B>
std::string pair_expr(const typename B::Domain& dom, const typename B::Element& a, const typename B::Element& b) {
  return "(" + B::element_expr(dom, a) + ", " + B::element_expr(dom, b) + ")";
}

template <class B>
std::string meet_expr(const typename B::Domain& dom, const typename B::Element& a, const typename B::Element& b) {
  return "((" + B::element_expr(dom, a) + ") ∩ (" + B::element_expr(dom, b) + "))";
}

// ---------------------------------------------------------------------------
// v-domain

template <class B>
Verdict vdomain_search(const typename B::Domain& dom, const ClassifyOptions& opt) {
  auto cands = pair_candidates<B>(dom, opt.bound);
  std::size_t hit = first_failure(
      cands.size(), [&](std::size_t i) { return vdomain_pair_check<B>(dom, cands[i].a, cands[i].b).holds(); },
      opt.threads);
  auto maximal = B::oracle_maximal(dom);
  SearchBound sb{opt.bound, hit == cands.size() ? cands.size() : hit + 1, B::pairs_complete(dom, opt.bound)};
  if (hit < cands.size()) {
    const auto& c = cands[hit];
    if (maximal && *maximal)
      throw OracleMismatch("v-domain witness found in a maximal order: (" + B::format_element(dom, c.a) + ", " +
                           B::format_element(dom, c.b) + ")");
    auto rec = vdomain_pair_check<B>(dom, c.a, c.b);
    WitnessReport w;
    w.kind = "v-domain";
    w.elements = {B::format_element(dom, c.a), B::format_element(dom, c.b)};
    w.lhs_expr = meet_expr<B>(dom, c.a, c.b) + " : " + meet_expr<B>(dom, c.a, c.b);
    w.rhs_expr = B::unit_name();
    w.lhs = B::format_ideal(rec.ring);
    w.rhs = B::format_ideal(B::one(dom));
    w.note = "((a)∩(b) : (a)∩(b)) != D; equals ((a,b)^-1 : (a,b)^-1) and ((a,b)^v : (a,b)^v)";
    w.order_key = c.key;
    return Verdict::refuted(sb, std::move(w));
  }
  if (sb.complete) return Verdict::holds(sb, Basis::Exhaustive);
  if (maximal && *maximal) return Verdict::holds(sb, Basis::Oracle, "maximal order: Dedekind, hence Krull, hence v-domain");
  return Verdict::undetermined(sb, "no failing pair up to the height bound");
}

// ---------------------------------------------------------------------------
// v-finite-type representations

template <class B>
struct FiniteTypeWitness {
  std::vector<typename B::Element> generators;  // g_i with (a)∩(b) = (g_1, ..., g_n)
  std::vector<typename B::Element> ys;          // ab/g_i: (a,b)^v = ∩ y_i D
  std::vector<typename B::Element> zs;          // 1/g_i: ((a)∩(b))^-1 = ∩ z_j D
  bool generators_inside = true;                // strict finite type: g_i ∈ (a)∩(b)
};

template <class B>
typename B::Ideal intersection_of_principals(const typename B::Domain& dom,
                                             const std::vector<typename B::Element>& xs) {
  auto acc = B::principal(dom, xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) acc = B::intersect(acc, B::principal(dom, xs[i]));
  return acc;
}

/// Smallest subset (by size, then position) of `pool` generating `target`.
template <class B>
std::optional<std::vector<typename B::Element>> extract_generators(const typename B::Domain& dom,
                                                                   const typename B::Ideal& target,
                                                                   const std::vector<typename B::Element>& pool,
                                                                   std::size_t max_size) {
  std::vector<typename B::Element> inside;
  for (const auto& x : pool)
    if (B::contains(target, x) && std::find(inside.begin(), inside.end(), x) == inside.end()) inside.push_back(x);
  for (const auto& x : inside) {
    std::array<typename B::Element, 1> g{x};
    if (B::generated(dom, g) == target) return std::vector<typename B::Element>{x};
  }
  if (max_size >= 2)
    for (std::size_t i = 0; i < inside.size(); ++i)
      for (std::size_t j = i + 1; j < inside.size(); ++j) {
        std::array<typename B::Element, 2> g{inside[i], inside[j]};
        if (B::generated(dom, g) == target) return std::vector<typename B::Element>{inside[i], inside[j]};
      }
  if (inside.size() <= max_size && !inside.empty() && B::generated(dom, inside) == target) return inside;
  return std::nullopt;
}

/// (a,b)^v = ∩ (ab/g_i) D, where g_1..g_n generate (a)∩(b).  Both this and
/// ((a)∩(b))^-1 = ∩ g_i^-1 D are verified exactly before returning.
template <class B>
FiniteTypeWitness<B> v_finite_type_witness(const typename B::Domain& dom, const typename B::Element& a,
                                           const typename B::Element& b, std::size_t max_generators = 20) {
  auto meet = B::intersect(B::principal(dom, a), B::principal(dom, b));
  auto ab = B::el_mul(dom, a, b);
  std::vector<typename B::Element> pool{a, b, ab};
  for (const auto& g : B::ideal_basis(meet)) pool.push_back(g);
  auto gens = extract_generators<B>(dom, meet, pool, max_generators);
  if (!gens) throw NotFound("no generating set of (a)∩(b) with at most " + std::to_string(max_generators) + " elements");

  FiniteTypeWitness<B> w;
  w.generators = *gens;
  for (const auto& g : w.generators) {
    w.ys.push_back(B::el_mul(dom, ab, B::el_inv(dom, g)));
    w.zs.push_back(B::el_inv(dom, g));
    w.generators_inside = w.generators_inside && B::contains(meet, g);
  }
  std::array<typename B::Element, 2> pair{a, b};
  if (!(B::v(B::generated(dom, pair)) == intersection_of_principals<B>(dom, w.ys)))
    throw InternalInconsistency("(a,b)^v differs from the intersection of y_i D for (" + B::format_element(dom, a) +
                                ", " + B::format_element(dom, b) + ")");
  if (!(B::inverse(meet) == intersection_of_principals<B>(dom, w.zs)))
    throw InternalInconsistency("((a)∩(b))^-1 differs from the intersection of z_j D for (" +
                                B::format_element(dom, a) + ", " + B::format_element(dom, b) + ")");
  return w;
}

template <class B>
std::string noetherian_oracle() {
  if constexpr (std::is_base_of_v<QuadraticBackend, B>)
    return "orders are Noetherian, hence FC and Mori";
  else
    return "ideals of a finitely generated monoid are finitely generated";
}

struct PvmdResult {
  Verdict pvmd;
  Verdict v_fc;
};

/// PvMD = v-domain and v-FC, with v-FC checked through explicit
/// finite-intersection representations of ((a)∩(b))^-1.
template <class B>
PvmdResult pvmd_check(const typename B::Domain& dom, const ClassifyOptions& opt,
                      std::optional<Verdict> vdomain = std::nullopt) {
  if (!vdomain) vdomain = vdomain_search<B>(dom, opt);
  auto cands = pair_candidates<B>(dom, opt.bound);
  std::size_t hit = first_failure(
      cands.size(),
      [&](std::size_t i) {
        try {
          v_finite_type_witness<B>(dom, cands[i].a, cands[i].b, static_cast<std::size_t>(opt.recheck_bound));
          return true;
        } catch (const NotFound&) {
          return false;
        }
      },
      opt.threads);
  SearchBound sb{opt.bound, hit == cands.size() ? cands.size() : hit + 1, B::pairs_complete(dom, opt.bound)};
  PvmdResult out;
  if (hit < cands.size()) {
    // Failing to find a representation within the cap is not a disproof.
    out.v_fc = Verdict::undetermined(sb, "no finite-intersection representation found for pair " +
                                             pair_expr<B>(dom, cands[hit].a, cands[hit].b));
  } else {
    out.v_fc = Verdict::holds(sb, sb.complete ? Basis::Exhaustive : Basis::Oracle,
                              sb.complete ? "" : noetherian_oracle<B>());
  }

  if (vdomain->is_refuted()) {
    out.pvmd = *vdomain;
    out.pvmd.witness->kind = "PvMD";
    out.pvmd.witness->note = "v-domain conjunct fails: " + out.pvmd.witness->note;
  } else if (out.v_fc.is_refuted()) {
    out.pvmd = out.v_fc;
  } else if (vdomain->is_holds() && out.v_fc.is_holds()) {
    bool exhaustive = vdomain->basis == Basis::Exhaustive && out.v_fc.basis == Basis::Exhaustive;
    out.pvmd = Verdict::holds(sb, exhaustive ? Basis::Exhaustive : Basis::Oracle,
                              exhaustive ? "" : (vdomain->oracle.empty() ? out.v_fc.oracle : vdomain->oracle));
  } else {
    out.pvmd = Verdict::undetermined(sb, "v-domain or v-FC conjunct undetermined");
  }
  return out;
}

// ---------------------------------------------------------------------------
// CIC

template <class B>
Verdict cic_search(const typename B::Domain& dom, const ClassifyOptions& opt) {
  auto sweep = B::canonical_ideals(dom, opt.bound);
  std::size_t hit = first_failure(
      sweep.ideals.size(), [&](std::size_t i) { return is_v_invertible<B>(sweep.ideals[i].ideal); }, opt.threads);
  auto maximal = B::oracle_maximal(dom);
  SearchBound sb{opt.bound, hit == sweep.ideals.size() ? sweep.ideals.size() : hit + 1, sweep.complete};
  if (hit < sweep.ideals.size()) {
    const auto& named = sweep.ideals[hit];
    if (maximal && *maximal) throw OracleMismatch("non-v-invertible ideal found in a maximal order: " + named.expr);
    WitnessReport w;
    w.kind = "CIC";
    w.elements = {named.expr};
    w.lhs_expr = named.expr + "^-1 : " + named.expr + "^-1";
    w.rhs_expr = B::unit_name();
    w.lhs = B::format_ideal(inverse_colon_ring<B>(named.ideal));
    w.rhs = B::format_ideal(B::one(dom));
    w.note = "(A^-1 : A^-1) != D, so A is not v-invertible";
    w.order_key = {static_cast<std::int64_t>(hit)};
    return Verdict::refuted(sb, std::move(w));
  }
  if (sb.complete) return Verdict::holds(sb, Basis::Exhaustive);
  if (maximal && *maximal) return Verdict::holds(sb, Basis::Oracle, "maximal order: Dedekind, hence CIC");
  return Verdict::undetermined(sb, "no non-v-invertible ideal in the swept range");
}

// ---------------------------------------------------------------------------
// Mori / Krull

template <class B>
struct MoriWitness {
  std::vector<typename B::Element> ys;  // y_i ∈ A with A^-1 = ∩ y_i^-1 D
};

/// Finds y_1..y_n ∈ A (n <= n_max) with A^-1 = ∩ y_i^-1 D.  One- and
/// two-element witnesses are searched among elements of A in increasing
/// height; larger ones among subsets of A's generating set.  The result is
/// checked two ways: as an intersection and as (y_1, ..., y_n)^-1.
template <class B>
MoriWitness<B> mori_witness(const typename B::Ideal& a, std::size_t n_max, std::int64_t height) {
  using Element = typename B::Element;
  const auto& dom = B::domain_of(a);
  const auto target = B::inverse(a);
  auto inv_principal = [&](const Element& y) { return B::principal(dom, B::el_inv(dom, y)); };

  auto verified = [&](std::vector<Element> ys) -> MoriWitness<B> {
    for (const auto& y : ys)
      if (!B::contains(a, y)) throw InternalInconsistency("Mori witness element outside A");
    std::vector<Element> inv;
    for (const auto& y : ys) inv.push_back(B::el_inv(dom, y));
    if (!(intersection_of_principals<B>(dom, inv) == target) || !(B::inverse(B::generated(dom, ys)) == target))
      throw InternalInconsistency("Mori witness fails verification");
    return MoriWitness<B>{std::move(ys)};
  };

  // Generating set first, then single elements by height.
  auto basis = B::ideal_basis(a);
  for (const auto& y : basis)
    if (inv_principal(y) == target) return verified({y});

  auto elems = B::ideal_elements(a, height);
  std::vector<typename B::Ideal> invs;
  invs.reserve(elems.size());
  for (const auto& y : elems) {
    invs.push_back(inv_principal(y));
    if (invs.back() == target) return verified({y});
  }
  if (basis.size() == 2 && n_max >= 2 && B::intersect(inv_principal(basis[0]), inv_principal(basis[1])) == target)
    return verified({basis[0], basis[1]});
  if (n_max >= 2)
    for (std::size_t j = 1; j < elems.size(); ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (B::intersect(invs[i], invs[j]) == target) return verified({elems[i], elems[j]});

  for (std::size_t n = 3; n <= n_max && n <= basis.size(); ++n) {
    std::vector<bool> pick(basis.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
      std::vector<Element> ys;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (pick[i]) ys.push_back(basis[i]);
      std::vector<Element> inv;
      for (const auto& y : ys) inv.push_back(B::el_inv(dom, y));
      if (intersection_of_principals<B>(dom, inv) == target) return verified(ys);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw NotFound("no Mori witness with at most " + std::to_string(n_max) + " elements of height <= " +
                 std::to_string(height));
}

struct KrullResult {
  Verdict krull;
  Verdict mori;
  Verdict t_invertible;
  std::size_t ideals_swept = 0;
  std::size_t two_element_witnesses = 0;  // ideals with A^-1 = x^-1 D ∩ y^-1 D
};

template <class B>
KrullResult krull_check(const typename B::Domain& dom, const ClassifyOptions& opt,
                        std::optional<Verdict> vdomain = std::nullopt) {
  if (!vdomain) vdomain = vdomain_search<B>(dom, opt);
  auto sweep = B::canonical_ideals(dom, opt.bound);
  KrullResult out;
  out.ideals_swept = sweep.ideals.size();

  std::optional<std::size_t> mori_missing;
  std::optional<std::size_t> t_failure;
  for (std::size_t i = 0; i < sweep.ideals.size(); ++i) {
    const auto& A = sweep.ideals[i].ideal;
    try {
      auto w = mori_witness<B>(A, opt.mori_max_elements, opt.recheck_bound);
      if (w.ys.size() <= 2) ++out.two_element_witnesses;
    } catch (const NotFound&) {
      if (!mori_missing) mori_missing = i;
    }
    if (!t_failure && !is_t_invertible<B>(A)) t_failure = i;
  }
  SearchBound sb{opt.bound, sweep.ideals.size(), sweep.complete};

  if (mori_missing)
    out.mori = Verdict::undetermined(sb, "no Mori witness found for " + sweep.ideals[*mori_missing].expr);
  else
    out.mori = Verdict::holds(sb, sweep.complete ? Basis::Exhaustive : Basis::Oracle,
                              sweep.complete ? "" : noetherian_oracle<B>());

  if (t_failure) {
    const auto& named = sweep.ideals[*t_failure];
    WitnessReport w;
    w.kind = "t-invertibility";
    w.elements = {named.expr};
    w.lhs_expr = "(" + named.expr + " * " + named.expr + "^-1)^v";
    w.rhs_expr = B::unit_name();
    w.lhs = B::format_ideal(B::v(B::mul(named.ideal, B::inverse(named.ideal))));
    w.rhs = B::format_ideal(B::one(dom));
    w.note = "(A A^-1)^t = (A A^-1)^v != D";
    w.order_key = {static_cast<std::int64_t>(*t_failure)};
    out.t_invertible = Verdict::refuted(sb, std::move(w));
  } else {
    auto maximal = B::oracle_maximal(dom);
    if (sweep.complete)
      out.t_invertible = Verdict::holds(sb, Basis::Exhaustive);
    else if (maximal && *maximal)
      out.t_invertible = Verdict::holds(sb, Basis::Oracle, "maximal order: Krull, every ideal t-invertible");
    else
      out.t_invertible = Verdict::undetermined(sb, "every swept ideal is t-invertible");
  }

  if (vdomain->is_refuted()) {
    out.krull = *vdomain;
    out.krull.witness->kind = "Krull";
    out.krull.witness->note = "v-domain conjunct fails: " + out.krull.witness->note;
  } else if (out.mori.is_refuted()) {
    out.krull = out.mori;
  } else if (out.t_invertible.is_refuted()) {
    out.krull = out.t_invertible;
    out.krull.witness->kind = "Krull";
    out.krull.witness->note = "not t-invertible: " + out.krull.witness->note;
  } else if (vdomain->is_holds() && out.mori.is_holds()) {
    bool exhaustive = vdomain->basis == Basis::Exhaustive && out.mori.basis == Basis::Exhaustive;
    out.krull = Verdict::holds(sb, exhaustive ? Basis::Exhaustive : Basis::Oracle,
                               exhaustive ? "" : "Mori v-domain");
  } else {
    out.krull = Verdict::undetermined(sb, "Mori or v-domain conjunct undetermined");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Integral closure via (F:F) = D on two-generated F

template <class B>
Verdict integrally_closed_sampling(const typename B::Domain& dom, const ClassifyOptions& opt) {
  auto cands = pair_candidates<B>(dom, opt.bound);
  auto one = B::one(dom);
  auto ring_of = [&](const PairCandidate<B>& c) {
    std::array<typename B::Element, 2> g{c.a, c.b};
    auto f = B::generated(dom, g);
    return B::colon(f, f);
  };
  std::size_t hit = first_failure(cands.size(), [&](std::size_t i) { return ring_of(cands[i]) == one; }, opt.threads);
  auto maximal = B::oracle_maximal(dom);
  SearchBound sb{opt.bound, hit == cands.size() ? cands.size() : hit + 1, B::pairs_complete(dom, opt.bound)};
  if (hit < cands.size()) {
    const auto& c = cands[hit];
    if (maximal && *maximal)
      throw OracleMismatch("(F:F) != D for F = " + pair_expr<B>(dom, c.a, c.b) + " in a maximal order");
    WitnessReport w;
    w.kind = "integrally closed";
    w.elements = {B::format_element(dom, c.a), B::format_element(dom, c.b)};
    std::string f = pair_expr<B>(dom, c.a, c.b);
    w.lhs_expr = f + " : " + f;
    w.rhs_expr = B::unit_name();
    w.lhs = B::format_ideal(ring_of(c));
    w.rhs = B::format_ideal(one);
    w.note = "(F:F) != D for a finitely generated F";
    w.order_key = c.key;
    return Verdict::refuted(sb, std::move(w));
  }
  if (maximal && !*maximal)
    throw OracleMismatch("no (F:F) != D found in a non-maximal order, conductor pair included");
  if (sb.complete) return Verdict::holds(sb, Basis::Exhaustive);
  if (maximal && *maximal) return Verdict::holds(sb, Basis::Oracle, "maximal order: integrally closed");
  return Verdict::undetermined(sb, "(F:F) = D for every swept F");
}

// ---------------------------------------------------------------------------
// Essential primes (quadratic orders only)

struct PrimeRow {
  std::int64_t p = 0;
  std::string prime;  // generator-list expression for P
  bool essential = false;
  bool invertible = false;
};

struct EssentialReport {
  std::vector<PrimeRow> rows;
  Verdict all_essential;
};

inline EssentialReport essential_report(const QuadOrder& o, const std::vector<std::int64_t>& primes) {
  EssentialReport out;
  std::optional<std::size_t> first_bad;
  std::optional<FracIdealQ> bad_ideal;
  for (auto p : primes) {
    for (auto& pa : essential_at(o, p)) {
      if (pa.essential != pa.invertible)
        throw InternalInconsistency("prime " + pa.description + ": conductor test and invertibility disagree");
      if (!pa.essential && !first_bad) {
        first_bad = out.rows.size();
        bad_ideal = pa.ideal;
      }
      out.rows.push_back({p, pa.description, pa.essential, pa.invertible});
    }
  }
  SearchBound sb{primes.empty() ? 0 : *std::max_element(primes.begin(), primes.end()), out.rows.size(), true};
  if (first_bad) {
    const auto& row = out.rows[*first_bad];
    WitnessReport w;
    w.kind = "essential";
    w.elements = {row.prime};
    w.lhs_expr = row.prime + " * " + row.prime + "^-1";
    w.rhs_expr = "D";
    w.lhs = format_ideal(ideal_mul(*bad_ideal, inverse(*bad_ideal)));
    w.rhs = format_ideal(unit_ideal(o));
    w.note = "P contains the conductor, so D_P is not a valuation domain";
    w.order_key = {static_cast<std::int64_t>(*first_bad)};
    out.all_essential = Verdict::refuted(sb, std::move(w));
  } else {
    out.all_essential = Verdict::holds(sb, Basis::Exhaustive);
  }
  return out;
}

template <class B>
EssentialReport essential_report(const typename B::Domain& dom, const std::vector<std::int64_t>& primes) {
  if constexpr (B::has_essential)
    return essential_report(dom, primes);
  else
    throw UnsupportedBackend("essential-prime checks are only available for quadratic orders");
}

// ---------------------------------------------------------------------------
// Domain classification

struct PropertyRow {
  std::string name;
  Verdict verdict;
};

struct DomainReport {
  std::string backend;
  std::string descriptor;
  std::string semantics;  // "ring" or "residuation system"
  std::optional<bool> oracle_maximal;
  std::vector<PropertyRow> properties;
  std::optional<EssentialReport> essential;
  std::size_t mori_two_element = 0;
  std::size_t mori_ideals = 0;

  const Verdict* find(const std::string& name) const {
    for (const auto& row : properties)
      if (row.name == name) return &row.verdict;
    return nullptr;
  }
  const Verdict& get(const std::string& name) const {
    if (const auto* v = find(name)) return *v;
    throw std::out_of_range("no property " + name);
  }
};

inline constexpr const char* kVDomain = "v-domain";
inline constexpr const char* kVFC = "v-FC";
inline constexpr const char* kPvMD = "PvMD";
inline constexpr const char* kCIC = "CIC";
inline constexpr const char* kMori = "Mori";
inline constexpr const char* kKrull = "Krull";
inline constexpr const char* kTInv = "t-invertible";
inline constexpr const char* kIntClosed = "integrally closed";
inline constexpr const char* kEssential = "essential primes";

inline const std::vector<std::string>& consistency_rules() {
  static const std::vector<std::string> rules{
      "CIC => v-domain",         "PvMD => v-domain",       "Krull => PvMD",
      "Krull <=> Mori + v-domain", "Krull => t-invertible", "integrally closed + FC => PvMD",
      "PvMD => essential primes", "v-domain refuted => PvMD refuted"};
  return rules;
}

/// Implications between the rows that every report must respect.  Returns
/// one message per violated rule.
inline std::vector<std::string> consistency_violations(const DomainReport& r) {
  std::vector<std::string> bad;
  auto status = [&](const char* name) -> std::optional<Status> {
    if (const auto* v = r.find(name)) return v->status;
    return std::nullopt;
  };
  auto is = [&](const char* name, Status s) { return status(name) == s; };
  auto implies = [&](const char* a, const char* b) {
    if (is(a, Status::Holds) && status(b) && !is(b, Status::Holds))
      bad.push_back(std::string(a) + " holds but " + b + " is " + to_string(*status(b)));
  };
  implies(kCIC, kVDomain);
  implies(kPvMD, kVDomain);
  implies(kKrull, kPvMD);
  implies(kKrull, kMori);
  implies(kKrull, kVDomain);
  implies(kKrull, kTInv);
  implies(kIntClosed, kPvMD);
  implies(kPvMD, kEssential);
  if (is(kMori, Status::Holds) && is(kVDomain, Status::Holds) && !is(kKrull, Status::Holds))
    bad.push_back("Mori and v-domain hold but Krull does not");
  if ((is(kVDomain, Status::Refuted) || is(kMori, Status::Refuted)) && !is(kKrull, Status::Refuted))
    bad.push_back("a Krull conjunct is refuted but Krull is not");
  if (is(kTInv, Status::Refuted) && !is(kKrull, Status::Refuted))
    bad.push_back("an ideal is not t-invertible but Krull is not refuted");
  if (is(kVDomain, Status::Refuted) && !is(kPvMD, Status::Refuted))
    bad.push_back("v-domain is refuted but PvMD is not");
  return bad;
}

inline void enforce_consistency(const DomainReport& r) {
  auto bad = consistency_violations(r);
  if (bad.empty()) return;
  std::string msg = "inconsistent classification of " + r.descriptor + ":";
  for (const auto& b : bad) msg += "\n  " + b;
  throw InternalInconsistency(msg);
}

template <class B>
DomainReport classify_domain(const typename B::Domain& dom, const ClassifyOptions& opt) {
  DomainReport r;
  r.backend = B::kind;
  r.descriptor = B::describe(dom);
  r.semantics = B::has_essential ? "ring" : "residuation system";
  r.oracle_maximal = B::oracle_maximal(dom);

  Verdict vdomain = vdomain_search<B>(dom, opt);
  PvmdResult pvmd = pvmd_check<B>(dom, opt, vdomain);
  Verdict cic = cic_search<B>(dom, opt);
  KrullResult krull = krull_check<B>(dom, opt, vdomain);
  Verdict closed = integrally_closed_sampling<B>(dom, opt);
  r.mori_two_element = krull.two_element_witnesses;
  r.mori_ideals = krull.ideals_swept;

  r.properties = {{kVDomain, vdomain},     {kVFC, pvmd.v_fc},   {kPvMD, pvmd.pvmd},
                  {kCIC, cic},             {kMori, krull.mori}, {kKrull, krull.krull},
                  {kTInv, krull.t_invertible}, {kIntClosed, closed}};
  if constexpr (B::has_essential) {
    r.essential = essential_report<B>(dom, opt.primes);
    r.properties.push_back({kEssential, r.essential->all_essential});
  }
  enforce_consistency(r);
  return r;
}

}  // namespace fracideal
