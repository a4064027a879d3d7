#pragma once

// Classification runs and their rendering as text or as a structured
// (JSON) document with a fixed key order.

#include "fracideal/classify.hpp"
#include "fracideal/spec_file.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fracideal {

inline constexpr const char* kToolName = "fracideal";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunSettings {
  std::int64_t bound = 8;
  std::int64_t recheck_bound = 20;
  std::int64_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  unsigned threads = 1;
  bool timing = false;
};

/// Settings from the spec file, overridden by anything given explicitly.
inline RunSettings resolve_settings(const DomainSpec& spec, std::optional<std::int64_t> bound,
                                    std::optional<std::int64_t> samples, std::optional<std::uint64_t> seed,
                                    std::optional<std::vector<std::int64_t>> primes) {
  RunSettings s;
  if (spec.bound) s.bound = *spec.bound;
  if (spec.samples) s.samples = *spec.samples;
  if (spec.seed) s.seed = *spec.seed;
  if (spec.primes) s.primes = *spec.primes;
  if (bound) s.bound = *bound;
  if (samples) s.samples = *samples;
  if (seed) s.seed = *seed;
  if (primes) s.primes = *primes;
  return s;
}

/// v-invertibility by the colon criterion against the direct definition on
/// seeded random ideals.
struct SampledCheck {
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::int64_t v_invertible = 0;
  std::int64_t disagreements = 0;
  std::string first_disagreement;
};

template <class B>
SampledCheck sampled_v_invertibility(const typename B::Domain& dom, std::int64_t samples, std::uint64_t seed) {
  SampledCheck out;
  out.samples = samples;
  out.seed = seed;
  SeededRng rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    auto a = B::random_ideal(dom, rng, 4);
    bool colon_form = is_v_invertible<B>(a);
    bool direct = v_invertible_direct<B>(a);
    out.v_invertible += colon_form ? 1 : 0;
    if (colon_form != direct) {
      if (out.disagreements == 0) out.first_disagreement = B::ideal_expr(a);
      ++out.disagreements;
    }
  }
  if (out.disagreements)
    throw InternalInconsistency("colon criterion and (A A^-1)^v = D disagree on " + out.first_disagreement);
  return out;
}

struct ReportDocument {
  DomainSpec spec;
  RunSettings settings;
  DomainReport report;
  SampledCheck sampled;
  std::optional<double> elapsed_ms;
};

inline ClassifyOptions to_options(const RunSettings& s) {
  ClassifyOptions o;
  o.bound = s.bound;
  o.recheck_bound = s.recheck_bound;
  o.primes = s.primes;
  o.threads = s.threads;
  return o;
}

inline ReportDocument run_classify(const DomainSpec& spec, const RunSettings& settings) {
  auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.spec = spec;
  doc.settings = settings;
  auto opt = to_options(settings);
  if (spec.kind == DomainKind::Quadratic) {
    auto o = spec.quadratic_order();
    doc.report = classify_domain<QuadraticBackend>(o, opt);
    doc.sampled = sampled_v_invertibility<QuadraticBackend>(o, settings.samples, settings.seed);
  } else {
    auto s = spec.semigroup();
    doc.report = classify_domain<SemigroupBackend>(s, opt);
    doc.sampled = sampled_v_invertibility<SemigroupBackend>(s, settings.samples, settings.seed);
  }
  if (settings.timing)
    doc.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

using Json = nlohmann::ordered_json;

inline Json to_json(const WitnessReport& w) {
  Json j;
  j["kind"] = w.kind;
  j["elements"] = w.elements;
  j["lhs_expr"] = w.lhs_expr;
  j["rhs_expr"] = w.rhs_expr;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["note"] = w.note;
  j["order_key"] = w.order_key;
  return j;
}

inline Json to_json(const std::string& name, const Verdict& v) {
  Json j;
  j["property"] = name;
  j["status"] = to_string(v.status);
  j["basis"] = to_string(v.basis);
  j["oracle"] = v.oracle;
  j["search"] = {{"height", v.bound.height}, {"checked", v.bound.checked}, {"complete", v.bound.complete}};
  j["detail"] = v.detail;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return j;
}

inline Json to_json(const ReportDocument& doc) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;

  Json spec;
  spec["echo"] = doc.spec.echo();
  if (doc.spec.kind == DomainKind::Quadratic) {
    spec["kind"] = "quadratic";
    spec["d"] = doc.spec.d;
    spec["f"] = doc.spec.f;
  } else {
    spec["kind"] = "numerical-semigroup";
    spec["generators"] = doc.spec.generators;
  }
  j["spec"] = spec;

  j["settings"] = {{"bound", doc.settings.bound},
                   {"recheck_bound", doc.settings.recheck_bound},
                   {"samples", doc.settings.samples},
                   {"seed", doc.settings.seed},
                   {"primes", doc.settings.primes}};

  const auto& r = doc.report;
  j["domain"] = {{"backend", r.backend}, {"descriptor", r.descriptor}, {"semantics", r.semantics}};
  j["oracle"] = {{"maximal", r.oracle_maximal ? Json(*r.oracle_maximal) : Json(nullptr)},
                 {"source", r.oracle_maximal ? "conductor f == 1" : "none"}};

  Json verdicts = Json::array();
  for (const auto& row : r.properties) verdicts.push_back(to_json(row.name, row.verdict));
  j["verdicts"] = verdicts;

  if (r.essential) {
    Json primes = Json::array();
    for (const auto& row : r.essential->rows)
      primes.push_back(
          {{"p", row.p}, {"prime", row.prime}, {"essential", row.essential}, {"invertible", row.invertible}});
    j["essential_primes"] = primes;
  } else {
    j["essential_primes"] = nullptr;
  }

  j["mori"] = {{"ideals", r.mori_ideals}, {"two_element", r.mori_two_element}};
  j["sampled"] = {{"samples", doc.sampled.samples},
                  {"seed", doc.sampled.seed},
                  {"v_invertible", doc.sampled.v_invertible},
                  {"disagreements", doc.sampled.disagreements}};
  j["consistency"] = {{"rules", consistency_rules()}, {"violations", consistency_violations(r)}};
  if (doc.elapsed_ms) j["timing_ms"] = *doc.elapsed_ms;
  return j;
}

inline std::string render_structured(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

inline std::string render_text(const ReportDocument& doc) {
  std::ostringstream out;
  const auto& r = doc.report;
  out << kToolName << " " << kToolVersion << "\n";
  out << "spec: " << doc.spec.echo() << "\n";
  out << "domain: " << r.descriptor << " (" << r.semantics << ")\n";
  out << "bounds: height " << doc.settings.bound << ", recheck " << doc.settings.recheck_bound << ", samples "
      << doc.settings.samples << ", seed " << doc.settings.seed << "\n";
  if (r.oracle_maximal)
    out << "oracle: " << (*r.oracle_maximal ? "maximal order" : "non-maximal order") << "\n";
  else
    out << "oracle: none\n";
  out << "\n";
  for (const auto& row : r.properties) {
    const auto& v = row.verdict;
    out << "  " << row.name << ": " << to_string(v.status);
    if (v.is_holds()) {
      out << " [" << to_string(v.basis);
      if (!v.oracle.empty()) out << ": " << v.oracle;
      out << "]";
    }
    out << "  (checked " << v.bound.checked << (v.bound.complete ? ", complete" : "") << ")\n";
    if (v.witness) {
      const auto& w = *v.witness;
      if (!w.elements.empty()) {
        out << "      witness:";
        for (std::size_t i = 0; i < w.elements.size(); ++i) out << (i ? ", " : " ") << w.elements[i];
        out << "\n";
      }
      out << "      " << w.lhs_expr << " = " << w.lhs << "\n";
      out << "      " << w.rhs_expr << " = " << w.rhs << "\n";
      out << "      " << w.note << "\n";
    }
    if (!v.detail.empty() && !v.witness) out << "      " << v.detail << "\n";
  }
  if (r.essential) {
    out << "\nprimes:\n";
    for (const auto& row : r.essential->rows)
      out << "  " << row.prime << ": " << (row.essential ? "essential" : "not essential")
          << (row.invertible ? ", invertible" : ", not invertible") << "\n";
  }
  out << "\nMori witnesses: " << r.mori_two_element << " of " << r.mori_ideals << " ideals with two elements\n";
  out << "sampled v-invertibility: " << doc.sampled.v_invertible << " of " << doc.sampled.samples
      << " v-invertible, " << doc.sampled.disagreements << " disagreements\n";
  auto bad = consistency_violations(r);
  out << "consistency: " << (bad.empty() ? "all implications hold" : std::to_string(bad.size()) + " violations")
      << "\n";
  if (doc.elapsed_ms) out << "time: " << *doc.elapsed_ms << " ms\n";
  return out.str();
}

}  // namespace fracideal
