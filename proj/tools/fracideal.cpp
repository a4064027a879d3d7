#include "fracideal/fracideal.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace fracideal;

namespace {

enum ExitCode { kOk = 0, kSelftestFailed = 1, kBadInput = 2, kEvaluation = 3, kInternal = 4 };

template <class B>
std::optional<std::string> principal_generator(const typename B::Ideal& a) {
  for (const auto& x : B::ideal_elements(a, 3))
    if (B::principal(B::domain_of(a), x) == a) return "(" + B::element_expr(B::domain_of(a), x) + ")";
  return std::nullopt;
}

template <class B>
int print_ideal(const typename B::Domain& dom, const DomainSpec& spec, const std::string& text, bool structured) {
  typename B::Ideal result = [&] {
    try {
      return evaluate_expression<B>(dom, text);
    } catch (const ExprError& e) {
      std::cerr << caret_diagnostic(text, e) << "\n";
      throw;
    }
  }();
  auto principal = principal_generator<B>(result);
  if (structured) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["spec"] = spec.echo();
    j["expression"] = text;
    j["ideal"] = B::format_ideal(result);
    j["generators"] = B::ideal_expr(result);
    j["principal"] = principal ? nlohmann::ordered_json(*principal) : nlohmann::ordered_json(nullptr);
    j["relation_to_unit"] = containment_summary<B>(result);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "domain: " << B::describe(dom) << "\n";
    std::cout << "ideal: " << B::format_ideal(result) << "\n";
    std::cout << "generators: " << B::ideal_expr(result) << "\n";
    if (principal) std::cout << "principal: " << *principal << "\n";
    std::cout << "relation: " << containment_summary<B>(result) << "\n";
  }
  return kOk;
}

std::optional<std::vector<std::int64_t>> as_optional(const std::vector<std::int64_t>& v) {
  if (v.empty()) return std::nullopt;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fractional-ideal arithmetic and divisorial classification of quadratic orders and "
               "numerical semigroups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

  std::string spec_arg, expression, format = "text";
  std::optional<std::int64_t> bound, samples;
  std::optional<std::uint64_t> seed;
  std::vector<std::int64_t> primes;
  unsigned threads = 1;
  bool timing = false, inject_fault = false;

  auto* classify = app.add_subcommand("classify", "Classify a domain given as a spec file or inline spec");
  classify->add_option("spec", spec_arg, "Spec file path, or inline spec such as \"kind=quadratic; d=-3; f=2\"")
      ->required();
  classify->add_option("--bound", bound, "Height bound for pair and ideal sweeps")->check(CLI::PositiveNumber);
  classify->add_option("--samples", samples, "Random ideals for the sampled v-invertibility check")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--seed", seed, "Seed for sampled checks");
  classify->add_option("--primes", primes, "Primes for the essential-prime table")->delimiter(',');
  classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  classify->add_option("--threads", threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  classify->add_flag("--timing", timing, "Include elapsed time in the report");

  auto* ideal = app.add_subcommand("ideal", "Evaluate an ideal expression over a domain");
  ideal->add_option("spec", spec_arg, "Spec file path or inline spec")->required();
  ideal->add_option("expression", expression, "Ideal expression, e.g. \"((2) ∩ (1+w)) : ((2) ∩ (1+w))\"")
      ->required();
  ideal->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));

  auto* selftest = app.add_subcommand("selftest", "Run the invariant and oracle-equivalence suites");
  selftest->add_option("--bound", bound, "Height bound for pair sweeps")->check(CLI::PositiveNumber);
  selftest->add_option("--samples", samples, "Random cases per domain")->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", seed, "Seed for random cases");
  selftest->add_flag("--inject-fault", inject_fault, "Run against a deliberately broken colon")->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*selftest) {
      SelftestOptions opt;
      if (bound) opt.bound = *bound;
      if (samples) opt.samples = *samples;
      if (seed) opt.seed = *seed;
      opt.inject_fault = inject_fault;
      auto result = run_selftest(opt, &std::cout);
      std::cout << (result.passed() ? "selftest passed" : "selftest FAILED") << "\n";
      return result.passed() ? kOk : kSelftestFailed;
    }

    DomainSpec spec = load_domain_spec(spec_arg);
    const bool structured = format == "structured";

    if (*ideal) {
      if (spec.kind == DomainKind::Quadratic) return print_ideal<QuadraticBackend>(spec.quadratic_order(), spec, expression, structured);
      return print_ideal<SemigroupBackend>(spec.semigroup(), spec, expression, structured);
    }

    RunSettings settings = resolve_settings(spec, bound, samples, seed, as_optional(primes));
    settings.threads = threads;
    settings.timing = timing;
    ReportDocument doc = run_classify(spec, settings);
    std::cout << (structured ? render_structured(doc) : render_text(doc));
    return kOk;
  } catch (const SpecParseError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ExprError&) {
    return kEvaluation;
  } catch (const UnsupportedBackend& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kEvaluation;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const OracleMismatch& e) {
    std::cerr << "oracle mismatch: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kEvaluation;
  }
}
