#pragma once

// Domain specifications: flat "key = value" text, one pair per line, '#'
// starting a comment.  The inline form separates pairs with ';'.
//
//   kind = quadratic            kind = numerical-semigroup
//   d = -3                      generators = 3, 5, 7
//   f = 2                       bound = 8
//
// Optional keys: bound, samples, seed, primes.

#include "fracideal/numsg.hpp"
#include "fracideal/quadratic.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fracideal {

class SpecParseError : public std::runtime_error {
 public:
  SpecParseError(std::size_t line, std::size_t column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

enum class DomainKind { Quadratic, Semigroup };

struct DomainSpec {
  DomainKind kind = DomainKind::Quadratic;
  std::int64_t d = 0;
  std::int64_t f = 1;
  std::vector<std::int64_t> generators;
  std::optional<std::int64_t> bound;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<std::int64_t>> primes;

  /// Canonical single-line form; parses back to an equal spec.
  std::string echo() const {
    std::ostringstream out;
    auto list = [](const std::vector<std::int64_t>& xs) {
      std::string s;
      for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
      return s;
    };
    if (kind == DomainKind::Quadratic)
      out << "kind=quadratic; d=" << d << "; f=" << f;
    else
      out << "kind=numerical-semigroup; generators=" << list(generators);
    if (bound) out << "; bound=" << *bound;
    if (samples) out << "; samples=" << *samples;
    if (seed) out << "; seed=" << *seed;
    if (primes) out << "; primes=" << list(*primes);
    return out.str();
  }

  QuadOrder quadratic_order() const { return QuadOrder(d, f); }
  SemigroupRef semigroup() const { return make_semigroup(generators); }
};

namespace detail {

inline std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Accepts ASCII '-' and the Unicode minus sign.
inline std::int64_t parse_int(std::string_view text, std::size_t line, std::size_t col) {
  std::string buf(text);
  const std::string minus = "\xE2\x88\x92";
  if (buf.rfind(minus, 0) == 0) buf = "-" + buf.substr(minus.size());
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), value);
  if (buf.empty() || ec != std::errc() || ptr != buf.data() + buf.size())
    throw SpecParseError(line, col, "expected an integer, got '" + std::string(text) + "'");
  return value;
}

inline std::vector<std::int64_t> parse_list(std::string_view text, std::size_t line, std::size_t col) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    std::size_t item_col = col + start;
    item = trim(item, item_col);
    if (item.empty()) throw SpecParseError(line, item_col, "empty list entry");
    out.push_back(parse_int(item, line, item_col));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Parses a spec.  With `inline_form`, ';' also separates entries and
/// columns count from the start of the whole string.
inline DomainSpec parse_domain_spec(std::string_view text, bool inline_form = false) {
  DomainSpec spec;
  std::optional<DomainKind> kind;
  bool have_d = false, have_f = false, have_gens = false;
  std::size_t line_no = 0;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = text.substr(line_start, nl == std::string_view::npos ? text.size() - line_start : nl - line_start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t entry_start = 0;
    while (entry_start <= line.size()) {
      std::size_t sep = inline_form ? line.find(';', entry_start) : std::string_view::npos;
      std::string_view entry =
          line.substr(entry_start, sep == std::string_view::npos ? line.size() - entry_start : sep - entry_start);
      std::size_t col = entry_start + 1;
      entry = detail::trim(entry, col);
      if (!entry.empty()) {
        std::size_t eq = entry.find('=');
        if (eq == std::string_view::npos) throw SpecParseError(line_no, col, "expected key = value");
        std::size_t key_col = col;
        std::string_view key = detail::trim(entry.substr(0, eq), key_col);
        std::size_t val_col = col + eq + 1;
        std::string_view value = detail::trim(entry.substr(eq + 1), val_col);
        if (value.empty()) throw SpecParseError(line_no, val_col, "missing value for '" + std::string(key) + "'");

        if (key == "kind") {
          if (value == "quadratic")
            kind = DomainKind::Quadratic;
          else if (value == "numerical-semigroup" || value == "semigroup")
            kind = DomainKind::Semigroup;
          else
            throw SpecParseError(line_no, val_col, "unknown kind '" + std::string(value) +
                                                       "' (expected quadratic or numerical-semigroup)");
        } else if (key == "d") {
          spec.d = detail::parse_int(value, line_no, val_col);
          have_d = true;
        } else if (key == "f") {
          spec.f = detail::parse_int(value, line_no, val_col);
          have_f = true;
        } else if (key == "generators") {
          spec.generators = detail::parse_list(value, line_no, val_col);
          have_gens = true;
        } else if (key == "bound") {
          spec.bound = detail::parse_int(value, line_no, val_col);
          if (*spec.bound < 1) throw SpecParseError(line_no, val_col, "bound must be positive");
        } else if (key == "samples") {
          spec.samples = detail::parse_int(value, line_no, val_col);
          if (*spec.samples < 0) throw SpecParseError(line_no, val_col, "samples must be non-negative");
        } else if (key == "seed") {
          auto s = detail::parse_int(value, line_no, val_col);
          if (s < 0) throw SpecParseError(line_no, val_col, "seed must be non-negative");
          spec.seed = static_cast<std::uint64_t>(s);
        } else if (key == "primes") {
          spec.primes = detail::parse_list(value, line_no, val_col);
          for (auto p : *spec.primes)
            if (!is_prime(p)) throw SpecParseError(line_no, val_col, std::to_string(p) + " is not a prime");
        } else {
          throw SpecParseError(line_no, key_col, "unknown key '" + std::string(key) + "'");
        }
      }
      if (sep == std::string_view::npos) break;
      entry_start = sep + 1;
    }
    if (nl == std::string_view::npos) break;
    line_start = nl + 1;
  }

  if (!kind) throw SpecParseError(line_no, 1, "missing 'kind'");
  spec.kind = *kind;
  if (spec.kind == DomainKind::Quadratic) {
    if (!have_d) throw SpecParseError(line_no, 1, "quadratic spec needs 'd'");
    if (have_gens) throw SpecParseError(line_no, 1, "'generators' does not apply to quadratic orders");
    try {
      QuadOrder check(spec.d, spec.f);
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(line_no, 1, e.what());
    }
  } else {
    if (!have_gens) throw SpecParseError(line_no, 1, "numerical-semigroup spec needs 'generators'");
    if (have_d || have_f) throw SpecParseError(line_no, 1, "'d' and 'f' do not apply to numerical semigroups");
    try {
      NumSemigroup check(spec.generators);
    } catch (const std::invalid_argument& e) {
      throw SpecParseError(line_no, 1, e.what());
    }
  }
  return spec;
}

/// A path to an existing file is read as a spec file; anything else is
/// parsed as an inline spec.
inline DomainSpec load_domain_spec(const std::string& path_or_inline) {
  std::ifstream in(path_or_inline);
  if (in && path_or_inline.find('=') == std::string::npos) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_domain_spec(buf.str(), false);
  }
  return parse_domain_spec(path_or_inline, true);
}

}  // namespace fracideal
