#pragma once

// Ideal expressions.
//
//   expr    := sum (':' sum)*                 colon, left associative
//   sum     := meet ('+' meet)*
//   meet    := product (('∩' | '^') product)*
//   product := postfix ('*' postfix)*
//   postfix := primary ('^-1' | '^v' | '^t')*
//   primary := 'D' | 'S' | element | '(' list ')' | '(' expr ')'
//   list    := element (',' element)*
//
// A bare element denotes the principal ideal it generates.  Quadratic
// elements are written u+v*w with rational coefficients "p/q", where w is the
// order generator; semigroup elements are integers.  The parser evaluates as
// it goes.

#include "fracideal/backends.hpp"

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace fracideal {

/// A parse or evaluation failure at a byte offset of the input.
class ExprError : public std::runtime_error {
 public:
  ExprError(std::size_t offset, const std::string& what) : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Three-line diagnostic: message, the input, and a caret under the offending
/// character (columns count code points).
inline std::string caret_diagnostic(std::string_view input, const ExprError& e) {
  std::size_t col = 0;
  for (std::size_t i = 0; i < e.offset() && i < input.size(); ++i)
    if ((static_cast<unsigned char>(input[i]) & 0xC0) != 0x80) ++col;
  return std::string("error: ") + e.what() + "\n  " + std::string(input) + "\n  " + std::string(col, ' ') + "^";
}

inline constexpr std::string_view kCap = "\xE2\x88\xA9";  // ∩

template <class B>
class ExprParser {
 public:
  using Domain = typename B::Domain;
  using Ideal = typename B::Ideal;
  using Element = typename B::Element;

  ExprParser(const Domain& dom, std::string_view src) : dom_(dom), src_(src) {}

  Ideal parse() {
    Ideal out = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return out;
  }

 private:
  const Domain& dom_;
  std::string_view src_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ExprError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ExprError(at, msg); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= src_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_ws();
    return src_.substr(pos_, s.size()) == s;
  }

  template <class F>
  Ideal guarded(std::size_t at, F&& f) {
    try {
      return f();
    } catch (const std::invalid_argument& e) {
      fail_at(at, e.what());
    } catch (const std::domain_error& e) {
      fail_at(at, e.what());
    }
  }

  Ideal expr() {
    Ideal acc = sum();
    while (peek() == ':') {
      std::size_t at = pos_++;
      Ideal rhs = sum();
      acc = guarded(at, [&] { return B::colon(acc, rhs); });
    }
    return acc;
  }

  Ideal sum() {
    Ideal acc = meet();
    while (peek() == '+') {
      std::size_t at = pos_++;
      Ideal rhs = meet();
      acc = guarded(at, [&] { return B::add(acc, rhs); });
    }
    return acc;
  }

  bool binary_caret() {
    if (peek() != '^') return false;
    std::size_t save = pos_++;
    skip_ws();
    bool postfix = pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == 'v' || src_[pos_] == 't');
    pos_ = save;
    return !postfix;
  }

  Ideal meet() {
    Ideal acc = product();
    while (true) {
      std::size_t at = pos_;
      if (starts_with(kCap)) {
        at = pos_;
        pos_ += kCap.size();
      } else if (binary_caret()) {
        at = pos_;
        ++pos_;
      } else {
        break;
      }
      Ideal rhs = product();
      acc = guarded(at, [&] { return B::intersect(acc, rhs); });
    }
    return acc;
  }

  Ideal product() {
    Ideal acc = postfix();
    while (peek() == '*') {
      std::size_t at = pos_++;
      Ideal rhs = postfix();
      acc = guarded(at, [&] { return B::mul(acc, rhs); });
    }
    return acc;
  }

  Ideal postfix() {
    Ideal acc = primary();
    while (peek() == '^' && !binary_caret()) {
      std::size_t at = pos_++;
      skip_ws();
      if (src_.substr(pos_, 2) == "-1") {
        pos_ += 2;
        acc = guarded(at, [&] { return B::inverse(acc); });
      } else if (pos_ < src_.size() && src_[pos_] == 'v') {
        ++pos_;
        acc = guarded(at, [&] { return B::v(acc); });
      } else if (pos_ < src_.size() && src_[pos_] == 't') {
        ++pos_;
        acc = guarded(at, [&] { return B::t(acc); });
      } else {
        fail("expected -1, v or t after '^'");
      }
    }
    return acc;
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < src_.size(); ++i) {
      if (src_[i] == '(') ++depth;
      if (src_[i] == ')' && --depth == 0) return i;
    }
    fail_at(open, "unbalanced '('");
  }

  static bool is_generator_list(std::string_view body) {
    for (char c : body)
      if (c == '(' || c == 'D' || c == 'S' || c == '^' || c == ':') return false;
    return body.find(kCap) == std::string_view::npos;
  }

  Ideal primary() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '\0') fail("unexpected end of expression");
    if (c == 'D' || c == 'S') {
      if (c == 'S' && std::is_base_of_v<QuadraticBackend, B>) fail("'S' names a semigroup; this domain is an order");
      ++pos_;
      return B::one(dom_);
    }
    if (c == '(') {
      std::size_t close = matching_paren(pos_);
      std::string_view body = src_.substr(pos_ + 1, close - pos_ - 1);
      if (is_generator_list(body)) {
        ++pos_;
        std::vector<Element> gens{element()};
        while (peek() == ',') {
          ++pos_;
          gens.push_back(element());
        }
        if (peek() != ')') fail("expected ',' or ')' in generator list");
        ++pos_;
        return guarded(at, [&] { return B::generated(dom_, gens); });
      }
      ++pos_;
      Ideal inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    Element x = element(true);
    return guarded(at, [&] { return B::principal(dom_, x); });
  }

  std::optional<BigInt> integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return BigInt(BigInt::Wide(std::string(src_.substr(start, pos_ - start))));
  }

  std::optional<Rat> rational() {
    auto n = integer();
    if (!n) return std::nullopt;
    if (peek() == '/') {
      ++pos_;
      std::size_t at = pos_;
      auto d = integer();
      if (!d) fail("expected a denominator after '/'");
      if (d->sign() == 0) fail_at(at, "zero denominator");
      return Rat(*n, *d);
    }
    return Rat(*n);
  }

  // A single signed term when `bare` (operands of ideal operators), a full
  // signed sum of terms inside generator lists.
  Element element(bool bare = false) {
    skip_ws();
    [[maybe_unused]] std::size_t at = pos_;
    if constexpr (std::is_base_of_v<QuadraticBackend, B>) {
      Rat u(0), v(0);
      bool first = true;
      while (true) {
        int sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
          if (first && c == '+') fail("unexpected '+'");
          sign = c == '-' ? -1 : 1;
          ++pos_;
        } else if (!first) {
          break;
        }
        auto coef = rational();
        bool has_w = false;
        if (coef && peek() == '*') {
          std::size_t save = pos_++;
          if (peek() != 'w') pos_ = save;
        }
        if (peek() == 'w') {
          ++pos_;
          has_w = true;
        }
        if (!coef && !has_w) fail("expected an element");
        Rat value = (coef ? *coef : Rat(1)) * Rat(sign);
        (has_w ? v : u) = (has_w ? v : u) + value;
        first = false;
        if (bare) break;
      }
      return from_order_coords(dom_, u, v);
    } else {
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      auto n = integer();
      if (!n) fail("expected an integer");
      if (!n->fits_int64()) fail_at(at, "integer out of range");
      return sign * n->to_int64();
    }
  }
};

template <class B>
typename B::Ideal evaluate_expression(const typename B::Domain& dom, std::string_view text) {
  return ExprParser<B>(dom, text).parse();
}

template <class B>
bool is_subideal(const typename B::Ideal& a, const typename B::Ideal& b) {
  return b.contains(a);
}

/// "= D", "⊂ D", "⊃ D" or "≠ D" (incomparable), as seen from the ideal.
template <class B>
std::string containment_summary(const typename B::Ideal& a) {
  const auto one = B::one(B::domain_of(a));
  std::string d = B::unit_name();
  if (a == one) return "= " + d;
  bool sub = is_subideal<B>(a, one);
  bool sup = is_subideal<B>(one, a);
  if (sub) return "≠ " + d + ", ⊂ " + d;
  if (sup) return "≠ " + d + ", ⊃ " + d;
  return "≠ " + d + ", incomparable";
}

}  // namespace fracideal
