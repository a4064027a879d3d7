#pragma once

// Exact integer and rational scalars used throughout the library.
//
// BigInt keeps values that fit in int64 inline and spills to a heap-allocated
// boost::multiprecision::cpp_int only on overflow.  Almost every value in the
// ideal computations is a few digits long, so the inline path dominates.
// Rat is a reduced fraction of two BigInts with a positive denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>

namespace fracideal {

class BigInt {
 public:
  using Wide = boost::multiprecision::cpp_int;

  BigInt() = default;
  template <std::signed_integral T>
  BigInt(T v) : small_(static_cast<std::int64_t>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  BigInt(T v) {  // NOLINT(google-explicit-constructor)
    if (static_cast<std::uint64_t>(v) <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      small_ = static_cast<std::int64_t>(v);
    else
      set_wide(Wide(static_cast<std::uint64_t>(v)));
  }
  explicit BigInt(const Wide& w) { set_wide(w); }

  BigInt(const BigInt& o) : small_(o.small_), wide_(o.wide_ ? std::make_unique<Wide>(*o.wide_) : nullptr) {}
  BigInt(BigInt&&) noexcept = default;
  BigInt& operator=(const BigInt& o) {
    if (this != &o) {
      small_ = o.small_;
      wide_ = o.wide_ ? std::make_unique<Wide>(*o.wide_) : nullptr;
    }
    return *this;
  }
  BigInt& operator=(BigInt&&) noexcept = default;

  bool fits_int64() const { return !wide_; }
  std::int64_t to_int64() const {
    if (wide_) throw std::overflow_error("BigInt does not fit in int64");
    return small_;
  }
  Wide to_wide() const { return wide_ ? *wide_ : Wide(small_); }

  int sign() const {
    if (wide_) return wide_->sign();
    return (small_ > 0) - (small_ < 0);
  }

  std::string str() const { return wide_ ? wide_->str() : std::to_string(small_); }

  friend BigInt operator+(const BigInt& x, const BigInt& y) {
    std::int64_t r;
    if (!x.wide_ && !y.wide_ && !__builtin_add_overflow(x.small_, y.small_, &r)) return BigInt(r);
    return BigInt(Wide(x.to_wide() + y.to_wide()));
  }
  friend BigInt operator-(const BigInt& x, const BigInt& y) {
    std::int64_t r;
    if (!x.wide_ && !y.wide_ && !__builtin_sub_overflow(x.small_, y.small_, &r)) return BigInt(r);
    return BigInt(Wide(x.to_wide() - y.to_wide()));
  }
  friend BigInt operator*(const BigInt& x, const BigInt& y) {
    std::int64_t r;
    if (!x.wide_ && !y.wide_ && !__builtin_mul_overflow(x.small_, y.small_, &r)) return BigInt(r);
    return BigInt(Wide(x.to_wide() * y.to_wide()));
  }
  /// Truncating division.
  friend BigInt operator/(const BigInt& x, const BigInt& y) {
    if (y.sign() == 0) throw std::domain_error("BigInt division by zero");
    if (!x.wide_ && !y.wide_ && !(x.small_ == std::numeric_limits<std::int64_t>::min() && y.small_ == -1))
      return BigInt(x.small_ / y.small_);
    return BigInt(Wide(x.to_wide() / y.to_wide()));
  }
  /// Remainder with the sign of the dividend.
  friend BigInt operator%(const BigInt& x, const BigInt& y) {
    if (y.sign() == 0) throw std::domain_error("BigInt division by zero");
    if (!x.wide_ && !y.wide_) {
      if (y.small_ == -1) return BigInt(0);
      return BigInt(x.small_ % y.small_);
    }
    return BigInt(Wide(x.to_wide() % y.to_wide()));
  }
  BigInt operator-() const { return BigInt(0) - *this; }

  BigInt& operator+=(const BigInt& y) { return *this = *this + y; }
  BigInt& operator-=(const BigInt& y) { return *this = *this - y; }
  BigInt& operator*=(const BigInt& y) { return *this = *this * y; }
  BigInt& operator/=(const BigInt& y) { return *this = *this / y; }
  BigInt& operator++() { return *this = *this + BigInt(1); }
  BigInt& operator--() { return *this = *this - BigInt(1); }

  friend bool operator==(const BigInt& x, const BigInt& y) {
    if (!x.wide_ && !y.wide_) return x.small_ == y.small_;
    if (!x.wide_ || !y.wide_) return false;  // wide values never fit in int64
    return *x.wide_ == *y.wide_;
  }
  friend std::strong_ordering operator<=>(const BigInt& x, const BigInt& y) {
    if (!x.wide_ && !y.wide_) return x.small_ <=> y.small_;
    int c = x.to_wide().compare(y.to_wide());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend BigInt gcd_of(const BigInt& a, const BigInt& b) {
    if (!a.wide_ && !b.wide_) {
      std::uint64_t g = std::gcd(magnitude(a.small_), magnitude(b.small_));
      return BigInt(g);
    }
    return BigInt(Wide(boost::multiprecision::gcd(a.to_wide(), b.to_wide())));
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.str(); }

 private:
  static std::uint64_t magnitude(std::int64_t v) {
    return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
  }

  void set_wide(const Wide& w) {
    if (w >= std::numeric_limits<std::int64_t>::min() && w <= std::numeric_limits<std::int64_t>::max()) {
      small_ = static_cast<std::int64_t>(w);
      wide_.reset();
    } else {
      small_ = 0;
      wide_ = std::make_unique<Wide>(w);
    }
  }

  std::int64_t small_ = 0;
  std::unique_ptr<Wide> wide_;  // engaged iff the value lies outside int64
};

inline BigInt abs_of(const BigInt& x) { return x.sign() < 0 ? -x : x; }

inline BigInt lcm_of(const BigInt& a, const BigInt& b) {
  if (a.sign() == 0 || b.sign() == 0) return 0;
  return abs_of(a / gcd_of(a, b) * b);
}

/// Floor division (b != 0).
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b).sign() != 0 && ((a.sign() < 0) != (b.sign() < 0))) --q;
  return q;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }

/// Extended gcd: returns (g, x, y) with a*x + b*y = g >= 0.
inline std::tuple<BigInt, BigInt, BigInt> xgcd(BigInt a, BigInt b) {
  BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b.sign() != 0) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    a = b;
    b = r;
    BigInt t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (a.sign() < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  template <std::integral T>
  Rat(T v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.sign() == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return num_.sign(); }

  friend Rat operator+(const Rat& x, const Rat& y) {
    if (x.den_ == y.den_) return Rat(x.num_ + y.num_, x.den_);
    return Rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    if (x.den_ == y.den_) return Rat(x.num_ - y.num_, x.den_);
    return Rat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    if (x.num_.sign() == 0 || y.num_.sign() == 0) return Rat();
    if (x.den_ == BigInt(1) && y.den_ == BigInt(1)) return Rat(x.num_ * y.num_);
    // Cross-cancel before multiplying so the result is already reduced.
    BigInt g1 = gcd_of(x.num_, y.den_);
    BigInt g2 = gcd_of(y.num_, x.den_);
    Rat r;
    r.num_ = (x.num_ / g1) * (y.num_ / g2);
    r.den_ = (x.den_ / g2) * (y.den_ / g1);
    return r;
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num_.sign() == 0) throw std::domain_error("Rat division by zero");
    Rat inv;
    inv.num_ = y.sign() < 0 ? -y.den_ : y.den_;
    inv.den_ = abs_of(y.num_);
    return x * inv;
  }
  Rat operator-() const {
    Rat r = *this;
    r.num_ = -r.num_;
    return r;
  }
  Rat& operator+=(const Rat& y) { return *this = *this + y; }
  Rat& operator-=(const Rat& y) { return *this = *this - y; }
  Rat& operator*=(const Rat& y) { return *this = *this * y; }
  Rat& operator/=(const Rat& y) { return *this = *this / y; }

  friend bool operator==(const Rat& x, const Rat& y) { return x.num_ == y.num_ && x.den_ == y.den_; }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
    if (x.den_ == y.den_) return x.num_ <=> y.num_;
    return x.num_ * y.den_ <=> y.num_ * x.den_;
  }

 private:
  void normalize() {
    if (den_.sign() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (den_ == BigInt(1)) return;
    BigInt g = gcd_of(num_, den_);
    if (!(g == BigInt(1))) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }

  BigInt num_, den_;
};

inline const BigInt& numerator_of(const Rat& r) { return r.num(); }
inline const BigInt& denominator_of(const Rat& r) { return r.den(); }

inline bool is_integral(const Rat& r) { return r.den() == BigInt(1); }

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rat& r) {
  if (is_integral(r)) return r.num().str();
  return r.num().str() + "/" + r.den().str();
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << to_string(r); }

/// Parses "p" or "p/q" with an optional leading sign. Throws std::invalid_argument.
inline Rat parse_rat(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    BigInt v = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad digit in '" + std::string(s) + "'");
      v = v * BigInt(10) + BigInt(s[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.sign() == 0) throw std::invalid_argument("zero denominator");
  return Rat(parse_int(text.substr(0, slash)), den);
}

}  // namespace fracideal
