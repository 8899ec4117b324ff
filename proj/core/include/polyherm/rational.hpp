#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyherm {

/// Raised on inversion of an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {
struct BigRational;
}

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator.
///
/// Values whose numerator and denominator fit in a signed 64-bit word are held
/// inline and combined with overflow-checked integer arithmetic; anything
/// larger is promoted to a GMP rational and demoted again as soon as it fits.
/// Instances are immutable once built and safe to share across threads.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == kMin) *this = from_big_ratio(std::to_string(n), "1");
  }
  Rational(std::int64_t n, std::int64_t d);

  /// Accepts "p" or "p/q" with optional leading sign on p; q must be nonzero.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  /// Canonical "p/q" rendering (always with the slash, q > 0).
  std::string str() const;
  double to_double() const;

  Rational inverse() const;
  Rational operator-() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static constexpr std::int64_t kMin = INT64_MIN;

  static Rational raw(std::int64_t n, std::int64_t d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    return r;
  }
  static Rational from_big_ratio(const std::string& num, const std::string& den);

  static Rational add_slow(const Rational& a, const Rational& b);
  static Rational sub_slow(const Rational& a, const Rational& b);
  static Rational mul_slow(const Rational& a, const Rational& b);

  friend struct detail::BigRational;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const detail::BigRational> big_;
};

namespace detail {

inline bool checked_mul(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_mul_overflow(a, b, &out) && out != INT64_MIN;
}
inline bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) {
  return !__builtin_add_overflow(a, b, &out) && out != INT64_MIN;
}

}  // namespace detail

inline Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    std::int64_t n;
    if (a.den_ == 1 && b.den_ == 1) {
      if (detail::checked_add(a.num_, b.num_, n)) return Rational::raw(n, 1);
    } else {
      const std::int64_t g = std::gcd(a.den_, b.den_);
      std::int64_t l, r, d;
      if (detail::checked_mul(a.num_, b.den_ / g, l) && detail::checked_mul(b.num_, a.den_ / g, r) &&
          detail::checked_add(l, r, n) && detail::checked_mul(a.den_, b.den_ / g, d)) {
        if (n == 0) return Rational();
        const std::int64_t h = std::gcd(n, d);
        return Rational::raw(n / h, d / h);
      }
    }
  }
  return Rational::add_slow(a, b);
}

inline Rational operator-(const Rational& a, const Rational& b) {
  if (!b.big_) return a + Rational::raw(-b.num_, b.den_);
  return Rational::sub_slow(a, b);
}

inline Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    std::int64_t n, d;
    if (a.den_ == 1 && b.den_ == 1) {
      if (detail::checked_mul(a.num_, b.num_, n)) return Rational::raw(n, 1);
    } else {
      const std::int64_t g1 = std::gcd(a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_, a.den_);
      if (detail::checked_mul(a.num_ / g1, b.num_ / g2, n) &&
          detail::checked_mul(a.den_ / g2, b.den_ / g1, d))
        return Rational::raw(n, d);
    }
  }
  return Rational::mul_slow(a, b);
}

inline Rational Rational::operator-() const {
  if (!big_) return raw(-num_, den_);
  return Rational() - *this;
}

}  // namespace polyherm
