#pragma once

#include <complex>
#include <string>

#include "polyherm/rational.hpp"

namespace polyherm {

/// Exact element a + b·i + c·√2 + d·i·√2 of the field ℚ(i, √2).
///
/// This is the scalar ring for every symbolic object in the library: the
/// imaginary unit and √2 both occur as coefficients in the connection and
/// addition formulas, so everything stays exactly representable.
class CoeffQi2 {
 public:
  CoeffQi2() = default;
  CoeffQi2(std::int64_t n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  CoeffQi2(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  CoeffQi2(Rational a, Rational b, Rational c = {}, Rational d = {})
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static CoeffQi2 i() { return {0, 1}; }
  static CoeffQi2 sqrt2() { return {0, 0, 1}; }
  /// √2^k, exact.
  static CoeffQi2 sqrt2_pow(int k);
  /// i^k for any integer k.
  static CoeffQi2 i_pow(int k);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
  bool has_sqrt2() const { return !c_.is_zero() || !d_.is_zero(); }

  CoeffQi2 conj() const { return {a_, -b_, c_, -d_}; }
  CoeffQi2 inverse() const;
  CoeffQi2 operator-() const { return {-a_, -b_, -c_, -d_}; }

  std::complex<double> to_complex() const;
  /// Human-readable form such as "3 - 2*i + sqrt2 + i*sqrt2".
  std::string pretty() const;

  friend CoeffQi2 operator+(const CoeffQi2& x, const CoeffQi2& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
  }
  friend CoeffQi2 operator-(const CoeffQi2& x, const CoeffQi2& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
  }
  friend CoeffQi2 operator*(const CoeffQi2& x, const CoeffQi2& y) {
    if (!x.has_sqrt2() && !y.has_sqrt2())
      return {x.a_ * y.a_ - x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    const Rational two(2);
    return {x.a_ * y.a_ - x.b_ * y.b_ + two * (x.c_ * y.c_ - x.d_ * y.d_),
            x.a_ * y.b_ + x.b_ * y.a_ + two * (x.c_ * y.d_ + x.d_ * y.c_),
            x.a_ * y.c_ + x.c_ * y.a_ - x.b_ * y.d_ - x.d_ * y.b_,
            x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_};
  }
  friend CoeffQi2 operator/(const CoeffQi2& x, const CoeffQi2& y) { return x * y.inverse(); }

  CoeffQi2& operator+=(const CoeffQi2& o) { return *this = *this + o; }
  CoeffQi2& operator-=(const CoeffQi2& o) { return *this = *this - o; }
  CoeffQi2& operator*=(const CoeffQi2& o) { return *this = *this * o; }

  friend bool operator==(const CoeffQi2& x, const CoeffQi2& y) = default;

 private:
  Rational a_, b_, c_, d_;
};

}  // namespace polyherm
