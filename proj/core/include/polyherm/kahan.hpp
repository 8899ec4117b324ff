#pragma once

#include <complex>

namespace polyherm {

/// Compensated (Kahan–Neumaier) accumulator for double and std::complex<double>.
template <class T>
class KahanSum;

template <>
class KahanSum<double> {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      carry_ += (sum_ - t) + x;
    else
      carry_ += (x - t) + sum_;
    sum_ = t;
  }
  KahanSum& operator+=(double x) {
    add(x);
    return *this;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

template <>
class KahanSum<std::complex<double>> {
 public:
  void add(std::complex<double> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  KahanSum& operator+=(std::complex<double> x) {
    add(x);
    return *this;
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum<double> re_, im_;
};

}  // namespace polyherm
