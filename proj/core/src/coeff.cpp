#include "polyherm/coeff.hpp"

#include <cmath>
#include <numbers>

namespace polyherm {

CoeffQi2 CoeffQi2::sqrt2_pow(int k) {
  const bool neg = k < 0;
  const int e = neg ? -k : k;
  CoeffQi2 r = Rational(std::int64_t{1} << (e / 2));
  if (e % 2) r = r * sqrt2();
  return neg ? r.inverse() : r;
}

CoeffQi2 CoeffQi2::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return 1;
    case 1: return i();
    case 2: return -1;
    default: return -i();
  }
}

CoeffQi2 CoeffQi2::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(i,sqrt2)");
  // x = p + q·√2 with p, q ∈ ℚ(i); x⁻¹ = (p − q√2)/(p² − 2q²).
  const CoeffQi2 p(a_, b_), q(c_, d_);
  const CoeffQi2 norm = p * p - CoeffQi2(2) * q * q;
  // norm ∈ ℚ(i) is nonzero because √2 is irrational over ℚ(i).
  const Rational mod2 = norm.a_ * norm.a_ + norm.b_ * norm.b_;
  const CoeffQi2 norm_inv(norm.a_ / mod2, -norm.b_ / mod2);
  const CoeffQi2 num(a_, b_, -c_, -d_);
  return num * norm_inv;
}

std::complex<double> CoeffQi2::to_complex() const {
  constexpr double s = std::numbers::sqrt2;
  return {a_.to_double() + s * c_.to_double(), b_.to_double() + s * d_.to_double()};
}

namespace {

std::string rational_text(const Rational& r) {
  std::string s = r.str();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

}  // namespace

std::string CoeffQi2::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  auto part = [&out](const Rational& r, const char* unit) {
    if (r.is_zero()) return;
    std::string mag = rational_text(r.sign() < 0 ? -r : r);
    if (out.empty())
      out += r.sign() < 0 ? "-" : "";
    else
      out += r.sign() < 0 ? " - " : " + ";
    if (*unit == '\0')
      out += mag;
    else if (mag == "1")
      out += unit;
    else
      out += mag + "*" + unit;
  };
  part(a_, "");
  part(b_, "i");
  part(c_, "sqrt2");
  part(d_, "i*sqrt2");
  return out;
}

}  // namespace polyherm
