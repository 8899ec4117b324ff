#include "polyherm/rational.hpp"

#include <gmpxx.h>

#include <cctype>

namespace polyherm {

namespace detail {

struct BigRational {
  mpq_class value;

  static mpq_class of(const Rational& r) {
    if (r.big_) return r.big_->value;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), r.num_);
    mpz_set_si(q.get_den_mpz_t(), r.den_);
    return q;
  }

  static bool fits(const mpz_class& z) { return z.fits_slong_p() && z != mpz_class(INT64_MIN); }

  /// Demotes to the inline form whenever both parts fit.
  static Rational wrap(mpq_class q) {
    q.canonicalize();
    static_assert(sizeof(long) == sizeof(std::int64_t));
    if (fits(q.get_num()) && fits(q.get_den()))
      return Rational::raw(q.get_num().get_si(), q.get_den().get_si());
    Rational r;
    auto big = std::make_shared<BigRational>();
    big->value = std::move(q);
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::move(big);
    return r;
  }
};

}  // namespace detail

using detail::BigRational;

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (n == kMin || d == kMin) {
    *this = from_big_ratio(std::to_string(n), std::to_string(d));
    return;
  }
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n, d);
  num_ = g ? n / g : 0;
  den_ = g ? d / g : 1;
  if (num_ == 0) den_ = 1;
}

Rational Rational::from_big_ratio(const std::string& num, const std::string& den) {
  mpq_class q;
  q.get_num() = mpz_class(num, 10);
  q.get_den() = mpz_class(den, 10);
  if (q.get_den() == 0) throw DivisionByZero("rational with zero denominator");
  return BigRational::wrap(std::move(q));
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  return from_big_ratio(n, std::string(den));
}

bool Rational::is_integer() const { return big_ ? big_->value.get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return (num_ > 0) - (num_ < 0);
}

std::string Rational::str() const {
  if (big_) return big_->value.get_num().get_str() + "/" + big_->value.get_den().get_str();
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Rational::to_double() const {
  if (big_) return big_->value.get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (!big_) {
    if (num_ < 0) return raw(-den_, -num_);
    return raw(den_, num_);
  }
  mpq_class q = 1 / big_->value;
  return BigRational::wrap(std::move(q));
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
  return BigRational::wrap(BigRational::of(a) + BigRational::of(b));
}

Rational Rational::sub_slow(const Rational& a, const Rational& b) {
  return BigRational::wrap(BigRational::of(a) - BigRational::of(b));
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
  return BigRational::wrap(BigRational::of(a) * BigRational::of(b));
}

bool operator==(const Rational& a, const Rational& b) {
  // Canonical forms make the inline and big representations disjoint.
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return a.big_->value == b.big_->value;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(BigRational::of(a), BigRational::of(b));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

}  // namespace polyherm
