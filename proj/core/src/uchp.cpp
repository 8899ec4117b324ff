#include "polyherm/uchp.hpp"

#include <map>
#include <mutex>

#include "polyherm/multi_index.hpp"

namespace polyherm::uchp {

namespace {

Poly2 u_pow(unsigned m, unsigned n) { return Poly2::monomial({m, n}); }

}  // namespace

Poly2 operational(unsigned m, unsigned n) {
  Poly2 term = u_pow(m, n);
  Poly2 sum;
  Rational inv_fact(1);
  for (unsigned k = 0; !term.is_zero(); ++k) {
    if (k > 0) inv_fact /= Rational(k);
    const CoeffQi2 c = (k % 2 ? -inv_fact : inv_fact);
    sum += c * term;
    term = term.diff(kU).diff(kUbar);
  }
  return sum;
}

Poly2 rodrigues(unsigned m, unsigned n) {
  // Cofactor P of e^{−uū}: ∂u acts as ∂u − ū, ∂ū as ∂ū − u.
  Poly2 p(1);
  for (unsigned k = 0; k < n; ++k) p = p.diff(kU) - p.mul_var(kUbar);
  for (unsigned k = 0; k < m; ++k) p = p.diff(kUbar) - p.mul_var(kU);
  return (m + n) % 2 ? -p : p;
}

Poly1 real_hermite(unsigned n) {
  Poly1 prev(1);
  if (n == 0) return prev;
  Poly1 cur = CoeffQi2(2) * Poly1::variable(0);
  for (unsigned k = 1; k < n; ++k) {
    Poly1 next = CoeffQi2(2) * cur.mul_var(0) - CoeffQi2(static_cast<std::int64_t>(2 * k)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly2 from_real(unsigned m, unsigned n) {
  const CoeffQi2 half(Rational(1, 2));
  const Poly2 u = Poly2::variable(kU);
  const Poly2 ubar = Poly2::variable(kUbar);
  const std::array<Poly2, 1> x{half * (u + ubar)};
  // 1/(2i) = −i/2
  const std::array<Poly2, 1> y{CoeffQi2(0, Rational(-1, 2)) * (u - ubar)};
  Poly2 sum;
  for (unsigned j = 0; j <= m; ++j) {
    for (unsigned k = 0; k <= n; ++k) {
      const Rational denom(static_cast<std::int64_t>(factorial(j) * factorial(k) * factorial(m - j) * factorial(n - k)));
      CoeffQi2 c = CoeffQi2::i_pow(static_cast<int>(j + k)) * CoeffQi2(Rational(1) / denom);
      if (k % 2) c = -c;
      sum += c * (real_table(m + n - j - k).substitute<2>(x) * real_table(j + k).substitute<2>(y));
    }
  }
  const Rational pref = Rational(static_cast<std::int64_t>(factorial(m) * factorial(n))) /
                        Rational(std::int64_t{1} << (m + n));
  return CoeffQi2(pref) * sum;
}

const Poly2& table(unsigned m, unsigned n) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, Poly2> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({m, n});
  if (it == cache.end()) it = cache.emplace(std::pair{m, n}, operational(m, n)).first;
  return it->second;
}

const Poly1& real_table(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, Poly1> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, real_hermite(n)).first;
  return it->second;
}

NumericTable::NumericTable(std::complex<double> a, std::complex<double> b, unsigned max_m, unsigned max_n)
    : max_m_(max_m), max_n_(max_n), values_((max_m + 1) * (max_n + 1)) {
  const unsigned w = max_n + 1;
  values_[0] = 1.0;
  for (unsigned k = 1; k <= max_n; ++k) values_[k] = b * values_[k - 1];
  for (unsigned j = 0; j < max_m; ++j) {
    for (unsigned k = 0; k <= max_n; ++k) {
      std::complex<double> next = a * values_[j * w + k];
      if (k > 0) next -= static_cast<double>(k) * values_[j * w + k - 1];
      values_[(j + 1) * w + k] = next;
    }
  }
}

std::complex<double> value(unsigned m, unsigned n, std::complex<double> a, std::complex<double> b) {
  return NumericTable(a, b, m, n)(m, n);
}

double real_value(unsigned n, double x) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 2.0 * x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = 2.0 * x * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace polyherm::uchp
