#pragma once

#include <complex>
#include <vector>

#include "polyherm/sparse_poly.hpp"

/// Univariate complex Hermite polynomials H_{m,n}(u, ū) and real Hermite
/// polynomials, as exact Poly2 / Poly1 values.
namespace polyherm::uchp {

/// e^{−∂u∂ū}(u^m ū^n); the finite series is the construction canon.
Poly2 operational(unsigned m, unsigned n);

/// (−1)^{m+n} e^{uū} ∂ū^m ∂u^n e^{−uū}, carried out on the polynomial
/// cofactor of the Gaussian.
Poly2 rodrigues(unsigned m, unsigned n);

/// Double sum over physicists' Hermite polynomials in x = (u+ū)/2 and
/// y = (u−ū)/(2i).
Poly2 from_real(unsigned m, unsigned n);

/// Physicists' Hermite polynomial in one variable.
Poly1 real_hermite(unsigned n);

/// Shared cache of operational(m, n). Thread-safe; references stay valid for
/// the lifetime of the process.
const Poly2& table(unsigned m, unsigned n);
const Poly1& real_table(unsigned n);

/// Floating table of H_{j,k}(a, b) for j ≤ max_m, k ≤ max_n with a and b
/// independent, from H_{j+1,k} = a·H_{j,k} − k·H_{j,k−1}, H_{0,k} = b^k.
class NumericTable {
 public:
  NumericTable(std::complex<double> a, std::complex<double> b, unsigned max_m, unsigned max_n);
  std::complex<double> operator()(unsigned m, unsigned n) const { return values_[m * (max_n_ + 1) + n]; }
  unsigned max_m() const { return max_m_; }
  unsigned max_n() const { return max_n_; }

 private:
  unsigned max_m_, max_n_;
  std::vector<std::complex<double>> values_;
};

/// H_{m,n}(a, b) through the recurrence.
std::complex<double> value(unsigned m, unsigned n, std::complex<double> a, std::complex<double> b);
/// H_{m,n}(z, z̄) at a genuine complex point.
inline std::complex<double> value(unsigned m, unsigned n, std::complex<double> z) {
  return value(m, n, z, std::conj(z));
}
/// Physicists' H_n(x) through the three-term recurrence.
double real_value(unsigned n, double x);

}  // namespace polyherm::uchp
