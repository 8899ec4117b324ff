#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "polyherm/multi_index.hpp"
#include "polyherm/sparse_poly.hpp"

/// Bivariate poly-analytic Hermite polynomials
/// H_{m,n,m',n'}(z,w) = H_{m,n}(ξ, ξ̄)·H_{m',n'}(ξ*, ξ̃).
namespace polyherm::bchp {

enum class Route { compose, rodrigues, operational, binomial };

const char* route_name(Route r);
std::optional<Route> parse_route(std::string_view name);

/// Product of the two substituted univariate polynomials (ground truth).
Poly4 compose(const MultiIndex4& M);
/// (−1)^{|M|} e^{W} A_ξ̄^m A_ξ^n A_ξ̃^{m'} A_ξ*^{n'} e^{−W}, W = 2(zz̄ + ww̄).
Poly4 rodrigues(const MultiIndex4& M);
/// e^{−(A_ξA_ξ̄ + A_ξ*A_ξ̃)}(ξ^m ξ̄^n ξ*^{m'} ξ̃^{n'}).
Poly4 operational(const MultiIndex4& M);
/// 2^{−|M|/2} times the (4,2)-binomial sum of univariate polynomials at
/// √2-scaled arguments.
Poly4 binomial(const MultiIndex4& M);
Poly4 build(const MultiIndex4& M, Route r);

/// Shared cache of compose(M); thread-safe, references stay valid.
const Poly4& table(const MultiIndex4& M);

/// Substitutes u ↦ u_image, ū ↦ ubar_image in a univariate polynomial.
Poly4 substitute(const Poly2& p, const Poly4& u_image, const Poly4& ubar_image);
/// P(z̄, z, w̄, w): exchanges each variable with its partner, coefficients kept.
Poly4 swap_partners(const Poly4& p);
/// P evaluated at (z̄, −w̄) in place of (z, w).
Poly4 reflect_w(const Poly4& p);

/// Floating H_M(z, w) at a genuine complex point, via the univariate recurrence.
std::complex<double> value(const MultiIndex4& M, std::complex<double> z, std::complex<double> w);

struct ExactCheck {
  bool pass = true;
  std::string witness;  // empty on pass
};

/// Addition formula H_M(z+z', w+w') = 2^{−|M|/2} Σ_J C(M,J) H_J(√2z,√2w) H_{M−J}(√2z',√2w'),
/// proven by exact evaluation on an integer grid of (degree + 1) points per
/// variable in all eight variables.
ExactCheck runge_check(const MultiIndex4& M);

enum class Form { as_printed, corrected };

/// H_{M+N} = Σ_{J ≤ M∧Nᵗ} (−1)^{|J|} J! C(M,J) C(N,Jᵗ) H_{M−J} H_{N−Jᵗ}, as an
/// exact Poly4 identity. The as-printed form omits the J! weight.
ExactCheck quadratic_check(const MultiIndex4& M, const MultiIndex4& N, Form form = Form::corrected);

/// Both sides of the linearization of H_{m,n}(z,z̄)·H_{m',n'}(z̄,z) as Poly2 in (u, ū).
std::pair<Poly2, Poly2> linearization_sides(const MultiIndex4& M);

/// Univariate addition formula with factorial denominators:
/// H_{m,n}(z+w, z̄+w̄) = m!n!/√2^{m+n} Σ_{j,k} H_{m−j,n−k}(√2z) H_{j,k}(√2w) / ((m−j)!(n−k)! j! k!).
ExactCheck runge_univariate_check(unsigned m, unsigned n);
/// The same sum with the printed denominators (m−j)(n−k)j; reports the first
/// vanishing denominator when the printed sum is undefined.
ExactCheck runge_univariate_as_printed(unsigned m, unsigned n);

}  // namespace polyherm::bchp
