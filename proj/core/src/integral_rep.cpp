#include "polyherm/integral_rep.hpp"

#include <cmath>
#include <numbers>

#include "polyherm/kahan.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/sparse_poly.hpp"

namespace polyherm::intrep {

namespace {

constexpr double kPi = std::numbers::pi;
const cd kI{0.0, 1.0};

cd power(cd x, unsigned k) {
  cd r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

// ξ^m ξ̄^n ξ*^{m'} ξ̃^{n'} with (z, z̄, w, w̄) read as (u, ū, v, v̄).
Poly4 aux_monomial(const MultiIndex4& M) {
  Poly4 p(1);
  const std::array<std::pair<Aux, unsigned>, 4> parts{
      {{Aux::xi, M.m}, {Aux::xibar, M.n}, {Aux::xistar, M.mp}, {Aux::xitilde, M.np}}};
  for (const auto& [a, k] : parts) {
    const Poly4 x = aux_poly(a);
    for (unsigned i = 0; i < k; ++i) p *= x;
  }
  return p;
}

template <class Moment>
cd sum_over_monomials(const MultiIndex4& M, const Moment& moment_of) {
  KahanSum<cd> sum;
  const Poly4 s = aux_monomial(M);
  for (const auto& term : s.terms()) {
    const auto e = Poly4::unpack(term.key);
    sum += term.coeff.to_complex() * moment_of(e[0], e[1], 0) * moment_of(e[2], e[3], 1);
  }
  return sum.value();
}

}  // namespace

double Pair::mu() const {
  const cd m = alpha * beta;
  if (!(m.real() > 0.0) || std::abs(m.imag()) > 1e-12 * std::abs(m))
    throw DomainError("alpha*beta must be a positive real number");
  return m.real();
}

cd moment(unsigned a, unsigned b, const Pair& ab, cd X, unsigned nodes) {
  const double mu = ab.mu();
  const double s = 1.0 / std::sqrt(mu);
  KahanSum<cd> sum;
  // u = t/√μ turns the weight into e^{−|t|²}.
  for (const auto& node : quad::complex_rule(nodes)) {
    const cd u = node.point * s;
    sum += node.weight * power(u, a) * power(std::conj(u), b) *
           std::exp(ab.alpha * u * std::conj(X) - ab.beta * std::conj(u) * X);
  }
  return sum.value() / mu;
}

cd intrep0(const MultiIndex4& M, const Pair& first, const Pair& second, cd z, cd w, unsigned nodes) {
  const double mu = first.mu(), mup = second.mu();
  const cd X = z + kI * w, Y = std::conj(z) + kI * std::conj(w);
  const double sign = (M.m + M.mp) % 2 ? -1.0 : 1.0;
  const cd pre = sign * mu * mup * power(first.alpha, M.m) * power(first.beta, M.n) * power(second.alpha, M.mp) *
                 power(second.beta, M.np) / (kPi * kPi) * std::exp(2.0 * (std::norm(z) + std::norm(w)));
  return pre * moment(M.m, M.n, first, X, nodes) * moment(M.mp, M.np, second, Y, nodes);
}

cd intrep(const MultiIndex4& M, const Pair& ab, cd z, cd w, unsigned nodes) {
  const double mu = ab.mu();
  const cd pre = mu * mu * power(-ab.alpha, M.m + M.np) * power(ab.beta, M.mp + M.n) /
                 (kPi * kPi * std::pow(std::numbers::sqrt2, M.total())) * std::exp(std::norm(z) + std::norm(w));
  const std::array<cd, 2> points{z, w};
  return pre * sum_over_monomials(M, [&](unsigned a, unsigned b, int which) {
           return moment(a, b, ab, points[which], nodes);
         });
}

cd intreppc(const MultiIndex4& M, cd z, cd w, unsigned nodes) {
  const std::array<cd, 2> points{z, w};
  const auto rule = quad::complex_rule(nodes);
  const auto pc_moment = [&](unsigned a, unsigned b, int which) {
    KahanSum<cd> sum;
    for (const auto& node : rule) {
      const cd u = node.point;
      sum += node.weight * power(u, a) * power(std::conj(u), b) *
             std::polar(1.0, 2.0 * (u * std::conj(points[which])).real());
    }
    return sum.value();
  };
  const cd pre = power(-kI, M.total()) / (kPi * kPi * std::pow(std::numbers::sqrt2, M.total())) *
                 std::exp(std::norm(z) + std::norm(w));
  return pre * sum_over_monomials(M, pc_moment);
}

}  // namespace polyherm::intrep
