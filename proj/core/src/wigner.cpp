#include "polyherm/wigner.hpp"

#include <Eigen/Core>
#include <cmath>
#include <numbers>

#include "polyherm/kahan.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/uchp.hpp"

namespace polyherm::wigner {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::numbers::sqrt2;

double sign(unsigned k) { return k % 2 ? -1.0 : 1.0; }

}  // namespace

cd HermiteFn::polynomial(double y1, double y2) const {
  if (kind == Kind::complex) return uchp::value(a, b, cd(y1, y2), cd(y1, -y2));
  return uchp::real_value(a, y1) * uchp::real_value(b, y2);
}

cd HermiteFn::operator()(double y1, double y2) const {
  return std::exp(-0.5 * (y1 * y1 + y2 * y2)) * polynomial(y1, y2);
}

cd transform(const HermiteFn& f, const HermiteFn& g, const Vec2& p, const Vec2& q, unsigned nodes) {
  const quad::QuadGrid& grid = quad::gauss_hermite(nodes);
  KahanSum<cd> sum;
  for (unsigned i = 0; i < nodes; ++i) {
    const double y1 = grid.nodes[i];
    for (unsigned j = 0; j < nodes; ++j) {
      const double y2 = grid.nodes[j];
      const cd phase = std::polar(1.0, y1 * q[0] + y2 * q[1]);
      sum += grid.weights[i] * grid.weights[j] * phase * f.polynomial(y1 + p[0] / 2, y2 + p[1] / 2) *
             std::conj(g.polynomial(y1 - p[0] / 2, y2 - p[1] / 2));
    }
  }
  return std::exp(-(p[0] * p[0] + p[1] * p[1]) / 4) / (2 * kPi) * sum.value();
}

cd bchp_via_complex(const MultiIndex4& M, cd z, cd w, bchp::Form form, unsigned nodes) {
  const HermiteFn f = HermiteFn::complex_fn(M.m, M.np);
  const HermiteFn g = form == bchp::Form::corrected ? HermiteFn::complex_fn(M.n, M.mp) : HermiteFn::complex_fn(M.mp, M.n);
  const Vec2 p{2 * z.real(), 2 * w.real()}, q{2 * z.imag(), 2 * w.imag()};
  return 2.0 * sign(M.mp + M.n) * std::exp(std::norm(z) + std::norm(w)) * transform(f, g, p, q, nodes);
}

cd bchp_via_tensor_scaled(const MultiIndex4& M, cd z, cd w, unsigned nodes) {
  const cd i(0.0, 1.0);
  const cd xi = z + i * w, xistar = std::conj(z) + i * std::conj(w);
  const Vec2 p{xi.real(), xistar.real()}, q{xi.imag(), xistar.imag()};
  const cd v = transform(HermiteFn::tensor(M.m, M.mp), HermiteFn::tensor(M.n, M.np), p, q, nodes);
  return sign(M.n + M.np) * std::pow(kSqrt2, 2.0 - M.total()) * std::exp(0.5 * (std::norm(z) + std::norm(w))) * v;
}

cd bchp_via_tensor(const MultiIndex4& M, cd z, cd w, unsigned nodes) {
  return bchp_via_tensor_scaled(M, kSqrt2 * z, kSqrt2 * w, nodes);
}

cd transform_1d(unsigned m, unsigned n, double p, double q, unsigned nodes) {
  const quad::QuadGrid& grid = quad::gauss_hermite(nodes);
  KahanSum<cd> sum;
  for (unsigned i = 0; i < nodes; ++i) {
    const double y = grid.nodes[i];
    sum += grid.weights[i] * std::polar(1.0, y * q) * (uchp::real_value(m, y + p / 2) * uchp::real_value(n, y - p / 2));
  }
  return std::exp(-p * p / 4) / std::sqrt(2 * kPi) * sum.value();
}

cd uchp_via_wigner(unsigned m, unsigned n, cd z, unsigned nodes) {
  return sign(n) * std::pow(kSqrt2, 1.0 - m - n) * std::exp(std::norm(z) / 2) *
         transform_1d(m, n, kSqrt2 * z.real(), kSqrt2 * z.imag(), nodes);
}

cd inner(const HermiteFn& f, const HermiteFn& g, unsigned nodes) {
  const quad::QuadGrid& grid = quad::gauss_hermite(nodes);
  KahanSum<cd> sum;
  for (unsigned i = 0; i < nodes; ++i)
    for (unsigned j = 0; j < nodes; ++j)
      sum += grid.weights[i] * grid.weights[j] * f.polynomial(grid.nodes[i], grid.nodes[j]) *
             std::conj(g.polynomial(grid.nodes[i], grid.nodes[j]));
  return sum.value();
}

std::vector<cd> phase_grid(const HermiteFn& f, const HermiteFn& g, unsigned outer_nodes, unsigned inner_nodes) {
  const quad::QuadGrid& outer = quad::gauss_hermite(outer_nodes);
  const quad::QuadGrid& in = quad::gauss_hermite(inner_nodes);
  const unsigned no = outer_nodes, ni = inner_nodes;

  // E(a, i) = e^{i y_i q_a} with q_a = √2·s_a.
  Eigen::MatrixXcd phase(no, ni);
  for (unsigned a = 0; a < no; ++a)
    for (unsigned i = 0; i < ni; ++i) phase(a, i) = std::polar(1.0, in.nodes[i] * kSqrt2 * outer.nodes[a]);

  std::vector<cd> out(std::size_t{no} * no * no * no);
  Eigen::MatrixXcd kernel(ni, ni);
  for (unsigned t1 = 0; t1 < no; ++t1) {
    for (unsigned t2 = 0; t2 < no; ++t2) {
      const double p1 = kSqrt2 * outer.nodes[t1], p2 = kSqrt2 * outer.nodes[t2];
      for (unsigned i = 0; i < ni; ++i)
        for (unsigned j = 0; j < ni; ++j) {
          const double y1 = in.nodes[i], y2 = in.nodes[j];
          kernel(i, j) = in.weights[i] * in.weights[j] * f.polynomial(y1 + p1 / 2, y2 + p2 / 2) *
                         std::conj(g.polynomial(y1 - p1 / 2, y2 - p2 / 2));
        }
      const Eigen::MatrixXcd v = phase * kernel * phase.transpose();
      const double scale = std::exp(-(p1 * p1 + p2 * p2) / 4) / (2 * kPi);
      for (unsigned s1 = 0; s1 < no; ++s1)
        for (unsigned s2 = 0; s2 < no; ++s2) out[((std::size_t{t1} * no + t2) * no + s1) * no + s2] = scale * v(s1, s2);
    }
  }
  return out;
}

cd phase_inner(const std::vector<cd>& fg, const std::vector<cd>& phipsi, unsigned outer_nodes) {
  const quad::QuadGrid& outer = quad::gauss_hermite(outer_nodes);
  const unsigned no = outer_nodes;
  KahanSum<cd> sum;
  std::size_t k = 0;
  for (unsigned t1 = 0; t1 < no; ++t1)
    for (unsigned t2 = 0; t2 < no; ++t2)
      for (unsigned s1 = 0; s1 < no; ++s1)
        for (unsigned s2 = 0; s2 < no; ++s2, ++k) {
          const double x = outer.nodes[t1], y = outer.nodes[t2], u = outer.nodes[s1], v = outer.nodes[s2];
          const double weight = outer.weights[t1] * outer.weights[t2] * outer.weights[s1] * outer.weights[s2] *
                                std::exp(x * x + y * y + u * u + v * v);
          sum += weight * fg[k] * std::conj(phipsi[k]);
        }
  // p = √2 t and q = √2 s in two dimensions each.
  return 4.0 * sum.value();
}

MoyalValues moyal(const HermiteFn& f, const HermiteFn& g, const HermiteFn& phi, const HermiteFn& psi,
                  unsigned outer_nodes, unsigned inner_nodes) {
  const auto fg = phase_grid(f, g, outer_nodes, inner_nodes);
  const auto pp = phase_grid(phi, psi, outer_nodes, inner_nodes);
  return {phase_inner(fg, pp, outer_nodes), inner(f, phi, inner_nodes) * inner(psi, g, inner_nodes)};
}

}  // namespace polyherm::wigner
