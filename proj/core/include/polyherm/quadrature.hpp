#pragma once

#include <complex>
#include <vector>

/// Gauss–Hermite rules for the weight e^{−t²} and their products over ℂ.
namespace polyherm::quad {

struct QuadGrid {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive, Σ = √π

  std::size_t size() const { return nodes.size(); }
};

/// n-point rule: Golub–Welsch eigenvalues, then Newton-polished nodes and
/// Christoffel weights from the orthonormal recurrence. Cached per n.
/// Throws std::invalid_argument for n = 0.
const QuadGrid& gauss_hermite(unsigned n);

struct ComplexNode {
  std::complex<double> point;
  double weight;
};

/// Tensor rule for ∫_ℂ f(z) e^{−s|z|²} dλ(z): z = (x + iy)/√s and weights
/// w_x·w_y/s, so Σ weight·f(point) approximates the integral. Row-major in
/// (x, y).
std::vector<ComplexNode> complex_rule(unsigned n, double s = 1.0);

}  // namespace polyherm::quad
