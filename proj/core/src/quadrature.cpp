#include "polyherm/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace polyherm::quad {

namespace {

struct Orthonormal {
  double value;       // p_n(x)
  double derivative;  // p_n'(x) = √(2n) p_{n−1}(x)
  double sum_squares; // Σ_{k<n} p_k(x)²
};

// Orthonormal Hermite polynomials for e^{−t²}:
// p_{k+1} = x√(2/(k+1)) p_k − √(k/(k+1)) p_{k−1}, p_0 = π^{−1/4}.
Orthonormal orthonormal(unsigned n, double x) {
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  double squares = 0.0;
  for (unsigned k = 0; k < n; ++k) {
    squares += cur * cur;
    const double next = x * std::sqrt(2.0 / (k + 1)) * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return {cur, std::sqrt(2.0 * n) * prev, squares};
}

QuadGrid build(unsigned n) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (unsigned k = 1; k < n; ++k) jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(k / 2.0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  QuadGrid g;
  g.nodes.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  for (double& x : g.nodes) {
    for (int it = 0; it < 8; ++it) {
      const Orthonormal p = orthonormal(n, x);
      const double step = p.value / p.derivative;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
  }
  for (unsigned i = 0; i < n / 2; ++i) {
    const double a = 0.5 * (g.nodes[n - 1 - i] - g.nodes[i]);
    g.nodes[i] = -a;
    g.nodes[n - 1 - i] = a;
  }
  if (n % 2) g.nodes[n / 2] = 0.0;

  g.weights.resize(n);
  for (unsigned i = 0; i < n; ++i) g.weights[i] = 1.0 / orthonormal(n, g.nodes[i]).sum_squares;
  for (unsigned i = 0; i < n / 2; ++i) g.weights[n - 1 - i] = g.weights[i];
  return g;
}

}  // namespace

const QuadGrid& gauss_hermite(unsigned n) {
  if (n == 0) throw std::invalid_argument("Gauss-Hermite rule needs at least one node");
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<QuadGrid>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<QuadGrid>(build(n));
  return *slot;
}

std::vector<ComplexNode> complex_rule(unsigned n, double s) {
  const QuadGrid& g = gauss_hermite(n);
  const double scale = 1.0 / std::sqrt(s);
  std::vector<ComplexNode> out;
  out.reserve(std::size_t{n} * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      out.push_back({{g.nodes[a] * scale, g.nodes[b] * scale}, g.weights[a] * g.weights[b] / s});
  return out;
}

}  // namespace polyherm::quad
