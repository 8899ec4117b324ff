#pragma once

#include <array>
#include <complex>
#include <vector>

#include "polyherm/bchp.hpp"

/// Hermite functions on ℝ² and their two-dimensional Fourier–Wigner transform
/// V(f, g)(p, q) = (1/2π) ∫ e^{i⟨y,q⟩} f(y + p/2) conj(g(y − p/2)) dy.
namespace polyherm::wigner {

using cd = std::complex<double>;
using Vec2 = std::array<double, 2>;

/// e^{−|y|²/2} times a polynomial part: H_{a,b}(y₁+iy₂, y₁−iy₂) for the
/// complex kind, H_a(y₁)H_b(y₂) for the real tensor kind.
struct HermiteFn {
  enum class Kind { complex, real_tensor };
  Kind kind = Kind::complex;
  unsigned a = 0, b = 0;

  static HermiteFn complex_fn(unsigned a, unsigned b) { return {Kind::complex, a, b}; }
  static HermiteFn tensor(unsigned a, unsigned b) { return {Kind::real_tensor, a, b}; }

  cd polynomial(double y1, double y2) const;
  cd operator()(double y1, double y2) const;
};

inline constexpr unsigned kDefaultNodes = 40;

/// Gauss–Hermite evaluation after extracting e^{−|y|² − |p|²/4}.
cd transform(const HermiteFn& f, const HermiteFn& g, const Vec2& p, const Vec2& q, unsigned nodes = kDefaultNodes);

/// 2(−1)^{m'+n} e^{|z|²+|w|²} V(h_{m,n'}, h_{n,m'})(p, q), p = (Re 2z, Re 2w),
/// q = (Im 2z, Im 2w). The printed second function h_{m',n} is the
/// conjugate of the one that works; Form::as_printed uses it.
cd bchp_via_complex(const MultiIndex4& M, cd z, cd w, bchp::Form form = bchp::Form::corrected,
                    unsigned nodes = kDefaultNodes);

/// (−1)^{n+n'} √2^{2−|M|} e^{(|z|²+|w|²)/2} V(h_m⊗h_{m'}, h_n⊗h_{n'}) at
/// (ξ, ξ*) = (z+iw, z̄+iw̄), which equals H_M(z/√2, w/√2).
cd bchp_via_tensor_scaled(const MultiIndex4& M, cd z, cd w, unsigned nodes = kDefaultNodes);
/// The same representation solved for H_M(z, w).
cd bchp_via_tensor(const MultiIndex4& M, cd z, cd w, unsigned nodes = kDefaultNodes);

/// One-dimensional transform of real Hermite functions, and the univariate
/// representation H_{m,n}(z) = (−1)^n √2^{1−m−n} e^{|z|²/2} V₁(h_m, h_n)(√2x, √2y).
cd transform_1d(unsigned m, unsigned n, double p, double q, unsigned nodes = kDefaultNodes);
cd uchp_via_wigner(unsigned m, unsigned n, cd z, unsigned nodes = kDefaultNodes);

/// ⟨f, g⟩ over ℝ² by Gauss–Hermite.
cd inner(const HermiteFn& f, const HermiteFn& g, unsigned nodes = kDefaultNodes);

/// V(f, g) on the outer tensor grid p = √2·t, q = √2·s, t and s ranging
/// over outer_nodes Gauss–Hermite nodes per dimension; row-major in
/// (t₁, t₂, s₁, s₂).
std::vector<cd> phase_grid(const HermiteFn& f, const HermiteFn& g, unsigned outer_nodes, unsigned inner_nodes);
/// ⟨V(f,g), V(φ,ψ)⟩ from two phase grids built with the same outer_nodes.
cd phase_inner(const std::vector<cd>& fg, const std::vector<cd>& phipsi, unsigned outer_nodes);

struct MoyalValues {
  cd lhs;  // ⟨V(f,g), V(φ,ψ)⟩ over ℝ⁴
  cd rhs;  // ⟨f,φ⟩⟨ψ,g⟩
};

/// Left side by a tensor rule with outer_nodes per phase-space dimension,
/// V itself by inner_nodes per dimension.
MoyalValues moyal(const HermiteFn& f, const HermiteFn& g, const HermiteFn& phi, const HermiteFn& psi,
                  unsigned outer_nodes = 8, unsigned inner_nodes = kDefaultNodes);

}  // namespace polyherm::wigner
