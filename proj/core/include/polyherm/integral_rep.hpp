#pragma once

#include <complex>

#include "polyherm/errors.hpp"
#include "polyherm/multi_index.hpp"

/// Integral representations of H_M through Gaussian kernels on ℂ².
namespace polyherm::intrep {

using cd = std::complex<double>;

inline constexpr unsigned kDefaultNodes = 40;

/// α, β with μ = αβ real and positive.
struct Pair {
  cd alpha{1.0, 0.0};
  cd beta{1.0, 0.0};
  /// Throws DomainError unless αβ > 0.
  double mu() const;
};

/// ∫_ℂ u^a ū^b exp(−μ|u|² + α u X̄ − β ū X) dλ(u).
cd moment(unsigned a, unsigned b, const Pair& ab, cd X, unsigned nodes = kDefaultNodes);

/// H_M(z, w) from the kernel with parameters (α, β) in u and (α', β') in v,
/// evaluated at X = ξ, Y = ξ*.
cd intrep0(const MultiIndex4& M, const Pair& first, const Pair& second, cd z, cd w, unsigned nodes = kDefaultNodes);

/// H_M(z/√2, w/√2) from ∫ S_M(u, v) E(u, v | z, w) with S_M the product of
/// the auxiliary variables in (u, v).
cd intrep(const MultiIndex4& M, const Pair& ab, cd z, cd w, unsigned nodes = kDefaultNodes);

/// The α = −β = i case written out: (−i)^{|M|} √2^{−|M|}/π² e^{|z|²+|w|²}
/// ∫ S_M(u, v) e^{−|u|²−|v|²+2i Re(u z̄ + v w̄)}.
cd intreppc(const MultiIndex4& M, cd z, cd w, unsigned nodes = kDefaultNodes);

}  // namespace polyherm::intrep
