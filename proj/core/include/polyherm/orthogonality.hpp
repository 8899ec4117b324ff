#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "polyherm/multi_index.hpp"

/// Inner products of Hermite polynomials against Gaussian weights.
namespace polyherm::ortho {

using cd = std::complex<double>;

inline constexpr unsigned kDefaultNodes = 30;

/// ∫_ℂ H_{m,n}(z) conj(H_{j,k}(z)) e^{−|z|²} dλ.
cd uchp_inner(unsigned m, unsigned n, unsigned j, unsigned k, unsigned nodes = kDefaultNodes);
/// ∫_ℂ H_{m,n}(z) H_{j,k}(z) e^{−|z|²} dλ, no conjugation.
cd uchp_product(unsigned m, unsigned n, unsigned j, unsigned k, unsigned nodes = kDefaultNodes);

/// Matrix of uchp_inner (conjugate = true) or uchp_product over the listed
/// (m, n) pairs, row-major.
std::vector<cd> uchp_gram(const std::vector<std::pair<unsigned, unsigned>>& idx, bool conjugate,
                          unsigned nodes = kDefaultNodes);

/// ∫_ℂ² H_M conj(H_N) e^{−2(|z|²+|w|²)} dλ through the change of variables
/// (z, w) ↦ (ξ, ξ̃), which splits the integral into two planar rules.
cd bchp_inner(const MultiIndex4& M, const MultiIndex4& N, unsigned nodes = kDefaultNodes);
/// Gram matrix G(a, b) = bchp_inner(idx[a], idx[b]), row-major, with each
/// polynomial evaluated once per node.
std::vector<cd> bchp_gram(const std::vector<MultiIndex4>& idx, unsigned nodes = kDefaultNodes);
/// The same integral by a direct four-dimensional tensor rule.
cd bchp_inner_direct(const MultiIndex4& M, const MultiIndex4& N, unsigned nodes);
/// ∫ H_M(z, w) P_N(z, w) e^{−2(|z|²+|w|²)} dλ where P_N is H_N with every
/// variable exchanged for its partner, the literal reading of H_N(Z̄, Z).
cd bchp_literal_pairing(const MultiIndex4& M, const MultiIndex4& N, unsigned nodes = kDefaultNodes);

/// Matrix of bchp_literal_pairing over idx, which must be closed under
/// (m, n, m', n') ↦ (m', n', m, n); throws std::invalid_argument otherwise.
std::vector<cd> bchp_literal_gram(const std::vector<MultiIndex4>& idx, unsigned nodes = kDefaultNodes);

/// (π²/4)·M!.
double bchp_norm_squared(const MultiIndex4& M);

}  // namespace polyherm::ortho
