#pragma once

#include <optional>
#include <string_view>

#include "polyherm/bchp.hpp"

/// H_M as products of raising operators applied to simple seeds.
namespace polyherm::bchp {

enum class Chain {
  raise_primed,    // (ξ*−A_ξ̃)^{m'} (ξ̃−A_ξ*)^{n'} H_{m,n,0,0}
  raise_unprimed,  // (ξ−A_ξ̄)^m (ξ̄−A_ξ)^n H_{0,0,m',n'}
  from_one,        // all four raising powers applied to 1
  from_antiholo,   // (ξ−A_ξ̄)^m (ξ*−A_ξ̃)^{m'} (ξ̄^n ξ̃^{n'})
  from_holo,       // (ξ̄−A_ξ)^n (ξ̃−A_ξ*)^{n'} (ξ^m ξ*^{m'})
};

inline constexpr Chain kAllChains[] = {Chain::raise_primed, Chain::raise_unprimed, Chain::from_one,
                                       Chain::from_antiholo, Chain::from_holo};

const char* chain_name(Chain c);
std::optional<Chain> parse_chain(std::string_view name);

/// Applies the chain. With Form::as_printed, from_one uses ξ* − iA_ξ̃ for the
/// m' factor, as the printed chain does; the other chains print correctly.
Poly4 realize(const MultiIndex4& M, Chain c, Form form = Form::corrected);

}  // namespace polyherm::bchp
