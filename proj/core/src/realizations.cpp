#include "polyherm/realizations.hpp"

#include "polyherm/operators.hpp"

namespace polyherm::bchp {

const char* chain_name(Chain c) {
  switch (c) {
    case Chain::raise_primed: return "raise-primed";
    case Chain::raise_unprimed: return "raise-unprimed";
    case Chain::from_one: return "from-one";
    case Chain::from_antiholo: return "from-antiholo";
    case Chain::from_holo: return "from-holo";
  }
  return "?";
}

std::optional<Chain> parse_chain(std::string_view name) {
  for (Chain c : kAllChains)
    if (name == chain_name(c)) return c;
  return std::nullopt;
}

namespace {

Poly4 apply_power(const ops::LinOp& op, unsigned k, Poly4 p) {
  for (unsigned i = 0; i < k; ++i) p = op(p);
  return p;
}

Poly4 aux_power(Aux a, unsigned k) {
  Poly4 r(1);
  const Poly4 x = aux_poly(a);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Poly4 realize(const MultiIndex4& M, Chain c, Form form) {
  using ops::raising;
  switch (c) {
    case Chain::raise_primed:
      return apply_power(raising(Aux::xistar), M.mp, apply_power(raising(Aux::xitilde), M.np, table({M.m, M.n, 0, 0})));
    case Chain::raise_unprimed:
      return apply_power(raising(Aux::xi), M.m, apply_power(raising(Aux::xibar), M.n, table({0, 0, M.mp, M.np})));
    case Chain::from_one: {
      const ops::LinOp mp_op = form == Form::corrected
                                   ? raising(Aux::xistar)
                                   : ops::multiply(Aux::xistar) - CoeffQi2::i() * ops::A(Aux::xitilde);
      Poly4 p = apply_power(raising(Aux::xitilde), M.np, Poly4(1));
      p = apply_power(mp_op, M.mp, std::move(p));
      p = apply_power(raising(Aux::xibar), M.n, std::move(p));
      return apply_power(raising(Aux::xi), M.m, std::move(p));
    }
    case Chain::from_antiholo: {
      const Poly4 seed = aux_power(Aux::xibar, M.n) * aux_power(Aux::xitilde, M.np);
      return apply_power(raising(Aux::xi), M.m, apply_power(raising(Aux::xistar), M.mp, seed));
    }
    case Chain::from_holo: {
      const Poly4 seed = aux_power(Aux::xi, M.m) * aux_power(Aux::xistar, M.mp);
      return apply_power(raising(Aux::xibar), M.n, apply_power(raising(Aux::xitilde), M.np, seed));
    }
  }
  return {};
}

}  // namespace polyherm::bchp
