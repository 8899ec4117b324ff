#pragma once

#include <functional>
#include <optional>
#include <string>

#include "polyherm/sparse_poly.hpp"

/// Linear operators on Poly4, with an optional action on Gaussian-weighted
/// polynomials P·e^{−2(zz̄+ww̄)}.
namespace polyherm::ops {

/// Polynomial cofactor of the fixed Gaussian e^{−2(zz̄ + ww̄)}.
struct WeightedPoly {
  Poly4 cofactor;
  friend bool operator==(const WeightedPoly&, const WeightedPoly&) = default;
};

/// Immutable composable linear map Poly4 → Poly4.
///
/// Every generator carries its plain action; generators built from partial
/// derivatives and multiplications also carry the product-rule action on
/// weighted polynomials, and sums and compositions keep it when all parts do.
class LinOp {
 public:
  using Action = std::function<Poly4(const Poly4&)>;

  LinOp(std::string name, Action plain, std::optional<Action> weighted = std::nullopt)
      : name_(std::move(name)), plain_(std::move(plain)), weighted_(std::move(weighted)) {}

  Poly4 operator()(const Poly4& p) const { return plain_(p); }
  /// Throws std::logic_error when the operator has no weighted action.
  WeightedPoly weighted_apply(const WeightedPoly& f) const;
  bool has_weighted_action() const { return weighted_.has_value(); }
  const std::string& name() const { return name_; }

  friend LinOp operator+(const LinOp& a, const LinOp& b);
  friend LinOp operator-(const LinOp& a, const LinOp& b);
  friend LinOp operator*(const CoeffQi2& c, const LinOp& a);
  /// Composition: (a * b)(p) = a(b(p)).
  friend LinOp operator*(const LinOp& a, const LinOp& b);

 private:
  std::string name_;
  Action plain_;
  std::optional<Action> weighted_;
};

LinOp identity();
LinOp multiply(const Poly4& factor, std::string name);
LinOp multiply(Var v);
LinOp multiply(Aux a);
LinOp diff(Var v);
/// Integer power by repeated composition; pow(T, 0) is the identity.
LinOp pow(const LinOp& t, unsigned k);
/// Σ_k (c·D)^k / k!, valid only for D that strictly lowers total degree.
/// Applying it checks that property on the monomials of the input's degree
/// and throws std::domain_error if D fails it.
LinOp exp_nilpotent(const LinOp& d, const CoeffQi2& c);
/// p ↦ conj(T(conj p)).
LinOp conjugate(const LinOp& t);

/// A_ξ = ½(∂z − i∂w), A_ξ̄ = ½(∂z̄ + i∂w̄), A_ξ* = ½(∂z̄ − i∂w̄), A_ξ̃ = ½(∂z + i∂w).
LinOp A(Aux a);
/// Multiplication by the variable minus the derivative in its partner:
/// ξ − A_ξ̄, ξ̄ − A_ξ, ξ* − A_ξ̃, ξ̃ − A_ξ*. Raises the slot of that variable.
LinOp raising(Aux a);
/// A_ξ, A_ξ̄, A_ξ*, A_ξ̃; lowers the slot of the same variable.
LinOp lowering(Aux a);
/// The raising operators exactly as labelled in the printed list, which
/// attaches ξ̃ − A_ξ* to m' and ξ* − A_ξ̃ to n'.
LinOp raising_as_printed(Aux a);

/// ∂z∂z̄ + ∂w∂w̄.
LinOp laplacian();
/// ∂z∂w̄ − ∂w∂z̄.
LinOp box();
/// x·∂x.
LinOp euler(Var x);
/// u·∂v.
LinOp coupled_euler(Var u, Var v);

/// Bochner operators L_ξ = ξA_ξ − A_ξA_ξ̄, L_ξ̄ = ξ̄A_ξ̄ − A_ξA_ξ̄,
/// L_ξ* = ξ*A_ξ* − A_ξ*A_ξ̃, L_ξ̃ = ξ̃A_ξ̃ − A_ξ*A_ξ̃.
LinOp bochner_L(Aux a);
/// The same operators written in z, w coordinates through Δ, □ and the
/// Euler and coupled-Euler operators; S_ξ̄ and S_ξ̃ are the conjugates of
/// S_ξ and S_ξ*.
LinOp bochner_S(Aux a);

struct OpEqualResult {
  bool equal = true;
  std::size_t monomials_checked = 0;
  /// First monomial (z, z̄, w, w̄ exponents) where the operators differ.
  std::optional<Poly4::Exponents> witness;
  Poly4 residual;
};

/// Compares T and U on every monomial of total degree ≤ bound.
OpEqualResult op_equal(const LinOp& t, const LinOp& u, unsigned bound);

}  // namespace polyherm::ops
