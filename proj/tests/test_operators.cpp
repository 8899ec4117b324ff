#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "polyherm/bchp.hpp"
#include "polyherm/operators.hpp"

using namespace polyherm;
using namespace polyherm::ops;

namespace {

const CoeffQi2 I = CoeffQi2::i();
const Poly4 z = var(Var::z), zb = var(Var::zbar), w = var(Var::w), wb = var(Var::wbar);
const Poly4 xi = z + I * w, xibar = zb - I * wb, xistar = zb + I * wb, xitilde = z - I * w;
constexpr Aux kAux[] = {Aux::xi, Aux::xibar, Aux::xistar, Aux::xitilde};

Poly4 H(const MultiIndex4& M) { return oracle::to_poly4(oracle::bchp(M)); }

unsigned slot(const MultiIndex4& M, int s) { return M.as_array()[s]; }

MultiIndex4 shifted(const MultiIndex4& M, int s, int delta) {
  auto a = M.as_array();
  a[s] = static_cast<unsigned>(static_cast<int>(a[s]) + delta);
  return MultiIndex4::from_array(a);
}

Poly4 random_poly(std::mt19937_64& rng, unsigned degree) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::uniform_int_distribution<unsigned> e(0, degree);
  std::vector<std::pair<Poly4::Exponents, CoeffQi2>> raw;
  for (int k = 0; k < 6; ++k) {
    Poly4::Exponents x{};
    unsigned left = degree;
    for (auto& v : x) left -= (v = std::min(left, e(rng)));
    raw.push_back({x, CoeffQi2(Rational(c(rng)), Rational(c(rng)))});
  }
  return Poly4::from_exponent_terms(raw);
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("A operator examples") {
    CHECK(A(Aux::xi)(xi) == Poly4(1));
    CHECK(A(Aux::xi)(xibar).is_zero());
    CHECK(A(Aux::xibar)(H({1, 1, 0, 0})) == xi);
  }

  TEST_CASE("A operators act as derivations in the auxiliary variables") {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Poly4 image = A(kAux[a])(aux_poly(kAux[b]));
        CHECK(image == (a == b ? Poly4(1) : Poly4()));
      }
  }

  TEST_CASE("raising and lowering examples") {
    CHECK(raising(Aux::xi)(Poly4(1)) == xi);
    CHECK(lowering(Aux::xi)(H({2, 0, 0, 0})) == CoeffQi2(2) * xi);
    CHECK(lowering(Aux::xistar)(Poly4(1)).is_zero());
  }

  TEST_CASE("printed labels attach the primed raising operators to the wrong slot") {
    CHECK(raising_as_printed(Aux::xistar)(Poly4(1)) == xitilde);
    CHECK(raising_as_printed(Aux::xitilde)(Poly4(1)) == xistar);
    CHECK(raising(Aux::xistar)(Poly4(1)) == xistar);
  }

  TEST_CASE("lowering and raising laws for every index <= 3") {
    for (const auto& M : indices_with_slots_le(3)) {
      const Poly4 h = H(M);
      for (int s = 0; s < 4; ++s) {
        const unsigned c = slot(M, s);
        const Poly4 expected = c == 0 ? Poly4() : CoeffQi2(static_cast<std::int64_t>(c)) * H(shifted(M, s, -1));
        CHECK(lowering(kAux[s])(h) == expected);
        CHECK(raising(kAux[s])(h) == H(shifted(M, s, +1)));
      }
    }
  }

  TEST_CASE("Bochner eigen-relations for every index <= 3") {
    CHECK(bochner_L(Aux::xi)(Poly4(1)).is_zero());
    CHECK(bochner_L(Aux::xi)(H({2, 1, 0, 0})) == CoeffQi2(2) * H({2, 1, 0, 0}));
    CHECK(bochner_L(Aux::xistar)(H({0, 0, 3, 0})) == CoeffQi2(3) * H({0, 0, 3, 0}));
    for (const auto& M : indices_with_slots_le(3)) {
      const Poly4 h = H(M);
      for (int s = 0; s < 4; ++s)
        CHECK(bochner_L(kAux[s])(h) == CoeffQi2(static_cast<std::int64_t>(slot(M, s))) * h);
    }
  }

  TEST_CASE("operator identities") {
    const CoeffQi2 quarter(Rational(1, 4)), iquarter(Rational(0), Rational(1, 4)), half(Rational(1, 2));
    CHECK(op_equal(A(Aux::xi) * A(Aux::xibar), A(Aux::xibar) * A(Aux::xi), 4).equal);
    CHECK(op_equal(A(Aux::xi) * A(Aux::xibar) + A(Aux::xistar) * A(Aux::xitilde), half * laplacian(), 4).equal);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) CHECK(op_equal(A(kAux[a]) * A(kAux[b]), A(kAux[b]) * A(kAux[a]), 6).equal);
    CHECK(op_equal(A(Aux::xi) * A(Aux::xibar), quarter * laplacian() + iquarter * box(), 6).equal);
    CHECK(op_equal(A(Aux::xistar) * A(Aux::xitilde), quarter * laplacian() - iquarter * box(), 6).equal);
    for (Aux a : kAux) CHECK_MESSAGE(op_equal(bochner_S(a), bochner_L(a), 6).equal, aux_name(a));
  }

  TEST_CASE("op_equal reports a witness on failure") {
    const auto r = op_equal(A(Aux::xi), A(Aux::xibar), 1);
    CHECK_FALSE(r.equal);
    REQUIRE(r.witness.has_value());
    CHECK_FALSE(r.residual.is_zero());
    // Monomials of total degree <= 1 in four variables.
    CHECK(op_equal(identity(), identity(), 1).monomials_checked == 5);
  }

  TEST_CASE("linearity and associativity on random inputs") {
    std::mt19937_64 rng(99);
    const LinOp ops[] = {A(Aux::xi), raising(Aux::xistar), bochner_L(Aux::xitilde), laplacian(), box(),
                         euler(Var::w), coupled_euler(Var::z, Var::wbar)};
    for (int trial = 0; trial < 20; ++trial) {
      const Poly4 p = random_poly(rng, 4), q = random_poly(rng, 4);
      const CoeffQi2 alpha(Rational(trial - 7, 3), Rational(2, trial + 1));
      for (const LinOp& t : ops) CHECK(t(alpha * p + q) == alpha * t(p) + t(q));
      const LinOp &a = ops[trial % 7], &b = ops[(trial + 2) % 7], &c = ops[(trial + 5) % 7];
      CHECK(((a * b) * c)(p) == (a * (b * c))(p));
    }
  }

  TEST_CASE("euler, conjugate and power generators") {
    CHECK(euler(Var::z)(z * z * w) == CoeffQi2(2) * z * z * w);
    CHECK(coupled_euler(Var::w, Var::z)(z * z) == CoeffQi2(2) * w * z);
    CHECK(conjugate(A(Aux::xi))(xibar) == Poly4(1));
    CHECK(pow(A(Aux::xi), 3)(xi * xi * xi) == Poly4(6));
    CHECK(pow(A(Aux::xi), 0)(xi) == xi);
  }

  TEST_CASE("terminating exponential shifts its argument") {
    // exp(D_xi) p(xi) = p(xi + 1)
    const LinOp shift = exp_nilpotent(A(Aux::xi), CoeffQi2(1));
    CHECK(shift(xi * xi) == (xi + Poly4(1)) * (xi + Poly4(1)));
    CHECK_THROWS_AS(exp_nilpotent(multiply(Var::z), CoeffQi2(1))(z), std::domain_error);
  }

  TEST_CASE("weighted action follows the product rule with the gaussian") {
    const WeightedPoly one{Poly4(1)};
    CHECK(A(Aux::xibar).weighted_apply(one) == WeightedPoly{CoeffQi2(-1) * xi});
    CHECK(A(Aux::xi).weighted_apply(one) == WeightedPoly{CoeffQi2(-1) * xibar});
    CHECK(A(Aux::xi).weighted_apply(WeightedPoly{}) == WeightedPoly{});
    CHECK(diff(Var::z).weighted_apply(WeightedPoly{z}) == WeightedPoly{Poly4(1) - CoeffQi2(2) * zb * z});
    const LinOp mixed = raising(Aux::xi) * A(Aux::xistar);
    CHECK(mixed.has_weighted_action());
    CHECK_FALSE(exp_nilpotent(A(Aux::xi), CoeffQi2(1)).has_weighted_action());
    CHECK_THROWS_AS(exp_nilpotent(A(Aux::xi), CoeffQi2(1)).weighted_apply(one), std::logic_error);
  }
}
