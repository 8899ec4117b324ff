#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "polyherm/generating.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/random.hpp"
#include "polyherm/uchp.hpp"

using namespace polyherm;
using cd = std::complex<double>;

namespace {

const Poly2 u = Poly2::variable(kU), ub = Poly2::variable(kUbar);

// Oracle H_{m,n}(u, ubar) as a Poly2: the explicit sum with integer coefficients.
Poly2 explicit_sum(unsigned m, unsigned n) {
  Poly2 r;
  for (unsigned k = 0; k <= std::min(m, n); ++k) {
    const long long c = (k % 2 ? -1 : 1) * oracle::factorial(k) * oracle::choose(m, k) * oracle::choose(n, k);
    r += Poly2::monomial({m - k, n - k}, CoeffQi2(c));
  }
  return r;
}

cd ipow(cd x, unsigned k) {
  cd r = 1.0;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

double inv_fact(unsigned k) { return 1.0 / std::tgamma(k + 1.0); }

}  // namespace

TEST_SUITE("uchp") {
  TEST_CASE("operational examples") {
    CHECK(uchp::operational(0, 0) == Poly2(1));
    CHECK(uchp::operational(1, 1) == u * ub - Poly2(1));
    CHECK(uchp::operational(2, 1) == u * u * ub - CoeffQi2(2) * u);
  }

  TEST_CASE("rodrigues examples") {
    CHECK(uchp::rodrigues(1, 0) == u);
    CHECK(uchp::rodrigues(1, 1) == u * ub - Poly2(1));
  }

  TEST_CASE("real-expansion examples") {
    CHECK(uchp::from_real(0, 0) == Poly2(1));
    CHECK(uchp::from_real(1, 0) == u);
    CHECK(uchp::from_real(1, 1) == u * ub - Poly2(1));
  }

  TEST_CASE("real hermite examples and recurrence") {
    const Poly1 x = Poly1::variable(0);
    CHECK(uchp::real_hermite(0) == Poly1(1));
    CHECK(uchp::real_hermite(1) == CoeffQi2(2) * x);
    CHECK(uchp::real_hermite(2) == CoeffQi2(4) * x * x - Poly1(2));
    for (unsigned n = 0; n <= 12; ++n)
      for (double t : {-1.7, -0.2, 0.0, 0.9, 2.4})
        CHECK(uchp::real_value(n, t) == doctest::Approx(oracle::hermite(n, t)).epsilon(1e-12));
  }

  TEST_CASE("special value at the origin") {
    for (unsigned r = 0; r <= 8; ++r)
      for (unsigned s = 0; s <= 8; ++s) {
        const CoeffQi2 v = uchp::table(r, s).eval({CoeffQi2(0), CoeffQi2(0)});
        const long long expected = r == s ? (r % 2 ? -1 : 1) * oracle::factorial(r) : 0;
        CHECK(v == CoeffQi2(expected));
      }
  }

  TEST_CASE("three routes and the explicit sum agree for m, n <= 6") {
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; n <= 6; ++n) {
        const Poly2 truth = explicit_sum(m, n);
        CHECK(uchp::operational(m, n) == truth);
        CHECK(uchp::rodrigues(m, n) == truth);
        CHECK(uchp::from_real(m, n) == truth);
      }
  }

  TEST_CASE("conjugation symmetry") {
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; n <= 6; ++n) CHECK(uchp::table(m, n).conj() == uchp::table(n, m));
  }

  TEST_CASE("numeric recurrence matches the explicit sum") {
    PointSampler s(7);
    for (int trial = 0; trial < 10; ++trial) {
      const cd a = s.in_disk(2.0), b = s.in_disk(2.0);
      const uchp::NumericTable t(a, b, 10, 10);
      for (unsigned m = 0; m <= 10; ++m)
        for (unsigned n = 0; n <= 10; ++n) {
          const cd ref = oracle::uchp_value(m, n, a, b);
          CHECK(std::abs(t(m, n) - ref) <= 1e-11 * std::max(1.0, std::abs(ref)));
        }
    }
  }

  TEST_CASE("orthogonality constant pi m! n! for m+n, j+k <= 6") {
    const double pi = std::numbers::pi;
    for (unsigned m = 0; m <= 6; ++m)
      for (unsigned n = 0; m + n <= 6; ++n)
        for (unsigned j = 0; j <= 6; ++j)
          for (unsigned k = 0; j + k <= 6; ++k) {
            const cd v = ortho::uchp_inner(m, n, j, k);
            const double norm = pi * oracle::factorial(m) * oracle::factorial(n);
            if (m == j && n == k)
              CHECK(std::abs(v - norm) <= 1e-10 * norm);
            else
              CHECK(std::abs(v) <= 1e-10 * std::max(norm, pi * oracle::factorial(j) * oracle::factorial(k)));
          }
  }

  TEST_CASE("orthogonality agrees with an independent trapezoid integral") {
    for (auto [m, n, j, k] : {std::array<unsigned, 4>{1, 1, 1, 1}, {2, 1, 2, 1}, {3, 0, 3, 0}, {2, 1, 1, 2}}) {
      const cd ref = oracle::trapezoid2([&](double x, double y) {
        const cd p(x, y);
        return oracle::uchp_value(m, n, p) * std::conj(oracle::uchp_value(j, k, p)) * std::exp(-std::norm(p));
      });
      CHECK(std::abs(ortho::uchp_inner(m, n, j, k) - ref) <= 1e-10 * std::max(1.0, std::abs(ref)));
    }
  }

  TEST_CASE("unconjugated pairing does not follow delta_{m,n}") {
    // delta_{1,0} = 0, yet z against zbar integrates to pi.
    CHECK(std::abs(ortho::uchp_product(1, 0, 0, 1) - std::numbers::pi) < 1e-12);
  }

  TEST_CASE("generating function truncation at N = 25") {
    PointSampler s(kDefaultSeed);
    for (int trial = 0; trial < 20; ++trial) {
      gen::Args a;
      a.z = s.in_disk(1.0);
      a.u = s.in_disk(0.3);
      a.v = s.in_disk(0.3);
      cd series = 0;
      for (unsigned m = 0; m <= 25; ++m)
        for (unsigned n = 0; n <= 25; ++n)
          series += ipow(a.u, m) * ipow(a.v, n) * inv_fact(m) * inv_fact(n) * oracle::uchp_value(m, n, a.z);
      CHECK(std::abs(series - gen::closed(gen::Kernel::gen_hmn, a)) <= 1e-8);
      CHECK(std::abs(gen::series(gen::Kernel::gen_hmn, a, 25) - gen::closed(gen::Kernel::gen_hmn, a)) <= 1e-8);
    }
  }

  TEST_CASE("Mehler-type kernel examples") {
    gen::Args a;
    CHECK(gen::closed(gen::Kernel::gen_hmn, a) == cd(1.0));
    CHECK(gen::closed(gen::Kernel::mehler2, a) == cd(1.0));
    a.u = 0.2;
    a.v = 0.3;
    a.z = 1.0;
    a.w = 1.0;
    const cd expected = std::exp((-0.06 * 2 + 0.2 + 0.3) / 0.94) / 0.94;
    CHECK(std::abs(gen::closed(gen::Kernel::mehler2, a) - expected) < 1e-14);
    cd series = 0;
    for (unsigned m = 0; m <= 40; ++m)
      for (unsigned n = 0; n <= 40; ++n)
        series += std::pow(0.2, m) * std::pow(0.3, n) * inv_fact(m) * inv_fact(n) * oracle::uchp_value(m, n, 1.0) *
                  oracle::uchp_value(m, n, 1.0);
    CHECK(std::abs(series - expected) < 1e-10);
    a.u = 0.99;
    a.v = 1.2;
    CHECK_THROWS_AS(gen::closed(gen::Kernel::mehler2, a), DomainError);
  }
}
