#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "polyherm/bchp.hpp"
#include "polyherm/errors.hpp"
#include "polyherm/integral_rep.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/random.hpp"
#include "polyherm/wigner.hpp"

using namespace polyherm;
using cd = std::complex<double>;

namespace {

const double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(std::numbers::pi);

// ∫ t^k e^{-t^2} dt = Γ((k+1)/2) for even k, 0 for odd k.
double gaussian_moment(unsigned k) { return k % 2 ? 0.0 : std::tgamma((k + 1) / 2.0); }

double mixed(double ref) { return std::max(1.0, std::abs(ref)); }

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("gauss-hermite examples") {
    const auto& one = quad::gauss_hermite(1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one.nodes[0]) < 1e-15);
    CHECK(one.weights[0] == doctest::Approx(kSqrtPi).epsilon(1e-14));
    const auto& two = quad::gauss_hermite(2);
    REQUIRE(two.size() == 2);
    CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    for (double w : two.weights) CHECK(w == doctest::Approx(kSqrtPi / 2).epsilon(1e-14));
    const auto& ten = quad::gauss_hermite(10);
    double m4 = 0;
    for (std::size_t j = 0; j < ten.size(); ++j) m4 += ten.weights[j] * std::pow(ten.nodes[j], 4);
    CHECK(std::abs(m4 - 0.75 * kSqrtPi) <= 1e-12 * 0.75 * kSqrtPi);
    CHECK_THROWS_AS(quad::gauss_hermite(0), std::invalid_argument);
  }

  TEST_CASE("gauss-hermite exactness up to degree 2n-1 for n <= 40") {
    for (unsigned n = 1; n <= 40; ++n) {
      const auto& g = quad::gauss_hermite(n);
      double mass = 0;
      for (double w : g.weights) {
        CHECK(w > 0);
        mass += w;
      }
      CHECK(std::abs(mass - kSqrtPi) <= 1e-13);
      for (std::size_t j = 0; j < g.size(); ++j) CHECK(g.nodes[j] == doctest::Approx(-g.nodes[g.size() - 1 - j]));
      for (unsigned k = 0; k <= 2 * n - 1; ++k) {
        long double sum = 0;
        for (std::size_t j = 0; j < g.size(); ++j) sum += g.weights[j] * std::pow((long double)g.nodes[j], k);
        const double ref = gaussian_moment(k);
        // Odd moments vanish; scale by the even neighbour.
        const double scale = k % 2 ? gaussian_moment(k + 1) : ref;
        CHECK_MESSAGE(std::abs(double(sum) - ref) <= 1e-12 * scale, "n=" << n << " k=" << k);
      }
    }
  }

  TEST_CASE("complex rule integrates the planar gaussian") {
    for (double s : {1.0, 2.0}) {
      cd mass = 0, second = 0;
      for (const auto& node : quad::complex_rule(12, s)) {
        mass += node.weight;
        second += node.weight * std::norm(node.point);
      }
      CHECK(std::abs(mass - kPi / s) < 1e-13);
      CHECK(std::abs(second - kPi / (s * s)) < 1e-13);
    }
  }

  TEST_CASE("bivariate orthogonality examples") {
    const double q = kPi * kPi / 4;
    CHECK(std::abs(ortho::bchp_inner({0, 0, 0, 0}, {0, 0, 0, 0}) - q) <= 1e-12);
    CHECK(std::abs(ortho::bchp_inner({1, 0, 0, 0}, {1, 0, 0, 0}) - q) <= 1e-12);
    CHECK(std::abs(ortho::bchp_inner({1, 0, 0, 0}, {0, 1, 0, 0})) <= 1e-10);
    CHECK(ortho::bchp_norm_squared({2, 1, 0, 3}) == doctest::Approx(q * 12));
  }

  TEST_CASE("bivariate orthogonality for |M|, |N| <= 3") {
    const auto idx = indices_with_total_le(3);
    const auto gram = ortho::bchp_gram(idx);
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) {
        const cd v = gram[a * idx.size() + b];
        const double na = ortho::bchp_norm_squared(idx[a]), nb = ortho::bchp_norm_squared(idx[b]);
        if (a == b)
          CHECK(std::abs(v - na) <= 1e-8 * na);
        else
          CHECK(std::abs(v) <= 1e-8 * std::max(na, nb));
      }
  }

  TEST_CASE("factorized inner product agrees with the direct tensor rule") {
    for (auto [M, N] : {std::pair<MultiIndex4, MultiIndex4>{{1, 1, 0, 0}, {1, 1, 0, 0}},
                        {{1, 0, 1, 0}, {0, 1, 0, 1}},
                        {{2, 0, 0, 1}, {2, 0, 0, 1}},
                        {{0, 1, 1, 0}, {1, 0, 0, 1}}}) {
      const cd fast = ortho::bchp_inner(M, N);
      const cd slow = ortho::bchp_inner_direct(M, N, 6);
      CHECK(std::abs(fast - slow) <= 1e-10 * mixed(std::abs(fast)));
    }
  }

  TEST_CASE("factorized inner product agrees with an independent integral") {
    // Integrate over w by the trapezoid oracle at fixed z slices, a cheap 4D spot check.
    const MultiIndex4 M{1, 0, 0, 1}, N{1, 0, 0, 1};
    const double L = 4.5;
    const int n = 36;
    const double h = 2 * L / n;
    long double sum = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int c = 0; c <= n; ++c)
          for (int d = 0; d <= n; ++d) {
            const cd z(-L + a * h, -L + b * h), w(-L + c * h, -L + d * h);
            const cd v = oracle::bchp_value(M, z, w) * std::conj(oracle::bchp_value(N, z, w)) *
                         std::exp(-2 * (std::norm(z) + std::norm(w)));
            sum += v.real();
          }
    const double ref = double(sum) * h * h * h * h;
    CHECK(std::abs(ortho::bchp_inner(M, N).real() - ref) <= 1e-8 * ref);
  }

  TEST_CASE("literal pairing differs from the conjugate pairing") {
    const cd literal = ortho::bchp_literal_pairing({1, 0, 0, 0}, {1, 0, 0, 0});
    const cd conj = ortho::bchp_inner({1, 0, 0, 0}, {1, 0, 0, 0});
    CHECK(std::abs(literal - conj) > 1.0);
    CHECK_THROWS_AS(ortho::bchp_literal_gram({{1, 0, 0, 0}}), std::invalid_argument);
  }

  TEST_CASE("fourier-wigner examples") {
    const auto h00 = wigner::HermiteFn::complex_fn(0, 0);
    CHECK(std::abs(wigner::transform(h00, h00, {0, 0}, {0, 0}) - 0.5) <= 1e-14);
    const auto t00 = wigner::HermiteFn::tensor(0, 0);
    CHECK(std::abs(wigner::transform(t00, t00, {0, 0}, {0, 0}) - 0.5) <= 1e-14);
    CHECK(std::abs(wigner::bchp_via_complex({0, 0, 0, 0}, 0.0, 0.0) - 1.0) <= 1e-12);
    CHECK(std::abs(wigner::bchp_via_complex({1, 0, 0, 0}, 0.0, 0.0)) <= 1e-12);
    CHECK(std::abs(wigner::bchp_via_complex({1, 1, 0, 0}, 0.0, 0.0) + 1.0) <= 1e-12);
    CHECK(std::abs(wigner::bchp_via_tensor({0, 0, 0, 0}, 0.0, 0.0) - 1.0) <= 1e-12);
    CHECK(std::abs(wigner::bchp_via_tensor({1, 0, 0, 0}, 0.0, 0.0)) <= 1e-12);
    CHECK(std::abs(wigner::bchp_via_tensor({1, 1, 0, 0}, 0.0, 0.0) + 1.0) <= 1e-12);
  }

  TEST_CASE("transform matches the direct definition") {
    const std::array<std::pair<unsigned, unsigned>, 3> fs{{{1, 0}, {2, 1}, {0, 2}}};
    const std::array<double, 2> p{0.4, -0.7}, q{1.1, 0.3};
    for (auto [a, b] : fs)
      for (auto [c, d] : fs) {
        const cd lib =
            wigner::transform(wigner::HermiteFn::complex_fn(a, b), wigner::HermiteFn::complex_fn(c, d), p, q);
        const cd ref = oracle::fourier_wigner([&](double y1, double y2) { return oracle::hermite_fn(a, b, y1, y2); },
                                              [&](double y1, double y2) { return oracle::hermite_fn(c, d, y1, y2); },
                                              p, q);
        CHECK(std::abs(lib - ref) <= 1e-10 * mixed(std::abs(ref)));
      }
  }

  TEST_CASE("both Wigner realizations reproduce H_M") {
    PointSampler s(5);
    for (const auto& M : indices_with_slots_le(2)) {
      const cd z = s.in_disk(1.0), w = s.in_disk(1.0);
      const cd ref = oracle::bchp_value(M, z, w);
      CHECK(std::abs(wigner::bchp_via_complex(M, z, w) - ref) <= 1e-6 * mixed(std::abs(ref)));
      CHECK(std::abs(wigner::bchp_via_tensor(M, z, w) - ref) <= 1e-6 * mixed(std::abs(ref)));
    }
  }

  TEST_CASE("univariate Wigner representation") {
    PointSampler s(8);
    for (unsigned m = 0; m <= 3; ++m)
      for (unsigned n = 0; n <= 3; ++n) {
        const cd z = s.in_disk(1.0);
        const cd ref = oracle::uchp_value(m, n, z);
        CHECK(std::abs(wigner::uchp_via_wigner(m, n, z) - ref) <= 1e-8 * mixed(std::abs(ref)));
      }
  }

  TEST_CASE("moyal examples") {
    using wigner::HermiteFn;
    const auto h00 = HermiteFn::complex_fn(0, 0), h10 = HermiteFn::complex_fn(1, 0), h01 = HermiteFn::complex_fn(0, 1);
    const auto same = wigner::moyal(h00, h00, h00, h00);
    CHECK(std::abs(same.rhs - kPi * kPi) <= 1e-12);
    CHECK(std::abs(same.lhs - same.rhs) <= 1e-6);
    const auto orth = wigner::moyal(h10, h00, h01, h00);
    CHECK(std::abs(orth.lhs) <= 1e-6);
    CHECK(std::abs(orth.rhs) <= 1e-6);
    const auto nonzero = wigner::moyal(h10, h00, h10, h00);
    CHECK(std::abs(nonzero.rhs) > 1.0);
    CHECK(std::abs(nonzero.lhs - nonzero.rhs) <= 1e-6);
    CHECK(std::abs(wigner::inner(h10, h10) - kPi) <= 1e-12);
  }

  TEST_CASE("integral representation examples") {
    const intrep::Pair one;
    CHECK(std::abs(intrep::intrep0({0, 0, 0, 0}, one, one, 0.3, -0.2) - 1.0) <= 1e-10);
    CHECK(std::abs(intrep::intrep({0, 0, 0, 0}, one, 0.3, -0.2) - 1.0) <= 1e-10);
    CHECK(std::abs(intrep::intreppc({0, 0, 0, 0}, 0.3, -0.2) - 1.0) <= 1e-10);
    CHECK(std::abs(intrep::intreppc({1, 0, 0, 0}, 0.0, 0.0)) <= 1e-12);
    CHECK(std::abs(intrep::intrep0({1, 1, 0, 0}, one, one, 0.0, 0.0) + 1.0) <= 1e-10);
  }

  TEST_CASE("integral representations reproduce H_M at seeded points") {
    PointSampler s(21);
    const intrep::Pair a{cd(0.0, 1.0), cd(0.0, -1.0)}, b{cd(2.0, 0.0), cd(0.5, 0.0)};
    for (const auto& M : indices_with_total_le(3)) {
      const cd z = s.in_disk(1.0), w = s.in_disk(1.0);
      const cd ref = oracle::bchp_value(M, z, w);
      const cd half = oracle::bchp_value(M, z / std::sqrt(2.0), w / std::sqrt(2.0));
      CHECK(std::abs(intrep::intrep0(M, a, b, z, w) - ref) <= 1e-6 * mixed(std::abs(ref)));
      CHECK(std::abs(intrep::intrep(M, b, z, w) - half) <= 1e-6 * mixed(std::abs(half)));
      CHECK(std::abs(intrep::intreppc(M, z, w) - half) <= 1e-6 * mixed(std::abs(half)));
    }
  }

  TEST_CASE("integral representation rejects a non-positive mu") {
    const intrep::Pair bad{cd(1.0, 0.0), cd(-1.0, 0.0)};
    CHECK_THROWS_AS(bad.mu(), DomainError);
    CHECK_THROWS_AS(intrep::intrep0({0, 0, 0, 0}, bad, intrep::Pair{}, 0.0, 0.0), DomainError);
  }

  TEST_CASE("gaussian moment kernel") {
    // ∫ |u|^2 e^{-|u|^2} = pi.
    CHECK(std::abs(intrep::moment(1, 1, intrep::Pair{}, 0.0) - kPi) <= 1e-12);
    CHECK(std::abs(intrep::moment(0, 0, intrep::Pair{}, 0.0) - kPi) <= 1e-12);
  }
}
