#include "polyherm/bchp.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "polyherm/operators.hpp"
#include "polyherm/uchp.hpp"

namespace polyherm::bchp {

const char* route_name(Route r) {
  switch (r) {
    case Route::compose: return "compose";
    case Route::rodrigues: return "rodrigues";
    case Route::operational: return "operational";
    case Route::binomial: return "binomial";
  }
  return "?";
}

std::optional<Route> parse_route(std::string_view name) {
  for (Route r : {Route::compose, Route::rodrigues, Route::operational, Route::binomial})
    if (name == route_name(r)) return r;
  return std::nullopt;
}

Poly4 substitute(const Poly2& p, const Poly4& u_image, const Poly4& ubar_image) {
  return p.substitute<4>({u_image, ubar_image});
}

Poly4 compose(const MultiIndex4& M) {
  return substitute(uchp::table(M.m, M.n), aux_poly(Aux::xi), aux_poly(Aux::xibar)) *
         substitute(uchp::table(M.mp, M.np), aux_poly(Aux::xistar), aux_poly(Aux::xitilde));
}

Poly4 rodrigues(const MultiIndex4& M) {
  ops::WeightedPoly f{Poly4(1)};
  const auto step = [&f](Aux a, unsigned times) {
    const ops::LinOp op = ops::A(a);
    for (unsigned k = 0; k < times; ++k) f = op.weighted_apply(f);
  };
  step(Aux::xistar, M.np);
  step(Aux::xitilde, M.mp);
  step(Aux::xi, M.n);
  step(Aux::xibar, M.m);
  return M.total() % 2 ? -f.cofactor : f.cofactor;
}

namespace {

Poly4 aux_pow(Aux a, unsigned k) {
  Poly4 r(1);
  const Poly4 x = aux_poly(a);
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

const ops::LinOp& operational_exponential() {
  static const ops::LinOp op = ops::exp_nilpotent(
      ops::A(Aux::xi) * ops::A(Aux::xibar) + ops::A(Aux::xistar) * ops::A(Aux::xitilde), CoeffQi2(-1));
  return op;
}

}  // namespace

Poly4 operational(const MultiIndex4& M) {
  const Poly4 seed = aux_pow(Aux::xi, M.m) * aux_pow(Aux::xibar, M.n) * aux_pow(Aux::xistar, M.mp) *
                     aux_pow(Aux::xitilde, M.np);
  return operational_exponential()(seed);
}

Poly4 binomial(const MultiIndex4& M) {
  const CoeffQi2 r2 = CoeffQi2::sqrt2();
  const Poly4 sz = r2 * var(Var::z), szb = r2 * var(Var::zbar);
  const Poly4 sw = r2 * var(Var::w), swb = r2 * var(Var::wbar);
  Poly4 sum;
  for (const auto& J : indices_below(M)) {
    const unsigned j = J.m, k = J.n, jp = J.mp, kp = J.np;
    CoeffQi2 c = CoeffQi2::i_pow(static_cast<int>(J.total())) *
                 CoeffQi2(static_cast<std::int64_t>(polyherm::binomial(M, J)));
    if ((k + kp) % 2) c = -c;
    const Poly4 first = substitute(uchp::table(M.m + M.np - j - kp, M.mp + M.n - jp - k), sz, szb);
    const Poly4 second = substitute(uchp::table(j + kp, jp + k), sw, swb);
    sum += c * (first * second);
  }
  return CoeffQi2::sqrt2_pow(-static_cast<int>(M.total())) * sum;
}

Poly4 build(const MultiIndex4& M, Route r) {
  switch (r) {
    case Route::compose: return compose(M);
    case Route::rodrigues: return rodrigues(M);
    case Route::operational: return operational(M);
    case Route::binomial: return binomial(M);
  }
  throw std::invalid_argument("unknown route");
}

const Poly4& table(const MultiIndex4& M) {
  static std::mutex mu;
  static std::map<MultiIndex4, Poly4> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(M); it != cache.end()) return it->second;
  }
  Poly4 p = compose(M);
  std::lock_guard lock(mu);
  return cache.emplace(M, std::move(p)).first->second;
}

Poly4 swap_partners(const Poly4& p) {
  return p.substitute<4>({var(Var::zbar), var(Var::z), var(Var::wbar), var(Var::w)});
}

Poly4 reflect_w(const Poly4& p) {
  return p.substitute<4>({var(Var::zbar), var(Var::z), -var(Var::wbar), -var(Var::w)});
}

std::complex<double> value(const MultiIndex4& M, std::complex<double> z, std::complex<double> w) {
  const std::complex<double> i(0.0, 1.0);
  const auto zb = std::conj(z), wb = std::conj(w);
  return uchp::value(M.m, M.n, z + i * w, zb - i * wb) * uchp::value(M.mp, M.np, zb + i * wb, z - i * w);
}

namespace {

// Integer points 0, 1, …, size−1 in each of the four slots.
std::vector<std::array<CoeffQi2, 4>> integer_grid(const std::array<unsigned, 4>& sizes) {
  std::vector<std::array<CoeffQi2, 4>> pts;
  for (unsigned a = 0; a < sizes[0]; ++a)
    for (unsigned b = 0; b < sizes[1]; ++b)
      for (unsigned c = 0; c < sizes[2]; ++c)
        for (unsigned d = 0; d < sizes[3]; ++d)
          pts.push_back({CoeffQi2(a), CoeffQi2(b), CoeffQi2(c), CoeffQi2(d)});
  return pts;
}

std::string point_text(const std::array<CoeffQi2, 4>& p, const std::array<CoeffQi2, 4>& q) {
  std::string s = "z=" + p[0].pretty() + ",zbar=" + p[1].pretty() + ",w=" + p[2].pretty() + ",wbar=" + p[3].pretty();
  s += ",z'=" + q[0].pretty() + ",zbar'=" + q[1].pretty() + ",w'=" + q[2].pretty() + ",wbar'=" + q[3].pretty();
  return s;
}

}  // namespace

ExactCheck runge_check(const MultiIndex4& M) {
  // Degree of H_M in z and w is at most m+n', in z̄ and w̄ at most n+m'.
  const unsigned hol = M.m + M.np + 1, anti = M.n + M.mp + 1;
  const std::array<unsigned, 4> sizes{hol, anti, hol, anti};
  const auto grid = integer_grid(sizes);
  const auto Js = indices_below(M);
  const CoeffQi2 r2 = CoeffQi2::sqrt2();

  // scaled[J][g] = H_J(√2·grid[g]).
  std::vector<std::vector<CoeffQi2>> scaled(Js.size());
  for (std::size_t a = 0; a < Js.size(); ++a) {
    const Poly4 p = table(Js[a]).scale_arguments(r2);
    for (const auto& g : grid) scaled[a].push_back(p.eval(g));
  }
  const Poly4& lhs_poly = table(M);
  const CoeffQi2 norm = CoeffQi2::sqrt2_pow(-static_cast<int>(M.total()));
  auto index_of = [&](const MultiIndex4& J) {
    return static_cast<std::size_t>(std::lower_bound(Js.begin(), Js.end(), J) - Js.begin());
  };
  std::vector<std::size_t> complement(Js.size());
  for (std::size_t a = 0; a < Js.size(); ++a) complement[a] = index_of(M - Js[a]);

  for (std::size_t g1 = 0; g1 < grid.size(); ++g1) {
    for (std::size_t g2 = 0; g2 < grid.size(); ++g2) {
      std::array<CoeffQi2, 4> sum_pt;
      for (int v = 0; v < 4; ++v) sum_pt[v] = grid[g1][v] + grid[g2][v];
      const CoeffQi2 lhs = lhs_poly.eval(sum_pt);
      CoeffQi2 rhs;
      for (std::size_t a = 0; a < Js.size(); ++a)
        rhs += CoeffQi2(static_cast<std::int64_t>(polyherm::binomial(M, Js[a]))) * scaled[a][g1] *
               scaled[complement[a]][g2];
      rhs *= norm;
      if (!(lhs == rhs))
        return {false, point_text(grid[g1], grid[g2]) + ": lhs=" + lhs.pretty() + " rhs=" + rhs.pretty()};
    }
  }
  return {};
}

ExactCheck quadratic_check(const MultiIndex4& M, const MultiIndex4& N, Form form) {
  const Poly4& lhs = table(M + N);
  Poly4 rhs;
  for (const auto& J : indices_below(meet(M, N.transpose()))) {
    const MultiIndex4 Jt = J.transpose();
    const std::uint64_t weight = form == Form::corrected ? J.factorial() : 1;
    CoeffQi2 c(static_cast<std::int64_t>(weight * polyherm::binomial(M, J) * polyherm::binomial(N, Jt)));
    if (J.total() % 2) c = -c;
    rhs += c * (table(M - J) * table(N - Jt));
  }
  if (lhs == rhs) return {};
  const Poly4 diff = lhs - rhs;
  return {false, "difference " + pretty(diff)};
}

std::pair<Poly2, Poly2> linearization_sides(const MultiIndex4& M) {
  const Poly2 u = Poly2::variable(kU), ub = Poly2::variable(kUbar);
  const Poly2 lhs = uchp::table(M.m, M.n) * uchp::table(M.mp, M.np).substitute<2>({ub, u});
  const CoeffQi2 r2 = CoeffQi2::sqrt2();
  Poly2 rhs;
  for (const auto& J : indices_below(M)) {
    const unsigned j = J.m, k = J.n, jp = J.mp, kp = J.np;
    if (j + kp != jp + k) continue;
    CoeffQi2 c = CoeffQi2::i_pow(static_cast<int>(J.total())) *
                 CoeffQi2(static_cast<std::int64_t>(polyherm::binomial(M, J) * factorial(j + kp)));
    if ((j + k) % 2) c = -c;
    rhs += c * uchp::table(M.m + M.np - j - kp, M.n + M.mp - j - kp).scale_arguments(r2);
  }
  rhs = CoeffQi2::sqrt2_pow(-static_cast<int>(M.total())) * rhs;
  return {lhs, rhs};
}

ExactCheck runge_univariate_check(unsigned m, unsigned n) {
  const Poly4 lhs = substitute(uchp::table(m, n), var(Var::z) + var(Var::w), var(Var::zbar) + var(Var::wbar));
  const CoeffQi2 r2 = CoeffQi2::sqrt2();
  const Poly4 sz = r2 * var(Var::z), szb = r2 * var(Var::zbar);
  const Poly4 sw = r2 * var(Var::w), swb = r2 * var(Var::wbar);
  Poly4 rhs;
  for (unsigned j = 0; j <= m; ++j) {
    for (unsigned k = 0; k <= n; ++k) {
      const Rational c(static_cast<std::int64_t>(factorial(m) * factorial(n)),
                       static_cast<std::int64_t>(factorial(m - j) * factorial(n - k) * factorial(j) * factorial(k)));
      rhs += CoeffQi2(c) * (substitute(uchp::table(m - j, n - k), sz, szb) * substitute(uchp::table(j, k), sw, swb));
    }
  }
  rhs = CoeffQi2::sqrt2_pow(-static_cast<int>(m + n)) * rhs;
  if (lhs == rhs) return {};
  return {false, "difference " + pretty(lhs - rhs)};
}

ExactCheck runge_univariate_as_printed(unsigned m, unsigned n) {
  for (unsigned j = 0; j <= m; ++j)
    for (unsigned k = 0; k <= n; ++k)
      if ((m - j) * (n - k) * j == 0)
        return {false, "denominator (m-j)(n-k)j vanishes at j=" + std::to_string(j) + ",k=" + std::to_string(k) +
                           "; first index also carries an unbound k'"};
  return {false, "first index carries an unbound k'"};
}

}  // namespace polyherm::bchp
