#include "polyherm/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "polyherm/bchp.hpp"
#include "polyherm/generating.hpp"
#include "polyherm/integral_rep.hpp"
#include "polyherm/operators.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/quadrature.hpp"
#include "polyherm/realizations.hpp"
#include "polyherm/uchp.hpp"
#include "polyherm/wigner.hpp"

namespace polyherm::suites {

namespace {

using cd = std::complex<double>;
using Records = std::vector<VerifyReport>;
using bchp::Form;

constexpr double kPi = std::numbers::pi;

double tol(const RunConfig& cfg, double base) { return cfg.tol.value_or(base); }

VerifyReport exact(std::string id, Params params, bool pass, std::string witness = {}) {
  VerifyReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.mode = Mode::exact;
  r.pass = pass;
  if (!pass) r.witness = witness.empty() ? "mismatch" : std::move(witness);
  return r;
}

VerifyReport numeric(std::string id, Params params, cd lhs, cd rhs, double bound) {
  VerifyReport r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.mode = Mode::numeric;
  r.residual = std::abs(lhs - rhs);
  r.tolerance = bound;
  r.pass = r.residual <= bound;  // NaN fails
  if (!r.pass) r.witness = "lhs=" + format_complex(lhs) + " rhs=" + format_complex(rhs);
  return r;
}

// Mixed absolute/relative bound.
double mixed(double base, cd reference) { return base * std::max(1.0, std::abs(reference)); }

VerifyReport tagged(VerifyReport r, Variant v, std::string_view erratum) {
  r.variant = v;
  r.erratum = erratum;
  return r;
}

// Appends the printed and the corrected record; the corrected one only when
// the policy accepts corrections.
void push_pair(Records& out, const RunConfig& cfg, VerifyReport printed, VerifyReport corrected,
               std::string_view erratum) {
  out.push_back(tagged(std::move(printed), Variant::as_printed, erratum));
  if (!cfg.as_printed_only) out.push_back(tagged(std::move(corrected), Variant::corrected, erratum));
}

template <class F>
void append_parallel(Records& out, std::size_t n, F&& per_case) {
  for (auto& chunk : parallel_map(n, std::forward<F>(per_case)))
    for (auto& r : chunk) out.push_back(std::move(r));
}

Params with_index(const MultiIndex4& M) { return Params().add("M", M); }

// Exact polynomial equality; the witness is the difference.
template <class P>
VerifyReport exact_equal(std::string id, Params params, const P& lhs, const P& rhs) {
  const bool same = lhs == rhs;
  return exact(std::move(id), std::move(params), same, same ? "" : "difference " + pretty(lhs - rhs));
}

std::string poly_witness(const Poly4& diff) { return "difference " + pretty(diff); }

MultiIndex4 unit(int slot) {
  MultiIndex4 e;
  switch (slot) {
    case 0: e.m = 1; break;
    case 1: e.n = 1; break;
    case 2: e.mp = 1; break;
    default: e.np = 1; break;
  }
  return e;
}

unsigned slot_value(const MultiIndex4& M, int slot) { return M.as_array()[static_cast<std::size_t>(slot)]; }

constexpr Aux kAux[] = {Aux::xi, Aux::xibar, Aux::xistar, Aux::xitilde};

// ---------------------------------------------------------------- exact

Records quadrature_suite(const RunConfig& cfg) {
  Records out;
  for (unsigned n = 1; n <= 40; ++n) {
    const quad::QuadGrid& g = quad::gauss_hermite(n);
    double worst = 0.0;
    for (unsigned k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (unsigned i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], static_cast<int>(k));
      // Odd moments vanish; measure them against the neighbouring even moment.
      const double scale = std::tgamma((k + (k % 2 ? 2.0 : 1.0)) / 2.0);
      const double exact_value = k % 2 ? 0.0 : scale;
      worst = std::max(worst, std::abs(s - exact_value) / scale);
    }
    double total = 0.0;
    for (double w : g.weights) total += w;
    VerifyReport r = numeric("gauss-hermite.moments", Params().add("n", n), worst, 0.0, tol(cfg, 1e-12));
    out.push_back(std::move(r));
    out.push_back(numeric("gauss-hermite.mass", Params().add("n", n), total, std::sqrt(kPi), tol(cfg, 1e-13)));
  }
  return out;
}

Records uchp_routes_suite(const RunConfig& cfg) {
  std::vector<std::pair<unsigned, unsigned>> idx;
  for (unsigned m = 0; m <= cfg.uchp_max; ++m)
    for (unsigned n = 0; n <= cfg.uchp_max; ++n) idx.emplace_back(m, n);
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const auto [m, n] = idx[k];
    const Params p = Params().add("m", m).add("n", n);
    const Poly2& h = uchp::table(m, n);
    return Records{
        exact("uchp.rodrigues", p, uchp::rodrigues(m, n) == h),
        exact("uchp.real-expansion", p, uchp::from_real(m, n) == h),
        exact("uchp.conj", p, h.conj() == uchp::table(n, m)),
    };
  });
  return out;
}

Records four_routes_suite(const RunConfig& cfg) {
  const auto idx = indices_with_slots_le(cfg.max_slot);
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    const Poly4& truth = bchp::table(M);
    for (bchp::Route r : {bchp::Route::rodrigues, bchp::Route::operational, bchp::Route::binomial}) {
      const Poly4 p = bchp::build(M, r);
      if (!(p == truth))
        return Records{exact("four-routes", with_index(M), false,
                             std::string(bchp::route_name(r)) + " route: " + poly_witness(p - truth))};
    }
    return Records{exact("four-routes", with_index(M), true)};
  });
  return out;
}

Records symmetries_suite(const RunConfig& cfg) {
  Records out;
  const auto idx = indices_with_total_le(cfg.symmetry_total);
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    const Poly4& h = bchp::table(M);
    const Poly4& conj_partner = bchp::table({M.n, M.m, M.np, M.mp});
    const Poly4& swapped_partner = bchp::table({M.mp, M.np, M.m, M.n});
    const Poly4 c = h.conj(), s = bchp::swap_partners(h);
    return Records{
        exact_equal("symmetry.conj", with_index(M), c, conj_partner),
        exact_equal("symmetry.conj-args", with_index(M), s, swapped_partner),
    };
  });
  const auto deg_idx = indices_with_total_le(cfg.degree_total);
  append_parallel(out, deg_idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = deg_idx[k];
    const int d = bchp::table(M).total_degree();
    return Records{exact("degree", with_index(M), d == static_cast<int>(M.total()), "degree " + std::to_string(d))};
  });
  for (unsigned r = 0; r <= cfg.symmetry_total; ++r)
    for (unsigned s = 0; s <= cfg.symmetry_total; ++s) {
      const MultiIndex4 M{r, s, 0, 0};
      const CoeffQi2 at_origin = bchp::table(M).eval({CoeffQi2(0), CoeffQi2(0), CoeffQi2(0), CoeffQi2(0)});
      CoeffQi2 expected(0);
      if (r == s) expected = CoeffQi2(static_cast<std::int64_t>(factorial(r)) * (r % 2 ? -1 : 1));
      out.push_back(exact("special-value", with_index(M), at_origin == expected, "value " + at_origin.pretty()));
    }
  return out;
}

Records ladder_suite(const RunConfig& cfg) {
  const auto idx = indices_with_slots_le(cfg.max_slot);
  constexpr std::string_view kLabels =
      "xi* - A_xitilde raises m' and xitilde - A_xi* raises n'; the printed labels are exchanged";
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    const Poly4& h = bchp::table(M);
    Records recs;
    for (int slot = 0; slot < 4; ++slot) {
      const Aux a = kAux[slot];
      const std::string name = aux_name(a);
      const unsigned c = slot_value(M, slot);
      const Poly4 lowered = ops::lowering(a)(h);
      const Poly4 expected = c == 0 ? Poly4() : CoeffQi2(static_cast<std::int64_t>(c)) * bchp::table(M - unit(slot));
      recs.push_back(exact_equal("lowering." + name, with_index(M), lowered, expected));
    }
    for (int slot = 0; slot < 4; ++slot) {
      const Aux a = kAux[slot];
      const Poly4& target = bchp::table(M + unit(slot));
      const Poly4 raised = ops::raising(a)(h);
      VerifyReport corrected = exact_equal("raising." + std::string(aux_name(a)), with_index(M), raised, target);
      if (slot < 2) {
        recs.push_back(std::move(corrected));
        continue;
      }
      const Poly4 printed = ops::raising_as_printed(a)(h);
      VerifyReport as_printed = exact_equal("raising." + std::string(aux_name(a)), with_index(M), printed, target);
      push_pair(recs, cfg, std::move(as_printed), std::move(corrected), kLabels);
    }
    return recs;
  });
  return out;
}

Records realizations_suite(const RunConfig& cfg) {
  const auto idx = indices_with_slots_le(cfg.max_slot);
  constexpr std::string_view kStray = "the m' factor is xi* - A_xitilde; the printed factor carries a stray i";
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    const Poly4& truth = bchp::table(M);
    Records recs;
    for (bchp::Chain c : bchp::kAllChains) {
      const std::string id = "realization." + std::string(bchp::chain_name(c));
      const Poly4 p = bchp::realize(M, c);
      VerifyReport r = exact_equal(id, with_index(M), p, truth);
      if (c != bchp::Chain::from_one) {
        recs.push_back(std::move(r));
        continue;
      }
      const Poly4 printed = bchp::realize(M, c, Form::as_printed);
      push_pair(recs, cfg,
                exact_equal(id, with_index(M), printed, truth),
                std::move(r), kStray);
    }
    return recs;
  });
  return out;
}

Records bochner_suite(const RunConfig& cfg) {
  const auto idx = indices_with_slots_le(cfg.max_slot);
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    const Poly4& h = bchp::table(M);
    Records recs;
    for (int slot = 0; slot < 4; ++slot) {
      const Aux a = kAux[slot];
      const Poly4 lhs = ops::bochner_L(a)(h);
      const Poly4 rhs = CoeffQi2(static_cast<std::int64_t>(slot_value(M, slot))) * h;
      recs.push_back(exact_equal("bochner." + std::string(aux_name(a)), with_index(M), lhs, rhs));
    }
    return recs;
  });
  return out;
}

Records operators_suite(const RunConfig& cfg) {
  struct Case {
    std::string id;
    ops::LinOp lhs, rhs;
  };
  using namespace ops;
  const CoeffQi2 quarter(Rational(1, 4)), iquarter(Rational(0), Rational(1, 4)), half(Rational(1, 2));
  std::vector<Case> cases;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      cases.push_back({"commute." + std::string(aux_name(kAux[a])) + "." + aux_name(kAux[b]),
                       A(kAux[a]) * A(kAux[b]), A(kAux[b]) * A(kAux[a])});
  cases.push_back({"quarter.xi", A(Aux::xi) * A(Aux::xibar), quarter * laplacian() + iquarter * box()});
  cases.push_back({"quarter.xi*", A(Aux::xistar) * A(Aux::xitilde), quarter * laplacian() - iquarter * box()});
  cases.push_back(
      {"half-laplacian", A(Aux::xi) * A(Aux::xibar) + A(Aux::xistar) * A(Aux::xitilde), half * laplacian()});
  for (Aux a : kAux) cases.push_back({"S=L." + std::string(aux_name(a)), bochner_S(a), bochner_L(a)});

  Records out;
  for (const Case& c : cases) {
    const OpEqualResult r = op_equal(c.lhs, c.rhs, cfg.op_bound);
    std::string witness;
    if (!r.equal && r.witness) {
      const auto& e = *r.witness;
      witness = "monomial z^" + std::to_string(e[0]) + " zbar^" + std::to_string(e[1]) + " w^" + std::to_string(e[2]) +
                " wbar^" + std::to_string(e[3]) + ": " + poly_witness(r.residual);
    }
    const auto monomials = static_cast<unsigned>(r.monomials_checked);
    out.push_back(exact(c.id, Params().add("bound", cfg.op_bound).add("monomials", monomials), r.equal, witness));
  }
  return out;
}

Records runge_suite(const RunConfig& cfg) {
  const auto idx = indices_with_total_le(cfg.max_total);
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const auto r = bchp::runge_check(idx[k]);
    return Records{exact("runge", with_index(idx[k]), r.pass, r.witness)};
  });
  return out;
}

Records quadratic_suite(const RunConfig& cfg) {
  const auto idx = indices_with_total_le(cfg.max_total);
  constexpr std::string_view kWeight = "each term carries the weight J! = j!k!j'!k'!; the printed sum omits it";
  Records out;
  append_parallel(out, idx.size() * idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k / idx.size()];
    const MultiIndex4& N = idx[k % idx.size()];
    const Params p = Params().add("M", M).add("N", N);
    const auto printed = bchp::quadratic_check(M, N, Form::as_printed);
    const auto corrected = bchp::quadratic_check(M, N, Form::corrected);
    Records recs;
    push_pair(recs, cfg, exact("quadratic", p, printed.pass, printed.witness),
              exact("quadratic", p, corrected.pass, corrected.witness), kWeight);
    return recs;
  });
  return out;
}

Records linearization_suite(const RunConfig& cfg) {
  const auto idx = indices_with_total_le(cfg.max_total);
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const auto [lhs, rhs] = bchp::linearization_sides(idx[k]);
    return Records{exact_equal("linearization", with_index(idx[k]), lhs, rhs)};
  });
  return out;
}

Records runge_univariate_suite(const RunConfig& cfg) {
  constexpr std::string_view kFactorials =
      "denominators are (m-j)!(n-k)!j!k!; the printed (m-j)(n-k)j vanish and the first index leaves k' unbound";
  Records out;
  for (unsigned m = 0; m <= cfg.max_total; ++m)
    for (unsigned n = 0; n <= cfg.max_total; ++n) {
      const Params p = Params().add("m", m).add("n", n);
      const auto printed = bchp::runge_univariate_as_printed(m, n);
      const auto corrected = bchp::runge_univariate_check(m, n);
      push_pair(out, cfg, exact("runge-univariate", p, printed.pass, printed.witness),
                exact("runge-univariate", p, corrected.pass, corrected.witness), kFactorials);
    }
  return out;
}

// ---------------------------------------------------------------- numeric

Records ortho_suite(const RunConfig& cfg) {
  const auto idx = indices_with_total_le(cfg.max_total);
  const auto gram = ortho::bchp_gram(idx, cfg.nodes);
  const auto literal = ortho::bchp_literal_gram(idx, cfg.nodes);
  constexpr std::string_view kPairing =
      "second factor is conj(H_N); reading H_N(Zbar, Z) as a literal exchange of variables fails";
  const double base = tol(cfg, 1e-8);
  Records out;
  const std::size_t n = idx.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const MultiIndex4 &M = idx[a], &N = idx[b];
      const double expected = a == b ? ortho::bchp_norm_squared(M) : 0.0;
      const double bound = a == b ? base * expected
                                  : base * std::max(ortho::bchp_norm_squared(M), ortho::bchp_norm_squared(N));
      const Params p = Params().add("M", M).add("N", N).add("nodes", cfg.nodes);
      push_pair(out, cfg, numeric("orthogonality", p, literal[a * n + b], expected, bound),
                numeric("orthogonality", p, gram[a * n + b], expected, bound), kPairing);
    }
  return out;
}

Records uchp_ortho_suite(const RunConfig& cfg) {
  std::vector<std::pair<unsigned, unsigned>> idx;
  for (unsigned m = 0; m <= cfg.uchp_ortho_total; ++m)
    for (unsigned n = 0; m + n <= cfg.uchp_ortho_total; ++n) idx.emplace_back(m, n);
  const auto hermitian = ortho::uchp_gram(idx, true, cfg.nodes);
  const auto plain = ortho::uchp_gram(idx, false, cfg.nodes);
  constexpr std::string_view kDelta =
      "pairing is against conj(H_{j,k}) with delta over (m,n) = (j,k); the printed delta_{m,n} pairs the wrong indices";
  const double base = tol(cfg, 1e-8);
  auto norm = [](unsigned m, unsigned n) { return kPi * static_cast<double>(factorial(m) * factorial(n)); };
  Records out;
  const std::size_t n = idx.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto [m, nn] = idx[a];
      const auto [j, k] = idx[b];
      const double bound = base * std::max(norm(m, nn), norm(j, k));
      const double corrected = a == b ? norm(m, nn) : 0.0;
      const double printed = m == nn ? norm(m, nn) : 0.0;
      const Params p = Params().add("m", m).add("n", nn).add("j", j).add("k", k).add("nodes", cfg.nodes);
      push_pair(out, cfg, numeric("uchp-orthogonality", p, plain[a * n + b], printed, bound),
                numeric("uchp-orthogonality", p, hermitian[a * n + b], corrected, bound), kDelta);
    }
  return out;
}

std::vector<std::pair<cd, cd>> sample_points(std::uint64_t seed, unsigned count, double radius) {
  PointSampler s(seed);
  std::vector<std::pair<cd, cd>> pts;
  for (unsigned i = 0; i < count; ++i) {
    const cd z = s.in_disk(radius);
    pts.emplace_back(z, s.in_disk(radius));
  }
  return pts;
}

Records wigner_suite(const RunConfig& cfg) {
  const auto pts = sample_points(cfg.seed, cfg.points, cfg.fw_point_radius);
  const auto idx = indices_with_slots_le(cfg.fw_max_slot);
  constexpr std::string_view kConj = "second function is h_{n,m'}; the printed h_{m',n} is its conjugate";
  const double base = tol(cfg, 1e-6);
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    Records recs;
    for (const auto& [z, w] : pts) {
      const cd ref = bchp::value(M, z, w);
      const Params p = Params().add("M", M).add("z", z).add("w", w).add("nodes", cfg.fw_nodes);
      push_pair(recs, cfg,
                numeric("fourier-wigner.complex", p, wigner::bchp_via_complex(M, z, w, Form::as_printed, cfg.fw_nodes),
                        ref, mixed(base, ref)),
                numeric("fourier-wigner.complex", p, wigner::bchp_via_complex(M, z, w, Form::corrected, cfg.fw_nodes),
                        ref, mixed(base, ref)),
                kConj);
      recs.push_back(
          numeric("fourier-wigner.tensor", p, wigner::bchp_via_tensor(M, z, w, cfg.fw_nodes), ref, mixed(base, ref)));
    }
    return recs;
  });
  for (unsigned m = 0; m <= 2 * cfg.fw_max_slot; ++m)
    for (unsigned n = 0; n <= 2 * cfg.fw_max_slot; ++n)
      for (const auto& pt : pts) {
        const cd z = pt.first;
        const cd ref = uchp::value(m, n, z);
        const Params p = Params().add("m", m).add("n", n).add("z", z).add("nodes", cfg.fw_nodes);
        out.push_back(
            numeric("fourier-wigner.uchp", p, wigner::uchp_via_wigner(m, n, z, cfg.fw_nodes), ref, mixed(base, ref)));
      }
  return out;
}

Records moyal_suite(const RunConfig& cfg) {
  std::vector<wigner::HermiteFn> fns;
  for (unsigned a = 0; a <= 1; ++a)
    for (unsigned b = 0; b <= 1; ++b) fns.push_back(wigner::HermiteFn::complex_fn(a, b));
  const std::size_t k = fns.size();
  const auto grids = parallel_map(k * k, [&](std::size_t i) {
    return wigner::phase_grid(fns[i / k], fns[i % k], cfg.moyal_outer, cfg.fw_nodes);
  });
  std::vector<cd> gram(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram[i * k + j] = wigner::inner(fns[i], fns[j], cfg.fw_nodes);
  auto label = [](const wigner::HermiteFn& f) { return "h" + std::to_string(f.a) + std::to_string(f.b); };
  const double base = tol(cfg, 1e-6);
  Records out;
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t phi = 0; phi < k; ++phi)
        for (std::size_t psi = 0; psi < k; ++psi) {
          const cd lhs = wigner::phase_inner(grids[f * k + g], grids[phi * k + psi], cfg.moyal_outer);
          const cd rhs = gram[f * k + phi] * gram[psi * k + g];
          out.push_back(numeric("moyal",
                                Params()
                                    .add("f", label(fns[f]))
                                    .add("g", label(fns[g]))
                                    .add("phi", label(fns[phi]))
                                    .add("psi", label(fns[psi])),
                                lhs, rhs, mixed(base, rhs)));
        }
  return out;
}

Records genfun_kernels(const RunConfig& cfg, const std::vector<gen::Kernel>& kernels) {
  static const MultiIndex4 kFixed[] = {{0, 0, 0, 0}, {1, 0, 2, 1}, {2, 1, 0, 1}, {1, 2, 1, 0}, {2, 2, 1, 1}};
  const double base = tol(cfg, 1e-8);
  Records out;
  for (gen::Kernel kernel : kernels) {
    const auto ordinal = static_cast<std::uint64_t>(kernel);
    PointSampler s(cfg.seed + ordinal + 1);
    const double radius = gen::is_bivariate(kernel) ? cfg.bchp_point_radius : cfg.uchp_point_radius;
    std::vector<gen::Args> args;
    for (unsigned i = 0; i < cfg.points; ++i) {
      gen::Args a;
      a.z = s.in_disk(radius);
      a.w = s.in_disk(radius);
      a.u = s.in_disk(cfg.param_radius);
      a.v = s.in_disk(cfg.param_radius);
      a.up = s.in_disk(cfg.param_radius);
      a.vp = s.in_disk(cfg.param_radius);
      a.t = s.on_circle();
      a.fixed = kFixed[i % std::size(kFixed)];
      args.push_back(a);
    }
    const std::string id = std::string("genfun.") + gen::kernel_name(kernel);
    append_parallel(out, args.size(), [&](std::size_t i) {
      const gen::Args& a = args[i];
      const Params p = Params()
                           .add("fixed", a.fixed)
                           .add("z", a.z)
                           .add("w", a.w)
                           .add("u", a.u)
                           .add("v", a.v)
                           .add("u'", a.up)
                           .add("v'", a.vp)
                           .add("t", a.t)
                           .add("N", cfg.trunc);
      auto one = [&](Form form) {
        try {
          return numeric(id, p, gen::series(kernel, a, cfg.trunc, form), gen::closed(kernel, a, form), base);
        } catch (const DomainError& e) {
          return exact(id, p, false, e.what());
        }
      };
      Records recs;
      if (gen::has_erratum(kernel))
        push_pair(recs, cfg, one(Form::as_printed), one(Form::corrected), gen::erratum_note(kernel));
      else
        recs.push_back(one(Form::corrected));
      return recs;
    });
  }
  return out;
}

Records genfun_suite(const RunConfig& cfg) {
  return genfun_kernels(cfg, {std::begin(gen::kAllKernels), std::end(gen::kAllKernels)});
}

Records gf4_suite(const RunConfig& cfg) { return genfun_kernels(cfg, {gen::Kernel::gf4}); }

Records intrep_suite(const RunConfig& cfg) {
  const auto pts = sample_points(cfg.seed + 100, cfg.intrep_points, cfg.fw_point_radius);
  const auto idx = indices_with_slots_le(cfg.fw_max_slot);
  const intrep::Pair pairs[] = {{cd(1, 0), cd(1, 0)}, {cd(0, 1), cd(0, -1)}};
  const double base = tol(cfg, 1e-6);
  const double r2 = std::numbers::sqrt2;
  Records out;
  append_parallel(out, idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    Records recs;
    for (const auto& [z, w] : pts) {
      const cd ref = bchp::value(M, z, w);
      const cd scaled = bchp::value(M, z / r2, w / r2);
      for (const auto& ab : pairs) {
        const Params p = Params().add("M", M).add("alpha", ab.alpha).add("beta", ab.beta).add("z", z).add("w", w);
        recs.push_back(numeric("intrep0", p, intrep::intrep0(M, ab, ab, z, w, cfg.fw_nodes), ref, mixed(base, ref)));
        recs.push_back(numeric("intrep", p, intrep::intrep(M, ab, z, w, cfg.fw_nodes), scaled, mixed(base, scaled)));
      }
      recs.push_back(numeric("intrep-pc", Params().add("M", M).add("z", z).add("w", w),
                             intrep::intreppc(M, z, w, cfg.fw_nodes), scaled, mixed(base, scaled)));
    }
    return recs;
  });
  return out;
}

struct Entry {
  const char* id;
  Records (*run)(const RunConfig&);
  bool in_all;
};

constexpr Entry kSuites[] = {
    {"quadrature", quadrature_suite, true},
    {"uchp-routes", uchp_routes_suite, true},
    {"four-routes", four_routes_suite, true},
    {"symmetries", symmetries_suite, true},
    {"ladder", ladder_suite, true},
    {"realizations", realizations_suite, true},
    {"bochner", bochner_suite, true},
    {"operators", operators_suite, true},
    {"runge", runge_suite, true},
    {"quadratic", quadratic_suite, true},
    {"linearization", linearization_suite, true},
    {"runge-univariate", runge_univariate_suite, true},
    {"ortho", ortho_suite, true},
    {"uchp-ortho", uchp_ortho_suite, true},
    {"wigner", wigner_suite, true},
    {"moyal", moyal_suite, true},
    {"genfun", genfun_suite, true},
    {"gf4-exponent", gf4_suite, false},
    {"intrep", intrep_suite, true},
};

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const Entry& e : kSuites) v.emplace_back(e.id);
    v.emplace_back("all");
    return v;
  }();
  return ids;
}

bool is_known(std::string_view id) {
  const auto& ids = known_suites();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<VerifyReport> run(std::string_view id, const RunConfig& cfg) {
  Records out;
  for (const Entry& e : kSuites) {
    if (id == e.id || (id == "all" && e.in_all)) {
      Records part = e.run(cfg);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  if (out.empty() && !is_known(id)) throw std::invalid_argument("unknown suite '" + std::string(id) + "'");
  return out;
}

bool counts(const VerifyReport& r, const RunConfig& cfg) {
  switch (r.variant) {
    case Variant::plain: return true;
    case Variant::as_printed: return cfg.as_printed_only;
    case Variant::corrected: return !cfg.as_printed_only;
  }
  return true;
}

bool all_pass(const std::vector<VerifyReport>& records, const RunConfig& cfg) {
  return std::all_of(records.begin(), records.end(), [&](const VerifyReport& r) { return !counts(r, cfg) || r.pass; });
}

}  // namespace polyherm::suites
