// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "polyherm/bchp.hpp"
#include "polyherm/integral_rep.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/random.hpp"
#include "polyherm/report.hpp"
#include "polyherm/suites.hpp"
#include "polyherm/wigner.hpp"

namespace {

using namespace polyherm;
using cd = std::complex<double>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::size_t total = 0, passed = 0;
  double worst = 0.0;  // largest residual / bound seen
  void add(double residual, double bound) {
    ++total;
    const bool ok = residual <= bound;  // NaN fails
    if (ok) ++passed;
    worst = std::max(worst, ok ? residual / bound : HUGE_VAL);
  }
  bool ok() const { return total > 0 && passed == total; }
  std::string str() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu/%zu within tolerance, worst residual/bound %.2e", passed, total, worst);
    return buf;
  }
};

double mixed(double base, cd ref) { return base * std::max(1.0, std::abs(ref)); }

std::vector<std::pair<cd, cd>> seeded_points(std::uint64_t seed, unsigned count, double radius) {
  PointSampler s(seed);
  std::vector<std::pair<cd, cd>> pts;
  for (unsigned i = 0; i < count; ++i) {
    const cd z = s.in_disk(radius);
    pts.emplace_back(z, s.in_disk(radius));
  }
  return pts;
}

// Counting records of the given suites, optionally restricted to id prefixes.
Outcome from_suites(std::initializer_list<std::string_view> ids, std::size_t expected_count = 0) {
  const suites::RunConfig cfg;
  std::size_t total = 0, passed = 0, printed = 0, printed_failed = 0;
  std::string first_failure;
  for (std::string_view id : ids)
    for (const auto& r : suites::run(id, cfg)) {
      if (r.variant == Variant::as_printed) {
        ++printed;
        if (!r.pass) ++printed_failed;
      }
      if (!suites::counts(r, cfg)) continue;
      ++total;
      if (r.pass)
        ++passed;
      else if (first_failure.empty())
        first_failure = r.id + " " + r.witness;
    }
  Outcome o;
  o.pass = total > 0 && passed == total && (expected_count == 0 || total == expected_count);
  o.detail = std::to_string(passed) + "/" + std::to_string(total) + " pass";
  if (expected_count && total != expected_count) o.detail += " (expected " + std::to_string(expected_count) + " cases)";
  if (printed) o.detail += ", as printed " + std::to_string(printed_failed) + "/" + std::to_string(printed) + " fail";
  if (!first_failure.empty()) o.detail += "; first failure " + first_failure;
  return o;
}

Outcome bchp_orthogonality() {
  const auto idx = indices_with_total_le(3);
  const auto gram = ortho::bchp_gram(idx, 30);
  const double q = std::numbers::pi * std::numbers::pi / 4;
  Tally t;
  const std::size_t n = idx.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double fa = q * idx[a].factorial(), fb = q * idx[b].factorial();
      if (a == b)
        t.add(std::abs(gram[a * n + b] - fa), 1e-8 * fa);
      else
        t.add(std::abs(gram[a * n + b]), 1e-8 * std::max(fa, fb));
    }
  return {t.ok() && t.total == 35 * 35, t.str()};
}

Outcome uchp_orthogonality() {
  std::vector<std::pair<unsigned, unsigned>> idx;
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; m + n <= 6; ++n) idx.emplace_back(m, n);
  const auto gram = ortho::uchp_gram(idx, true);
  auto norm = [](std::pair<unsigned, unsigned> p) {
    return std::numbers::pi * static_cast<double>(factorial(p.first) * factorial(p.second));
  };
  Tally t;
  const std::size_t n = idx.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b)
        t.add(std::abs(gram[a * n + b] - norm(idx[a])), 1e-8 * norm(idx[a]));
      else
        t.add(std::abs(gram[a * n + b]), 1e-8 * std::max(norm(idx[a]), norm(idx[b])));
    }
  return {t.ok(), t.str()};
}

Outcome wigner_realizations() {
  const auto pts = seeded_points(kDefaultSeed, 5, 1.0);
  const auto idx = indices_with_slots_le(2);
  const auto rows = parallel_map(idx.size(), [&](std::size_t k) {
    std::vector<std::pair<double, double>> r;
    for (const auto& [z, w] : pts) {
      const cd ref = bchp::table(idx[k]).eval({z, std::conj(z), w, std::conj(w)});
      r.emplace_back(std::abs(wigner::bchp_via_complex(idx[k], z, w) - ref), mixed(1e-6, ref));
      r.emplace_back(std::abs(wigner::bchp_via_tensor(idx[k], z, w) - ref), mixed(1e-6, ref));
    }
    return r;
  });
  Tally t;
  for (const auto& row : rows)
    for (auto [res, bound] : row) t.add(res, bound);
  return {t.ok() && t.total == 81 * 5 * 2, t.str()};
}

Outcome moyal_identity() {
  std::vector<wigner::HermiteFn> fns;
  for (unsigned a = 0; a <= 1; ++a)
    for (unsigned b = 0; b <= 1; ++b) fns.push_back(wigner::HermiteFn::complex_fn(a, b));
  const std::size_t k = fns.size();
  constexpr unsigned outer = 8;
  const auto grids =
      parallel_map(k * k, [&](std::size_t i) { return wigner::phase_grid(fns[i / k], fns[i % k], outer, 40); });
  Tally t;
  for (std::size_t f = 0; f < k; ++f)
    for (std::size_t g = 0; g < k; ++g)
      for (std::size_t phi = 0; phi < k; ++phi)
        for (std::size_t psi = 0; psi < k; ++psi) {
          const cd lhs = wigner::phase_inner(grids[f * k + g], grids[phi * k + psi], outer);
          const cd rhs = wigner::inner(fns[f], fns[phi]) * wigner::inner(fns[psi], fns[g]);
          t.add(std::abs(lhs - rhs), mixed(1e-6, rhs));
        }
  return {t.ok() && t.total == 256, t.str()};
}

Outcome generating_functions() {
  Outcome o = from_suites({"genfun"}, 14 * 5);
  const suites::RunConfig cfg;
  // Pinned: every numeric series check uses the absolute bound 1e-8.
  for (const auto& r : suites::run("genfun", cfg))
    if (suites::counts(r, cfg) && r.mode == Mode::numeric && r.tolerance > 1e-8) {
      o.pass = false;
      o.detail += "; loosened tolerance on " + r.id;
      break;
    }
  return o;
}

Outcome integral_representations() {
  const auto pts = seeded_points(kDefaultSeed + 100, 3, 1.0);
  const auto idx = indices_with_slots_le(2);
  const intrep::Pair pairs[] = {{cd(1, 0), cd(1, 0)}, {cd(0, 1), cd(0, -1)}};
  const double r2 = std::numbers::sqrt2;
  const auto rows = parallel_map(idx.size(), [&](std::size_t k) {
    const MultiIndex4& M = idx[k];
    std::vector<std::pair<double, double>> r;
    for (const auto& [z, w] : pts) {
      const cd ref = bchp::table(M).eval({z, std::conj(z), w, std::conj(w)});
      const cd zs = z / r2, ws = w / r2;
      const cd scaled = bchp::table(M).eval({zs, std::conj(zs), ws, std::conj(ws)});
      for (const auto& ab : pairs) {
        r.emplace_back(std::abs(intrep::intrep0(M, ab, ab, z, w) - ref), mixed(1e-6, ref));
        r.emplace_back(std::abs(intrep::intrep(M, ab, z, w) - scaled), mixed(1e-6, scaled));
      }
      r.emplace_back(std::abs(intrep::intreppc(M, z, w) - scaled), mixed(1e-6, scaled));
    }
    return r;
  });
  Tally t;
  for (const auto& row : rows)
    for (auto [res, bound] : row) t.add(res, bound);
  return {t.ok() && t.total == 81 * 3 * 5, t.str()};
}

std::string render_all(const suites::RunConfig& cfg) {
  std::string out;
  for (const auto& r : suites::run("all", cfg)) out += render(r, Format::json) + '\n';
  return out;
}

Outcome determinism() {
  const suites::RunConfig cfg;
  set_thread_count(1);
  const std::string a = render_all(cfg);
  const std::string b = render_all(cfg);
  set_thread_count(4);
  const std::string c = render_all(cfg);
  set_thread_count(0);
  const bool same = !a.empty() && a == b && a == c;
  return {same, std::to_string(a.size()) + " bytes; repeat " + (a == b ? "identical" : "differs") + ", 1 vs 4 threads " +
                    (a == c ? "identical" : "differs")};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no runtime limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "four-route equality", 30, [] { return from_suites({"four-routes"}, 256); }},
      {2, "bivariate orthogonality constant", 60, bchp_orthogonality},
      {3, "univariate orthogonality constant", 10, uchp_orthogonality},
      {4, "lowering and raising laws", 10, [] { return from_suites({"ladder"}, 256 * 8); }},
      {5, "Bochner eigen-relations", 0, [] { return from_suites({"bochner"}, 256 * 4); }},
      {6, "operator identities at bound 6", 0, [] { return from_suites({"operators"}, 13); }},
      {7, "Fourier-Wigner realizations", 120, wigner_realizations},
      {8, "Moyal identity", 0, moyal_identity},
      {9, "generating functions and Mehler kernels", 0, generating_functions},
      {10, "integral representations", 0, integral_representations},
      {11, "addition, quadratic and linearization formulas", 0,
       [] { return from_suites({"runge", "quadratic", "linearization", "runge-univariate"}); }},
      {12, "determinism of verify all", 0, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    char timing[64];
    if (c.limit_seconds > 0)
      std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, c.limit_seconds);
    else
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::printf("%s %2d %s: %s; %s\n", pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str(), timing);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
