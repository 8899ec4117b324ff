#pragma once

#include <complex>
#include <optional>
#include <string_view>

#include "polyherm/bchp.hpp"
#include "polyherm/errors.hpp"

/// Generating functions and Mehler-type kernels: truncated series against
/// closed forms, both in double precision.
namespace polyherm::gen {

using cd = std::complex<double>;

enum class Kernel {
  // univariate
  gen_hmn,      // Σ u^m v^n/(m!n!) H_{m,n}(z)
  genfct1hh,    // Σ t^n/n! H_{m,n}(z) H_{n,m'}(w)
  mehler2,      // Σ u^m v^n/(m!n!) H_{m,n}(z) H_{m,n}(w)
  bilgen2,      // Σ u^m t^n/(m!n!) H_{m,n}(z) H_{m,n}(w̄, w)
  bilgen1,      // Σ u^m t^n/(m!n!) H_{m,n}(z) H_{n,m'}(w)
  // bivariate
  gf4,          // Σ t^n/n! H_{m,n,n,m'}
  g2,           // Σ u^m v^n/(m!n!) H_{m,n,m,n}
  genfct4,      // Σ u^m t^n/(m!n!) H_{m,n,n,m}
  genfct4pc,    // Σ u^m/(m!n!) H_{m,n,n,m}
  genfct5,      // Σ u^m t^n/(m!n!) H_{m,n,n,m'}
  g4,           // Σ u^m v^n u'^{m'} v'^{n'}/M! H_M
  partial_gf1,  // Σ u^m u'^{m'}/(m!m'!) H_{m,n,m',n'}
  partial_gf2,  // Σ u^m v^n/(m!n!) H_{m,n,m',n'}
  tm,           // T_M(u, v | z, w)
};

inline constexpr Kernel kAllKernels[] = {
    Kernel::gen_hmn, Kernel::genfct1hh, Kernel::mehler2, Kernel::bilgen2, Kernel::bilgen1,
    Kernel::gf4, Kernel::g2, Kernel::genfct4, Kernel::genfct4pc, Kernel::genfct5,
    Kernel::g4, Kernel::partial_gf1, Kernel::partial_gf2, Kernel::tm};

const char* kernel_name(Kernel k);
std::optional<Kernel> parse_kernel(std::string_view name);

/// True for the bivariate kernels, whose points live in ℂ² through ξ, ξ*.
bool is_bivariate(Kernel k);
/// True when the printed statement differs from the verified one.
bool has_erratum(Kernel k);
/// Short description of the correction, empty when has_erratum is false.
std::string_view erratum_note(Kernel k);

struct Args {
  cd z, w;
  cd u, v, up, vp;
  cd t{1.0, 0.0};
  /// Indices held fixed by the kernel (m, m' for gf4 and genfct1hh; m' for
  /// bilgen1 and genfct5; n, n' for partial_gf1; m', n' for partial_gf2; all
  /// four for tm).
  MultiIndex4 fixed;
};

/// Partial sum with every summation index running over 0..trunc, in
/// lexicographic order with compensated accumulation. The as-printed form
/// differs from the corrected one only where the printed series itself is
/// misprinted (genfct5 carries v^n, g4 reads H_{m,m',n,n'}).
cd series(Kernel k, const Args& a, unsigned trunc, bchp::Form form = bchp::Form::corrected);

/// Closed form. Throws DomainError outside the stated domain.
cd closed(Kernel k, const Args& a, bchp::Form form = bchp::Form::corrected);

}  // namespace polyherm::gen
