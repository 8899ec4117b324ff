#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyherm/random.hpp"
#include "polyherm/report.hpp"

/// Verification suites: each expands into one VerifyReport per checked case.
namespace polyherm::suites {

struct RunConfig {
  unsigned max_slot = 3;         // four-routes, ladder, realizations, bochner
  unsigned max_total = 3;        // orthogonality, runge, quadratic, linearization
  unsigned symmetry_total = 6;   // conjugation symmetries and special values
  unsigned degree_total = 8;     // degree law
  unsigned uchp_max = 6;         // univariate routes, per index
  unsigned uchp_ortho_total = 6; // univariate orthogonality, m+n bound
  unsigned fw_max_slot = 2;      // Fourier–Wigner and integral representations
  unsigned op_bound = 6;         // op_equal degree bound
  unsigned nodes = 30;           // orthogonality rules, per real dimension
  unsigned fw_nodes = 40;        // Wigner, Moyal and integral-representation rules
  unsigned moyal_outer = 8;      // phase-space rule per dimension
  unsigned trunc = 25;           // series truncation
  unsigned points = 5;           // seeded points for Wigner and series checks
  unsigned intrep_points = 3;
  double param_radius = 0.3;
  double uchp_point_radius = 1.0;
  double bchp_point_radius = 0.5;
  double fw_point_radius = 1.0;
  std::optional<double> tol;     // replaces every numeric base tolerance
  std::uint64_t seed = kDefaultSeed;
  bool as_printed_only = false;  // report printed forms only; their failures count
};

/// Suite ids in the order "all" runs them.
const std::vector<std::string>& known_suites();
bool is_known(std::string_view id);

/// Runs a suite or "all". Throws std::invalid_argument for unknown ids.
std::vector<VerifyReport> run(std::string_view id, const RunConfig& cfg);

/// Whether a record decides the exit status under the erratum policy.
bool counts(const VerifyReport& r, const RunConfig& cfg);
/// True when every counting record passes.
bool all_pass(const std::vector<VerifyReport>& records, const RunConfig& cfg);

}  // namespace polyherm::suites
