#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fourier/continuous_fourier.hpp"
#include "fourier/grid.hpp"

namespace fourier {

struct SuiteConfig {
  std::vector<std::string> function_names;
  std::vector<int> grid_sizes;
  int mode_limit = 32;
  std::vector<double> epsilons = {0.1, 0.01};
  std::uint64_t seed = 42;
  /// check name -> tolerance; every value must be > 0.
  std::map<std::string, double> tolerance_overrides;
  /// Seeded random grid functions per grid size (and random pairs for the
  /// two-function identities).
  int random_trials = 8;
  /// 0 picks default_worker_count().
  std::size_t workers = 0;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

struct Location {
  std::string function;  ///< empty when the check is not tied to a function
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> x;
};

struct LemmaReport {
  std::string check_name;
  bool passed = false;
  double worst_residual = 0.0;
  Location worst_location;
  double tolerance_used = 0.0;
};

struct CheckInfo {
  std::string name;
  std::string certifies;  ///< the identity or bound it exercises
  double default_tolerance;
};

/// All check names in report order, with what each certifies.
const std::vector<CheckInfo>& check_catalog();

/// Runs every check over the configured cross product; one report per check,
/// ordered by check name. Deterministic for a fixed config regardless of the
/// worker count.
std::vector<LemmaReport> run_lemma_suite(const SuiteConfig& cfg);

/// One row per N (strictly increasing, each >= 1). H comes from bound_constants.
std::vector<ConvergenceRow> run_convergence(const std::string& function_name,
                                            const std::vector<int>& N_values,
                                            int samples = 2048);

struct DecayRow {
  int m;
  double abs_coeff;
  double decay_bound;  ///< H / m^2
};

/// Rows for m = -n .. n-1, m != 0, ascending.
std::vector<DecayRow> run_spectrum_decay(const std::string& function_name, int n);

/// Grid function with real and imaginary parts uniform in [-1, 1), drawn from
/// std::mt19937_64 seeded with `seed` (53-bit mantissa conversion, so the
/// values are identical on every platform).
GridFunction random_grid_function(const Grid& grid, std::uint64_t seed);

/// Grid size used to test the coefficient tail against threshold N(eps):
/// 256 when some L with N < L <= 255 exists, otherwise the smallest 4096 * 2^k
/// with N < n - 1. Returns 0 when that exceeds 32768.
int tail_grid_size(double threshold);

}  // namespace fourier
