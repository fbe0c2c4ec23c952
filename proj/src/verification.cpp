#include "fourier/verification.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "fourier/discrete_calculus.hpp"
#include "fourier/discrete_fourier.hpp"
#include "fourier/functions.hpp"
#include "fourier/spectral_bounds.hpp"

namespace fourier {

namespace {

// Report order (ASCII order of the names).
enum Check : std::size_t {
  kFBound,
  kAliasOracle,
  kCoeffConvergence,
  kDecayH,
  kDftIdentity1,
  kDftIdentity2,
  kFtc,
  kG2Bound,
  kIntegralDarboux,
  kInversion,
  kMTestDomination,
  kParts,
  kPhiPsiMag,
  kProductRule,
  kPsiLower,
  kTailEps,
  kCheckCount
};

constexpr int kMaxGridSize = 1 << 20;
constexpr int kSupSamples = 2048;

struct Candidate {
  double residual;
  Location location;
};

// Canonical location order used to break ties: function, n, |m| with negative
// m first, then x.
bool location_before(const Location& a, const Location& b) {
  if (a.function != b.function) return a.function < b.function;
  const int an = a.n.value_or(-1), bn = b.n.value_or(-1);
  if (an != bn) return an < bn;
  if (a.m != b.m) {
    if (!a.m || !b.m) return !a.m;
    const int am = std::abs(*a.m), bm = std::abs(*b.m);
    if (am != bm) return am < bm;
    return *a.m < *b.m;
  }
  return a.x.value_or(-2.0) < b.x.value_or(-2.0);
}

class Worst {
public:
  void offer(double residual, Location location) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    if (!best_ || residual > best_->residual ||
        (residual == best_->residual && location_before(location, best_->location)))
      best_ = Candidate{residual, std::move(location)};
  }
  void merge(const Worst& other) {
    if (other.best_) offer(other.best_->residual, other.best_->location);
  }
  const std::optional<Candidate>& best() const { return best_; }

private:
  std::optional<Candidate> best_;
};

using Findings = std::array<Worst, kCheckCount>;

Location at(const std::string& function, int n, std::optional<int> m = std::nullopt) {
  return Location{function, n, m, std::nullopt};
}

double positive_scale(double s) { return s > 0.0 ? s : 1.0; }

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t n,
                          std::uint64_t trial) {
  return mix64(mix64(mix64(mix64(seed) ^ tag) ^ n) ^ trial);
}

struct Subject {
  std::string name;
  SmoothPeriodicFunction f;
  SmoothPeriodicFunction h;  // f - f(1); vanishes at both endpoints
  BoundConstants bounds;     // norms of h
};

// Identities checked on any grid function, from a catalog sample or random.
void check_grid_function(const GridFunction& gf, const std::string& label, Findings& out) {
  const int n = gf.n();
  const double scale = positive_scale(gf.max_abs());

  const GridFunction round_trip = invert(discrete_coefficients(gf));
  double inversion_error = 0.0;
  for (int j = -n; j < n; ++j)
    inversion_error = std::max(inversion_error, std::abs(round_trip[j] - gf[j]));
  out[kInversion].offer(inversion_error / (1.0 + gf.max_abs()), at(label, n));

  out[kFtc].offer(std::abs(ftc_residual(gf)) / (n * scale), at(label, n));

  for (const ModeResiduals& r : dft_identity_sweep(gf)) {
    out[kDftIdentity1].offer(std::abs(r.residuals.first) / scale, at(label, n, r.m));
    out[kDftIdentity2].offer(std::abs(r.residuals.second) / scale, at(label, n, r.m));
  }
}

void check_pair(const GridFunction& u, const GridFunction& v, const std::string& label,
                Findings& out) {
  const int n = u.n();
  const double scale = n * positive_scale(u.max_abs()) * positive_scale(v.max_abs());
  const GridFunction product = product_rule_residual(u, v);
  double worst = 0.0;
  int worst_j = -n;
  for (int j = -n; j < n; ++j) {
    if (std::abs(product[j]) > worst) {
      worst = std::abs(product[j]);
      worst_j = j;
    }
  }
  Location loc = at(label, n);
  loc.x = u.grid().point(worst_j);
  out[kProductRule].offer(worst / scale, loc);
  out[kParts].offer(std::abs(parts_residual(u, v)) / scale, at(label, n));
}

Findings random_cell(const SuiteConfig& cfg, int n) {
  Findings out;
  const Grid grid(n);
  for (int t = 0; t < cfg.random_trials; ++t) {
    const std::string label = "random:" + std::to_string(t);
    const GridFunction u = random_grid_function(grid, stream_seed(cfg.seed, 1, n, t));
    const GridFunction v = random_grid_function(grid, stream_seed(cfg.seed, 2, n, t));
    check_grid_function(u, label, out);
    check_pair(u, v, label, out);
  }
  return out;
}

Findings function_cell(const Subject& s, int n) {
  Findings out;
  const GridFunction gf = sample(s.f, Grid(n));
  check_grid_function(gf, s.name, out);
  check_pair(gf, sample(s.h, Grid(n)), s.name, out);

  const Spectrum spectrum = discrete_coefficients(gf);
  for (int m = -n; m < n; ++m) {
    if (m == 0) continue;
    const double bound = s.bounds.H / (static_cast<double>(m) * m);
    out[kDecayH].offer(std::abs(spectrum[m]) - bound, at(s.name, n, m));
  }

  const UnifBoundedReport ub = unifbounded_checks(s.h, n);
  out[kFBound].offer(-ub.F_slack, at(s.name, n, ub.F_worst_m));
  out[kG2Bound].offer(-ub.g2_slack, at(s.name, n, ub.g2_worst_m));

  if (s.f.has_exact_coefficient()) {
    int cutoff = std::max(64, 8 * n);
    if (s.f.degree) cutoff = std::max(cutoff, *s.f.degree + 1);
    const double scale = positive_scale(gf.max_abs());
    for (int m = -n; m < n; ++m) {
      const double diff = std::abs(spectrum[m] - alias_fold(s.f, n, m, cutoff));
      out[kAliasOracle].offer(diff / std::max(1.0, scale), at(s.name, n, m));
    }
  }
  return out;
}

Findings symbol_cell(int max_n) {
  Findings out;
  for (int n = 1; n <= max_n; ++n) {
    for (int m = -n; m < n; ++m) {
      if (m == 0) continue;
      const Complex ph = phi(n, m), ps = psi(n, m);
      const double four_m2 = 4.0 * m * static_cast<double>(m);
      out[kPsiLower].offer((four_m2 - std::norm(ps)) / four_m2, at("", n, m));
      const double mismatch = std::max({std::abs(ps - std::conj(ph)),
                                        std::abs(ps) - 2.0 * n,
                                        std::abs(std::abs(ph) - std::abs(ps))});
      out[kPhiPsiMag].offer(mismatch / n, at("", n, m));
    }
  }
  return out;
}

Findings convergence_cell(const SuiteConfig& cfg, const Subject& s, int largest_n) {
  Findings out;
  const int limit = std::min(cfg.mode_limit, largest_n - 1);
  const GridFunction gf = sample(s.f, Grid(largest_n));
  const RootTable roots(largest_n);
  for (int m = -limit; m <= limit; ++m) {
    const double gap = std::abs(discrete_coefficient(gf, m, roots) - coefficient(s.f, m));
    out[kCoeffConvergence].offer(gap, at(s.name, largest_n, m));
  }
  out[kIntegralDarboux].offer(integral_gap(s.f, largest_n), at(s.name, largest_n));

  std::vector<int> orders = {1};
  for (int N = 2; N <= cfg.mode_limit; N *= 2) orders.push_back(N);
  for (int N : orders) {
    const double excess = sup_error(s.f, N, kSupSamples) - m_test_majorant(s.bounds.H, N);
    Location loc{s.name, std::nullopt, N, std::nullopt};
    out[kMTestDomination].offer(excess, loc);
  }
  return out;
}

std::string epsilon_label(const std::string& name, double epsilon) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, epsilon);
  return name + " eps=" + std::string(buf, res.ptr);
}

Findings tail_cell(const Subject& s, double epsilon) {
  Findings out;
  const std::string label = epsilon_label(s.name, epsilon);
  const double threshold = tail_threshold(s.bounds.H, epsilon);
  const int n = tail_grid_size(threshold);
  const int first_L = static_cast<int>(std::floor(threshold)) + 1;
  if (n == 0) {
    // No grid within reach has a mode beyond the threshold.
    out[kTailEps].offer(std::numeric_limits<double>::infinity(),
                        Location{label, std::nullopt, first_L, std::nullopt});
    return out;
  }
  const GridFunction gf = sample(s.f, Grid(n));
  const RootTable roots(n);
  // Longest same-sign ranges: [L, n-1] and [-n, -L]; every admissible (L, L')
  // range is contained in one of them.
  const int count = n - first_L;
  std::vector<double> pos(static_cast<std::size_t>(count) + 1, 0.0);
  std::vector<double> neg(static_cast<std::size_t>(count) + 2, 0.0);
  for (int m = n - 1; m >= first_L; --m)
    pos[m - first_L] = pos[m - first_L + 1] + std::abs(discrete_coefficient(gf, m, roots));
  for (int k = n; k >= first_L; --k)
    neg[k - first_L] = neg[k - first_L + 1] + std::abs(discrete_coefficient(gf, -k, roots));
  for (int L = first_L; L < n; ++L) {
    out[kTailEps].offer(pos[L - first_L] / epsilon, Location{label, n, L, std::nullopt});
    out[kTailEps].offer(neg[L - first_L] / epsilon, Location{label, n, -L, std::nullopt});
  }
  return out;
}

double tolerance_for(const SuiteConfig& cfg, const CheckInfo& info) {
  const auto it = cfg.tolerance_overrides.find(info.name);
  return it == cfg.tolerance_overrides.end() ? info.default_tolerance : it->second;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = {
      {"F_bound", "uniform bound |F_n(m)| <= 5D for a function vanishing at +-1", 1e-9},
      {"alias_oracle", "grid coefficients equal exact coefficients folded mod 2n", 1e-12},
      {"coeff_convergence", "grid coefficients converge to the integral coefficients", 1e-8},
      {"decay_H", "coefficient decay |g_n(m)| <= H/m^2 with H = (M + 2B + 5D)/4", 1e-12},
      {"dft_identity_1", "g(m) = (g'(m) + E_n(m)) / psi_n(m) for m != 0", 1e-10},
      {"dft_identity_2", "g(m) = (g''(m) + F_n(m)) / psi_n(m)^2 for m != 0", 1e-9},
      {"ftc", "integral of the discrete derivative telescopes to the endpoint values", 1e-12},
      {"g2_bound", "uniform bound |g''_n(m)| <= M + 2B for a function vanishing at +-1", 1e-9},
      {"integral_darboux", "grid integrals converge to the integral", 1e-8},
      {"inversion", "inversion theorem on the 2n-point grid", 1e-10},
      {"m_test_domination", "sup-norm truncation error is dominated by the M-test tail", 1e-9},
      {"parts", "discrete integration by parts with boundary terms", 1e-12},
      {"phi_psi_mag", "psi_n = conj(phi_n) and |phi_n| = |psi_n| <= 2n", 1e-12},
      {"product_rule", "discrete product rule (uv)' = u' shift(v) + u v'", 1e-12},
      {"psi_lower", "|psi_n(m)|^2 >= 4 m^2", 1e-9},
      {"tail_eps", "coefficient tails beyond N(eps) = 2H/eps + 1 sum below eps (ratio to eps)", 1.0},
  };
  return catalog;
}

void SuiteConfig::validate() const {
  if (function_names.empty()) throw std::invalid_argument("no functions configured");
  if (grid_sizes.empty()) throw std::invalid_argument("no grid sizes configured");
  for (int n : grid_sizes)
    if (n < 1 || n > kMaxGridSize)
      throw std::invalid_argument("invalid grid size " + std::to_string(n) +
                                  " (must be in 1 .. " + std::to_string(kMaxGridSize) + ")");
  if (mode_limit < 1) throw std::invalid_argument("mode limit must be >= 1");
  if (epsilons.empty()) throw std::invalid_argument("no epsilons configured");
  for (double e : epsilons)
    if (!(e > 0.0) || !std::isfinite(e))
      throw std::invalid_argument("invalid epsilon " + std::to_string(e) + " (must be > 0)");
  if (random_trials < 0) throw std::invalid_argument("random trial count must be >= 0");
  for (const auto& [name, value] : tolerance_overrides) {
    const auto& catalog = check_catalog();
    const bool known = std::any_of(catalog.begin(), catalog.end(),
                                   [&](const CheckInfo& c) { return c.name == name; });
    if (!known) throw std::invalid_argument("unknown check '" + name + "' in tolerance override");
    if (!(value > 0.0) || !std::isfinite(value))
      throw std::invalid_argument("tolerance for '" + name + "' must be > 0");
  }
}

GridFunction random_grid_function(const Grid& grid, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  auto uniform = [&engine] {
    const double unit = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    return 2.0 * unit - 1.0;
  };
  GridFunction gf(grid);
  for (int j = grid.first_index(); j <= grid.last_index(); ++j) {
    const double re = uniform();
    const double im = uniform();
    gf[j] = Complex(re, im);
  }
  return gf;
}

int tail_grid_size(double threshold) {
  const double first_L = std::floor(threshold) + 1.0;
  if (first_L <= 255.0) return 256;
  for (int n = 4096; n <= 32768; n *= 2)
    if (first_L <= n - 1.0) return n;
  return 0;
}

std::vector<LemmaReport> run_lemma_suite(const SuiteConfig& cfg) {
  cfg.validate();

  std::vector<Subject> subjects;
  for (const std::string& name : cfg.function_names) {
    Subject s{name, parse_function(name), {}, {}};
    const Complex at_right = s.f.eval(1.0);
    if (std::abs(s.f.eval(-1.0) - at_right) > 1e-12)
      throw std::invalid_argument("function '" + name + "' is not periodic on [-1, 1]");
    s.h = combine({{1.0, s.f}, {-at_right, constant(1.0)}});
    s.bounds = bound_constants(s.f);
    subjects.push_back(std::move(s));
  }

  std::vector<int> sizes = cfg.grid_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  const int largest_n = sizes.back();

  std::vector<std::function<Findings()>> tasks;
  for (int n : sizes) tasks.emplace_back([&cfg, n] { return random_cell(cfg, n); });
  for (const Subject& s : subjects) {
    for (int n : sizes) tasks.emplace_back([&s, n] { return function_cell(s, n); });
    tasks.emplace_back([&cfg, &s, largest_n] { return convergence_cell(cfg, s, largest_n); });
    for (double eps : cfg.epsilons) tasks.emplace_back([&s, eps] { return tail_cell(s, eps); });
  }
  tasks.emplace_back([largest_n] { return symbol_cell(largest_n); });

  std::vector<Findings> results(tasks.size());
  parallel_for(tasks.size(), cfg.workers, [&](std::size_t i) { results[i] = tasks[i](); });

  Findings merged;
  for (const Findings& f : results)
    for (std::size_t c = 0; c < kCheckCount; ++c) merged[c].merge(f[c]);

  std::vector<LemmaReport> reports;
  const auto& catalog = check_catalog();
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    LemmaReport r;
    r.check_name = catalog[c].name;
    r.tolerance_used = tolerance_for(cfg, catalog[c]);
    if (const auto& best = merged[c].best()) {
      r.worst_residual = best->residual;
      r.worst_location = best->location;
    }
    r.passed = r.worst_residual <= r.tolerance_used;
    reports.push_back(std::move(r));
  }
  std::sort(reports.begin(), reports.end(),
            [](const LemmaReport& a, const LemmaReport& b) { return a.check_name < b.check_name; });
  return reports;
}

std::vector<ConvergenceRow> run_convergence(const std::string& function_name,
                                            const std::vector<int>& N_values, int samples) {
  const SmoothPeriodicFunction f = parse_function(function_name);
  for (std::size_t i = 0; i < N_values.size(); ++i) {
    if (N_values[i] < 1) throw std::invalid_argument("truncation orders must be >= 1");
    if (i > 0 && N_values[i] <= N_values[i - 1])
      throw std::invalid_argument("truncation orders must be strictly increasing");
  }
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  std::vector<ConvergenceRow> rows;
  if (N_values.empty()) return rows;
  const double H = bound_constants(f).H;
  for (int N : N_values) rows.push_back({N, sup_error(f, N, samples), m_test_majorant(H, N)});
  return rows;
}

std::vector<DecayRow> run_spectrum_decay(const std::string& function_name, int n) {
  const SmoothPeriodicFunction f = parse_function(function_name);
  const Spectrum s = discrete_coefficients(sample(f, Grid(n)));
  const double H = bound_constants(f).H;
  std::vector<DecayRow> rows;
  for (int m = -n; m < n; ++m) {
    if (m == 0) continue;
    rows.push_back({m, std::abs(s[m]), H / (static_cast<double>(m) * m)});
  }
  return rows;
}

}  // namespace fourier
