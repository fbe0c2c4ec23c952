#include "fourier/spectral_bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fourier/discrete_calculus.hpp"

namespace fourier {

namespace {

// exp(i pi j m / n) with j m reduced mod 2n in integers.
Complex grid_phase(int n, long long j, long long m) {
  const long long period = 2LL * n;
  long long k = (j * m) % period;
  if (k < 0) k += period;
  return unit_phase(static_cast<double>(k) / n);
}

double parity(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

void require_mode(int n, int m) {
  if (m < -n || m >= n)
    throw std::out_of_range("mode " + std::to_string(m) + " outside -n .. n-1 (n=" +
                            std::to_string(n) + ")");
}

// Visits modes in tie-break order: smallest |m| first, negative before positive.
template <typename Fn>
void for_each_mode_by_magnitude(int n, bool include_zero, Fn&& fn) {
  if (include_zero) fn(0);
  for (int k = 1; k <= n; ++k) {
    fn(-k);
    if (k <= n - 1) fn(k);
  }
}

}  // namespace

Complex phi(int n, int m) {
  const double t = -static_cast<double>(m) / n;
  const double half = sinpi(0.5 * t);
  return static_cast<double>(n) * Complex(-2.0 * half * half, sinpi(t));
}

Complex psi(int n, int m) {
  const double t = static_cast<double>(m) / n;
  const double half = sinpi(0.5 * t);
  return static_cast<double>(n) * Complex(-2.0 * half * half, sinpi(t));
}

BoundaryTerms boundary_terms(const GridFunction& gf, int m) {
  const int n = gf.n();
  require_mode(n, m);
  const double inv_n = 1.0 / n;
  const Complex g_left = gf[-n];
  const Complex g_right = gf[n - 1];
  const Complex dg_left = static_cast<double>(n) * (gf[-n + 1] - gf[-n]);  // g'[-n]

  const double e_left = parity(m);                      // exp(-i pi (-1) m)
  const Complex e_right = grid_phase(n, -(n - 1), m);   // exp(-i pi ((n-1)/n) m)
  const Complex e_step = grid_phase(n, 1, m);           // exp(i pi m / n)
  const Complex ph = phi(n, m);
  const Complex ps = psi(n, m);

  BoundaryTerms bt;
  bt.m = m;
  bt.C = g_right * e_right - g_left * e_left;
  bt.D = -inv_n * g_left * e_step * e_left;
  bt.Cp = -dg_left * e_left;
  bt.Dp = -inv_n * dg_left * e_step * e_left;
  bt.E = ph * bt.D - bt.C;
  bt.F = ps * ph * bt.D - ps * bt.C + ph * bt.Dp - bt.Cp;
  return bt;
}

namespace {

DftResiduals residuals_from(int n, int m, Complex g, Complex g1, Complex g2,
                            const BoundaryTerms& bt) {
  const Complex ps = psi(n, m);
  const Complex ps2 = ps * ps;
  return {(g * ps - (g1 + bt.E)) / ps, (g * ps2 - (g2 + bt.F)) / ps2};
}

}  // namespace

DftResiduals dft_identity_residuals(const GridFunction& gf, int m) {
  const int n = gf.n();
  if (m == 0) throw std::invalid_argument("dft identity is undefined at m = 0");
  require_mode(n, m);
  const RootTable roots(n);
  const GridFunction d1 = derivative(gf);
  const GridFunction d2 = derivative(d1);
  return residuals_from(n, m, discrete_coefficient(gf, m, roots),
                        discrete_coefficient(d1, m, roots),
                        discrete_coefficient(d2, m, roots), boundary_terms(gf, m));
}

std::vector<ModeResiduals> dft_identity_sweep(const GridFunction& gf) {
  const int n = gf.n();
  const GridFunction d1 = derivative(gf);
  const Spectrum g = discrete_coefficients(gf);
  const Spectrum g1 = discrete_coefficients(d1);
  const Spectrum g2 = discrete_coefficients(derivative(d1));
  std::vector<ModeResiduals> out;
  out.reserve(static_cast<std::size_t>(2 * n - 1));
  for (int m = -n; m < n; ++m) {
    if (m == 0) continue;
    out.push_back({m, residuals_from(n, m, g[m], g1[m], g2[m], boundary_terms(gf, m))});
  }
  return out;
}

double tail_threshold(double H, double epsilon) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("tail_threshold: epsilon must be > 0");
  if (!(H >= 0.0)) throw std::invalid_argument("tail_threshold: H must be >= 0");
  return 2.0 * H / epsilon + 1.0;
}

double tail_sum(const Spectrum& s, int L, int Lp) {
  if (L > Lp) throw std::invalid_argument("tail_sum: need L <= Lp");
  if (!s.contains(L) || !s.contains(Lp))
    throw std::out_of_range("tail_sum: range outside -n .. n-1");
  if (static_cast<long long>(L) * Lp <= 0)
    throw std::invalid_argument("tail_sum: L and Lp must be nonzero with the same sign");
  double sum = 0.0;
  for (int m = L; m <= Lp; ++m) sum += std::abs(s[m]);
  return sum;
}

DecayReport decay_bound_check(const Spectrum& s, double H) {
  DecayReport report;
  bool first = true;
  for_each_mode_by_magnitude(s.n(), false, [&](int m) {
    const double mag = std::abs(s[m]);
    double ratio;
    if (H > 0.0)
      ratio = mag * static_cast<double>(m) * m / H;
    else
      ratio = mag <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
    if (first || ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_m = m;
      first = false;
    }
  });
  return report;
}

UnifBoundedReport unifbounded_checks(const SmoothPeriodicFunction& f, int n) {
  if (std::abs(f.eval(1.0)) > 1e-12 || std::abs(f.eval(-1.0)) > 1e-12)
    throw std::invalid_argument("unifbounded_checks: '" + f.name +
                                "' must vanish at x = -1 and x = 1");
  UnifBoundedReport report;
  report.constants = bound_constants(f, Complex(0.0));
  report.F_bound = 5.0 * report.constants.D;
  report.g2_bound = report.constants.M + 2.0 * report.constants.B;

  const GridFunction gf = sample(f, Grid(n));
  const Spectrum g2 = discrete_coefficients(derivative(derivative(gf)));
  bool first = true;
  for_each_mode_by_magnitude(n, true, [&](int m) {
    const double F_slack = report.F_bound - std::abs(boundary_terms(gf, m).F);
    const double g2_slack = report.g2_bound - std::abs(g2[m]);
    if (first || F_slack < report.F_slack) {
      report.F_slack = F_slack;
      report.F_worst_m = m;
    }
    if (first || g2_slack < report.g2_slack) {
      report.g2_slack = g2_slack;
      report.g2_worst_m = m;
    }
    first = false;
  });
  return report;
}

}  // namespace fourier
