#pragma once

#include <vector>

#include "fourier/discrete_fourier.hpp"
#include "fourier/functions.hpp"
#include "fourier/grid.hpp"

namespace fourier {

/// n (exp(-i pi m / n) - 1)
Complex phi(int n, int m);
/// n (exp(i pi m / n) - 1); |psi|^2 = 4 n^2 sin^2(pi m / 2n).
Complex psi(int n, int m);

/**
 * Boundary corrections for summation by parts on the non-wrapping grid.
 *
 * With g' = derivative(g), e(x) = exp(-i pi x m):
 *   C  = g[n-1] e((n-1)/n) - g[-n] e(-1)
 *   D  = -(1/n) g[-n] exp(i pi m/n) e(-1)
 *   Cp = -g'[-n] e(-1)
 *   Dp = -(1/n) g'[-n] exp(i pi m/n) e(-1)
 *   E  = phi D - C
 *   F  = psi phi D - psi C + phi Dp - Cp
 */
struct BoundaryTerms {
  int m = 0;
  Complex C, D, Cp, Dp, E, F;

  /// phi Dp - Cp; only enters through F = psi E + Ep.
  Complex Ep(int n) const { return phi(n, m) * Dp - Cp; }
};

/// Throws std::out_of_range unless -n <= m <= n-1.
BoundaryTerms boundary_terms(const GridFunction& gf, int m);

struct DftResiduals {
  Complex first;   ///< g^(m) - (g'^(m) + E) / psi
  Complex second;  ///< g^(m) - (g''^(m) + F) / psi^2
};

/// Residuals of both summation-by-parts forms of the coefficient at mode m.
/// Throws std::invalid_argument for m = 0, std::out_of_range outside the grid.
DftResiduals dft_identity_residuals(const GridFunction& gf, int m);

struct ModeResiduals {
  int m;
  DftResiduals residuals;
};

/// dft_identity_residuals for every m != 0, ascending m, sharing the spectra.
std::vector<ModeResiduals> dft_identity_sweep(const GridFunction& gf);

/// 2H/epsilon + 1. Throws std::invalid_argument for epsilon <= 0 or H < 0.
double tail_threshold(double H, double epsilon);

/// sum_{m=L}^{Lp} |s[m]|. Requires L <= Lp inside -n .. n-1 with L Lp > 0.
double tail_sum(const Spectrum& s, int L, int Lp);

struct DecayReport {
  double worst_ratio = 0.0;  ///< max_{m != 0} |s[m]| m^2 / H (<= 1 means the bound holds)
  int worst_m = 0;
  bool holds() const { return worst_ratio <= 1.0; }
};

/// Ties go to the smallest |m|, negative m first. With H = 0 the ratio is 0
/// when every nonzero mode is below 1e-12 and +inf otherwise.
DecayReport decay_bound_check(const Spectrum& s, double H);

struct UnifBoundedReport {
  BoundConstants constants;  ///< norms of f itself
  double F_bound = 0.0;      ///< 5 D
  double g2_bound = 0.0;     ///< M + 2 B
  double F_slack = 0.0;      ///< min_m (5 D - |F(m)|)
  int F_worst_m = 0;
  double g2_slack = 0.0;     ///< min_m (M + 2B - |g''^(m)|)
  int g2_worst_m = 0;

  bool holds(double tolerance = 1e-9) const {
    return F_slack >= -tolerance && g2_slack >= -tolerance;
  }
};

/// Uniform bounds on F(m) and the second-derivative coefficients for a function
/// vanishing at +-1. Throws std::invalid_argument when |f(+-1)| > 1e-12.
UnifBoundedReport unifbounded_checks(const SmoothPeriodicFunction& f, int n);

}  // namespace fourier
