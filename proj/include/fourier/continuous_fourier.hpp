#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fourier/functions.hpp"
#include "fourier/numeric.hpp"

namespace fourier {

/// One row of a convergence table.
struct ConvergenceRow {
  int N = 0;
  double sup_error = 0.0;
  double m_test_bound = 0.0;
};

/// integral_{-1}^{1} f(x) exp(-i pi m x) dx: the closed form when f has one,
/// otherwise quadrature_coefficient(f, m).
Complex coefficient(const SmoothPeriodicFunction& f, int m);

/// Discrete coefficient of f sampled at n* = max(64, 16 (|m| + 1)).
Complex quadrature_coefficient(const SmoothPeriodicFunction& f, int m);

/**
 * Truncated series (1/2) sum_{m=-N}^{N} c_m exp(i pi x m) with the
 * coefficients computed once. Evaluation at x = 1 is routed to x = -1.
 */
class PartialSum {
public:
  PartialSum(const SmoothPeriodicFunction& f, int N);

  int order() const { return N_; }
  Complex operator()(double x) const;

private:
  int N_;
  std::vector<Complex> coefficients_;  // index m + N
};

Complex reconstruct(const SmoothPeriodicFunction& f, int N, double x);

/// max over the samples + 1 equispaced points of [-1, 1] (both ends included)
/// of |f(x) - reconstruct(f, N, x)|. Throws for samples < 2.
double sup_error(const SmoothPeriodicFunction& f, int N, int samples = 2048);

/// (1/2) sum_{N < |m| <= 10^6} H / m^2 + 2 H 10^-6. Throws for N < 1 or H < 0.
double m_test_majorant(double H, int N);

/// |discrete coefficient of sample(f, n) at m - coefficient(f, m)|.
double discrete_to_continuous_gap(const SmoothPeriodicFunction& f, int m, int n);

/// |integrate(sample(f, n)) - coefficient(f, 0)|.
double integral_gap(const SmoothPeriodicFunction& f, int n);

/// A smooth function on [a, b] with f(a) = f(b). exact_coefficient, when set,
/// returns (1/L) integral_a^b f(x) exp(-2 pi i x m / L) dx.
struct IntervalFunction {
  std::string name;
  std::function<Complex(double)> eval;
  std::function<Complex(double)> d1;
  std::function<Complex(double)> d2;
  std::function<Complex(int)> exact_coefficient;
};

/**
 * f on [a, b] pulled back to the circle model through x = a + L (t + 1) / 2.
 *
 * Coefficients on [a, b] use the 1/L normalization and relate to those of the
 * pulled-back function g by
 *   c_[a,b](m) = (1/2) exp(-i pi m (2a/L + 1)) g^(m),
 * and the series on [a, b] carries no 1/2 factor.
 */
class RescaledFunction {
public:
  double a() const { return a_; }
  double b() const { return b_; }
  double length() const { return b_ - a_; }
  const SmoothPeriodicFunction& pulled_back() const { return pulled_; }

  /// Circle coordinate t in [-1, 1] of x in [a, b].
  double to_circle(double x) const { return 2.0 * (x - a_) / length() - 1.0; }

  Complex coefficient(int m) const;
  /// sum_{m=-N}^{N} coefficient(m) exp(2 pi i x m / L)
  Complex reconstruct(int N, double x) const;

private:
  friend RescaledFunction rescale(const IntervalFunction&, double, double);
  RescaledFunction(double a, double b, SmoothPeriodicFunction pulled)
      : a_(a), b_(b), pulled_(std::move(pulled)) {}

  double a_, b_;
  SmoothPeriodicFunction pulled_;
};

/// Throws std::invalid_argument for b <= a or |f(a) - f(b)| > 1e-12.
RescaledFunction rescale(const IntervalFunction& f, double a, double b);

/// [a, b]-catalog: "cos-period" is cos(2 pi x / L), "exp-cos-period" is
/// exp(cos(2 pi x / L)), L = b - a. Throws std::invalid_argument otherwise.
IntervalFunction interval_function(const std::string& name, double a, double b);

}  // namespace fourier
