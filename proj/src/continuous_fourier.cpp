#include "fourier/continuous_fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fourier/discrete_fourier.hpp"
#include "fourier/grid.hpp"

namespace fourier {

namespace {

constexpr int kMajorantCutoff = 1'000'000;

}  // namespace

Complex quadrature_coefficient(const SmoothPeriodicFunction& f, int m) {
  const int abs_m = m < 0 ? -m : m;
  const int n = std::max(64, 16 * (abs_m + 1));
  return discrete_coefficient(sample(f, Grid(n)), m);
}

Complex coefficient(const SmoothPeriodicFunction& f, int m) {
  if (f.has_exact_coefficient()) return f.exact_coefficient(m);
  return quadrature_coefficient(f, m);
}

PartialSum::PartialSum(const SmoothPeriodicFunction& f, int N) : N_(N) {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  coefficients_.reserve(static_cast<std::size_t>(2 * N + 1));
  for (int m = -N; m <= N; ++m) coefficients_.push_back(coefficient(f, m));
}

Complex PartialSum::operator()(double x) const {
  if (x == 1.0) x = -1.0;
  CompensatedSum sum;
  for (int m = -N_; m <= N_; ++m)
    sum.add(coefficients_[static_cast<std::size_t>(m + N_)] * unit_phase(x * m));
  return 0.5 * sum.value();
}

Complex reconstruct(const SmoothPeriodicFunction& f, int N, double x) {
  return PartialSum(f, N)(x);
}

double sup_error(const SmoothPeriodicFunction& f, int N, int samples) {
  if (samples < 2) throw std::invalid_argument("sup_error: samples must be >= 2");
  const PartialSum series(f, N);
  double worst = 0.0;
  for (int k = 0; k <= samples; ++k) {
    const double x = static_cast<double>(2 * k - samples) / samples;
    worst = std::max(worst, std::abs(f.eval(x) - series(x)));
  }
  return worst;
}

double m_test_majorant(double H, int N) {
  if (N < 1) throw std::invalid_argument("m_test_majorant: N must be >= 1");
  if (!(H >= 0.0)) throw std::invalid_argument("m_test_majorant: H must be >= 0");
  // The +m and -m halves cancel the 1/2; smallest terms first.
  double sum = 0.0;
  for (int m = kMajorantCutoff; m > N; --m) {
    const double md = m;
    sum += 1.0 / (md * md);
  }
  return H * sum + 2.0 * H / kMajorantCutoff;
}

double discrete_to_continuous_gap(const SmoothPeriodicFunction& f, int m, int n) {
  if (n < 1) throw std::invalid_argument("grid size must be >= 1");
  if (m < -n || m >= n) throw std::out_of_range("mode outside -n .. n-1");
  return std::abs(discrete_coefficient(sample(f, Grid(n)), m) - coefficient(f, m));
}

double integral_gap(const SmoothPeriodicFunction& f, int n) {
  return std::abs(integrate(sample(f, Grid(n))) - coefficient(f, 0));
}

Complex RescaledFunction::coefficient(int m) const {
  const double shift = 2.0 * a_ / length() + 1.0;
  return 0.5 * unit_phase(-m * shift) * fourier::coefficient(pulled_, m);
}

Complex RescaledFunction::reconstruct(int N, double x) const {
  if (N < 0) throw std::invalid_argument("truncation order must be >= 0");
  CompensatedSum sum;
  for (int m = -N; m <= N; ++m)
    sum.add(coefficient(m) * unit_phase(2.0 * x * m / length()));
  return sum.value();
}

RescaledFunction rescale(const IntervalFunction& f, double a, double b) {
  if (!(b > a)) throw std::invalid_argument("rescale: need b > a");
  if (std::abs(f.eval(a) - f.eval(b)) > 1e-12)
    throw std::invalid_argument("rescale: '" + f.name + "' differs at a and b");
  const double L = b - a;
  const double half = 0.5 * L;
  auto to_interval = [a, half](double t) { return a + half * (t + 1.0); };

  SmoothPeriodicFunction g;
  g.name = f.name + "@[" + std::to_string(a) + "," + std::to_string(b) + "]";
  g.eval = [f, to_interval](double t) { return f.eval(to_interval(t)); };
  g.d1 = [f, to_interval, half](double t) { return half * f.d1(to_interval(t)); };
  g.d2 = [f, to_interval, half](double t) {
    return half * half * f.d2(to_interval(t));
  };
  g.endpoint_value = f.eval(b);
  if (f.exact_coefficient) {
    const double shift = 2.0 * a / L + 1.0;
    g.exact_coefficient = [f, shift](int m) {
      return 2.0 * unit_phase(m * shift) * f.exact_coefficient(m);
    };
  }
  return RescaledFunction(a, b, std::move(g));
}

IntervalFunction interval_function(const std::string& name, double a, double b) {
  if (!(b > a)) throw std::invalid_argument("interval function: need b > a");
  const double L = b - a;
  const double w = 2.0 * std::numbers::pi / L;
  IntervalFunction f;
  f.name = name;
  if (name == "cos-period") {
    f.eval = [L](double x) { return Complex(cospi(2.0 * x / L)); };
    f.d1 = [L, w](double x) { return Complex(-w * sinpi(2.0 * x / L)); };
    f.d2 = [L, w](double x) { return Complex(-w * w * cospi(2.0 * x / L)); };
    f.exact_coefficient = [](int m) {
      return (m == 1 || m == -1) ? Complex(0.5) : Complex(0.0);
    };
  } else if (name == "exp-cos-period") {
    f.eval = [L](double x) { return Complex(std::exp(cospi(2.0 * x / L))); };
    f.d1 = [L, w](double x) {
      const double t = 2.0 * x / L;
      return Complex(-w * sinpi(t) * std::exp(cospi(t)));
    };
    f.d2 = [L, w](double x) {
      const double t = 2.0 * x / L;
      const double s = sinpi(t), c = cospi(t);
      return Complex(w * w * (s * s - c) * std::exp(c));
    };
    f.exact_coefficient = [](int m) { return Complex(bessel_i_series(m, 1.0)); };
  } else {
    throw std::invalid_argument("unknown interval function '" + name + "'");
  }
  return f;
}

}  // namespace fourier
