#include "fourier/discrete_fourier.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "fourier/functions.hpp"

namespace fourier {

Spectrum::Spectrum(int n) : Spectrum(n, std::vector<Complex>(n > 0 ? 2 * n : 0)) {}

Spectrum::Spectrum(int n, std::vector<Complex> coefficients)
    : n_(n), coefficients_(std::move(coefficients)) {
  if (n < 1) throw std::invalid_argument("spectrum size must be >= 1");
  if (coefficients_.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("spectrum needs " + std::to_string(2 * n) +
                                " coefficients, got " +
                                std::to_string(coefficients_.size()));
}

Complex Spectrum::at(int m) const {
  if (!contains(m))
    throw std::out_of_range("mode " + std::to_string(m) + " outside -n .. n-1");
  return (*this)[m];
}

RootTable::RootTable(int n) : n_(n), period_(2LL * n) {
  if (n < 1) throw std::invalid_argument("root table size must be >= 1");
  roots_.reserve(static_cast<std::size_t>(period_));
  for (long long k = 0; k < period_; ++k)
    roots_.push_back(unit_phase(static_cast<double>(k) / n));
}

Complex discrete_coefficient(const GridFunction& gf, int m, const RootTable& roots) {
  const int n = gf.n();
  if (m < -n || m >= n)
    throw std::out_of_range("mode " + std::to_string(m) + " outside -n .. n-1");
  if (roots.n() != n) throw std::invalid_argument("root table built for a different grid");
  CompensatedSum sum;
  for (int j = -n; j < n; ++j) sum.add(gf[j] * std::conj(roots(j, m)));
  return sum.value() / static_cast<double>(n);
}

Complex discrete_coefficient(const GridFunction& gf, int m) {
  return discrete_coefficient(gf, m, RootTable(gf.n()));
}

Spectrum discrete_coefficients(const GridFunction& gf) {
  const int n = gf.n();
  const RootTable roots(n);
  Spectrum s(n);
  for (int m = -n; m < n; ++m) s[m] = discrete_coefficient(gf, m, roots);
  return s;
}

bool fast_path_available(int n) {
  const unsigned size = 2u * static_cast<unsigned>(n);
  return n >= 1 && (size & (size - 1)) == 0;
}

Spectrum discrete_coefficients_fast(const GridFunction& gf) {
  const int n = gf.n();
  if (!fast_path_available(n))
    throw std::invalid_argument("radix-2 path needs 2n to be a power of two");
  const std::size_t size = 2 * static_cast<std::size_t>(n);
  std::vector<Complex> a(gf.values().begin(), gf.values().end());

  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < size; ++i) {
    std::size_t bit = size >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const RootTable roots(n);
  for (std::size_t len = 2; len <= size; len <<= 1) {
    const long long stride = static_cast<long long>(size / len);
    for (std::size_t start = 0; start < size; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex w = std::conj(roots(static_cast<long long>(k) * stride, 1));
        const Complex u = a[start + k];
        const Complex v = a[start + k + len / 2] * w;
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }

  // Storage slot k holds g at j = k - n, so mode m picks up exp(i pi m) = (-1)^m.
  Spectrum s(n);
  for (int m = -n; m < n; ++m) {
    const std::size_t slot = static_cast<std::size_t>(m < 0 ? m + 2 * n : m);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    s[m] = sign * a[slot] / static_cast<double>(n);
  }
  return s;
}

GridFunction invert(const Spectrum& s) {
  const int n = s.n();
  const RootTable roots(n);
  GridFunction out{Grid(n)};
  for (int j = -n; j < n; ++j) {
    CompensatedSum sum;
    for (int m = -n; m < n; ++m) sum.add(s[m] * roots(j, m));
    out[j] = 0.5 * sum.value();
  }
  return out;
}

Complex character(int n, int m, int j) {
  if (n < 1) throw std::invalid_argument("character: n must be >= 1");
  if (m < -n || m >= n)
    throw std::out_of_range("character: mode " + std::to_string(m) +
                            " outside -n .. n-1");
  if (j < -n || j >= n)
    throw std::out_of_range("character: index " + std::to_string(j) +
                            " outside -n .. n-1");
  long long k = (static_cast<long long>(j) * m) % (2LL * n);
  if (k < 0) k += 2LL * n;
  return unit_phase(static_cast<double>(k) / n);
}

Complex alias_fold(const SmoothPeriodicFunction& f, int n, int m, int cutoff) {
  if (!f.has_exact_coefficient())
    throw std::invalid_argument("alias_fold: '" + f.name +
                                "' has no exact coefficients");
  if (n < 1) throw std::invalid_argument("alias_fold: n must be >= 1");
  if (cutoff < 1) throw std::invalid_argument("alias_fold: cutoff must be >= 1");
  if (m < -n || m >= n)
    throw std::out_of_range("alias_fold: mode outside -n .. n-1");
  const int period = 2 * n;
  // Smallest l >= -cutoff with l = m (mod 2n).
  const int offset = ((m + cutoff) % period + period) % period;
  int l = -cutoff + offset;
  CompensatedSum sum;
  for (; l <= cutoff; l += period) sum.add(f.exact_coefficient(l));
  return sum.value();
}

}  // namespace fourier
