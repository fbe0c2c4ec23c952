#pragma once

#include <span>
#include <vector>

#include "fourier/grid.hpp"
#include "fourier/numeric.hpp"

namespace fourier {

struct SmoothPeriodicFunction;

/// Discrete Fourier data indexed by the modes m = -n .. n-1.
class Spectrum {
public:
  /// All-zero spectrum. Throws std::invalid_argument for n < 1.
  explicit Spectrum(int n);
  /// Throws std::invalid_argument when coefficients.size() != 2n.
  Spectrum(int n, std::vector<Complex> coefficients);

  int n() const { return n_; }
  int first_mode() const { return -n_; }
  int last_mode() const { return n_ - 1; }
  bool contains(int m) const { return m >= -n_ && m < n_; }

  Complex operator[](int m) const { return coefficients_[m + n_]; }
  Complex& operator[](int m) { return coefficients_[m + n_]; }
  /// Throws std::out_of_range outside -n .. n-1.
  Complex at(int m) const;

  /// Ascending m.
  std::span<const Complex> coefficients() const { return coefficients_; }

private:
  int n_;
  std::vector<Complex> coefficients_;
};

/**
 * Table of the 2n-th roots of unity exp(i pi k / n), k = 0 .. 2n-1.
 *
 * Every character value exp(i pi j m / n) on the grid is a table entry at
 * k = j m mod 2n, so the reduction is exact integer arithmetic.
 */
class RootTable {
public:
  explicit RootTable(int n);

  int n() const { return n_; }
  /// exp(i pi (j m) / n)
  Complex operator()(long long j, long long m) const {
    long long k = (j * m) % period_;
    if (k < 0) k += period_;
    return roots_[static_cast<std::size_t>(k)];
  }

private:
  int n_;
  long long period_;
  std::vector<Complex> roots_;
};

/// coefficients[m] = (1/n) sum_j values[j] exp(-i pi (j/n) m), summed in
/// ascending j with compensation. This O(n^2) path is the reference.
Spectrum discrete_coefficients(const GridFunction& gf);

/// One coefficient of the reference path; m must lie in -n .. n-1.
Complex discrete_coefficient(const GridFunction& gf, int m);
/// Same, reusing a root table built for gf.n().
Complex discrete_coefficient(const GridFunction& gf, int m, const RootTable& roots);

/// True when 2n is a power of two (the radix-2 path applies).
bool fast_path_available(int n);

/// Radix-2 transform of the same quantity. Throws std::invalid_argument
/// unless fast_path_available(gf.n()). Never used by lemma checks.
Spectrum discrete_coefficients_fast(const GridFunction& gf);

/// values[j] = (1/2) sum_m coefficients[m] exp(i pi (j/n) m).
GridFunction invert(const Spectrum& s);

/// exp(i pi (j/n) m) for -n <= m, j <= n-1; throws std::out_of_range otherwise.
Complex character(int n, int m, int j);

/**
 * Sum of exact coefficients over the modes l with l = m (mod 2n) and
 * |l| <= cutoff. For a trigonometric polynomial of degree below cutoff this
 * is exactly the discrete coefficient of its samples.
 *
 * Throws std::invalid_argument when f has no exact coefficients or when
 * cutoff < 1; std::out_of_range when m is outside -n .. n-1.
 */
Complex alias_fold(const SmoothPeriodicFunction& f, int n, int m, int cutoff);

}  // namespace fourier
