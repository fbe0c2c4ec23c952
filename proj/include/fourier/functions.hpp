#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fourier/numeric.hpp"

namespace fourier {

/**
 * A smooth function on the circle [-1, 1] (endpoints identified) together with
 * its first two derivatives.
 *
 * exact_coefficient, when set, returns the closed-form coefficient
 * integral_{-1}^{1} g(x) exp(-i pi m x) dx. degree is set for trigonometric
 * polynomials and bounds |m| for every nonzero exact coefficient.
 */
struct SmoothPeriodicFunction {
  std::string name;
  std::function<Complex(double)> eval;
  std::function<Complex(double)> d1;
  std::function<Complex(double)> d2;
  std::function<Complex(int)> exact_coefficient;
  Complex endpoint_value;
  std::optional<int> degree;

  bool has_exact_coefficient() const {
    return static_cast<bool>(exact_coefficient);
  }
};

/// Sup and L1 norms feeding the explicit coefficient-decay constant.
struct BoundConstants {
  double B = 0.0;  ///< sup |h|
  double D = 0.0;  ///< sup |h'|
  double M = 0.0;  ///< integral of |h''| over [-1, 1]
  double W = 0.0;  ///< M + 2B + 5D
  double H = 0.0;  ///< W / 4
};

/// exp(i pi k x). Throws for |k| > 10^6.
SmoothPeriodicFunction trig_monomial(int k);
/// cos(pi k x), k >= 1.
SmoothPeriodicFunction cosine(int k);
/// exp(cos(pi x)); coefficients 2 I_m(1).
SmoothPeriodicFunction exp_cos();
/// The constant c.
SmoothPeriodicFunction constant(Complex c);
/// Pointwise linear combination. Throws std::invalid_argument when empty.
SmoothPeriodicFunction combine(
    const std::vector<std::pair<Complex, SmoothPeriodicFunction>>& terms);

/// Modified Bessel function I_m(x) by its power series, stopping once a term
/// drops below 1e-18.
double bessel_i_series(int order, double x);

/// Constants for h = f - f.endpoint_value.
BoundConstants bound_constants(const SmoothPeriodicFunction& f);
/// Constants for h = f - offset.
BoundConstants bound_constants(const SmoothPeriodicFunction& f, Complex offset);

/**
 * Looks a function up by name:
 *
 *   trig:<k>     exp(i pi k x)
 *   cos:<k>      cos(pi k x), k >= 1
 *   expcos       exp(cos(pi x))
 *   combo:<c1>*<name1>+<c2>*<name2>+...
 *
 * Combo coefficients are decimal reals, optionally suffixed with `i` for an
 * imaginary coefficient (e.g. `0.5i*trig:1`); exponents must not carry a `+`
 * sign. Combos do not nest. Throws std::invalid_argument on unknown names.
 */
SmoothPeriodicFunction parse_function(std::string_view name);

/// Names of the standard test catalog (all parse with parse_function).
const std::vector<std::string>& standard_catalog();

/// Catalog entries that vanish at x = +-1.
const std::vector<std::string>& zero_endpoint_catalog();

}  // namespace fourier
