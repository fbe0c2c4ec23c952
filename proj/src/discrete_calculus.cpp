#include "fourier/discrete_calculus.hpp"

namespace fourier {

GridFunction derivative(const GridFunction& gf) {
  const int n = gf.n();
  GridFunction out(gf.grid());
  for (int j = -n; j < n - 1; ++j) out[j] = static_cast<double>(n) * (gf[j + 1] - gf[j]);
  return out;
}

GridFunction shift(const GridFunction& gf) {
  const int n = gf.n();
  GridFunction out(gf.grid());
  for (int j = -n; j < n - 1; ++j) out[j] = gf[j + 1];
  return out;
}

Complex ftc_residual(const GridFunction& gf) {
  const int n = gf.n();
  return integrate(derivative(gf)) - (gf[n - 1] - gf[-n]);
}

GridFunction product_rule_residual(const GridFunction& u, const GridFunction& v) {
  require_same_grid(u, v);
  return derivative(pointwise_product(u, v)) -
         (pointwise_product(derivative(u), shift(v)) +
          pointwise_product(u, derivative(v)));
}

Complex parts_residual(const GridFunction& u, const GridFunction& v) {
  require_same_grid(u, v);
  const int n = u.n();
  const Complex lhs = integrate(pointwise_product(derivative(u), v));
  const Complex rhs = -integrate(pointwise_product(shift(u), derivative(v))) +
                      u[n - 1] * v[n - 1] - u[-n] * v[-n];
  return lhs - rhs;
}

}  // namespace fourier
