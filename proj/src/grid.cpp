#include "fourier/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fourier/functions.hpp"

namespace fourier {

Grid::Grid(int n) : n_(n) {
  if (n < 1)
    throw std::invalid_argument("grid size must be >= 1, got " +
                                std::to_string(n));
}

int Grid::cell_of(double x) const {
  if (!(x >= -1.0 && x < 1.0))
    throw std::out_of_range("coordinate outside [-1, 1)");
  int j = static_cast<int>(std::floor(x * n_));
  // Agree with the materialized coordinates point(j) <= x < point(j + 1).
  if (j > -n_ && point(j) > x) --j;
  if (j < n_ - 1 && point(j + 1) <= x) ++j;
  if (j < -n_) j = -n_;
  if (j > n_ - 1) j = n_ - 1;
  return j;
}

GridFunction::GridFunction(Grid grid)
    : grid_(grid), values_(static_cast<std::size_t>(grid.size())) {}

GridFunction::GridFunction(Grid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != static_cast<std::size_t>(grid_.size()))
    throw std::invalid_argument("grid function needs " +
                                std::to_string(grid_.size()) + " values, got " +
                                std::to_string(values_.size()));
}

Complex GridFunction::at(int j) const {
  if (!grid_.contains(j))
    throw std::out_of_range("grid index " + std::to_string(j) +
                            " outside -n .. n-1");
  return (*this)[j];
}

Complex GridFunction::value_at(double x) const {
  return (*this)[grid_.cell_of(x)];
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex scale) {
  for (Complex& v : values_) v *= scale;
  return *this;
}

GridFunction operator+(GridFunction lhs, const GridFunction& rhs) {
  return lhs += rhs;
}

GridFunction operator-(GridFunction lhs, const GridFunction& rhs) {
  return lhs -= rhs;
}

GridFunction operator*(Complex scale, GridFunction gf) { return gf *= scale; }

void require_same_grid(const GridFunction& u, const GridFunction& v) {
  if (u.grid() != v.grid())
    throw std::invalid_argument("grid functions live on different grids (n=" +
                                std::to_string(u.n()) + " vs n=" +
                                std::to_string(v.n()) + ")");
}

GridFunction pointwise_product(const GridFunction& u, const GridFunction& v) {
  require_same_grid(u, v);
  GridFunction out(u.grid());
  for (int j = u.grid().first_index(); j <= u.grid().last_index(); ++j)
    out[j] = u[j] * v[j];
  return out;
}

GridFunction sample(const SmoothPeriodicFunction& f, const Grid& grid) {
  GridFunction out(grid);
  for (int j = grid.first_index(); j <= grid.last_index(); ++j) {
    const Complex v = f.eval(grid.point(j));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::domain_error("function '" + f.name +
                              "' is not finite at x = " +
                              std::to_string(grid.point(j)));
    out[j] = v;
  }
  return out;
}

Complex integrate(const GridFunction& gf) {
  CompensatedSum sum;
  for (const Complex& v : gf.values()) sum.add(v);
  return sum.value() / static_cast<double>(gf.n());
}

}  // namespace fourier
