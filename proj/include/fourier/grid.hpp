#pragma once

#include <span>
#include <vector>

#include "fourier/numeric.hpp"

namespace fourier {

struct SmoothPeriodicFunction;

/**
 * Uniform partition of [-1, 1) into 2n cells [j/n, (j+1)/n), j = -n .. n-1,
 * each of measure 1/n.
 *
 * Points are addressed by their integer index j; coordinates are produced on
 * demand as j/n, so the cell map x -> floor(n x) never depends on a stored
 * floating-point coordinate. The right endpoint 1 is not a grid point.
 */
class Grid {
public:
  /// Throws std::invalid_argument for n < 1.
  explicit Grid(int n);

  int n() const { return n_; }
  int size() const { return 2 * n_; }
  int first_index() const { return -n_; }
  int last_index() const { return n_ - 1; }
  double cell_width() const { return 1.0 / n_; }
  double total_measure() const { return 2.0; }

  /// Coordinate j/n of index j.
  double point(int j) const { return static_cast<double>(j) / n_; }

  /// Index of the cell containing x in [-1, 1), i.e. floor(n x).
  int cell_of(double x) const;

  /// True when j is in -n .. n-1.
  bool contains(int j) const { return j >= -n_ && j < n_; }

  friend bool operator==(const Grid&, const Grid&) = default;

private:
  int n_;
};

inline Grid build_grid(int n) { return Grid(n); }

/// Complex step function on a Grid; the value on cell j is values[j].
class GridFunction {
public:
  /// Zero function on the grid.
  explicit GridFunction(Grid grid);
  /// Throws std::invalid_argument when values.size() != 2n.
  GridFunction(Grid grid, std::vector<Complex> values);

  const Grid& grid() const { return grid_; }
  int n() const { return grid_.n(); }

  /// Value at index j in -n .. n-1 (unchecked).
  Complex operator[](int j) const { return values_[j + grid_.n()]; }
  Complex& operator[](int j) { return values_[j + grid_.n()]; }

  /// Value at index j; throws std::out_of_range outside -n .. n-1.
  Complex at(int j) const;

  /// Step-function evaluation at x in [-1, 1): the value of cell floor(n x).
  Complex value_at(double x) const;

  /// Storage order is ascending j (storage slot j + n).
  std::span<const Complex> values() const { return values_; }

  /// max_j |values[j]|
  double max_abs() const;

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(Complex scale);

private:
  Grid grid_;
  std::vector<Complex> values_;
};

GridFunction operator+(GridFunction lhs, const GridFunction& rhs);
GridFunction operator-(GridFunction lhs, const GridFunction& rhs);
GridFunction operator*(Complex scale, GridFunction gf);

/// Index-wise product on a shared grid; throws std::invalid_argument when the
/// grids differ.
GridFunction pointwise_product(const GridFunction& u, const GridFunction& v);

/// values[j] = f(j/n).
GridFunction sample(const SmoothPeriodicFunction& f, const Grid& grid);

/// (1/n) * sum_j values[j], accumulated in ascending j with compensation.
Complex integrate(const GridFunction& gf);

/// Throws std::invalid_argument unless u and v live on the same grid.
void require_same_grid(const GridFunction& u, const GridFunction& v);

}  // namespace fourier
