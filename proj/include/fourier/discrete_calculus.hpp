#pragma once

#include "fourier/grid.hpp"

namespace fourier {

// Forward difference and index shift on the grid. Neither wraps around: both
// are forced to 0 at the last index n-1.

/// out[j] = n (gf[j+1] - gf[j]) for j < n-1, out[n-1] = 0.
GridFunction derivative(const GridFunction& gf);

/// out[j] = gf[j+1] for j < n-1, out[n-1] = 0.
GridFunction shift(const GridFunction& gf);

/// integral of derivative(gf) minus (gf[n-1] - gf[-n]). Zero in exact arithmetic.
Complex ftc_residual(const GridFunction& gf);

/// (u v)' - (u' shift(v) + u v'), pointwise.
GridFunction product_rule_residual(const GridFunction& u, const GridFunction& v);

/// integral u' v + integral shift(u) v' - (u v)[n-1] + (u v)[-n].
Complex parts_residual(const GridFunction& u, const GridFunction& v);

}  // namespace fourier
