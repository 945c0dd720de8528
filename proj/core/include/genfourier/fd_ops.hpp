#pragma once

#include "genfourier/measure.hpp"

namespace genfourier {

// Range-side differential operators realized by 5-point central differences in
// the deformed variable on a uniform midpoint grid. Every application widens
// the invalid boundary margin by two nodes; `margin` tracks it.
struct FdField {
    GridFunction fn;
    int margin = 0;
};

FdField make_fd_field(GridFunction g);

// x d/dx = (u/n) d/du
FdField fd_euler(const FdField& in);
// |x|^{2-2/n} Delta_k = (1/n^2)[f_uu - ((n-1)/u) f_u] + (2k/n)(1/u) f_u - k (f - f_mirror)/u^2
FdField fd_laplacian(const FdField& in);
// pointwise multiply by (n |x|^{2/n})^alpha = (n u^2)^alpha
FdField fd_scaled_mult(const FdField& in, int alpha);
// pointwise multiply by a scalar
FdField fd_scale(const FdField& in, Complex factor);

// sup |a - b| over valid nodes with |x| in [x_lo, x_hi]
double fd_window_sup(const FdField& a, const FdField& b, double x_lo, double x_hi);
double fd_window_sup(const FdField& a, const GridFunction& b, double x_lo, double x_hi);

}  // namespace genfourier
