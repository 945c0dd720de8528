#pragma once

#include <memory>

#include "genfourier/atoms.hpp"
#include "genfourier/kernel.hpp"
#include "genfourier/measure.hpp"

namespace genfourier {

// Dense-matrix realization of the transform:
//   (F f)(y_j)    = sum_i w_i f(x_i) B(x_i, y_j)
//   (F^{-1} g)(x) = (F g)((-1)^n x)
// The kernel matrix B(x_i, y_j) is cached once; construction rejects grids whose
// kernel arguments leave the validated Bessel domain.
class TransformPlan {
public:
    static TransformPlan create(GridPtr source, GridPtr target);

    const Params& params() const { return params_; }
    const GridPtr& source_grid() const { return source_; }
    const GridPtr& target_grid() const { return target_; }
    Complex cached_kernel(std::size_t i, std::size_t j) const { return cache_[i * nt_ + j]; }

    GridFunction forward(const GridFunction& f) const;
    GridFunction forward(const AtomSum& f) const;
    GridFunction inverse(const GridFunction& g) const;

private:
    TransformPlan() = default;
    Params params_;
    GridPtr source_, target_;
    std::size_t nt_ = 0;
    std::vector<Complex> cache_;  // row-major, [i*nt + j] = B(x_i, y_j)
};

// Exact transform of the Gaussian family: F e^{-s n |.|^{2/n}} = (2s)^{-(nu+1)} e^{-n|.|^{2/n}/(4s)}.
AtomSum gaussian_closed_form(const Params& params, double s);

// Exact transform of any atom sum whose exponents are 2j/n (j >= 0 integer),
// through F(mult f) = -L(F f) and the even/odd Gaussian base cases.
AtomSum transform_exact(const AtomSum& f, const Params& params);

// Sup-norm residuals of the three intertwining identities; domain-side operators
// exact on atoms, range-side by finite differences on a uniform target grid.
struct IntertwiningResiduals {
    double euler = 0.0;
    double mult = 0.0;
    double laplacian = 0.0;
};
IntertwiningResiduals intertwining_residuals(const TransformPlan& plan, const AtomSum& f);

// Residual of (n|y|^{2/n})^alpha (n|y|^{2-2/n}Delta_k)^beta (F f) against
// (-1)^{alpha+beta} F(h_{alpha,beta}), sup over |y| in [0.5, 3].
double theorem1_identity(const TransformPlan& plan, const AtomSum& f, int alpha, int beta);

}  // namespace genfourier
