#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "genfourier/atoms.hpp"
#include "genfourier/params.hpp"

namespace genfourier {

// Nodes and weights realizing  integral g dmu_{k,n} = sum w_i g(x_i)  after the
// u-substitution u = sgn(x)|x|^{1/n}. In u the density is
// c_{k,n} n |u|^{2nu+1} du, continuous and vanishing at 0, so plain composite
// Gauss-Legendre panels apply. Nodes are symmetric about 0 and exclude 0;
// mirror(i) = size()-1-i is the exact reflection.
class QuadratureGrid {
public:
    // composite Gauss-Legendre panels on [-u_max, u_max]
    static std::shared_ptr<const QuadratureGrid> gauss_legendre(const Params& params, double u_max,
                                                                int points, int panels);
    // uniform midpoint nodes (for finite-difference work; weights are midpoint-rule)
    static std::shared_ptr<const QuadratureGrid> uniform_midpoint(const Params& params,
                                                                  double u_max, int points);

    const Params& params() const { return params_; }
    double u_max() const { return u_max_; }
    std::size_t size() const { return u_.size(); }
    std::size_t mirror(std::size_t i) const { return u_.size() - 1 - i; }
    bool is_uniform() const { return uniform_; }
    double pitch() const;  // node spacing, uniform grids only

    const std::vector<double>& u() const { return u_; }
    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& weights() const { return w_; }

private:
    QuadratureGrid() = default;
    Params params_;
    double u_max_ = 0.0;
    bool uniform_ = false;
    std::vector<double> u_, x_, w_;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

// Complex samples aligned with a grid's nodes.
struct GridFunction {
    GridPtr grid;
    std::vector<Complex> values;

    GridFunction() = default;
    GridFunction(GridPtr g, std::vector<Complex> v);
};

GridFunction sample(GridPtr grid, const std::function<Complex(double)>& f);
GridFunction sample(GridPtr grid, const AtomSum& f);

// sum w_i f_i in ascending node order (deterministic)
Complex integrate(const GridFunction& f);

// (integral |f|^p dmu)^{1/p}; p = infinity -> grid max of |f|
double lp_norm(const GridFunction& f, double p);
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// sigma_{k,n}(nu_exp) = integral (1 + n|x|^{2/n})^{-nu_exp} dmu, truncated at u_max
// with an analytic bound on the discarded tail.
struct SigmaResult {
    double value = 0.0;
    double tail_bound = 0.0;
};
SigmaResult sigma_integral(const Params& params, int nu_exp, double u_max = 50.0,
                           int points = 2048, int panels = 128);

}  // namespace genfourier
