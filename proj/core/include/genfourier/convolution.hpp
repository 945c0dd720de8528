#pragma once

#include <functional>
#include <vector>

#include "genfourier/transform.hpp"

namespace genfourier {

// tau_{x0} f = F^{-1}[ B((-1)^n x0, .) F f ]
GridFunction translate(const TransformPlan& plan, const GridFunction& f, double x0);

// f * g = F^{-1}[ (F f)(F g) ]
GridFunction convolve(const TransformPlan& plan, const GridFunction& f, const GridFunction& g);

// Slow oracle: (f*g)(x) = integral f(y) (tau_x g)((-1)^n y) dmu(y), for spot checks.
Complex convolve_direct_at(const TransformPlan& plan, const GridFunction& f,
                           const GridFunction& g, double x);

// ||f*g||_q / (||f||_p ||g||_r) under 1/p + 1/r = 1/q + 1. Recorded, never
// asserted against a specific constant.
double young_check(const TransformPlan& plan, const GridFunction& f, const GridFunction& g,
                   double p, double r, double q);

// Unit-mass mollifier base and its dilation family phi_r(x) = r^{-(2k+2/n-1)} phi(x/r).
struct ApproxIdentity {
    std::function<double(double)> base;  // mu-normalized profile phi(x), >= 0
    std::vector<double> r_schedule;
};

// c exp(-1/(1-(u/u0)^2)) in the deformed variable, normalized to unit mu-integral.
ApproxIdentity bump_identity(const Params& params, double u0,
                             std::vector<double> r_schedule = {1.0, 0.5, 0.25, 0.125});

GridFunction dilate(const ApproxIdentity& phi, double r, const Params& params, GridPtr grid);

// ||f * phi_r - f||_p along the schedule.
std::vector<double> approx_identity_convergence(const TransformPlan& plan, const GridFunction& f,
                                                const ApproxIdentity& phi, double p);

// (T f)(x) = integral_0^1 f(tx) t^{2k+2/n-1} dt, 64-point Gauss-Legendre in t.
Complex t_operator_at(const AtomSum& f, const Params& params, double x);
GridFunction t_operator(const AtomSum& f, const Params& params, GridPtr grid);
// grid-function variant via local cubic interpolation in the deformed variable
GridFunction t_operator(const GridFunction& f);

// (||f||_p, ||g_m||_p)
std::pair<double, double> gm_inequality(const AtomSum& f, int m, double p, const Params& params,
                                        GridPtr grid);

// Smallest deformed radius R_u with |f| < floor outside; spec's numerical support.
double numerical_support_radius_u(const GridFunction& f, double floor = 1e-10);

}  // namespace genfourier
