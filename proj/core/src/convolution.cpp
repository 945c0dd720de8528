#include "genfourier/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genfourier/errors.hpp"

namespace genfourier {

GridFunction translate(const TransformPlan& plan, const GridFunction& f, double x0) {
    GridFunction g = plan.forward(f);
    const Params& p = plan.params();
    const double xr = (p.n % 2 == 0) ? x0 : -x0;
    const auto& ys = g.grid->x();
    for (std::size_t j = 0; j < g.values.size(); ++j) g.values[j] *= kernel(p, xr, ys[j]);
    return plan.inverse(g);
}

GridFunction convolve(const TransformPlan& plan, const GridFunction& f, const GridFunction& g) {
    GridFunction ff = plan.forward(f);
    const GridFunction fg = plan.forward(g);
    for (std::size_t j = 0; j < ff.values.size(); ++j) ff.values[j] *= fg.values[j];
    return plan.inverse(ff);
}

Complex convolve_direct_at(const TransformPlan& plan, const GridFunction& f,
                           const GridFunction& g, double x) {
    const GridFunction tg = translate(plan, g, x);
    const auto& grid = *plan.source_grid();
    const bool reflect = (plan.params().n % 2 != 0);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Complex tv = reflect ? tg.values[grid.mirror(i)] : tg.values[i];
        acc += grid.weights()[i] * f.values[i] * tv;
    }
    return acc;
}

double young_check(const TransformPlan& plan, const GridFunction& f, const GridFunction& g,
                   double p, double r, double q) {
    if (!(p >= 1.0) || !(r >= 1.0) || !(q >= 1.0))
        throw std::domain_error("young_check: exponents must be >= 1");
    const double lhs = 1.0 / p + 1.0 / r;
    const double rhs = 1.0 / q + 1.0;
    if (std::fabs(lhs - rhs) > 1e-12)
        throw std::domain_error("young_check: exponents must satisfy 1/p + 1/r = 1/q + 1");
    const double nf = lp_norm(f, p);
    const double ng = lp_norm(g, r);
    if (nf == 0.0 || ng == 0.0)
        throw std::domain_error("young_check: ratio undefined for a zero function");
    const GridFunction conv = convolve(plan, f, g);
    return lp_norm(conv, q) / (nf * ng);
}

ApproxIdentity bump_identity(const Params& params, double u0, std::vector<double> r_schedule) {
    if (!(u0 > 0.0)) throw std::domain_error("bump_identity: u0 must be positive");
    auto profile = [u0, n = params.n](double x) -> double {
        const double u = std::pow(std::fabs(x), 1.0 / n);
        const double t = u / u0;
        if (t >= 1.0) return 0.0;
        return std::exp(-1.0 / (1.0 - t * t));
    };
    // normalize on a dedicated fine grid over the support
    auto grid = QuadratureGrid::gauss_legendre(params, u0, 1024, 64);
    double mass = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i)
        mass += grid->weights()[i] * profile(grid->x()[i]);
    if (!(mass > 0.0)) throw std::logic_error("bump_identity: normalization failed");
    ApproxIdentity phi;
    phi.base = [profile, mass](double x) { return profile(x) / mass; };
    phi.r_schedule = std::move(r_schedule);
    return phi;
}

GridFunction dilate(const ApproxIdentity& phi, double r, const Params& params, GridPtr grid) {
    if (!(r > 0.0)) throw std::domain_error("dilate: r must be positive");
    const double scale = std::pow(r, -(params.lp_shift - 1.0));
    return sample(std::move(grid), [&phi, r, scale](double x) {
        return Complex(scale * phi.base(x / r), 0.0);
    });
}

std::vector<double> approx_identity_convergence(const TransformPlan& plan, const GridFunction& f,
                                                const ApproxIdentity& phi, double p) {
    if (!(p >= 1.0) || std::isinf(p))
        throw std::domain_error("approx_identity_convergence: need 1 <= p < infinity");
    std::vector<double> errs;
    errs.reserve(phi.r_schedule.size());
    for (const double r : phi.r_schedule) {
        const GridFunction phir = dilate(phi, r, plan.params(), plan.source_grid());
        GridFunction conv = convolve(plan, f, phir);
        for (std::size_t i = 0; i < conv.values.size(); ++i) conv.values[i] -= f.values[i];
        errs.push_back(lp_norm(conv, p));
    }
    return errs;
}

namespace {

void legendre01(int order, std::vector<double>& t, std::vector<double>& w) {
    // nodes/weights on [0,1] by Newton iteration (same scheme as the grid builder)
    t.assign(order, 0.0);
    w.assign(order, 0.0);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        const double ww = 2.0 / ((1.0 - x * x) * pp * pp);
        t[i] = 0.5 * (1.0 - x);
        t[order - 1 - i] = 0.5 * (1.0 + x);
        w[i] = 0.5 * ww;
        w[order - 1 - i] = 0.5 * ww;
    }
}

const std::vector<double>& t_nodes() {
    static std::vector<double> t, w;
    if (t.empty()) legendre01(64, t, w);
    return t;
}
const std::vector<double>& t_weights() {
    static std::vector<double> t, w;
    if (w.empty()) legendre01(64, t, w);
    return w;
}

}  // namespace

Complex t_operator_at(const AtomSum& f, const Params& params, double x) {
    if (f.empty()) return {0.0, 0.0};
    const auto& t = t_nodes();
    const auto& w = t_weights();
    const double e = params.lp_shift - 1.0;  // 2k + 2/n - 1 > 0
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        acc += w[i] * std::pow(t[i], e) * evaluate(f, params, t[i] * x);
    return acc;
}

GridFunction t_operator(const AtomSum& f, const Params& params, GridPtr grid) {
    return sample(std::move(grid),
                  [&f, &params](double x) { return t_operator_at(f, params, x); });
}

namespace {

// local cubic Lagrange interpolation in u on an ascending grid
Complex interp_u(const GridFunction& f, double u) {
    const auto& us = f.grid->u();
    const auto n = us.size();
    auto it = std::lower_bound(us.begin(), us.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - us.begin());
    if (idx < 1) idx = 1;
    if (idx > n - 1) idx = n - 1;
    std::size_t i0 = (idx >= 2) ? idx - 2 : 0;
    if (i0 + 4 > n) i0 = n - 4;
    Complex acc(0.0, 0.0);
    for (std::size_t a = i0; a < i0 + 4; ++a) {
        double lag = 1.0;
        for (std::size_t b = i0; b < i0 + 4; ++b)
            if (b != a) lag *= (u - us[b]) / (us[a] - us[b]);
        acc += lag * f.values[a];
    }
    return acc;
}

}  // namespace

GridFunction t_operator(const GridFunction& f) {
    const auto& grid = *f.grid;
    const Params& params = grid.params();
    const auto& t = t_nodes();
    const auto& w = t_weights();
    const double e = params.lp_shift - 1.0;
    std::vector<Complex> out(grid.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ui = grid.u()[i];
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < t.size(); ++j) {
            // u(t x) = t^{1/n} u(x)
            const double ut = std::pow(t[j], 1.0 / params.n) * ui;
            acc += w[j] * std::pow(t[j], e) * interp_u(f, ut);
        }
        out[i] = acc;
    }
    return GridFunction(f.grid, std::move(out));
}

std::pair<double, double> gm_inequality(const AtomSum& f, int m, double p, const Params& params,
                                        GridPtr grid) {
    if (m < 0) throw std::domain_error("gm_inequality: m must be >= 0");
    if (!(p >= 1.0) || std::isinf(p)) throw std::domain_error("gm_inequality: need 1 <= p < inf");
    const AtomSum gm = sequence_g_m(f, m, params);
    const double nf = lp_norm(sample(grid, f), p);
    const double ng = lp_norm(sample(std::move(grid), gm), p);
    return {nf, ng};
}

double numerical_support_radius_u(const GridFunction& f, double floor) {
    double r = 0.0;
    const auto& u = f.grid->u();
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (std::abs(f.values[i]) >= floor) r = std::max(r, std::fabs(u[i]));
    return r;
}

}  // namespace genfourier
