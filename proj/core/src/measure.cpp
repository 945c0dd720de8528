#include "genfourier/measure.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "genfourier/errors.hpp"

namespace genfourier {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void legendre_rule(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
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
        nodes[i] = -x;
        nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
}

}  // namespace

GridPtr QuadratureGrid::gauss_legendre(const Params& params, double u_max, int points,
                                       int panels) {
    if (!(u_max > 0.0)) throw std::domain_error("build_grid: u_max must be positive");
    if (points < 64 || points % 2 != 0)
        throw std::domain_error("build_grid: points must be even and >= 64");
    if (points > 2048) throw CapacityError("build_grid: points > 2048 (dense-matrix cap)");
    if (panels < 1 || (points / 2) % panels != 0)
        throw std::domain_error("build_grid: panels must divide points/2");
    const int per_panel = points / 2 / panels;

    std::vector<double> gn, gw;
    legendre_rule(per_panel, gn, gw);

    auto grid = std::shared_ptr<QuadratureGrid>(new QuadratureGrid());
    grid->params_ = params;
    grid->u_max_ = u_max;
    grid->uniform_ = false;

    std::vector<double> up, wp;  // positive half
    up.reserve(points / 2);
    wp.reserve(points / 2);
    const double width = u_max / panels;
    for (int p = 0; p < panels; ++p) {
        const double a = p * width;
        for (int i = 0; i < per_panel; ++i) {
            up.push_back(a + 0.5 * width * (gn[i] + 1.0));
            wp.push_back(0.5 * width * gw[i]);
        }
    }
    auto& u = grid->u_;
    auto& x = grid->x_;
    auto& w = grid->w_;
    u.resize(points);
    x.resize(points);
    w.resize(points);
    const double cuw = params.measure_const * params.n;
    for (int i = 0; i < points / 2; ++i) {
        const double ui = up[i];
        const double mu_w = wp[i] * cuw * std::pow(ui, 2.0 * params.nu + 1.0);
        // mirrored pair: exact symmetry by construction
        u[points / 2 + i] = ui;
        u[points / 2 - 1 - i] = -ui;
        w[points / 2 + i] = mu_w;
        w[points / 2 - 1 - i] = mu_w;
        const double xi = std::pow(ui, static_cast<double>(params.n));
        x[points / 2 + i] = xi;
        x[points / 2 - 1 - i] = -xi;
    }
    return grid;
}

GridPtr QuadratureGrid::uniform_midpoint(const Params& params, double u_max, int points) {
    if (!(u_max > 0.0)) throw std::domain_error("build_grid: u_max must be positive");
    if (points < 64 || points % 2 != 0)
        throw std::domain_error("build_grid: points must be even and >= 64");
    if (points > 4096) throw CapacityError("build_grid: points > 4096");
    auto grid = std::shared_ptr<QuadratureGrid>(new QuadratureGrid());
    grid->params_ = params;
    grid->u_max_ = u_max;
    grid->uniform_ = true;
    const double h = 2.0 * u_max / points;
    grid->u_.resize(points);
    grid->x_.resize(points);
    grid->w_.resize(points);
    const double cuw = params.measure_const * params.n;
    for (int i = 0; i < points / 2; ++i) {
        const double ui = (i + 0.5) * h;
        grid->u_[points / 2 + i] = ui;
        grid->u_[points / 2 - 1 - i] = -ui;
        const double xi = std::pow(ui, static_cast<double>(params.n));
        grid->x_[points / 2 + i] = xi;
        grid->x_[points / 2 - 1 - i] = -xi;
        const double mu_w = h * cuw * std::pow(ui, 2.0 * params.nu + 1.0);
        grid->w_[points / 2 + i] = mu_w;
        grid->w_[points / 2 - 1 - i] = mu_w;
    }
    return grid;
}

double QuadratureGrid::pitch() const {
    if (!uniform_) throw std::logic_error("pitch: not a uniform grid");
    return u_[1] - u_[0];
}

GridFunction::GridFunction(GridPtr g, std::vector<Complex> v)
    : grid(std::move(g)), values(std::move(v)) {
    if (!grid) throw std::invalid_argument("GridFunction: null grid");
    if (values.size() != grid->size())
        throw std::invalid_argument("GridFunction: value count does not match grid");
}

GridFunction sample(GridPtr grid, const std::function<Complex(double)>& f) {
    std::vector<Complex> vals(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) vals[i] = f(grid->x()[i]);
    return GridFunction(std::move(grid), std::move(vals));
}

GridFunction sample(GridPtr grid, const AtomSum& f) {
    const Params& p = grid->params();
    std::vector<Complex> vals(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) vals[i] = evaluate(f, p, grid->x()[i]);
    return GridFunction(std::move(grid), std::move(vals));
}

Complex integrate(const GridFunction& f) {
    Complex acc(0.0, 0.0);
    const auto& w = f.grid->weights();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Complex v = f.values[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DataError("integrate: non-finite sample");
        acc += w[i] * v;
    }
    return acc;
}

double lp_norm(const GridFunction& f, double p) {
    if (!(p >= 1.0)) throw std::domain_error("lp_norm: need p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw DataError("lp_norm: non-finite sample");
            m = std::max(m, std::abs(v));
        }
        return m;
    }
    double acc = 0.0;
    const auto& w = f.grid->weights();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double av = std::abs(f.values[i]);
        if (!std::isfinite(av)) throw DataError("lp_norm: non-finite sample");
        acc += w[i] * std::pow(av, p);
    }
    return std::pow(acc, 1.0 / p);
}

SigmaResult sigma_integral(const Params& params, int nu_exp, double u_max, int points,
                           int panels) {
    // In u: c n integral (1 + n u^2)^{-nu_exp} |u|^{2 nu + 1} du; converges iff
    // nu_exp > nu + 1 (equivalently the spec's (n/2)(2k + 2/n - 1) threshold).
    const double threshold = params.nu + 1.0;
    if (!(static_cast<double>(nu_exp) > threshold)) {
        std::ostringstream os;
        os << "sigma_integral: nu_exp=" << nu_exp << " does not exceed the convergence threshold "
           << threshold;
        throw DivergenceError(os.str());
    }
    auto grid = QuadratureGrid::gauss_legendre(params, u_max, points, panels);
    double acc = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const double w2 = grid->u()[i] * grid->u()[i];
        acc += grid->weights()[i] * std::pow(1.0 + params.n * w2, -static_cast<double>(nu_exp));
    }
    // tail: (1+n u^2)^{-e} < (n u^2)^{-e}; integral becomes a pure power of u
    const double e = static_cast<double>(nu_exp);
    const double decay = 2.0 * e - 2.0 * params.nu - 2.0;
    const double tail = 2.0 * params.measure_const * params.n * std::pow(params.n, -e) *
                        std::pow(u_max, -decay) / decay;
    return SigmaResult{acc, tail};
}

}  // namespace genfourier
