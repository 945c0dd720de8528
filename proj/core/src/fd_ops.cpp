#include "genfourier/fd_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace genfourier {

FdField make_fd_field(GridFunction g) {
    if (!g.grid->is_uniform())
        throw std::logic_error("fd_ops: finite differences need a uniform midpoint grid");
    return FdField{std::move(g), 0};
}

namespace {

struct Stencil {
    std::vector<Complex> d1, d2;
};

Stencil differentiate(const GridFunction& g) {
    const auto n = g.values.size();
    const double h = g.grid->pitch();
    Stencil s;
    s.d1.assign(n, Complex(0.0, 0.0));
    s.d2.assign(n, Complex(0.0, 0.0));
    const auto& f = g.values;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        s.d1[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
        s.d2[i] = (-f[i + 2] + 16.0 * f[i + 1] - 30.0 * f[i] + 16.0 * f[i - 1] - f[i - 2]) /
                  (12.0 * h * h);
    }
    return s;
}

}  // namespace

FdField fd_euler(const FdField& in) {
    const auto& g = in.fn;
    const Stencil st = differentiate(g);
    const auto& u = g.grid->u();
    const int n = g.grid->params().n;
    std::vector<Complex> out(g.values.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (u[i] / n) * st.d1[i];
    return FdField{GridFunction(g.grid, std::move(out)), in.margin + 2};
}

FdField fd_laplacian(const FdField& in) {
    const auto& g = in.fn;
    const Stencil st = differentiate(g);
    const auto& u = g.grid->u();
    const auto& params = g.grid->params();
    const double n = params.n;
    const double k = params.k;
    std::vector<Complex> out(g.values.size(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double ui = u[i];
        const Complex diff = g.values[i] - g.values[g.grid->mirror(i)];
        out[i] = (st.d2[i] - (n - 1.0) / ui * st.d1[i]) / (n * n) +
                 (2.0 * k / n) / ui * st.d1[i] - k * diff / (ui * ui);
    }
    return FdField{GridFunction(g.grid, std::move(out)), in.margin + 2};
}

FdField fd_scaled_mult(const FdField& in, int alpha) {
    const auto& g = in.fn;
    const auto& u = g.grid->u();
    const double n = g.grid->params().n;
    std::vector<Complex> out = g.values;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] *= std::pow(n * u[i] * u[i], static_cast<double>(alpha));
    return FdField{GridFunction(g.grid, std::move(out)), in.margin};
}

FdField fd_scale(const FdField& in, Complex factor) {
    std::vector<Complex> out = in.fn.values;
    for (auto& v : out) v *= factor;
    return FdField{GridFunction(in.fn.grid, std::move(out)), in.margin};
}

namespace {

double window_sup(const FdField& a, const std::vector<Complex>& bvals, double x_lo, double x_hi) {
    const auto& g = a.fn;
    const auto sz = g.values.size();
    double sup = 0.0;
    for (std::size_t i = 0; i < sz; ++i) {
        if (i < static_cast<std::size_t>(a.margin) || i + a.margin >= sz) continue;
        const double ax = std::fabs(g.grid->x()[i]);
        if (ax < x_lo || ax > x_hi) continue;
        sup = std::max(sup, std::abs(g.values[i] - bvals[i]));
    }
    return sup;
}

}  // namespace

double fd_window_sup(const FdField& a, const FdField& b, double x_lo, double x_hi) {
    FdField tmp = a;
    tmp.margin = std::max(a.margin, b.margin);
    return window_sup(tmp, b.fn.values, x_lo, x_hi);
}

double fd_window_sup(const FdField& a, const GridFunction& b, double x_lo, double x_hi) {
    return window_sup(a, b.values, x_lo, x_hi);
}

}  // namespace genfourier
