#include "genfourier/transform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "genfourier/errors.hpp"
#include "genfourier/fd_ops.hpp"
#include "genfourier/threading.hpp"

namespace genfourier {

TransformPlan TransformPlan::create(GridPtr source, GridPtr target) {
    if (!source || !target) throw PlanError("TransformPlan: null grid");
    const Params& ps = source->params();
    const Params& pt = target->params();
    if (ps.k != pt.k || ps.n != pt.n)
        throw PlanError("TransformPlan: source and target grids disagree on (k,n)");
    const double zmax = ps.n * source->u_max() * target->u_max();
    if (zmax > kBesselZMax) {
        std::ostringstream os;
        os << "TransformPlan: kernel argument bound n*u_max*v_max=" << zmax
           << " exceeds the validated Bessel domain " << kBesselZMax;
        throw PlanError(os.str());
    }
    TransformPlan plan;
    plan.params_ = ps;
    plan.source_ = std::move(source);
    plan.target_ = std::move(target);
    plan.nt_ = plan.target_->size();
    plan.cache_.assign(plan.source_->size() * plan.nt_, Complex(0.0, 0.0));
    const auto& xs = plan.source_->x();
    const auto& ys = plan.target_->x();
    auto* cache = plan.cache_.data();
    const Params p = ps;
    const std::size_t nt = plan.nt_;
    parallel_for(plan.source_->size(), [&, cache](std::size_t i) {
        for (std::size_t j = 0; j < nt; ++j) cache[i * nt + j] = kernel(p, xs[i], ys[j]);
    });
    return plan;
}

GridFunction TransformPlan::forward(const GridFunction& f) const {
    if (f.grid != source_) throw PlanError("forward: input not on the plan's source grid");
    const auto& w = source_->weights();
    std::vector<Complex> out(nt_, Complex(0.0, 0.0));
    const std::size_t ns = source_->size();
    for (std::size_t i = 0; i < ns; ++i) {
        const Complex wf = w[i] * f.values[i];
        const Complex* row = cache_.data() + i * nt_;
        for (std::size_t j = 0; j < nt_; ++j) out[j] += wf * row[j];
    }
    return GridFunction(target_, std::move(out));
}

GridFunction TransformPlan::forward(const AtomSum& f) const {
    return forward(sample(source_, f));
}

GridFunction TransformPlan::inverse(const GridFunction& g) const {
    if (g.grid != target_) throw PlanError("inverse: input not on the plan's target grid");
    const auto& w = target_->weights();
    std::vector<Complex> wg(nt_);
    for (std::size_t j = 0; j < nt_; ++j) wg[j] = w[j] * g.values[j];
    const std::size_t ns = source_->size();
    const bool reflect = (params_.n % 2 != 0);
    std::vector<Complex> out(ns, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < ns; ++i) {
        // B((-1)^n x_i, y_j): for odd n the mirrored source row is the exact reflection
        const std::size_t row_i = reflect ? source_->mirror(i) : i;
        const Complex* row = cache_.data() + row_i * nt_;
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < nt_; ++j) acc += wg[j] * row[j];
        out[i] = acc;
    }
    return GridFunction(source_, std::move(out));
}

AtomSum gaussian_closed_form(const Params& params, double s) {
    if (!(s > 0.0)) throw std::domain_error("gaussian_closed_form: s must be positive");
    const double coeff = std::pow(2.0 * s, -(params.nu + 1.0));
    return AtomSum::gaussian(1.0 / (4.0 * s)) * Complex(coeff, 0.0);
}

AtomSum transform_exact(const AtomSum& f, const Params& params) {
    AtomSum acc;
    for (const auto& a : f.terms()) {
        // exponent must be 2j/n with j a nonnegative integer
        const Rational j_rat = Rational(a.exponent.num * params.n, a.exponent.den * 2);
        if (!j_rat.is_integer() || j_rat.num < 0)
            throw std::domain_error(
                "transform_exact: atom exponent is not 2j/n with integer j >= 0");
        const auto j = static_cast<int>(j_rat.num);
        const double s = a.rate;
        AtomSum base;
        if (a.parity == 0) {
            base = gaussian_closed_form(params, s);
        } else {
            const Complex c =
                minus_i_pow(params.n) * std::pow(2.0 * s, -(params.nu + params.n + 1.0));
            base = AtomSum::odd_gaussian(1.0 / (4.0 * s)) * c;
        }
        // F(|x|^{2j/n} g) = (-1)^j L^j (F g)
        AtomSum img = base;
        for (int i = 0; i < j; ++i) img = apply_L(img, params) * Complex(-1.0, 0.0);
        acc = acc + img * a.coeff;
    }
    return acc;
}

namespace {

void require_uniform_target(const TransformPlan& plan) {
    if (!plan.target_grid()->is_uniform())
        throw PlanError("range-side finite differences need a uniform target grid");
}

constexpr double kWindowLo = 0.5;
constexpr double kWindowHi = 3.0;

}  // namespace

IntertwiningResiduals intertwining_residuals(const TransformPlan& plan, const AtomSum& f) {
    require_uniform_target(plan);
    const Params& p = plan.params();
    if (f.empty()) return {};
    const FdField Ff = make_fd_field(plan.forward(f));

    IntertwiningResiduals r;
    {
        // F (x d/dx) f = -(x d/dx + (2k + 2/n - 1)) F f
        const GridFunction lhs = plan.forward(apply_euler(f, p));
        FdField rhs = fd_euler(Ff);
        const double shift = p.lp_shift - 1.0;
        for (std::size_t i = 0; i < rhs.fn.values.size(); ++i)
            rhs.fn.values[i] = -(rhs.fn.values[i] + shift * Ff.fn.values[i]);
        r.euler = fd_window_sup(rhs, lhs, kWindowLo, kWindowHi);
    }
    {
        // F (|x|^{2/n} f) = -|y|^{2-2/n} Delta_k (F f)
        const GridFunction lhs = plan.forward(apply_mult(f, p));
        FdField rhs = fd_scale(fd_laplacian(Ff), Complex(-1.0, 0.0));
        r.mult = fd_window_sup(rhs, lhs, kWindowLo, kWindowHi);
    }
    {
        // F (|x|^{2-2/n} Delta_k f) = -|y|^{2/n} (F f)
        const GridFunction lhs = plan.forward(apply_L(f, p));
        const auto& u = Ff.fn.grid->u();
        FdField rhs = Ff;
        for (std::size_t i = 0; i < rhs.fn.values.size(); ++i)
            rhs.fn.values[i] *= -(u[i] * u[i]);
        r.laplacian = fd_window_sup(rhs, lhs, kWindowLo, kWindowHi);
    }
    return r;
}

double theorem1_identity(const TransformPlan& plan, const AtomSum& f, int alpha, int beta) {
    require_uniform_target(plan);
    if (alpha < 0 || beta < 0 || alpha > 2 || beta > 2)
        throw CapacityError("theorem1_identity: alpha, beta must lie in [0,2]");
    const Params& p = plan.params();
    // left side: numeric operators on the transform
    FdField lhs = make_fd_field(plan.forward(f));
    for (int b = 0; b < beta; ++b)
        lhs = fd_scale(fd_laplacian(lhs), Complex(static_cast<double>(p.n), 0.0));
    lhs = fd_scaled_mult(lhs, alpha);
    // right side: exact h_{alpha,beta} pushed through the transform
    GridFunction rhs = plan.forward(sequence_h(f, alpha, beta, p));
    const double sign = ((alpha + beta) % 2 == 0) ? 1.0 : -1.0;
    for (auto& v : rhs.values) v *= sign;
    return fd_window_sup(lhs, rhs, kWindowLo, kWindowHi);
}

}  // namespace genfourier
