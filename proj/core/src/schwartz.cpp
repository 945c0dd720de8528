#include "genfourier/schwartz.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "genfourier/errors.hpp"
#include "genfourier/fd_ops.hpp"

namespace genfourier {

namespace {

// Beyond this deformed radius every term of h, weighted by (1+u^2)^beta_w u^{2 alpha_w},
// is monotone decreasing; the term values there certify the tail.
double monotone_radius(const AtomSum& h, const Params& params, int alpha_w, int beta_w) {
    double u2 = 1.0;
    for (const auto& a : h.terms()) {
        const double m = params.n * (a.exponent.value() + a.parity) + 2.0 * alpha_w;
        const double s = a.rate;
        // d/du [ (1+u^2)^{bw} u^m e^{-s n u^2} ] < 0  once  2 bw + m < 2 s n u^2
        u2 = std::max(u2, (2.0 * beta_w + m + 1.0) / (2.0 * s * params.n));
    }
    return 1.3 * std::sqrt(u2);
}

double term_value_at_u(const Atom& a, const Params& params, double u) {
    const double m = params.n * (a.exponent.value() + a.parity);
    return std::abs(a.coeff) * std::pow(u, m) * std::exp(-a.rate * params.n * u * u);
}

// sup over R\{0} of  (1+u^2)^{beta_w} (n u^2)^{alpha_w} |h(x(u))|
double scan_sup(const AtomSum& h, const Params& params, int alpha_w, int beta_w) {
    if (h.empty()) return 0.0;
    if (h.singular_at_origin() && alpha_w == 0) return std::numeric_limits<double>::infinity();
    const double u_hi = monotone_radius(h, params, alpha_w, beta_w);
    const int kPoints = 4001;
    auto weighted = [&](double u, double sign) {
        const double x = sign * std::pow(u, static_cast<double>(params.n));
        const double w = std::pow(1.0 + u * u, static_cast<double>(beta_w)) *
                         std::pow(params.n * u * u, static_cast<double>(alpha_w));
        return w * std::abs(evaluate(h, params, x));
    };
    double sup = 0.0;
    for (double sign : {1.0, -1.0}) {
        double best_u = 0.0;
        double best = 0.0;
        for (int i = 1; i <= kPoints; ++i) {
            const double u = u_hi * i / kPoints;
            const double v = weighted(u, sign);
            if (v > best) {
                best = v;
                best_u = u;
            }
        }
        // golden-section polish around the scan maximum
        const double h_step = u_hi / kPoints;
        double a = std::max(best_u - h_step, u_hi / kPoints * 0.5);
        double b = best_u + h_step;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 60; ++it) {
            if (weighted(c, sign) > weighted(d, sign))
                b = d;
            else
                a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        best = std::max(best, weighted(0.5 * (a + b), sign));
        sup = std::max(sup, best);
    }
    // limit at the origin (alpha_w = 0 and regular terms only)
    if (alpha_w == 0 && !h.singular_at_origin()) {
        bool fractional = false;
        for (const auto& a : h.terms())
            if (!a.exponent.is_integer()) fractional = true;
        if (!fractional) sup = std::max(sup, std::abs(evaluate(h, params, 0.0)));
    }
    // analytic tail certificate
    double tail = 0.0;
    for (const auto& a : h.terms())
        tail += std::pow(1.0 + u_hi * u_hi, static_cast<double>(beta_w)) *
                std::pow(params.n * u_hi * u_hi, static_cast<double>(alpha_w)) *
                term_value_at_u(a, params, u_hi);
    return std::max(sup, tail);
}

}  // namespace

double seminorm_P(int alpha, int beta, const AtomSum& f, const Params& params) {
    if (alpha < 0 || beta < 0) throw std::domain_error("seminorm_P: alpha, beta must be >= 0");
    AtomSum h = f;
    const Complex n_factor(static_cast<double>(params.n), 0.0);
    for (int b = 0; b < beta; ++b) h = apply_L(h, params) * n_factor;
    return scan_sup(h, params, alpha, 0);
}

double seminorm_Q(int beta, const AtomSum& f, const Params& params) {
    if (beta < 0) throw std::domain_error("seminorm_Q: beta must be >= 0");
    return scan_sup(f, params, 0, beta);
}

SeminormReport membership_report(const AtomSum& f, const Params& params,
                                 const MembershipRanges& ranges) {
    if (ranges.alpha_max > 5 || ranges.beta_max > 5 || ranges.ell_max > 5)
        throw CapacityError("membership_report: atom ranges validated up to 5");
    const StirlingTable table(std::max(1, ranges.ell_max));
    SeminormReport rep;
    rep.params = params;
    for (int ell = 0; ell <= ranges.ell_max; ++ell) {
        const AtomSum xldl = apply_xjdj(f, ell, params, table);
        for (int beta = 0; beta <= ranges.beta_max; ++beta) {
            for (int alpha = 0; alpha <= ranges.alpha_max; ++alpha) {
                SeminormEntry e;
                e.alpha = alpha;
                e.beta = beta;
                e.ell = ell;
                e.value = seminorm_P(alpha, beta, xldl, params);
                e.method = "exact-atom";
                rep.entries.push_back(e);
            }
        }
    }
    return rep;
}

SeminormReport membership_report(const GridFunction& f, const MembershipRanges& ranges) {
    if (ranges.alpha_max > 3 || ranges.beta_max > 3 || ranges.ell_max > 3)
        throw CapacityError("membership_report: grid ranges validated up to 3");
    const Params& params = f.grid->params();
    const StirlingTable table(std::max(1, ranges.ell_max));
    // decay flag: values at the outermost tenth of the grid
    double edge = 0.0;
    const auto sz = f.values.size();
    for (std::size_t i = 0; i < sz; ++i)
        if (i < sz / 10 || i >= sz - sz / 10) edge = std::max(edge, std::abs(f.values[i]));
    const bool decay_ok = edge < 1e-8;
    const std::string method =
        decay_ok ? "grid-estimate" : "grid-estimate(no-decay-certificate)";

    SeminormReport rep;
    rep.params = params;
    // euler powers by finite differences
    std::vector<FdField> euler_pows;
    euler_pows.push_back(make_fd_field(f));
    for (int i = 1; i <= ranges.ell_max; ++i)
        euler_pows.push_back(fd_euler(euler_pows.back()));
    for (int ell = 0; ell <= ranges.ell_max; ++ell) {
        // x^l f^(l) = sum_i s(l,i) (x d/dx)^i f
        FdField xldl = euler_pows[0];
        for (auto& v : xldl.fn.values) v *= static_cast<double>(table.s(ell, 0));
        for (int i = 1; i <= ell; ++i) {
            const double c = static_cast<double>(table.s(ell, i));
            xldl.margin = std::max(xldl.margin, euler_pows[i].margin);
            for (std::size_t idx = 0; idx < xldl.fn.values.size(); ++idx)
                xldl.fn.values[idx] += c * euler_pows[i].fn.values[idx];
        }
        for (int beta = 0; beta <= ranges.beta_max; ++beta) {
            for (int alpha = 0; alpha <= ranges.alpha_max; ++alpha) {
                FdField h = xldl;
                for (int b = 0; b < beta; ++b)
                    h = fd_scale(fd_laplacian(h), Complex(static_cast<double>(params.n), 0.0));
                h = fd_scaled_mult(h, alpha);
                double sup = 0.0;
                for (std::size_t i = 0; i < h.fn.values.size(); ++i) {
                    if (i < static_cast<std::size_t>(h.margin) ||
                        i + h.margin >= h.fn.values.size())
                        continue;
                    sup = std::max(sup, std::abs(h.fn.values[i]));
                }
                rep.entries.push_back(SeminormEntry{alpha, beta, ell, sup, method});
            }
        }
    }
    return rep;
}

EmbeddingChain embedding_constants(const AtomSum& f, double p, int beta, int m,
                                   const Params& params, GridPtr grid) {
    if (!(p >= 1.0) || std::isinf(p))
        throw std::domain_error("embedding_constants: need 1 <= p < infinity");
    const double threshold = (params.nu + 1.0) / p;  // = (n/2p)(2k+2/n-1)
    if (!(static_cast<double>(beta) > threshold))
        throw DivergenceError("embedding_constants: beta below the weight-integral threshold");
    EmbeddingChain chain;
    const AtomSum gm = sequence_g_m(f, m, params);
    chain.norm_f = lp_norm(sample(grid, f), p);
    chain.norm_gm = lp_norm(sample(grid, gm), p);
    // || (1+|.|^{2/n})^{-beta} ||_p by direct quadrature in u (truncation
    // underestimates, which only makes the chain assertion harder)
    {
        auto wgrid = QuadratureGrid::gauss_legendre(params, 200.0, 2048, 128);
        double acc = 0.0;
        for (std::size_t i = 0; i < wgrid->size(); ++i) {
            const double u2 = wgrid->u()[i] * wgrid->u()[i];
            acc += wgrid->weights()[i] * std::pow(1.0 + u2, -static_cast<double>(beta) * p);
        }
        chain.weight_norm = std::pow(acc, 1.0 / p);
    }
    chain.q_seminorm = seminorm_Q(beta, gm, params);
    chain.bound = chain.weight_norm * chain.q_seminorm;
    return chain;
}

}  // namespace genfourier
