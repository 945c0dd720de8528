#include "genfourier/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "genfourier/convolution.hpp"
#include "genfourier/errors.hpp"
#include "genfourier/kernel.hpp"
#include "genfourier/schwartz.hpp"
#include "genfourier/transform.hpp"

namespace genfourier {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double rel_distance(const AtomSum& a, const AtomSum& b) {
    const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    return a.max_coeff_distance(b) / scale;
}

std::vector<AtomSum> atom_suite(const Params& p) {
    std::vector<AtomSum> fam;
    fam.push_back(AtomSum::gaussian(0.5));
    fam.push_back(apply_mult(AtomSum::gaussian(0.5), p));
    fam.push_back(apply_mult(apply_mult(AtomSum::gaussian(1.0), p), p));
    fam.push_back(AtomSum::odd_gaussian(0.5));
    fam.push_back(apply_mult(AtomSum::odd_gaussian(1.0), p));
    return fam;
}

struct RatedAtom {
    double s;
    AtomSum f;
};

std::vector<RatedAtom> rated_suite(const Params& p) {
    std::vector<RatedAtom> fam;
    fam.push_back({0.5, AtomSum::gaussian(0.5)});
    fam.push_back({0.5, apply_mult(AtomSum::gaussian(0.5), p)});
    fam.push_back({1.0, apply_mult(apply_mult(AtomSum::gaussian(1.0), p), p)});
    fam.push_back({0.5, AtomSum::odd_gaussian(0.5)});
    fam.push_back({1.0, apply_mult(AtomSum::odd_gaussian(1.0), p)});
    return fam;
}

GridPtr rate_source(const Params& p, double s, double budget) {
    return QuadratureGrid::gauss_legendre(p, std::sqrt(budget / (s * p.n)) + 0.5, 1536, 48);
}

GridPtr rate_target(const Params& p, double s, double budget) {
    return QuadratureGrid::gauss_legendre(p, std::sqrt(4.0 * s * budget / p.n) + 0.5, 1536, 48);
}

using Checks = std::vector<CheckReport>;

void add(Checks& out, const RunConfig& cfg, const std::string& name, double residual,
         double default_tol, const std::string& details = "") {
    out.push_back(make_check(name, residual, cfg.tolerance_for(name, default_tol), details));
}

// ---------------------------------------------------------------- algebra

Checks run_algebra(const RunConfig& cfg) {
    Checks out;
    const Params p = cfg.validated_params();
    const StirlingTable table(8);
    const auto fam = atom_suite(p);
    const Complex n_c(static_cast<double>(p.n), 0.0);
    auto Eplus = [&](const AtomSum& f) { return apply_mult(f, p) * n_c; };
    auto Eminus = [&](const AtomSum& f) { return apply_L(f, p) * n_c; };

    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    for (const auto& f : fam) {
        r1 = std::max(r1, rel_distance(Eminus(Eplus(f)) - Eplus(Eminus(f)),
                                       apply_H(f, p) * Complex(4.0, 0.0)));
        r2 = std::max(r2, rel_distance(apply_H(Eplus(f), p) - Eplus(apply_H(f, p)),
                                       Eplus(f) * Complex(2.0, 0.0)));
        r3 = std::max(r3, rel_distance(apply_H(Eminus(f), p) - Eminus(apply_H(f, p)),
                                       Eminus(f) * Complex(-2.0, 0.0)));
    }
    add(out, cfg, "algebra.sl2.commutator_h", r1, 1e-12);
    add(out, cfg, "algebra.sl2.raising", r2, 1e-12);
    add(out, cfg, "algebra.sl2.lowering", r3, 1e-12);

    {
        double worst = 0.0;
        const AtomSum f = AtomSum::gaussian(0.5);
        AtomSum euler_pow = f;
        for (int l = 0; l <= 6; ++l) {
            AtomSum rhs;
            for (int j = 0; j <= l; ++j) {
                if (table.S(l, j) == 0) continue;
                AtomSum xjdj = f;
                for (int d = 0; d < j; ++d) xjdj = derivative(xjdj, p);
                for (int d = 0; d < j; ++d) xjdj = multiply_by_x(xjdj);
                rhs = rhs + xjdj * Complex(static_cast<double>(table.S(l, j)), 0.0);
            }
            worst = std::max(worst, rel_distance(euler_pow, rhs));
            if (l < 6) euler_pow = apply_euler(euler_pow, p);
        }
        add(out, cfg, "algebra.normal_ordering.exact", worst, 1e-12);
    }

    {
        double worst = 0.0;
        for (const auto& f : fam) {
            for (int beta = 1; beta <= 4; ++beta) {
                AtomSum pow_b = f;
                for (int i = 0; i < beta; ++i) pow_b = apply_mult(pow_b, p) * n_c;
                const AtomSum lhs = apply_L(pow_b, p) * n_c;
                const AtomSum inner =
                    f * Complex(static_cast<double>(beta - 1), 0.0) + apply_H(f, p);
                AtomSum term1 = inner;
                for (int i = 0; i < beta - 1; ++i) term1 = apply_mult(term1, p) * n_c;
                term1 = term1 * Complex(4.0 * beta, 0.0);
                AtomSum term2 = apply_L(f, p) * n_c;
                for (int i = 0; i < beta; ++i) term2 = apply_mult(term2, p) * n_c;
                worst = std::max(worst, rel_distance(lhs, term1 + term2));
            }
        }
        add(out, cfg, "algebra.lemma31", worst, 1e-12);
    }

    {
        double worst = 0.0;
        for (const auto& f : fam) {
            AtomSum hm = f;
            for (int m = 0; m <= 5; ++m) {
                worst = std::max(worst, rel_distance(sequence_f_m(f, m, p, table), hm));
                hm = apply_H(hm, p);
            }
        }
        add(out, cfg, "algebra.fm_equals_hm", worst, 1e-12);
    }

    {
        double worst = 0.0;
        for (const auto& f : fam) {
            for (int beta = 0; beta <= 4; ++beta)
                for (int l = 0; l <= beta; ++l) {
                    const AtomSum a = sequence_f_tilde(f, beta, l, p, table);
                    worst = std::max(worst,
                                     rel_distance(a, sequence_f_tilde_recursive(f, beta, l, p)));
                    worst = std::max(
                        worst, rel_distance(a, sequence_f_tilde_falling(f, beta, l, p, table)));
                }
        }
        add(out, cfg, "algebra.ftilde_triple", worst, 1e-12);
    }

    {
        double worst = 0.0;
        for (const auto& f : fam)
            for (int m = 0; m <= 3; ++m) {
                const AtomSum rec = apply_euler(sequence_g_m(f, m, p), p) +
                                    sequence_g_m(f, m, p) * Complex(p.lp_shift, 0.0);
                worst = std::max(worst, rel_distance(sequence_g_m(f, m + 1, p), rec));
            }
        add(out, cfg, "algebra.gm_recursion", worst, 1e-12);
    }

    {
        const StirlingTable t20(20);
        std::int64_t dev = 0;
        for (int l = 0; l <= 20; ++l)
            for (int m = 0; m <= 20; ++m) {
                std::int64_t acc = 0;
                for (int j = 0; j <= 20; ++j) acc += t20.s(l, j) * t20.S(j, m);
                dev = std::max<std::int64_t>(dev, std::llabs(acc - (l == m ? 1 : 0)));
            }
        add(out, cfg, "algebra.stirling_inversion", static_cast<double>(dev), 0.0);

        std::vector<std::int64_t> bell{1};
        std::vector<std::int64_t> row{1};
        for (int i = 1; i <= 20; ++i) {
            std::vector<std::int64_t> next(row.size() + 1);
            next[0] = row.back();
            for (std::size_t j = 0; j < row.size(); ++j) next[j + 1] = next[j] + row[j];
            row = std::move(next);
            bell.push_back(row[0]);
        }
        std::int64_t bdev = 0;
        for (int l = 0; l <= 20; ++l) {
            std::int64_t sum = 0;
            for (int j = 0; j <= l; ++j) sum += t20.S(l, j);
            bdev = std::max<std::int64_t>(bdev, std::llabs(sum - bell[l]));
        }
        add(out, cfg, "algebra.stirling_bell_rows", static_cast<double>(bdev), 0.0);

        std::int64_t fdev = 0;
        for (int l = 0; l <= 10; ++l) {
            const auto coeffs = falling_factorial_coeffs(l);
            for (std::int64_t m = -3; m <= 10; ++m) {
                std::int64_t acc = 0, mp = 1, want = 1;
                for (int j = 0; j <= l; ++j) {
                    acc += coeffs[j] * mp;
                    mp *= m;
                }
                for (int i = 0; i < l; ++i) want *= (m - i);
                fdev = std::max<std::int64_t>(fdev, std::llabs(acc - want));
            }
        }
        add(out, cfg, "algebra.falling_factorial", static_cast<double>(fdev), 0.0);
    }

    {
        const AtomSum g = AtomSum::gaussian(0.5);
        const AtomSum lhs = sequence_h(g, 1, 1, p);
        const AtomSum rhs = apply_H(g, p) * Complex(4.0, 0.0) +
                            apply_mult(apply_L(g, p) * n_c, p) * n_c;
        add(out, cfg, "algebra.h_lemma31_instance", rel_distance(lhs, rhs), 1e-12);
    }
    return out;
}

// ---------------------------------------------------------------- kernel

Checks run_kernel(const RunConfig& cfg) {
    Checks out;
    const Params p = cfg.validated_params();
    std::mt19937_64 rng(20250810);
    std::uniform_real_distribution<double> ys(-8.0, 8.0), xs(-2.5, 2.5);

    double r_init = 0.0;
    for (int i = 0; i < 100; ++i)
        r_init = std::max(r_init, std::abs(kernel(p, 0.0, ys(rng)) - Complex(1.0, 0.0)));
    add(out, cfg, "kernel.initial_condition", r_init, 1e-12);

    double r_sym = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = xs(rng), y = xs(rng);
        r_sym = std::max(r_sym, std::abs(kernel(p, x, y) - kernel(p, y, x)));
    }
    add(out, cfg, "kernel.symmetry", r_sym, 1e-12);

    {
        const double y0 = 1.3, h = 5e-4;
        double worst = 0.0;
        for (double x = 0.5; x <= 2.5; x += 0.125) {
            auto f = [&](double t) { return kernel(p, t, y0); };
            const Complex d2 = (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) +
                                16.0 * f(x - h) - f(x - 2 * h)) /
                               (12.0 * h * h);
            const Complex d1 =
                (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
            const Complex lap = d2 + 2.0 * p.k / x * d1 - p.k * (f(x) - f(-x)) / (x * x);
            const Complex lhs = std::pow(std::fabs(x), 2.0 - 2.0 / p.n) * lap;
            const Complex rhs = -std::pow(std::fabs(y0), 2.0 / p.n) * kernel(p, x, y0);
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1e-6, std::abs(rhs)));
        }
        add(out, cfg, "kernel.eigenfunction_fd", worst, 1e-5);
    }

    {
        const KernelBoundReport b0 = kernel_bound_scan(p, 0);
        const KernelBoundReport b1 = kernel_bound_scan(p, 1);
        add(out, cfg, "kernel.bound_scan_stability", std::fabs(b1.m_estimate - b0.m_estimate),
            1e-3, "m_estimate=" + fmt17(b1.m_estimate));
    }

    {
        const DerivativeCoeffs t = derivative_coeffs(p, 3);
        add(out, cfg, "kernel.c11_resolution", t.c11_residual, 1e-6,
            "chose " + t.c11_choice + "; rejected candidate residual " + fmt17(t.c11_rejected));

        double worst = 0.0;
        const double h = 1e-3;
        for (int l = 1; l <= 3; ++l) {
            for (const double x0 : {0.8, 1.4}) {
                const double y0 = 1.2;
                std::function<Complex(double)> ce = [&](double t) {
                    return Complex(kernel_even(p, t, y0), 0.0);
                };
                std::function<Complex(double)> co = [&](double t) {
                    return kernel_odd(p, t, y0);
                };
                for (int i = 0; i < l; ++i) {
                    auto pe = ce;
                    ce = [pe, h](double t) {
                        return t *
                               (-pe(t + 2 * h) + 8.0 * pe(t + h) - 8.0 * pe(t - h) +
                                pe(t - 2 * h)) /
                               (12.0 * h);
                    };
                    auto po = co;
                    co = [po, h](double t) {
                        return t *
                               (-po(t + 2 * h) + 8.0 * po(t + h) - 8.0 * po(t - h) +
                                po(t - 2 * h)) /
                               (12.0 * h);
                    };
                }
                const double fe = derivative_expansion_even(p, t, l, x0, y0);
                const Complex fo = derivative_expansion_odd(p, t, l, x0, y0);
                worst = std::max(worst, std::fabs(fe - ce(x0).real()) /
                                            std::max(1.0, std::fabs(fe)));
                worst = std::max(worst, std::abs(fo - co(x0)) / std::max(1.0, std::abs(fo)));
            }
        }
        add(out, cfg, "kernel.derivative_expansion_fd", worst, 1e-4);
    }

    {
        double worst = 0.0;
        const double y0 = 1.1, h = 7e-4;
        for (int l = 0; l <= 3; ++l) {
            for (const double x0 : {0.9, 1.6}) {
                auto base = [&](double t) { return iterated_kernel_expansion(p, 0, l, t, y0); };
                const Complex d2 = (-base(x0 + 2 * h) + 16.0 * base(x0 + h) - 30.0 * base(x0) +
                                    16.0 * base(x0 - h) - base(x0 - 2 * h)) /
                                   (12.0 * h * h);
                const Complex d1 = (-base(x0 + 2 * h) + 8.0 * base(x0 + h) -
                                    8.0 * base(x0 - h) + base(x0 - 2 * h)) /
                                   (12.0 * h);
                const Complex lap =
                    d2 + 2.0 * p.k / x0 * d1 - p.k * (base(x0) - base(-x0)) / (x0 * x0);
                const Complex want =
                    static_cast<double>(p.n) * std::pow(std::fabs(x0), 2.0 - 2.0 / p.n) * lap;
                const Complex got = iterated_kernel_expansion(p, 1, l, x0, y0);
                worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(got)));
            }
        }
        add(out, cfg, "kernel.iterated_expansion_fd", worst, 1e-4);

        double collapse = 0.0;
        for (const double x0 : {0.7, 1.3, 2.1}) {
            const Complex lhs = iterated_kernel_expansion(p, 1, 0, x0, y0);
            const Complex rhs = -static_cast<double>(p.n) *
                                std::pow(std::fabs(y0), 2.0 / p.n) * kernel(p, x0, y0);
            collapse = std::max(collapse, std::abs(lhs - rhs));
        }
        add(out, cfg, "kernel.eigen_collapse", collapse, 1e-11);
    }
    return out;
}

// ---------------------------------------------------------------- transform

Checks run_transform(const RunConfig& cfg) {
    Checks out;
    const Params p = cfg.validated_params();

    {
        const auto src = QuadratureGrid::gauss_legendre(
            p, std::sqrt(16.0 / (0.4 * p.n)) + 0.5, 1536, 48);
        const auto tgt = QuadratureGrid::uniform_midpoint(p, std::pow(3.0, 1.0 / p.n), 200);
        const TransformPlan plan = TransformPlan::create(src, tgt);
        for (double s : {0.4, 0.5, 1.0, 2.0}) {
            const GridFunction got = plan.forward(AtomSum::gaussian(s));
            const GridFunction want = sample(tgt, gaussian_closed_form(p, s));
            double dev = 0.0;
            for (std::size_t j = 0; j < got.values.size(); ++j)
                dev = std::max(dev, std::abs(got.values[j] - want.values[j]));
            std::ostringstream name;
            name << "transform.gaussian_pair.s" << s;
            add(out, cfg, name.str(), dev, 1e-6);
        }
    }

    {
        const auto suite = rated_suite(p);
        double worst = 0.0;
        for (const auto& entry : suite) {
            const TransformPlan plan = TransformPlan::create(rate_source(p, entry.s, 24.0),
                                                             rate_target(p, entry.s, 24.0));
            const GridFunction fs = sample(plan.source_grid(), entry.f);
            const GridFunction back = plan.inverse(plan.forward(fs));
            double sup = 0.0;
            for (std::size_t j = 0; j < back.values.size(); ++j)
                sup = std::max(sup, std::abs(back.values[j] - fs.values[j]));
            worst = std::max(worst, sup);
        }
        add(out, cfg, "transform.roundtrip", worst, 1e-5);
    }

    {
        const TransformPlan plan =
            TransformPlan::create(rate_source(p, 0.5, 24.0), rate_target(p, 0.5, 24.0));
        const GridFunction fe = plan.forward(AtomSum::gaussian(0.5));
        double im = 0.0;
        for (const auto& v : fe.values) im = std::max(im, std::fabs(v.imag()));
        add(out, cfg, "transform.parity_even", im, 1e-12);

        const GridFunction fo = plan.forward(AtomSum::odd_gaussian(0.5));
        const Complex phase = minus_i_pow(p.n);
        double off = 0.0;
        for (const auto& v : fo.values) off = std::max(off, std::fabs((v / phase).imag()));
        add(out, cfg, "transform.parity_odd", off, 1e-12);

        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> c(-1.0, 1.0);
        const auto src = plan.source_grid();
        std::vector<Complex> av(src->size()), bv(src->size()), combo(src->size());
        for (std::size_t i = 0; i < src->size(); ++i) {
            av[i] = Complex(c(rng), c(rng));
            bv[i] = Complex(c(rng), c(rng));
        }
        const Complex ca(0.3, 0.7), cb(-1.2, 0.1);
        for (std::size_t i = 0; i < src->size(); ++i) combo[i] = ca * av[i] + cb * bv[i];
        const GridFunction fa = plan.forward(GridFunction(src, av));
        const GridFunction fb = plan.forward(GridFunction(src, bv));
        const GridFunction fc = plan.forward(GridFunction(src, combo));
        double lin = 0.0, scale = 1.0;
        for (std::size_t j = 0; j < fc.values.size(); ++j) {
            lin = std::max(lin, std::abs(fc.values[j] - ca * fa.values[j] - cb * fb.values[j]));
            scale = std::max(scale, std::abs(fc.values[j]));
        }
        add(out, cfg, "transform.linearity", lin / scale, 1e-13);

        const KernelBoundReport bound = kernel_bound_scan(p, 0);
        double excess = 0.0;
        for (const auto& entry : rated_suite(p)) {
            const GridFunction fs = sample(plan.source_grid(), entry.f);
            const GridFunction Ff = plan.forward(fs);
            excess = std::max(excess,
                              (lp_norm(Ff, kInfinity) - bound.m_estimate * lp_norm(fs, 1.0)) /
                                  std::max(1e-12, lp_norm(fs, 1.0)));
        }
        add(out, cfg, "transform.linfty_l1", std::max(0.0, excess), 1e-9,
            "m_estimate=" + fmt17(bound.m_estimate));
    }

    {
        const auto src = QuadratureGrid::gauss_legendre(
            p, std::sqrt(32.0 / (0.5 * p.n)) + 0.5, 1536, 48);
        const auto tgt =
            QuadratureGrid::uniform_midpoint(p, std::pow(3.0, 1.0 / p.n) + 0.4, 320);
        const TransformPlan plan = TransformPlan::create(src, tgt);
        double re = 0.0, rm = 0.0, rl = 0.0;
        for (const auto& entry : rated_suite(p)) {
            const IntertwiningResiduals r = intertwining_residuals(plan, entry.f);
            re = std::max(re, r.euler);
            rm = std::max(rm, r.mult);
            rl = std::max(rl, r.laplacian);
        }
        add(out, cfg, "transform.intertwining.euler", re, 1e-4);
        add(out, cfg, "transform.intertwining.mult", rm, 1e-4);
        add(out, cfg, "transform.intertwining.laplacian", rl, 1e-4);

        for (int alpha = 0; alpha <= 2; ++alpha)
            for (int beta = 0; beta <= 2; ++beta) {
                double worst = 0.0;
                for (const auto& entry : rated_suite(p))
                    worst = std::max(worst, theorem1_identity(plan, entry.f, alpha, beta));
                std::ostringstream name;
                name << "transform.theorem1.a" << alpha << "b" << beta;
                add(out, cfg, name.str(), worst, alpha == 0 && beta == 0 ? 1e-8 : 5e-4);
            }
    }
    return out;
}

// ---------------------------------------------------------------- convolution

Checks run_convolution(const RunConfig& cfg) {
    Checks out;
    const Params p = cfg.validated_params();

    {
        const double U = std::sqrt(28.0 / (0.5 * p.n)) + 0.2;
        const TransformPlan plan =
            TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1536, 48),
                                  QuadratureGrid::gauss_legendre(p, U, 1536, 48));
        const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(0.5));
        double sup = 0.0;
        const GridFunction tf0 = translate(plan, f, 0.0);
        for (std::size_t i = 0; i < f.values.size(); ++i)
            sup = std::max(sup, std::abs(tf0.values[i] - f.values[i]));
        add(out, cfg, "convolution.translate_delta", sup, 1e-5);

        const double x0 = 0.9;
        const GridFunction lhs = plan.forward(translate(plan, f, x0));
        const GridFunction Ff = plan.forward(f);
        const double xr = (p.n % 2 == 0) ? x0 : -x0;
        double worst = 0.0;
        for (std::size_t j = 0; j < lhs.values.size(); ++j) {
            if (std::abs(Ff.values[j]) <= 1e-3) continue;
            const Complex ratio = lhs.values[j] / Ff.values[j];
            worst = std::max(worst,
                             std::abs(ratio - kernel(p, xr, plan.target_grid()->x()[j])));
        }
        add(out, cfg, "convolution.translated_kernel_identity", worst, 1e-6);

        const GridFunction g = sample(plan.source_grid(), AtomSum::gaussian(1.0));
        const GridFunction fg = convolve(plan, f, g);
        const GridFunction gf = convolve(plan, g, f);
        double comm = 0.0;
        for (std::size_t i = 0; i < fg.values.size(); ++i)
            comm = std::max(comm, std::abs(fg.values[i] - gf.values[i]));
        add(out, cfg, "convolution.commutativity", comm, 1e-8);

        const auto& xs = plan.source_grid()->x();
        double direct_dev = 0.0;
        for (double want_x : {0.0, 0.4, -0.9, 1.6, 2.3}) {
            std::size_t best = 0;
            for (std::size_t i = 0; i < xs.size(); ++i)
                if (std::fabs(xs[i] - want_x) < std::fabs(xs[best] - want_x)) best = i;
            direct_dev = std::max(direct_dev, std::abs(convolve_direct_at(plan, f, g, xs[best]) -
                                                       fg.values[best]));
        }
        add(out, cfg, "convolution.direct_oracle", direct_dev, 1e-4);

        const TransformPlan fine =
            TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1984, 62),
                                  QuadratureGrid::gauss_legendre(p, U, 1984, 62));
        const GridFunction f2 = sample(fine.source_grid(), AtomSum::gaussian(0.5));
        const GridFunction g2 = sample(fine.source_grid(), AtomSum::gaussian(1.0));
        const double y1 = young_check(plan, f, g, 1.0, 1.0, 1.0);
        const double y1f = young_check(fine, f2, g2, 1.0, 1.0, 1.0);
        add(out, cfg, "convolution.young_p1r1q1", std::fabs(y1 - y1f) / y1, 1e-3,
            "ratio=" + fmt17(y1));
        const double y2 = young_check(plan, f, g, 2.0, 1.0, 2.0);
        const double y2f = young_check(fine, f2, g2, 2.0, 1.0, 2.0);
        add(out, cfg, "convolution.young_p2r1q2", std::fabs(y2 - y2f) / y2, 1e-3,
            "ratio=" + fmt17(y2));

        const GridFunction tf = translate(plan, f, 1.5);
        const GridFunction tf_fine = translate(fine, f2, 1.5);
        const double ratio_c = lp_norm(tf, 2.0) / lp_norm(f, 2.0);
        const double ratio_f = lp_norm(tf_fine, 2.0) / lp_norm(f2, 2.0);
        add(out, cfg, "convolution.translation_norm_stability",
            std::fabs(ratio_c - ratio_f) / ratio_c, 1e-3, "ratio=" + fmt17(ratio_c));
    }

    {
        const double s = 0.5;
        const double R2u = std::sqrt(std::log(1e10) / (s * p.n));
        const double x0 = 1.0;
        const double Ru = std::pow(std::fabs(x0), 1.0 / p.n) + R2u;
        const double U = 1.18 * Ru;
        const double V = std::min(58.0 / (p.n * U), std::sqrt(4.0 * s * std::log(1e8) / p.n));
        const TransformPlan plan =
            TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1984, 62),
                                  QuadratureGrid::gauss_legendre(p, V, 1984, 62));
        const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(s));
        const GridFunction tf = translate(plan, f, x0);
        const auto& grid = *plan.source_grid();
        double outside = 0.0, total = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mass = grid.weights()[i] * std::abs(tf.values[i]);
            total += mass;
            if (std::fabs(grid.u()[i]) > Ru) outside += mass;
        }
        add(out, cfg, "convolution.translate_support", outside / total, 1e-4);
    }
    {
        const double s1 = 8.0, s2 = 0.5;
        const double Ru = std::sqrt(std::log(1e10) / (s1 * p.n)) +
                          std::sqrt(std::log(1e10) / (s2 * p.n));
        const double U = 1.2 * Ru;
        const double V = 58.0 / (p.n * U);
        const TransformPlan plan =
            TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1984, 62),
                                  QuadratureGrid::gauss_legendre(p, V, 1984, 62));
        const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(s1));
        const GridFunction g = sample(plan.source_grid(), AtomSum::gaussian(s2));
        const GridFunction conv = convolve(plan, f, g);
        const auto& grid = *plan.source_grid();
        double outside = 0.0, total = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mass = grid.weights()[i] * std::abs(conv.values[i]);
            total += mass;
            if (std::fabs(grid.u()[i]) > Ru) outside += mass;
        }
        add(out, cfg, "convolution.convolve_support", outside / total, 1e-4);
    }

    {
        const ApproxIdentity phi = bump_identity(p, 1.0);
        double mass_dev = 0.0;
        for (double r : {0.5, 0.25}) {
            const auto gr =
                QuadratureGrid::gauss_legendre(p, std::pow(r, 1.0 / p.n), 1024, 64);
            mass_dev =
                std::max(mass_dev, std::fabs(integrate(dilate(phi, r, p, gr)).real() - 1.0));
        }
        add(out, cfg, "convolution.dilate_mass", mass_dev, 1e-6);

        const AtomSum f = AtomSum::gaussian(0.5);
        const AtomSum rhs = apply_euler(f, p) + f * Complex(p.lp_shift, 0.0);
        double t_dev = 0.0;
        for (double x : {0.3, -0.8, 1.2, 2.0})
            t_dev = std::max(t_dev, std::abs(t_operator_at(rhs, p, x) - evaluate(f, p, x)));
        add(out, cfg, "convolution.t_operator_inverse", t_dev, 1e-8);
    }

    {
        const auto grid =
            QuadratureGrid::gauss_legendre(p, std::sqrt(36.0 / (0.5 * p.n)), 1536, 48);
        double excess = 0.0;
        for (const auto& entry : rated_suite(p))
            for (int m = 0; m <= 4; ++m)
                for (double pn : {1.0, 2.0}) {
                    const auto [nf, ng] = gm_inequality(entry.f, m, pn, p, grid);
                    excess = std::max(excess, nf - ng);
                }
        add(out, cfg, "convolution.gm_inequality", std::max(0.0, excess), 1e-9);
    }
    return out;
}

// ---------------------------------------------------------------- schwartz

Checks run_schwartz(const RunConfig& cfg) {
    Checks out;
    const Params p = cfg.validated_params();
    const StirlingTable table(6);

    add(out, cfg, "schwartz.p00_gaussian",
        std::fabs(seminorm_P(0, 0, AtomSum::gaussian(0.5), p) - 1.0), 1e-9);
    if (p.k == 1.0 && p.n == 1) {
        add(out, cfg, "schwartz.p10_value",
            std::fabs(seminorm_P(1, 0, AtomSum::gaussian(0.5), p) - 0.73575888234288464319),
            1e-9);
        add(out, cfg, "schwartz.q1_value",
            std::fabs(seminorm_Q(1, AtomSum::gaussian(0.5), p) - 1.2130613194252668472), 1e-9);
    }

    {
        const MembershipRanges ranges{3, 3, 3};
        bool all_finite = true;
        for (const auto& entry : rated_suite(p)) {
            for (const auto& e : membership_report(entry.f, p, ranges).entries)
                all_finite = all_finite && std::isfinite(e.value);
            for (const auto& e :
                 membership_report(transform_exact(entry.f, p), p, ranges).entries)
                all_finite = all_finite && std::isfinite(e.value);
        }
        add(out, cfg, "schwartz.membership_finite", all_finite ? 0.0 : 1.0, 0.0);

        bool agree = true;
        for (const auto& entry : rated_suite(p)) {
            bool fm_finite = true;
            for (int m = 0; m <= 3; ++m) {
                const AtomSum fm = sequence_f_m(entry.f, m, p, table);
                for (int a = 0; a <= 3; ++a)
                    for (int b = 0; b <= 3; ++b)
                        fm_finite = fm_finite && std::isfinite(seminorm_P(a, b, fm, p));
            }
            bool table_finite = true;
            for (const auto& e : membership_report(entry.f, p, ranges).entries)
                table_finite = table_finite && std::isfinite(e.value);
            agree = agree && (fm_finite == table_finite);
        }
        add(out, cfg, "schwartz.lemma32a_agreement", agree ? 0.0 : 1.0, 0.0);
    }

    {
        double violation = 0.0;
        const AtomSum f = AtomSum::gaussian(0.5);
        for (int beta = 1; beta <= 3; ++beta)
            for (int l = 0; l <= beta; ++l)
                for (int alpha = 0; alpha <= 1; ++alpha) {
                    const double mid =
                        seminorm_P(alpha, beta, sequence_f_tilde(f, beta, l, p, table), p);
                    const double lo = seminorm_P(alpha, beta, sequence_f_m(f, l, p, table), p);
                    double hi = 0.0;
                    for (int j = 0; j <= l; ++j)
                        for (int m = 0; m <= j; ++m)
                            hi += std::fabs(static_cast<double>(table.s(l, j))) *
                                  binomial(j, m) * std::pow(static_cast<double>(beta), j - m) *
                                  seminorm_P(alpha, beta, sequence_f_m(f, m, p, table), p);
                    violation = std::max(violation, lo - mid);
                    violation = std::max(violation, mid - hi);
                }
        add(out, cfg, "schwartz.prop33_sandwich", std::max(0.0, violation), 1e-8);
    }

    {
        const auto grid =
            QuadratureGrid::gauss_legendre(p, std::sqrt(36.0 / (0.5 * p.n)), 1536, 48);
        const int beta = static_cast<int>(p.nu + 1.0) + 1;
        double violation = 0.0;
        double slack = 1e300;
        for (const auto& entry : rated_suite(p))
            for (double pn : {1.0, 2.0}) {
                const EmbeddingChain c = embedding_constants(entry.f, pn, beta, 1, p, grid);
                violation = std::max(violation, c.norm_f - c.norm_gm);
                violation = std::max(violation, c.norm_gm - c.bound);
                slack = std::min(slack, c.bound - c.norm_gm);
            }
        add(out, cfg, "schwartz.embedding_chain", std::max(0.0, violation), 1e-9,
            "min slack=" + fmt17(slack));
    }
    return out;
}

// ---------------------------------------------------------------- density

Checks run_density(const RunConfig& cfg) {
    Checks out;
    const Params p = cfg.validated_params();
    const double U = p.n == 1 ? 6.5 : (p.n == 2 ? 4.6 : 3.8);
    const double V = 58.0 / (p.n * U);
    const TransformPlan plan =
        TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1984, 62),
                              QuadratureGrid::gauss_legendre(p, V, 1984, 62));
    // The L^p modulus scales like r^{2/n} here, so deeper n needs a longer
    // schedule to reach the same final level.
    std::vector<double> schedule = {1.0, 0.5, 0.25, 0.125};
    const int extra_steps = p.n >= 3 ? p.n - 1 : 0;
    for (int extra = 0; extra < extra_steps; ++extra) schedule.push_back(schedule.back() / 2.0);
    const ApproxIdentity phi = bump_identity(p, 1.0, schedule);
    const GridFunction fg = sample(plan.source_grid(), AtomSum::gaussian(0.5));
    const GridFunction fb = sample(plan.source_grid(), [&](double x) {
        const double u = std::pow(std::fabs(x), 1.0 / p.n);
        const double t = u / 3.0;
        return Complex(t < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0, 0.0);
    });
    const struct {
        const GridFunction* f;
        const char* tag;
    } inputs[] = {{&fg, "gauss"}, {&fb, "bump"}};
    for (const auto& in : inputs) {
        for (double pn : {1.0, 2.0}) {
            const auto errs = approx_identity_convergence(plan, *in.f, phi, pn);
            bool decreasing = true;
            for (std::size_t i = 0; i + 1 < errs.size(); ++i)
                decreasing = decreasing && errs[i + 1] < errs[i];
            const double rel = errs.back() / lp_norm(*in.f, pn);
            std::ostringstream name, det;
            name << "density.approx_identity." << in.tag << ".p" << static_cast<int>(pn);
            det << "errs=[";
            for (std::size_t i = 0; i < errs.size(); ++i)
                det << (i ? "," : "") << fmt17(errs[i]);
            det << "]";
            add(out, cfg, name.str(), decreasing ? rel : 1.0, 0.05, det.str());
        }
    }
    return out;
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& name, const RunConfig& config) {
    if (name == "algebra") return run_algebra(config);
    if (name == "kernel") return run_kernel(config);
    if (name == "transform") return run_transform(config);
    if (name == "convolution") return run_convolution(config);
    if (name == "schwartz") return run_schwartz(config);
    if (name == "density") return run_density(config);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

std::vector<CheckReport> run_suites(const RunConfig& config) {
    std::vector<CheckReport> all;
    const auto& names = config.suites.empty() ? kAllSuites : config.suites;
    for (const auto& s : names) {
        auto part = run_suite(s, config);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace genfourier
