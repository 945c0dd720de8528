// Acceptance suite: one line per criterion, exit nonzero on any failure.
// Every tolerance is pinned here; nothing is deferred to runtime calibration.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "genfourier/config.hpp"
#include "genfourier/convolution.hpp"
#include "genfourier/kernel.hpp"
#include "genfourier/report.hpp"
#include "genfourier/schwartz.hpp"
#include "genfourier/transform.hpp"
#include "genfourier/verification.hpp"

using namespace genfourier;

namespace {

int g_failures = 0;

void criterion(int id, const char* label, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, label,
                detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

const Params kPairs[] = {Params::create(1.0, 1), Params::create(0.8, 2), Params::create(1.0, 3)};

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

double rel_distance(const AtomSum& a, const AtomSum& b) {
    const double scale = std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
    return a.max_coeff_distance(b) / scale;
}

// 1. Gaussian eigenpair, 12 combinations, <= 1e-6, under 30 s
void criterion1() {
    constexpr double kTol = 1e-6;
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const auto& p : kPairs) {
        const auto src = QuadratureGrid::gauss_legendre(
            p, std::sqrt(16.0 / (0.4 * p.n)) + 0.5, 1536, 48);
        const auto tgt = QuadratureGrid::uniform_midpoint(p, std::pow(3.0, 1.0 / p.n), 200);
        const TransformPlan plan = TransformPlan::create(src, tgt);
        for (double s : {0.4, 0.5, 1.0, 2.0}) {
            const GridFunction got = plan.forward(AtomSum::gaussian(s));
            const GridFunction want = sample(tgt, gaussian_closed_form(p, s));
            for (std::size_t j = 0; j < got.values.size(); ++j)
                worst = std::max(worst, std::abs(got.values[j] - want.values[j]));
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    criterion(1, "Gaussian eigenpair, |x|<=3, s in {0.4,0.5,1,2}, all (k,n)",
              worst <= kTol && secs < 30.0,
              "max dev " + fmt(worst) + " tol 1e-6, runtime " + fmt(secs) + "s < 30s");
}

// 2. Inversion round trip on even and odd atoms, <= 1e-5
void criterion2() {
    constexpr double kTol = 1e-5;
    double worst = 0.0;
    for (const auto& p : kPairs) {
        for (const auto& entry : rated_suite(p)) {
            const auto src = QuadratureGrid::gauss_legendre(
                p, std::sqrt(24.0 / (entry.s * p.n)) + 0.5, 1536, 48);
            const auto tgt = QuadratureGrid::gauss_legendre(
                p, std::sqrt(4.0 * entry.s * 24.0 / p.n) + 0.5, 1536, 48);
            const TransformPlan plan = TransformPlan::create(src, tgt);
            const GridFunction fs = sample(plan.source_grid(), entry.f);
            const GridFunction back = plan.inverse(plan.forward(fs));
            for (std::size_t i = 0; i < back.values.size(); ++i)
                worst = std::max(worst, std::abs(back.values[i] - fs.values[i]));
        }
    }
    criterion(2, "inversion round trip on the atom suite", worst <= kTol,
              "sup err " + fmt(worst) + " tol 1e-5");
}

// 3. Kernel identities
void criterion3() {
    double init_dev = 0.0, sym_dev = 0.0, eig_dev = 0.0;
    for (const auto& p : kPairs) {
        std::mt19937_64 rng(20250810);
        std::uniform_real_distribution<double> ys(-8.0, 8.0), xs(-2.5, 2.5);
        for (int i = 0; i < 100; ++i)
            init_dev = std::max(init_dev, std::abs(kernel(p, 0.0, ys(rng)) - Complex(1.0, 0.0)));
        for (int i = 0; i < 100; ++i) {
            const double x = xs(rng), y = xs(rng);
            sym_dev = std::max(sym_dev, std::abs(kernel(p, x, y) - kernel(p, y, x)));
        }
        const double y0 = 1.3, h = 5e-4;
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
            eig_dev = std::max(eig_dev, std::abs(lhs - rhs) / std::max(1e-6, std::abs(rhs)));
        }
    }
    criterion(3, "kernel identities: B(0,y)=1, symmetry, eigenfunction FD",
              init_dev <= 1e-12 && sym_dev <= 1e-12 && eig_dev <= 1e-5,
              "init " + fmt(init_dev) + ", sym " + fmt(sym_dev) + ", eig " + fmt(eig_dev));
}

// 4. Exact operator algebra, coefficient-exact to 1e-12
void criterion4() {
    constexpr double kTol = 1e-12;
    double worst = 0.0;
    const StirlingTable table(8);
    for (const auto& p : kPairs) {
        const Complex n_c(static_cast<double>(p.n), 0.0);
        auto Eplus = [&](const AtomSum& f) { return apply_mult(f, p) * n_c; };
        auto Eminus = [&](const AtomSum& f) { return apply_L(f, p) * n_c; };
        for (const auto& entry : rated_suite(p)) {
            const AtomSum& f = entry.f;
            worst = std::max(worst, rel_distance(Eminus(Eplus(f)) - Eplus(Eminus(f)),
                                                 apply_H(f, p) * Complex(4.0, 0.0)));
            worst = std::max(worst, rel_distance(apply_H(Eplus(f), p) - Eplus(apply_H(f, p)),
                                                 Eplus(f) * Complex(2.0, 0.0)));
            worst = std::max(worst, rel_distance(apply_H(Eminus(f), p) - Eminus(apply_H(f, p)),
                                                 Eminus(f) * Complex(-2.0, 0.0)));
            // Lemma 3.1
            for (int beta = 1; beta <= 4; ++beta) {
                AtomSum pow_b = f;
                for (int i = 0; i < beta; ++i) pow_b = apply_mult(pow_b, p) * n_c;
                const AtomSum inner =
                    f * Complex(static_cast<double>(beta - 1), 0.0) + apply_H(f, p);
                AtomSum term1 = inner;
                for (int i = 0; i < beta - 1; ++i) term1 = apply_mult(term1, p) * n_c;
                term1 = term1 * Complex(4.0 * beta, 0.0);
                AtomSum term2 = apply_L(f, p) * n_c;
                for (int i = 0; i < beta; ++i) term2 = apply_mult(term2, p) * n_c;
                worst = std::max(worst, rel_distance(apply_L(pow_b, p) * n_c, term1 + term2));
            }
            // H^m = f_m
            AtomSum hm = f;
            for (int m = 0; m <= 5; ++m) {
                worst = std::max(worst, rel_distance(sequence_f_m(f, m, p, table), hm));
                hm = apply_H(hm, p);
            }
            // f~ triple agreement
            for (int beta = 0; beta <= 4; ++beta)
                for (int l = 0; l <= beta; ++l) {
                    const AtomSum a = sequence_f_tilde(f, beta, l, p, table);
                    worst = std::max(worst,
                                     rel_distance(a, sequence_f_tilde_recursive(f, beta, l, p)));
                    worst = std::max(
                        worst, rel_distance(a, sequence_f_tilde_falling(f, beta, l, p, table)));
                }
        }
        // normal ordering via the raw symbolic route, l <= 6
        const AtomSum g = AtomSum::gaussian(0.5);
        AtomSum euler_pow = g;
        for (int l = 0; l <= 6; ++l) {
            AtomSum rhs;
            for (int j = 0; j <= l; ++j) {
                if (table.S(l, j) == 0) continue;
                AtomSum xjdj = g;
                for (int d = 0; d < j; ++d) xjdj = derivative(xjdj, p);
                for (int d = 0; d < j; ++d) xjdj = multiply_by_x(xjdj);
                rhs = rhs + xjdj * Complex(static_cast<double>(table.S(l, j)), 0.0);
            }
            worst = std::max(worst, rel_distance(euler_pow, rhs));
            if (l < 6) euler_pow = apply_euler(euler_pow, p);
        }
    }
    criterion(4, "exact operator algebra (sl2, ordering, Lemma 3.1, f_m, f~ triple)",
              worst <= kTol, "max coefficient residual " + fmt(worst) + " tol 1e-12");
}

// 5. Kernel-derivative recursions against FD oracles
void criterion5() {
    double worst = 0.0;
    bool c11_fixed = true;
    std::string choice;
    for (const auto& p : kPairs) {
        const DerivativeCoeffs t = derivative_coeffs(p, 3);
        c11_fixed = c11_fixed && (t.c11_residual <= 1e-6) &&
                    (t.c11_rejected >= 10.0 * std::max(t.c11_residual, 1e-12));
        choice = t.c11_choice;
        const double h = 1e-3, y0 = 1.2;
        for (int l = 1; l <= 3; ++l) {
            for (const double x0 : {0.8, 1.4}) {
                std::function<Complex(double)> ce = [&](double tt) {
                    return Complex(kernel_even(p, tt, y0), 0.0);
                };
                std::function<Complex(double)> co = [&](double tt) {
                    return kernel_odd(p, tt, y0);
                };
                for (int i = 0; i < l; ++i) {
                    auto pe = ce;
                    ce = [pe, h](double tt) {
                        return tt * (-pe(tt + 2 * h) + 8.0 * pe(tt + h) - 8.0 * pe(tt - h) +
                                     pe(tt - 2 * h)) /
                               (12.0 * h);
                    };
                    auto po = co;
                    co = [po, h](double tt) {
                        return tt * (-po(tt + 2 * h) + 8.0 * po(tt + h) - 8.0 * po(tt - h) +
                                     po(tt - 2 * h)) /
                               (12.0 * h);
                    };
                }
                const double fe = derivative_expansion_even(p, t, l, x0, y0);
                const Complex fo = derivative_expansion_odd(p, t, l, x0, y0);
                worst = std::max(worst,
                                 std::fabs(fe - ce(x0).real()) / std::max(1.0, std::fabs(fe)));
                worst = std::max(worst, std::abs(fo - co(x0)) / std::max(1.0, std::abs(fo)));
            }
        }
        // alpha = 1 via the FD Dunkl Laplacian of the symbolic l-expansion
        const double hh = 7e-4, yy = 1.1;
        for (int l = 0; l <= 3; ++l) {
            for (const double x0 : {0.9, 1.6}) {
                auto base = [&](double tt) { return iterated_kernel_expansion(p, 0, l, tt, yy); };
                const Complex d2 = (-base(x0 + 2 * hh) + 16.0 * base(x0 + hh) - 30.0 * base(x0) +
                                    16.0 * base(x0 - hh) - base(x0 - 2 * hh)) /
                                   (12.0 * hh * hh);
                const Complex d1 = (-base(x0 + 2 * hh) + 8.0 * base(x0 + hh) -
                                    8.0 * base(x0 - hh) + base(x0 - 2 * hh)) /
                                   (12.0 * hh);
                const Complex lap =
                    d2 + 2.0 * p.k / x0 * d1 - p.k * (base(x0) - base(-x0)) / (x0 * x0);
                const Complex want =
                    static_cast<double>(p.n) * std::pow(std::fabs(x0), 2.0 - 2.0 / p.n) * lap;
                const Complex got = iterated_kernel_expansion(p, 1, l, x0, yy);
                worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(got)));
            }
        }
    }
    criterion(5, "kernel-derivative recursions vs FD, c11 base case fixed",
              worst <= 1e-4 && c11_fixed,
              "max rel residual " + fmt(worst) + " tol 1e-4; c11 = " + choice);
}

// 6. Theorem 1.2 computable content
void criterion6() {
    double worst = 0.0;
    bool finite = true;
    for (const auto& p : kPairs) {
        const auto src = QuadratureGrid::gauss_legendre(
            p, std::sqrt(32.0 / (0.5 * p.n)) + 0.5, 1536, 48);
        const auto tgt =
            QuadratureGrid::uniform_midpoint(p, std::pow(3.0, 1.0 / p.n) + 0.4, 320);
        const TransformPlan plan = TransformPlan::create(src, tgt);
        for (const auto& entry : rated_suite(p)) {
            for (int alpha = 0; alpha <= 2; ++alpha)
                for (int beta = 0; beta <= 2; ++beta)
                    worst = std::max(worst, theorem1_identity(plan, entry.f, alpha, beta));
            for (const auto& e :
                 membership_report(transform_exact(entry.f, p), p, MembershipRanges{3, 3, 3})
                     .entries)
                finite = finite && std::isfinite(e.value);
        }
    }
    criterion(6, "Theorem 1.2: transform-side identity and membership of F(atom)",
              worst <= 5e-4 && finite,
              "max residual " + fmt(worst) + " tol 5e-4; tables finite=" +
                  (finite ? "yes" : "no"));
}

// 7. Translation/convolution support
void criterion7() {
    double worst = 0.0;
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        {
            const double s = 0.5;
            const double R2u = std::sqrt(std::log(1e10) / (s * p.n));
            const double x0 = 1.0;
            const double Ru = std::pow(std::fabs(x0), 1.0 / p.n) + R2u;
            const double U = 1.18 * Ru;
            const double V =
                std::min(58.0 / (p.n * U), std::sqrt(4.0 * s * std::log(1e8) / p.n));
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
            worst = std::max(worst, outside / total);
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
            worst = std::max(worst, outside / total);
        }
    }
    criterion(7, "support radii under translation and convolution", worst <= 1e-4,
              "max relative mass outside " + fmt(worst) + " tol 1e-4");
}

// 8. Approximate identity with the spec schedule
void criterion8() {
    bool all_decreasing = true;
    double worst_final = 0.0;
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        const double U = p.n == 1 ? 6.5 : 4.6;
        const double V = 58.0 / (p.n * U);
        const TransformPlan plan =
            TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1984, 62),
                                  QuadratureGrid::gauss_legendre(p, V, 1984, 62));
        const ApproxIdentity phi = bump_identity(p, 1.0, {1.0, 0.5, 0.25, 0.125});
        const GridFunction fg = sample(plan.source_grid(), AtomSum::gaussian(0.5));
        const GridFunction fb = sample(plan.source_grid(), [&](double x) {
            const double u = std::pow(std::fabs(x), 1.0 / p.n);
            const double t = u / 3.0;
            return Complex(t < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0, 0.0);
        });
        for (const GridFunction* f : {&fg, &fb}) {
            for (double pn : {1.0, 2.0}) {
                const auto errs = approx_identity_convergence(plan, *f, phi, pn);
                for (std::size_t i = 0; i + 1 < errs.size(); ++i)
                    all_decreasing = all_decreasing && errs[i + 1] < errs[i];
                worst_final = std::max(worst_final, errs.back() / lp_norm(*f, pn));
            }
        }
    }
    criterion(8, "approximate identity: strict decrease and final <= 0.05 ||f||_p",
              all_decreasing && worst_final <= 0.05,
              std::string("decreasing=") + (all_decreasing ? "yes" : "no") + ", max final " +
                  fmt(worst_final));
}

// 9. Proposition 4.2 and the embedding chain
void criterion9() {
    double gm_excess = 0.0, t_dev = 0.0, chain_excess = 0.0, min_slack = 1e300;
    for (const auto& p : kPairs) {
        const auto grid = QuadratureGrid::gauss_legendre(
            p, std::sqrt(36.0 / (0.5 * p.n)), 1536, 48);
        for (const auto& entry : rated_suite(p))
            for (int m = 0; m <= 4; ++m)
                for (double pn : {1.0, 2.0}) {
                    const auto [nf, ng] = gm_inequality(entry.f, m, pn, p, grid);
                    gm_excess = std::max(gm_excess, nf - ng);
                }
        const AtomSum f = AtomSum::gaussian(0.5);
        const AtomSum rhs = apply_euler(f, p) + f * Complex(p.lp_shift, 0.0);
        for (double x : {0.3, -0.8, 1.2, 2.0})
            t_dev = std::max(t_dev, std::abs(t_operator_at(rhs, p, x) - evaluate(f, p, x)));
        const int beta = static_cast<int>(p.nu + 1.0) + 1;
        for (const auto& entry : rated_suite(p))
            for (double pn : {1.0, 2.0}) {
                const EmbeddingChain c = embedding_constants(entry.f, pn, beta, 1, p, grid);
                chain_excess = std::max(chain_excess, c.norm_f - c.norm_gm);
                chain_excess = std::max(chain_excess, c.norm_gm - c.bound);
                min_slack = std::min(min_slack, c.bound - c.norm_gm);
            }
    }
    criterion(9, "Proposition 4.2 norms, T-operator inverse, embedding chain",
              gm_excess <= 1e-9 && t_dev <= 1e-8 && chain_excess <= 1e-9,
              "gm excess " + fmt(gm_excess) + ", T dev " + fmt(t_dev) + ", chain slack " +
                  fmt(min_slack));
}

// 10. Determinism: two runs of the full verification produce identical bytes
void criterion10() {
    RunConfig cfg;
    cfg.k = 1.0;
    cfg.n = 1;
    const std::string a = reports_to_json(run_suites(cfg));
    const std::string b = reports_to_json(run_suites(cfg));
    criterion(10, "byte-identical verification reports across runs", a == b,
              a == b ? "identical (" + std::to_string(a.size()) + " bytes)" : "MISMATCH");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
