#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "genfourier/convolution.hpp"
#include "genfourier/errors.hpp"
#include "oracles.hpp"

using namespace genfourier;

namespace {

TransformPlan plan_for(const Params& p, double U, double V, int points = 1536, int panels = 48) {
    return TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, points, panels),
                                 QuadratureGrid::gauss_legendre(p, V, points, panels));
}

double sup_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

}  // namespace

TEST_CASE("translate: delta case and translated-kernel identity") {
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        const double U = std::sqrt(28.0 / (0.5 * p.n)) + 0.2;
        const TransformPlan plan = plan_for(p, U, U);
        const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(0.5));
        // x0 = 0 reduces to the round trip
        CHECK(sup_diff(translate(plan, f, 0.0), f) <= 1e-5);
        // F(tau_{x0} f)(y) = B((-1)^n x0, y) F f (y) where |F f| > 1e-3
        const double x0 = 0.9;
        const GridFunction tf = translate(plan, f, x0);
        const GridFunction lhs = plan.forward(tf);
        const GridFunction Ff = plan.forward(f);
        double worst = 0.0;
        const double xr = (p.n % 2 == 0) ? x0 : -x0;
        for (std::size_t j = 0; j < lhs.values.size(); ++j) {
            if (std::abs(Ff.values[j]) <= 1e-3) continue;
            const Complex want = kernel(p, xr, plan.target_grid()->x()[j]) * Ff.values[j];
            worst = std::max(worst, std::abs(lhs.values[j] / Ff.values[j] -
                                             want / Ff.values[j]));
        }
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("translate support radius (criterion 7 core, translation)") {
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        const double s = 0.5;
        const double R2u = std::sqrt(std::log(1e10) / (s * p.n));
        const double x0 = 1.0;
        const double Ru = std::pow(std::fabs(x0), 1.0 / p.n) + R2u;
        const double U = 1.18 * Ru;
        const double V = std::min(58.0 / (p.n * U),
                                  std::sqrt(4.0 * s * std::log(1e8) / p.n));
        const TransformPlan plan = plan_for(p, U, V, 1984, 62);
        const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(s));
        // numerical support of f is indeed R2u at the 1e-10 floor
        CHECK(numerical_support_radius_u(f, 1e-10) <= R2u + 0.05);
        const GridFunction tf = translate(plan, f, x0);
        const auto& grid = *plan.source_grid();
        double outside = 0.0, total = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double mass = grid.weights()[i] * std::abs(tf.values[i]);
            total += mass;
            if (std::fabs(grid.u()[i]) > Ru) outside += mass;
        }
        CHECK(outside / total <= 1e-4);
    }
}

TEST_CASE("convolution support radius (criterion 7 core, convolution)") {
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        const double s1 = 8.0, s2 = 0.5;
        const double R1u = std::sqrt(std::log(1e10) / (s1 * p.n));
        const double R2u = std::sqrt(std::log(1e10) / (s2 * p.n));
        const double Ru = R1u + R2u;
        const double U = 1.2 * Ru;
        const double V = 58.0 / (p.n * U);
        const TransformPlan plan = plan_for(p, U, V, 1984, 62);
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
        CHECK(outside / total <= 1e-4);
    }
}

TEST_CASE("convolve: commutativity and the direct double-quadrature oracle") {
    const Params p = Params::create(1.0, 1);
    const TransformPlan plan = plan_for(p, 6.9, 6.9);
    const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(0.5));
    const GridFunction g = sample(plan.source_grid(), AtomSum::gaussian(1.0));
    const GridFunction fg = convolve(plan, f, g);
    const GridFunction gf = convolve(plan, g, f);
    CHECK(sup_diff(fg, gf) <= 1e-8);
    // direct evaluation at 5 sample points
    const auto& xs = plan.source_grid()->x();
    for (double x : {0.0, 0.4, -0.9, 1.6, 2.3}) {
        // nearest grid node as the comparison point
        std::size_t best = 0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (std::fabs(xs[i] - x) < std::fabs(xs[best] - x)) best = i;
        const Complex direct = convolve_direct_at(plan, f, g, xs[best]);
        CHECK(std::abs(direct - fg.values[best]) <= 1e-4);
    }
    // tight approximate delta: convolve(f, delta) ~ f * mass within 5%
    const AtomSum tight = AtomSum::gaussian(24.0);
    GridFunction d = sample(plan.source_grid(), tight);
    const double mass = integrate(d).real();
    const GridFunction fd = convolve(plan, f, d);
    double worst = 0.0;
    for (std::size_t i = 0; i < fd.values.size(); ++i)
        worst = std::max(worst, std::abs(fd.values[i] - mass * f.values[i]));
    CHECK(worst <= 0.05 * mass);
}

TEST_CASE("young_check: finiteness, stability, domain errors") {
    const Params p = Params::create(1.0, 1);
    const TransformPlan plan = plan_for(p, 6.9, 6.9, 1536, 48);
    const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(0.5));
    const GridFunction g = sample(plan.source_grid(), AtomSum::gaussian(1.0));
    const double r111 = young_check(plan, f, g, 1.0, 1.0, 1.0);
    CHECK(std::isfinite(r111));
    CHECK(r111 > 0.0);
    const TransformPlan plan2 = plan_for(p, 6.9, 6.9, 1984, 62);
    const GridFunction f2 = sample(plan2.source_grid(), AtomSum::gaussian(0.5));
    const GridFunction g2 = sample(plan2.source_grid(), AtomSum::gaussian(1.0));
    const double r111b = young_check(plan2, f2, g2, 1.0, 1.0, 1.0);
    CHECK(std::fabs(r111 - r111b) <= 1e-3 * r111);
    CHECK(std::isfinite(young_check(plan, f, g, 2.0, 1.0, 2.0)));
    CHECK_THROWS_AS(young_check(plan, f, g, 2.0, 2.0, 2.0), std::domain_error);
    const GridFunction zero = sample(plan.source_grid(), AtomSum::zero());
    CHECK_THROWS_AS(young_check(plan, zero, g, 1.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("translation norm ratios: finite and refinement-stable") {
    const Params p = Params::create(1.0, 1);
    const TransformPlan coarse = plan_for(p, 6.9, 6.9, 1536, 48);
    const TransformPlan fine = plan_for(p, 6.9, 6.9, 1984, 62);
    for (double x0 : {0.5, 1.5}) {
        double ratios[2];
        int idx = 0;
        for (const TransformPlan* plan : {&coarse, &fine}) {
            const GridFunction f = sample(plan->source_grid(), AtomSum::gaussian(0.5));
            const GridFunction tf = translate(*plan, f, x0);
            ratios[idx++] = lp_norm(tf, 2.0) / lp_norm(f, 2.0);
        }
        CHECK(std::isfinite(ratios[0]));
        CHECK(std::fabs(ratios[0] - ratios[1]) <= 1e-3 * ratios[0]);
    }
}

TEST_CASE("dilate: identity at r=1, unit mass, sup scaling") {
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        const ApproxIdentity phi = bump_identity(p, 1.0);
        const auto grid = QuadratureGrid::gauss_legendre(p, 1.0, 1024, 64);
        const GridFunction base = dilate(phi, 1.0, p, grid);
        for (std::size_t i = 0; i < grid->size(); ++i)
            CHECK(std::abs(base.values[i] - Complex(phi.base(grid->x()[i]), 0.0)) == 0.0);
        CHECK(std::fabs(integrate(base).real() - 1.0) <= 1e-6);
        for (double r : {0.5, 0.25}) {
            // adapted grid covering the shrunken support exactly
            const auto gr = QuadratureGrid::gauss_legendre(
                p, std::pow(r, 1.0 / p.n), 1024, 64);
            const GridFunction phir = dilate(phi, r, p, gr);
            CHECK(std::fabs(integrate(phir).real() - 1.0) <= 1e-6);
            // sup scaling law: max phi_r = r^{-(2k+2/n-1)} max phi at matching nodes
            // (node u' = r^{1/n} u maps x' = r x, so values align pairwise)
            double worst = 0.0;
            for (std::size_t i = 0; i < gr->size(); ++i) {
                const double want =
                    std::pow(r, -(p.lp_shift - 1.0)) * phi.base(gr->x()[i] / r);
                worst = std::max(worst,
                                 std::fabs(phir.values[i].real() - want) /
                                     std::max(1.0, std::fabs(want)));
            }
            CHECK(worst <= 1e-6);
            CHECK(lp_norm(phir, kInfinity) >
                  0.9 * std::pow(r, -(p.lp_shift - 1.0)) * lp_norm(base, kInfinity));
        }
        CHECK_THROWS_AS(dilate(phi, 0.0, p, grid), std::domain_error);
    }
}

TEST_CASE("approximate identity convergence (criterion 8 core)") {
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2)}) {
        const double U = p.n == 1 ? 6.5 : 4.6;
        const double V = 58.0 / (p.n * U);
        const TransformPlan plan = plan_for(p, U, V, 1984, 62);
        const ApproxIdentity phi = bump_identity(p, 1.0);
        const GridFunction fg = sample(plan.source_grid(), AtomSum::gaussian(0.5));
        const GridFunction fb = sample(plan.source_grid(), [&](double x) {
            const double u = std::pow(std::fabs(x), 1.0 / p.n);
            const double t = u / 3.0;
            return Complex(t < 1.0 ? std::exp(-1.0 / (1.0 - t * t)) : 0.0, 0.0);
        });
        for (const GridFunction* f : {&fg, &fb}) {
            for (double pn : {1.0, 2.0}) {
                const auto errs = approx_identity_convergence(plan, *f, phi, pn);
                REQUIRE(errs.size() == 4);
                for (std::size_t i = 0; i + 1 < errs.size(); ++i) CHECK(errs[i + 1] < errs[i]);
                CHECK(errs.back() <= 0.05 * lp_norm(*f, pn));
            }
        }
        // constant schedule gives equal entries
        ApproxIdentity flat = phi;
        flat.r_schedule = {1.0, 1.0};
        const auto eq = approx_identity_convergence(plan, fg, flat, 1.0);
        CHECK(eq[0] == eq[1]);
    }
}

TEST_CASE("t_operator: monomial value, inverse identity, zero") {
    const Params p = Params::create(1.0, 1);
    // T applied to f == 1 gives 1/(2k + 2/n) = 1/4 (grid path, constant samples)
    const auto grid = QuadratureGrid::gauss_legendre(p, 3.0, 512, 32);
    const GridFunction one(grid, std::vector<Complex>(grid->size(), Complex(1.0, 0.0)));
    const GridFunction t1 = t_operator(one);
    for (std::size_t i = 0; i < t1.values.size(); ++i)
        CHECK(std::abs(t1.values[i] - Complex(0.25, 0.0)) <= 1e-9);
    // T((x d/dx + (2k+2/n)) f) = f on atoms
    for (const auto& pp : {Params::create(1.0, 1), Params::create(0.8, 2), Params::create(1.0, 3)}) {
        const AtomSum f = AtomSum::gaussian(0.5);
        const AtomSum rhs = apply_euler(f, pp) + f * Complex(pp.lp_shift, 0.0);
        for (double x : {0.3, -0.8, 1.2, 2.0}) {
            const Complex got = t_operator_at(rhs, pp, x);
            CHECK(std::abs(got - evaluate(f, pp, x)) <= 1e-8);
        }
    }
    CHECK(t_operator_at(AtomSum::zero(), p, 1.0) == Complex(0.0, 0.0));
}

TEST_CASE("gm_inequality: equality at m=0, strict growth, suite scan (criterion 9 core)") {
    const Params p1 = Params::create(1.0, 1);
    const auto grid1 = QuadratureGrid::gauss_legendre(p1, 9.0, 1536, 48);
    const auto [nf0, ng0] = gm_inequality(AtomSum::gaussian(0.5), 0, 2.0, p1, grid1);
    CHECK(nf0 == ng0);
    const auto [nf1, ng1] = gm_inequality(AtomSum::gaussian(0.5), 1, 2.0, p1, grid1);
    CHECK(nf1 < ng1);
    for (const auto& p : {Params::create(1.0, 1), Params::create(0.8, 2), Params::create(1.0, 3)}) {
        const auto grid = QuadratureGrid::gauss_legendre(p, 9.0, 1536, 48);
        for (const AtomSum& f :
             {AtomSum::gaussian(0.5), AtomSum::odd_gaussian(1.0), apply_mult(AtomSum::gaussian(1.0), p)}) {
            for (int m = 0; m <= 4; ++m)
                for (double pn : {1.0, 2.0}) {
                    const auto [nf, ng] = gm_inequality(f, m, pn, p, grid);
                    CHECK(nf <= ng + 1e-9);
                }
        }
    }
}
