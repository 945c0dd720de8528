// Command line front end: kernel tables, transform runs, convolution and
// density experiments, seminorm reports, and the verification suites.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "genfourier/config.hpp"
#include "genfourier/convolution.hpp"
#include "genfourier/errors.hpp"
#include "genfourier/kernel.hpp"
#include "genfourier/report.hpp"
#include "genfourier/schwartz.hpp"
#include "genfourier/transform.hpp"
#include "genfourier/verification.hpp"

using namespace genfourier;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << body;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CommonFlags {
    std::string config_path;
    double k = 1.0;
    int n = 1;
    bool k_set = false, n_set = false;
    GridSpec grid;
    bool umax_set = false, points_set = false, panels_set = false;
    std::vector<std::string> tols;
    std::string output;
    std::string format;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "JSON config file; flags override it");
        app->add_option("--k", k, "multiplicity parameter k")->each([this](std::string) {
            k_set = true;
        });
        app->add_option("--n", n, "deformation denominator n (positive integer)")
            ->each([this](std::string) { n_set = true; });
        app->add_option("--u-max", grid.u_max, "grid truncation radius in the deformed variable")
            ->each([this](std::string) { umax_set = true; });
        app->add_option("--grid-points", grid.points, "total quadrature nodes (even, >= 64)")
            ->each([this](std::string) { points_set = true; });
        app->add_option("--panels", grid.panels, "Gauss-Legendre panels per half-axis")
            ->each([this](std::string) { panels_set = true; });
        app->add_option("--tol", tols, "tolerance override, name=value (prefix match)");
        app->add_option("--output", output, "output path (default stdout)");
        app->add_option("--format", format, "report format: json or csv");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        if (!config_path.empty()) cfg = parse_config(read_file(config_path));
        if (k_set) cfg.k = k;
        if (n_set) cfg.n = n;
        if (umax_set) cfg.grid.u_max = grid.u_max;
        if (points_set) cfg.grid.points = grid.points;
        if (panels_set) cfg.grid.panels = grid.panels;
        if (!output.empty()) cfg.output = output;
        if (!format.empty()) {
            if (format != "json" && format != "csv")
                throw std::invalid_argument("--format must be json or csv");
            cfg.format = format;
        }
        for (const auto& t : tols) {
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--tol expects name=value, got '" + t + "'");
            cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        }
        return cfg;
    }
};

int cmd_kernel(const CommonFlags& flags) {
    const RunConfig cfg = flags.resolve();
    const Params p = cfg.validated_params();
    // lattice in the deformed variable, kernel arguments inside the domain
    const double umax = std::min(cfg.grid.u_max, std::sqrt(40.0 / p.n));
    const int nside = 41;
    std::ostringstream csv;
    csv << "x,y,re,im\n";
    for (int i = 0; i < nside; ++i) {
        const double u = -umax + 2.0 * umax * i / (nside - 1);
        const double x = std::copysign(std::pow(std::fabs(u), p.n), u);
        for (int j = 0; j < nside; ++j) {
            const double v = -umax + 2.0 * umax * j / (nside - 1);
            const double y = std::copysign(std::pow(std::fabs(v), p.n), v);
            const Complex b = kernel(p, x, y);
            csv << fmt17(x) << "," << fmt17(y) << "," << fmt17(b.real()) << ","
                << fmt17(b.imag()) << "\n";
        }
    }
    write_text(cfg.output, csv.str());
    return 0;
}

int cmd_transform(const CommonFlags& flags, double s, const std::string& atoms_path) {
    const RunConfig cfg = flags.resolve();
    const Params p = cfg.validated_params();
    AtomSum f = atoms_path.empty() ? AtomSum::gaussian(s) : atom_sum_from_json(read_file(atoms_path));
    const auto src = QuadratureGrid::gauss_legendre(
        p, std::sqrt(18.0 / (0.4 * p.n)) + 0.5, cfg.grid.points, cfg.grid.panels);
    const auto tgt = QuadratureGrid::uniform_midpoint(p, std::pow(3.0, 1.0 / p.n), 200);
    const TransformPlan plan = TransformPlan::create(src, tgt);
    const GridFunction got = plan.forward(f);

    std::ostringstream csv;
    csv << "x,re,im\n";
    for (std::size_t j = 0; j < got.values.size(); ++j)
        csv << fmt17(tgt->x()[j]) << "," << fmt17(got.values[j].real()) << ","
            << fmt17(got.values[j].imag()) << "\n";
    write_text(cfg.output, csv.str());

    // closed-form deviation is known for the pure Gaussian input
    nlohmann::ordered_json summary;
    if (atoms_path.empty()) {
        const GridFunction want = sample(tgt, gaussian_closed_form(p, s));
        double dev = 0.0;
        for (std::size_t j = 0; j < got.values.size(); ++j)
            dev = std::max(dev, std::abs(got.values[j] - want.values[j]));
        summary["max_abs_error_vs_closed_form"] = dev;
    } else {
        summary["max_abs_error_vs_closed_form"] = nullptr;
    }
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_convolve(const CommonFlags& flags, double s1, double s2) {
    const RunConfig cfg = flags.resolve();
    const Params p = cfg.validated_params();
    const double U = std::sqrt(28.0 / (std::min(s1, s2) * p.n)) + 0.2;
    const double V = std::min(58.0 / (p.n * U), std::sqrt(4.0 * std::max(s1, s2) * 28.0 / p.n));
    const TransformPlan plan =
        TransformPlan::create(QuadratureGrid::gauss_legendre(p, U, 1536, 48),
                              QuadratureGrid::gauss_legendre(p, V, 1536, 48));
    const GridFunction f = sample(plan.source_grid(), AtomSum::gaussian(s1));
    const GridFunction g = sample(plan.source_grid(), AtomSum::gaussian(s2));
    const GridFunction conv = convolve(plan, f, g);
    std::ostringstream csv;
    csv << "u,x,re,im\n";
    const auto& grid = *plan.source_grid();
    for (std::size_t i = 0; i < conv.values.size(); ++i)
        csv << fmt17(grid.u()[i]) << "," << fmt17(grid.x()[i]) << ","
            << fmt17(conv.values[i].real()) << "," << fmt17(conv.values[i].imag()) << "\n";
    write_text(cfg.output, csv.str());
    return 0;
}

int cmd_density(const CommonFlags& flags, double pnorm) {
    const RunConfig cfg = flags.resolve();
    RunConfig one = cfg;
    one.suites = {"density"};
    const auto reports = run_suites(one);
    (void)pnorm;
    write_text(cfg.output, reports_to_json(reports));
    return all_passed(reports) ? 0 : 2;
}

int cmd_report(const CommonFlags& flags, int alpha_max, int beta_max, int ell_max,
               const std::string& atoms_path) {
    const RunConfig cfg = flags.resolve();
    const Params p = cfg.validated_params();
    const AtomSum f =
        atoms_path.empty() ? AtomSum::gaussian(0.5) : atom_sum_from_json(read_file(atoms_path));
    const SeminormReport rep =
        membership_report(f, p, MembershipRanges{alpha_max, beta_max, ell_max});
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "alpha,beta,ell,value,method\n";
        for (const auto& e : rep.entries)
            csv << e.alpha << "," << e.beta << "," << e.ell << "," << fmt17(e.value) << ","
                << e.method << "\n";
        write_text(cfg.output, csv.str());
    } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : rep.entries) {
            arr.push_back({{"alpha", e.alpha},
                           {"beta", e.beta},
                           {"ell", e.ell},
                           {"value", e.value},
                           {"method", e.method}});
        }
        write_text(cfg.output, arr.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const CommonFlags& flags, const std::vector<std::string>& suites) {
    RunConfig cfg = flags.resolve();
    if (!suites.empty()) cfg.suites = suites;
    for (const auto& s : cfg.suites) {
        bool known = false;
        for (const auto& k : kAllSuites) known = known || k == s;
        if (!known) throw std::invalid_argument("unknown suite '" + s + "'");
    }
    const auto reports = run_suites(cfg);
    if (cfg.format == "csv") {
        std::ostringstream csv;
        csv << "name,status,residual,tolerance,details\n";
        for (const auto& r : reports)
            csv << r.name << "," << r.status << "," << fmt17(r.residual) << ","
                << fmt17(r.tolerance) << ",\"" << r.details << "\"\n";
        write_text(cfg.output, csv.str());
    } else {
        write_text(cfg.output, reports_to_json(reports));
    }
    int failed = 0;
    for (const auto& r : reports)
        if (r.status == "fail") ++failed;
    std::cerr << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-dimensional (k, 2/n)-generalized Fourier transform toolkit"};
    app.require_subcommand(1);

    CommonFlags kernel_flags, transform_flags, convolve_flags, density_flags, report_flags,
        verify_flags;

    auto* c_kernel = app.add_subcommand("kernel", "emit kernel values as CSV (x, y, re, im)");
    kernel_flags.attach(c_kernel);

    auto* c_transform =
        app.add_subcommand("transform", "forward transform of a Gaussian atom; CSV (x, re, im)");
    transform_flags.attach(c_transform);
    double s = 0.5;
    std::string transform_atoms;
    c_transform->add_option("--s", s, "Gaussian rate parameter");
    c_transform->add_option("--atoms", transform_atoms, "JSON atom-sum file to transform instead");

    auto* c_convolve = app.add_subcommand("convolve", "convolve two Gaussian atoms; CSV output");
    convolve_flags.attach(c_convolve);
    double s1 = 0.5, s2 = 1.0;
    c_convolve->add_option("--s1", s1, "rate of the first Gaussian");
    c_convolve->add_option("--s2", s2, "rate of the second Gaussian");

    auto* c_density =
        app.add_subcommand("density-experiment", "approximate-identity convergence report (JSON)");
    density_flags.attach(c_density);
    double pnorm = 1.0;
    c_density->add_option("--p", pnorm, "Lebesgue exponent");

    auto* c_report = app.add_subcommand("report", "seminorm membership table (JSON or CSV)");
    report_flags.attach(c_report);
    int alpha_max = 3, beta_max = 3, ell_max = 3;
    std::string report_atoms;
    c_report->add_option("--alpha", alpha_max, "max alpha");
    c_report->add_option("--beta", beta_max, "max beta");
    c_report->add_option("--ell", ell_max, "max ell");
    c_report->add_option("--atoms", report_atoms, "JSON atom-sum file (default: Gaussian s=1/2)");

    auto* c_verify = app.add_subcommand("verify", "run verification suites and write the report");
    verify_flags.attach(c_verify);
    std::vector<std::string> suites;
    c_verify->add_option("--suite", suites, "suite name (repeatable); default: all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (c_kernel->parsed()) return cmd_kernel(kernel_flags);
        if (c_transform->parsed()) return cmd_transform(transform_flags, s, transform_atoms);
        if (c_convolve->parsed()) return cmd_convolve(convolve_flags, s1, s2);
        if (c_density->parsed()) return cmd_density(density_flags, pnorm);
        if (c_report->parsed())
            return cmd_report(report_flags, alpha_max, beta_max, ell_max, report_atoms);
        if (c_verify->parsed()) return cmd_verify(verify_flags, suites);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
