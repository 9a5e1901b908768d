#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "slitlab/slitlab.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 1;
constexpr int exit_io = 2;
constexpr int exit_verify = 3;

slitlab::Figure figure_from_number(int n) {
    switch (n) {
        case 2: return slitlab::Figure::fig2;
        case 3: return slitlab::Figure::fig3;
        case 4: return slitlab::Figure::fig4;
        case 5: return slitlab::Figure::fig5;
    }
    throw slitlab::SemanticError("figure must be 2, 3, 4 or 5");
}

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

int run_simulate(const std::string& config_path, const std::string& output_path) {
    const slitlab::RunConfig cfg = slitlab::load_config(config_path);
    const slitlab::Distribution dist = slitlab::angular_distribution(
        cfg.system, cfg.samples, cfg.jacobian, cfg.paper_literal);
    const std::string csv = slitlab::write_distribution_csv(dist);
    if (output_path.empty()) {
        std::cout << csv;
        if (!std::cout) throw slitlab::IoError("failed writing to stdout");
    } else {
        slitlab::atomic_write_file(output_path, csv);
    }
    return exit_ok;
}

int run_reproduce(int figure, const std::string& output_base) {
    const slitlab::SlitSystem sys = slitlab::canonical_system(figure_from_number(figure));
    const slitlab::Distribution dist = slitlab::angular_distribution(sys, 2001);
    const std::string base =
        output_base.empty() ? "fig" + std::to_string(figure) : output_base;
    slitlab::atomic_write_file(base + ".csv", slitlab::write_distribution_csv(dist));
    slitlab::atomic_write_file(base + ".svg", slitlab::render_distribution_svg(dist));
    std::cout << "wrote " << base << ".csv and " << base << ".svg\n";
    return exit_ok;
}

int run_verify(const std::string& config_path, double tol, bool corrupt) {
    const slitlab::RunConfig cfg = slitlab::load_config(config_path);
    const slitlab::SlitSystem& sys = cfg.system;

    std::vector<double> grid(2001);
    const double k_lim = 8.0 * std::numbers::pi;
    for (int i = 0; i < 2001; ++i) {
        grid[i] = (i - 1000) * (k_lim / 1000.0);
    }
    const slitlab::VerificationReport rep =
        slitlab::compare(sys, grid, tol, corrupt ? 1e-6 : 0.0);

    std::cout << "system: " << sys.describe() << "\n";
    std::cout << "oracle comparison: n_points=" << rep.n_points
              << " max_abs_err=" << slitlab::format_double(rep.max_abs_err)
              << " max_rel_err=" << slitlab::format_double(rep.max_rel_err)
              << " worst_k=" << slitlab::format_double(rep.worst_k)
              << " tolerance=" << slitlab::format_double(rep.tolerance)
              << " -> " << (rep.pass ? "pass" : "FAIL") << "\n";

    bool norm_ok = true;
    if (sys.kind() == slitlab::SlitKind::Finite) {
        const slitlab::NormalizationCheck norm =
            slitlab::normalization_integral(sys, 2000.0, 1000000);
        norm_ok = norm.value <= 1.0 + 1e-6 && norm.value + norm.tail_bound >= 1.0 - 1e-6;
        std::cout << "normalization: value=" << slitlab::format_double(norm.value)
                  << " tail_bound=" << slitlab::format_double(norm.tail_bound)
                  << " bracket=[" << slitlab::format_double(norm.value) << ", "
                  << slitlab::format_double(norm.value + norm.tail_bound) << "]"
                  << " -> " << (norm_ok ? "pass" : "FAIL") << "\n";
    } else {
        std::cout << "normalization: skipped (narrow-slit distribution is a relative density)\n";
    }

    const bool ok = rep.pass && norm_ok;
    std::cout << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? exit_ok : exit_verify;
}

int run_analyze(const std::string& config_path) {
    const slitlab::RunConfig cfg = slitlab::load_config(config_path);
    if (cfg.samples < 101) {
        throw slitlab::SemanticError("fringe analysis needs samples >= 101");
    }
    const slitlab::Distribution dist = slitlab::angular_distribution(
        cfg.system, cfg.samples, cfg.jacobian, cfg.paper_literal);
    const slitlab::FringeReport report = slitlab::find_fringes(dist, 1e-6);

    const slitlab::SlitSystem& sys = cfg.system;
    const bool finite = sys.kind() == slitlab::SlitKind::Finite;
    const double a = finite ? sys.slits().front().width : 0.0;
    const double d = sys.size() >= 2
                         ? sys.slits()[1].center - sys.slits()[0].center
                         : 0.0;

    std::cout << "system: " << sys.describe() << "\n";
    std::cout << "samples: " << cfg.samples << "\n";
    const auto print_extrema = [&](const char* name,
                                   const std::vector<slitlab::FringeExtremum>& list) {
        std::cout << name << " (" << list.size() << "):\n";
        for (const slitlab::FringeExtremum& e : list) {
            std::cout << "  theta=" << slitlab::format_double(e.theta)
                      << " sin_theta=" << slitlab::format_double(e.sin_theta)
                      << " P=" << slitlab::format_double(e.value);
            if (finite) {
                const slitlab::ReducedVariables rv =
                    slitlab::reduced_variables(e.theta, a, d, sys.wavelength());
                if (sys.size() >= 2) {
                    std::cout << " phi=" << slitlab::format_double(rv.phi);
                }
                std::cout << " alpha=" << slitlab::format_double(rv.alpha);
            }
            std::cout << "\n";
        }
    };
    print_extrema("maxima", report.maxima);
    print_extrema("minima", report.minima);
    std::cout << "visibility " << fixed6(report.visibility) << "\n";
    if (sys.size() == 2 && d > 0.0) {
        std::cout << "visible interference orders: "
                  << slitlab::visible_order_count(a, d, sys.wavelength(), 1e-6)
                  << "\n";
    }
    return exit_ok;
}

int run_fit(const std::string& csv_path, const std::string& kind_str) {
    const slitlab::CsvSamples samples = slitlab::load_distribution_csv(csv_path);
    const slitlab::FitKind kind = kind_str == "single"
                                      ? slitlab::FitKind::Single
                                      : slitlab::FitKind::DoubleFinite;
    const slitlab::FitResult fit =
        slitlab::fit_slit_parameters(samples.k, samples.p, kind);
    std::cout << "kind: " << kind_str << "\n";
    std::cout << "a = " << slitlab::format_double(fit.a) << "\n";
    if (kind == slitlab::FitKind::DoubleFinite) {
        std::cout << "d = " << slitlab::format_double(fit.d) << "\n";
    }
    std::cout << "residual = " << slitlab::format_double(fit.residual) << "\n";
    std::cout << "converged: " << (fit.converged ? "yes" : "no (NoConvergence)")
              << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slitlab - momentum-space distributions for slit systems"};
    app.require_subcommand(1);

    std::string config_path, output_path, csv_path, kind_str;
    int figure = 2;
    double tol = 1e-10;
    bool corrupt = false;

    CLI::App* simulate =
        app.add_subcommand("simulate", "write the angular distribution as CSV");
    simulate->add_option("-c,--config", config_path, "config file")->required();
    simulate->add_option("-o,--output", output_path,
                         "CSV path (stdout when omitted)");

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "emit CSV + SVG for a canonical figure");
    reproduce->add_option("--figure", figure, "figure number (2-5)")
        ->required()
        ->check(CLI::IsMember({2, 3, 4, 5}));
    reproduce->add_option("-o,--output", output_path,
                          "output basename (default fig<N>)");

    CLI::App* verify = app.add_subcommand(
        "verify", "closed form vs quadrature oracle + normalization");
    verify->add_option("-c,--config", config_path, "config file")->required();
    verify->add_option("--tol", tol, "comparison tolerance");
    verify->add_flag("--corrupt-check", corrupt)->group("");

    CLI::App* analyze =
        app.add_subcommand("analyze", "fringe report for a config");
    analyze->add_option("-c,--config", config_path, "config file")->required();

    CLI::App* fit = app.add_subcommand("fit", "recover slit parameters from a CSV");
    fit->add_option("csv", csv_path, "CSV produced by simulate/reproduce")
        ->required();
    fit->add_option("--kind", kind_str, "model family")
        ->required()
        ->check(CLI::IsMember({"single", "double_finite"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        if (simulate->parsed()) return run_simulate(config_path, output_path);
        if (reproduce->parsed()) return run_reproduce(figure, output_path);
        if (verify->parsed()) return run_verify(config_path, tol, corrupt);
        if (analyze->parsed()) return run_analyze(config_path);
        if (fit->parsed()) return run_fit(csv_path, kind_str);
    } catch (const slitlab::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return exit_io;
    } catch (const slitlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
    return exit_config;
}
