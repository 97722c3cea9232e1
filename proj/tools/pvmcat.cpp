#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <numbers>

#include "pvmcat/commands.hpp"
#include "pvmcat/version.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct CommonFlags {
    pvmcat::CatParams cat{1.0, 0.0, 0.0};
    pvmcat::MeasurementParams meas{kPi / 2.0, 7.0 * kPi / 9.0, 2.0};
    int dim = 64;
    pvmcat::Tolerances tol;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--alpha", f.cat.alpha_abs, "Cat amplitude modulus |alpha|")
        ->capture_default_str();
    cmd->add_option("--delta", f.cat.delta, "arg(alpha) in radians")->capture_default_str();
    cmd->add_option("--omega", f.cat.omega, "Cat superposition phase in [0, 2pi]")
        ->capture_default_str();
    cmd->add_option("--theta", f.meas.theta, "Pre-selection polar angle in [0, pi]")
        ->capture_default_str();
    cmd->add_option("--phi", f.meas.phi, "Pre-selection azimuth in [0, 2pi)")
        ->capture_default_str();
    cmd->add_option("--gamma", f.meas.gamma, "Coupling strength Gamma = g/sigma")
        ->capture_default_str();
    cmd->add_option("--dim", f.dim, "Fock-space truncation dimension")->capture_default_str();
    cmd->add_option("--tol-normalization", f.tol.normalization, "Normalization tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-truncation", f.tol.truncation_tail, "Accepted truncation tail mass")
        ->capture_default_str();
    cmd->add_option("--tol-unitarity", f.tol.unitarity, "Guarded-block unitarity tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-route", f.tol.route_match, "Analytic-vs-oracle tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-convergence", f.tol.convergence, "dim vs 2*dim tolerance")
        ->capture_default_str();
    cmd->add_option("--tol-wigner", f.tol.wigner_match, "Wigner route tolerance")
        ->capture_default_str();
}

std::ofstream open_or_die(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw pvmcat::InvalidParameterError("cannot open output file: " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Postselected von Neumann measurement of Schrodinger-cat pointers: "
                 "amplitude-squared squeezing scans and Wigner diagnostics"};
    app.set_version_flag("--version", std::string("pvmcat ") + pvmcat::kVersion);
    app.require_subcommand(1);

    const std::map<std::string, pvmcat::ScanAxis> axis_names{
        {"alpha_abs", pvmcat::ScanAxis::AlphaAbs}, {"gamma", pvmcat::ScanAxis::Gamma},
        {"phi", pvmcat::ScanAxis::Phi},            {"omega", pvmcat::ScanAxis::Omega},
        {"theta", pvmcat::ScanAxis::Theta},        {"delta", pvmcat::ScanAxis::Delta}};

    // scan-r
    CommonFlags fr;
    auto* scan_r = app.add_subcommand("scan-r", "ASS witness R along a parameter axis, "
                                                "one series per omega (CSV)");
    add_common(scan_r, fr);
    pvmcat::ScanAxis r_axis = pvmcat::ScanAxis::AlphaAbs;
    double r_min = 0.0, r_max = 5.0, r_step = 0.025;
    std::vector<double> omegas{0.0, kPi / 2.0, kPi};
    std::string r_out = "scan_r.csv";
    scan_r->add_option("--axis", r_axis, "Scan axis")
        ->transform(CLI::CheckedTransformer(axis_names, CLI::ignore_case))
        ->capture_default_str();
    scan_r->add_option("--min", r_min, "Axis start")->capture_default_str();
    scan_r->add_option("--max", r_max, "Axis end")->capture_default_str();
    scan_r->add_option("--step", r_step, "Axis step")->capture_default_str();
    scan_r->add_option("--omegas", omegas, "Comma-separated omega series")
        ->delimiter(',')
        ->capture_default_str();
    scan_r->add_option("--out", r_out, "Output CSV path")->capture_default_str();

    // scan-gamma
    CommonFlags fg;
    fg.cat.alpha_abs = 1.0;
    auto* scan_g = app.add_subcommand("scan-gamma", "ASS witness R along Gamma, one series "
                                                    "per phi (CSV)");
    add_common(scan_g, fg);
    double g_min = 0.0, g_max = 4.0, g_step = 0.05;
    std::vector<double> phis{kPi / 3.0, 2.0 * kPi / 3.0, 7.0 * kPi / 9.0};
    std::string g_out = "scan_gamma.csv";
    scan_g->add_option("--min", g_min, "Gamma start")->capture_default_str();
    scan_g->add_option("--max", g_max, "Gamma end")->capture_default_str();
    scan_g->add_option("--step", g_step, "Gamma step")->capture_default_str();
    scan_g->add_option("--phis", phis, "Comma-separated phi series")
        ->delimiter(',')
        ->capture_default_str();
    scan_g->add_option("--out", g_out, "Output CSV path")->capture_default_str();

    // wigner
    CommonFlags fw;
    auto* wig = app.add_subcommand("wigner", "Wigner grid of the post-measurement pointer");
    add_common(wig, fw);
    std::vector<double> grid_spec{-4.0, 4.0, -4.0, 4.0, 201, 201};
    std::string w_out = "wigner.txt";
    double boundary_tol = 1e-3;
    wig->add_option("--grid", grid_spec, "x0,x1,p0,p1,nx,np")
        ->delimiter(',')
        ->expected(6)
        ->capture_default_str();
    wig->add_option("--out", w_out, "Output grid path")->capture_default_str();
    wig->add_option("--boundary-tol", boundary_tol, "Coverage threshold for metrics")
        ->capture_default_str();

    // validate
    CommonFlags fv;
    auto* val = app.add_subcommand("validate", "Run the invariant suite and write the "
                                               "errata registry");
    add_common(val, fv);
    std::string errata_path = "errata.txt";
    unsigned seed = 20240811;
    val->add_option("--errata", errata_path, "Errata registry path")->capture_default_str();
    val->add_option("--seed", seed, "Seed for randomized property draws")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan_r->parsed()) {
            pvmcat::ScanConfig cfg{fr.cat, fr.meas, fr.dim, fr.tol, r_axis,
                                   r_min,  r_max,   r_step, omegas};
            auto out = open_or_die(r_out);
            const int code = pvmcat::cmd_scan_r(cfg, out);
            std::cout << "wrote " << r_out << '\n';
            return code;
        }
        if (scan_g->parsed()) {
            pvmcat::ScanConfig cfg{fg.cat,  fg.meas, fg.dim, fg.tol, pvmcat::ScanAxis::Gamma,
                                   g_min,   g_max,   g_step, phis};
            auto out = open_or_die(g_out);
            const int code = pvmcat::cmd_scan_gamma(cfg, out);
            std::cout << "wrote " << g_out << '\n';
            return code;
        }
        if (wig->parsed()) {
            pvmcat::WignerCmdConfig cfg;
            cfg.cat = fw.cat;
            cfg.meas = fw.meas;
            cfg.dim = fw.dim;
            cfg.tol = fw.tol;
            cfg.x_min = grid_spec[0];
            cfg.x_max = grid_spec[1];
            cfg.p_min = grid_spec[2];
            cfg.p_max = grid_spec[3];
            cfg.nx = static_cast<int>(grid_spec[4]);
            cfg.np = static_cast<int>(grid_spec[5]);
            cfg.boundary_tol = boundary_tol;
            auto out = open_or_die(w_out);
            const int code = pvmcat::cmd_wigner(cfg, out, std::cout);
            if (code == pvmcat::kExitOk) std::cout << "wrote " << w_out << '\n';
            return code;
        }
        if (val->parsed()) {
            pvmcat::ValidateConfig cfg{fv.dim, fv.tol, seed};
            auto errata_out = open_or_die(errata_path);
            const int code = pvmcat::cmd_validate(cfg, std::cout, errata_out);
            std::cout << "errata registry written to " << errata_path << '\n';
            return code;
        }
    } catch (const pvmcat::InvalidParameterError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return pvmcat::kExitInvalidParams;
    } catch (const pvmcat::InvalidDimensionError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return pvmcat::kExitInvalidParams;
    } catch (const pvmcat::OrthogonalSelectionError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return pvmcat::kExitInvalidParams;
    } catch (const pvmcat::NullStateError& e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return pvmcat::kExitInvalidParams;
    } catch (const pvmcat::Error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return pvmcat::kExitNumericFailure;
    }
    return pvmcat::kExitOk;
}
