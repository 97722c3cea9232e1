#include "pvmcat/commands.hpp"

#include <cmath>
#include <sstream>

#include "pvmcat/version.hpp"

namespace pvmcat {

namespace {

std::string params_comment(const char* tool, const CatParams& cat, const MeasurementParams& meas,
                           int dim) {
    std::ostringstream os;
    os << "# pvmcat " << kVersion << ' ' << tool << " alpha_abs=" << format_real(cat.alpha_abs)
       << " delta=" << format_real(cat.delta) << " omega=" << format_real(cat.omega)
       << " theta=" << format_real(meas.theta) << " phi=" << format_real(meas.phi)
       << " gamma=" << format_real(meas.gamma) << " dim=" << dim;
    return os.str();
}

void write_scan_rows(std::ostream& out, const ScanConfig& config, double series_value,
                     bool series_is_omega, const std::vector<ScanPoint>& points, bool* any_failed) {
    CatParams cat = config.cat;
    MeasurementParams meas = config.meas;
    if (series_is_omega)
        cat.omega = series_value;
    else
        meas.phi = series_value;
    for (const ScanPoint& pt : points) {
        CatParams c = cat;
        MeasurementParams m = meas;
        switch (config.axis) {
            case ScanAxis::AlphaAbs: c.alpha_abs = pt.value; break;
            case ScanAxis::Gamma: m.gamma = pt.value; break;
            case ScanAxis::Phi: m.phi = pt.value; break;
            case ScanAxis::Omega: c.omega = pt.value; break;
            case ScanAxis::Theta: m.theta = pt.value; break;
            case ScanAxis::Delta: c.delta = pt.value; break;
        }
        out << format_real(pt.value) << ',' << format_real(c.omega) << ',' << format_real(m.theta)
            << ',' << format_real(m.phi) << ',' << format_real(c.delta) << ','
            << format_real(m.gamma) << ',' << format_real(c.alpha_abs) << ',';
        if (pt.ok)
            out << format_real(pt.R);
        else
            *any_failed = true;  // empty R cell marks the per-point failure
        out << ',' << format_real(pt.p_s) << '\n';
    }
}

int run_scan(const ScanConfig& config, bool series_is_omega, const char* tool, std::ostream& out) {
    const std::vector<double> values = scan_values(config);
    out << params_comment(tool, config.cat, config.meas, config.dim) << " axis="
        << scan_axis_name(config.axis) << " min=" << format_real(config.min)
        << " max=" << format_real(config.max) << " step=" << format_real(config.step)
        << (series_is_omega ? " omegas=" : " phis=");
    for (std::size_t i = 0; i < config.series.size(); ++i) {
        if (i) out << ';';
        out << format_real(config.series[i]);
    }
    out << '\n';
    out << "axis_name,omega,theta,phi,delta,gamma,alpha_abs,R,P_s\n";

    bool any_failed = false;
    for (double sv : config.series) {
        CatParams cat = config.cat;
        MeasurementParams meas = config.meas;
        if (series_is_omega)
            cat.omega = sv;
        else
            meas.phi = sv;
        const std::vector<ScanPoint> points =
            R_scan(cat, meas, config.axis, values, config.dim, config.tol);
        write_scan_rows(out, config, sv, series_is_omega, points, &any_failed);
    }
    return any_failed ? kExitNumericFailure : kExitOk;
}

}  // namespace

std::vector<double> scan_values(const ScanConfig& config) {
    if (config.step <= 0.0) throw InvalidParameterError("scan: step must be > 0");
    if (config.max < config.min) throw InvalidParameterError("scan: max must be >= min");
    const int n = static_cast<int>(std::floor((config.max - config.min) / config.step + 0.5)) + 1;
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = config.min + i * config.step;
    return values;
}

int cmd_scan_r(const ScanConfig& config, std::ostream& out) {
    return run_scan(config, /*series_is_omega=*/true, "scan-r", out);
}

int cmd_scan_gamma(const ScanConfig& config, std::ostream& out) {
    ScanConfig c = config;
    c.axis = ScanAxis::Gamma;
    return run_scan(c, /*series_is_omega=*/false, "scan-gamma", out);
}

int cmd_wigner(const WignerCmdConfig& config, std::ostream& grid_out, std::ostream& summary) {
    try {
        const FockVector pointer = cat_vector(config.dim, config.cat, config.tol);
        const FinalPointerState fin = final_pointer_state(pointer, config.meas, config.tol);
        const PhaseSpaceGrid grid = wigner_grid(fin.state, config.x_min, config.x_max,
                                                config.p_min, config.p_max, config.nx, config.np,
                                                config.tol);
        const double w_min = grid.values.minCoeff();
        const double w_max = grid.values.maxCoeff();
        const double integral = integral_check(grid, config.boundary_tol);
        const double negativity = negativity_volume(grid, config.boundary_tol);

        std::ostringstream metrics;
        metrics << "min=" << format_real(w_min) << " max=" << format_real(w_max)
                << " integral=" << format_real(integral)
                << " negativity_volume=" << format_real(negativity);
        std::ostringstream params;
        params << "alpha_abs=" << format_real(config.cat.alpha_abs)
               << " delta=" << format_real(config.cat.delta)
               << " omega=" << format_real(config.cat.omega)
               << " theta=" << format_real(config.meas.theta)
               << " phi=" << format_real(config.meas.phi)
               << " gamma=" << format_real(config.meas.gamma) << " dim=" << config.dim
               << " tool=pvmcat-" << kVersion;
        write_grid(grid_out, grid, params.str(), metrics.str());
        summary << metrics.str() << '\n';
        return kExitOk;
    } catch (const TruncationRiskError& e) {
        summary << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    } catch (const CoverageError& e) {
        summary << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    } catch (const QuadratureError& e) {
        summary << "error: " << e.what() << '\n';
        return kExitNumericFailure;
    }
}

int cmd_validate(const ValidateConfig& config, std::ostream& report, std::ostream& errata_out) {
    ErrataRegistry errata;
    const std::vector<CheckResult> results = run_validation(config, errata);
    const bool ok = report_validation(results, report);
    report << "errata records: " << errata.size() << '\n';
    errata.write(errata_out);
    return ok ? kExitOk : kExitValidationFailure;
}

}  // namespace pvmcat
