#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pvmcat/validate.hpp"
#include "pvmcat/wigner.hpp"

namespace pvmcat {

// Exit codes shared by the commands and the CLI front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidParams = 1;
inline constexpr int kExitNumericFailure = 2;
inline constexpr int kExitValidationFailure = 3;

struct ScanConfig {
    CatParams cat;
    MeasurementParams meas{std::numbers::pi / 2.0, 7.0 * std::numbers::pi / 9.0, 2.0};
    int dim = 64;
    Tolerances tol;
    ScanAxis axis = ScanAxis::AlphaAbs;
    double min = 0.0;
    double max = 5.0;
    double step = 0.025;
    // one scan series per entry: omega values for scan-r, phi values for scan-gamma
    std::vector<double> series;
};

std::vector<double> scan_values(const ScanConfig& config);

// R scan over |alpha| (or another axis) with one series per omega. CSV rows carry
// the literal header `axis_name,omega,theta,phi,delta,gamma,alpha_abs,R,P_s`;
// failed points leave the R cell empty. Returns kExitOk or kExitNumericFailure.
int cmd_scan_r(const ScanConfig& config, std::ostream& out);

// R scan over Gamma with one series per phi (weak-value phase).
int cmd_scan_gamma(const ScanConfig& config, std::ostream& out);

struct WignerCmdConfig {
    CatParams cat;
    MeasurementParams meas{std::numbers::pi / 2.0, 7.0 * std::numbers::pi / 9.0, 2.0};
    int dim = 64;
    Tolerances tol;
    double x_min = -4.0, x_max = 4.0, p_min = -4.0, p_max = 4.0;
    int nx = 201, np = 201;
    double boundary_tol = 1e-3;  // coverage threshold for the integral metrics
};

// Parity-route grid of the post-measurement pointer, written in the documented
// plain-text format; a one-line metric summary goes to `summary`.
int cmd_wigner(const WignerCmdConfig& config, std::ostream& grid_out, std::ostream& summary);

// The invariant suite; report lines to `report`, errata records to `errata_out`.
int cmd_validate(const ValidateConfig& config, std::ostream& report, std::ostream& errata_out);

}  // namespace pvmcat
