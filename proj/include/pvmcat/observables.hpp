#pragma once

#include <string>
#include <vector>

#include "pvmcat/postselect.hpp"
#include "pvmcat/states.hpp"

namespace pvmcat {

// The four moments the ASS witness is built from.
struct MomentSet {
    Complex a2;      // <a^2>
    Complex a4;      // <a^4>
    double adag2a2;  // <adag^2 a^2>, nonnegative
    double n;        // <N>, nonnegative
};

// Shift-structured matrices for the moment operators; build once per dimension.
struct MomentOperators {
    Operator a2;
    Operator a4;
    Operator adag2a2;
    Operator n;

    static MomentOperators build(int dim);
};

// All four moments by direct matrix expectation (the ground-truth route).
MomentSet moments_oracle(const FockVector& state);
MomentSet moments_oracle(const FockVector& state, const MomentOperators& ops);

// R = (1/2) Re<a^4> + (1/2) <adag^2 a^2> - (Re<a^2>)^2. Negative R witnesses
// amplitude-squared squeezing of the Y1 component.
double ass_witness_R(const MomentSet& m);

// Variance of Y1 = (adag^2 + a^2)/2 or Y2 = i(adag^2 - a^2)/2 (component 1 or 2),
// by direct operator construction in the frame where A = a.
double y_variance(const FockVector& state, int component);

// (Delta Y1 * Delta Y2, <N + 1/2>); the first must dominate the second.
std::pair<double, double> uncertainty_product(const FockVector& state);

// The three moments the closed forms provide.
struct AnalyticMoments {
    Complex a2;
    Complex a4;
    Complex adag2a2;
};

// The closed-form moments evaluated exactly as printed (helper functions H, K, G
// with the kappa^2 K^2 / 4 prefactors). Cross-validated against the oracle by the
// validation layer; known transcription slips land in the errata registry.
AnalyticMoments moments_analytic(const CatParams& cat, const MeasurementParams& meas);

enum class ScanAxis { AlphaAbs, Gamma, Phi, Omega, Theta, Delta };

const char* scan_axis_name(ScanAxis axis);

struct ScanPoint {
    double value = 0.0;  // the scanned parameter value
    bool ok = false;
    double R = 0.0;
    double p_s = 0.0;
    std::string error;  // nonempty when ok == false
};

// Oracle-route R along one parameter axis. Each point is recomputed at 2*dim and
// must agree to tol.convergence; per-point failures are reported inline and the
// scan continues. Results are ordered like `values` regardless of scheduling.
std::vector<ScanPoint> R_scan(const CatParams& cat_base, const MeasurementParams& meas_base,
                              ScanAxis axis, const std::vector<double>& values, int dim,
                              const Tolerances& tol = {});

}  // namespace pvmcat
