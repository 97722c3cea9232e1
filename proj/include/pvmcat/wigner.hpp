#pragma once

#include <span>
#include <string>
#include <vector>

#include "pvmcat/observables.hpp"

namespace pvmcat {

// Rectangular phase-space grid of Wigner values. Row i holds x_i = x_min + i dx,
// column j holds p_j = p_min + j dp, z = x + i p.
struct PhaseSpaceGrid {
    double x_min, x_max, p_min, p_max;
    int nx, np;
    Eigen::MatrixXd values;  // nx rows, np columns

    double dx() const { return (x_max - x_min) / (nx - 1); }
    double dp() const { return (p_max - p_min) / (np - 1); }
    double x_at(int i) const { return x_min + i * dx(); }
    double p_at(int j) const { return p_min + j * dp(); }
};

// W(z) = (2/pi) sum_n (-1)^n |<n|D(-z)|state>|^2 (displaced-parity route; the
// production path). The displaced state is evaluated in an internally enlarged
// space sized from the state's support and |z|, so the value does not depend on
// the state's declared truncation once the state itself is converged.
double wigner_point_parity(const FockVector& state, Complex z, const Tolerances& tol = {});

// Uniform quadrature over the square [-radius, radius]^2 in the lambda plane.
struct CharFunQuadrature {
    double radius = 6.0;
    int points = 121;
};

// Quadrature sized for the given state and evaluation window: the radius covers
// the characteristic function's support (branch separations widen it), the
// spacing resolves the e^{lambda* z - lambda z*} oscillation.
CharFunQuadrature recommended_charfun_quadrature(const FockVector& state, double max_abs_z);

// W(z) as the 2D Fourier transform of the symmetric-order characteristic function
// <D(lambda)>, by direct quadrature. Validation route; agrees with the parity
// route within the Wigner tolerance when the quadrature covers the state.
double wigner_point_charfun(const FockVector& state, Complex z,
                            const CharFunQuadrature& quad = {});

// Batch version reusing a single characteristic-function table.
std::vector<double> wigner_charfun_batch(const FockVector& state, std::span<const Complex> zs,
                                         const CharFunQuadrature& quad);

// As wigner_point_charfun but re-evaluated on a refined grid; QuadratureError if
// the two results differ by more than refine_tol.
double wigner_point_charfun_certified(const FockVector& state, Complex z,
                                      const CharFunQuadrature& quad, double refine_tol = 1e-6);

// The closed-form W(z) evaluated exactly as printed (F1, F2, f with the
// kappa^2 K^2 prefactor). Cross-validated against the parity oracle by the
// validation layer; transcription slips land in the errata registry.
double wigner_analytic(const CatParams& cat, const MeasurementParams& meas, Complex z);

// Parity-route Wigner values over a rectangular grid. Deterministic output
// independent of the parallel schedule.
PhaseSpaceGrid wigner_grid(const FockVector& state, double x_min, double x_max, double p_min,
                           double p_max, int nx, int np, const Tolerances& tol = {});

// Trapezoidal integral of the grid; expected 1 within a resolution-set tolerance.
// CoverageError when boundary values exceed boundary_tol.
double integral_check(const PhaseSpaceGrid& grid, double boundary_tol = 1e-8);

// Integral of |W| minus integral of W (doubled negative mass), >= 0.
double negativity_volume(const PhaseSpaceGrid& grid, double boundary_tol = 1e-8);

// |psi(x)|^2 by Hermite-function expansion, in the convention where the Wigner
// p-marginal sum_p W(x, p) dp reproduces it.
std::vector<double> position_density(const FockVector& state, std::span<const double> xs);

// Plain-text export: 4 header lines (bounds, resolution, parameters, metrics)
// followed by nx rows of np space-separated values (%.17g).
void write_grid(std::ostream& out, const PhaseSpaceGrid& grid, const std::string& params_line,
                const std::string& metrics_line);

}  // namespace pvmcat
