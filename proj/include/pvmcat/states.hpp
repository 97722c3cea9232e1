#pragma once

#include "pvmcat/hilbert.hpp"

namespace pvmcat {

// Cat-state parameters: alpha = alpha_abs * e^{i delta}, superposition phase omega.
struct CatParams {
    double alpha_abs = 1.0;  // |alpha| >= 0
    double delta = 0.0;      // arg(alpha), radians
    double omega = 0.0;      // superposition phase, radians in [0, 2 pi]

    Complex alpha() const { return std::polar(alpha_abs, delta); }
};

void validate(const CatParams& p);

// Coherent state amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
// TruncationRiskError when the Poisson tail past the cutoff exceeds tolerance.
FockVector coherent_vector(int dim, Complex alpha, const Tolerances& tol = {});

// K = [2 + 2 e^{-2|alpha|^2} cos(omega)]^{-1/2}. NullStateError for the vanishing
// odd cat (alpha = 0, omega = pi).
double cat_norm_constant(const CatParams& params);

// K (|alpha> + e^{i omega} |-alpha>).
FockVector cat_vector(int dim, const CatParams& params, const Tolerances& tol = {});

}  // namespace pvmcat
