#pragma once

#include "pvmcat/hilbert.hpp"
#include "pvmcat/states.hpp"

namespace pvmcat {

// Pre-selection angles and coupling strength Gamma = g / sigma (dimensionless).
// |Gamma| < 1 is the weak regime, |Gamma| > 1 the strong one (reporting only).
struct MeasurementParams {
    double theta = 0.0;  // radians in [0, pi]
    double phi = 0.0;    // radians in [0, 2 pi)
    double gamma = 0.0;  // any real coupling strength
};

void validate(const MeasurementParams& p);

struct WeakValue {
    Complex value;
};

// e^{i phi} tan(theta / 2); |value| = tan(theta/2).
// OrthogonalSelectionError at theta = pi where <psi_f|psi_i> = 0.
WeakValue weak_value(const MeasurementParams& params);

// P_s = cos^2(theta / 2).
double postselection_probability(const MeasurementParams& params);

struct EvolutionBranches {
    Operator plus;   // D(+Gamma/2)
    Operator minus;  // D(-Gamma/2)
};

// The two displacement branches of the decomposed von Neumann unitary.
EvolutionBranches evolution_operator(int dim, double gamma);

struct FinalPointerState {
    FockVector state;     // numerically normalized
    double norm_numeric;  // norm of (1/2)[(1+Aw)D(G/2) + (1-Aw)D(-G/2)]|in>, i.e. 1/kappa
};

// Full-order postselected evolution of the pointer.
FinalPointerState final_pointer_state(const FockVector& pointer_in, const MeasurementParams& params,
                                      const Tolerances& tol = {});

// Generalized branch application with an explicit weak value and complex branch
// displacement mu (the physical model uses mu = Gamma/2). Used directly by the
// phase-space-rotation invariance checks.
FinalPointerState apply_postselected_evolution(const FockVector& pointer_in, Complex weak_val,
                                               Complex mu, const Tolerances& tol = {});

// Closed-form normalization constant kappa for a cat-state pointer, evaluated
// exactly as printed (validated elsewhere against the oracle norm).
// FormulaDomainError if the bracketed expression is not positive.
double kappa_analytic(const CatParams& cat, const MeasurementParams& params);

}  // namespace pvmcat
