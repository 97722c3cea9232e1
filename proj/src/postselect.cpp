#include "pvmcat/postselect.hpp"

#include <cmath>
#include <numbers>

namespace pvmcat {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate(const MeasurementParams& p) {
    if (p.theta < 0.0 || p.theta > kPi)
        throw InvalidParameterError("MeasurementParams: theta must lie in [0, pi]");
    if (p.phi < 0.0 || p.phi >= 2.0 * kPi)
        throw InvalidParameterError("MeasurementParams: phi must lie in [0, 2 pi)");
}

WeakValue weak_value(const MeasurementParams& params) {
    validate(params);
    if (std::abs(std::cos(params.theta / 2.0)) < 1e-12)
        throw OrthogonalSelectionError(
            "weak_value: theta = pi makes pre- and post-selection orthogonal");
    return WeakValue{std::polar(1.0, params.phi) * std::tan(params.theta / 2.0)};
}

double postselection_probability(const MeasurementParams& params) {
    validate(params);
    const double c = std::cos(params.theta / 2.0);
    return c * c;
}

EvolutionBranches evolution_operator(int dim, double gamma) {
    return EvolutionBranches{displacement(dim, Complex(gamma / 2.0, 0.0)),
                             displacement(dim, Complex(-gamma / 2.0, 0.0))};
}

FinalPointerState apply_postselected_evolution(const FockVector& pointer_in, Complex weak_val,
                                               Complex mu, const Tolerances& tol) {
    const int dim = pointer_in.dim();
    // Work in a padded space so the spilled mass is measurable exactly.
    const double shift = std::abs(mu);
    const int pad = static_cast<int>(std::ceil(shift * shift + 2.0 * shift * std::sqrt(double(dim)))) + 16;
    const int big = dim + pad;
    Vector plus = displaced_amplitudes(pointer_in, mu, big);
    Vector minus = displaced_amplitudes(pointer_in, -mu, big);
    Vector out = 0.5 * ((1.0 + weak_val) * plus + (1.0 - weak_val) * minus);

    const double spill = out.tail(pad).squaredNorm();
    if (spill > tol.truncation_tail)
        throw TruncationRiskError("final pointer state spills past the Fock cutoff (mass " +
                                      std::to_string(spill) + "); increase dim",
                                  spill);
    Vector trunc = out.head(dim);
    const double nrm = trunc.norm();
    if (nrm < 1e-14)
        throw NullStateError("final pointer state: branches cancelled below 1e-14");
    return FinalPointerState{FockVector(trunc / nrm), nrm};
}

FinalPointerState final_pointer_state(const FockVector& pointer_in, const MeasurementParams& params,
                                      const Tolerances& tol) {
    const WeakValue aw = weak_value(params);
    if (std::abs(pointer_in.norm() - 1.0) > tol.normalization)
        throw InvalidParameterError("final_pointer_state: pointer_in is not normalized");
    return apply_postselected_evolution(pointer_in, aw.value, Complex(params.gamma / 2.0, 0.0), tol);
}

double kappa_analytic(const CatParams& cat, const MeasurementParams& params) {
    const Complex aw = weak_value(params).value;
    const double k = cat_norm_constant(cat);
    const double k2 = k * k;
    const Complex alpha = cat.alpha();
    const double g = params.gamma;
    const double aw2 = std::norm(aw);

    const double term1 = 0.5 * (1.0 + aw2);
    const double term2 = k2 * (1.0 - aw2) * std::cos(2.0 * g * alpha.imag()) * std::exp(-g * g / 2.0);
    const Complex cross = (1.0 - aw2 - Complex(0.0, 2.0 * aw.imag())) *
                          (std::polar(1.0, cat.omega) * std::exp(-0.5 * std::norm(2.0 * alpha + g)) +
                           std::polar(1.0, -cat.omega) * std::exp(-0.5 * std::norm(2.0 * alpha - g)));
    const double bracket = term1 + term2 + 0.5 * k2 * cross.real();
    if (bracket <= 0.0)
        throw FormulaDomainError("kappa_analytic: bracketed expression is not positive");
    return 1.0 / std::sqrt(bracket);
}

}  // namespace pvmcat
