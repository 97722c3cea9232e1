#include "pvmcat/states.hpp"

#include <cmath>
#include <numbers>

namespace pvmcat {

void validate(const CatParams& p) {
    if (p.alpha_abs < 0.0) throw InvalidParameterError("CatParams: alpha_abs must be >= 0");
    if (p.omega < 0.0 || p.omega > 2.0 * std::numbers::pi)
        throw InvalidParameterError("CatParams: omega must lie in [0, 2 pi]");
}

FockVector coherent_vector(int dim, Complex alpha, const Tolerances& tol) {
    if (dim < 2) throw InvalidDimensionError("coherent_vector: dim must be >= 2");
    const double lambda = std::norm(alpha);
    const double tail = poisson_upper_tail(lambda, dim);
    if (tail > tol.truncation_tail)
        throw TruncationRiskError(
            "coherent_vector: |alpha|^2 = " + std::to_string(lambda) +
                " leaves tail mass " + std::to_string(tail) + " past dim " + std::to_string(dim),
            tail);
    Vector amps = Vector::Zero(dim);
    amps[0] = std::exp(-0.5 * lambda);
    for (int n = 1; n < dim; ++n) amps[n] = amps[n - 1] * alpha / std::sqrt(double(n));
    return FockVector(std::move(amps));
}

double cat_norm_constant(const CatParams& params) {
    validate(params);
    const double bracket =
        2.0 + 2.0 * std::exp(-2.0 * params.alpha_abs * params.alpha_abs) * std::cos(params.omega);
    if (bracket <= 1e-300)
        throw NullStateError("cat_norm_constant: null cat (alpha = 0, omega = pi)");
    return 1.0 / std::sqrt(bracket);
}

FockVector cat_vector(int dim, const CatParams& params, const Tolerances& tol) {
    const double k = cat_norm_constant(params);
    const Complex alpha = params.alpha();
    const FockVector plus = coherent_vector(dim, alpha, tol);
    const FockVector minus = coherent_vector(dim, -alpha, tol);
    Vector amps = k * (plus.amps() + std::polar(1.0, params.omega) * minus.amps());
    return FockVector(std::move(amps));
}

}  // namespace pvmcat
