#include "pvmcat/observables.hpp"

#include <cmath>

namespace pvmcat {

MomentOperators MomentOperators::build(int dim) {
    if (dim < 2) throw InvalidDimensionError("MomentOperators: dim must be >= 2");
    Matrix a2 = Matrix::Zero(dim, dim);
    for (int n = 2; n < dim; ++n) a2(n - 2, n) = std::sqrt(double(n) * (n - 1));
    Matrix a4 = Matrix::Zero(dim, dim);
    for (int n = 4; n < dim; ++n)
        a4(n - 4, n) = std::sqrt(double(n) * (n - 1) * (n - 2) * (n - 3));
    Matrix ad2a2 = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) ad2a2(n, n) = double(n) * (n - 1);
    Matrix nop = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) nop(n, n) = double(n);
    return MomentOperators{Operator(std::move(a2)), Operator(std::move(a4)),
                           Operator(std::move(ad2a2)), Operator(std::move(nop))};
}

MomentSet moments_oracle(const FockVector& state) {
    return moments_oracle(state, MomentOperators::build(state.dim()));
}

MomentSet moments_oracle(const FockVector& state, const MomentOperators& ops) {
    const Complex a2 = expectation(state, ops.a2);
    const Complex a4 = expectation(state, ops.a4);
    const Complex ad2a2 = expectation(state, ops.adag2a2);
    const Complex nbar = expectation(state, ops.n);
    if (std::abs(ad2a2.imag()) > 1e-10 || std::abs(nbar.imag()) > 1e-10)
        throw Error("moments_oracle: Hermitian moment came out complex");
    return MomentSet{a2, a4, ad2a2.real(), nbar.real()};
}

double ass_witness_R(const MomentSet& m) {
    const double re_a2 = m.a2.real();
    return 0.5 * m.a4.real() + 0.5 * m.adag2a2 - re_a2 * re_a2;
}

double y_variance(const FockVector& state, int component) {
    if (component != 1 && component != 2)
        throw InvalidParameterError("y_variance: component must be 1 or 2");
    const int dim = state.dim();
    Matrix a2 = Matrix::Zero(dim, dim);
    for (int n = 2; n < dim; ++n) a2(n - 2, n) = std::sqrt(double(n) * (n - 1));
    Matrix y;
    if (component == 1)
        y = 0.5 * (Matrix(a2.adjoint()) + a2);
    else
        y = Complex(0.0, 0.5) * (Matrix(a2.adjoint()) - a2);
    const Vector yv = y * state.amps();
    const double mean = state.amps().dot(yv).real();
    const double second = yv.squaredNorm();  // <psi|Y^2|psi> since Y is Hermitian
    return second - mean * mean;
}

std::pair<double, double> uncertainty_product(const FockVector& state) {
    const double v1 = y_variance(state, 1);
    const double v2 = y_variance(state, 2);
    double nbar = 0.0;
    for (int n = 0; n < state.dim(); ++n) nbar += n * std::norm(state.amps()[n]);
    return {std::sqrt(v1) * std::sqrt(v2), nbar + 0.5};
}

namespace {

// Closed-form helpers, transcribed exactly as printed.

Complex helper_H1(double g, Complex alpha, double omega) {
    const double e = std::exp(-2.0 * std::norm(alpha));
    return 2.0 * (e * std::cos(omega) + 1.0) * (alpha * alpha + g * g / 4.0) -
           Complex(0.0, 2.0) * e * g * alpha * std::sin(omega);
}

Complex helper_H2(double g, Complex alpha, double omega) {
    const Complex am = alpha - g / 2.0;
    const Complex ap = alpha + g / 2.0;
    return std::polar(1.0, 2.0 * g * alpha.imag()) * std::exp(-g * g / 2.0) * am * am +
           std::polar(1.0, omega) * ap * ap * std::exp(-2.0 * std::norm(ap)) +
           std::polar(1.0, -omega) * am * am * std::exp(-2.0 * std::norm(am)) +
           std::polar(1.0, -2.0 * g * alpha.imag()) * ap * ap * std::exp(-g * g / 2.0);
}

double helper_K1(double g, Complex alpha, double omega) {
    const Complex ap = alpha + g / 2.0;
    const Complex am = alpha - g / 2.0;
    const Complex cross = std::polar(1.0, omega) * std::pow(std::conj(alpha) + g / 2.0, 2) *
                          std::pow(-alpha + g / 2.0, 2) * std::exp(-2.0 * std::norm(alpha));
    return std::norm(ap) * std::norm(ap) + std::norm(am) * std::norm(am) + 2.0 * cross.real();
}

Complex helper_K2(double g, Complex alpha, double omega) {
    const Complex ap = alpha + g / 2.0;
    const double ap4 = std::norm(ap) * std::norm(ap);
    return std::polar(1.0, omega) * ap4 * std::exp(-2.0 * std::norm(ap)) +
           std::polar(1.0, 2.0 * g * alpha.imag()) * std::exp(-g * g / 2.0) *
               std::pow(std::conj(alpha) + g / 2.0, 2) * std::pow(alpha - g / 2.0, 2);
}

Complex helper_G1(double g, Complex alpha, double omega) {
    const double e = std::exp(-2.0 * std::norm(alpha));
    const Complex a2 = alpha * alpha;
    const Complex a3 = a2 * alpha;
    const Complex a4 = a2 * a2;
    return 2.0 * a4 + 3.0 * g * g * a2 + std::pow(g, 4) / 8.0 +
           2.0 * std::cos(omega) * e *
               (a4 - 2.0 * g * a3 + 1.5 * g * g * a2 - 2.0 * (g * g * g / 4.0) * alpha +
                std::pow(g, 4) / 16.0);
}

Complex helper_G2(double g, Complex alpha, double omega) {
    const Complex am = alpha - g / 2.0;
    const Complex ap = alpha + g / 2.0;
    return std::polar(1.0, 2.0 * g * alpha.imag()) * am * am * std::exp(-g * g / 2.0) +
           std::polar(1.0, omega) * ap * ap * std::exp(-2.0 * std::norm(ap)) +
           std::polar(1.0, -omega) * am * am * std::exp(-2.0 * std::norm(am)) +
           std::polar(1.0, -2.0 * g * alpha.imag()) * ap * ap * std::exp(-g * g / 2.0);
}

}  // namespace

AnalyticMoments moments_analytic(const CatParams& cat, const MeasurementParams& meas) {
    const Complex aw = weak_value(meas).value;
    const double kappa = kappa_analytic(cat, meas);
    const double k = cat_norm_constant(cat);
    const Complex alpha = cat.alpha();
    const double g = meas.gamma;
    const double om = cat.omega;

    const double pre = kappa * kappa * k * k / 4.0;
    const Complex p = 1.0 + aw;
    const Complex m = 1.0 - aw;
    const double p2 = std::norm(p);
    const double m2 = std::norm(m);

    const Complex a2 = pre * (p2 * helper_H1(g, alpha, om) + m2 * helper_H1(-g, alpha, om) +
                              m * std::conj(p) * helper_H2(g, alpha, om) +
                              p * std::conj(m) * helper_H2(-g, alpha, om));

    const Complex k2sum = helper_K2(g, alpha, om) + helper_K2(-g, alpha, om);
    const Complex ad2a2 = pre * (p2 * helper_K1(g, alpha, om) + m2 * helper_K1(-g, alpha, om) +
                                 2.0 * (m * std::conj(p) * k2sum).real());

    // The third slot carries G1(Gamma) as printed, not the G2(Gamma) that the
    // structure of the other moments would suggest; the oracle adjudicates.
    const Complex a4 = pre * (p2 * helper_G1(g, alpha, om) + m2 * helper_G1(-g, alpha, om) +
                              m * std::conj(p) * helper_G1(g, alpha, om) +
                              p * std::conj(m) * helper_G2(-g, alpha, om));

    return AnalyticMoments{a2, a4, ad2a2};
}

const char* scan_axis_name(ScanAxis axis) {
    switch (axis) {
        case ScanAxis::AlphaAbs: return "alpha_abs";
        case ScanAxis::Gamma: return "gamma";
        case ScanAxis::Phi: return "phi";
        case ScanAxis::Omega: return "omega";
        case ScanAxis::Theta: return "theta";
        case ScanAxis::Delta: return "delta";
    }
    return "unknown";
}

namespace {

void apply_axis(CatParams& cat, MeasurementParams& meas, ScanAxis axis, double value) {
    switch (axis) {
        case ScanAxis::AlphaAbs: cat.alpha_abs = value; break;
        case ScanAxis::Gamma: meas.gamma = value; break;
        case ScanAxis::Phi: meas.phi = value; break;
        case ScanAxis::Omega: cat.omega = value; break;
        case ScanAxis::Theta: meas.theta = value; break;
        case ScanAxis::Delta: cat.delta = value; break;
    }
}

double oracle_R(const CatParams& cat, const MeasurementParams& meas, int dim,
                const MomentOperators& ops, const Tolerances& tol) {
    const FockVector pointer = cat_vector(dim, cat, tol);
    const FinalPointerState fin = final_pointer_state(pointer, meas, tol);
    return ass_witness_R(moments_oracle(fin.state, ops));
}

}  // namespace

std::vector<ScanPoint> R_scan(const CatParams& cat_base, const MeasurementParams& meas_base,
                              ScanAxis axis, const std::vector<double>& values, int dim,
                              const Tolerances& tol) {
    if (dim < 2) throw InvalidDimensionError("R_scan: dim must be >= 2");
    const MomentOperators ops = MomentOperators::build(dim);
    const MomentOperators ops2 = MomentOperators::build(2 * dim);

    std::vector<ScanPoint> out(values.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(values.size()); ++i) {
        ScanPoint pt;
        pt.value = values[i];
        CatParams cat = cat_base;
        MeasurementParams meas = meas_base;
        apply_axis(cat, meas, axis, values[i]);
        try {
            pt.p_s = postselection_probability(meas);
            const double r = oracle_R(cat, meas, dim, ops, tol);
            const double r2 = oracle_R(cat, meas, 2 * dim, ops2, tol);
            if (std::abs(r - r2) > tol.convergence)
                throw TruncationRiskError("R not converged at dim " + std::to_string(dim) +
                                              ": |R(dim) - R(2 dim)| = " +
                                              std::to_string(std::abs(r - r2)),
                                          std::abs(r - r2));
            pt.R = r;
            pt.ok = true;
        } catch (const std::exception& e) {
            pt.ok = false;
            pt.error = e.what();
        }
        out[i] = std::move(pt);
    }
    return out;
}

}  // namespace pvmcat
