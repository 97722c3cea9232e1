#include "pvmcat/hilbert.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace pvmcat {

double FockVector::tail_mass(int band) const {
    const int d = dim();
    if (band <= 0) return 0.0;
    if (band > d) band = d;
    return amps_.tail(band).squaredNorm();
}

int FockVector::support_dim(double tail_tol) const {
    const int d = dim();
    double acc = 0.0;
    for (int n = d - 1; n >= 0; --n) {
        acc += std::norm(amps_[n]);
        if (acc > tail_tol) return n + 2 > d ? d : n + 2;
    }
    return 2;
}

LadderOperators ladder_operators(int dim) {
    if (dim < 2) throw InvalidDimensionError("ladder_operators: dim must be >= 2");
    Matrix a = Matrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(double(n));
    Matrix n_op = Matrix::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) n_op(n, n) = double(n);
    Matrix a_dag = a.adjoint();
    return LadderOperators{Operator(std::move(a)), Operator(std::move(a_dag)),
                           Operator(std::move(n_op))};
}

Operator momentum_operator(int dim, double sigma) {
    if (sigma <= 0.0) throw InvalidParameterError("momentum_operator: sigma must be > 0");
    auto lad = ladder_operators(dim);
    Matrix p = Complex(0.0, 1.0 / (2.0 * sigma)) * (lad.a_dag.entries() - lad.a.entries());
    return Operator(std::move(p));
}

double poisson_upper_tail(double lambda, int dim) {
    if (lambda <= 0.0) return 0.0;
    // sum pmf from dim upward; terms decay once k > lambda
    double tail = 0.0;
    for (int k = dim; k < dim + 40 * (1 + int(std::sqrt(lambda))); ++k) {
        double logp = k * std::log(lambda) - std::lgamma(double(k) + 1.0) - lambda;
        double p = std::exp(logp);
        tail += p;
        if (p < tail * 1e-18 && k > lambda) break;
    }
    return tail;
}

namespace {

// Fill rows [0, rows) of D(mu) restricted to columns [0, cols) using
//   <m+1|D|n> = (mu <m|D|n> + sqrt(n) <m|D|n-1>) / sqrt(m+1),
// the recurrence satisfied by the Laguerre closed-form matrix elements.
Matrix displacement_block(int rows, int cols, Complex mu) {
    Matrix d(rows, cols);
    d(0, 0) = std::exp(-0.5 * std::norm(mu));
    for (int n = 1; n < cols; ++n) d(0, n) = d(0, n - 1) * (-std::conj(mu)) / std::sqrt(double(n));
    Eigen::VectorXd sq(cols);
    for (int n = 0; n < cols; ++n) sq[n] = std::sqrt(double(n));
    for (int m = 0; m + 1 < rows; ++m) {
        const double inv = 1.0 / std::sqrt(double(m + 1));
        d(m + 1, 0) = mu * d(m, 0) * inv;
        for (int n = 1; n < cols; ++n)
            d(m + 1, n) = (mu * d(m, n) + sq[n] * d(m, n - 1)) * inv;
    }
    return d;
}

}  // namespace

Operator displacement(int dim, Complex mu) {
    if (dim < 2) throw InvalidDimensionError("displacement: dim must be >= 2");
    if (mu == Complex(0.0, 0.0)) return Operator(Matrix::Identity(dim, dim));
    // Guard: if even the displaced vacuum spills past the cutoff, nothing about
    // this operator is usable. Documented bound: |mu|^2 well inside dim.
    const double tail = poisson_upper_tail(std::norm(mu), dim);
    if (tail > 1e-10)
        throw TruncationRiskError("displacement: |mu| too large for dim (displaced vacuum tail " +
                                      std::to_string(tail) + ")",
                                  tail);
    return Operator(displacement_block(dim, dim, mu));
}

Operator displacement_expm(int dim, Complex mu) {
    if (dim < 2) throw InvalidDimensionError("displacement_expm: dim must be >= 2");
    auto lad = ladder_operators(dim);
    Matrix gen = mu * lad.a_dag.entries() - std::conj(mu) * lad.a.entries();
    return Operator(gen.exp());
}

Complex displacement_element(int m, int n, Complex mu) {
    if (m < 0 || n < 0) throw InvalidParameterError("displacement_element: negative index");
    if (m < n) {
        // <m|D(mu)|n> = conj(<n|D(-mu)|m>)
        return std::conj(displacement_element(n, m, -mu));
    }
    const int k = m - n;
    const double x = std::norm(mu);
    // associated Laguerre L_n^{(k)}(x) by the standard three-term recurrence
    double lprev = 1.0, lcur = 1.0 + k - x;
    if (n == 0) lcur = 1.0;
    for (int j = 1; j < n; ++j) {
        double lnext = ((2.0 * j + 1.0 + k - x) * lcur - (j + k) * lprev) / (j + 1.0);
        lprev = lcur;
        lcur = lnext;
    }
    const double lag = (n == 0) ? 1.0 : lcur;
    const double logfac = 0.5 * (std::lgamma(double(n) + 1.0) - std::lgamma(double(m) + 1.0));
    Complex mu_pow = std::pow(mu, double(k));
    return std::exp(logfac - 0.5 * x) * mu_pow * lag;
}

int displacement_clean_block(const Operator& disp, double tail_tol) {
    const int d = disp.dim();
    int block = 0;
    for (int n = 0; n < d; ++n) {
        const double tail = 1.0 - disp.entries().col(n).squaredNorm();
        if (tail > tail_tol) break;
        block = n + 1;
    }
    return block;
}

Vector displaced_amplitudes(const FockVector& state, Complex mu, int out_dim) {
    const int d = state.dim();
    if (out_dim < d) throw InvalidDimensionError("displaced_amplitudes: out_dim < state dim");
    if (mu == Complex(0.0, 0.0)) {
        Vector out = Vector::Zero(out_dim);
        out.head(d) = state.amps();
        return out;
    }
    // row-by-row recurrence over the output index; only columns < d contribute
    Vector out(out_dim);
    Vector row(d), next(d);
    row[0] = std::exp(-0.5 * std::norm(mu));
    for (int n = 1; n < d; ++n) row[n] = row[n - 1] * (-std::conj(mu)) / std::sqrt(double(n));
    Eigen::VectorXd sq(d);
    for (int n = 0; n < d; ++n) sq[n] = std::sqrt(double(n));
    out[0] = row.cwiseProduct(state.amps()).sum();
    for (int m = 0; m + 1 < out_dim; ++m) {
        const double inv = 1.0 / std::sqrt(double(m + 1));
        next[0] = mu * row[0] * inv;
        for (int n = 1; n < d; ++n) next[n] = (mu * row[n] + sq[n] * row[n - 1]) * inv;
        row.swap(next);
        out[m + 1] = row.cwiseProduct(state.amps()).sum();
    }
    return out;
}

Complex expectation(const FockVector& state, const Operator& op) {
    if (state.dim() != op.dim())
        throw DimensionMismatchError("expectation: state and operator dims differ");
    if (std::abs(state.norm() - 1.0) > 1e-10)
        throw InvalidParameterError("expectation: state is not normalized");
    return state.amps().dot(op.entries() * state.amps());
}

std::pair<FockVector, double> normalize(const FockVector& state) {
    const double nrm = state.norm();
    if (nrm < 1e-14) throw NullStateError("normalize: zero state vector");
    return {FockVector(state.amps() / nrm), nrm};
}

}  // namespace pvmcat
