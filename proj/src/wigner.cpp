#include "pvmcat/wigner.hpp"

#include "pvmcat/errata.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pvmcat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxParityDim = 8192;

int parity_eval_dim(const FockVector& state, Complex z) {
    const int supp = state.support_dim(1e-14);
    const double beta = std::abs(z) + std::sqrt(double(supp));
    const int needed = static_cast<int>(std::ceil(beta * beta + 8.0 * beta)) + 16;
    return std::max(state.dim(), needed);
}

}  // namespace

double wigner_point_parity(const FockVector& state, Complex z, const Tolerances& tol) {
    if (std::abs(state.norm() - 1.0) > tol.normalization)
        throw InvalidParameterError("wigner_point_parity: state is not normalized");
    const int dim_eff = parity_eval_dim(state, z);
    if (dim_eff > kMaxParityDim) {
        const double tail = poisson_upper_tail(std::norm(z), kMaxParityDim);
        throw TruncationRiskError("wigner_point_parity: |z| too large for the evaluation cap",
                                  tail);
    }
    const Vector c = displaced_amplitudes(state, -z, dim_eff);
    double acc = 0.0;
    for (int n = 0; n < dim_eff; ++n) {
        const double w = std::norm(c[n]);
        acc += (n & 1) ? -w : w;
    }
    return (2.0 / kPi) * acc;
}

namespace {

// <psi|D(lambda)|psi> on the lambda grid; row-major over (u, v) nodes.
struct CharFunTable {
    std::vector<Complex> lambda;
    std::vector<Complex> value;
    double cell_area = 0.0;
};

Complex char_fun_value(const FockVector& state, Complex lambda) {
    const int d = state.dim();
    // <psi|D|psi> only touches the d x d block, whose entries are exact.
    Vector row(d), next(d);
    row[0] = std::exp(-0.5 * std::norm(lambda));
    for (int n = 1; n < d; ++n)
        row[n] = row[n - 1] * (-std::conj(lambda)) / std::sqrt(double(n));
    Eigen::VectorXd sq(d);
    for (int n = 0; n < d; ++n) sq[n] = std::sqrt(double(n));
    Complex acc = std::conj(state.amps()[0]) * row.cwiseProduct(state.amps()).sum();
    for (int m = 0; m + 1 < d; ++m) {
        const double inv = 1.0 / std::sqrt(double(m + 1));
        next[0] = lambda * row[0] * inv;
        for (int n = 1; n < d; ++n) next[n] = (lambda * row[n] + sq[n] * row[n - 1]) * inv;
        row.swap(next);
        acc += std::conj(state.amps()[m + 1]) * row.cwiseProduct(state.amps()).sum();
    }
    return acc;
}

CharFunTable build_char_fun_table(const FockVector& state, const CharFunQuadrature& quad) {
    if (quad.points < 2 || quad.radius <= 0.0)
        throw InvalidParameterError("charfun quadrature: need points >= 2 and radius > 0");
    const int n = quad.points;
    const double h = 2.0 * quad.radius / (n - 1);
    CharFunTable table;
    table.cell_area = h * h;
    // nodes restricted to the lambda disk, in fixed row-major order
    table.lambda.reserve(std::size_t(n) * n);
    for (int i = 0; i < n; ++i) {
        const double u = -quad.radius + i * h;
        for (int j = 0; j < n; ++j) {
            const double v = -quad.radius + j * h;
            if (u * u + v * v <= quad.radius * quad.radius) table.lambda.emplace_back(u, v);
        }
    }
    table.value.resize(table.lambda.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long k = 0; k < long(table.lambda.size()); ++k)
        table.value[k] = char_fun_value(state, table.lambda[k]);
    return table;
}

double wigner_from_table(const CharFunTable& table, Complex z) {
    // fixed summation order keeps the result independent of threading
    double acc = 0.0;
    const double x = z.real(), y = z.imag();
    for (std::size_t k = 0; k < table.lambda.size(); ++k) {
        const Complex lam = table.lambda[k];
        const double phase = 2.0 * (lam.real() * y - lam.imag() * x);
        acc += (Complex(std::cos(phase), std::sin(phase)) * table.value[k]).real();
    }
    return acc * table.cell_area / (kPi * kPi);
}

}  // namespace

CharFunQuadrature recommended_charfun_quadrature(const FockVector& state, double max_abs_z) {
    const int supp = state.support_dim(1e-12);
    const double radius = 6.0 + 2.0 * std::sqrt(double(supp));
    const double h = std::min(0.1, kPi / (2.0 * std::max(1.0, max_abs_z) + 10.0));
    int points = static_cast<int>(std::ceil(2.0 * radius / h)) + 1;
    if (points % 2 == 0) ++points;
    return CharFunQuadrature{radius, points};
}

double wigner_point_charfun(const FockVector& state, Complex z, const CharFunQuadrature& quad) {
    const CharFunTable table = build_char_fun_table(state, quad);
    return wigner_from_table(table, z);
}

std::vector<double> wigner_charfun_batch(const FockVector& state, std::span<const Complex> zs,
                                         const CharFunQuadrature& quad) {
    const CharFunTable table = build_char_fun_table(state, quad);
    std::vector<double> out(zs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < long(zs.size()); ++i) out[i] = wigner_from_table(table, zs[i]);
    return out;
}

double wigner_point_charfun_certified(const FockVector& state, Complex z,
                                      const CharFunQuadrature& quad, double refine_tol) {
    const double coarse = wigner_point_charfun(state, z, quad);
    CharFunQuadrature fine{1.25 * quad.radius, 2 * quad.points - 1};
    const double refined = wigner_point_charfun(state, z, fine);
    if (std::abs(coarse - refined) > refine_tol)
        throw QuadratureError("wigner_point_charfun: quadrature not converged (delta " +
                              std::to_string(std::abs(coarse - refined)) + ")");
    return refined;
}

namespace {

double f_factor(double g, double omega, Complex z, Complex alpha) {
    return std::cos(4.0 * z.imag() * alpha.real() + 4.0 * z.real() * alpha.imag() -
                    2.0 * g * z.imag() - omega);
}

double helper_F1(double g, Complex z, Complex alpha, double omega) {
    return std::exp(-0.5 * g * g) *
               (std::exp(-2.0 * std::norm(z + alpha)) * std::exp(2.0 * g * (z + alpha).real()) +
                std::exp(-2.0 * std::norm(z - alpha)) * std::exp(2.0 * g * (z - alpha).real())) +
           2.0 * std::exp(-2.0 * std::norm(z)) *
               std::exp(-2.0 * (g * g / 4.0 - g * z.real())) * f_factor(g, omega, z, alpha);
}

Complex helper_F2(double g, Complex z, Complex alpha, double omega) {
    return std::exp(-2.0 * std::norm(z - alpha)) * std::polar(1.0, 2.0 * g * z.imag()) +
           std::exp(-2.0 * std::norm(z + alpha)) *
               std::exp(Complex(0.0, -2.0 * g) *
                        Complex(z.imag() + alpha.imag(), alpha.real())) +
           2.0 * std::exp(-2.0 * std::norm(z)) *
               std::exp(-2.0 * g * (alpha.imag() - alpha.real())) * f_factor(g, omega, z, alpha);
}

}  // namespace

double wigner_analytic(const CatParams& cat, const MeasurementParams& meas, Complex z) {
    const Complex aw = weak_value(meas).value;
    const double kappa = kappa_analytic(cat, meas);
    const double k = cat_norm_constant(cat);
    const Complex alpha = cat.alpha();
    const double g = meas.gamma;

    const Complex p = 1.0 + aw;
    const Complex m = 1.0 - aw;
    const Complex cross = m * std::conj(p) * helper_F2(g, z, alpha, cat.omega);
    const double sum = std::norm(p) * helper_F1(g, z, alpha, cat.omega) +
                       std::norm(m) * helper_F1(-g, z, alpha, cat.omega) + 2.0 * cross.real();
    return kappa * kappa * k * k / (2.0 * kPi) * sum;
}

PhaseSpaceGrid wigner_grid(const FockVector& state, double x_min, double x_max, double p_min,
                           double p_max, int nx, int np, const Tolerances& tol) {
    if (nx < 2 || np < 2) throw InvalidParameterError("wigner_grid: need nx, np >= 2");
    if (x_min >= x_max || p_min >= p_max)
        throw InvalidParameterError("wigner_grid: bounds must be ordered");
    // guard the far corner before looping
    const double corner = std::max({std::hypot(x_min, p_min), std::hypot(x_min, p_max),
                                    std::hypot(x_max, p_min), std::hypot(x_max, p_max)});
    if (parity_eval_dim(state, Complex(corner, 0.0)) > kMaxParityDim)
        throw TruncationRiskError("wigner_grid: grid extends past the evaluation cap",
                                  poisson_upper_tail(corner * corner, kMaxParityDim));

    PhaseSpaceGrid grid{x_min, x_max, p_min, p_max, nx, np, Eigen::MatrixXd::Zero(nx, np)};
    const double dx = grid.dx(), dp = grid.dp();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(nx); ++i) {
        for (int j = 0; j < np; ++j) {
            const Complex z(x_min + i * dx, p_min + j * dp);
            grid.values(i, j) = wigner_point_parity(state, z, tol);
        }
    }
    return grid;
}

namespace {

double boundary_max_abs(const PhaseSpaceGrid& grid) {
    double m = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        m = std::max(m, std::abs(grid.values(i, 0)));
        m = std::max(m, std::abs(grid.values(i, grid.np - 1)));
    }
    for (int j = 0; j < grid.np; ++j) {
        m = std::max(m, std::abs(grid.values(0, j)));
        m = std::max(m, std::abs(grid.values(grid.nx - 1, j)));
    }
    return m;
}

double trapezoid_weight(int idx, int n) { return (idx == 0 || idx == n - 1) ? 0.5 : 1.0; }

template <typename F>
double trapezoid_sum(const PhaseSpaceGrid& grid, F&& transform) {
    double acc = 0.0;
    for (int i = 0; i < grid.nx; ++i) {
        const double wi = trapezoid_weight(i, grid.nx);
        double row = 0.0;
        for (int j = 0; j < grid.np; ++j)
            row += trapezoid_weight(j, grid.np) * transform(grid.values(i, j));
        acc += wi * row;
    }
    return acc * grid.dx() * grid.dp();
}

void require_coverage(const PhaseSpaceGrid& grid, double boundary_tol, const char* who) {
    const double b = boundary_max_abs(grid);
    if (b > boundary_tol)
        throw CoverageError(std::string(who) + ": boundary |W| = " + std::to_string(b) +
                            " exceeds " + std::to_string(boundary_tol) +
                            "; the grid does not cover the state");
}

}  // namespace

double integral_check(const PhaseSpaceGrid& grid, double boundary_tol) {
    require_coverage(grid, boundary_tol, "integral_check");
    return trapezoid_sum(grid, [](double w) { return w; });
}

double negativity_volume(const PhaseSpaceGrid& grid, double boundary_tol) {
    require_coverage(grid, boundary_tol, "negativity_volume");
    const double plain = trapezoid_sum(grid, [](double w) { return w; });
    const double absolute = trapezoid_sum(grid, [](double w) { return std::abs(w); });
    return absolute - plain;
}

std::vector<double> position_density(const FockVector& state, std::span<const double> xs) {
    const int d = state.dim();
    std::vector<double> out(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double xi = std::numbers::sqrt2 * xs[k];
        // Hermite functions phi_n(xi) by the stable two-term recurrence
        double prev = 0.0;
        double cur = std::pow(kPi, -0.25) * std::exp(-0.5 * xi * xi);
        Complex amp = state.amps()[0] * cur;
        for (int n = 0; n + 1 < d; ++n) {
            const double next =
                std::sqrt(2.0 / (n + 1.0)) * xi * cur - std::sqrt(double(n) / (n + 1.0)) * prev;
            prev = cur;
            cur = next;
            amp += state.amps()[n + 1] * cur;
        }
        out[k] = std::numbers::sqrt2 * std::norm(amp);
    }
    return out;
}

void write_grid(std::ostream& out, const PhaseSpaceGrid& grid, const std::string& params_line,
                const std::string& metrics_line) {
    out << "# wigner grid x=[" << format_real(grid.x_min) << "," << format_real(grid.x_max)
        << "] p=[" << format_real(grid.p_min) << "," << format_real(grid.p_max) << "]\n";
    out << "# nx=" << grid.nx << " np=" << grid.np << " (row i: x_i, column j: p_j)\n";
    out << "# params: " << params_line << '\n';
    out << "# metrics: " << metrics_line << '\n';
    for (int i = 0; i < grid.nx; ++i) {
        for (int j = 0; j < grid.np; ++j) {
            if (j) out << ' ';
            out << format_real(grid.values(i, j));
        }
        out << '\n';
    }
}

}  // namespace pvmcat
