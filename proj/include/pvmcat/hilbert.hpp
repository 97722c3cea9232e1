#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "pvmcat/errors.hpp"

namespace pvmcat {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Numerical tolerances shared by the library, the CLI and the test suites.
struct Tolerances {
    double normalization = 1e-10;    // |<v|v> - 1| for states accepted as normalized
    double truncation_tail = 1e-12;  // tail mass accepted for converged states
    double unitarity = 1e-8;         // displacement unitarity on the guarded block
    double route_match = 1e-8;       // analytic vs oracle agreement
    double convergence = 1e-8;       // dim vs 2*dim agreement of scalar results
    double wigner_match = 1e-6;      // Wigner route agreement
};

// State vector over number states |0..dim-1>. Amplitudes are dimensionless.
class FockVector {
  public:
    explicit FockVector(Vector amps) : amps_(std::move(amps)) {
        if (amps_.size() < 2) throw InvalidDimensionError("FockVector needs dim >= 2");
    }

    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amps() const { return amps_; }
    double norm() const { return amps_.norm(); }

    // Mass carried by the top `band` amplitudes; the truncation convergence indicator.
    double tail_mass(int band) const;

    // Smallest s such that the mass above level s-1 is <= tail_tol.
    int support_dim(double tail_tol) const;

  private:
    Vector amps_;
};

// Dense dim x dim operator matrix.
class Operator {
  public:
    explicit Operator(Matrix entries) : entries_(std::move(entries)) {
        if (entries_.rows() != entries_.cols())
            throw InvalidDimensionError("Operator matrix must be square");
        if (entries_.rows() < 2) throw InvalidDimensionError("Operator needs dim >= 2");
    }

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Matrix& entries() const { return entries_; }

  private:
    Matrix entries_;
};

struct LadderOperators {
    Operator a;
    Operator a_dag;
    Operator n;
};

// Annihilation, creation and number operators; <m|a|n> = sqrt(n) [m == n-1].
LadderOperators ladder_operators(int dim);

// P = (i/2 sigma)(adag - a). Hermitian on the full truncated space.
Operator momentum_operator(int dim, double sigma);

// Displacement operator exp(mu adag - conj(mu) a), evaluated entrywise from the
// Laguerre closed form via its stable two-term recurrence (production path, O(dim^2)).
// Raises TruncationRiskError when even the displaced vacuum would spill past the cutoff.
Operator displacement(int dim, Complex mu);

// Cross-check construction by scaling-and-squaring matrix exponential of the
// truncated generator. Validation only: its upper block is corrupted by truncation.
Operator displacement_expm(int dim, Complex mu);

// Closed-form matrix element <m|D(mu)|n| via associated Laguerre polynomials.
// Intended for moderate m, n (test anchoring); the recurrence path is equivalent.
Complex displacement_element(int m, int n, Complex mu);

// Largest b such that every column n < b of the displacement block retains all but
// `tail_tol` of its mass (columns are unit vectors in the untruncated space).
// Truncation corrupts high columns, so guarded-block checks use this adaptively.
int displacement_clean_block(const Operator& disp, double tail_tol);

// D(mu)|state> embedded in a (possibly larger) space of dimension out_dim.
// The block entries are exact, so the result is exact wherever out_dim covers
// the displaced support.
Vector displaced_amplitudes(const FockVector& state, Complex mu, int out_dim);

// <v|Op|v>. Requires a normalized state and matching dimensions.
Complex expectation(const FockVector& state, const Operator& op);

// Unit-norm copy plus the original norm. NullStateError on a zero vector.
std::pair<FockVector, double> normalize(const FockVector& state);

// Upper tail P(X >= dim) of a Poisson(lambda) distribution; the mass a coherent
// state of mean photon number lambda carries past the cutoff.
double poisson_upper_tail(double lambda, int dim);

}  // namespace pvmcat
