#pragma once

// Lowering and raising operators U, U^dagger with (U v)_n = f(n) v_{n+1},
// f(n) = sqrt((n+1) prod (n + b) / prod (n + a)), acting on truncated vectors.

#include "ghcs/parameters.hpp"
#include "ghcs/states.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace ghcs {

// f(n) for n >= -1; f(-1) = 0.
double f_coeff(const ParameterSet& params, long n);

// f(0) .. f(n_max), computed once and read-only afterwards.
class LadderCoefficients {
public:
    LadderCoefficients(ParameterSet params, std::size_t n_max);

    const ParameterSet& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return f_.size(); }
    // f(n) for -1 <= n <= n_max.
    double operator()(long n) const;

private:
    ParameterSet params_;
    std::vector<double> f_;
};

// Lowers the cutoff by one; tail_bound becomes f(N)^2 times the input tail.
FockVector apply_lowering(const ParameterSet& params, const FockVector& v);

// Raises the cutoff by one. Throws DomainError when the new cutoff exceeds cap.
FockVector apply_raising(const ParameterSet& params, const FockVector& v, std::size_t cap = 4096);

// f(n)^2 - f(n-1)^2, the diagonal of [U, U^dagger].
double commutator_diagonal(const ParameterSet& params, std::size_t n);

// ||U v - z v|| for v = fock_vector(spec) at tail tolerance tol. The truncated
// vector lacks v_{N+1}, so the last component contributes |z v_N|; the
// residual is therefore of order |z| sqrt(tail_bound).
double eigenvalue_residual(const StateSpec& spec, double tol);

struct HermitianMatrices {
    Eigen::MatrixXcd Q;  // (U^dagger + U) / sqrt(2)
    Eigen::MatrixXcd P;  // i (U^dagger - U) / sqrt(2)
    Eigen::MatrixXcd C;  // (U^dagger + U) / 2
    Eigen::MatrixXcd S;  // i (U^dagger - U) / 2
};

// (N+1) x (N+1) lowering matrix, U(n, n+1) = f(n).
Eigen::MatrixXd lowering_matrix(const ParameterSet& params, std::size_t cutoff);

// Dense truncations for 1 <= cutoff <= 512.
HermitianMatrices hermitian_matrices(const ParameterSet& params, std::size_t cutoff);

}  // namespace ghcs
