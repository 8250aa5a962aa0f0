#pragma once

// Husimi distributions and phase distributions. A phase distribution is the
// Fourier series P(theta) = (1/2pi) sum rho_{n,n'} G(n,n') e^{-i(n-n') theta}
// whose kernel G depends on the analyzer: the Husimi analyzer, the
// Pegg-Barnett analyzer (G = 1) or a general hypergeometric parameter set.

#include "ghcs/parameters.hpp"
#include "ghcs/quadrature.hpp"
#include "ghcs/states.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace ghcs {

class Analyzer {
public:
    enum class Kind { Husimi, PeggBarnett, General };

    static Analyzer husimi();
    static Analyzer pegg_barnett();
    static Analyzer general(ParameterSet params);

    Kind kind() const noexcept { return kind_; }
    // (0;0) for the Husimi analyzer, (1;0) a = 1 for Pegg-Barnett.
    const ParameterSet& params() const noexcept { return params_; }
    std::string label() const;

private:
    Analyzer(Kind kind, ParameterSet params) : kind_(kind), params_(std::move(params)) {}
    Kind kind_;
    ParameterSet params_;
};

inline constexpr std::size_t kMaxGCutoff = 2048;

// Symmetric table G(n,n') = rho((n+n')/2) / sqrt(rho(n) rho(n')) for n, n' <= cutoff.
struct GCoefficientTable {
    ParameterSet analyzer;
    Eigen::MatrixXd table;

    std::size_t cutoff() const noexcept { return table.rows() == 0 ? 0 : static_cast<std::size_t>(table.rows() - 1); }
    double operator()(std::size_t n, std::size_t np) const { return table(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(np)); }
};

// Built from per-parameter log-gamma sums on the half-integer grid, so the
// diagonal is exactly 1. Throws OverflowError for cutoff > kMaxGCutoff and
// DomainError when a denominator parameter hits a gamma pole.
GCoefficientTable g_coefficients(const Analyzer& analyzer, std::size_t cutoff);

// Hermitian table rho_{n,n'}.
class DensityMatrix {
public:
    static DensityMatrix from_vector(const FockVector& psi);
    // Throws ParameterError when max |rho - rho^dagger| exceeds tol * max(1, max |rho|).
    static DensityMatrix from_matrix(Eigen::MatrixXcd rho, double tol = 1e-12);

    const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }
    std::size_t cutoff() const noexcept { return rho_.rows() == 0 ? 0 : static_cast<std::size_t>(rho_.rows() - 1); }

private:
    explicit DensityMatrix(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {}
    Eigen::MatrixXcd rho_;
};

struct PhaseGrid {
    double start = -std::numbers::pi;
    std::size_t count = 721;  // samples on [start, start + 2 pi], both ends included

    std::vector<double> thetas() const;
};

struct PhaseDistribution {
    std::string label;
    std::vector<double> theta;
    std::vector<double> values;
    double normalization_residual = 0.0;  // |trapezoid integral - 1|
};

PhaseDistribution phase_distribution(const FockVector& signal, const Analyzer& analyzer, const PhaseGrid& grid = {});
PhaseDistribution phase_distribution(const DensityMatrix& signal, const Analyzer& analyzer,
                                     const PhaseGrid& grid = {});

// Coefficients C_m = sum_n rho_{n+m,n} G(n+m,n) for m = 0..cutoff.
std::vector<cplx> phase_fourier_coefficients(const DensityMatrix& signal, const GCoefficientTable& g);

// (1/pi) |<alpha|psi>|^2 with the ordinary coherent state |alpha>.
double husimi_q(const FockVector& signal, cplx alpha);

// (1/pi) w(|z|^2) |<p;q;z|psi>|^2 for an analyzer with a closed-form weight
// (after coalescence). Throws ParameterError otherwise and DomainError for z
// outside the open support.
double gh_husimi(const FockVector& signal, const ParameterSet& analyzer, cplx z);

// Closed form of gh_husimi when the signal is the state |p;q;z_signal> of the
// same parameter set: (1/pi) w(|z|^2) |N(conj(z) z_signal)|^2 / (N(|z|^2) N(|z_signal|^2)).
double self_dual_husimi(const ParameterSet& params, cplx z, cplx z_signal);

struct RadialPhaseReport {
    std::vector<double> theta;
    std::vector<double> radial;    // 1/2 int_0^R dx gh_husimi(sqrt(x) e^{i theta})
    std::vector<double> g_series;  // phase_distribution with the same analyzer
    double max_deviation = 0.0;
    bool converged = true;
};

// Compares the radial integral of gh_husimi with the G-coefficient series.
RadialPhaseReport radial_phase_check(const FockVector& signal, const ParameterSet& analyzer, const PhaseGrid& grid,
                                     const quad::Options& opts = {});

}  // namespace ghcs
