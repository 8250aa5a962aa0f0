#pragma once

// Wave functions of arbitrary states in the basis of generalized
// hypergeometric coherent states, the associated analytic representation
// Psi~(zeta) = sum zeta^n psi_n / sqrt(rho(n)), and inner products
// reconstructed through the measure dmu = w~(|zeta|^2) d^2zeta / pi.

#include "ghcs/parameters.hpp"
#include "ghcs/quadrature.hpp"
#include "ghcs/states.hpp"

#include <vector>

namespace ghcs {

// sum_n zeta^n psi_n / sqrt(rho(n)) over the cutoff of psi, with log rho(n)
// supplied by the caller (log_rho.size() must exceed psi.cutoff()).
cplx analytic_series(const std::vector<double>& log_rho, const FockVector& psi, cplx zeta);

struct AnalyticSample {
    cplx zeta;
    cplx value;
    ParameterSet params;
    // Cauchy-Schwarz bound on the discarded terms:
    // sqrt(psi.tail_bound * N(|zeta|^2)); infinite for an unbounded tail.
    double tail_bound = 0.0;
};

// Entire for p < q + 1; requires |zeta| < 1 for p = q + 1 (DivergenceError otherwise).
AnalyticSample analytic_rep(const ParameterSet& params, const FockVector& psi, cplx zeta);

// sqrt(w(|z|^2)) <p;q;z|psi> = sqrt(w~(|z|^2)) Psi~(conj z). Needs a closed-form
// weight (ParameterError otherwise) and z inside the open support (DomainError).
cplx ghcs_wavefunction(const ParameterSet& params, const FockVector& psi, cplx z);

struct MeasureInnerProduct {
    cplx value;
    double error = 0.0;  // radial integrator error estimate, real and imaginary parts combined
    std::size_t angular_points = 0;
};

// int dmu(zeta) conj(Phi~(zeta)) Psi~(zeta), radial quadrature from the weights
// module times a uniform angular rule with max(64, 2N + 1) points, which is exact
// for the trigonometric polynomials at fixed radius. Throws ConvergenceError when
// the radial integrator does not converge.
MeasureInnerProduct inner_product_via_measure(const ParameterSet& params, const FockVector& phi, const FockVector& psi,
                                              const quad::Options& opts = {});

}  // namespace ghcs
