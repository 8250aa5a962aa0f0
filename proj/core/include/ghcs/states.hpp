#pragma once

// The parameter function rho(n), the normalization function pFq(a; b; x) and
// truncated number-basis representations of generalized hypergeometric states.

#include "ghcs/parameters.hpp"
#include "ghcs/specfun.hpp"

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

namespace ghcs {

// rho(n) = n! prod (b)_n / prod (a)_n, built by the recurrence
// rho(n+1) = rho(n) (n+1) prod (b+n) / prod (a+n) in extended precision.
double log_rho(const ParameterSet& params, std::size_t n);
double rho(const ParameterSet& params, std::size_t n);  // throws OverflowError past DBL_MAX
std::vector<double> log_rho_table(const ParameterSet& params, std::size_t n_max);

// log rho(n+1) - log rho(n).
double log_rho_step(const ParameterSet& params, std::size_t n);

// rho at a real, possibly non-integer argument nu >= 0 through the gamma form
// Gamma(nu + 1) prod Gamma(b + nu)/Gamma(b) / prod Gamma(a + nu)/Gamma(a).
// Can vanish or change sign for admissible negative parameter pairs.
struct SignedLog {
    double log_abs = 0.0;  // -inf when the value is zero
    int sign = 1;
    double value() const;
};
SignedLog log_rho_general(const ParameterSet& params, double nu);

// pFq(a; b; x) at x = |z|^2. On the circle (x = 1, p = q + 1) requires eta < 0.
SeriesResult<double> normalization(const ParameterSet& params, double x, double tol = 1e-12);
// pFq(a; b; zeta) at a complex argument, as needed by overlaps.
SeriesResult<cplx> normalization(const ParameterSet& params, cplx zeta, double tol = 1e-12);

struct StateSpec {
    ParameterSet params;
    cplx z;
};

struct FockVector {
    std::vector<cplx> coeffs;  // c_0 .. c_N
    double tail_bound = 0.0;   // bound on sum_{n > N} |c_n|^2
    bool normalized = true;
    std::string warning;

    std::size_t cutoff() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    double norm_squared() const;

    // |n> truncated at cutoff max(n, cutoff).
    static FockVector basis(std::size_t n, std::size_t cutoff = 0);
    static FockVector from_coefficients(std::vector<cplx> c);
};

// <u|v> = sum conj(u_n) v_n over the common support.
cplx inner(const FockVector& u, const FockVector& v);

struct FockOptions {
    double tol = 1e-12;                          // target for tail_bound
    std::size_t cap = 4096;                      // largest admissible cutoff
    std::size_t unnormalizable_cutoff = 512;     // fixed cutoff for eta >= 0 circle states
};

// c_n = z^n / sqrt(rho(n) N(|z|^2)) on the plane and disk, e^{in phi}/sqrt(rho(n) N(1))
// for normalizable circle states and e^{in phi}/sqrt(2 pi rho(n)) otherwise.
FockVector fock_vector(const StateSpec& spec, const FockOptions& opts = {});

// <z|z'> = N(conj(z) z') / sqrt(N(|z|^2) N(|z'|^2)).
cplx overlap(const ParameterSet& params, cplx z, cplx zp, double tol = 1e-12);

}  // namespace ghcs
