#pragma once

// Special functions needed by the state, weight and phase-space code:
// log-gamma, Pochhammer symbols, generalized hypergeometric series, modified
// Bessel functions, the confluent functions M and U, and Gauss 2F1.
//
// Everything here is pure and reentrant; the only global state is the series
// term cap, which is an atomic read.

#include <complex>
#include <cstddef>
#include <vector>

namespace ghcs {

using cplx = std::complex<double>;

// Default cap on the number of terms any single series evaluation may use.
// Starts at 100000; the CLI overrides it from GHCS_MAX_TERMS.
std::size_t series_term_cap() noexcept;
void set_series_term_cap(std::size_t cap) noexcept;

struct SeriesOptions {
    double tol = 1e-12;                        // relative truncation tolerance
    std::size_t max_terms = series_term_cap();
    bool compensated = true;                   // Neumaier summation of the partial sums
    bool use_closed_forms = true;              // e.g. Gauss's theorem for 2F1 at unit argument
};

template <class T>
struct SeriesResult {
    T value{};
    std::size_t terms_used = 0;
    double tail_estimate = 0.0;  // bound on |value - exact| from truncation
    bool converged = false;
};

namespace specfun {

// ln|Gamma(x)| for real x that is not a non-positive integer.
double ln_gamma(double x);
// Sign of Gamma(x): +1 or -1. Throws DomainError at poles.
int gamma_sign(double x);
double gamma(double x);
// 1/Gamma(x); entire, exactly 0 at the poles of Gamma.
double rgamma(double x);
// Principal branch of log Gamma on C \ (-inf, 0]. For real negative arguments
// returns ln|Gamma(x)| + i*pi when Gamma(x) < 0 (so exp() reproduces Gamma).
cplx ln_gamma(cplx z);

// Gamma(num...)/Gamma(den...) for real arguments, evaluated in log space.
// A pole in the denominator yields 0; a pole in the numerator throws.
double gamma_ratio(const std::vector<double>& num, const std::vector<double>& den);

// (a)_n = a (a+1) ... (a+n-1) by explicit product.
double pochhammer(double a, unsigned n);
cplx pochhammer(cplx a, unsigned n);

bool is_nonpositive_integer(double x, double tol = 1e-12) noexcept;

// Generalized hypergeometric series pFq(a; b; x) summed by the term-ratio
// recurrence. On the unit circle with p = q + 1 the slowly convergent series is
// accelerated with a Levin u-transform (or Gauss's theorem for 2F1 at x = 1).
SeriesResult<double> pfq(const std::vector<double>& a, const std::vector<double>& b, double x,
                         const SeriesOptions& opts = {});
SeriesResult<cplx> pfq(const std::vector<cplx>& a, const std::vector<cplx>& b, cplx x,
                       const SeriesOptions& opts = {});

// Modified Bessel function of the first kind by its ascending series; nu > -1, x >= 0.
double bessel_i(double nu, double x);

// Modified Bessel function of the second kind, any real order, x > 0.
// Temme's series for x < 2, Steed's continued fraction otherwise, then
// forward recurrence in the order.
double bessel_k(double nu, double x);

// Kummer's confluent function M(a; b; x) = 1F1(a; b; x).
double kummer_m(double a, double b, double x, double tol = 1e-14);

// Tricomi's confluent function U(a; b; x), x > 0.
double tricomi_u(double a, double b, double x);

// Gauss hypergeometric function 2F1(a1, a2; b; x) for real arguments, -1 <= x <= 1.
SeriesResult<double> gauss_2f1(double a1, double a2, double b, double x, double tol = 1e-12);

// Gauss's theorem: 2F1(a1, a2; b; 1) = G(b) G(b-a1-a2) / (G(b-a1) G(b-a2)), b - a1 - a2 > 0.
double gauss_2f1_unit(double a1, double a2, double b);
cplx gauss_2f1_unit(cplx a1, cplx a2, cplx b);

}  // namespace specfun
}  // namespace ghcs
