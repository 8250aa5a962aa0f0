#pragma once

// Independent reference implementations for the unit tests. None of them share
// code with the library: series are summed term by term in long double from
// explicit products, and the closed forms come from libstdc++ special functions.

#define __STDCPP_WANT_MATH_SPEC_FUNCS__ 1
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ghcs/parameters.hpp"

namespace oracle {

using cplx = std::complex<double>;
using lcplx = std::complex<long double>;

inline long double poch(long double a, unsigned n) {
    long double p = 1.0L;
    for (unsigned k = 0; k < n; ++k) p *= a + k;
    return p;
}

// sum_n prod (a)_n / prod (b)_n x^n / n!, each term built from scratch.
inline long double pfq(const std::vector<double>& a, const std::vector<double>& b, long double x,
                       unsigned terms = 400) {
    long double sum = 0.0L;
    for (unsigned n = 0; n < terms; ++n) {
        long double t = std::pow(x, static_cast<long double>(n)) / std::tgamma(static_cast<long double>(n) + 1.0L);
        for (double v : a) t *= poch(v, n);
        for (double v : b) t /= poch(v, n);
        sum += t;
        if (n > 10 && std::abs(t) < 1e-22L * std::abs(sum)) break;
    }
    return sum;
}

inline lcplx pfq(const std::vector<cplx>& a, const std::vector<cplx>& b, lcplx x, unsigned terms = 600) {
    lcplx sum = 0.0L;
    lcplx xn = 1.0L;
    long double fact = 1.0L;
    for (unsigned n = 0; n < terms; ++n) {
        if (n > 0) {
            xn *= x;
            fact *= n;
        }
        lcplx t = xn / fact;
        for (const cplx& v : a) {
            lcplx p = 1.0L;
            for (unsigned k = 0; k < n; ++k) p *= lcplx(v) + static_cast<long double>(k);
            t *= p;
        }
        for (const cplx& v : b) {
            lcplx p = 1.0L;
            for (unsigned k = 0; k < n; ++k) p *= lcplx(v) + static_cast<long double>(k);
            t /= p;
        }
        sum += t;
        if (n > 10 && std::abs(t) < 1e-22L * std::abs(sum)) break;
    }
    return sum;
}

// rho(n) = n! prod (b)_n / prod (a)_n from its definition.
inline long double rho(const std::vector<cplx>& a, const std::vector<cplx>& b, unsigned n) {
    lcplx r = std::tgamma(static_cast<long double>(n) + 1.0L);
    for (const cplx& v : b) {
        for (unsigned k = 0; k < n; ++k) r *= lcplx(v) + static_cast<long double>(k);
    }
    for (const cplx& v : a) {
        for (unsigned k = 0; k < n; ++k) r /= lcplx(v) + static_cast<long double>(k);
    }
    return r.real();
}

// I_nu(x) for any real order; libstdc++ only accepts nu >= 0, so negative
// orders go through I_{-v} = I_v + (2/pi) sin(v pi) K_v.
inline double bessel_i(double nu, double x) {
    if (nu >= 0.0) return std::cyl_bessel_i(nu, x);
    const double v = -nu;
    return std::cyl_bessel_i(v, x) + 2.0 / M_PI * std::sin(v * M_PI) * std::cyl_bessel_k(v, x);
}

inline double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Fixed-seed generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    cplx point(double r_max) { return std::polar(r_max * std::sqrt(uniform(0.0, 1.0)), uniform(-M_PI, M_PI)); }

    // Random admissible real parameter set of shape (p;q) with entries in
    // (0.1, 6); about a third of the sets also carry a negative pair.
    ghcs::ParameterSet real_params(std::size_t p, std::size_t q) {
        std::vector<ghcs::cplx> a, b;
        for (std::size_t i = 0; i < p; ++i) a.emplace_back(uniform(0.1, 6.0), 0.0);
        for (std::size_t j = 0; j < q; ++j) b.emplace_back(uniform(0.1, 6.0), 0.0);
        if (p > 0 && q > 0 && integer(0, 2) == 0) {
            const double base = -static_cast<double>(integer(0, 2));
            a[0] = {base - uniform(0.05, 0.95), 0.0};
            b[0] = {base - uniform(0.05, 0.95), 0.0};
        }
        return ghcs::ParameterSet::make(a, b);
    }

    // Random FockVector with cutoff n, normalized to one.
    std::vector<cplx> unit_coefficients(std::size_t n) {
        std::vector<cplx> c(n + 1);
        double norm = 0.0;
        for (auto& v : c) {
            v = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            norm += std::norm(v);
        }
        for (auto& v : c) v /= std::sqrt(norm);
        return c;
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
