#include "ghcs/error.hpp"
#include "ghcs/quadrature.hpp"
#include "ghcs/specfun.hpp"

#include <cmath>
#include <string>

namespace ghcs::specfun {
namespace {

// U(-n, b, x) = (-1)^n sum_k C(n,k) (b+k)_{n-k} (-x)^k; valid for every b.
double tricomi_polynomial(int n, double b, double x) {
    double sum = 0.0;
    double binom = 1.0;
    double xpow = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += binom * pochhammer(b + k, static_cast<unsigned>(n - k)) * xpow;
        binom = binom * (n - k) / (k + 1);
        xpow *= -x;
    }
    return (n % 2 == 0) ? sum : -sum;
}

// Integral representations for a > 0:
//   U(a, b, x) = x^-a / G(a) int_0^inf e^-u u^(a-1) (1 + u/x)^(b-a-1) du
//             = 1 / G(a) int_0^inf e^(-x v) v^(a-1) (1 + v)^(b-a-1) dv.
// The first keeps the mass at u = O(1) for large x or b > 1; for small x and
// b <= 1 the mass of the first sits at u ~ x, so the second is used instead.
double tricomi_integral(double a, double b, double x) {
    const double pa = a - 1.0;
    const double pb = b - a - 1.0;
    const bool scaled = x >= 1.0 || b > 1.0;
    auto integrand = [=](double u) {
        double log_f = scaled ? -u : -x * u;
        if (pa != 0.0) log_f += pa * std::log(u);
        if (pb != 0.0) log_f += pb * (scaled ? std::log1p(u / x) : std::log1p(u));
        return std::exp(log_f);
    };
    quad::Options opts;
    opts.rel_tol = 1e-13;
    const unsigned power = quad::grading_power(std::min(0.0, pa));
    const quad::Result r = quad::integrate_half_line(integrand, opts, power);
    if (!r.converged && r.error > 1e-9 * std::abs(r.value)) {
        throw ConvergenceError("tricomi_u: integral representation did not converge");
    }
    const double log_pre = (scaled ? -a * std::log(x) : 0.0) - ln_gamma(a);
    return std::exp(log_pre) * r.value;
}

double tricomi_positive_or_poly(double a, double b, double x) {
    if (is_nonpositive_integer(a)) {
        return tricomi_polynomial(static_cast<int>(-std::round(a)), b, x);
    }
    return tricomi_integral(a, b, x);
}

}  // namespace

double kummer_m(double a, double b, double x, double tol) {
    const bool terminating = is_nonpositive_integer(a, 0.0);
    if (is_nonpositive_integer(b, 0.0) && !(terminating && a > b)) {
        throw DomainError("kummer_m: b is a non-positive integer");
    }
    if (x < 0.0 && !terminating) {
        // Kummer's transformation keeps the summed series free of cancellation.
        return std::exp(x) * kummer_m(b - a, b, -x, tol);
    }
    double term = 1.0;
    double sum = 1.0;
    int small = 0;
    const double scale = std::abs(a) + std::abs(b);
    for (int k = 0; k < 1000000; ++k) {
        term *= (a + k) * x / ((b + k) * (k + 1));
        sum += term;
        if (term == 0.0) return sum;
        small = (std::abs(term) <= tol * std::abs(sum)) ? small + 1 : 0;
        if (small >= 3 && k > scale && k > x) return sum;
    }
    throw ConvergenceError("kummer_m: series did not converge");
}

double tricomi_u(double a, double b, double x) {
    if (!(x > 0.0)) throw DomainError("tricomi_u: argument must be positive");
    if (is_nonpositive_integer(a)) {
        return tricomi_polynomial(static_cast<int>(-std::round(a)), b, x);
    }
    const double a2 = a - b + 1.0;  // U(a, b, x) = x^(1-b) U(a - b + 1, 2 - b, x)
    if (is_nonpositive_integer(a2)) {
        return std::pow(x, 1.0 - b) * tricomi_polynomial(static_cast<int>(-std::round(a2)), 2.0 - b, x);
    }
    if (b > 1.0 && a2 > 0.0) return std::pow(x, 1.0 - b) * tricomi_integral(a2, 2.0 - b, x);
    if (a > 0.0) return tricomi_integral(a, b, x);
    if (a2 > 0.0) return std::pow(x, 1.0 - b) * tricomi_integral(a2, 2.0 - b, x);

    // Both a and a - b + 1 negative: start from a + k, a + k + 1 > 0 and recur
    // downwards in a, the stable direction for the recessive solution U:
    // U(a) = -(b - 2a - 2 - x) U(a+1) - (a+1)(a - b + 2) U(a+2).
    const int k = static_cast<int>(std::ceil(-a)) + 1;
    double upper = tricomi_positive_or_poly(a + k + 1, b, x);
    double lower = tricomi_positive_or_poly(a + k, b, x);
    for (int j = k - 1; j >= 0; --j) {
        const double aj = a + j;
        const double next = -(b - 2.0 * aj - 2.0 - x) * lower - (aj + 1.0) * (aj - b + 2.0) * upper;
        upper = lower;
        lower = next;
    }
    return lower;
}

}  // namespace ghcs::specfun
