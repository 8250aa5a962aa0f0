#include "ghcs/error.hpp"
#include "ghcs/specfun.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace ghcs::specfun {
namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<long double, 10> kStirling = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
};

constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639861L;
constexpr double kStirlingThreshold = 15.0;

long double stirling_real(long double x) {
    const long double inv = 1.0L / x;
    const long double inv2 = inv * inv;
    long double series = 0.0L;
    long double power = inv;
    for (long double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (x - 0.5L) * std::log(x) - x + kHalfLog2Pi + series;
}

// ln Gamma(x) for x > 0, in extended precision.
long double ln_gamma_positive(long double x) {
    if (x >= kStirlingThreshold) return stirling_real(x);
    long double shift = 1.0L;
    while (x < kStirlingThreshold) {
        shift *= x;
        x += 1.0L;
    }
    return stirling_real(x) - std::log(shift);
}

// sin(pi x) with argument reduction so that integers give exact zeros.
double sin_pi(double x) {
    const double n = std::round(x);
    const double r = x - n;
    const double s = std::sin(std::numbers::pi * r);
    return (static_cast<long long>(n) % 2 == 0) ? s : -s;
}

void require_not_pole(double x) {
    if (x <= 0.0 && x == std::floor(x)) {
        throw DomainError("Gamma has a pole at x = " + describe(x));
    }
}

cplx stirling_complex(cplx z) {
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx series = 0.0;
    cplx power = inv;
    for (long double c : kStirling) {
        series += static_cast<double>(c) * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + static_cast<double>(kHalfLog2Pi) + series;
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) noexcept {
    const double r = std::round(x);
    return r <= 0.0 && std::abs(x - r) <= tol;
}

double ln_gamma(double x) {
    require_not_pole(x);
    if (x >= 1.0 && x <= 21.0 && x == std::floor(x)) {
        // (x-1)! is exact in 64 bits here, so ln_gamma(1) = ln_gamma(2) = 0 exactly.
        std::uint64_t f = 1;
        for (auto k = static_cast<std::uint64_t>(x) - 1; k > 1; --k) f *= k;
        return static_cast<double>(std::log(static_cast<long double>(f)));
    }
    if (x > 0.0) return static_cast<double>(ln_gamma_positive(x));
    // Reflection: |Gamma(x)| = pi / (|sin(pi x)| Gamma(1 - x)).
    const long double s = std::abs(sin_pi(x));
    return static_cast<double>(std::log(std::numbers::pi_v<long double> / s) -
                               ln_gamma_positive(1.0L - x));
}

int gamma_sign(double x) {
    require_not_pole(x);
    if (x > 0.0) return 1;
    // Gamma alternates sign between consecutive negative integers; negative on (-1, 0).
    const auto k = static_cast<long long>(std::floor(x));
    return (k % 2 == 0) ? 1 : -1;
}

double gamma(double x) {
    return gamma_sign(x) * std::exp(ln_gamma(x));
}

double rgamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    return gamma_sign(x) * std::exp(-ln_gamma(x));
}

cplx ln_gamma(cplx z) {
    if (z.imag() == 0.0) {
        const double x = z.real();
        const double lg = ln_gamma(x);
        return {lg, gamma_sign(x) < 0 ? std::numbers::pi : 0.0};
    }
    // Recurrence up to Re(z) >= threshold keeps the principal branch:
    // lnG(z) = lnG(z + k) - sum log(z + j) with principal logs.
    cplx shift_log = 0.0;
    cplx w = z;
    while (w.real() < kStirlingThreshold) {
        shift_log += std::log(w);
        w += 1.0;
    }
    return stirling_complex(w) - shift_log;
}

double gamma_ratio(const std::vector<double>& num, const std::vector<double>& den) {
    for (double d : den) {
        if (d <= 0.0 && d == std::floor(d)) return 0.0;
    }
    double log_sum = 0.0;
    int sign = 1;
    for (double n : num) {
        log_sum += ln_gamma(n);
        sign *= gamma_sign(n);
    }
    for (double d : den) {
        log_sum -= ln_gamma(d);
        sign *= gamma_sign(d);
    }
    return sign * std::exp(log_sum);
}

double pochhammer(double a, unsigned n) {
    double r = 1.0;
    for (unsigned k = 0; k < n; ++k) r *= a + k;
    return r;
}

cplx pochhammer(cplx a, unsigned n) {
    cplx r = 1.0;
    for (unsigned k = 0; k < n; ++k) r *= a + static_cast<double>(k);
    return r;
}

}  // namespace ghcs::specfun
