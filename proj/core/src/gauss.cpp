#include "ghcs/error.hpp"
#include "ghcs/quadrature.hpp"
#include "ghcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ghcs::specfun {
namespace {

// Distance of c - a - b from an integer below which the (1 - x) connection
// formula loses too many digits to cancellation.
constexpr double kNearIntegerGap = 1e-5;

SeriesResult<double> direct(double a, double b, double c, double x, double tol) {
    SeriesOptions opts;
    opts.tol = tol;
    return pfq({a, b}, {c}, x, opts);
}

// Connection formula to 1 - x; c - a - b must be away from the integers.
SeriesResult<double> connect_one_minus_x(double a, double b, double c, double x, double tol) {
    const double d = c - a - b;
    const double y = 1.0 - x;
    const double coef1 = gamma_ratio({c, d}, {c - a, c - b});
    const double coef2 = gamma_ratio({c, -d}, {a, b});
    SeriesResult<double> out;
    out.converged = true;
    if (coef1 != 0.0) {
        const auto f1 = direct(a, b, 1.0 - d, y, tol);
        out.value += coef1 * f1.value;
        out.tail_estimate += std::abs(coef1) * f1.tail_estimate;
        out.terms_used += f1.terms_used;
    }
    if (coef2 != 0.0) {
        const auto f2 = direct(c - a, c - b, 1.0 + d, y, tol);
        const double scale = coef2 * std::pow(y, d);
        out.value += scale * f2.value;
        out.tail_estimate += std::abs(scale) * f2.tail_estimate;
        out.terms_used += f2.terms_used;
    }
    return out;
}

// Euler's integral, c > b > 0:
// 2F1(a, b; c; x) = G(c) / (G(b) G(c-b)) int_0^1 t^(b-1) (1-t)^(c-b-1) (1 - x t)^-a dt.
SeriesResult<double> euler_integral(double a, double b, double c, double x, double tol) {
    const double pb = b - 1.0;
    const double pc = c - b - 1.0;
    auto integrand = [=](double t, double tc) {
        double log_f = -a * std::log((1.0 - x) + x * tc);
        if (pb != 0.0) log_f += pb * std::log(t);
        if (pc != 0.0) log_f += pc * std::log(tc);
        return std::exp(log_f);
    };
    quad::Options opts;
    opts.rel_tol = std::max(tol, 1e-14);
    const quad::Result r =
        quad::integrate_unit(integrand, opts, quad::grading_power(std::min({0.0, pb, pc})));
    const double pre = gamma_ratio({c}, {b, c - b});
    SeriesResult<double> out;
    out.value = pre * r.value;
    out.tail_estimate = std::abs(pre) * r.error;
    out.terms_used = r.evaluations;
    out.converged = r.converged;
    return out;
}

SeriesResult<double> near_unit(double a, double b, double c, double x, double tol) {
    const double d = c - a - b;
    if (std::abs(d - std::round(d)) > kNearIntegerGap) return connect_one_minus_x(a, b, c, x, tol);
    if (is_nonpositive_integer(c - a, 0.0) || is_nonpositive_integer(c - b, 0.0)) {
        // Euler: 2F1(a, b; c; x) = (1 - x)^(c-a-b) 2F1(c-a, c-b; c; x), a polynomial here.
        auto poly = direct(c - a, c - b, c, x, tol);
        const double scale = std::pow(1.0 - x, d);
        poly.value *= scale;
        poly.tail_estimate *= std::abs(scale);
        return poly;
    }
    if (c > b && b > 0.0) return euler_integral(a, b, c, x, tol);
    if (c > a && a > 0.0) return euler_integral(b, a, c, x, tol);
    // Symmetric perturbation of c with one Richardson step removes the O(eps^2) bias.
    const double eps = 1e-3;
    auto avg = [&](double e) {
        return 0.5 * (connect_one_minus_x(a, b, c + e, x, tol).value +
                      connect_one_minus_x(a, b, c - e, x, tol).value);
    };
    SeriesResult<double> out;
    const double fine = avg(eps);
    const double coarse = avg(2.0 * eps);
    out.value = (4.0 * fine - coarse) / 3.0;
    out.tail_estimate = std::abs(fine - coarse) * 1e-3 + 1e-12 * std::abs(out.value);
    out.converged = true;
    out.terms_used = 4;
    return out;
}

}  // namespace

double gauss_2f1_unit(double a1, double a2, double b) {
    if (!(b - a1 - a2 > 0.0)) {
        throw DivergenceError("2F1 at unit argument requires b - a1 - a2 > 0");
    }
    return gamma_ratio({b, b - a1 - a2}, {b - a1, b - a2});
}

cplx gauss_2f1_unit(cplx a1, cplx a2, cplx b) {
    const cplx d = b - a1 - a2;
    if (!(d.real() > 0.0)) {
        throw DivergenceError("2F1 at unit argument requires Re(b - a1 - a2) > 0");
    }
    for (const cplx& den : {b - a1, b - a2}) {
        if (den.imag() == 0.0 && is_nonpositive_integer(den.real(), 0.0)) return 0.0;
    }
    return std::exp(ln_gamma(b) + ln_gamma(d) - ln_gamma(b - a1) - ln_gamma(b - a2));
}

SeriesResult<double> gauss_2f1(double a1, double a2, double b, double x, double tol) {
    if (x > 1.0 || x < -1.0) {
        throw DivergenceError("gauss_2f1: argument outside [-1, 1]");
    }
    if (is_nonpositive_integer(a1, 0.0) || is_nonpositive_integer(a2, 0.0)) {
        return direct(a1, a2, b, x, tol);
    }
    if (is_nonpositive_integer(b, 0.0)) {
        throw DomainError("gauss_2f1: b is a non-positive integer");
    }
    if (x == 1.0) {
        SeriesResult<double> out;
        out.value = gauss_2f1_unit(a1, a2, b);
        out.terms_used = 1;
        out.converged = true;
        return out;
    }
    if (x < -0.5) {
        // Pfaff: 2F1(a1, a2; b; x) = (1 - x)^-a1 2F1(a1, b - a2; b; x / (x - 1)).
        auto inner = gauss_2f1(a1, b - a2, b, x / (x - 1.0), tol);
        const double scale = std::pow(1.0 - x, -a1);
        inner.value *= scale;
        inner.tail_estimate *= std::abs(scale);
        return inner;
    }
    if (x <= 0.5) return direct(a1, a2, b, x, tol);
    return near_unit(a1, a2, b, x, tol);
}

}  // namespace ghcs::specfun
