#include "ghcs/weights.hpp"

#include "ghcs/error.hpp"
#include "ghcs/specfun.hpp"
#include "ghcs/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ghcs {
namespace {

using specfun::bessel_i;
using specfun::bessel_k;
using specfun::gamma_ratio;
using specfun::gauss_2f1;
using specfun::ln_gamma;
using specfun::tricomi_u;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr unsigned kLogGrading = 4;

struct Signed {
    double log_abs;
    int sign;
    double value() const { return sign * std::exp(log_abs); }
};

Signed from_value(double v) { return {std::log(std::abs(v)), v < 0.0 ? -1 : 1}; }

// log |w~| and sign, given x and its complement xc = 1 - x (used on the disk).
Signed reduced_log(Family family, const std::vector<double>& a, const std::vector<double>& b, double x,
                   double xc) {
    switch (family) {
        case Family::CS:
            return {-x, 1};
        case Family::F01: {
            const double nu = b[0] - 1.0;
            if (x == 0.0) {
                if (nu <= 0.0) return {kInf, 1};
                return {-std::log(nu), 1};
            }
            const double k = bessel_k(nu, 2.0 * std::sqrt(x));
            return {std::numbers::ln2 + 0.5 * nu * std::log(x) + std::log(k) - ln_gamma(b[0]), 1};
        }
        case Family::F11: {
            if (x == 0.0) throw DomainError("F11 reduced weight is evaluated for x > 0 only");
            const double u = tricomi_u(a[0] - b[0], 2.0 - b[0], x);
            const int sign = (u < 0.0 ? -1 : 1) * specfun::gamma_sign(a[0]) * specfun::gamma_sign(b[0]);
            return {ln_gamma(a[0]) - ln_gamma(b[0]) - x + std::log(std::abs(u)), sign};
        }
        case Family::F10:
            return {std::log(a[0] - 1.0) + (a[0] - 2.0) * std::log(xc), 1};
        case Family::F21: {
            const double s = a[0] + a[1] - b[0];
            const double pre = gamma_ratio({a[0], a[1]}, {b[0], s - 1.0});
            const double f = gauss_2f1(a[1] - b[0], a[0] - b[0], s - 1.0, xc, 1e-14).value;
            Signed out = from_value(pre * f);
            out.log_abs += (s - 2.0) * std::log(xc);
            return out;
        }
    }
    throw DomainError("unknown family");
}

void check_argument(Family family, double x) {
    if (!(x >= 0.0) || !(x < support_radius(family))) {
        throw DomainError(std::string("weight argument outside [0, R) for family ") + to_string(family));
    }
}

// Exponents alpha of x^alpha at the endpoints (0 and, on the disk, 1);
// NaN marks a logarithmic singularity.
std::pair<double, double> endpoint_exponents(Family family, const std::vector<double>& a,
                                             const std::vector<double>& b) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    switch (family) {
        case Family::CS: return {0.0, 0.0};
        case Family::F01:
        case Family::F11: {
            if (b[0] == 1.0) return {nan, 0.0};
            return {std::min(0.0, b[0] - 1.0), 0.0};
        }
        case Family::F10: return {0.0, a[0] - 2.0};
        case Family::F21: {
            const double at_zero = b[0] == 1.0 ? nan : std::min(0.0, b[0] - 1.0);
            return {at_zero, a[0] + a[1] - b[0] - 2.0};
        }
    }
    return {0.0, 0.0};
}

unsigned grading_for(double alpha) {
    if (std::isnan(alpha)) return kLogGrading;
    return quad::grading_power(alpha);
}

}  // namespace

double support_radius(Family family) noexcept {
    return (family == Family::F10 || family == Family::F21) ? 1.0 : kInf;
}

void check_weight_preconditions(Family family, const ParameterSet& params) {
    require_family(family, params);
    const std::vector<double> a = params.a_real();
    const std::vector<double> b = params.b_real();
    switch (family) {
        case Family::CS:
        case Family::F11:
            return;
        case Family::F01:
            if (!(b[0] > 0.0)) throw ParameterError("F01 weight requires b > 0");
            return;
        case Family::F10:
            if (!(a[0] > 1.0)) throw ParameterError("F10 weight requires a > 1");
            return;
        case Family::F21:
            if (!(a[0] + a[1] - b[0] > 1.0)) throw ParameterError("F21 weight requires a1 + a2 - b > 1");
            return;
    }
}

double reduced_weight(Family family, const ParameterSet& params, double x) {
    check_weight_preconditions(family, params);
    check_argument(family, x);
    return reduced_log(family, params.a_real(), params.b_real(), x, 1.0 - x).value();
}

double weight(Family family, const ParameterSet& params, double x) {
    check_weight_preconditions(family, params);
    check_argument(family, x);
    const std::vector<double> a = params.a_real();
    const std::vector<double> b = params.b_real();
    switch (family) {
        case Family::CS:
            return 1.0;
        case Family::F01: {
            if (x == 0.0) return reduced_log(family, a, b, x, 1.0).value();
            const double y = 2.0 * std::sqrt(x);
            return 2.0 * bessel_i(b[0] - 1.0, y) * bessel_k(b[0] - 1.0, y);
        }
        case Family::F10:
            return (a[0] - 1.0) / ((1.0 - x) * (1.0 - x));
        case Family::F11:
        case Family::F21:
            return reduced_log(family, a, b, x, 1.0 - x).value() * normalization(params, x, 1e-14).value;
    }
    throw DomainError("unknown family");
}

Family weight_family(const ParameterSet& params) {
    const ParameterSet r = params.reduced();
    const auto f = shape_family(r);
    if (!f || !r.is_real()) {
        throw ParameterError("no closed-form weight for " + params.label());
    }
    return *f;
}

double weight_for(const ParameterSet& params, double x) {
    return weight(weight_family(params), params.reduced(), x);
}

double reduced_weight_for(const ParameterSet& params, double x) {
    return reduced_weight(weight_family(params), params.reduced(), x);
}

namespace {

// int_0^R h(x, log w~, sign) dx with the grading suited to the family's endpoints.
template <class H>
quad::Result integrate_graded(Family family, const ParameterSet& params, H h, const quad::Options& opts) {
    check_weight_preconditions(family, params);
    const std::vector<double> a = params.a_real();
    const std::vector<double> b = params.b_real();
    const auto [alpha0, alpha1] = endpoint_exponents(family, a, b);
    if (support_radius(family) == kInf) {
        auto f = [&](double x) { return h(x, reduced_log(family, a, b, x, 1.0 - x)); };
        return quad::integrate_half_line(f, opts, grading_for(alpha0));
    }
    auto f = [&](double x, double xc) { return h(x, reduced_log(family, a, b, x, xc)); };
    return quad::integrate_unit(f, opts, std::max(grading_for(alpha0), grading_for(alpha1)));
}

}  // namespace

quad::Result weighted_moment(Family family, const ParameterSet& params, double n, const quad::Options& opts) {
    auto h = [n](double x, const Signed& w) {
        const double l = (n == 0.0 ? 0.0 : n * std::log(x)) + w.log_abs;
        return w.sign * std::exp(l);
    };
    return integrate_graded(family, params, h, opts);
}

quad::Result integrate_against_weight(Family family, const ParameterSet& params,
                                      const std::function<double(double)>& g, const quad::Options& opts) {
    auto h = [&g](double x, const Signed& w) {
        const double wv = w.value();
        if (wv == 0.0) return 0.0;
        const double out = g(x) * wv;
        return std::isfinite(out) ? out : 0.0;
    };
    return integrate_graded(family, params, h, opts);
}

MomentReport moment_check(Family family, const ParameterSet& params, std::size_t n_max, const quad::Options& opts) {
    check_weight_preconditions(family, params);
    MomentReport report;
    report.family = family;
    report.params = params;
    const std::vector<double> log_rho = log_rho_table(params, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const quad::Result r = weighted_moment(family, params, static_cast<double>(n), opts);
        MomentRecord rec;
        rec.n = n;
        rec.quadrature = r.value;
        rec.rho = std::exp(log_rho[n]);
        rec.rel_error = std::abs(r.value - rec.rho) / rec.rho;
        rec.quad_error = r.error;
        report.records.push_back(rec);
        report.max_rel_error = std::max(report.max_rel_error, rec.rel_error);
        report.converged = report.converged && r.converged;
    }
    return report;
}

PositivityReport positivity_scan(Family family, const ParameterSet& params, std::size_t grid_size) {
    check_weight_preconditions(family, params);
    if (grid_size < 2) grid_size = 2;
    PositivityReport out;
    out.min_value = kInf;
    const bool disk = support_radius(family) == 1.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(grid_size - 1);
        double x;
        if (disk) {
            // Logistic spacing: dense towards both 0 and 1.
            const double u = -14.0 + 28.0 * t;
            x = 1.0 / (1.0 + std::exp(-u));
        } else {
            x = std::pow(10.0, -8.0 + 11.0 * t);
        }
        if (!(x < support_radius(family))) continue;
        const double w = weight(family, params, x);
        ++out.samples;
        if (w < out.min_value) {
            out.min_value = w;
            out.argmin = x;
        }
    }
    out.negative = out.min_value < 0.0;
    return out;
}

CircleWeightOutcome circle_weight_attempt(const ParameterSet& params) {
    if (params.p() != params.q() + 1) {
        throw ParameterError("circle states need p = q + 1, got " + params.label());
    }
    CircleWeightOutcome out;
    const ParameterSet r = params.reduced();
    if (r.p() == 1 && r.q() == 0 && std::abs(r.a()[0] - cplx(1.0, 0.0)) <= 1e-12) {
        out.resolves_unity = true;
        out.reduced_weight = 1.0 / (2.0 * std::numbers::pi);
        out.reason = "phase states: rho(n) = 1 for all n, constant angular weight 1/(2 pi)";
        return out;
    }
    out.resolves_unity = false;
    out.reduced_weight = std::numeric_limits<double>::quiet_NaN();
    out.reason =
        "no weight function on the unit circle: orthogonality of the angular moments forces a constant "
        "w~(phi), which cannot reproduce the non-constant rho(n) of " +
        params.label();
    return out;
}

}  // namespace ghcs
