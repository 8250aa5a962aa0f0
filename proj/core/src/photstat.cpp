#include "ghcs/photstat.hpp"

#include "ghcs/error.hpp"
#include "ghcs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace ghcs {
namespace {

using specfun::bessel_i;
using specfun::gauss_2f1;
using specfun::kummer_m;

DistributionSeries collect(const std::function<double(std::size_t)>& log_p, const PnOptions& opts,
                           std::string label) {
    DistributionSeries out;
    out.label = std::move(label);
    long double cumulative = 0.0L;
    double max_p = 0.0;
    double previous = 0.0;
    for (std::size_t n = 0; n <= opts.cap; ++n) {
        const double p = std::exp(log_p(n));
        out.grid.push_back(static_cast<double>(n));
        out.values.push_back(p);
        cumulative += p;
        max_p = std::max(max_p, p);
        const bool falling = n == 0 || p <= previous;
        previous = p;
        if (falling && cumulative >= 1.0L - opts.cumulative_tol && p < opts.relative_floor * max_p) {
            out.normalization_residual = std::abs(static_cast<double>(cumulative - 1.0L));
            return out;
        }
    }
    throw ConvergenceError("pn_distribution: cutoff cap " + std::to_string(opts.cap) +
                           " reached before the distribution was exhausted");
}

DistributionSeries vacuum(std::string label) {
    DistributionSeries out;
    out.label = std::move(label);
    out.grid = {0.0};
    out.values = {1.0};
    return out;
}

// log of prod_i |(a_i)_n| / prod_j |(b_j)_n| / n!, extended one step at a time.
class LogCoefficient {
public:
    LogCoefficient(std::vector<double> a, std::vector<double> b) : a_(std::move(a)), b_(std::move(b)) {}

    double operator()(std::size_t n) {
        while (values_.size() <= n) {
            const double k = static_cast<double>(values_.size() - 1);
            double next = values_.back() - std::log(k + 1.0);
            for (double v : a_) next += std::log(std::abs(v + k));
            for (double v : b_) next -= std::log(std::abs(v + k));
            values_.push_back(next);
        }
        return values_[n];
    }

private:
    std::vector<double> a_;
    std::vector<double> b_;
    std::vector<double> values_{0.0};
};

}  // namespace

DistributionSeries pn_distribution(const StateSpec& spec, const PnOptions& opts) {
    const double x = std::norm(spec.z);
    const std::string label = spec.params.label();
    if (x == 0.0) return vacuum(label);
    const double log_x = std::log(x);
    const double log_n = std::log(normalization(spec.params, x, 1e-15).value);
    std::vector<double> log_rho{0.0};
    auto log_p = [&](std::size_t n) {
        while (log_rho.size() <= n) log_rho.push_back(log_rho.back() + log_rho_step(spec.params, log_rho.size() - 1));
        return static_cast<double>(n) * log_x - log_rho[n] - log_n;
    };
    return collect(log_p, opts, label);
}

double factorial_moment(const ParameterSet& params, double x, unsigned k, double tol) {
    if (k == 0) return 1.0;
    if (x < 0.0) throw DomainError("factorial_moment: x must be non-negative");
    if (x == 0.0) return 0.0;
    cplx prefactor = std::pow(x, static_cast<double>(k));
    for (const cplx& v : params.a()) prefactor *= specfun::pochhammer(v, k);
    for (const cplx& v : params.b()) prefactor /= specfun::pochhammer(v, k);
    SeriesOptions so;
    so.tol = tol;
    const ParameterSet shifted = params.shifted(static_cast<double>(k));
    if (params.is_real()) {
        const double num = specfun::pfq(shifted.a_real(), shifted.b_real(), x, so).value;
        const double den = normalization(params, x, tol).value;
        return prefactor.real() * num / den;
    }
    const cplx num = specfun::pfq(shifted.a(), shifted.b(), cplx(x, 0.0), so).value;
    const double den = normalization(params, x, tol).value;
    return (prefactor * num).real() / den;
}

MeanMandel mean_and_mandel(const ParameterSet& params, double x, double tol) {
    MeanMandel out;
    if (x == 0.0) return out;
    out.mean = factorial_moment(params, x, 1, tol);
    const double second = factorial_moment(params, x, 2, tol);
    out.mandel_q = -out.mean + second / out.mean;
    return out;
}

PhotonStats photon_stats(const StateSpec& spec, const PnOptions& opts) {
    PhotonStats out;
    out.x = std::norm(spec.z);
    out.pn = pn_distribution(spec, opts);
    const MeanMandel mm = mean_and_mandel(spec.params, out.x);
    out.mean = mm.mean;
    out.mandel_q = mm.mandel_q;
    return out;
}

PhotonStats closed_form_stats(Family family, const ParameterSet& params, double x, const PnOptions& opts) {
    require_family(family, params);
    if (x < 0.0) throw DomainError("closed_form_stats: x must be non-negative");
    const std::vector<double> a = params.a_real();
    const std::vector<double> b = params.b_real();
    const std::string label = std::string(to_string(family)) + " " + params.label();

    PhotonStats out;
    out.x = x;
    if (x == 0.0) {
        out.pn = vacuum(label);
        return out;
    }
    const double log_x = std::log(x);
    switch (family) {
        case Family::CS: {
            out.pn = collect(
                [&](std::size_t n) { return n * log_x - std::lgamma(n + 1.0) - x; }, opts, label);
            out.mean = x;
            out.mandel_q = 0.0;
            break;
        }
        case Family::F01: {
            const double r = std::sqrt(x);
            const double bb = b[0];
            const double i_m = bessel_i(bb - 1.0, 2.0 * r);
            const double i_0 = bessel_i(bb, 2.0 * r);
            const double i_p = bessel_i(bb + 1.0, 2.0 * r);
            const double log_i = std::log(i_m);
            out.pn = collect(
                [&](std::size_t n) {
                    return (2.0 * n + bb - 1.0) * std::log(r) - specfun::ln_gamma(n + 1.0) -
                           specfun::ln_gamma(bb + n) - log_i;
                },
                opts, label);
            out.mean = r * i_0 / i_m;
            out.mandel_q = r * (i_p / i_0 - i_0 / i_m);
            break;
        }
        case Family::F11: {
            const double m0 = kummer_m(a[0], b[0], x);
            const double m1 = kummer_m(a[0] + 1.0, b[0] + 1.0, x);
            const double m2 = kummer_m(a[0] + 2.0, b[0] + 2.0, x);
            LogCoefficient coef(a, b);
            const double log_m0 = std::log(m0);
            out.pn = collect([&](std::size_t n) { return coef(n) + n * log_x - log_m0; }, opts, label);
            out.mean = x * (a[0] / b[0]) * m1 / m0;
            out.mandel_q = -out.mean + x * (a[0] + 1.0) / (b[0] + 1.0) * m2 / m1;
            break;
        }
        case Family::F10: {
            if (!(x < 1.0)) throw DivergenceError("closed_form_stats: F10 requires x < 1");
            const double log_norm = -a[0] * std::log1p(-x);
            LogCoefficient coef(a, b);
            out.pn = collect([&](std::size_t n) { return coef(n) + n * log_x - log_norm; }, opts, label);
            out.mean = a[0] * x / (1.0 - x);
            out.mandel_q = x / (1.0 - x);
            break;
        }
        case Family::F21: {
            const double f0 = gauss_2f1(a[0], a[1], b[0], x, 1e-15).value;
            const double f1 = gauss_2f1(a[0] + 1.0, a[1] + 1.0, b[0] + 1.0, x, 1e-15).value;
            const double f2 = gauss_2f1(a[0] + 2.0, a[1] + 2.0, b[0] + 2.0, x, 1e-15).value;
            LogCoefficient coef(a, b);
            const double log_f0 = std::log(f0);
            out.pn = collect([&](std::size_t n) { return coef(n) + n * log_x - log_f0; }, opts, label);
            out.mean = x * a[0] * a[1] / b[0] * f1 / f0;
            out.mandel_q = -out.mean + x * (a[0] + 1.0) * (a[1] + 1.0) / (b[0] + 1.0) * f2 / f1;
            break;
        }
    }
    return out;
}

}  // namespace ghcs
