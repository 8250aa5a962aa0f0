#include "ghcs/states.hpp"

#include "ghcs/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ghcs {
namespace {

constexpr std::size_t kLookahead = 16;
const double kLogMax = std::log(std::numeric_limits<double>::max());

// Index beyond which the term ratios of the series are monotone in practice.
std::size_t monotone_start(const ParameterSet& params) {
    double scale = 0.0;
    for (const cplx& v : params.a()) scale = std::max(scale, std::abs(v));
    for (const cplx& v : params.b()) scale = std::max(scale, std::abs(v));
    return static_cast<std::size_t>(std::ceil(scale)) + 1;
}

long double log_step_ld(const ParameterSet& params, std::size_t n) {
    const long double k = static_cast<long double>(n);
    long double s = std::log(k + 1.0L);
    for (const cplx& v : params.b()) {
        s += std::log(std::abs(std::complex<long double>(v.real() + k, v.imag())));
    }
    for (const cplx& v : params.a()) {
        s -= std::log(std::abs(std::complex<long double>(v.real() + k, v.imag())));
    }
    return s;
}

// Running log of a sum of exponentials.
class LogSum {
public:
    void add(double log_term) {
        if (!started_) {
            max_ = log_term;
            scaled_ = 1.0L;
            started_ = true;
            return;
        }
        if (log_term > max_) {
            scaled_ = scaled_ * std::exp(static_cast<long double>(max_ - log_term)) + 1.0L;
            max_ = log_term;
        } else {
            scaled_ += std::exp(static_cast<long double>(log_term - max_));
        }
    }
    double log_value() const { return max_ + static_cast<double>(std::log(scaled_)); }

private:
    bool started_ = false;
    double max_ = 0.0;
    long double scaled_ = 0.0L;
};

FockVector assemble(const std::vector<double>& log_terms, double log_norm, double phase) {
    FockVector v;
    v.coeffs.resize(log_terms.size());
    for (std::size_t n = 0; n < log_terms.size(); ++n) {
        const double mag = std::exp(0.5 * (log_terms[n] - log_norm));
        v.coeffs[n] = std::polar(mag, static_cast<double>(n) * phase);
    }
    return v;
}

FockVector plane_or_disk(const ParameterSet& params, cplx z, bool disk, const FockOptions& opts) {
    const double x = std::norm(z);
    if (x == 0.0) return FockVector::basis(0);
    const double log_x = std::log(x);
    const double limit = disk ? x : 0.0;
    const std::size_t n_min = monotone_start(params);

    std::vector<double> log_terms{0.0};
    auto extend_to = [&](std::size_t n) {
        while (log_terms.size() <= n) {
            const std::size_t k = log_terms.size() - 1;
            log_terms.push_back(log_terms[k] + log_x - static_cast<double>(log_step_ld(params, k)));
        }
    };

    LogSum sum;
    for (std::size_t n = 0; n <= opts.cap; ++n) {
        extend_to(n + kLookahead);
        sum.add(log_terms[n]);
        if (n < n_min) continue;
        double r_sup = limit;
        for (std::size_t k = n; k < n + kLookahead; ++k) {
            r_sup = std::max(r_sup, std::exp(log_terms[k + 1] - log_terms[k]));
        }
        if (!(r_sup < 1.0)) continue;
        const double log_partial = sum.log_value();
        const double tail = std::exp(log_terms[n] - log_partial) * r_sup / (1.0 - r_sup);
        if (tail <= opts.tol) {
            log_terms.resize(n + 1);
            FockVector v = assemble(log_terms, log_partial, std::arg(z));
            v.tail_bound = tail;
            return v;
        }
    }
    throw ConvergenceError("fock_vector: tail above " + describe(opts.tol) + " at the cutoff cap " +
                           std::to_string(opts.cap) + " for " + params.label());
}

FockVector circle_normalized(const ParameterSet& params, double phase, const FockOptions& opts) {
    const double eta = params.eta();
    const double n1 = normalization(params, 1.0, std::max(1e-2 * opts.tol, 1e-15)).value;
    const double log_n1 = std::log(n1);
    const std::size_t n_min = monotone_start(params);

    std::vector<double> log_terms{0.0};
    long double partial = 1.0L;
    for (std::size_t n = 1; n <= opts.cap; ++n) {
        const double step = static_cast<double>(log_step_ld(params, n - 1));
        log_terms.push_back(log_terms.back() - step);
        partial += std::exp(static_cast<long double>(log_terms.back()));
        if (n < n_min || step < 0.0) continue;
        // Terms decay like n^(eta - 1); the remainder behaves like t_N N / (-eta).
        const double t_n = std::exp(log_terms.back() - log_n1);
        const double asymptotic = t_n * static_cast<double>(n + 1) / (-eta);
        if (asymptotic <= opts.tol) {
            const double direct = std::max(0.0, 1.0 - static_cast<double>(partial) / n1);
            FockVector v = assemble(log_terms, log_n1, phase);
            v.tail_bound = std::max(asymptotic, direct);
            return v;
        }
    }
    throw ConvergenceError("fock_vector: circle-state tail above " + describe(opts.tol) +
                           " at the cutoff cap " + std::to_string(opts.cap) + " (eta = " +
                           describe(eta) + ")");
}

FockVector circle_unnormalizable(const ParameterSet& params, double phase, const FockOptions& opts) {
    const std::size_t cutoff = std::min(opts.unnormalizable_cutoff, opts.cap);
    std::vector<double> log_terms = log_rho_table(params, cutoff);
    for (double& v : log_terms) v = -v;
    FockVector v = assemble(log_terms, std::log(2.0 * std::numbers::pi), phase);
    v.normalized = false;
    v.tail_bound = std::numeric_limits<double>::infinity();
    v.warning = "eta = " + describe(params.eta()) +
                " >= 0: unnormalizable circle state, coefficients carry the 1/sqrt(2 pi) prefactor and stop at n = " +
                std::to_string(cutoff);
    if (params.eta() < 1.0) v.warning += "; the series converges only conditionally off z = 1";
    return v;
}

}  // namespace

double SignedLog::value() const { return sign * std::exp(log_abs); }

double log_rho_step(const ParameterSet& params, std::size_t n) {
    return static_cast<double>(log_step_ld(params, n));
}

std::vector<double> log_rho_table(const ParameterSet& params, std::size_t n_max) {
    std::vector<double> out(n_max + 1);
    long double acc = 0.0L;
    out[0] = 0.0;
    for (std::size_t n = 0; n < n_max; ++n) {
        acc += log_step_ld(params, n);
        out[n + 1] = static_cast<double>(acc);
    }
    return out;
}

double log_rho(const ParameterSet& params, std::size_t n) { return log_rho_table(params, n).back(); }

double rho(const ParameterSet& params, std::size_t n) {
    const double l = log_rho(params, n);
    if (l > kLogMax) {
        throw OverflowError("rho(" + std::to_string(n) + ") exceeds the double range for " + params.label());
    }
    return std::exp(l);
}

SignedLog log_rho_general(const ParameterSet& params, double nu) {
    if (nu < 0.0) throw DomainError("log_rho_general: argument must be non-negative");
    SignedLog out;
    out.log_abs = specfun::ln_gamma(nu + 1.0);
    double phase = 0.0;
    auto add = [&](const cplx& v, double sgn) {
        if (v.imag() == 0.0) {
            const double c = v.real();
            const bool pole = specfun::is_nonpositive_integer(c + nu, 0.0);
            if (pole) {
                if (sgn > 0) throw DomainError("log_rho_general: pole of a denominator Pochhammer symbol");
                out.log_abs = -std::numeric_limits<double>::infinity();
                return;
            }
            out.log_abs += sgn * (specfun::ln_gamma(c + nu) - specfun::ln_gamma(c));
            out.sign *= specfun::gamma_sign(c + nu) * specfun::gamma_sign(c);
        } else {
            const cplx l = specfun::ln_gamma(v + nu) - specfun::ln_gamma(v);
            out.log_abs += sgn * l.real();
            phase += sgn * l.imag();
        }
    };
    for (const cplx& v : params.b()) add(v, 1.0);
    for (const cplx& v : params.a()) add(v, -1.0);
    if (std::cos(phase) < 0.0) out.sign = -out.sign;
    return out;
}

SeriesResult<double> normalization(const ParameterSet& params, double x, double tol) {
    if (x < 0.0) throw DomainError("normalization: argument must be non-negative");
    const DomainClass dc = classify(params, cplx(x, 0.0));
    if (dc.kind == DomainKind::CircleUnnormalizable) {
        throw DivergenceError("normalization: pFq(a; b; 1) diverges for eta = " + describe(dc.eta));
    }
    SeriesOptions opts;
    opts.tol = std::max(tol, 1e-16);
    if (params.is_real() && x < 1.0) {
        // The plain series needs O(1 / (1 - x)) terms near the disk boundary.
        if (params.p() == 1 && params.q() == 0) {
            SeriesResult<double> out;
            out.value = std::pow(1.0 - x, -params.a_real()[0]);
            out.terms_used = 1;
            out.converged = true;
            return out;
        }
        if (params.p() == 2 && params.q() == 1 && x >= 0.5) {
            const std::vector<double> a = params.a_real();
            return specfun::gauss_2f1(a[0], a[1], params.b_real()[0], x, opts.tol);
        }
    }
    if (params.is_real()) return specfun::pfq(params.a_real(), params.b_real(), x, opts);
    const SeriesResult<cplx> c = specfun::pfq(params.a(), params.b(), cplx(x, 0.0), opts);
    SeriesResult<double> out;
    out.value = c.value.real();
    out.terms_used = c.terms_used;
    out.tail_estimate = c.tail_estimate;
    out.converged = c.converged;
    return out;
}

SeriesResult<cplx> normalization(const ParameterSet& params, cplx zeta, double tol) {
    classify(params, zeta);
    SeriesOptions opts;
    opts.tol = std::max(tol, 1e-16);
    return specfun::pfq(params.a(), params.b(), zeta, opts);
}

double FockVector::norm_squared() const {
    double s = 0.0;
    for (const cplx& c : coeffs) s += std::norm(c);
    return s;
}

FockVector FockVector::basis(std::size_t n, std::size_t cutoff) {
    FockVector v;
    v.coeffs.assign(std::max(n, cutoff) + 1, cplx{});
    v.coeffs[n] = 1.0;
    return v;
}

FockVector FockVector::from_coefficients(std::vector<cplx> c) {
    FockVector v;
    v.coeffs = std::move(c);
    if (v.coeffs.empty()) v.coeffs.push_back(0.0);
    return v;
}

cplx inner(const FockVector& u, const FockVector& v) {
    cplx s{};
    const std::size_t n = std::min(u.coeffs.size(), v.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) s += std::conj(u.coeffs[k]) * v.coeffs[k];
    return s;
}

FockVector fock_vector(const StateSpec& spec, const FockOptions& opts) {
    const DomainClass dc = classify(spec.params, spec.z);
    switch (dc.kind) {
        case DomainKind::Plane: return plane_or_disk(spec.params, spec.z, false, opts);
        case DomainKind::UnitDisk: return plane_or_disk(spec.params, spec.z, true, opts);
        case DomainKind::CircleNormalized: return circle_normalized(spec.params, std::arg(spec.z), opts);
        case DomainKind::CircleUnnormalizable: return circle_unnormalizable(spec.params, std::arg(spec.z), opts);
    }
    throw DomainError("fock_vector: unknown domain");
}

cplx overlap(const ParameterSet& params, cplx z, cplx zp, double tol) {
    for (cplx w : {z, zp}) {
        if (classify(params, w).kind == DomainKind::CircleUnnormalizable) {
            throw DivergenceError("overlap: unnormalizable circle state");
        }
    }
    const cplx zeta = std::conj(z) * zp;
    // Real non-negative arguments share the evaluation path of the norms.
    const cplx cross = (zeta.imag() == 0.0 && zeta.real() >= 0.0) ? cplx(normalization(params, zeta.real(), tol).value, 0.0)
                                                                   : normalization(params, zeta, tol).value;
    const double nz = normalization(params, std::norm(z), tol).value;
    const double nzp = normalization(params, std::norm(zp), tol).value;
    return cross / std::sqrt(nz * nzp);
}

}  // namespace ghcs
