#include "ghcs/repr.hpp"

#include "ghcs/error.hpp"
#include "ghcs/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ghcs {

cplx analytic_series(const std::vector<double>& log_rho, const FockVector& psi, cplx zeta) {
    const std::size_t n_max = psi.cutoff();
    if (psi.coeffs.empty()) return {0.0, 0.0};
    if (log_rho.size() <= n_max) throw DomainError("analytic_series: log rho table shorter than the cutoff");
    const double r = std::abs(zeta);
    if (r == 0.0) return psi.coeffs[0];
    const double log_r = std::log(r);
    const double phi = std::arg(zeta);
    cplx sum{0.0, 0.0};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double dn = static_cast<double>(n);
        const double mag = std::exp(dn * log_r - 0.5 * log_rho[n]);
        sum += psi.coeffs[n] * std::polar(mag, dn * phi);
    }
    return sum;
}

AnalyticSample analytic_rep(const ParameterSet& params, const FockVector& psi, cplx zeta) {
    const DomainClass dom = classify(params);
    if (dom.kind != DomainKind::Plane && !(std::abs(zeta) < 1.0)) {
        throw DivergenceError("analytic_rep: |zeta| must be below 1 for " + params.label());
    }
    AnalyticSample out;
    out.zeta = zeta;
    out.params = params;
    out.value = analytic_series(log_rho_table(params, psi.cutoff()), psi, zeta);
    if (psi.tail_bound == 0.0) {
        out.tail_bound = 0.0;
    } else if (!std::isfinite(psi.tail_bound)) {
        out.tail_bound = std::numeric_limits<double>::infinity();
    } else {
        out.tail_bound = std::sqrt(psi.tail_bound * normalization(params, std::norm(zeta)).value);
    }
    return out;
}

cplx ghcs_wavefunction(const ParameterSet& params, const FockVector& psi, cplx z) {
    const double w = reduced_weight_for(params, std::norm(z));
    if (w < 0.0) throw DomainError("ghcs_wavefunction: negative weight at |z|^2 = " + describe(std::norm(z)));
    return std::sqrt(w) * analytic_series(log_rho_table(params, psi.cutoff()), psi, std::conj(z));
}

MeasureInnerProduct inner_product_via_measure(const ParameterSet& params, const FockVector& phi, const FockVector& psi,
                                              const quad::Options& opts) {
    const Family family = weight_family(params);
    const ParameterSet reduced = params.reduced();
    const std::size_t n = std::max(phi.cutoff(), psi.cutoff());
    const std::vector<double> log_rho = log_rho_table(params, n);
    const std::size_t m = std::max<std::size_t>(64, 2 * n + 1);

    std::vector<cplx> unit(m);
    for (std::size_t j = 0; j < m; ++j) {
        unit[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    }
    // (1/M) sum_j conj(Phi~) Psi~ at radius sqrt(x); the angular mean of the integrand.
    auto angular_mean = [&](double x) {
        const double r = std::sqrt(x);
        cplx acc{0.0, 0.0};
        for (const cplx& u : unit) {
            const cplx zeta = r * u;
            acc += std::conj(analytic_series(log_rho, phi, zeta)) * analytic_series(log_rho, psi, zeta);
        }
        return acc / static_cast<double>(m);
    };
    const quad::Result re =
        integrate_against_weight(family, reduced, [&](double x) { return angular_mean(x).real(); }, opts);
    const quad::Result im =
        integrate_against_weight(family, reduced, [&](double x) { return angular_mean(x).imag(); }, opts);
    if (!re.converged || !im.converged) {
        throw ConvergenceError("inner_product_via_measure: radial quadrature did not converge");
    }
    return {cplx(re.value, im.value), std::hypot(re.error, im.error), m};
}

}  // namespace ghcs
