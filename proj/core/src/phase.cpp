#include "ghcs/phase.hpp"

#include "ghcs/error.hpp"
#include "ghcs/repr.hpp"
#include "ghcs/specfun.hpp"
#include "ghcs/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ghcs {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ln Gamma(k/2 + c) for k = 0..2N, stored as a log modulus plus a phase
// (0 or pi for real entries, the imaginary part of ln Gamma for complex ones).
struct HalfGridLogGamma {
    std::vector<double> log_abs;
    std::vector<double> phase;
    std::vector<bool> pole;
};

HalfGridLogGamma half_grid(cplx c, std::size_t n) {
    HalfGridLogGamma out;
    const std::size_t len = 2 * n + 1;
    out.log_abs.resize(len);
    out.phase.resize(len);
    out.pole.assign(len, false);
    const bool real = c.imag() == 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        const double shift = 0.5 * static_cast<double>(k);
        if (real) {
            const double x = c.real() + shift;
            if (specfun::is_nonpositive_integer(x, 0.0)) {
                out.pole[k] = true;
                continue;
            }
            out.log_abs[k] = specfun::ln_gamma(x);
            out.phase[k] = specfun::gamma_sign(x) < 0 ? std::numbers::pi : 0.0;
        } else {
            const cplx l = specfun::ln_gamma(c + shift);
            out.log_abs[k] = l.real();
            out.phase[k] = l.imag();
        }
    }
    return out;
}

double trapezoid_residual(const std::vector<double>& values) {
    if (values.size() < 2) return std::numeric_limits<double>::infinity();
    const double h = kTwoPi / static_cast<double>(values.size() - 1);
    long double sum = 0.0L;
    for (double v : values) sum += v;
    sum -= 0.5L * (values.front() + values.back());
    return std::abs(static_cast<double>(h * sum) - 1.0);
}

std::vector<double> fourier_sum(const std::vector<cplx>& c, const std::vector<double>& theta) {
    std::vector<double> out(theta.size());
    for (std::size_t k = 0; k < theta.size(); ++k) {
        double acc = 0.0;
        for (std::size_t m = c.size(); m-- > 1;) {
            const double mt = static_cast<double>(m) * theta[k];
            acc += c[m].real() * std::cos(mt) + c[m].imag() * std::sin(mt);
        }
        out[k] = (c[0].real() + 2.0 * acc) / kTwoPi;
    }
    return out;
}

}  // namespace

Analyzer Analyzer::husimi() { return Analyzer(Kind::Husimi, ParameterSet::make({}, {})); }

Analyzer Analyzer::pegg_barnett() { return Analyzer(Kind::PeggBarnett, ParameterSet::make({cplx(1.0, 0.0)}, {})); }

Analyzer Analyzer::general(ParameterSet params) { return Analyzer(Kind::General, std::move(params)); }

std::string Analyzer::label() const {
    switch (kind_) {
        case Kind::Husimi: return "Q";
        case Kind::PeggBarnett: return "PB";
        case Kind::General: return params_.label();
    }
    return "";
}

GCoefficientTable g_coefficients(const Analyzer& analyzer, std::size_t cutoff) {
    if (cutoff > kMaxGCutoff) {
        throw OverflowError("g_coefficients: cutoff " + std::to_string(cutoff) + " exceeds " +
                            std::to_string(kMaxGCutoff));
    }
    GCoefficientTable out;
    out.analyzer = analyzer.params();
    const auto size = static_cast<Eigen::Index>(cutoff + 1);
    if (analyzer.kind() == Analyzer::Kind::PeggBarnett) {
        out.table = Eigen::MatrixXd::Ones(size, size);
        return out;
    }

    // Every factor enters as Gamma(m + c)^s / sqrt(Gamma(n + c)^s Gamma(n' + c)^s)
    // with s = +1 for the factorial and the b list, -1 for the a list.
    std::vector<std::pair<HalfGridLogGamma, int>> factors;
    factors.emplace_back(half_grid(cplx(1.0, 0.0), cutoff), 1);
    for (const cplx& b : analyzer.params().b()) factors.emplace_back(half_grid(b, cutoff), 1);
    for (const cplx& a : analyzer.params().a()) factors.emplace_back(half_grid(a, cutoff), -1);

    out.table.resize(size, size);
    for (std::size_t n = 0; n <= cutoff; ++n) {
        out.table(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = 1.0;
        for (std::size_t np = 0; np < n; ++np) {
            const std::size_t k = n + np;
            double log_g = 0.0;
            double phase = 0.0;
            bool zero = false;
            for (const auto& [f, s] : factors) {
                if (f.pole[k]) {
                    if (s > 0) {
                        throw DomainError("g_coefficients: gamma pole of a denominator parameter at (n + n')/2 = " +
                                          describe(0.5 * static_cast<double>(k)));
                    }
                    zero = true;
                    break;
                }
                // Integer arguments never hit poles for admissible parameter sets.
                log_g += s * (f.log_abs[k] - 0.5 * (f.log_abs[2 * n] + f.log_abs[2 * np]));
                // The sign of rho(n) summed over all factors is the same for every
                // integer n, so the n' phase need not be tracked separately.
                phase += s * (f.phase[k] - f.phase[2 * n]);
            }
            const double g = zero ? 0.0 : std::exp(log_g) * std::cos(phase);
            out.table(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(np)) = g;
            out.table(static_cast<Eigen::Index>(np), static_cast<Eigen::Index>(n)) = g;
        }
    }
    return out;
}

DensityMatrix DensityMatrix::from_vector(const FockVector& psi) {
    const Eigen::Map<const Eigen::VectorXcd> v(psi.coeffs.data(), static_cast<Eigen::Index>(psi.coeffs.size()));
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::from_matrix(Eigen::MatrixXcd rho, double tol) {
    if (rho.rows() != rho.cols()) throw ParameterError("density matrix must be square");
    if (rho.size() == 0) throw ParameterError("density matrix is empty");
    const double scale = std::max(1.0, rho.cwiseAbs().maxCoeff());
    const double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol * scale) {
        throw ParameterError("density matrix is not hermitian: max |rho - rho^dagger| = " + describe(asym));
    }
    return DensityMatrix(std::move(rho));
}

std::vector<double> PhaseGrid::thetas() const {
    if (count < 2) throw DomainError("phase grid needs at least two samples");
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = start + kTwoPi * static_cast<double>(k) / static_cast<double>(count - 1);
    }
    return out;
}

std::vector<cplx> phase_fourier_coefficients(const DensityMatrix& signal, const GCoefficientTable& g) {
    const std::size_t n = signal.cutoff();
    if (g.cutoff() < n) throw DomainError("phase_fourier_coefficients: G table smaller than the signal");
    const Eigen::MatrixXcd& rho = signal.matrix();
    std::vector<cplx> c(n + 1, cplx(0.0, 0.0));
    for (std::size_t m = 0; m <= n; ++m) {
        cplx acc{0.0, 0.0};
        for (std::size_t k = 0; k + m <= n; ++k) {
            const auto row = static_cast<Eigen::Index>(k + m);
            const auto col = static_cast<Eigen::Index>(k);
            acc += rho(row, col) * g(k + m, k);
        }
        c[m] = acc;
    }
    return c;
}

PhaseDistribution phase_distribution(const DensityMatrix& signal, const Analyzer& analyzer, const PhaseGrid& grid) {
    const GCoefficientTable g = g_coefficients(analyzer, signal.cutoff());
    PhaseDistribution out;
    out.label = analyzer.label();
    out.theta = grid.thetas();
    out.values = fourier_sum(phase_fourier_coefficients(signal, g), out.theta);
    out.normalization_residual = trapezoid_residual(out.values);
    return out;
}

PhaseDistribution phase_distribution(const FockVector& signal, const Analyzer& analyzer, const PhaseGrid& grid) {
    return phase_distribution(DensityMatrix::from_vector(signal), analyzer, grid);
}

double husimi_q(const FockVector& signal, cplx alpha) {
    const double x = std::norm(alpha);
    const double log_r = x > 0.0 ? 0.5 * std::log(x) : 0.0;
    const double phi = std::arg(alpha);
    cplx sum{0.0, 0.0};
    for (std::size_t n = 0; n <= signal.cutoff() && n < signal.coeffs.size(); ++n) {
        if (x == 0.0 && n > 0) break;
        const double dn = static_cast<double>(n);
        const double mag = std::exp(dn * log_r - 0.5 * specfun::ln_gamma(dn + 1.0) - 0.5 * x);
        sum += signal.coeffs[n] * std::polar(mag, -dn * phi);
    }
    return std::norm(sum) / std::numbers::pi;
}

double gh_husimi(const FockVector& signal, const ParameterSet& analyzer, cplx z) {
    const double w = reduced_weight_for(analyzer, std::norm(z));
    const cplx s = analytic_series(log_rho_table(analyzer, signal.cutoff()), signal, std::conj(z));
    return w * std::norm(s) / std::numbers::pi;
}

double self_dual_husimi(const ParameterSet& params, cplx z, cplx z_signal) {
    const double w = reduced_weight_for(params, std::norm(z));
    const cplx cross = normalization(params, std::conj(z) * z_signal, 1e-15).value;
    const double ns = normalization(params, std::norm(z_signal), 1e-15).value;
    return w * std::norm(cross) / (std::numbers::pi * ns);
}

RadialPhaseReport radial_phase_check(const FockVector& signal, const ParameterSet& analyzer, const PhaseGrid& grid,
                                     const quad::Options& opts) {
    const Family family = weight_family(analyzer);
    const ParameterSet reduced = analyzer.reduced();
    const std::vector<double> log_rho = log_rho_table(analyzer, signal.cutoff());

    RadialPhaseReport out;
    out.theta = grid.thetas();
    out.g_series = phase_distribution(signal, Analyzer::general(analyzer), grid).values;
    out.radial.reserve(out.theta.size());
    for (std::size_t k = 0; k < out.theta.size(); ++k) {
        const cplx dir = std::polar(1.0, -out.theta[k]);
        auto g = [&](double x) { return std::norm(analytic_series(log_rho, signal, std::sqrt(x) * dir)) / kTwoPi; };
        const quad::Result r = integrate_against_weight(family, reduced, g, opts);
        out.converged = out.converged && r.converged;
        out.radial.push_back(r.value);
        out.max_deviation = std::max(out.max_deviation, std::abs(r.value - out.g_series[k]));
    }
    return out;
}

}  // namespace ghcs
