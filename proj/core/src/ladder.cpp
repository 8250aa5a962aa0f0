#include "ghcs/ladder.hpp"

#include "ghcs/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace ghcs {
namespace {
constexpr std::size_t kDenseCap = 512;
}  // namespace

double f_coeff(const ParameterSet& params, long n) {
    if (n < -1) throw DomainError("f_coeff: index must be >= -1");
    if (n == -1) return 0.0;
    const double k = static_cast<double>(n);
    cplx num = k + 1.0;
    cplx den = 1.0;
    for (const cplx& v : params.b()) num *= v + k;
    for (const cplx& v : params.a()) den *= v + k;
    return std::sqrt((num / den).real());
}

LadderCoefficients::LadderCoefficients(ParameterSet params, std::size_t n_max) : params_(std::move(params)) {
    f_.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) f_.push_back(f_coeff(params_, static_cast<long>(n)));
}

double LadderCoefficients::operator()(long n) const {
    if (n == -1) return 0.0;
    if (n < -1 || static_cast<std::size_t>(n) >= f_.size()) {
        throw DomainError("LadderCoefficients: index " + std::to_string(n) + " out of range");
    }
    return f_[static_cast<std::size_t>(n)];
}

FockVector apply_lowering(const ParameterSet& params, const FockVector& v) {
    const std::size_t cutoff = v.cutoff();
    FockVector out;
    out.normalized = false;
    out.warning = v.warning;
    if (cutoff == 0) {
        out.coeffs.assign(1, cplx{});
        out.tail_bound = v.tail_bound * std::pow(f_coeff(params, 0), 2);
        return out;
    }
    const LadderCoefficients f(params, cutoff);
    out.coeffs.resize(cutoff);
    for (std::size_t n = 0; n < cutoff; ++n) out.coeffs[n] = f(static_cast<long>(n)) * v.coeffs[n + 1];
    out.tail_bound = v.tail_bound * f(static_cast<long>(cutoff)) * f(static_cast<long>(cutoff));
    return out;
}

FockVector apply_raising(const ParameterSet& params, const FockVector& v, std::size_t cap) {
    const std::size_t cutoff = v.cutoff();
    if (cutoff + 1 > cap) {
        throw DomainError("apply_raising: cutoff " + std::to_string(cutoff + 1) + " exceeds the cap " +
                          std::to_string(cap));
    }
    const LadderCoefficients f(params, cutoff);
    FockVector out;
    out.normalized = false;
    out.warning = v.warning;
    out.coeffs.assign(cutoff + 2, cplx{});
    for (std::size_t n = 0; n <= cutoff; ++n) out.coeffs[n + 1] = f(static_cast<long>(n)) * v.coeffs[n];
    out.tail_bound = v.tail_bound * std::pow(f_coeff(params, static_cast<long>(cutoff + 1)), 2);
    return out;
}

double commutator_diagonal(const ParameterSet& params, std::size_t n) {
    const double fn = f_coeff(params, static_cast<long>(n));
    const double fm = f_coeff(params, static_cast<long>(n) - 1);
    return fn * fn - fm * fm;
}

double eigenvalue_residual(const StateSpec& spec, double tol) {
    FockOptions opts;
    opts.tol = tol;
    const FockVector v = fock_vector(spec, opts);
    const std::size_t cutoff = v.cutoff();
    const LadderCoefficients f(spec.params, cutoff);
    double sq = 0.0;
    for (std::size_t n = 0; n < cutoff; ++n) {
        sq += std::norm(f(static_cast<long>(n)) * v.coeffs[n + 1] - spec.z * v.coeffs[n]);
    }
    sq += std::norm(spec.z * v.coeffs[cutoff]);
    return std::sqrt(sq);
}

Eigen::MatrixXd lowering_matrix(const ParameterSet& params, std::size_t cutoff) {
    if (cutoff > kDenseCap) {
        throw DomainError("dense ladder matrices are limited to cutoff " + std::to_string(kDenseCap));
    }
    const LadderCoefficients f(params, cutoff);
    const auto dim = static_cast<Eigen::Index>(cutoff + 1);
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index n = 0; n + 1 < dim; ++n) u(n, n + 1) = f(static_cast<long>(n));
    return u;
}

HermitianMatrices hermitian_matrices(const ParameterSet& params, std::size_t cutoff) {
    if (cutoff < 1) throw DomainError("hermitian_matrices: cutoff must be at least 1");
    const Eigen::MatrixXcd u = lowering_matrix(params, cutoff).cast<cplx>();
    const Eigen::MatrixXcd ud = u.adjoint();
    const cplx i(0.0, 1.0);
    const double r2 = std::numbers::sqrt2;
    HermitianMatrices m;
    m.Q = (ud + u) / r2;
    m.P = i * (ud - u) / r2;
    m.C = (ud + u) / 2.0;
    m.S = i * (ud - u) / 2.0;
    return m;
}

}  // namespace ghcs
