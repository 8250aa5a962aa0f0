#include "ghcs/error.hpp"
#include "ghcs/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace ghcs::specfun {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;

// Taylor coefficients c_k of 1/Gamma(z) = sum c_k z^k, k = 1..26.
constexpr std::array<double, 26> kRecipGamma = {
    1.0000000000000000,  0.5772156649015329,  -0.6558780715202538, -0.0420026350340952,
    0.1665386113822915,  -0.0421977345555443, -0.0096219715278770, 0.0072189432466630,
    -0.0011651675918591, -0.0002152416741149, 0.0001280502823882,  -0.0000201348547807,
    -0.0000012504934821, 0.0000011330272320,  -0.0000002056338417, 0.0000000061160950,
    0.0000000050020075,  -0.0000000011812746, 0.0000000001043427,  0.0000000000077823,
    -0.0000000000036968, 0.0000000000005100,  -0.0000000000000206, -0.0000000000000054,
    0.0000000000000014,  0.0000000000000001,
};

struct TemmeGammas {
    double gam1;   // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
    double gam2;   // (1/G(1-mu) + 1/G(1+mu)) / 2
    double gampl;  // 1/G(1+mu)
    double gammi;  // 1/G(1-mu)
};

// |mu| <= 1/2. 1/G(1+mu) = sum_k c_k mu^(k-1); gam1 and gam2 are its odd and
// even parts, taken term by term so that gam1 has no cancellation at mu -> 0.
TemmeGammas temme_gammas(double mu) {
    double even = 0.0;  // sum over odd k of c_k mu^(k-1)
    double odd = 0.0;   // sum over even k of c_k mu^(k-2)
    double power = 1.0;
    for (std::size_t i = 0; i < kRecipGamma.size(); i += 2) {
        even += kRecipGamma[i] * power;
        if (i + 1 < kRecipGamma.size()) odd += kRecipGamma[i + 1] * power;
        power *= mu * mu;
    }
    TemmeGammas g{};
    g.gam1 = -odd;
    g.gam2 = even;
    g.gampl = even + mu * odd;
    g.gammi = even - mu * odd;
    return g;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2.
std::pair<double, double> bessel_k_pair(double mu, double x) {
    const double xi = 1.0 / x;
    const double mu2 = mu * mu;
    if (x < 2.0) {
        // Temme's series.
        const double x2 = 0.5 * x;
        const double pimu = std::numbers::pi * mu;
        const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
        double d = -std::log(x2);
        double e = mu * d;
        const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
        const TemmeGammas g = temme_gammas(mu);
        double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
        double sum = ff;
        e = std::exp(e);
        double p = 0.5 * e / g.gampl;
        double q = 0.5 / (e * g.gammi);
        double c = 1.0;
        d = x2 * x2;
        double sum1 = p;
        for (int i = 1; i <= kMaxIter; ++i) {
            ff = (i * ff + p + q) / (i * i - mu2);
            c *= d / i;
            p /= i - mu;
            q /= i + mu;
            const double del = c * ff;
            sum += del;
            sum1 += c * (p - i * ff);
            if (std::abs(del) < std::abs(sum) * kEps) break;
        }
        return {sum, sum1 * 2.0 * xi};
    }
    // Steed's continued fraction CF2.
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h *= a1;
    const double kmu = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = kmu * (mu + x + 0.5 - h) * xi;
    return {kmu, k1};
}

}  // namespace

double bessel_i(double nu, double x) {
    if (!(nu > -1.0)) throw DomainError("bessel_i: order must exceed -1, got " + describe(nu));
    if (x < 0.0) throw DomainError("bessel_i: argument must be non-negative");
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        return nu > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double half = 0.5 * x;
    const double y = half * half;
    double term = std::exp(nu * std::log(half) - ln_gamma(nu + 1.0));
    double sum = term;
    for (int k = 1; k < kMaxIter; ++k) {
        term *= y / (k * (k + nu));
        sum += term;
        if (term < kEps * sum && k > y) return sum;
    }
    throw ConvergenceError("bessel_i: series did not converge");
}

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: argument must be positive");
    nu = std::abs(nu);
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    auto [kmu, k1] = bessel_k_pair(mu, x);
    const double xi2 = 2.0 / x;
    for (int i = 1; i <= nl; ++i) {
        const double next = (mu + i) * xi2 * k1 + kmu;
        kmu = k1;
        k1 = next;
    }
    return kmu;
}

}  // namespace ghcs::specfun
