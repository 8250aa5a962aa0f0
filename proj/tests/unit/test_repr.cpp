#include "oracles.hpp"

#include "ghcs/error.hpp"
#include "ghcs/repr.hpp"
#include "ghcs/weights.hpp"

#include <gtest/gtest.h>

using namespace ghcs;

namespace {

ParameterSet real(std::vector<double> a, std::vector<double> b) { return ParameterSet::make_real(a, b); }
const ParameterSet kCs = real({}, {});

FockVector coherent(cplx alpha) {
    FockOptions o;
    o.tol = 1e-32;
    return fock_vector({kCs, alpha}, o);
}

}  // namespace

TEST(AnalyticRep, BargmannFunction) {
    const cplx alpha(0.7, -0.5);
    const FockVector psi = coherent(alpha);
    for (cplx zeta : {cplx(0.0, 0.0), cplx(1.0, 0.5), cplx(-2.0, 1.0)}) {
        const AnalyticSample s = analytic_rep(kCs, psi, zeta);
        const cplx want = std::exp(zeta * alpha - 0.5 * std::norm(alpha));
        EXPECT_LE(std::abs(s.value - want), 1e-12 * std::abs(want)) << zeta;
        EXPECT_LE(s.tail_bound, 1e-6);
    }
}

TEST(AnalyticRep, SinglePhotonAndHardy) {
    const ParameterSet p = real({2.0}, {3.5});
    const cplx zeta(0.4, 1.3);
    EXPECT_LE(std::abs(analytic_rep(p, FockVector::basis(1), zeta).value - zeta / std::sqrt(std::exp(log_rho(p, 1)))), 1e-15);
    EXPECT_EQ(analytic_rep(p, FockVector::basis(1), zeta).tail_bound, 0.0);

    oracle::Gen g(7);
    const FockVector psi = FockVector::from_coefficients(g.unit_coefficients(9));
    const ParameterSet hardy = real({1.0}, {});
    const cplx w(0.3, -0.6);
    cplx want{0.0, 0.0};
    for (std::size_t n = 0; n < psi.coeffs.size(); ++n) want += std::pow(w, static_cast<int>(n)) * psi.coeffs[n];
    EXPECT_LE(std::abs(analytic_rep(hardy, psi, w).value - want), 1e-14);
    EXPECT_THROW(analytic_rep(hardy, psi, cplx(1.0, 0.0)), DivergenceError);
    EXPECT_NO_THROW(analytic_rep(real({}, {1.0}), psi, cplx(30.0, 0.0)));
}

TEST(AnalyticRep, CauchyRiemann) {
    oracle::Gen g(9);
    const FockVector psi = FockVector::from_coefficients(g.unit_coefficients(12));
    const double h = 1e-5;
    for (const ParameterSet& p : {kCs, real({}, {0.5}), real({3.0}, {})}) {
        for (int i = 0; i < 5; ++i) {
            const cplx z = g.point(0.8);
            auto f = [&](cplx w) { return analytic_rep(p, psi, w).value; };
            const cplx dx = (f(z + h) - f(z - h)) / (2.0 * h);
            const cplx dy = (f(z + cplx(0.0, h)) - f(z - cplx(0.0, h))) / (2.0 * h);
            // df/dy = i df/dx for holomorphic f.
            EXPECT_LE(std::abs(dy - cplx(0.0, 1.0) * dx), 1e-6) << p.label();
        }
    }
}

TEST(Wavefunction, CoherentComposition) {
    const cplx alpha(1.1, 0.4);
    const FockVector psi = coherent(alpha);
    for (cplx z : {cplx(0.0, 0.0), cplx(0.5, -1.0), cplx(2.0, 2.0)}) {
        const cplx want = std::exp(-0.5 * std::norm(z) + std::conj(z) * alpha - 0.5 * std::norm(alpha));
        EXPECT_LE(std::abs(ghcs_wavefunction(kCs, psi, z) - want), 1e-12) << z;
    }
}

TEST(Wavefunction, VacuumIsRootReducedWeight) {
    for (const ParameterSet& p : {real({}, {2.0}), real({3.0}, {}), real({2.0}, {4.0})}) {
        const cplx z(0.3, 0.4);
        EXPECT_NEAR(std::abs(ghcs_wavefunction(p, FockVector::basis(0), z)), std::sqrt(reduced_weight_for(p, std::norm(z))), 1e-15);
    }
    EXPECT_THROW(ghcs_wavefunction(real({3.0}, {}), FockVector::basis(0), 1.0), DomainError);
}

TEST(Wavefunction, NormByPlaneQuadrature) {
    const ParameterSet p = real({3.0}, {});
    oracle::Gen g(13);
    const FockVector psi = FockVector::from_coefficients(g.unit_coefficients(6));
    const int nx = 4000, nt = 64;
    double total = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double x = (i + 0.5) / nx;
        for (int j = 0; j < nt; ++j) {
            total += std::norm(ghcs_wavefunction(p, psi, std::polar(std::sqrt(x), 2.0 * std::numbers::pi * j / nt)));
        }
    }
    // (1/pi) int d^2z = (1/pi) (1/2) int dx int dtheta.
    total *= 0.5 / std::numbers::pi * (2.0 * std::numbers::pi / nt) / nx;
    EXPECT_NEAR(total, 1.0, 1e-4);
}

TEST(InnerProduct, VacuumMass) {
    const MeasureInnerProduct r = inner_product_via_measure(kCs, FockVector::basis(0), FockVector::basis(0));
    EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
    EXPECT_NEAR(r.value.imag(), 0.0, 1e-14);
    EXPECT_EQ(r.angular_points, 64u);
}

TEST(InnerProduct, MatchesFockSum) {
    oracle::Gen g(17);
    for (const ParameterSet& p : {kCs, real({3.0}, {}), real({}, {1.0}), real({2.0}, {4.0})}) {
        const double tol = p.p() == 0 && p.q() == 0 ? 1e-6 : 1e-5;
        for (int i = 0; i < 5; ++i) {
            const FockVector phi = FockVector::from_coefficients(g.unit_coefficients(8));
            const FockVector psi = FockVector::from_coefficients(g.unit_coefficients(8));
            const cplx got = inner_product_via_measure(p, phi, psi).value;
            EXPECT_LE(std::abs(got - inner(phi, psi)), tol) << p.label();
        }
    }
}

TEST(InnerProduct, AngularRuleGrowsWithCutoff) {
    const FockVector big = FockVector::basis(40);
    const MeasureInnerProduct r = inner_product_via_measure(kCs, big, big);
    EXPECT_EQ(r.angular_points, 81u);
    EXPECT_NEAR(r.value.real(), 1.0, 1e-8);
}
