#include "oracles.hpp"

#include "ghcs/error.hpp"
#include "ghcs/ladder.hpp"

#include <gtest/gtest.h>

using namespace ghcs;

namespace {
const ParameterSet kCs = ParameterSet::make({}, {});
}

TEST(LadderF, HandValues) {
    EXPECT_EQ(f_coeff(kCs, 3), 2.0);
    EXPECT_EQ(f_coeff(kCs, -1), 0.0);
    EXPECT_EQ(f_coeff(ParameterSet::make_real({0.3}, {2.0}), -1), 0.0);
    EXPECT_NEAR(f_coeff(ParameterSet::make_real({2.0}, {}), 0), std::sqrt(0.5), 1e-16);
    EXPECT_NEAR(f_coeff(ParameterSet::make_real({2.0}, {3.0}), 1), std::sqrt(8.0 / 3.0), 1e-15);
}

TEST(LadderF, ProductReproducesRho) {
    for (const ParameterSet& p : {kCs, ParameterSet::make_real({}, {0.2}), ParameterSet::make_real({4.0}, {2.0}),
                                  ParameterSet::make_real({0.3, 0.4}, {1.5}), ParameterSet::make_real({-0.5, 2.0}, {-0.3})}) {
        long double prod = 1.0L;
        for (long n = 0; n <= 100; ++n) {
            const double l = log_rho(p, static_cast<std::size_t>(n));
            EXPECT_LE(std::abs(static_cast<double>(std::log(prod)) - l), 1e-12 * std::max(1.0, std::abs(l)) + 1e-13)
                << p.label() << " n=" << n;
            const double f = f_coeff(p, n);
            EXPECT_GT(f, 0.0);
            prod *= static_cast<long double>(f) * f;
        }
    }
}

TEST(LadderCoefficients, CachedMatchesDirect) {
    const ParameterSet p = ParameterSet::make_real({1.5}, {2.5});
    const LadderCoefficients f(p, 50);
    EXPECT_EQ(f(-1), 0.0);
    for (long n = 0; n <= 50; ++n) EXPECT_EQ(f(n), f_coeff(p, n));
}

TEST(Lowering, BasisAndVacuum) {
    const FockVector down = apply_lowering(kCs, FockVector::basis(3));
    ASSERT_EQ(down.cutoff(), 2u);
    EXPECT_NEAR(down.coeffs[2].real(), std::sqrt(3.0), 1e-15);
    EXPECT_EQ(down.coeffs[0], cplx(0.0, 0.0));
    const FockVector zero = apply_lowering(kCs, FockVector::basis(0));
    for (const cplx& c : zero.coeffs) EXPECT_EQ(c, cplx(0.0, 0.0));
}

TEST(Lowering, CoherentStateEigenvector) {
    const cplx alpha(1.0, 0.0);
    const FockVector v = fock_vector({kCs, alpha});
    const FockVector u = apply_lowering(kCs, v);
    double res = 0.0;
    for (std::size_t n = 0; n < u.coeffs.size(); ++n) res += std::norm(u.coeffs[n] - alpha * v.coeffs[n]);
    EXPECT_LE(std::sqrt(res), 1e-9);
}

TEST(Raising, BasisAndCap) {
    const FockVector up = apply_raising(kCs, FockVector::basis(0));
    EXPECT_NEAR(up.coeffs[1].real(), 1.0, 1e-16);
    const ParameterSet p = ParameterSet::make_real({2.0}, {3.0});
    const FockVector up1 = apply_raising(p, FockVector::basis(1));
    EXPECT_NEAR(up1.coeffs[2].real(), std::sqrt(8.0 / 3.0), 1e-15);
    EXPECT_THROW(apply_raising(kCs, FockVector::basis(10), 10), DomainError);
}

TEST(Ladder, AdjointnessOnRandomVectors) {
    oracle::Gen g(3);
    const ParameterSet p = ParameterSet::make_real({0.3, 0.4}, {1.5});
    for (int trial = 0; trial < 20; ++trial) {
        const FockVector u = FockVector::from_coefficients(g.unit_coefficients(12));
        const FockVector v = FockVector::from_coefficients(g.unit_coefficients(11));
        const cplx lhs = inner(apply_raising(p, v), u);  // <U^dag v, u>
        const cplx rhs = inner(v, apply_lowering(p, u));  // <v, U u>
        EXPECT_LE(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(Commutator, CanonicalAndPhaseLimits) {
    for (std::size_t n = 0; n < 20; ++n) EXPECT_NEAR(commutator_diagonal(kCs, n), 1.0, 1e-13);
    const ParameterSet e = ParameterSet::make_real({1.0}, {});
    EXPECT_EQ(commutator_diagonal(e, 0), 1.0);
    for (std::size_t n = 1; n < 20; ++n) EXPECT_EQ(commutator_diagonal(e, n), 0.0);
}

TEST(Commutator, MatchesMatrixExpectation) {
    oracle::Gen g(5);
    const ParameterSet p = ParameterSet::make_real({2.0}, {4.0});
    const std::size_t n = 15;
    // Untruncated action: pad the matrix by one so that U U^dag is exact on 0..n.
    const Eigen::MatrixXd u = lowering_matrix(p, n + 1);
    const Eigen::MatrixXd comm = u * u.transpose() - u.transpose() * u;
    const std::vector<cplx> c = g.unit_coefficients(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n + 2));
    for (std::size_t k = 0; k <= n; ++k) v(static_cast<Eigen::Index>(k)) = c[k];
    const cplx expect = v.dot(comm.cast<cplx>() * v);
    double diag_sum = 0.0;
    for (std::size_t k = 0; k <= n; ++k) diag_sum += commutator_diagonal(p, k) * std::norm(c[k]);
    EXPECT_NEAR(expect.real(), diag_sum, 1e-12);
}

TEST(EigenResidual, VacuumAndFigureStates) {
    EXPECT_EQ(eigenvalue_residual({kCs, 0.0}, 1e-14), 0.0);
    EXPECT_LE(eigenvalue_residual({ParameterSet::make_real({2.0}, {3.0}), cplx(0.8, 0.3)}, 1e-14), 1e-6);
    EXPECT_LE(eigenvalue_residual({ParameterSet::make_real({0.3, 0.4}, {5.0}), std::polar(1.0, 0.4)}, 1e-14), 1e-6);
}

TEST(HermitianMatrices, EntriesAndSymmetry) {
    const HermitianMatrices m = hermitian_matrices(kCs, 2);
    EXPECT_NEAR(m.Q(0, 1).real(), 1.0 / std::sqrt(2.0), 1e-16);
    EXPECT_NEAR(m.Q(1, 0).real(), 1.0 / std::sqrt(2.0), 1e-16);
    const HermitianMatrices h = hermitian_matrices(ParameterSet::make_real({0.3, 0.4}, {1.5}), 30);
    for (const Eigen::MatrixXcd* x : {&h.Q, &h.P, &h.C, &h.S}) {
        EXPECT_EQ((*x - x->adjoint()).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(HermitianMatrices, PhaseOperatorInteriorDiagonal) {
    const HermitianMatrices h = hermitian_matrices(ParameterSet::make_real({1.0}, {}), 12);
    const Eigen::MatrixXcd sum = h.C * h.C + h.S * h.S;
    EXPECT_NEAR(sum(0, 0).real(), 0.5, 1e-15);
    for (Eigen::Index n = 1; n < 12; ++n) EXPECT_NEAR(sum(n, n).real(), 1.0, 1e-15) << n;
}
