// Randomized invariants with fixed seeds.
#include "oracles.hpp"

#include "ghcs/ladder.hpp"
#include "ghcs/phase.hpp"
#include "ghcs/photstat.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstring>

using namespace ghcs;

namespace {

const std::vector<std::pair<std::size_t, std::size_t>> kShapes = {{0, 0}, {0, 1}, {1, 1}, {1, 0}, {2, 1}, {1, 2}, {2, 3}};

bool bit_equal(double x, double y) { return std::memcmp(&x, &y, sizeof(double)) == 0; }

}  // namespace

TEST(Property, PermutationInvariantBitForBit) {
    oracle::Gen g(101);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, q] = kShapes[static_cast<std::size_t>(g.integer(0, static_cast<int>(kShapes.size()) - 1))];
        const ParameterSet base = g.real_params(p, q);
        std::vector<cplx> a = base.a(), b = base.b();
        std::reverse(a.begin(), a.end());
        std::rotate(b.begin(), b.begin() + (b.empty() ? 0 : 1), b.end());
        const ParameterSet perm = ParameterSet::make(a, b);
        for (std::size_t n : {1u, 7u, 50u, 200u}) EXPECT_TRUE(bit_equal(log_rho(base, n), log_rho(perm, n))) << base.label();
        EXPECT_TRUE(bit_equal(f_coeff(base, 11), f_coeff(perm, 11)));
    }
}

TEST(Property, RhoPositiveAndMatchesProducts) {
    oracle::Gen g(202);
    for (int trial = 0; trial < 80; ++trial) {
        const auto [p, q] = kShapes[static_cast<std::size_t>(g.integer(0, static_cast<int>(kShapes.size()) - 1))];
        const ParameterSet params = g.real_params(p, q);
        const std::vector<double> table = log_rho_table(params, 200);
        for (double l : table) ASSERT_TRUE(std::isfinite(l)) << params.label();
        for (unsigned n = 0; n <= 25; ++n) {
            const long double want = oracle::rho(params.a(), params.b(), n);
            ASSERT_GT(want, 0.0L) << params.label() << " n=" << n;
            EXPECT_NEAR(table[n], std::log(static_cast<double>(want)), 1e-11 * std::max(1.0, std::abs(table[n])))
                << params.label() << " n=" << n;
        }
    }
}

TEST(Property, LadderRecurrence) {
    oracle::Gen g(303);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, q] = kShapes[static_cast<std::size_t>(g.integer(0, static_cast<int>(kShapes.size()) - 1))];
        const ParameterSet params = g.real_params(p, q);
        for (std::size_t n = 0; n < 60; ++n) {
            const double lhs = 2.0 * std::log(f_coeff(params, static_cast<long>(n)));
            const double rhs = log_rho(params, n + 1) - log_rho(params, n);
            EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(log_rho(params, n + 1)))) << params.label();
        }
    }
}

TEST(Property, MatchedPairsCoalesce) {
    oracle::Gen g(404);
    for (int trial = 0; trial < 40; ++trial) {
        const auto [p, q] = kShapes[static_cast<std::size_t>(g.integer(0, static_cast<int>(kShapes.size()) - 1))];
        const ParameterSet params = g.real_params(p, q);
        const ParameterSet padded = params.with_matched_pair(cplx(g.uniform(0.2, 5.0), 0.0));
        for (std::size_t n : {0u, 3u, 30u, 150u}) {
            EXPECT_NEAR(log_rho(params, n), log_rho(padded, n), 1e-12 * std::max(1.0, std::abs(log_rho(params, n))));
        }
        const GCoefficientTable g0 = g_coefficients(Analyzer::general(params), 20);
        const GCoefficientTable g1 = g_coefficients(Analyzer::general(padded), 20);
        EXPECT_LE((g0.table - g1.table).cwiseAbs().maxCoeff(), 1e-12) << params.label();
    }
}

TEST(Property, OverlapBoundedAndReflexive) {
    oracle::Gen g(505);
    for (int trial = 0; trial < 60; ++trial) {
        const auto [p, q] = kShapes[static_cast<std::size_t>(g.integer(0, static_cast<int>(kShapes.size()) - 1))];
        const ParameterSet params = g.real_params(p, q);
        const double r = p == q + 1 ? 0.9 : 3.0;
        const cplx z = g.point(r), zp = g.point(r);
        EXPECT_LE(std::abs(overlap(params, z, zp)), 1.0 + 1e-12) << params.label();
        EXPECT_NEAR(std::abs(overlap(params, z, z)), 1.0, 1e-12) << params.label();
        EXPECT_LE(std::abs(overlap(params, z, zp) - std::conj(overlap(params, zp, z))), 1e-12);
    }
}

TEST(Property, DistributionsNormalized) {
    oracle::Gen g(606);
    for (int trial = 0; trial < 30; ++trial) {
        const auto [p, q] = kShapes[static_cast<std::size_t>(g.integer(0, static_cast<int>(kShapes.size()) - 1))];
        const ParameterSet params = g.real_params(p, q);
        const cplx z = g.point(p == q + 1 ? 0.9 : 4.0);
        const DistributionSeries pn = pn_distribution({params, z});
        EXPECT_LE(pn.normalization_residual, 1e-10) << params.label();
        for (double v : pn.values) EXPECT_GE(v, 0.0);

        const FockVector signal = FockVector::from_coefficients(g.unit_coefficients(static_cast<std::size_t>(g.integer(0, 25))));
        const PhaseDistribution d = phase_distribution(signal, Analyzer::general(params));
        EXPECT_LE(d.normalization_residual, 1e-8) << params.label();
    }
}
