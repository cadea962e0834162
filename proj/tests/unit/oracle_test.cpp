#include <gtest/gtest.h>

#include <cmath>

#include "reference_values.hpp"
#include "rgd/oracle.hpp"
#include "rgd/partition.hpp"

using namespace rgd;

TEST(Oracle, QuadratureMatchesDirectIntegration) {
    for (const auto& c : refvals::kZa) {
        const OracleResult r = zOracleQuadrature({Family::A, c.beta, c.m, c.sigma2});
        EXPECT_NEAR(r.value.lnmag, c.logZ, 1e-8) << c.beta << " " << c.m << " " << c.sigma2;
        EXPECT_EQ(r.method, OracleMethod::Quadrature);
    }
    for (const auto& c : refvals::kZSP) {
        EXPECT_NEAR(zOracleQuadrature({Family::SP, 1, c.m, c.sigma2}).value.lnmag, c.logZ, 1e-8);
    }
}

TEST(Oracle, QuadratureThreeWalkers) {
    for (int beta : {1, 2, 4}) {
        const EnsembleSpec s{Family::A, beta, 3, 0.5};
        EXPECT_LT(relDiff(zOracleQuadrature(s).value, partition(s).logZ), 1e-6) << beta;
    }
}

TEST(Oracle, MonteCarloIsDeterministicAcrossThreads) {
    const EnsembleSpec s{Family::A, 1, 4, 0.5};
    const OracleResult a = zOracleMC(s, 99, 200000, 1);
    const OracleResult b = zOracleMC(s, 99, 200000, 3);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.errorBound, b.errorBound);
    const double exact = partition(s).logZ.lnmag;
    EXPECT_LT(std::fabs(a.value.lnmag - exact), 4.0 * a.errorBound + 1e-3);
}

TEST(Oracle, MonteCarloReportsInsufficientSamples) {
    EXPECT_THROW(zOracleMC({Family::A, 4, 8, 2.0}, 1, 20000), InsufficientSamples);
}

TEST(Oracle, DensityByQuadrature) {
    for (const auto& c : refvals::kRhoM2) {
        const OracleResult r = rhoOracle({Family::A, c.beta, 2, c.sigma2}, c.r);
        EXPECT_NEAR(r.value.toReal() / c.rho, 1.0, 1e-8);
    }
}
