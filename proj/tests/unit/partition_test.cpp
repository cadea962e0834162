#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "reference_values.hpp"
#include "rgd/partition.hpp"
#include "rgd/reference.hpp"

using namespace rgd;

TEST(Partition, FamilyAMatchesDirectIntegration) {
    for (const auto& c : refvals::kZa) {
        const double got = partition({Family::A, c.beta, c.m, c.sigma2}).logZ.lnmag;
        EXPECT_NEAR(got, c.logZ, 1e-11) << "beta " << c.beta << " m " << c.m << " s2 " << c.sigma2;
    }
}

TEST(Partition, ChamberFamiliesMatchDirectIntegration) {
    for (const auto& c : refvals::kZSO) {
        EXPECT_NEAR(partition({Family::SO, 1, c.m, c.sigma2}).logZ.lnmag, c.logZ, 1e-11) << c.m << " " << c.sigma2;
    }
    for (const auto& c : refvals::kZSP) {
        EXPECT_NEAR(partition({Family::SP, 1, c.m, c.sigma2}).logZ.lnmag, c.logZ, 1e-11) << c.m << " " << c.sigma2;
    }
}

TEST(Partition, TrivialSizes) {
    EXPECT_EQ(z2ClosedForm(1, 0.7).lnmag, 0.0);
    for (double s2 : {0.02, 0.5, 3.0}) EXPECT_EQ(z4Pfaffian(1, s2), LogSigned::one()) << s2;
    EXPECT_NEAR(z1Pfaffian(1, 0.4).lnmag, 0.5 * std::numbers::ln2, 1e-15);
}

TEST(Partition, BetaTwoRoutesAgree) {
    for (int m = 1; m <= 12; ++m) {
        for (double s2 : {0.1, 1.0, 2.0}) EXPECT_LT(relDiff(z2ClosedForm(m, s2), z2Andreief(m, s2)), 1e-9) << m;
    }
}

TEST(Partition, ErfClosedForms) {
    for (double s2 : {0.1, 0.5, 1.0, 2.0, 4.0}) {
        EXPECT_LT(relDiff(z1Pfaffian(2, s2), z1ClosedForm(2, s2)), 1e-10);
        EXPECT_LT(relDiff(z1Pfaffian(4, s2), z1ClosedForm(4, s2)), 1e-10);
        EXPECT_LT(relDiff(z1Pfaffian(3, s2, OddBorder::Printed), z1ClosedForm(3, s2)), 1e-10);
    }
    EXPECT_THROW(z1ClosedForm(5, 1.0), DomainError);
}

TEST(Partition, BetaFourSizeTwo) {
    for (double s2 : {0.05, 0.3, 1.0, 2.5}) {
        const double direct = std::exp(2 * s2) - 4 * std::exp(0.5 * s2) + 3;
        EXPECT_NEAR(z4ClosedFormM2(s2).toReal() / direct, 1.0, 1e-12);
        EXPECT_LT(relDiff(z4Pfaffian(2, s2), z4ClosedFormM2(s2)), 1e-10);
    }
}

TEST(Partition, OddBorderChoiceMatters) {
    // Only the exact border reproduces the integral.
    const double exact = z1Pfaffian(3, 0.1, OddBorder::Exact).lnmag;
    const double printed = z1Pfaffian(3, 0.1, OddBorder::Printed).lnmag;
    EXPECT_GT(std::fabs(exact - printed), 1.0);
    EXPECT_EQ(partition({Family::A, 1, 3, 0.1}).logZ.lnmag, exact);
    PartitionOptions po;
    po.oddBorder = OddBorder::Printed;
    EXPECT_EQ(partition({Family::A, 1, 3, 0.1}, po).logZ.lnmag, printed);
}

TEST(Partition, ZetaTableAnchors) {
    EXPECT_NEAR(zeta(2, 0.1, OddBorder::Printed).lnmag, -0.680, 5e-4);
    EXPECT_NEAR(zeta(5, 1.0, OddBorder::Printed).lnmag, 16.930, 5e-4);
    EXPECT_NEAR(zeta(12, 2.4, OddBorder::Printed).lnmag, 231.790, 5e-4);
    EXPECT_NEAR(-zeta(2, 0.01).lnmag, 4.150, 2e-3);
    EXPECT_NEAR(-zeta(8, 0.01).lnmag, zetaSmallSigmaTable()[3], 2e-3);
}

TEST(Partition, VarianceConvention) {
    PartitionOptions po;
    po.convention = Convention::Variance;
    // one walker: the 1/sqrt(2 pi s2) measure against e^{-beta r^2 / 2 s2}
    EXPECT_NEAR(partition({Family::A, 4, 1, 0.02}, po).logZ.lnmag, -std::numbers::ln2, 1e-14);
    EXPECT_NEAR(partition({Family::A, 2, 1, 0.3}, po).logZ.lnmag, -0.5 * std::numbers::ln2, 1e-14);
    EXPECT_NEAR(partition({Family::A, 1, 1, 0.3}, po).logZ.lnmag, 0.0, 1e-14);
}

TEST(Partition, LargeSizesStayFinite) {
    for (int m : {20, 30, 40}) {
        const double v = z1Pfaffian(m, 0.01).lnmag;
        EXPECT_TRUE(std::isfinite(v)) << m;
    }
    EXPECT_TRUE(std::isfinite(z4Pfaffian(20, 0.02).lnmag));
    EXPECT_TRUE(std::isfinite(z2Andreief(12, 0.05).lnmag));
}

TEST(Partition, Asymptotics) {
    EXPECT_EQ(smallSigmaExponent(4, 3), 12);
    for (int beta : {1, 2, 4}) {
        const double a = partition({Family::A, beta, 4, 1e-6}).logZ.lnmag;
        const double b = partition({Family::A, beta, 4, 1.1e-6}).logZ.lnmag;
        const double slope = (b - a) / (0.5 * std::log(1.1));
        EXPECT_NEAR(slope, smallSigmaExponent(beta, 4), 0.01 * smallSigmaExponent(beta, 4));
    }
    // beta = 2 limit constant is exact
    EXPECT_NEAR(smallSigmaLimit(2, 3)(1e-3).lnmag, partition({Family::A, 2, 3, 1e-6}).logZ.lnmag, 1e-4);
    const double l = partition({Family::A, 2, 8, 40.0}).logZ.lnmag;
    EXPECT_NEAR(baxterLargeSigma(2, 8, 40.0) / l, 1.0, 0.05);
}

TEST(Partition, RejectsInvalidInput) {
    EXPECT_THROW(partition({Family::A, 2, 0, 1.0}), DomainError);
    EXPECT_THROW(partition({Family::A, 2, 2, 0.0}), DomainError);
    EXPECT_THROW(partition({Family::SP, 4, 2, 1.0}), DomainError);
    EXPECT_THROW(z2ClosedForm(3, std::nan("")), DomainError);
}
