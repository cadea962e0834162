#include <gtest/gtest.h>

#include <cmath>

#include "rgd/partition.hpp"
#include "rgd/skewortho.hpp"

using namespace rgd;

TEST(SkewOrtho, FamilyIsMonicAndSkewOrthogonal) {
    for (double s2 : {0.3, 1.0}) {
        const SkewFamily f = buildFamily(s2, 7);
        ASSERT_EQ(f.polys.size(), 8u);
        for (int n = 0; n <= 7; ++n) {
            EXPECT_EQ(f.polys[n].degree(), n);
            EXPECT_DOUBLE_EQ(f.polys[n].coeffs[n].toReal(), 1.0);
        }
        for (int a = 0; a <= 7; ++a) {
            for (int b = a + 1; b <= 7; ++b) {
                const LogSigned v = skewProduct1(f.polys[a], f.polys[b], s2);
                if (a % 2 == 0 && b == a + 1) {
                    EXPECT_LT(relDiff(v, f.norms[a / 2]), 1e-9);
                } else if (!v.isZero()) {
                    const LogSigned sc = skewProduct1Scale(f.polys[a], f.polys[b], s2);
                    EXPECT_LT(std::exp(v.lnmag - sc.lnmag), 1e-9) << a << "," << b;
                }
            }
        }
    }
}

TEST(SkewOrtho, NormsMultiplyToThePartitionFunction) {
    const double s2 = 0.6;
    const SkewFamily f = buildFamily(s2, 5);
    LogSigned prod = LogSigned::one();
    for (const auto& h : f.norms) prod *= LogSigned::fromReal(2.0) * h;
    // z^(6) is the stripped z1 for six variables; each pair brings Pf(2A) = 2 Pf(A)
    EXPECT_LT(relDiff(prod, f.strippedZ[6]), 1e-9);
    EXPECT_EQ(strippedZ1(0, s2), LogSigned::one());
}

TEST(SkewOrtho, LowDegreesInClosedForm) {
    const double s2 = 0.8;
    const SkewFamily f = buildFamily(s2, 3);
    EXPECT_NEAR(f.polys[1].coeffs[0].toReal(), 0.0, 1e-14);
    const double e1 = std::erf(0.5 * std::sqrt(s2));
    const double e2 = std::erf(std::sqrt(s2));
    EXPECT_NEAR(f.polys[2].coeffs[0].toReal() / std::exp(4 * s2), 1.0, 1e-12);
    EXPECT_NEAR(f.polys[2].coeffs[1].toReal() / (-std::exp(2.5 * s2) * e2 / e1), 1.0, 1e-12);
}

TEST(SkewOrtho, PhiIsHalfTheSignedIntegral) {
    // phi_0(e^u) rises from -h to +h with h = (1/2) int w_1 = sqrt(2)/2 e^{s2/2}
    const double s2 = 0.5;
    const SkewFamily f = buildFamily(s2, 1);
    EXPECT_NEAR(phiTilde(f, 0, 50.0), std::exp(0.5 * s2) / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(phiTilde(f, 0, -50.0), -std::exp(0.5 * s2) / std::sqrt(2.0), 1e-12);
}
