#include <gtest/gtest.h>

#include "reference_values.hpp"
#include "rgd/diffusion.hpp"
#include "rgd/pfaffian.hpp"

using namespace rgd;

namespace {

SkewMatrix fixture() {
    SkewMatrix a(6);
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) a.set(i, j, LogSigned::fromReal(refvals::kPfMatrix[i][j]));
    }
    return a;
}

}  // namespace

TEST(Pfaffian, SmallCases) {
    SkewMatrix a(2);
    a.set(0, 1, LogSigned::fromReal(-4.0));
    EXPECT_DOUBLE_EQ(pfaffian(a).toReal(), -4.0);
    EXPECT_EQ(pfaffian(SkewMatrix(0)), LogSigned::one());
    EXPECT_THROW(pfaffian(SkewMatrix(3)), OddDimension);
}

TEST(Pfaffian, IntegerMatrix) {
    const SkewMatrix a = fixture();
    EXPECT_NEAR(pfaffian(a).toReal(), refvals::kPfValue, 1e-11);
    std::vector<std::vector<LogSigned>> d(6, std::vector<LogSigned>(6));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) d[i][j] = a(i, j);
    }
    EXPECT_NEAR(logDet(d).toReal() / refvals::kDetValue, 1.0, 1e-13);
}

TEST(Pfaffian, RowAndColumnSwapFlipsSign) {
    const SkewMatrix a = fixture();
    SkewMatrix b(6);
    const int perm[6] = {1, 0, 2, 3, 4, 5};
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) b.set(i, j, a(perm[i], perm[j]));
    }
    EXPECT_NEAR(pfaffian(b).toReal(), -refvals::kPfValue, 1e-11);
}

TEST(Pfaffian, LastColumnExpansion) {
    const SkewMatrix a = fixture();
    const auto c = pfaffianMinorsLastColumn(a);
    LogSigned sum;
    for (int k = 0; k < 5; ++k) sum += a(k, 5) * c[k];
    EXPECT_NEAR(sum.toReal(), refvals::kPfValue, 1e-10);

    SkewMatrix core(5);
    std::vector<LogSigned> border(5);
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) core.set(i, j, a(i, j));
        border[i] = a(i, 5);
    }
    EXPECT_NEAR(pfaffianBordered(core, border).toReal(), refvals::kPfValue, 1e-11);
}

TEST(Pfaffian, WideDynamicRange) {
    // Pf of a block diagonal matrix with blocks e^{+-700}
    SkewMatrix a(4);
    a.set(0, 1, LogSigned{1, 700.0});
    a.set(2, 3, LogSigned{-1, -700.0});
    a.set(0, 2, LogSigned{1, -750.0});
    const LogSigned pf = pfaffian(a);
    EXPECT_EQ(pf.sign, -1);
    EXPECT_NEAR(pf.lnmag, 0.0, 1e-12);
}

TEST(Pfaffian, ZeroRowIsSingular) {
    SkewMatrix a(4);
    a.set(0, 1, LogSigned::one());
    a.set(0, 2, LogSigned::one());
    const PfaffianResult r = pfaffianDetailed(a);
    EXPECT_TRUE(r.singular);
    EXPECT_TRUE(r.value.isZero());
}

TEST(Pfaffian, DiagonalWritesMustBeZero) {
    SkewMatrix a(2);
    EXPECT_THROW(a.set(1, 1, LogSigned::one()), DomainError);
    EXPECT_NO_THROW(a.set(1, 1, LogSigned{}));
}
