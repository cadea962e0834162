#include <gtest/gtest.h>

#include "reference_values.hpp"
#include "rgd/qseries.hpp"

using namespace rgd;

TEST(QSeries, ElementaryFunctions) {
    const QParam qp = QParam::sw(refvals::kSwSigma2);
    EXPECT_NEAR(qBinomial(6, 3, qp).toReal() / refvals::kQBinomial63, 1.0, 1e-13);
    EXPECT_NEAR(qGamma(5, qp).toReal() / refvals::kQGamma5, 1.0, 1e-13);
    EXPECT_NEAR(qNumber(2.5, qp) / refvals::kQNumber25, 1.0, 1e-13);
    EXPECT_DOUBLE_EQ(qBinomial(4, 0, qp).toReal(), 1.0);
}

TEST(QSeries, SinhParametrisation) {
    const QParam qp = QParam::sinh(0.4);
    EXPECT_NEAR(qp.q, std::exp(-0.4), 1e-15);
    EXPECT_NEAR(qp.sigma(), 0.4, 1e-15);
    // [n]_q -> n as q -> 1
    EXPECT_NEAR(qNumber(3.0, QParam::sinh(1e-5)), 3.0, 1e-8);
}

TEST(QSeries, Log1mqkKeepsDigitsNearOne) {
    const double lq = -1e-12;
    EXPECT_NEAR(log1mqk(lq, 3), std::log(3e-12), 1e-9);
}

TEST(StieltjesWigert, MonicPolynomialsAndNorms) {
    const QParam qp = QParam::sw(refvals::kSwSigma2);
    for (int n = 0; n <= 4; ++n) {
        const MonicSW p = swMonic(n, qp);
        ASSERT_EQ(p.poly.degree(), n);
        for (int k = 0; k <= n; ++k) {
            EXPECT_NEAR(p.poly.coeffs[k].toReal(), refvals::kSwMonic[n][k], 1e-11 * std::fabs(refvals::kSwMonic[n][0]) + 1e-13)
                << n << "," << k;
        }
        EXPECT_NEAR(p.normSquared.lnmag, refvals::kSwLogNorm[n], 1e-11) << n;
    }
}

TEST(StieltjesWigert, RecurrenceCoefficients) {
    const QParam qp = QParam::sw(refvals::kSwSigma2);
    for (int n = 0; n <= 3; ++n) {
        EXPECT_NEAR(swRecurrenceB(n, qp) / refvals::kSwB[n], 1.0, 1e-12) << n;
        if (n > 0) EXPECT_NEAR(swRecurrenceC(n, qp) / refvals::kSwC[n], 1.0, 1e-12) << n;
    }
}

TEST(StieltjesWigert, OrthonormalPolynomialsHaveUnitNorm) {
    const QParam qp = QParam::sw(refvals::kSwSigma2);
    for (int n = 0; n <= 4; ++n) {
        const Poly p = swPolynomial(n, qp);
        const double lead = p.coeffs.back().toReal();
        EXPECT_NEAR(std::log(lead * lead), -refvals::kSwLogNorm[n], 1e-11) << n;
    }
}

TEST(Poly, EvaluationAndDerivative) {
    Poly p;
    p.coeffs = {LogSigned::fromReal(1.0), LogSigned::fromReal(-3.0), LogSigned::fromReal(2.0)};
    EXPECT_NEAR(p.eval(2.0), 3.0, 1e-14);
    const Poly d = p.derivative();
    EXPECT_EQ(d.degree(), 1);
    EXPECT_NEAR(d.eval(2.0), 5.0, 1e-14);
}
