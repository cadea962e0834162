#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "reference_values.hpp"
#include "rgd/density.hpp"

using namespace rgd;

TEST(Density, SizeTwoMatchesDirectIntegration) {
    for (const auto& c : refvals::kRhoM2) {
        const auto curve = densityCurve({Family::A, c.beta, 2, c.sigma2}, {c.r});
        EXPECT_NEAR(curve.values[0] / c.rho, 1.0, 1e-10) << c.beta << " " << c.sigma2 << " " << c.r;
    }
}

TEST(Density, OneWalkerIsGaussian) {
    const double s2 = 0.7;
    for (double r : {-1.0, 0.0, 0.4}) {
        EXPECT_NEAR(rho2(1, s2, r), std::exp(-r * r / s2) / std::sqrt(std::numbers::pi * s2), 1e-15);
    }
}

TEST(Density, MassOnDefaultGrid) {
    for (int m : {1, 5, 12}) {
        const EnsembleSpec spec{Family::A, 2, m, 1.0};
        const auto g = defaultDensityGrid(spec);
        EXPECT_NEAR(trapezoid(g, densityCurve(spec, g).values), m, 1e-6 * m) << m;
    }
    const EnsembleSpec s1{Family::A, 1, 4, 0.5};
    const auto g = defaultDensityGrid(s1);
    EXPECT_NEAR(trapezoid(g, densityCurve(s1, g).values), 4.0, 4e-6);
}

TEST(Density, MixtureMatchesChristoffelDarboux) {
    for (int m : {2, 7, 12}) {
        const Mixture mix = rho2Mixture(m, 0.4);
        EXPECT_EQ(mix.centers.size(), static_cast<std::size_t>(2 * m - 1));
        for (double r : {-1.3, 0.0, 0.25, 2.1}) EXPECT_NEAR(mix(r) / rho2(m, 0.4, r), 1.0, 1e-9) << m << " " << r;
    }
}

TEST(Density, KernelDiagonalIsTheDensity) {
    // rho in r is K(x, x) x with x = e^{r + m sigma^2 / 2}
    for (double r : {-0.5, 0.3}) {
        const double x = std::exp(r + 0.5 * 0.6 * 4);
        EXPECT_NEAR(cdKernel(4, 0.6, x, x).toReal() * x / rho2(4, 0.6, r), 1.0, 1e-11);
    }
    EXPECT_THROW(cdKernel(4, 0.6, -1.0, 1.0), DomainError);
}

TEST(Density, TwentyPeaksAtSmallSigma) {
    std::vector<double> g;
    for (int i = 0; i <= 8000; ++i) g.push_back(-8.0 + 0.002 * i);
    EXPECT_EQ(countLocalMaxima(densityCurve({Family::A, 2, 20, 0.2}, g).values), 20);
}

TEST(Density, UnsupportedCombinations) {
    EXPECT_THROW(densityCurve({Family::A, 1, 3, 1.0}, {0.0}), DomainError);
    EXPECT_THROW(densityCurve({Family::A, 4, 3, 1.0}, {0.0}), DomainError);
    EXPECT_THROW(densityCurve({Family::SO, 1, 2, 1.0}, {0.0}), DomainError);
}
