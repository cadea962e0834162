#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "reference_values.hpp"
#include "rgd/diffusion.hpp"

using namespace rgd;

TEST(Diffusion, KernelsMatchDirectDeterminants) {
    EXPECT_NEAR(kmKernelA({{1.2, -0.3}, {1.0, 0.0}, 0.7, Chamber::A}).lnmag, refvals::kKernelALog, 1e-13);
    EXPECT_NEAR(kmKernelB({{1.5, 0.4}, {0.9, 0.2}, 0.6, Chamber::B}).lnmag, refvals::kKernelBLog, 1e-12);
}

TEST(Diffusion, OneWalkerIsTheHeatKernel) {
    const LogSigned k = kmKernelA({{0.5}, {0.0}, 1.0, Chamber::A});
    EXPECT_NEAR(k.lnmag, -0.5 * std::log(2 * std::numbers::pi) - 0.125, 1e-15);
}

TEST(Diffusion, EqualSpacingReduction) {
    const std::vector<double> x{1.1, 0.2, -0.4, -2.0};
    for (double t : {0.4, 1.0, 3.0}) {
        const LogSigned a = kmKernelA({x, {3.0, 2.0, 1.0, 0.0}, t, Chamber::A});
        EXPECT_LT(relDiff(a, kmEqualSpacingReduction(x, t)), 1e-12) << t;
    }
}

TEST(Diffusion, SchurWeight) {
    const std::vector<double> x{0.7, -0.2, -1.0};
    // eta = (2, 1, 0) is the empty partition
    EXPECT_NEAR(schurWeight({2, 1, 0}, x, 1.0).toReal(), 1.0, 1e-13);
    // eta = (3, 1, 0) is s_(1) = z1 + z2 + z3
    double sum = 0.0;
    for (double v : x) sum += std::exp(v);
    EXPECT_NEAR(schurWeight({3, 1, 0}, x, 1.0).toReal() / sum, 1.0, 1e-13);
    EXPECT_THROW(schurWeight({1, 1, 0}, x, 1.0), DomainError);
    EXPECT_THROW(schurWeight({2, 1, 0}, {0.5, 0.5, 0.1}, 1.0), DegenerateArguments);
}

TEST(Diffusion, ChapmanKolmogorov) {
    EXPECT_LT(chapmanKolmogorovCheck({0.4}, {-0.3}, 0.7, 0.4).relError, 1e-6);
    EXPECT_LT(chapmanKolmogorovCheck({1.0, 0.0}, {1.2, -0.3}, 0.5, 0.5).relError, 1e-6);
    EXPECT_LT(chapmanKolmogorovCheck({0.6}, {0.9}, 0.5, 0.5, Chamber::B).relError, 1e-6);
    EXPECT_THROW(chapmanKolmogorovCheck({1.0, 0.5, 0.0}, {1.0, 0.5, 0.0}, 1.0, 1.0), DomainError);
}

TEST(Diffusion, JacobianIsSymmetricUnderReordering) {
    EXPECT_NEAR(jacobianB({1.3, 0.4}).lnmag, jacobianB({0.4, 1.3}).lnmag, 1e-15);
    EXPECT_TRUE(jacobianB({0.0, 1.0}).isZero());
}

TEST(Diffusion, ConfigurationValidation) {
    EXPECT_THROW((WalkerConfig{{0.5, 0.7}, {1.0, 0.0}, 1.0, Chamber::A}.validate()), DomainError);
    EXPECT_THROW((WalkerConfig{{0.5}, {1.0, 0.0}, 1.0, Chamber::A}.validate()), DomainError);
    EXPECT_THROW((WalkerConfig{{0.5}, {0.2}, 0.0, Chamber::A}.validate()), DomainError);
    EXPECT_THROW((WalkerConfig{{0.5, -0.1}, {1.0, 0.5}, 1.0, Chamber::B}.validate()), DomainError);
    EXPECT_NO_THROW((WalkerConfig{{0.7, 0.5}, {1.0, 0.0}, 1.0, Chamber::A}.validate()));
}
