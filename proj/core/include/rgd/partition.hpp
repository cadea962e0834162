#pragma once

#include <functional>
#include <optional>

#include "rgd/numerics.hpp"
#include "rgd/products.hpp"

namespace rgd {

enum class Route { ClosedForm, AndreiefDet, DeBruijnPf, Asymptotic, Oracle };

const char* routeName(Route r);

// Border column used for odd m in the beta = 1 Pfaffians.
//   Printed: 2 (1, x^{i-1})_2 with the squared weight. Reproduces the published
//            m = 3 erf form and the odd rows of the zeta table, but not the integral.
//   Exact:   the one-body integral of x^{i-1} against the beta = 1 weight.
enum class OddBorder { Printed, Exact };

// Paper: c_1 = 1/2, c_2 = c_4 = 1, measure dr / sqrt(pi sigma^2).
// Variance: c_beta = beta/2, measure dr / sqrt(2 pi sigma^2).
enum class Convention { Paper, Variance };

struct PartitionOptions {
    Convention convention = Convention::Paper;
    std::optional<OddBorder> oddBorder;
};

struct PartitionResult {
    LogSigned logZ;
    Route route = Route::ClosedForm;
    EnsembleSpec spec;
};

// z_2 = e^{sigma^2 m(m^2-1)/24} prod_{j=1}^{m-1} [2 sinh(sigma^2 j/4)]^{m-j}
LogSigned z2ClosedForm(int m, double sigma2);
// e^{-sigma^2 m^3/4} det[(x^{i-1}, x^{j-1})_2]
LogSigned z2Andreief(int m, double sigma2);

// e^{-sigma^2 m(m+1)^2/8} Pf[2 <x^{i-1}, x^{j-1}>_1], bordered for odd m.
LogSigned z1Pfaffian(int m, double sigma2, OddBorder border = OddBorder::Exact);
// Explicit erf expressions for m = 2, 3, 4 (m = 3 uses the printed border).
LogSigned z1ClosedForm(int m, double sigma2);

// Normaliser of the Riemannian Gaussian on SPD(m).
LogSigned zeta(int m, double sigma2, OddBorder border = OddBorder::Exact);

// e^{-sigma^2 m (m-1/2)^2} Pf[2 <x^{i-1}, x^{j-1}>_4]_{2m x 2m}
LogSigned z4Pfaffian(int m, double sigma2);
// e^{2 sigma^2} - 4 e^{sigma^2/2} + 3
LogSigned z4ClosedFormM2(double sigma2);

LogSigned zSOPfaffian(int m, double sigma2, OddBorder border = OddBorder::Exact);
LogSigned zSPPfaffian(int m, double sigma2, OddBorder border = OddBorder::Exact);

// Dispatch on family and beta, then apply the convention map.
PartitionResult partition(const EnsembleSpec& spec, const PartitionOptions& opt = {});

// Value of z_beta under `conv` given a callable for the paper convention.
LogSigned applyConvention(Convention conv, int beta, int m, double sigma2,
                          const std::function<LogSigned(double)>& paperZ);

// Leading small-sigma behaviour C sigma^{beta m(m-1)/2}. For beta = 1 and odd m
// only the power is meaningful (C = 1).
std::function<LogSigned(double sigma)> smallSigmaLimit(int beta, int m);
int smallSigmaExponent(int beta, int m);

// (beta/24) sigma^2 m (m^2 - 1) + (beta/8) m log sigma^2
double baxterLargeSigma(int beta, int m, double sigma2);

// -log m! - (m/2) log(pi sigma^2) + (beta/2) F
double planarLimitShape(int beta, int m, double sigma2, double F);

}  // namespace rgd
