#pragma once

#include <vector>

#include "rgd/numerics.hpp"
#include "rgd/qseries.hpp"

namespace rgd {

// Monic polynomials skew-orthogonal for the beta = 1 log-normal product.
struct SkewFamily {
    double sigma2 = 1.0;
    int maxDegree = 0;
    std::vector<Poly> polys;          // p~_0 .. p~_maxDegree
    std::vector<LogSigned> norms;     // h~_k = <p~_2k, p~_2k+1>_1 for 2k+1 <= maxDegree
    std::vector<LogSigned> strippedZ; // z^(0) .. z^(maxDegree + 1)
};

// z1 at size n with the e^{-sigma^2 n (n+1)^2 / 8} prefactor removed; z^(0) = 1.
LogSigned strippedZ1(int n, double sigma2);

SkewFamily buildFamily(double sigma2, int maxDegree);

// Degree 2l+1 polynomial from the Pfaffian of the matrix bordered by the one-body
// row 2(1, x^j)_2 and the column (1, x, ..., x^{2l+1}). Pairing it with x^j picks
// up a multiple of (1, x^j)_2, so it is not skew-orthogonal to the lower degrees;
// available for comparison only.
Poly borderedOddPolynomial(int l, double sigma2);

// phi~_n(e^u) = (1/2) int w_1(y) p~_n(y) sgn(e^u - y) dy
//            = (1/sqrt2) sum_k alpha_k e^{sigma^2 (k+1)^2/2} erf((u - (k+1) sigma^2) / sqrt(2 sigma^2))
double phiTilde(const SkewFamily& family, int n, double u);

// <f, g>_1 for monomial-basis polynomials, by bilinear expansion.
LogSigned skewProduct1(const Poly& f, const Poly& g, double sigma2);
// sum_{k,l} |f_k g_l <x^k, x^l>_1|, the scale against which the expansion is accurate.
LogSigned skewProduct1Scale(const Poly& f, const Poly& g, double sigma2);

}  // namespace rgd
