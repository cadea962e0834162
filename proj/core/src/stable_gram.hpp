#pragma once

#include "rgd/numerics.hpp"

// Gram-type determinants and Pfaffians evaluated in a basis of polynomials
// orthonormal for the log-normal weight, built numerically by Lanczos on
// Gauss-Legendre panels. Avoids the cancellation of the monomial Hankel
// matrices at small sigma^2.
namespace rgd::detail {

// Pf[2<x^{i-1}, x^{j-1}>_1] for even m; bordered Pfaffian for odd m with
// either the exact one-body column (exactBorder) or 2(1, x^{i-1})_2.
LogSigned skew1PfaffianStable(int m, double sigma2, bool exactBorder);

// log det[(x^{i-1}, x^{j-1})_2], i, j = 1..m
double gram2LogDetStable(int m, double sigma2);

// Pf[2<x^{i-1}, x^{j-1}>_4], i, j = 1..2m
LogSigned skew4PfaffianStable(int m, double sigma2);

}  // namespace rgd::detail
