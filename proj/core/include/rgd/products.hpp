#pragma once

#include "rgd/numerics.hpp"

namespace rgd {

enum class Family { A, SO, SP };

struct EnsembleSpec {
    Family family = Family::A;
    int beta = 2;
    int m = 1;
    double sigma2 = 1.0;

    // c_beta: 1/2 for beta = 1, 1 for beta in {2, 4}.
    double cBeta() const { return beta == 1 ? 0.5 : 1.0; }
    void validate() const;
};

// (x^k, x^l)_2 = e^{sigma^2 (k+l+1)^2 / 4}
LogSigned innerSW(int k, int l, double sigma2);

// <x^k, x^l>_4 = e^{sigma^2 (k+l)^2 / 4} (l - k) / 2
LogSigned skew4(int k, int l, double sigma2);

// <x^k, x^l>_1 = e^{sigma^2 [(k+1)^2 + (l+1)^2] / 2} erf(sigma (l - k) / 2)
LogSigned skew1(int k, int l, double sigma2);

// int_0^inf e^{-(log x)^2 / 2 sigma^2} x^{i-1} dx / sqrt(pi sigma^2) = sqrt(2) e^{sigma^2 i^2 / 2}
LogSigned borderMoment1(int i, double sigma2);

// (1, x^{j-1})_2 for the so(2m) family, weight e^{-r^2/sigma^2}, x = cosh r.
LogSigned innerSO(int j, double sigma2);

// <x^{i-1}, x^{j-1}>_1 for so(2m); one quadrature over r_1 with the inner integral in erf form.
LogSigned skewSO(int i, int j, double sigma2);

// int_0^inf e^{-r^2/2sigma^2} cosh^{j-1} r dr / sqrt(pi sigma^2)
LogSigned borderSO(int j, double sigma2);

// (1, x^{j-1})_2 for sp(2m): weight e^{-r^2/sigma^2} sinh r, x = cosh r.
LogSigned innerSP(int j, double sigma2);

// <x^{i-1}, x^{j-1}>_1 for sp(2m).
LogSigned skewSP(int i, int j, double sigma2);

// int_0^inf e^{-r^2/2sigma^2} sinh r cosh^{j-1} r dr / sqrt(pi sigma^2)
LogSigned borderSP(int j, double sigma2);

}  // namespace rgd
