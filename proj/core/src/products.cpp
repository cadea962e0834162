#include "rgd/products.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

namespace rgd {

void EnsembleSpec::validate() const {
    if (m < 1) throw DomainError("m must be a positive integer");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw DomainError("sigma^2 must be positive and finite");
    if (beta != 1 && beta != 2 && beta != 4) throw DomainError("beta must be 1, 2 or 4");
    if (family != Family::A && beta != 1) throw DomainError("so/sp families are only defined for beta = 1");
}

LogSigned innerSW(int k, int l, double sigma2) {
    const double s = k + l + 1;
    return {1, 0.25 * sigma2 * s * s};
}

LogSigned skew4(int k, int l, double sigma2) {
    if (k == l) return {};
    const double s = k + l;
    return {l > k ? 1 : -1, 0.25 * sigma2 * s * s + std::log(0.5 * std::abs(l - k))};
}

LogSigned skew1(int k, int l, double sigma2) {
    if (k == l) return {};
    const double e = erf(0.5 * std::sqrt(sigma2) * (l - k));
    const double a = k + 1.0;
    const double b = l + 1.0;
    return LogSigned{1, 0.5 * sigma2 * (a * a + b * b)} * LogSigned::fromReal(e);
}

LogSigned borderMoment1(int i, double sigma2) {
    return {1, 0.5 * std::log(2.0) + 0.5 * sigma2 * i * i};
}

namespace {

double logBinomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// f(r) = sum_t coef_t e^{c_t r}, coefficients kept as LogSigned.
struct ExpSum {
    std::vector<LogSigned> coef;
    std::vector<int> c;
    int cmax() const { return *std::max_element(c.begin(), c.end()); }
};

// cosh^{j-1} r
ExpSum coshPower(int j) {
    ExpSum s;
    for (int l = 0; l <= j - 1; ++l) {
        s.coef.push_back({1, logBinomial(j - 1, l) - (j - 1) * std::log(2.0)});
        s.c.push_back(j - 1 - 2 * l);
    }
    return s;
}

// sinh r cosh^{j-1} r
ExpSum sinhCoshPower(int j) {
    ExpSum s;
    for (int l = 0; l <= j - 1; ++l) {
        const double lc = logBinomial(j - 1, l) - j * std::log(2.0);
        s.coef.push_back({1, lc});
        s.c.push_back(j - 2 * l);
        s.coef.push_back({-1, lc});
        s.c.push_back(j - 2 * l - 2);
    }
    return s;
}

// int_0^inf e^{-r^2/2s2} f(r) dr / sqrt(pi s2) = (1/sqrt2) sum coef e^{s2 c^2/2} erfc(-sigma c/sqrt2)
LogSigned oneBody(const ExpSum& f, double sigma2) {
    const double sigma = std::sqrt(sigma2);
    LogSigned acc;
    for (std::size_t t = 0; t < f.c.size(); ++t) {
        const double c = f.c[t];
        const double ec = erfc(-sigma * c / std::numbers::sqrt2);
        acc += f.coef[t] * LogSigned{1, 0.5 * sigma2 * c * c - 0.5 * std::log(2.0)} * LogSigned::fromReal(ec);
    }
    return acc;
}

// (1/2) int_0^inf int_0^inf g_i(r1) g_j(r2) sign(r2 - r1) with g = e^{-r^2/2s2} f / sqrt(pi s2).
LogSigned skewHalfLine(const ExpSum& fi, const ExpSum& fj, double sigma2) {
    const double sigma = std::sqrt(sigma2);
    const double ci = fi.cmax();
    const double cj = fj.cmax();
    const double logScale = 0.5 * sigma2 * (ci * ci + cj * cj);

    std::vector<double> ai(fi.c.size());
    for (std::size_t s = 0; s < fi.c.size(); ++s) ai[s] = fi.coef[s].sign * std::exp(fi.coef[s].lnmag);
    std::vector<double> bj(fj.c.size());
    for (std::size_t t = 0; t < fj.c.size(); ++t) {
        const double c = fj.c[t];
        bj[t] = fj.coef[t].sign * std::exp(fj.coef[t].lnmag + 0.5 * sigma2 * (c * c - cj * cj));
    }

    auto integrand = [&](double r) {
        double outer = 0.0;
        for (std::size_t s = 0; s < fi.c.size(); ++s) {
            const double c = fi.c[s];
            outer += ai[s] * std::exp(-r * r / (2.0 * sigma2) + c * r - 0.5 * sigma2 * ci * ci);
        }
        if (outer == 0.0) return 0.0;
        double inner = 0.0;
        for (std::size_t t = 0; t < fj.c.size(); ++t) {
            const double c = fj.c[t];
            const double e0 = erf(sigma * c / std::numbers::sqrt2);
            const double er = erf((r - sigma2 * c) / (sigma * std::numbers::sqrt2));
            inner += bj[t] * (1.0 - e0 - 2.0 * er);
        }
        return outer * inner;
    };

    const double peak = std::max(0.0, sigma2 * ci);
    const double hi = peak + 14.0 * sigma;
    QuadratureSpec spec;
    spec.absTol = 1e-13;
    spec.relTol = 1e-13;
    spec.maxSubdivisions = 4096;
    double total = 0.0;
    // Split so the Gaussian envelope is resolved even when it sits far from the origin.
    const double lo = std::max(0.0, peak - 14.0 * sigma);
    std::vector<double> cuts{0.0};
    if (lo > 0.0) cuts.push_back(lo);
    const int pieces = 8;
    for (int p = 1; p <= pieces; ++p) cuts.push_back(lo + (hi - lo) * p / pieces);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        spec.lo = cuts[k];
        spec.hi = cuts[k + 1];
        total += integrate(integrand, spec).value;
    }
    // prefactor (1/2)(1/(pi s2)) sigma sqrt(pi/2)
    const double pre = 1.0 / (2.0 * sigma * std::sqrt(2.0 * std::numbers::pi));
    return LogSigned{1, logScale} * LogSigned::fromReal(pre * total);
}

}  // namespace

LogSigned innerSO(int j, double sigma2) {
    if (j < 1) throw DomainError("innerSO: j must be >= 1");
    LogSigned acc;
    for (int l = 0; l <= j - 1; ++l) {
        const double c = j - 1 - 2 * l;
        acc += LogSigned{1, logBinomial(j - 1, l) - j * std::log(2.0) + 0.5 * sigma2 * c * c};
    }
    return acc;
}

LogSigned skewSO(int i, int j, double sigma2) {
    if (i < 1 || j < 1) throw DomainError("skewSO: indices start at 1");
    if (i == j) return {};
    if (i > j) return -skewSO(j, i, sigma2);
    return skewHalfLine(coshPower(i), coshPower(j), sigma2);
}

LogSigned borderSO(int j, double sigma2) {
    if (j < 1) throw DomainError("borderSO: j must be >= 1");
    return oneBody(coshPower(j), sigma2);
}

LogSigned innerSP(int j, double sigma2) {
    if (j < 1) throw DomainError("innerSP: j must be >= 1");
    const double sigma = std::sqrt(sigma2);
    LogSigned acc;
    for (int l = 0; l <= j - 1; ++l) {
        const double lb = logBinomial(j - 1, l) - (j + 1) * std::log(2.0);
        const double a = j - 2 * l;
        const double b = j - 2 * l - 2;
        // 1 + erf(z) = erfc(-z)
        acc += LogSigned{1, lb + 0.25 * sigma2 * a * a} * LogSigned::fromReal(erfc(-0.5 * sigma * a));
        acc -= LogSigned{1, lb + 0.25 * sigma2 * b * b} * LogSigned::fromReal(erfc(-0.5 * sigma * b));
    }
    return acc;
}

LogSigned skewSP(int i, int j, double sigma2) {
    if (i < 1 || j < 1) throw DomainError("skewSP: indices start at 1");
    if (i == j) return {};
    if (i > j) return -skewSP(j, i, sigma2);
    return skewHalfLine(sinhCoshPower(i), sinhCoshPower(j), sigma2);
}

LogSigned borderSP(int j, double sigma2) {
    if (j < 1) throw DomainError("borderSP: j must be >= 1");
    return oneBody(sinhCoshPower(j), sigma2);
}

}  // namespace rgd
