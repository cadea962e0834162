#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "rgd/numerics.hpp"
#include "rgd/products.hpp"
#include "rgd/skewortho.hpp"

namespace rgd {

namespace detail {
struct MixtureExact;
}

// rho_2(r) = sum_s c_s exp(-(r - r_s)^2 / sigma^2)
struct Mixture {
    int m = 1;
    double sigma2 = 1.0;
    std::vector<double> centers;
    std::vector<LogSigned> coefficients;
    // Coefficients to 50 digits; the sum cancels by up to ~15 orders of magnitude.
    std::shared_ptr<const detail::MixtureExact> exact;

    double operator()(double r) const;
};

struct DensityCurve {
    EnsembleSpec spec;
    std::vector<double> grid;
    std::vector<double> values;
    std::optional<Mixture> mixture;
};

// beta = 2 density from the Christoffel-Darboux bracket of the SW recurrence.
double rho2(int m, double sigma2, double r);
Mixture rho2Mixture(int m, double sigma2);

// beta = 1 density for even m from the skew-orthogonal family (maxDegree >= m-1).
double rho1(const SkewFamily& family, int m, double r);
// Explicit m = 2 expression.
double rho1M2(double sigma2, double r);

// beta = 4, m = 2.
double rho4M2(double sigma2, double r);

// K_m(x, y) = sqrt(w(x) w(y)) sum_{k<m} P_k(x) P_k(y) with orthonormal SW polynomials.
LogSigned cdKernel(int m, double sigma2, double x, double y);

// Evaluate the density of `spec` on a grid; throws DomainError for unsupported (beta, m).
DensityCurve densityCurve(const EnsembleSpec& spec, const std::vector<double>& grid, bool withMixture = false);

// Symmetric grid covering the support with spacing sigma/8; the trapezoid mass
// on it reproduces m well below 1e-6.
std::vector<double> defaultDensityGrid(const EnsembleSpec& spec);

int countLocalMaxima(const std::vector<double>& values);
double trapezoid(const std::vector<double>& grid, const std::vector<double>& values);

}  // namespace rgd
