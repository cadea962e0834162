#pragma once

#include <cstdint>
#include <vector>

#include "rgd/numerics.hpp"
#include "rgd/products.hpp"

namespace rgd {

enum class OracleMethod { Quadrature, MonteCarlo };

struct OracleResult {
    LogSigned value;
    OracleMethod method = OracleMethod::Quadrature;
    // Absolute error for quadrature; standard error of log(value) for Monte Carlo.
    double errorBound = 0.0;
    std::uint64_t samples = 0;
};

// Nested adaptive quadrature of the defining integral over the ordered chamber, m <= 3.
OracleResult zOracleQuadrature(const EnsembleSpec& spec);

// Importance sampling from the Gaussian factor of the weight, 2 <= m <= 8.
// Batches are drawn from independent substreams, so the estimate does not depend on `threads`.
// Throws InsufficientSamples when the relative standard error exceeds 10%.
OracleResult zOracleMC(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t samples, int threads = 1);

// Several (beta, sigma^2) cells at the same m and family, estimated from one set of standard normal draws.
// Never throws on a large standard error; callers inspect errorBound.
std::vector<OracleResult> zOracleMCGrid(const std::vector<EnsembleSpec>& specs, std::uint64_t seed,
                                        std::uint64_t samples, int threads = 1);

// Density at r by (m-1)-dimensional quadrature, normalized by the Pfaffian/determinant partition function.
OracleResult rhoOracle(const EnsembleSpec& spec, double r);

}  // namespace rgd
