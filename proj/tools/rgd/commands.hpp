#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "output.hpp"
#include "rgd/partition.hpp"
#include "rgd/products.hpp"

namespace rgd::cli {

struct RunConfig {
    Family family = Family::A;
    int beta = 1;
    bool betaGiven = false;
    std::string m;       // INT or RANGE, unparsed
    std::string sigma2;  // REAL or RANGE, unparsed
    std::string grid;    // LO:HI:STEP; empty picks a default grid
    Format format = Format::Csv;
    std::uint64_t seed = 20240611;
    int threads = 1;
    Convention convention = Convention::Paper;
    bool linear = false;
    std::optional<OddBorder> border;

    // table
    bool smallSigma = false;
    // density
    std::string mixturePath;
    // kernel
    std::string x;
    std::string eta;
    double t = 1.0;
    char chamber = 'a';
    // verify
    std::uint64_t samples = 10'000'000;
    std::vector<int> criteria;
    bool quiet = false;
};

// Each returns the process exit code; rgd::DomainError and UsageError mean
// bad input (2), rgd::NumericalFailure a failed computation (3).
int cmdZeta(const RunConfig& c, std::ostream& out);
int cmdPartition(const RunConfig& c, std::ostream& out);
int cmdTable(const RunConfig& c, std::ostream& out);
int cmdDensity(const RunConfig& c, std::ostream& out);
int cmdKernel(const RunConfig& c, std::ostream& out);
int cmdVerify(const RunConfig& c, std::ostream& out, std::ostream& log);

}  // namespace rgd::cli
