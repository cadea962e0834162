#pragma once

#include <vector>

#include "rgd/numerics.hpp"

namespace rgd {

enum class Chamber { A, B };

struct WalkerConfig {
    std::vector<double> x;    // end positions, strictly decreasing
    std::vector<double> eta;  // start positions, strictly decreasing
    double t = 1.0;
    Chamber family = Chamber::A;

    // Throws DomainError unless the invariants of the chosen chamber hold.
    void validate() const;
};

// det[N_t(x_i - eta_j)], absorbing walls between neighbours.
LogSigned kmKernelA(const WalkerConfig& cfg);

// e^{-|eta|^2/2t} c_t(x) for eta_j = m - j, with
// c_t(x) = (2 pi t)^{-m/2} e^{-|x|^2/2t} prod_{i<j} (e^{x_i/t} - e^{x_j/t}).
// The product is oriented so that it is positive for decreasing x, matching det[e^{x_i eta_j/t}].
LogSigned kmEqualSpacingReduction(const std::vector<double>& x, double t);

// (2 pi t)^{-m/2} e^{-(|x|^2 + |eta|^2)/2t} det[e^{x_i eta_j/t} - e^{-x_i eta_j/t}], extra wall at 0.
LogSigned kmKernelB(const WalkerConfig& cfg);

// prod_{i<j} 4 sinh|l_i - l_j|/2 sinh|l_i + l_j|/2 * prod_i 2 sinh|l_i/2|
LogSigned jacobianB(const std::vector<double>& lambda);

// s_lambda(e^{x_1/t}, ..., e^{x_m/t}) with lambda_j = eta_j - m + j, as a ratio of alternants.
LogSigned schurWeight(const std::vector<int>& eta, const std::vector<double>& x, double t);

// log det of a matrix given entrywise as LogSigned, rows rescaled by their largest entry.
LogSigned logDet(const std::vector<std::vector<LogSigned>>& a);

struct ChapmanKolmogorov {
    double lhs = 0.0;
    double rhs = 0.0;
    double relError = 0.0;
};

// int_{chamber} b_s(y, eta) b_t(x, y) dy against b_{s+t}(x, eta), m <= 2.
ChapmanKolmogorov chapmanKolmogorovCheck(const std::vector<double>& etaStart, const std::vector<double>& xEnd,
                                         double s, double t, Chamber family = Chamber::A);

}  // namespace rgd
