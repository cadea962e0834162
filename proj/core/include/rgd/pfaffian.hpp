#pragma once

#include <vector>

#include "rgd/numerics.hpp"

namespace rgd {

// Dense skew-symmetric matrix of LogSigned entries. Antisymmetry is
// enforced on every write.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    LogSigned operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    // Sets A(i,j) = v and A(j,i) = -v. Writes to the diagonal must be zero.
    void set(int i, int j, LogSigned v);

private:
    int n_ = 0;
    std::vector<LogSigned> a_;
};

struct PfaffianResult {
    LogSigned value;
    // log |Pf(B)| of the rescaled matrix; large negative values mean heavy cancellation.
    double scaledLog = 0.0;
    bool singular = false;
};

// Parlett-Reid elimination with full pivoting on the diagonally rescaled matrix.
PfaffianResult pfaffianDetailed(const SkewMatrix& a);
LogSigned pfaffian(const SkewMatrix& a);

// Pf of [[core, b], [-b^T, 0]] for odd-sized core.
LogSigned pfaffianBordered(const SkewMatrix& core, const std::vector<LogSigned>& border);

// Coefficients c_k with Pf(A) = sum_k A(k, n-1) c_k, i.e. the signed minors along the last column.
std::vector<LogSigned> pfaffianMinorsLastColumn(const SkewMatrix& a);

}  // namespace rgd
