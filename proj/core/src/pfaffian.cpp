#include "rgd/pfaffian.hpp"

#include <algorithm>
#include <optional>

namespace rgd {

void SkewMatrix::set(int i, int j, LogSigned v) {
    if (i == j) {
        if (!v.isZero()) throw DomainError("SkewMatrix: diagonal entries must be zero");
        return;
    }
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = -v;
}

namespace {

// Symmetrised dual potentials of the maximum-weight assignment on log|a_ij|
// (Hungarian method). After scaling every entry has magnitude <= 1 and one
// permutation's worth of entries equals 1. Empty if only zero entries complete
// an assignment.
std::optional<std::vector<double>> assignmentScaling(const SkewMatrix& a) {
    const int n = a.size();
    const double big = 1e12;
    auto cost = [&](int i, int j) {
        const LogSigned v = a(i - 1, j - 1);
        return v.isZero() ? big : -v.lnmag;
    };
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), INFINITY);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            double delta = INFINITY;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    for (int j = 1; j <= n; ++j) {
        if (cost(p[j], j) >= big) return std::nullopt;
    }
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = -0.5 * (u[i + 1] + v[i + 1]);
    return s;
}

}  // namespace

PfaffianResult pfaffianDetailed(const SkewMatrix& a) {
    const int n = a.size();
    if (n % 2 != 0) throw OddDimension("pfaffian: matrix dimension must be even");
    PfaffianResult res;
    res.value = LogSigned::one();
    if (n == 0) return res;

    std::vector<double> s(n, -INFINITY);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const LogSigned v = a(i, j);
            if (!v.isZero()) s[i] = std::max(s[i], 0.5 * v.lnmag);
        }
        if (std::isinf(s[i])) {
            res.value = LogSigned::zero();
            res.scaledLog = -INFINITY;
            res.singular = true;
            return res;
        }
    }
    if (auto t = assignmentScaling(a)) s = *t;

    std::vector<double> b(static_cast<std::size_t>(n) * n);
    auto B = [&](int i, int j) -> double& { return b[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const LogSigned v = a(i, j);
            B(i, j) = v.isZero() ? 0.0 : v.sign * std::exp(v.lnmag - s[i] - s[j]);
        }
    }

    auto swapRC = [&](int p, int q) {
        if (p == q) return;
        for (int j = 0; j < n; ++j) std::swap(B(p, j), B(q, j));
        for (int i = 0; i < n; ++i) std::swap(B(i, p), B(i, q));
    };

    int sign = 1;
    double logAbs = 0.0;
    for (int k = 0; k < n; k += 2) {
        int bp = k;
        int bq = k + 1;
        double best = -1.0;
        for (int i = k; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double v = std::fabs(B(i, j));
                if (v > best) {
                    best = v;
                    bp = i;
                    bq = j;
                }
            }
        }
        if (bp != k) {
            swapRC(k, bp);
            sign = -sign;
            if (bq == k) bq = bp;
        }
        if (bq != k + 1) {
            swapRC(k + 1, bq);
            sign = -sign;
        }
        const double piv = B(k, k + 1);
        if (std::fabs(piv) < 1e-300) {
            res.value = LogSigned::zero();
            res.scaledLog = -INFINITY;
            res.singular = true;
            return res;
        }
        if (piv < 0) sign = -sign;
        logAbs += std::log(std::fabs(piv));
        for (int i = k + 2; i < n; ++i) {
            const double ui = B(k, i) / piv;
            const double vi = B(k + 1, i);
            for (int j = i + 1; j < n; ++j) {
                const double upd = vi * B(k, j) / piv - ui * B(k + 1, j);
                B(i, j) += upd;
                B(j, i) = -B(i, j);
            }
        }
    }
    double sum = 0.0;
    for (double v : s) sum += v;
    res.value = LogSigned{sign, logAbs + sum};
    res.scaledLog = logAbs;
    return res;
}

LogSigned pfaffian(const SkewMatrix& a) { return pfaffianDetailed(a).value; }

LogSigned pfaffianBordered(const SkewMatrix& core, const std::vector<LogSigned>& border) {
    const int n = core.size();
    if (n % 2 == 0) throw OddDimension("pfaffianBordered: core dimension must be odd");
    if (static_cast<int>(border.size()) != n) throw DomainError("pfaffianBordered: border length mismatch");
    SkewMatrix full(n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) full.set(i, j, core(i, j));
        full.set(i, n, border[i]);
    }
    return pfaffian(full);
}

std::vector<LogSigned> pfaffianMinorsLastColumn(const SkewMatrix& a) {
    const int n = a.size();
    if (n % 2 != 0) throw OddDimension("pfaffianMinorsLastColumn: dimension must be even");
    std::vector<LogSigned> out(n - 1);
    SkewMatrix work = a;
    for (int k = 0; k < n - 1; ++k) {
        for (int i = 0; i < n - 1; ++i) work.set(i, n - 1, i == k ? LogSigned::one() : LogSigned::zero());
        out[k] = pfaffian(work);
    }
    return out;
}

}  // namespace rgd
