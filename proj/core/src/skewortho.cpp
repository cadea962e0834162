#include "rgd/skewortho.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <numbers>

#include "rgd/partition.hpp"
#include "rgd/pfaffian.hpp"
#include "rgd/products.hpp"

namespace rgd {

namespace {

const LogSigned kTwo{1, std::numbers::ln2};

Poly normalizeMonic(std::vector<LogSigned> c) {
    const LogSigned lead = c.back();
    if (lead.isZero()) throw NumericallySingular("skew-orthogonal polynomial has vanishing leading coefficient");
    Poly p;
    for (auto& v : c) p.coeffs.push_back(v / lead);
    p.coeffs.back() = LogSigned::one();
    return p;
}

// p~_{2l}: Pfaffian of the (2l+1) core bordered by (1, x, ..., x^{2l}).
Poly evenPoly(int l, double sigma2) {
    const int n = 2 * l + 1;
    SkewMatrix core(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) core.set(i, j, kTwo * skew1(i, j, sigma2));
    }
    std::vector<LogSigned> c(n);
    std::vector<LogSigned> e(n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) e[i] = i == k ? LogSigned::one() : LogSigned::zero();
        c[k] = pfaffianBordered(core, e);
    }
    return normalizeMonic(c);
}

// p~_{2l+1}: bordered Pfaffian over the indices {0..2l-1, 2l+1}. Pairing with
// any x^j, j < 2l, repeats a row, so it is skew-orthogonal to all lower degrees;
// the x^{2l} coefficient is zero in this gauge.
Poly oddPoly(int l, double sigma2) {
    std::vector<int> idx;
    for (int i = 0; i < 2 * l; ++i) idx.push_back(i);
    idx.push_back(2 * l + 1);
    const int n = static_cast<int>(idx.size());
    SkewMatrix core(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) core.set(i, j, kTwo * skew1(idx[i], idx[j], sigma2));
    }
    std::vector<LogSigned> c(2 * l + 2);
    std::vector<LogSigned> e(n);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) e[i] = i == k ? LogSigned::one() : LogSigned::zero();
        c[idx[k]] = pfaffianBordered(core, e);
    }
    return normalizeMonic(c);
}

}  // namespace

Poly borderedOddPolynomial(int l, double sigma2) {
    if (l < 0) throw DomainError("borderedOddPolynomial: negative index");
    const int d = 2 * l + 2;
    const int n = d + 2;
    SkewMatrix base(n);
    for (int j = 1; j <= d; ++j) base.set(0, j, kTwo * innerSW(0, j - 1, sigma2));
    for (int i = 1; i <= d; ++i) {
        for (int j = i + 1; j <= d; ++j) base.set(i, j, kTwo * skew1(i - 1, j - 1, sigma2));
    }
    std::vector<LogSigned> c(d);
    for (int k = 0; k < d; ++k) {
        SkewMatrix m = base;
        m.set(k + 1, n - 1, LogSigned::one());
        c[k] = pfaffian(m);
    }
    return normalizeMonic(c);
}

LogSigned strippedZ1(int n, double sigma2) {
    if (n < 0) throw DomainError("strippedZ1: negative size");
    if (n == 0) return LogSigned::one();
    return z1Pfaffian(n, sigma2, OddBorder::Printed) * LogSigned{1, sigma2 * n * (n + 1.0) * (n + 1.0) / 8.0};
}

SkewFamily buildFamily(double sigma2, int maxDegree) {
    if (maxDegree < 0) throw DomainError("buildFamily: maxDegree must be non-negative");
    if (!(sigma2 > 0.0)) throw DomainError("buildFamily: sigma^2 must be positive");
    SkewFamily f;
    f.sigma2 = sigma2;
    f.maxDegree = maxDegree;
    for (int n = 0; n <= maxDegree; ++n) {
        f.polys.push_back(n % 2 == 0 ? evenPoly(n / 2, sigma2) : oddPoly(n / 2, sigma2));
    }
    for (int n = 0; n <= maxDegree + 1; ++n) f.strippedZ.push_back(strippedZ1(n, sigma2));
    // Each de Bruijn Pfaffian carries the factor 2 of 2<.,.>_1, hence the 1/2.
    for (int k = 0; 2 * k + 1 <= maxDegree; ++k) {
        f.norms.push_back(f.strippedZ[2 * k + 2] / (kTwo * f.strippedZ[2 * k]));
    }
    return f;
}

double phiTilde(const SkewFamily& family, int n, double u) {
    if (n < 0 || n > family.maxDegree) throw DomainError("phiTilde: degree outside the family");
    const double s2 = family.sigma2;
    const double rt = std::sqrt(2.0 * s2);
    const Poly& p = family.polys[n];
    LogSigned acc;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
        const double a = k + 1.0;
        const double e = erf((u - a * s2) / rt);
        acc += p.coeffs[k] * LogSigned{1, 0.5 * s2 * a * a - 0.5 * std::numbers::ln2} * LogSigned::fromReal(e);
    }
    return acc.toReal();
}

LogSigned skewProduct1(const Poly& f, const Poly& g, double sigma2) {
    // The expansion cancels by many orders of magnitude; the coefficients are
    // taken as exact and everything else is carried with 50 digits.
    using F = boost::multiprecision::cpp_bin_float_50;
    const F s2 = sigma2;
    const F s = sqrt(s2);
    auto val = [](LogSigned v) -> F { return v.isZero() ? F(0) : F(v.sign) * exp(F(v.lnmag)); };
    F acc = 0;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        for (std::size_t l = 0; l < g.coeffs.size(); ++l) {
            if (k == l) continue;
            const F a = F(static_cast<double>(k) + 1);
            const F b = F(static_cast<double>(l) + 1);
            const F t = val(f.coeffs[k]) * val(g.coeffs[l]) * exp(s2 * (a * a + b * b) / 2) * erf(s * (b - a) / 2);
            acc += t;
        }
    }
    if (acc == 0) return {};
    return {acc > 0 ? 1 : -1, static_cast<double>(log(abs(acc)))};
}

LogSigned skewProduct1Scale(const Poly& f, const Poly& g, double sigma2) {
    LogSigned acc;
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        for (std::size_t l = 0; l < g.coeffs.size(); ++l) {
            acc += (f.coeffs[k] * g.coeffs[l] * skew1(static_cast<int>(k), static_cast<int>(l), sigma2)).abs();
        }
    }
    return acc;
}

}  // namespace rgd
