#include "rgd/density.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <numbers>

#include "rgd/partition.hpp"
#include "rgd/qseries.hpp"

namespace rgd {

using Mp = boost::multiprecision::cpp_bin_float_50;

namespace detail {
struct MixtureExact {
    std::vector<Mp> coef;
};
}  // namespace detail

namespace {

Mp toMp(LogSigned v) { return v.isZero() ? Mp(0) : Mp(v.sign) * exp(Mp(v.lnmag)); }

LogSigned fromMp(const Mp& v) {
    if (v == 0) return {};
    return {v > 0 ? 1 : -1, static_cast<double>(log(abs(v)))};
}

struct OrthoValues {
    // P_k(x) = mant[k] * e^{scale[k]}, same for P'_k with the shared scale
    std::vector<double> p, dp, scale;
};

// Orthonormal SW polynomials P_0..P_n at x from
// x P_k = sqrt(c_{k+1}) P_{k+1} + b_k P_k + sqrt(c_k) P_{k-1}.
OrthoValues orthoSW(int n, double sigma2, double x) {
    const QParam qp = QParam::sw(sigma2);
    OrthoValues o;
    o.p.resize(n + 1);
    o.dp.resize(n + 1);
    o.scale.resize(n + 1);
    double pPrev = 0.0, pCur = 1.0, dPrev = 0.0, dCur = 0.0;
    double ls = -sigma2 / 8.0;  // P_0 = h_0^{-1/2} = e^{-sigma^2/8}
    o.p[0] = 1.0;
    o.dp[0] = 0.0;
    o.scale[0] = ls;
    double sqc = 0.0;
    for (int k = 0; k < n; ++k) {
        const double b = swRecurrenceB(k, qp);
        const double sqcNext = std::sqrt(swRecurrenceC(k + 1, qp));
        const double pNext = ((x - b) * pCur - sqc * pPrev) / sqcNext;
        const double dNext = (pCur + (x - b) * dCur - sqc * dPrev) / sqcNext;
        pPrev = pCur;
        pCur = pNext;
        dPrev = dCur;
        dCur = dNext;
        sqc = sqcNext;
        const double big = std::max(std::fabs(pCur), std::fabs(dCur));
        if (big > 1e100 || (big < 1e-100 && big > 0.0)) {
            const double l = std::log(big);
            const double f = std::exp(-l);
            pPrev *= f;
            pCur *= f;
            dPrev *= f;
            dCur *= f;
            ls += l;
        }
        o.p[k + 1] = pCur;
        o.dp[k + 1] = dCur;
        o.scale[k + 1] = ls;
    }
    return o;
}

void checkArgs(int m, double sigma2) {
    if (m < 1) throw DomainError("m must be a positive integer");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw DomainError("sigma^2 must be positive and finite");
}

}  // namespace

double rho2(int m, double sigma2, double r) {
    checkArgs(m, sigma2);
    const double u = r + 0.5 * sigma2 * m;
    const double x = std::exp(u);
    const OrthoValues o = orthoSW(m, sigma2, x);
    // sum_{k<m} P_k^2 = sqrt(c_m) (P'_m P_{m-1} - P_m P'_{m-1})
    const double br = o.dp[m] * o.p[m - 1] - o.p[m] * o.dp[m - 1];
    if (br <= 0.0) return 0.0;
    const double sqcm = std::sqrt(swRecurrenceC(m, QParam::sw(sigma2)));
    const double l = std::log(br) + o.scale[m] + o.scale[m - 1] + std::log(sqcm) - u * u / sigma2 + u -
                     0.5 * std::log(std::numbers::pi * sigma2);
    return std::exp(l);
}

namespace {

// Monic SW coefficients and (p_n, p_n) to 50 digits, from the same q-binomial formula as swMonic.
std::vector<Mp> monicSWExact(int n, const Mp& lq, Mp* normSquared) {
    auto one_minus_qk = [&](int k) { return -boost::multiprecision::expm1(lq * k); };
    std::vector<Mp> c(n + 1);
    Mp binom = 1;
    for (int nu = 0; nu <= n; ++nu) {
        if (nu > 0) binom = binom * one_minus_qk(n - nu + 1) / one_minus_qk(nu);
        const Mp e = Mp(nu) * nu + Mp(nu) / 2 - (Mp(n) * n + Mp(n) / 2);
        c[nu] = ((n - nu) % 2 == 0 ? 1 : -1) * binom * exp(e * lq);
    }
    if (normSquared) {
        Mp poch = 1;
        for (int j = 1; j <= n; ++j) poch *= one_minus_qk(j);
        *normSquared = poch * exp(-(2 * Mp(n) * n + 2 * Mp(n) + Mp(1) / 2) * lq);
    }
    return c;
}

}  // namespace

Mixture rho2Mixture(int m, double sigma2) {
    checkArgs(m, sigma2);
    const Mp s2 = sigma2;
    const Mp lq = -s2 / 2;
    Mp h = 0;
    const std::vector<Mp> a = monicSWExact(m - 1, lq, &h);
    const std::vector<Mp> b = monicSWExact(m, lq, nullptr);
    const Mp pre = 1 / (h * sqrt(boost::math::constants::pi<Mp>() * s2));
    auto ex = std::make_shared<detail::MixtureExact>();
    Mixture mix;
    mix.m = m;
    mix.sigma2 = sigma2;
    for (int s = 1; s <= 2 * m - 1; ++s) {
        Mp c = 0;
        for (int k = 0; k <= m - 1; ++k) {
            const int l = s - k;
            if (l < 0 || l > m) continue;
            c += a[k] * b[l] * (l - k);
        }
        c *= pre * exp(s2 * s * s / 4);
        ex->coef.push_back(c);
        mix.coefficients.push_back(fromMp(c));
        mix.centers.push_back(0.5 * sigma2 * (s - m));
    }
    mix.exact = ex;
    return mix;
}

double Mixture::operator()(double r) const {
    const Mp s2 = sigma2;
    Mp acc = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const Mp d = Mp(r) - Mp(0.5) * s2 * (static_cast<int>(i) + 1 - m);
        acc += exact->coef[i] * exp(-d * d / s2);
    }
    return static_cast<double>(acc);
}

double rho1(const SkewFamily& family, int m, double r) {
    if (m < 2 || m % 2 != 0) throw DomainError("rho1: only even m is supported");
    if (family.maxDegree < m - 1) throw DomainError("rho1: family degree too low");
    const double sigma2 = family.sigma2;
    const Mp s2 = sigma2;
    const Mp u = Mp(r) + s2 * (m + 1) / 2;
    const Mp x = exp(u);
    const Mp rt = sqrt(2 * s2);
    std::vector<Mp> ek(m);
    for (int k = 0; k < m; ++k) {
        const Mp e = k + 1;
        ek[k] = exp(s2 * e * e / 2) * erf((u - e * s2) / rt);
    }
    std::vector<Mp> p(m), phi(m);
    for (int n = 0; n < m; ++n) {
        const auto& c = family.polys[n].coeffs;
        Mp acc = 0, ph = 0, xp = 1;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Mp ck = toMp(c[k]);
            acc += ck * xp;
            ph += ck * ek[k];
            xp *= x;
        }
        p[n] = acc;
        phi[n] = ph / sqrt(Mp(2));
    }
    Mp sum = 0;
    for (int k = 0; k < m / 2; ++k) {
        sum += (phi[2 * k] * p[2 * k + 1] - phi[2 * k + 1] * p[2 * k]) / toMp(family.norms[k]);
    }
    const Mp val = exp(-u * u / (2 * s2) + u) / sqrt(boost::math::constants::pi<Mp>() * s2) * sum;
    return static_cast<double>(val);
}

double rho1M2(double sigma2, double r) {
    checkArgs(2, sigma2);
    const double s = std::sqrt(sigma2);
    const double rt = std::sqrt(2.0 * sigma2);
    const double br = std::exp(0.5 * r) * erf((r + 0.5 * sigma2) / rt) - std::exp(-0.5 * r) * erf((r - 0.5 * sigma2) / rt);
    return std::exp(-sigma2 / 8.0 - r * r / (2.0 * sigma2)) / (erf(0.5 * s) * std::sqrt(2.0 * std::numbers::pi * sigma2)) * br;
}

double rho4M2(double sigma2, double r) {
    checkArgs(2, sigma2);
    const double z = z4ClosedFormM2(sigma2).toReal();
    const double s = sigma2;
    const double c1 = std::cosh(r) - 1.0;
    // e^s cosh 2r - 4 e^{s/4} cosh r + 3 with cosh 2r - 4 cosh r + 3 = 2 (cosh r - 1)^2 split off
    const double base = 2.0 * c1 * c1;
    const double full = std::expm1(s) * std::cosh(2.0 * r) - 4.0 * std::expm1(0.25 * s) * std::cosh(r) + base;
    return 2.0 / z * std::exp(-r * r / sigma2) / std::sqrt(std::numbers::pi * sigma2) * full;
}

LogSigned cdKernel(int m, double sigma2, double x, double y) {
    checkArgs(m, sigma2);
    if (!(x > 0.0) || !(y > 0.0)) throw DomainError("cdKernel: x and y must be positive");
    const OrthoValues ox = orthoSW(m - 1, sigma2, x);
    const OrthoValues oy = orthoSW(m - 1, sigma2, y);
    LogSigned acc;
    for (int k = 0; k < m; ++k) {
        acc += LogSigned::fromReal(ox.p[k] * oy.p[k]) * LogSigned{1, ox.scale[k] + oy.scale[k]};
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    const double lw = -0.5 * (lx * lx + ly * ly) / sigma2 - 0.5 * std::log(std::numbers::pi * sigma2);
    return acc * LogSigned{1, lw};
}

DensityCurve densityCurve(const EnsembleSpec& spec, const std::vector<double>& grid, bool withMixture) {
    spec.validate();
    if (spec.family != Family::A) throw DomainError("densities are only available for family a");
    DensityCurve c;
    c.spec = spec;
    c.grid = grid;
    c.values.reserve(grid.size());
    if (spec.beta == 2) {
        for (double r : grid) c.values.push_back(rho2(spec.m, spec.sigma2, r));
        if (withMixture) c.mixture = rho2Mixture(spec.m, spec.sigma2);
    } else if (spec.beta == 1) {
        if (spec.m % 2 != 0) throw DomainError("beta = 1 density is only available for even m");
        const SkewFamily fam = buildFamily(spec.sigma2, spec.m - 1);
        for (double r : grid) c.values.push_back(rho1(fam, spec.m, r));
    } else {
        if (spec.m != 2) throw DomainError("beta = 4 density is only available for m = 2");
        for (double r : grid) c.values.push_back(rho4M2(spec.sigma2, r));
    }
    return c;
}

std::vector<double> defaultDensityGrid(const EnsembleSpec& spec) {
    spec.validate();
    const double c = spec.cBeta();
    const double half =
        0.25 * spec.beta * (spec.m - 1) * spec.sigma2 / c + 10.0 * std::sqrt(spec.sigma2 / (2.0 * c)) + 1.0;
    const int n = static_cast<int>(std::ceil(2.0 * half / (std::sqrt(spec.sigma2) / 8.0)));
    std::vector<double> g(n + 1);
    for (int i = 0; i <= n; ++i) g[i] = -half + i * (2.0 * half / n);
    return g;
}

int countLocalMaxima(const std::vector<double>& v) {
    int n = 0;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        if (v[i] > v[i - 1] && v[i] >= v[i + 1]) ++n;
    }
    return n;
}

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values) {
    double s = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) s += 0.5 * (grid[i] - grid[i - 1]) * (values[i] + values[i - 1]);
    return s;
}

}  // namespace rgd
