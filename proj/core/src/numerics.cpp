#include "rgd/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <numbers>
#include <sstream>

namespace rgd {

LogSigned LogSigned::fromReal(double x) {
    if (x == 0.0) return {};
    return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
}

LogSigned logAdd(LogSigned a, LogSigned b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.lnmag < b.lnmag) std::swap(a, b);
    if (std::isinf(a.lnmag) && a.lnmag > 0) {
        if (std::isinf(b.lnmag) && b.lnmag > 0 && a.sign != b.sign) {
            return {a.sign, std::numeric_limits<double>::quiet_NaN()};
        }
        return a;
    }
    const double d = b.lnmag - a.lnmag;
    if (a.sign == b.sign) return {a.sign, a.lnmag + std::log1p(std::exp(d))};
    if (d == 0.0) return {};
    // log(1 - e^d): expm1 near d = 0, log1p below -ln 2
    const double l = d > -std::numbers::ln2 ? std::log(-std::expm1(d)) : std::log1p(-std::exp(d));
    return {a.sign, a.lnmag + l};
}

LogSigned logMul(LogSigned a, LogSigned b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.sign * b.sign, a.lnmag + b.lnmag};
}

LogSigned logDiv(LogSigned a, LogSigned b) {
    if (b.sign == 0) throw NumericalFailure("LogSigned division by zero");
    if (a.sign == 0) return {};
    return {a.sign * b.sign, a.lnmag - b.lnmag};
}

LogSigned logPow(LogSigned a, int k) {
    if (k == 0) return LogSigned::one();
    if (a.sign == 0) return {};
    const int s = (a.sign < 0 && (k % 2 != 0)) ? -1 : 1;
    return {s, a.lnmag * k};
}

std::ostream& operator<<(std::ostream& os, LogSigned v) {
    if (v.sign == 0) return os << "0";
    return os << (v.sign > 0 ? "+" : "-") << "exp(" << v.lnmag << ")";
}

double relDiff(LogSigned a, LogSigned b) {
    if (a.sign == 0 && b.sign == 0) return 0.0;
    const double top = std::max(a.sign ? a.lnmag : -INFINITY, b.sign ? b.lnmag : -INFINITY);
    const LogSigned d = a - b;
    if (d.sign == 0) return 0.0;
    return std::exp(d.lnmag - top);
}

namespace {

constexpr double kTwoOverSqrtPi = 1.1283791670955125738961589031215452;

// erf(x) = 2/sqrt(pi) e^{-x^2} sum_n 2^n x^{2n+1} / (2n+1)!!  (positive terms)
double erfSeries(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 200; ++n) {
        term *= 2.0 * x2 / (2 * n + 1);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return kTwoOverSqrtPi * std::exp(-x2) * sum;
}

// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))), modified Lentz.
double erfcContinuedFraction(double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 5000; ++n) {
        const double an = 0.5 * n;
        d = x + an * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    double v;
    if (ax < 1.5) {
        v = erfSeries(ax);
    } else if (ax < 6.5) {
        v = 1.0 - erfcContinuedFraction(ax);
    } else {
        v = 1.0;
    }
    return x < 0 ? -v : v;
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 1.5) return 1.0 - erf(x);
    if (x > 27.3) return 0.0;
    return erfcContinuedFraction(x);
}

LogSigned multivariateGamma(int m, double a) {
    if (m < 1) throw DomainError("multivariateGamma: m must be positive");
    LogSigned out{1, 0.25 * m * (m - 1) * std::log(std::numbers::pi)};
    for (int j = 1; j <= m; ++j) {
        const double y = a - 0.5 * (j - 1);
        if (y <= 0.0 && y == std::floor(y)) {
            throw PoleError("multivariateGamma: Gamma pole at argument " + std::to_string(y));
        }
        int s = 1;
        if (y < 0.0 && static_cast<long long>(std::floor(y)) % 2 != 0) s = -1;
        out = out * LogSigned{s, std::lgamma(y)};
    }
    return out;
}

QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec) {
    if (spec.absTol <= 0.0 && spec.relTol <= 0.0) {
        throw DomainError("integrate: absTol and relTol cannot both be zero");
    }
    if (!(spec.lo < spec.hi)) throw DomainError("integrate: empty interval");
    const unsigned depth = static_cast<unsigned>(
        std::max(1.0, std::ceil(std::log2(static_cast<double>(std::max(1, spec.maxSubdivisions))))));
    const double rel = spec.relTol > 0.0 ? spec.relTol : 1e-15;
    double err = 0.0;
    double l1 = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, spec.lo, spec.hi, depth, rel, &err, &l1);
    QuadratureResult r{v, err};
    if (!std::isfinite(v) || err > std::max(spec.absTol, spec.relTol * std::fabs(v))) {
        std::ostringstream os;
        os << "integrate: tolerance not met (value " << v << ", error " << err << ")";
        throw ToleranceNotMet(os.str(), v, err);
    }
    return r;
}

double Rng::gaussian() {
    if (haveSpare_) {
        haveSpare_ = false;
        return spare_;
    }
    // Box-Muller on (0,1] x [0,1); uses only +, *, log, sqrt, sin, cos.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double th = 2.0 * std::numbers::pi * u2;
    spare_ = rad * std::sin(th);
    haveSpare_ = true;
    return rad * std::cos(th);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return Rng(z);
}

Rng rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace rgd
