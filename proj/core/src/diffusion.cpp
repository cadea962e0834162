#include "rgd/diffusion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numbers>

namespace rgd {

namespace {

bool strictlyDecreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i - 1] > v[i])) return false;
    }
    return true;
}

double sumSq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return s;
}

LogSigned gaussPrefactor(std::size_t m, double t, double sq) {
    return {1, -0.5 * m * std::log(2.0 * std::numbers::pi * t) - sq / (2.0 * t)};
}

// log(e^a - e^b) for a > b
double logDiffExp(double a, double b) { return a + std::log(-std::expm1(b - a)); }

}  // namespace

void WalkerConfig::validate() const {
    if (x.empty()) throw DomainError("walker configuration needs at least one position");
    if (x.size() != eta.size()) throw DomainError("x and eta must have the same length");
    if (!(t > 0.0)) throw DomainError("time must be positive");
    if (!strictlyDecreasing(x) || !strictlyDecreasing(eta)) {
        throw DomainError("positions must be strictly decreasing");
    }
    if (family == Chamber::B && (!(x.back() > 0.0) || !(eta.back() > 0.0))) {
        throw DomainError("chamber B needs positive positions");
    }
}

LogSigned logDet(const std::vector<std::vector<LogSigned>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return LogSigned::one();
    Eigen::MatrixXd b(n, n);
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
        double mx = -INFINITY;
        for (int j = 0; j < n; ++j) {
            if (!a[i][j].isZero()) mx = std::max(mx, a[i][j].lnmag);
        }
        if (std::isinf(mx)) return {};
        shift += mx;
        for (int j = 0; j < n; ++j) {
            b(i, j) = a[i][j].isZero() ? 0.0 : a[i][j].sign * std::exp(a[i][j].lnmag - mx);
        }
    }
    const double d = Eigen::FullPivLU<Eigen::MatrixXd>(b).determinant();
    return LogSigned::fromReal(d) * LogSigned{1, shift};
}

namespace {

// log det[e^{l_ij}] in extended precision; the exponents are formed from exact
// double inputs so near-coincident rows keep their digits.
LogSigned logDetExp(const std::vector<double>& x, const std::vector<double>& eta, double t) {
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    const int n = static_cast<int>(x.size());
    Mat b(n, n);
    long double shift = 0.0L;
    for (int i = 0; i < n; ++i) {
        long double mx = -INFINITY;
        for (int j = 0; j < n; ++j) mx = std::max(mx, static_cast<long double>(x[i]) * eta[j] / t);
        shift += mx;
        for (int j = 0; j < n; ++j) b(i, j) = std::exp(static_cast<long double>(x[i]) * eta[j] / t - mx);
    }
    const long double d = Eigen::FullPivLU<Mat>(b).determinant();
    if (d == 0.0L) return {};
    return LogSigned{d > 0 ? 1 : -1, static_cast<double>(std::log(std::fabs(d)) + shift)};
}

}  // namespace

LogSigned kmKernelA(const WalkerConfig& cfg) {
    if (cfg.family != Chamber::A) throw DomainError("kmKernelA: configuration is not of type A");
    if (cfg.x.size() != cfg.eta.size() || cfg.x.empty()) throw DomainError("x and eta must have the same length");
    if (!(cfg.t > 0.0)) throw DomainError("time must be positive");
    return gaussPrefactor(cfg.x.size(), cfg.t, sumSq(cfg.x) + sumSq(cfg.eta)) * logDetExp(cfg.x, cfg.eta, cfg.t);
}

LogSigned kmEqualSpacingReduction(const std::vector<double>& x, double t) {
    if (x.empty()) throw DomainError("kmEqualSpacingReduction: empty configuration");
    if (!(t > 0.0)) throw DomainError("time must be positive");
    const std::size_t m = x.size();
    const double eta2 = (m - 1.0) * m * (2.0 * m - 1.0) / 6.0;
    LogSigned v = gaussPrefactor(m, t, sumSq(x) + eta2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double a = x[i] / t;
            const double b = x[j] / t;
            if (a == b) return {};
            v *= a > b ? LogSigned{1, logDiffExp(a, b)} : LogSigned{-1, logDiffExp(b, a)};
        }
    }
    return v;
}

LogSigned kmKernelB(const WalkerConfig& cfg) {
    if (cfg.family != Chamber::B) throw DomainError("kmKernelB: configuration is not of type B");
    if (cfg.x.size() != cfg.eta.size() || cfg.x.empty()) throw DomainError("x and eta must have the same length");
    if (!(cfg.t > 0.0)) throw DomainError("time must be positive");
    const std::size_t m = cfg.x.size();
    std::vector<std::vector<LogSigned>> e(m, std::vector<LogSigned>(m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double a = cfg.x[i] * cfg.eta[j] / cfg.t;
            if (a == 0.0) {
                e[i][j] = {};
            } else {
                const double l = std::fabs(a) + std::log(-std::expm1(-2.0 * std::fabs(a)));
                e[i][j] = LogSigned{a > 0 ? 1 : -1, l};
            }
        }
    }
    return gaussPrefactor(m, cfg.t, sumSq(cfg.x) + sumSq(cfg.eta)) * logDet(e);
}

LogSigned jacobianB(const std::vector<double>& lambda) {
    auto log2sinh = [](double a) -> LogSigned {
        a = std::fabs(a);
        if (a == 0.0) return {};
        return {1, a + std::log(-std::expm1(-2.0 * a))};
    };
    LogSigned v = LogSigned::one();
    const std::size_t m = lambda.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            v *= log2sinh(0.5 * (lambda[i] - lambda[j])) * log2sinh(0.5 * (lambda[i] + lambda[j]));
        }
        v *= log2sinh(0.5 * lambda[i]);
    }
    return v;
}

LogSigned schurWeight(const std::vector<int>& eta, const std::vector<double>& x, double t) {
    const std::size_t m = eta.size();
    if (x.size() != m || m == 0) throw DomainError("schurWeight: eta and x must have the same length");
    if (!(t > 0.0)) throw DomainError("time must be positive");
    for (std::size_t j = 0; j < m; ++j) {
        if (eta[j] < 0 || (j > 0 && eta[j] >= eta[j - 1])) {
            throw DomainError("schurWeight: eta must be strictly decreasing non-negative integers");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (std::fabs(x[i] - x[j]) / t < 1e-13) throw DegenerateArguments("schurWeight: coinciding variables");
        }
    }
    // det[z_i^{m-j}] is the Vandermonde, taken in product form.
    LogSigned v = LogSigned::one();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double a = x[i] / t;
            const double b = x[j] / t;
            v *= a > b ? LogSigned{1, logDiffExp(a, b)} : LogSigned{-1, logDiffExp(b, a)};
        }
    }
    return logDetExp(x, std::vector<double>(eta.begin(), eta.end()), t) / v;
}

ChapmanKolmogorov chapmanKolmogorovCheck(const std::vector<double>& etaStart, const std::vector<double>& xEnd,
                                         double s, double t, Chamber family) {
    const std::size_t m = etaStart.size();
    if (m < 1 || m > 2 || xEnd.size() != m) throw DomainError("chapmanKolmogorovCheck: needs m = 1 or 2");
    if (!(s > 0.0) || !(t > 0.0)) throw DomainError("times must be positive");
    auto kernel = [&](const std::vector<double>& to, const std::vector<double>& from, double tt) {
        WalkerConfig c{to, from, tt, family};
        return family == Chamber::A ? kmKernelA(c).toReal() : kmKernelB(c).toReal();
    };
    double lo = std::min(*std::min_element(etaStart.begin(), etaStart.end()),
                         *std::min_element(xEnd.begin(), xEnd.end()));
    double hi = std::max(*std::max_element(etaStart.begin(), etaStart.end()),
                         *std::max_element(xEnd.begin(), xEnd.end()));
    const double pad = 12.0 * std::sqrt(s + t);
    lo -= pad;
    hi += pad;
    if (family == Chamber::B) lo = 0.0;

    const double rhs = kernel(xEnd, etaStart, s + t);
    QuadratureSpec q;
    // Tails far below the answer need not meet a relative target.
    q.absTol = 1e-11 * std::fabs(rhs);
    q.relTol = 1e-9;
    q.maxSubdivisions = 1 << 14;
    double lhs = 0.0;
    if (m == 1) {
        q.lo = lo;
        q.hi = hi;
        lhs = integrate([&](double y) { return kernel({y}, etaStart, s) * kernel(xEnd, {y}, t); }, q).value;
    } else {
        auto outer = [&](double y1) {
            QuadratureSpec qi = q;
            qi.lo = lo;
            qi.hi = y1;
            qi.absTol = q.absTol / (hi - lo);
            if (!(qi.lo < qi.hi)) return 0.0;
            return integrate(
                       [&](double y2) {
                           if (!(y1 > y2)) return 0.0;
                           return kernel({y1, y2}, etaStart, s) * kernel(xEnd, {y1, y2}, t);
                       },
                       qi)
                .value;
        };
        q.lo = lo;
        q.hi = hi;
        lhs = integrate(outer, q).value;
    }
    ChapmanKolmogorov r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relError = std::fabs(r.lhs - r.rhs) / std::fabs(r.rhs);
    return r;
}

}  // namespace rgd
