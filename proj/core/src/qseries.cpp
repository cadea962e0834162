#include "rgd/qseries.hpp"

namespace rgd {

QParam QParam::sw(double sigma2) {
    if (!(sigma2 > 0.0)) throw DomainError("QParam::sw: sigma^2 must be positive");
    return {std::exp(-0.5 * sigma2), QOrigin::SW};
}

QParam QParam::sinh(double sigma) {
    if (!(sigma > 0.0)) throw DomainError("QParam::sinh: sigma must be positive");
    return {std::exp(-sigma), QOrigin::Sinh};
}

double QParam::sigma() const {
    return origin == QOrigin::SW ? std::sqrt(-2.0 * std::log(q)) : -std::log(q);
}

int Poly::degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        if (!coeffs[k].isZero()) return k;
    }
    return -1;
}

LogSigned Poly::eval(LogSigned x) const {
    LogSigned acc;
    LogSigned xp = LogSigned::one();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        acc += coeffs[k] * xp;
        xp *= x;
    }
    return acc;
}

Poly Poly::derivative() const {
    Poly d;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        d.coeffs.push_back(coeffs[k] * LogSigned::fromReal(static_cast<double>(k)));
    }
    return d;
}

double qNumber(double x, const QParam& qp) {
    if (!(qp.q > 0.0 && qp.q < 1.0)) throw DomainError("qNumber: q must lie in (0,1)");
    const double h = -0.5 * qp.logq();
    return std::sinh(x * h) / std::sinh(h);
}

double log1mqk(double logq, int k) { return std::log(-std::expm1(k * logq)); }

LogSigned qBinomial(int n, int nu, const QParam& qp) {
    if (nu < 0 || nu > n) throw DomainError("qBinomial: nu outside [0, n]");
    const double lq = qp.logq();
    double l = 0.0;
    for (int j = 1; j <= nu; ++j) l += log1mqk(lq, n - j + 1) - log1mqk(lq, j);
    return {1, l};
}

LogSigned qGamma(int j, const QParam& qp) {
    if (j < 0) throw DomainError("qGamma: j must be non-negative");
    const double lq = qp.logq();
    double l = 0.0;
    for (int n = 1; n <= j; ++n) l += log1mqk(lq, n) - log1mqk(lq, 1);
    return {1, l};
}

namespace {

double logPochhammerQ(double lq, int n) {
    double l = 0.0;
    for (int j = 1; j <= n; ++j) l += log1mqk(lq, j);
    return l;
}

}  // namespace

Poly swPolynomial(int n, const QParam& qp) {
    if (qp.origin != QOrigin::SW) throw DomainError("swPolynomial: needs the SW q-parameter");
    if (n < 0) throw DomainError("swPolynomial: negative degree");
    const double lq = qp.logq();
    const double pre = 0.5 * (n + 0.5) * lq - 0.5 * logPochhammerQ(lq, n);
    Poly p;
    p.coeffs.resize(n + 1);
    for (int nu = 0; nu <= n; ++nu) {
        const int s = ((n + nu) % 2 == 0) ? 1 : -1;
        p.coeffs[nu] = LogSigned{s, pre + qBinomial(n, nu, qp).lnmag + (nu * nu + 0.5 * nu) * lq};
    }
    return p;
}

MonicSW swMonic(int n, const QParam& qp) {
    if (qp.origin != QOrigin::SW) throw DomainError("swMonic: needs the SW q-parameter");
    if (n < 0) throw DomainError("swMonic: negative degree");
    const double lq = qp.logq();
    MonicSW out;
    out.poly.coeffs.resize(n + 1);
    const double lead = (n * n + 0.5 * n) * lq;
    for (int nu = 0; nu <= n; ++nu) {
        const int s = ((n - nu) % 2 == 0) ? 1 : -1;
        out.poly.coeffs[nu] = LogSigned{s, qBinomial(n, nu, qp).lnmag + (nu * nu + 0.5 * nu) * lq - lead};
    }
    // (p_n, p_n) = prod_{j<=n}(1-q^j) / q^{2n^2+2n+1/2}; the same expression covers n = 0.
    out.normSquared = LogSigned{1, logPochhammerQ(lq, n) - (2.0 * n * n + 2.0 * n + 0.5) * lq};
    return out;
}

double swRecurrenceB(int n, const QParam& qp) {
    const double q = qp.q;
    return std::exp(-(2.0 * n + 1.5) * qp.logq()) * (1.0 + q - std::pow(q, n + 1));
}

double swRecurrenceC(int n, const QParam& qp) {
    if (n == 0) return 0.0;
    return -std::expm1(n * qp.logq()) * std::exp(-4.0 * n * qp.logq());
}

}  // namespace rgd
