#pragma once

#include <vector>

#include "rgd/numerics.hpp"

namespace rgd {

enum class QOrigin { SW, Sinh };

// q = e^{-sigma^2/2} (SW) or q = e^{-sigma} (Sinh).
struct QParam {
    double q = 0.5;
    QOrigin origin = QOrigin::SW;

    static QParam sw(double sigma2);
    static QParam sinh(double sigma);
    double sigma() const;
    double logq() const { return std::log(q); }
};

// Monomial-basis polynomial, coeffs[k] multiplies x^k.
struct Poly {
    std::vector<LogSigned> coeffs;

    int degree() const;
    LogSigned eval(LogSigned x) const;
    double eval(double x) const { return eval(LogSigned::fromReal(x)).toReal(); }
    Poly derivative() const;
};

// [x]_q = (q^{-x/2} - q^{x/2}) / (q^{-1/2} - q^{1/2})
double qNumber(double x, const QParam& qp);

// prod_{j=1}^{nu} (1 - q^{n-j+1}) / (1 - q^j)
LogSigned qBinomial(int n, int nu, const QParam& qp);

// Gamma_q(j+1) = prod_{n=1}^{j} (1 - q^n)/(1 - q)
LogSigned qGamma(int j, const QParam& qp);

// log(1 - q^k) without cancellation for q close to 1.
double log1mqk(double logq, int k);

// Orthonormal SW polynomial P_n with respect to the log-normal inner product.
Poly swPolynomial(int n, const QParam& qp);

struct MonicSW {
    Poly poly;
    LogSigned normSquared;
};

// Monic p_n and (p_n, p_n).
MonicSW swMonic(int n, const QParam& qp);

// Monic three-term recurrence p_{n+1} = (x - b_n) p_n - c_n p_{n-1}.
double swRecurrenceB(int n, const QParam& qp);
double swRecurrenceC(int n, const QParam& qp);

}  // namespace rgd
