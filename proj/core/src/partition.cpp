#include "rgd/partition.hpp"

#include <Eigen/Dense>
#include <numbers>

#include "rgd/pfaffian.hpp"
#include "stable_gram.hpp"

namespace rgd {

const char* routeName(Route r) {
    switch (r) {
        case Route::ClosedForm: return "closedForm";
        case Route::AndreiefDet: return "andreiefDet";
        case Route::DeBruijnPf: return "deBruijnPf";
        case Route::Asymptotic: return "asymptotic";
        case Route::Oracle: return "oracle";
    }
    return "?";
}

namespace {

// Below this |Pf| of the rescaled monomial matrix most digits have cancelled.
const double kCancelLog = std::log(1e-5);

void checkArgs(int m, double sigma2) {
    if (m < 1) throw DomainError("m must be a positive integer");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw DomainError("sigma^2 must be positive and finite");
}

LogSigned requirePositive(LogSigned v, const char* what) {
    if (v.sign != 1 || !std::isfinite(v.lnmag)) {
        throw NumericalFailure(std::string(what) + ": non-positive or non-finite result");
    }
    return v;
}

double log2sinh(double x) { return x + std::log(-std::expm1(-2.0 * x)); }

const LogSigned kTwo{1, std::numbers::ln2};

// Monomial Pfaffian first; the orthonormal route takes over when the monomial
// one has cancelled, and the monomial value is kept if that route fails.
LogSigned pfWithFallback(const SkewMatrix& mono, const std::function<LogSigned()>& stable) {
    const PfaffianResult r = pfaffianDetailed(mono);
    if (!r.singular && r.scaledLog >= kCancelLog) return r.value;
    try {
        return stable();
    } catch (const NumericalFailure&) {
        if (r.singular) throw NumericallySingular("Pfaffian vanished in both routes");
        return r.value;
    }
}

}  // namespace

LogSigned z2ClosedForm(int m, double sigma2) {
    checkArgs(m, sigma2);
    double l = sigma2 * m * (static_cast<double>(m) * m - 1.0) / 24.0;
    for (int j = 1; j < m; ++j) l += (m - j) * log2sinh(0.25 * sigma2 * j);
    return {1, l};
}

LogSigned z2Andreief(int m, double sigma2) {
    checkArgs(m, sigma2);
    const double pre = -0.25 * sigma2 * m * m * m;
    // Symmetric rescaling by e^{-sigma^2 (2i-1)^2/8} turns the moment matrix into
    // e^{-sigma^2 (i-j)^2/4}; plain LU is fine whenever that is well conditioned.
    Eigen::MatrixXd k(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) k(i, j) = std::exp(-0.25 * sigma2 * (i - j) * (i - j));
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(k);
    double ldet;
    if (lu.rcond() > 1e-6) {
        ldet = std::log(std::fabs(lu.determinant()));
        for (int i = 1; i <= m; ++i) ldet += 0.25 * sigma2 * (2.0 * i - 1.0) * (2.0 * i - 1.0);
    } else {
        ldet = detail::gram2LogDetStable(m, sigma2);
    }
    return requirePositive(LogSigned{1, pre + ldet}, "z2Andreief");
}

LogSigned z1Pfaffian(int m, double sigma2, OddBorder border) {
    checkArgs(m, sigma2);
    const int n = m + (m % 2);
    SkewMatrix a(n);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) a.set(i, j, kTwo * skew1(i, j, sigma2));
        if (m % 2) {
            a.set(i, m, border == OddBorder::Printed ? kTwo * innerSW(0, i, sigma2) : borderMoment1(i + 1, sigma2));
        }
    }
    const LogSigned pf = pfWithFallback(
        a, [&] { return detail::skew1PfaffianStable(m, sigma2, border == OddBorder::Exact); });
    const double pre = -sigma2 * m * (m + 1.0) * (m + 1.0) / 8.0;
    return requirePositive(pf * LogSigned{1, pre}, "z1Pfaffian");
}

LogSigned z1ClosedForm(int m, double sigma2) {
    checkArgs(m, sigma2);
    const double s = std::sqrt(sigma2);
    const double e1 = erf(0.5 * s);
    const double e2 = erf(s);
    const double e3 = erf(1.5 * s);
    switch (m) {
        case 2: return LogSigned{1, std::numbers::ln2 + 0.25 * sigma2} * LogSigned::fromReal(e1);
        case 3: {
            // e^{-5s/4}(1 + e^{2s}) = e^{-5s/4} + e^{3s/4}
            const LogSigned a = (LogSigned{1, -1.25 * sigma2} + LogSigned{1, 0.75 * sigma2}) * LogSigned::fromReal(e1);
            return LogSigned{1, 2.0 * std::numbers::ln2} * (a - LogSigned::fromReal(e2));
        }
        case 4: {
            const double br = e1 * e1 - e2 * e2 + e1 * e3;
            return LogSigned{1, 2.0 * std::numbers::ln2 + 2.5 * sigma2} * LogSigned::fromReal(br);
        }
        default: throw DomainError("z1ClosedForm: only m = 2, 3, 4 have explicit forms");
    }
}

LogSigned zeta(int m, double sigma2, OddBorder border) {
    const double lpre = 0.25 * m * (m - 1.0) * std::numbers::ln2 + 0.5 * m * (m + 1.0) * std::log(std::numbers::pi) +
                        0.5 * m * std::log(sigma2);
    return LogSigned{1, lpre} / multivariateGamma(m, 0.5 * m) * z1Pfaffian(m, sigma2, border);
}

LogSigned z4Pfaffian(int m, double sigma2) {
    checkArgs(m, sigma2);
    const int n = 2 * m;
    SkewMatrix a(n);
    for (int i = 0; i < n; ++i) {
        // 2 <x^i, x^j>_4 = (j - i) e^{sigma^2 (i+j)^2/4}, assembled directly so that m = 1 is exact
        for (int j = i + 1; j < n; ++j) a.set(i, j, {1, 0.25 * sigma2 * (i + j) * (i + j) + std::log(j - i)});
    }
    const LogSigned pf = pfWithFallback(a, [&] { return detail::skew4PfaffianStable(m, sigma2); });
    const double pre = -sigma2 * m * (m - 0.5) * (m - 0.5);
    return requirePositive(pf * LogSigned{1, pre}, "z4Pfaffian");
}

LogSigned z4ClosedFormM2(double sigma2) {
    checkArgs(1, sigma2);
    // expm1(2s) - 4 expm1(s/2) = sum_n (2^n - 2^{2-n}) s^n / n!, n >= 2
    if (sigma2 < 0.5) {
        double sum = 0.0;
        double fact = 1.0;
        double sp = 1.0;
        for (int n = 1; n < 40; ++n) {
            fact *= n;
            sp *= sigma2;
            sum += (std::ldexp(1.0, n) - std::ldexp(1.0, 2 - n)) * sp / fact;
        }
        return LogSigned::fromReal(sum);
    }
    return LogSigned::fromReal(std::expm1(2.0 * sigma2) - 4.0 * std::expm1(0.5 * sigma2));
}

namespace {

LogSigned chamberPfaffian(int m, double sigma2, OddBorder border, bool sp) {
    checkArgs(m, sigma2);
    const int n = m + (m % 2);
    SkewMatrix a(n);
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) a.set(i - 1, j - 1, kTwo * (sp ? skewSP(i, j, sigma2) : skewSO(i, j, sigma2)));
        if (m % 2) {
            LogSigned b;
            if (border == OddBorder::Printed) {
                b = kTwo * (sp ? innerSP(i, sigma2) : innerSO(i, sigma2));
            } else {
                b = sp ? borderSP(i, sigma2) : borderSO(i, sigma2);
            }
            a.set(i - 1, m, b);
        }
    }
    const PfaffianResult r = pfaffianDetailed(a);
    if (r.singular) throw NumericallySingular("so/sp Pfaffian vanished");
    const double e = sp ? 0.5 * m * (m + 1.0) : 0.5 * m * (m - 1.0);
    return requirePositive(r.value * LogSigned{1, e * std::numbers::ln2}, sp ? "zSPPfaffian" : "zSOPfaffian");
}

}  // namespace

LogSigned zSOPfaffian(int m, double sigma2, OddBorder border) { return chamberPfaffian(m, sigma2, border, false); }
LogSigned zSPPfaffian(int m, double sigma2, OddBorder border) { return chamberPfaffian(m, sigma2, border, true); }

LogSigned applyConvention(Convention conv, int beta, int m, double sigma2,
                          const std::function<LogSigned(double)>& paperZ) {
    if (conv == Convention::Paper) return paperZ(sigma2);
    const double cb = beta == 1 ? 0.5 : 1.0;
    const double c = 0.5 * beta;
    return LogSigned{1, 0.5 * m * std::log(cb / (2.0 * c))} * paperZ(sigma2 * cb / c);
}

PartitionResult partition(const EnsembleSpec& spec, const PartitionOptions& opt) {
    spec.validate();
    PartitionResult out;
    out.spec = spec;
    std::function<LogSigned(double)> f;
    const int m = spec.m;
    switch (spec.family) {
        case Family::A: {
            if (spec.beta == 1) {
                const OddBorder b = opt.oddBorder.value_or(OddBorder::Exact);
                f = [=](double s2) { return z1Pfaffian(m, s2, b); };
                out.route = Route::DeBruijnPf;
            } else if (spec.beta == 2) {
                f = [=](double s2) { return z2ClosedForm(m, s2); };
                out.route = Route::ClosedForm;
            } else {
                f = [=](double s2) { return z4Pfaffian(m, s2); };
                out.route = Route::DeBruijnPf;
            }
            break;
        }
        case Family::SO: {
            const OddBorder b = opt.oddBorder.value_or(OddBorder::Exact);
            f = [=](double s2) { return zSOPfaffian(m, s2, b); };
            out.route = Route::DeBruijnPf;
            break;
        }
        case Family::SP: {
            const OddBorder b = opt.oddBorder.value_or(OddBorder::Exact);
            f = [=](double s2) { return zSPPfaffian(m, s2, b); };
            out.route = Route::DeBruijnPf;
            break;
        }
    }
    out.logZ = applyConvention(opt.convention, spec.beta, m, spec.sigma2, f);
    return out;
}

int smallSigmaExponent(int beta, int m) { return beta * m * (m - 1) / 2; }

std::function<LogSigned(double)> smallSigmaLimit(int beta, int m) {
    if (beta != 1 && beta != 2 && beta != 4) throw DomainError("beta must be 1, 2 or 4");
    if (m < 1) throw DomainError("m must be a positive integer");
    double lc = 0.0;
    if (beta == 1) {
        if (m % 2 == 0) {
            lc = 0.5 * m * std::numbers::ln2;
            for (int j = 0; j < m / 2; ++j) lc += std::lgamma(2.0 * j + 1.0) - 2.0 * j * std::numbers::ln2;
        }
    } else if (beta == 2) {
        lc = -std::lgamma(m + 1.0);
        for (int j = 1; j <= m; ++j) lc += std::lgamma(j + 1.0) - (j - 1.0) * std::numbers::ln2;
    } else {
        lc = -std::lgamma(m + 1.0);
        for (int j = 1; j <= m; ++j) lc += std::lgamma(2.0 * j + 1.0) - (2.0 * j + 1.0) * std::numbers::ln2;
    }
    const int p = smallSigmaExponent(beta, m);
    return [=](double sigma) { return LogSigned{1, lc + p * std::log(sigma)}; };
}

double baxterLargeSigma(int beta, int m, double sigma2) {
    return beta / 24.0 * sigma2 * m * (static_cast<double>(m) * m - 1.0) + beta / 8.0 * m * std::log(sigma2);
}

double planarLimitShape(int beta, int m, double sigma2, double F) {
    return -std::lgamma(m + 1.0) - 0.5 * m * std::log(std::numbers::pi * sigma2) + 0.5 * beta * F;
}

}  // namespace rgd
