#include "stable_gram.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/legendre.hpp>
#include <numbers>
#include <vector>

#include "rgd/pfaffian.hpp"

namespace rgd::detail {

namespace {

constexpr int kNp = 20;

struct PanelRule {
    double t[kNp];
    double w[kNp];
    // s[i][j] = int_{-1}^{t_i} l_j, with l_j the Lagrange basis on the nodes
    double s[kNp][kNp];

    PanelRule() {
        using G = boost::math::quadrature::gauss<double, kNp>;
        const auto& ab = G::abscissa();
        const auto& wt = G::weights();
        const int half = kNp / 2;
        for (int i = 0; i < half; ++i) {
            t[half - 1 - i] = -ab[i];
            w[half - 1 - i] = wt[i];
            t[half + i] = ab[i];
            w[half + i] = wt[i];
        }
        auto intP = [](int k, double x) {
            if (k == 0) return x + 1.0;
            return (boost::math::legendre_p(k + 1, x) - boost::math::legendre_p(k - 1, x)) / (2.0 * k + 1.0);
        };
        for (int i = 0; i < kNp; ++i) {
            for (int j = 0; j < kNp; ++j) {
                double acc = 0.0;
                for (int k = 0; k < kNp; ++k) {
                    const double c = w[j] * boost::math::legendre_p(k, t[j]) * (2.0 * k + 1.0) / 2.0;
                    acc += c * intP(k, t[i]);
                }
                s[i][j] = acc;
            }
        }
    }
};

const PanelRule& rule() {
    static const PanelRule r;
    return r;
}

struct Nodes {
    std::vector<double> u;
    std::vector<double> wq;
    int panels = 0;
    double h = 0.0;
};

Nodes makeNodes(double lo, double hi, double h) {
    const auto& r = rule();
    Nodes n;
    n.panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / h)));
    h = (hi - lo) / n.panels;
    n.h = h;
    for (int p = 0; p < n.panels; ++p) {
        const double a = lo + p * h;
        for (int i = 0; i < kNp; ++i) {
            n.u.push_back(a + 0.5 * (r.t[i] + 1.0) * h);
            n.wq.push_back(0.5 * r.w[i] * h);
        }
    }
    return n;
}

// Orthonormal polynomials of x~ = e^{u - mu} for the discrete measure
// W_i = wq_i N(u_i; mu, v), tabulated at every node as mantissa * e^{scale}.
struct Basis {
    double mu = 0.0;
    double tot = 0.0;
    std::vector<double> alpha, beta;
    std::vector<double> logKappa;
    std::vector<double> logW;
    // [k][i]
    std::vector<std::vector<double>> p, dp, scale;
};

Basis buildBasis(const Nodes& nd, double mu, double v, int n) {
    const std::size_t nn = nd.u.size();
    Basis b;
    b.mu = mu;
    b.logW.resize(nn);
    std::vector<double> sq(nn);
    const double lnorm = -0.5 * std::log(2.0 * std::numbers::pi * v);
    for (std::size_t i = 0; i < nn; ++i) {
        const double d = nd.u[i] - mu;
        b.logW[i] = std::log(nd.wq[i]) + lnorm - d * d / (2.0 * v);
        sq[i] = std::exp(0.5 * b.logW[i]);
        b.tot += sq[i] * sq[i];
    }

    // Lanczos with full reorthogonalisation on sqrt(W)-weighted vectors.
    std::vector<std::vector<double>> q;
    {
        double nrm = std::sqrt(b.tot);
        std::vector<double> q0(nn);
        for (std::size_t i = 0; i < nn; ++i) q0[i] = sq[i] / nrm;
        q.push_back(std::move(q0));
    }
    std::vector<double> z(nn);
    for (int k = 0; k < n; ++k) {
        const auto& qk = q.back();
        for (std::size_t i = 0; i < nn; ++i) {
            z[i] = qk[i] == 0.0 ? 0.0 : qk[i] * std::exp(nd.u[i] - mu);
        }
        double a = 0.0;
        for (std::size_t i = 0; i < nn; ++i) a += qk[i] * z[i];
        b.alpha.push_back(a);
        if (k == n - 1) break;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& qq : q) {
                double c = 0.0;
                for (std::size_t i = 0; i < nn; ++i) c += qq[i] * z[i];
                for (std::size_t i = 0; i < nn; ++i) z[i] -= c * qq[i];
            }
        }
        double bb = 0.0;
        for (double x : z) bb += x * x;
        bb = std::sqrt(bb);
        if (!(bb > 1e-250) || !std::isfinite(bb)) throw NumericallySingular("Lanczos breakdown");
        b.beta.push_back(bb);
        std::vector<double> next(nn);
        for (std::size_t i = 0; i < nn; ++i) next[i] = z[i] / bb;
        q.push_back(std::move(next));
    }

    b.logKappa.resize(n);
    b.logKappa[0] = -0.5 * std::log(b.tot);
    for (int k = 1; k < n; ++k) b.logKappa[k] = b.logKappa[k - 1] - std::log(b.beta[k - 1]);

    // Three-term recurrence per node, values divided by t^k with t = max(1, x~),
    // plus a running log scale so nothing overflows far in the tails.
    b.p.assign(n, std::vector<double>(nn));
    b.dp.assign(n, std::vector<double>(nn));
    b.scale.assign(n, std::vector<double>(nn));
    for (std::size_t i = 0; i < nn; ++i) {
        const double lt = std::max(0.0, nd.u[i] - mu);
        const double xr = std::exp(nd.u[i] - mu - lt);
        const double it = std::exp(-lt);
        double pPrev = 0.0, pCur = std::exp(b.logKappa[0]);
        double dPrev = 0.0, dCur = 0.0;
        double ls = 0.0;
        b.p[0][i] = pCur;
        b.dp[0][i] = 0.0;
        b.scale[0][i] = 0.0;
        for (int k = 0; k + 1 < n; ++k) {
            const double bPrev = k > 0 ? b.beta[k - 1] : 0.0;
            const double coef = xr - b.alpha[k] * it;
            const double pNext = (coef * pCur - bPrev * it * it * pPrev) / b.beta[k];
            const double dNext = (it * pCur + coef * dCur - bPrev * it * it * dPrev) / b.beta[k];
            pPrev = pCur;
            pCur = pNext;
            dPrev = dCur;
            dCur = dNext;
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
            b.p[k + 1][i] = pCur;
            b.dp[k + 1][i] = dCur;
            b.scale[k + 1][i] = ls + (k + 1) * lt;
        }
    }
    return b;
}

double logDetL(const Basis& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < b.logKappa.size(); ++k) s += -b.logKappa[k] + k * b.mu;
    return s;
}

// Node window: covers the weight itself, the degree-deg tilt of its mean, and
// the range where the extra integrand exp(-u^2/2 s2 + c u) for c <= cmax lives.
Nodes windowFor(double mu, double v, int deg, double sigma2, double cmax) {
    const double sd = std::sqrt(v);
    const double r = std::sqrt(4.0 * deg + 2.0) + 10.0;
    const double sigma = std::sqrt(sigma2);
    double lo = mu - r * sd;
    double hi = mu + deg * v + r * sd;
    if (cmax > 0.0) {
        lo = std::min(lo, -12.0 * sigma);
        hi = std::max(hi, sigma2 * cmax + 12.0 * sigma);
    }
    return makeNodes(lo, hi, 0.5 * sd);
}

void requireFinite(const LogSigned& v, const char* what) {
    if (v.sign != 0 && !std::isfinite(v.lnmag)) throw NumericalFailure(what);
}

}  // namespace

LogSigned skew1PfaffianStable(int m, double sigma2, bool exactBorder) {
    const double mu = 0.5 * sigma2;
    const double v = 0.5 * sigma2;
    const Nodes nd = windowFor(mu, v, 2 * m, sigma2, m);
    const Basis b = buildBasis(nd, mu, v, m);
    const std::size_t nn = nd.u.size();
    const auto& r = rule();
    const double lpre = -0.5 * std::log(std::numbers::pi * sigma2);

    // F_a(u) = w_1(e^u) e^u P_a, each row scaled by its own maximum.
    std::vector<std::vector<double>> f(m, std::vector<double>(nn, 0.0));
    std::vector<double> s(m, -INFINITY);
    std::vector<std::vector<double>> lf(m, std::vector<double>(nn, -INFINITY));
    for (int a = 0; a < m; ++a) {
        for (std::size_t i = 0; i < nn; ++i) {
            const double pm = b.p[a][i];
            if (pm == 0.0) continue;
            const double u = nd.u[i];
            lf[a][i] = -u * u / (2.0 * sigma2) + u + lpre + b.scale[a][i] + std::log(std::fabs(pm));
            s[a] = std::max(s[a], lf[a][i]);
        }
        if (!std::isfinite(s[a])) throw NumericalFailure("skew1PfaffianStable: empty row");
        for (std::size_t i = 0; i < nn; ++i) {
            if (std::isinf(lf[a][i])) continue;
            f[a][i] = (b.p[a][i] > 0 ? 1.0 : -1.0) * std::exp(lf[a][i] - s[a]);
        }
    }

    // Running integrals G_a(u_i) = int_{lo}^{u_i} F_a.
    std::vector<std::vector<double>> g(m, std::vector<double>(nn));
    std::vector<double> tot(m, 0.0);
    const double hp = nd.h;
    for (int a = 0; a < m; ++a) {
        double acc = 0.0;
        for (int p = 0; p < nd.panels; ++p) {
            const std::size_t off = static_cast<std::size_t>(p) * kNp;
            double panel = 0.0;
            for (int i = 0; i < kNp; ++i) {
                double si = 0.0;
                for (int j = 0; j < kNp; ++j) si += r.s[i][j] * f[a][off + j];
                g[a][off + i] = acc + 0.5 * hp * si;
                panel += r.w[i] * f[a][off + i];
            }
            acc += 0.5 * hp * panel;
        }
        tot[a] = acc;
    }

    const int n = m + (m % 2);
    SkewMatrix mat(n);
    for (int a = 0; a < m; ++a) {
        for (int c = a + 1; c < m; ++c) {
            double x = 0.0;
            for (std::size_t i = 0; i < nn; ++i) {
                x += 0.5 * nd.wq[i] * (f[a][i] * (tot[c] - 2.0 * g[c][i]) - f[c][i] * (tot[a] - 2.0 * g[a][i]));
            }
            mat.set(a, c, LogSigned::fromReal(x) * LogSigned{1, s[a] + s[c]});
        }
    }
    if (m % 2) {
        for (int a = 0; a < m; ++a) {
            LogSigned e;
            if (exactBorder) {
                e = LogSigned::fromReal(tot[a]) * LogSigned{1, s[a]};
            } else if (a == 0) {
                e = LogSigned{1, std::log(2.0) + 0.25 * sigma2 + 0.5 * std::log(b.tot)};
            }
            mat.set(a, m, e);
        }
    }
    LogSigned out = pfaffian(mat) * LogSigned{1, logDetL(b)};
    requireFinite(out, "skew1PfaffianStable: non-finite result");
    return out;
}

double gram2LogDetStable(int m, double sigma2) {
    const double mu = 0.5 * sigma2;
    const double v = 0.5 * sigma2;
    const Nodes nd = windowFor(mu, v, 2 * m, sigma2, 0.0);
    const Basis b = buildBasis(nd, mu, v, m);
    double out = 0.25 * m * sigma2;
    for (int k = 0; k < m; ++k) out += 2.0 * k * mu - 2.0 * b.logKappa[k];
    if (!std::isfinite(out)) throw NumericalFailure("gram2LogDetStable: non-finite result");
    return out;
}

LogSigned skew4PfaffianStable(int m, double sigma2) {
    const double mu = 0.5 * sigma2;
    const double v = 0.5 * sigma2;
    const int n = 2 * m;
    const Nodes nd = windowFor(mu, v, 4 * m, sigma2, 0.0);
    const Basis b = buildBasis(nd, mu, v, n);
    const std::size_t nn = nd.u.size();
    SkewMatrix mat(n);
    for (int a = 0; a < n; ++a) {
        for (int c = a + 1; c < n; ++c) {
            double x = 0.0;
            for (std::size_t i = 0; i < nn; ++i) {
                const double t = b.p[a][i] * b.dp[c][i] - b.dp[a][i] * b.p[c][i];
                if (t == 0.0) continue;
                x += t * std::exp(b.scale[a][i] + b.scale[c][i] + b.logW[i]);
            }
            mat.set(a, c, LogSigned::fromReal(x));
        }
    }
    double ldet = logDetL(b);
    LogSigned out = pfaffian(mat) * LogSigned{1, ldet + m * (0.25 * sigma2 - mu)};
    requireFinite(out, "skew4PfaffianStable: non-finite result");
    return out;
}

}  // namespace rgd::detail
