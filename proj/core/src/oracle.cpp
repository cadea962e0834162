#include "rgd/oracle.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "rgd/partition.hpp"

namespace rgd {

namespace {

constexpr int kBatches = 64;
constexpr double kMaxRelSe = 0.1;
constexpr double kInnerTol = 1e-9;
constexpr double kOuterTol = 1e-9;

double cOf(const EnsembleSpec& s) { return s.family == Family::A ? s.cBeta() : 0.5; }

// Unnormalized log integrand of the defining integral; Gaussian measure factors included.
double logIntegrand(const EnsembleSpec& s, const double* r, int m) {
    const double c = cOf(s);
    double l = 0.0;
    for (int i = 0; i < m; ++i) {
        l += -c * r[i] * r[i] / s.sigma2 - 0.5 * std::log(std::numbers::pi * s.sigma2);
        if (s.family == Family::SP) l += std::log(std::fabs(2.0 * std::sinh(r[i])));
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (s.family == Family::A) {
                l += s.beta * std::log(std::fabs(2.0 * std::sinh(0.5 * (r[i] - r[j]))));
            } else {
                l += std::log(std::fabs(4.0 * std::sinh(0.5 * (r[i] - r[j])) * std::sinh(0.5 * (r[i] + r[j]))));
            }
        }
    }
    return l;
}

// Half-width of the region carrying the mass: drift from the sinh factors plus 12 standard deviations.
double extent(const EnsembleSpec& s, int m) {
    const double c = cOf(s);
    const double sd = std::sqrt(s.sigma2 / (2.0 * c));
    const double pull = s.family == Family::A ? s.beta * (m - 1) / 2.0 : static_cast<double>(m);
    return pull * s.sigma2 / (2.0 * c) + 12.0 * sd;
}

struct Gk {
    double tol;
    double errSum = 0.0;

    // Integrates over [a, b] split at the given interior breakpoints.
    template <class F>
    double run(F&& f, double a, double b, const std::vector<double>& cuts = {}) {
        std::vector<double> pts{a};
        for (double c : cuts) {
            if (c > a && c < b) pts.push_back(c);
        }
        pts.push_back(b);
        std::sort(pts.begin(), pts.end());
        double total = 0.0;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            if (!(pts[k] < pts[k + 1])) continue;
            double err = 0.0;
            total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, pts[k], pts[k + 1], 15, tol,
                                                                                    &err);
            errSum += err;
        }
        return total;
    }
};

void checkTolerance(const char* who, double value, double err, double rel) {
    if (!std::isfinite(value) || !(value > 0.0) || err > rel * value) {
        std::ostringstream os;
        os << who << ": tolerance not met (value " << value << ", error " << err << ")";
        throw ToleranceNotMet(os.str(), value, err);
    }
}

// log-scale so the integrand is O(1) near its maximum
double logPeakGuess(const EnsembleSpec& s, int m, double lo, double hi) {
    // Evaluate at a spread of ordered points; only used to avoid under/overflow.
    double best = -INFINITY;
    std::vector<double> r(m);
    for (int k = 0; k < 41; ++k) {
        const double w = (hi - lo) * (0.05 + 0.9 * k / 40.0) / std::max(1, m);
        for (int i = 0; i < m; ++i) r[i] = (s.family == Family::A ? 0.5 * (m - 1) * w : lo + m * w) - i * w;
        best = std::max(best, logIntegrand(s, r.data(), m));
    }
    return best;
}

}  // namespace

OracleResult zOracleQuadrature(const EnsembleSpec& spec) {
    spec.validate();
    const int m = spec.m;
    if (m > 3) throw DomainError("zOracleQuadrature: m must be at most 3");
    const double L = extent(spec, m);
    double r[3];
    double value = 0.0;
    double err = 0.0;
    double shift = 0.0;

    if (spec.family == Family::A) {
        // Gap coordinates p_k = r_k - r_{k+1} > 0 and the centre of mass (unit Jacobian).
        // The centre of mass only enters the Gaussian, which integrates to sqrt(pi sigma^2 / (c m)).
        const double c = cOf(spec);
        const double logMean = 0.5 * std::log(std::numbers::pi * spec.sigma2 / (c * m));
        auto place = [&](const double* gaps) {
            double acc = 0.0;
            r[0] = 0.0;
            for (int k = 1; k < m; ++k) r[k] = r[k - 1] - gaps[k - 1];
            for (int k = 0; k < m; ++k) acc += r[k];
            for (int k = 0; k < m; ++k) r[k] -= acc / m;
        };
        // logIntegrand includes the Gaussian of the centre, which is zero here.
        const double G = 2.0 * L;
        double gaps[2];
        shift = -INFINITY;
        for (int k = 0; k <= 64; ++k) {
            gaps[0] = gaps[1] = G * k / 64.0 / std::max(1, m - 1);
            place(gaps);
            shift = std::max(shift, logIntegrand(spec, r, m));
        }
        auto f = [&]() { place(gaps); return std::exp(logIntegrand(spec, r, m) - shift); };
        Gk outer{kOuterTol};
        Gk inner{kInnerTol};
        if (m == 1) {
            r[0] = 0.0;
            value = std::exp(logIntegrand(spec, r, 1) - shift);
        } else if (m == 2) {
            value = outer.run([&](double p) { gaps[0] = p; return f(); }, 0.0, G);
        } else {
            value = outer.run(
                [&](double p) {
                    return inner.run([&](double q) { gaps[0] = p; gaps[1] = q; return f(); }, 0.0, G);
                },
                0.0, G);
        }
        err = outer.errSum + kInnerTol * std::fabs(value);
        shift += logMean;
    } else {
        const double lo = 0.0;
        const double hi = L;
        shift = logPeakGuess(spec, m, lo, hi);
        Gk outer{kOuterTol};
        Gk mid{kInnerTol};
        Gk inner{kInnerTol};
        auto f = [&]() { return std::exp(logIntegrand(spec, r, m) - shift); };
        if (m == 1) {
            value = outer.run([&](double a) { r[0] = a; return f(); }, lo, hi);
        } else if (m == 2) {
            value = outer.run(
                [&](double a) { return mid.run([&](double b) { r[0] = a; r[1] = b; return f(); }, lo, a); }, lo,
                hi);
        } else {
            value = outer.run(
                [&](double a) {
                    return mid.run(
                        [&](double b) {
                            return inner.run([&](double c) { r[0] = a; r[1] = b; r[2] = c; return f(); }, lo, b);
                        },
                        lo, a);
                },
                lo, hi);
        }
        err = outer.errSum + 2.0 * kInnerTol * std::fabs(value);
    }
    if (m > 1 || spec.family != Family::A) checkTolerance("zOracleQuadrature", value, err, 1e-8);
    OracleResult res;
    res.value = LogSigned{1, std::log(value) + shift};
    res.method = OracleMethod::Quadrature;
    res.errorBound = std::max(err * std::exp(shift), 1e-300);
    return res;
}

std::vector<OracleResult> zOracleMCGrid(const std::vector<EnsembleSpec>& specs, std::uint64_t seed,
                                        std::uint64_t samples, int threads) {
    if (specs.empty()) return {};
    const int m = specs.front().m;
    const Family fam = specs.front().family;
    for (const auto& s : specs) {
        s.validate();
        if (s.m != m || s.family != fam) throw DomainError("zOracleMCGrid: cells must share m and family");
    }
    if (m < 2 || m > 8) throw DomainError("zOracleMC: m must lie in [2, 8]");
    if (samples < static_cast<std::uint64_t>(kBatches)) throw DomainError("zOracleMC: too few samples");
    threads = std::max(1, threads);

    // Distinct standard deviations of the Gaussian proposal.
    std::vector<double> sds;
    std::vector<int> sdIndex(specs.size());
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const double sd = std::sqrt(specs[k].sigma2 / (2.0 * cOf(specs[k])));
        auto it = std::find(sds.begin(), sds.end(), sd);
        sdIndex[k] = static_cast<int>(it - sds.begin());
        if (it == sds.end()) sds.push_back(sd);
    }

    const std::uint64_t perBatch = samples / kBatches;
    const std::size_t ncell = specs.size();
    // batchLog[b * ncell + k] = log mean weight of batch b for cell k
    std::vector<double> batchLog(kBatches * ncell);

    auto runBatch = [&](int b) {
        Rng g = Rng::substream(seed, static_cast<std::uint64_t>(b));
        std::vector<double> z(m), x(m);
        std::vector<double> logW(ncell);
        std::vector<double> maxW(ncell, -INFINITY);
        std::vector<double> acc(ncell, 0.0);
        std::vector<double> logV(sds.size());
        for (std::uint64_t s = 0; s < perBatch; ++s) {
            for (int i = 0; i < m; ++i) z[i] = g.gaussian();
            for (std::size_t d = 0; d < sds.size(); ++d) {
                // prod_{i<j} |2 sinh((r_i - r_j)/2)| = prod_{i<j} |x_i - x_j| / prod_i x_i^{(m-1)/2}, x = e^r
                // prod_{i<j} |4 sinh((r_i - r_j)/2) sinh((r_i + r_j)/2)| = prod_{i<j} |2 cosh r_i - 2 cosh r_j|
                double prod = 1.0;
                double sumR = 0.0;
                for (int i = 0; i < m; ++i) {
                    const double ri = sds[d] * z[i];
                    sumR += ri;
                    x[i] = fam == Family::A ? std::exp(ri) : 2.0 * std::cosh(ri);
                    if (fam == Family::SP) prod *= std::fabs(2.0 * std::sinh(ri));
                }
                for (int i = 0; i < m; ++i) {
                    for (int j = i + 1; j < m; ++j) prod *= std::fabs(x[i] - x[j]);
                }
                logV[d] = std::log(prod) - (fam == Family::A ? 0.5 * (m - 1) * sumR : 0.0);
            }
            for (std::size_t k = 0; k < ncell; ++k) {
                const double lw = (fam == Family::A ? specs[k].beta : 1) * logV[sdIndex[k]];
                if (lw > maxW[k]) {
                    acc[k] = acc[k] * std::exp(maxW[k] - lw) + 1.0;
                    maxW[k] = lw;
                } else {
                    acc[k] += std::exp(lw - maxW[k]);
                }
            }
        }
        for (std::size_t k = 0; k < ncell; ++k) {
            batchLog[b * ncell + k] = maxW[k] + std::log(acc[k] / static_cast<double>(perBatch));
        }
    };

    if (threads == 1) {
        for (int b = 0; b < kBatches; ++b) runBatch(b);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (int b = w; b < kBatches; b += threads) runBatch(b);
            });
        }
        for (auto& t : pool) t.join();
    }

    std::vector<OracleResult> out(ncell);
    for (std::size_t k = 0; k < ncell; ++k) {
        double mx = -INFINITY;
        for (int b = 0; b < kBatches; ++b) mx = std::max(mx, batchLog[b * ncell + k]);
        double mean = 0.0;
        std::vector<double> v(kBatches);
        for (int b = 0; b < kBatches; ++b) {
            v[b] = std::exp(batchLog[b * ncell + k] - mx);
            mean += v[b];
        }
        mean /= kBatches;
        double var = 0.0;
        for (int b = 0; b < kBatches; ++b) var += (v[b] - mean) * (v[b] - mean);
        var /= (kBatches - 1.0);
        const double relSe = std::sqrt(var / kBatches) / mean;
        const EnsembleSpec& s = specs[k];
        // E over N(0, sigma^2/2c) of the sinh factor; the Gaussian measure integrates to c^{-1/2} per coordinate.
        double logNorm = -0.5 * m * std::log(cOf(s));
        if (fam == Family::A) {
            logNorm -= std::lgamma(m + 1.0);
        } else {
            logNorm -= std::lgamma(m + 1.0) + m * std::numbers::ln2;
        }
        OracleResult r;
        r.value = LogSigned{1, mx + std::log(mean) + logNorm};
        r.method = OracleMethod::MonteCarlo;
        r.errorBound = relSe;
        r.samples = perBatch * kBatches;
        out[k] = r;
    }
    return out;
}

OracleResult zOracleMC(const EnsembleSpec& spec, std::uint64_t seed, std::uint64_t samples, int threads) {
    OracleResult r = zOracleMCGrid({spec}, seed, samples, threads).front();
    if (!(r.errorBound <= kMaxRelSe)) {
        std::ostringstream os;
        os << "zOracleMC: relative standard error " << r.errorBound << " exceeds 10% (beta " << spec.beta << ", m "
           << spec.m << ", sigma^2 " << spec.sigma2 << ")";
        throw InsufficientSamples(os.str());
    }
    return r;
}

OracleResult rhoOracle(const EnsembleSpec& spec, double r) {
    spec.validate();
    if (spec.family != Family::A) throw DomainError("rhoOracle: only the A family carries a density");
    const int m = spec.m;
    if (m > 3) throw DomainError("rhoOracle: m must be at most 3");
    const double L = extent(spec, m) + std::fabs(r);
    const double shift = logPeakGuess(spec, m, -L, L);

    Gk outer{kOuterTol};
    Gk inner{kInnerTol};
    double v[3];
    v[0] = r;
    auto f = [&]() { return std::exp(logIntegrand(spec, v, m) - shift); };

    double value = 0.0;
    const std::vector<double> cut{r};
    if (m == 1) {
        value = f();
    } else if (m == 2) {
        value = outer.run([&](double a) { v[1] = a; return f(); }, -L, L, cut);
    } else {
        value = outer.run(
            [&](double a) {
                return inner.run([&](double b) { v[1] = a; v[2] = b; return f(); }, -L, a, cut);
            },
            -L, L, cut);
    }
    const double err = outer.errSum + kInnerTol * std::fabs(value);
    if (m > 1) checkTolerance("rhoOracle", value, err, 1e-8);
    const LogSigned z = partition(spec).logZ;
    OracleResult res;
    // (m-1)! cancels between the chamber integral and the symmetric definition.
    res.value = LogSigned{1, std::log(value) + shift} / z;
    res.method = OracleMethod::Quadrature;
    res.errorBound = std::max(err * std::exp(shift - z.lnmag), 1e-300);
    return res;
}

}  // namespace rgd
