#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "args.hpp"
#include "pool.hpp"
#include "rgd/density.hpp"
#include "rgd/diffusion.hpp"
#include "rgd/verify.hpp"

namespace rgd::cli {

namespace {

struct Cellwise {
    std::vector<int> m;
    std::vector<double> sigma2;
};

Cellwise cells(const RunConfig& c, const std::vector<int>& mDefault = {}, const std::vector<double>& sDefault = {}) {
    Cellwise g;
    if (!c.m.empty()) {
        g.m = parseIntRange(c.m, "--m");
    } else if (!mDefault.empty()) {
        g.m = mDefault;
    } else {
        throw UsageError("--m is required");
    }
    if (!c.sigma2.empty()) {
        g.sigma2 = parseRealRange(c.sigma2, "--sigma2");
    } else if (!sDefault.empty()) {
        g.sigma2 = sDefault;
    } else {
        throw UsageError("--sigma2 is required");
    }
    for (int m : g.m) {
        if (m < 1) throw UsageError("--m: values must be positive");
    }
    for (double s : g.sigma2) {
        if (!(s > 0.0)) throw UsageError("--sigma2: values must be positive");
    }
    return g;
}

// Evaluates f over the m-major, sigma^2-minor grid and writes m,sigma2,<column>.
template <class F>
int writeGrid(const RunConfig& c, std::ostream& out, const Cellwise& g, const std::string& command,
              const std::string& logColumn, const std::string& linearColumn, F&& f, nlohmann::json meta = {}) {
    const std::size_t ns = g.sigma2.size();
    std::vector<double> v(g.m.size() * ns);
    parallelFor(v.size(), c.threads, [&](std::size_t i) { v[i] = f(g.m[i / ns], g.sigma2[i % ns]); });
    Table t;
    t.columns = {"m", "sigma2", c.linear ? linearColumn : logColumn};
    for (std::size_t i = 0; i < v.size(); ++i) {
        t.rows.push_back({static_cast<std::int64_t>(g.m[i / ns]), g.sigma2[i % ns], c.linear ? std::exp(v[i]) : v[i]});
    }
    if (meta.is_null()) meta = nlohmann::json::object();
    writeTable(out, t, c.format, command, meta);
    return 0;
}

const char* familyName(Family f) {
    switch (f) {
        case Family::A: return "a";
        case Family::SO: return "so";
        case Family::SP: return "sp";
    }
    return "?";
}

nlohmann::json ensembleMeta(const RunConfig& c, int beta) {
    return {{"family", familyName(c.family)},
            {"beta", beta},
            {"convention", c.convention == Convention::Paper ? "paper" : "variance"}};
}

int effectiveBeta(const RunConfig& c) {
    if (c.family != Family::A && c.betaGiven && c.beta != 1) {
        throw UsageError("--family so/sp requires --beta 1");
    }
    return c.family == Family::A ? c.beta : 1;
}

std::vector<double> tableGrid() {
    std::vector<double> s;
    for (int k = 0; k < 24; ++k) s.push_back(0.1 * (k + 1));
    return s;
}

std::vector<int> intRange(int lo, int hi, int step = 1) {
    std::vector<int> v;
    for (int m = lo; m <= hi; m += step) v.push_back(m);
    return v;
}

}  // namespace

int cmdZeta(const RunConfig& c, std::ostream& out) {
    if (c.family != Family::A || (c.betaGiven && c.beta != 1)) {
        throw UsageError("zeta is the beta = 1, family a normaliser; drop --family/--beta");
    }
    const OddBorder border = c.border.value_or(OddBorder::Printed);
    return writeGrid(
        c, out, cells(c), "zeta", "log_value", "value",
        [&](int m, double s2) { return zeta(m, s2, border).lnmag; },
        {{"border", border == OddBorder::Printed ? "printed" : "exact"}});
}

int cmdPartition(const RunConfig& c, std::ostream& out) {
    const int beta = effectiveBeta(c);
    PartitionOptions po;
    po.convention = c.convention;
    po.oddBorder = c.border;
    return writeGrid(
        c, out, cells(c), "partition", "log_value", "value",
        [&](int m, double s2) { return partition({c.family, beta, m, s2}, po).logZ.lnmag; }, ensembleMeta(c, beta));
}

int cmdTable(const RunConfig& c, std::ostream& out) {
    if (c.family != Family::A) throw UsageError("table: only family a has published tables");
    const int beta = c.beta;
    PartitionOptions po;
    po.convention = c.convention;
    po.oddBorder = c.border;
    nlohmann::json meta = ensembleMeta(c, beta);
    meta["small_sigma"] = c.smallSigma;
    if (beta == 1) {
        const OddBorder border = c.border.value_or(OddBorder::Printed);
        meta["quantity"] = c.smallSigma ? "-log zeta" : "log zeta";
        if (c.smallSigma) {
            return writeGrid(
                c, out, cells(c, intRange(2, 40, 2), {0.01}), "table", "value", "value",
                [&](int m, double s2) { return -zeta(m, s2, border).lnmag; }, meta);
        }
        return writeGrid(
            c, out, cells(c, intRange(2, 12), tableGrid()), "table", "value", "value",
            [&](int m, double s2) { return zeta(m, s2, border).lnmag; }, meta);
    }
    meta["quantity"] = c.smallSigma ? "-log z" : "log z";
    const double sign = c.smallSigma ? -1.0 : 1.0;
    auto f = [&](int m, double s2) { return sign * partition({Family::A, beta, m, s2}, po).logZ.lnmag; };
    if (c.smallSigma) {
        return writeGrid(c, out, cells(c, intRange(1, 20), {0.02}), "table", "value", "value", f, meta);
    }
    return writeGrid(c, out, cells(c, intRange(2, beta == 4 ? 7 : 12), tableGrid()), "table", "value", "value", f,
                     meta);
}

int cmdDensity(const RunConfig& c, std::ostream& out) {
    const Cellwise g = cells(c);
    if (g.m.size() != 1 || g.sigma2.size() != 1) throw UsageError("density takes a single --m and --sigma2");
    const EnsembleSpec spec{c.family, effectiveBeta(c), g.m[0], g.sigma2[0]};
    if (c.convention != Convention::Paper) throw UsageError("density: only the paper convention is available");
    if (!c.mixturePath.empty() && spec.beta != 2) throw UsageError("--mixture is only available for beta = 2");
    const std::vector<double> grid = c.grid.empty() ? defaultDensityGrid(spec) : parseGrid(c.grid);

    // Validates the (beta, m) combination before any work is split up.
    densityCurve(spec, {});
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(grid.size(), 4 * c.threads));
    std::vector<double> rho(grid.size());
    parallelFor(chunks, c.threads, [&](std::size_t k) {
        const std::size_t lo = grid.size() * k / chunks;
        const std::size_t hi = grid.size() * (k + 1) / chunks;
        const DensityCurve part = densityCurve(spec, std::vector<double>(grid.begin() + lo, grid.begin() + hi));
        std::copy(part.values.begin(), part.values.end(), rho.begin() + lo);
    });

    Table t;
    t.columns = {"r", "rho"};
    for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid[i], rho[i]});
    nlohmann::json meta = ensembleMeta(c, spec.beta);
    meta["m"] = spec.m;
    meta["sigma2"] = spec.sigma2;
    meta["mass"] = trapezoid(grid, rho);
    meta["local_maxima"] = countLocalMaxima(rho);
    writeTable(out, t, c.format, "density", meta);

    if (!c.mixturePath.empty()) {
        const Mixture mix = rho2Mixture(spec.m, spec.sigma2);
        std::ofstream f(c.mixturePath);
        if (!f) throw UsageError("cannot open " + c.mixturePath);
        Table mt;
        mt.columns = {"center", "coefficient_sign", "coefficient_lnmag"};
        for (std::size_t s = 0; s < mix.centers.size(); ++s) {
            mt.rows.push_back({mix.centers[s], static_cast<std::int64_t>(mix.coefficients[s].sign),
                               mix.coefficients[s].lnmag});
        }
        writeTable(f, mt, c.format, "mixture", meta);
    }
    return 0;
}

int cmdKernel(const RunConfig& c, std::ostream& out) {
    if (c.x.empty() || c.eta.empty()) throw UsageError("kernel needs --x and --eta");
    WalkerConfig w;
    w.x = parseVector(c.x, "--x");
    w.eta = parseVector(c.eta, "--eta");
    w.t = c.t;
    w.family = c.chamber == 'b' ? Chamber::B : Chamber::A;
    w.validate();
    const LogSigned k = w.family == Chamber::A ? kmKernelA(w) : kmKernelB(w);
    Table t;
    t.columns = {"sign", "log_magnitude"};
    t.rows.push_back({static_cast<std::int64_t>(k.sign), k.isZero() ? -INFINITY : k.lnmag});
    writeTable(out, t, c.format, "kernel",
               {{"chamber", std::string(1, c.chamber)}, {"t", w.t}, {"x", w.x}, {"eta", w.eta}});
    return 0;
}

int cmdVerify(const RunConfig& c, std::ostream& out, std::ostream& log) {
    VerifyOptions opt;
    opt.seed = c.seed;
    opt.threads = c.threads;
    opt.mcSamples = c.samples;
    opt.criteria = c.criteria;
    for (int k : c.criteria) {
        if (k < 1 || k > kCriteria - 1) throw UsageError("--criteria: values must be in 1..11");
    }
    const VerifyReport rep = runVerification(opt);

    Table t;
    t.columns = {"check_id", "status", "observed", "expected", "tolerance"};
    for (const auto& r : rep.rows) t.rows.push_back({r.id, statusName(r.status), r.observed, r.expected, r.tolerance});
    nlohmann::json meta = nlohmann::json::object();
    nlohmann::json notes = nlohmann::json::object();
    for (const auto& r : rep.rows) {
        if (!r.note.empty()) notes[r.id] = r.note;
    }
    nlohmann::json crit = nlohmann::json::array();
    for (int k = 1; k < kCriteria; ++k) {
        if (!c.criteria.empty() && std::find(c.criteria.begin(), c.criteria.end(), k) == c.criteria.end()) continue;
        crit.push_back({{"criterion", k}, {"title", criterionTitle(k)}, {"passed", rep.passed(k)}});
    }
    const CheckRow* bad = rep.firstFailure();
    meta["seed"] = c.seed;
    meta["seconds"] = rep.seconds;
    meta["passed"] = bad == nullptr;
    meta["first_failure"] = bad ? nlohmann::json(bad->id) : nlohmann::json(nullptr);
    meta["criteria"] = crit;
    meta["notes"] = notes;
    writeTable(out, t, c.format, "verify", meta);

    if (!c.quiet) {
        for (const auto& k : crit) {
            log << "criterion " << k["criterion"].get<int>() << ": " << (k["passed"].get<bool>() ? "PASS" : "FAIL")
                << "  " << k["title"].get<std::string>() << '\n';
        }
        log << "verify: " << rep.rows.size() << " checks in " << formatReal(std::round(rep.seconds * 100) / 100)
            << " s\n";
    }
    if (bad) {
        log << "verify: first failing check: " << bad->id;
        if (!bad->note.empty()) log << " (" << bad->note << ")";
        log << '\n';
        return 1;
    }
    return 0;
}

}  // namespace rgd::cli
