#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>

#include "args.hpp"
#include "commands.hpp"
#include "rgd/errors.hpp"

using namespace rgd;
using namespace rgd::cli;

int main(int argc, char** argv) {
    CLI::App app{"Partition functions, densities and kernels of Riemannian Gaussian ensembles", "rgd"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string out;

    const std::map<std::string, Family> families{{"a", Family::A}, {"so", Family::SO}, {"sp", Family::SP}};
    const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
    const std::map<std::string, Convention> conventions{{"paper", Convention::Paper},
                                                        {"variance", Convention::Variance}};
    const std::map<std::string, OddBorder> borders{{"printed", OddBorder::Printed}, {"exact", OddBorder::Exact}};

    auto common = [&](CLI::App* s) {
        s->add_option("--out", out, "Write output to PATH instead of stdout");
        s->add_option("--format", cfg.format, "csv or json")->transform(CLI::CheckedTransformer(formats));
        s->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));
    };
    auto ensemble = [&](CLI::App* s) {
        s->add_option("--family", cfg.family, "a, so or sp")->transform(CLI::CheckedTransformer(families));
        s->add_option_function<int>(
             "--beta", [&](const int& b) { cfg.beta = b; cfg.betaGiven = true; }, "1, 2 or 4")
            ->check(CLI::IsMember({1, 2, 4}));
        s->add_option("--convention", cfg.convention, "paper or variance")
            ->transform(CLI::CheckedTransformer(conventions));
    };
    auto grid = [&](CLI::App* s) {
        s->add_option("--m", cfg.m, "INT or RANGE (start:stop[:step] or a,b,c)");
        s->add_option("--sigma2", cfg.sigma2, "REAL or RANGE (start:stop:step or a,b,c)");
        s->add_flag("--linear", cfg.linear, "Print values instead of natural logs");
        s->add_option("--border", cfg.border, "Odd-m border for beta = 1: printed or exact")
            ->transform(CLI::CheckedTransformer(borders));
    };

    auto* zeta = app.add_subcommand("zeta", "log of the SPD(m) normaliser zeta(m, sigma)");
    common(zeta);
    ensemble(zeta);
    grid(zeta);

    auto* part = app.add_subcommand("partition", "log z_beta for a family over an (m, sigma^2) grid");
    common(part);
    ensemble(part);
    grid(part);

    auto* table = app.add_subcommand("table", "Reproduce the published table layouts");
    common(table);
    ensemble(table);
    grid(table);
    table->add_flag("--small-sigma", cfg.smallSigma, "The fixed small sigma^2 tables (-log values)");

    auto* dens = app.add_subcommand("density", "Eigenvalue density on a grid");
    common(dens);
    ensemble(dens);
    dens->add_option("--m", cfg.m, "INT");
    dens->add_option("--sigma2", cfg.sigma2, "REAL");
    dens->add_option("--grid", cfg.grid, "LO:HI:STEP (default covers the support)");
    dens->add_option("--mixture", cfg.mixturePath, "beta = 2: also write the Gaussian mixture to PATH");

    auto* kern = app.add_subcommand("kernel", "Non-colliding Brownian transition kernel");
    common(kern);
    kern->add_option("--x", cfg.x, "End positions, comma separated, strictly decreasing")->required();
    kern->add_option("--eta", cfg.eta, "Start positions, comma separated, strictly decreasing")->required();
    kern->add_option("--t", cfg.t, "Time")->check(CLI::PositiveNumber);
    kern->add_option("--chamber", cfg.chamber, "a (walls between walkers) or b (extra wall at 0)")
        ->check(CLI::IsMember({'a', 'b'}));

    auto* ver = app.add_subcommand("verify", "Run the certification suite");
    common(ver);
    ver->add_option("--seed", cfg.seed, "Monte Carlo seed");
    ver->add_option("--samples", cfg.samples, "Monte Carlo samples per cell")->check(CLI::Range(1000ULL, 1ULL << 40));
    ver->add_option("--criteria", cfg.criteria, "Only these criteria (1..11)")->delimiter(',');
    ver->add_flag("--quiet", cfg.quiet, "No per-criterion summary on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::ofstream file;
        if (!out.empty()) {
            file.open(out);
            if (!file) throw UsageError("cannot open " + out + " for writing");
        }
        std::ostream& os = out.empty() ? std::cout : file;
        int rc = 0;
        if (*zeta) rc = cmdZeta(cfg, os);
        if (*part) rc = cmdPartition(cfg, os);
        if (*table) rc = cmdTable(cfg, os);
        if (*dens) rc = cmdDensity(cfg, os);
        if (*kern) rc = cmdKernel(cfg, os);
        if (*ver) rc = cmdVerify(cfg, os, std::cerr);
        os.flush();
        return rc;
    } catch (const UsageError& e) {
        std::cerr << "rgd: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "rgd: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "rgd: numerical failure: " << e.what() << '\n';
        return 3;
    }
}
