#include "sqg/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

void addCommonFlags(CLI::App* app, sqg::RunConfig& cfg)
{
    app->add_option("--N", cfg.N, "grid points per axis (power of two)");
    app->add_option("--gamma1", cfg.gamma1, "dissipation exponent");
    app->add_option("--gamma2", cfg.gamma2, "constitutive exponent, u = Lambda^{2-gamma2} v");
    app->add_option("--K", cfg.K, "growth factor target");
    app->add_option("--T", cfg.T, "time horizon");
    app->add_option("--kappa", cfg.kappa, "probability target");
    app->add_option_function<double>("--L", [&cfg](double v) { cfg.L = v; }, "stopping-time parameter");
    app->add_option_function<long long>("--b", [&cfg](long long v) { cfg.b = static_cast<long>(v); },
                                        "frequency exponent base");
    app->add_option_function<double>("--beta", [&cfg](double v) { cfg.beta = v; }, "regularity parameter");
    app->add_option_function<long long>(
        "--a", [&cfg](long long v) { cfg.a = static_cast<std::uint64_t>(v); }, "frequency base (5N)");
    app->add_option("--delta", cfg.deltaHolder, "Holder parameter in (0, 1/8)");
    app->add_option("--q", cfg.q, "induction step index (only 0 fits a grid)");
    app->add_option("--seed", cfg.seed, "Brownian path seed");
    app->add_flag("--zero-noise", cfg.zeroNoise, "run with B identically zero");
    app->add_option("--dt", cfg.dt, "path grid step");
    app->add_option("--outdir", cfg.outdir, "output directory");
    app->add_flag("--toy,!--faithful", cfg.toy, "toy parameter mode (default)");
    app->add_flag("--deep-oscillation", cfg.deepOscillation, "run the deep bilinear check");
    app->add_option("--threads", cfg.threads, "worker threads (must not change results)");
    app->add_option("--check-times", cfg.checkTimes, "explicit check times")->delimiter(',');
}

// pre-scan for --config so file values load first and flags win
std::string findConfigPath(int argc, char** argv)
{
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") return argv[i + 1];
    return {};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spectral convex-integration laboratory for stochastic momentum SQG"};
    app.require_subcommand(1);

    sqg::RunConfig cfg;
    const std::string configPath = findConfigPath(argc, argv);
    try {
        if (!configPath.empty()) cfg = sqg::parseConfigFile(configPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    sqg::RunConfig certCfg = cfg;
    sqg::RunConfig expCfg = cfg;

    std::string sink;
    auto* runCmd = app.add_subcommand("run", "run a mode (certify | base | step | verify | noise)");
    runCmd->add_option("--config", sink, "key = value configuration file (flags win)");
    runCmd->add_option("--mode", cfg.mode, "one of certify, base, step, verify, noise, export");
    addCommonFlags(runCmd, cfg);
    runCmd->add_option("--what", cfg.exportWhat, "export target (spectra | energy | noise)");
    runCmd->add_option("--from", cfg.fromDir, "directory with prior run artifacts");

    auto* certCmd = app.add_subcommand("certify-params", "parameter-ledger certification");
    certCmd->add_option("--config", sink, "configuration file");
    addCommonFlags(certCmd, certCfg);

    auto* expCmd = app.add_subcommand("export", "export artifacts from a prior run");
    expCmd->add_option("--what", expCfg.exportWhat, "spectra | energy | noise")->required();
    expCmd->add_option("--from", expCfg.fromDir, "directory with prior run artifacts")->required();
    expCmd->add_option("--outdir", expCfg.outdir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (certCmd->parsed()) {
            certCfg.mode = "certify";
            return sqg::run(certCfg);
        }
        if (expCmd->parsed()) {
            expCfg.mode = "export";
            return sqg::run(expCfg);
        }
        return sqg::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return sqg::exitCodeFor(e);
    }
}
