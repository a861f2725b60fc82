#pragma once

#include "sqg/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sqg {

struct RunConfig {
    std::string mode = "verify"; // certify | base | step | verify | noise | export
    int N = 256;
    double gamma1 = 1.0, gamma2 = 1.0;
    double K = 2.0, T = 1.0, kappa = 0.5;
    std::optional<double> L;
    std::optional<long> b;
    std::optional<double> beta;
    std::optional<std::uint64_t> a;
    double deltaHolder = 1.0 / 16.0;
    int q = 0; // induction step index (the toy grid holds one step)
    std::uint64_t seed = 7;
    bool zeroNoise = false;
    double dt = 1e-3;
    std::string outdir = "out";
    bool toy = true;
    bool deepOscillation = false;
    int threads = 1;
    std::vector<double> checkTimes;
    std::string exportWhat, fromDir;

    // toy defaults for base/step when L/b/beta/a are not given
    ParameterSet toyParams(const std::string& forMode) const;
};

// key = value configuration file; unknown keys are rejected.
RunConfig parseConfigFile(const std::string& path);
void applyKeyValue(RunConfig& cfg, const std::string& key, const std::string& value);

// Exit codes: 0 success, 2 config, 3 grid/Nyquist, 4 history,
// 5 residual-check failure, 6 infeasible parameters.
int run(const RunConfig& cfg);
int exportArtifacts(const RunConfig& cfg);

// exception -> exit code mapping used by the CLI
int exitCodeFor(const std::exception& e);

} // namespace sqg
