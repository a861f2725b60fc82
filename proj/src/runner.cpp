#include "sqg/runner.hpp"

#include "sqg/norms.hpp"
#include "sqg/util.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace sqg {

namespace fs = std::filesystem;

ParameterSet RunConfig::toyParams(const std::string& forMode) const
{
    ParameterSet p;
    p.gamma1 = gamma1;
    p.gamma2 = gamma2;
    p.K = K;
    p.T = T;
    p.kappa = kappa;
    p.paperFaithful = !toy;
    p.delta = deltaHolder;
    p.L = L.value_or(forMode == "base" ? 1.2 : 2.0);
    p.b = b.value_or(2);
    if (beta) {
        p.beta = Rational{static_cast<std::int64_t>(std::llround(*beta * 1e6)), 1000000};
    } else {
        p.beta = Rational{51, 100};
    }
    p.a = a.value_or(5);
    p.q_max = 2;
    return p;
}

RunConfig parseConfigFile(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw ConfigError("config file not found: " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) applyKeyValue(cfg, key, value);
    }
    return cfg;
}

void applyKeyValue(RunConfig& cfg, const std::string& key, const std::string& value)
{
    auto asD = [&] { return std::stod(value); };
    auto asI = [&] { return std::stoll(value); };
    if (key == "mode")
        cfg.mode = value;
    else if (key == "N")
        cfg.N = static_cast<int>(asI());
    else if (key == "gamma1")
        cfg.gamma1 = asD();
    else if (key == "gamma2")
        cfg.gamma2 = asD();
    else if (key == "K")
        cfg.K = asD();
    else if (key == "T")
        cfg.T = asD();
    else if (key == "kappa")
        cfg.kappa = asD();
    else if (key == "L")
        cfg.L = asD();
    else if (key == "b")
        cfg.b = asI();
    else if (key == "beta")
        cfg.beta = asD();
    else if (key == "a")
        cfg.a = static_cast<std::uint64_t>(asI());
    else if (key == "delta")
        cfg.deltaHolder = asD();
    else if (key == "q")
        cfg.q = static_cast<int>(asI());
    else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(asI());
    else if (key == "zero_noise")
        cfg.zeroNoise = value == "1" || value == "true";
    else if (key == "dt")
        cfg.dt = asD();
    else if (key == "outdir")
        cfg.outdir = value;
    else if (key == "toy")
        cfg.toy = value == "1" || value == "true";
    else if (key == "deep_oscillation")
        cfg.deepOscillation = value == "1" || value == "true";
    else if (key == "threads")
        cfg.threads = static_cast<int>(asI());
    else if (key == "check_times") {
        cfg.checkTimes.clear();
        std::stringstream ss(value);
        std::string tok;
        while (std::getline(ss, tok, ',')) cfg.checkTimes.push_back(std::stod(tok));
    } else if (key == "what")
        cfg.exportWhat = value;
    else if (key == "from")
        cfg.fromDir = value;
    else
        throw ConfigError("unknown configuration key: " + key);
}

int exitCodeFor(const std::exception& e)
{
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const GridError*>(&e)) return 3;
    if (dynamic_cast<const HistoryError*>(&e)) return 4;
    if (dynamic_cast<const ResidualCheckFailed*>(&e)) return 5;
    if (dynamic_cast<const SearchExhausted*>(&e)) return 6;
    return 1;
}

namespace {

json configJson(const RunConfig& cfg)
{
    json j;
    j["mode"] = cfg.mode;
    j["N"] = cfg.N;
    j["gamma1"] = cfg.gamma1;
    j["gamma2"] = cfg.gamma2;
    j["K"] = cfg.K;
    j["T"] = cfg.T;
    j["kappa"] = cfg.kappa;
    j["seed"] = cfg.seed;
    j["zero_noise"] = cfg.zeroNoise;
    j["dt"] = cfg.dt;
    j["toy"] = cfg.toy;
    j["delta"] = cfg.deltaHolder;
    if (cfg.L) j["L"] = *cfg.L;
    if (cfg.b) j["b"] = *cfg.b;
    if (cfg.beta) j["beta"] = *cfg.beta;
    if (cfg.a) j["a"] = *cfg.a;
    return j;
}

WienerPath makePath(const RunConfig& cfg, double horizon)
{
    return cfg.zeroNoise ? zeroPath(cfg.dt, horizon) : samplePath(cfg.seed, cfg.dt, horizon);
}

int runCertify(const RunConfig& cfg)
{
    fs::create_directories(cfg.outdir);
    const PaperConstants constants = deriveConstants(cfg.gamma1, cfg.gamma2);
    FeasibilityReport rep;
    if (cfg.L && cfg.b && cfg.beta && cfg.a) {
        ParameterSet p = cfg.toyParams("certify");
        p.L = *cfg.L;
        p.b = *cfg.b;
        p.a = *cfg.a;
        rep = certify(p, constants);
    } else {
        SearchOptions opts;
        if (cfg.beta) opts.fixedBeta = *cfg.beta;
        const ParameterSet p = searchFeasible(cfg.gamma1, cfg.gamma2, cfg.K, cfg.T, cfg.kappa, constants, opts);
        rep = certify(p, constants);
        // soundness: the doubled-precision re-evaluation must agree
        const FeasibilityReport rep2 = certify(p, constants, 2);
        if (rep.overall && !rep2.overall)
            throw ResidualCheckFailed("certify: verdict not stable under doubled precision");
    }
    json j = toJson(rep);
    j["config"] = configJson(cfg);
    writeJson(cfg.outdir + "/certificate.json", j);

    // constants report: families, affine functionals, and the enclosures
    {
        json cr;
        const auto [f1, f2] = standardFamilies();
        for (const auto& fam : {f1, f2}) {
            const auto gc = gammaCoefficients(fam);
            json jf;
            for (const auto& d : fam.directions) jf["directions"].push_back({d.x, d.y});
            for (int p = 0; p < 3; ++p) {
                jf["c_p"].push_back({{"matrix", {gc.functionals[p].a11, gc.functionals[p].a12,
                                                 gc.functionals[p].a22}},
                                     {"at_identity", gc.atIdentity[p]}});
            }
            jf["epsilon"] = gc.epsilon;
            jf["gamma_sup"] = gc.gammaSup;
            cr["families"].push_back(jf);
        }
        cr["eps_gamma"] = toJson(constants.epsGamma);
        cr["gamma_sup"] = toJson(constants.gammaSup);
        cr["C1"] = toJson(constants.C1);
        cr["C0"] = toJson(constants.C0);
        cr["CS"] = toJson(constants.CS);
        cr["CG"] = toJson(constants.CG);
        writeJson(cfg.outdir + "/constants.json", cr);
    }
    std::cout << "certificate: " << (rep.overall ? "green" : "red") << " ("
              << rep.entries.size() << " entries)\n";
    for (const auto& e : rep.entries)
        if (!e.green) std::cout << "  red: " << e.id << " (" << e.paper_tag << ")\n";
    if (!rep.overall && !cfg.toy) return 6;
    return 0;
}

int runNoise(const RunConfig& cfg)
{
    fs::create_directories(cfg.outdir);
    const double L = cfg.L.value_or(2.0);
    const WienerPath path = makePath(cfg, std::max(cfg.T, L) + 1.0);
    const auto stop = stoppingTime(path, StoppingTimeSpec{L, cfg.deltaHolder});
    writePathCsv(cfg.outdir + "/path.csv", path);
    json j;
    j["config"] = configJson(cfg);
    j["seed"] = cfg.seed;
    j["L"] = L;
    j["delta"] = cfg.deltaHolder;
    j["T_L"] = stop.T_L;
    j["fired"] = stop.fired;
    writeJson(cfg.outdir + "/stopping.json", j);
    std::cout << "T_L = " << stop.T_L << " (" << stop.fired << ")\n";
    return 0;
}

// base-step residual with centered time differences, relative to ||div R_0||;
// exact in space, so the measurement isolates the time discretization
double baseResidual(const BaseLevel& base, const ExponentialProcess& noise, const ParameterSet& p,
                    double t, double dtc)
{
    VectorField2 E = base.y(t + dtc);
    E -= base.y(t - dtc);
    E *= 1.0 / (2.0 * dtc);
    VectorField2 half = base.y(t);
    half *= 0.5;
    E += half;
    VectorField2 nl = nlTwoTerm(fractionalLaplacian(base.y(t), 2.0 - p.gamma2), base.y(t));
    nl *= noise.upsilon(t);
    E += nl;
    E += gradient(base.p(t));
    E += fractionalLaplacian(base.y(t), p.gamma1);
    const VectorField2 divR = divergence(base.R(t));
    E -= divR;
    return supNorm(E) / std::max(1e-300, supNorm(divR));
}

int runBase(const RunConfig& cfg)
{
    fs::create_directories(cfg.outdir);
    const ParameterSet p = cfg.toyParams("base");
    const Grid grid(cfg.N);
    const NoiseProfile prof = m0Profile(p.L, p.T);
    const double horizon = p.L + 1.0;
    const WienerPath path = makePath(cfg, horizon);
    const SequenceValues seq0 = sequences(p, 0, true);
    ExponentialProcess noise(path, seq0.ell, StoppingTimeSpec{p.L, p.delta});
    BaseLevel base(grid, p, prof, &noise);

    // sample times: the pure-growth zone when reachable, otherwise t <= 0
    std::vector<double> times;
    const double S = std::min(p.T, p.L);
    if (noise.T_L() > S + 0.02) {
        const double hi = std::min(noise.T_L(), p.L) - 0.01;
        for (double f : {0.2, 0.5, 0.8}) times.push_back(S + 0.01 + f * (hi - S - 0.02));
    } else {
        times = {-1.5, -1.0, -0.5};
    }

    json frames = json::array();
    double worst = 0.0, worstHalf = 0.0;
    const double dtc = cfg.dt;
    for (double t : times) {
        const double r1 = baseResidual(base, noise, p, t, dtc);
        const double r2 = baseResidual(base, noise, p, t, dtc / 2.0);
        worst = std::max(worst, r1);
        worstHalf = std::max(worstHalf, r2);
        json jf;
        jf["t"] = t;
        jf["residual_rel"] = r1;
        jf["residual_rel_half_dt"] = r2;
        frames.push_back(jf);
    }

    // est 477 gradient-form identity at one sample time
    double gradFormResidual = 0.0;
    {
        const double t = times.front();
        const VectorField2 y0 = base.y(t);
        VectorField2 lhs = nlTwoTerm(fractionalLaplacian(y0, 2.0 - p.gamma2), y0);
        lhs *= noise.upsilon(t);
        lhs += gradient(base.p(t));
        gradFormResidual = supNorm(lhs) / std::max(1e-300, supNorm(gradient(base.p(t))));
    }

    const PaperConstants constants = deriveConstants(p.gamma1, p.gamma2);
    ParameterSet toyLedger = p;
    const FeasibilityReport cert = certify(toyLedger, constants);

    json manifest;
    manifest["config"] = configJson(cfg);
    manifest["params"] = toJson(p);
    manifest["T_L"] = noise.T_L();
    manifest["m_L"] = prof.mL;
    manifest["frames"] = frames;
    manifest["residual_max"] = worst;
    manifest["residual_max_half_dt"] = worstHalf;
    manifest["richardson_ratio"] = worst > 1e-14 ? worst / worstHalf : 0.0;
    manifest["gradient_form_residual"] = gradFormResidual;
    manifest["upsilon_bounds"] = [&] {
        const auto b = noise.boundsReport();
        json jb;
        jb["sup"] = b.sup_upsilon;
        jb["sup_inv"] = b.sup_upsilon_inv;
        jb["holder"] = b.holder_upsilon;
        jb["holder_inv"] = b.holder_upsilon_inv;
        jb["bound_sup"] = b.bound_sup;
        jb["bound_holder"] = b.bound_holder;
        jb["ok"] = b.ok;
        return jb;
    }();
    manifest["toy_ledger"] = toJson(cert);

    const VectorField2 y0 = base.y(times.front());
    const SymTensorField2 r0 = base.R(times.front());
    writeSnapshot(cfg.outdir + "/y0.sqgf", times.front(), {&y0.x1, &y0.x2});
    writeSnapshot(cfg.outdir + "/R0.sqgf", times.front(), {&r0.t11, &r0.t12, &r0.t22});
    manifest["files"] = json::array({"y0.sqgf", "R0.sqgf"});
    writeJson(cfg.outdir + "/manifest.json", manifest);

    std::cout << "base: residual " << worst << " (half-dt " << worstHalf << "), gradient-form "
              << gradFormResidual << "\n";
    if (worst > 1e-6 || gradFormResidual > 1e-11)
        throw ResidualCheckFailed("base: residual above tolerance");
    return 0;
}

int runStepMode(const RunConfig& cfg)
{
    if (cfg.q != 0)
        throw GridBound("step: only q = 0 -> 1 is grid-representable (4 lambda_{q+1} < N/2 fails beyond)");
    fs::create_directories(cfg.outdir);
    const ParameterSet p = cfg.toyParams("step");
    const Grid grid(cfg.N);
    const PaperConstants constants = deriveConstants(p.gamma1, p.gamma2);
    const WienerPath path = makePath(cfg, p.L + 1.0);
    StepEvaluator step(grid, p, constants, path);

    std::vector<double> times = cfg.checkTimes.empty() ? step.defaultCheckTimes() : cfg.checkTimes;
    const double dtc = step.dtCheckDefault();

    json frames = json::array();
    bool hardGreen = true;
    double residualMax = 0.0;
    for (double t : times) {
        const FrameChecks fc = step.frameChecks(t, dtc);
        json jf = toJson(fc);
        jf["t"] = t;
        jf["partition_defect"] = step.cutoffs().partitionDefect(t);
        frames.push_back(jf);
        residualMax = std::max(residualMax, fc.residual_rel);
        hardGreen = hardGreen && fc.w_support_outside <= 1e-13 && fc.y1_support_outside <= 1e-13 &&
                    fc.r1_support_outside <= 1e-13 && fc.w_imag_defect <= 1e-12 &&
                    fc.w_sup <= fc.w_bound_350a && fc.y_dist_sup <= fc.y_dist_bound_327;
        if (cfg.zeroNoise) hardGreen = hardGreen && fc.residual_rel <= 1e-6;
    }

    const double oscT = times.back();
    const OscillationReport osc = step.decomposeOscillation(oscT);
    hardGreen = hardGreen && osc.cancellation_ok;

    const StressBreakdown stress = step.assembleStresses(oscT);
    hardGreen = hardGreen && stress.norms.at("total_trace_defect") <= 1e-12;
    const auto hypToy = hypothesisToyLevel1(step, times);
    const auto energy = energyReport(step, times, p, constants);

    json manifest;
    manifest["config"] = configJson(cfg);
    manifest["params"] = toJson(p);
    manifest["constants"] = toJson(constants);
    manifest["T_L"] = step.T_L();
    manifest["tau"] = step.cutoffs().tau;
    manifest["dt_check"] = dtc;
    manifest["check_times"] = times;
    manifest["frames"] = frames;
    manifest["stress"] = toJson(stress);
    manifest["oscillation"] = toJson(osc);
    manifest["hypothesis_level1"] = toJson(hypToy);
    manifest["energy"] = toJson(energy);
    if (cfg.deepOscillation) manifest["deep_oscillation"] = toJson(deepOscillationCheck(64, cfg.seed));

    std::vector<WindowData> wins;
    const VectorField2 w1 = step.perturbation(oscT, wins);
    const VectorField2 y1 = step.y1(oscT);
    const SymTensorField2 r1 = stress.total;
    writeSnapshot(cfg.outdir + "/w1.sqgf", oscT, {&w1.x1, &w1.x2});
    writeSnapshot(cfg.outdir + "/y1.sqgf", oscT, {&y1.x1, &y1.x2});
    writeSnapshot(cfg.outdir + "/R1.sqgf", oscT, {&r1.t11, &r1.t12, &r1.t22});
    writeSpectrumCsv(cfg.outdir + "/w1_spectrum.csv", w1.x1, 1e-13);
    manifest["files"] = json::array({"w1.sqgf", "y1.sqgf", "R1.sqgf", "w1_spectrum.csv"});
    writeJson(cfg.outdir + "/manifest.json", manifest);

    std::cout << "step: residual " << residualMax << ", O1 cancellation "
              << (osc.cancellation_ok ? "ok" : "FAIL") << ", hard checks "
              << (hardGreen ? "green" : "red") << "\n";
    if (!hardGreen) throw ResidualCheckFailed("step: hard checks failed");
    return 0;
}

int runVerify(const RunConfig& cfg)
{
    fs::create_directories(cfg.outdir);
    const Grid grid(cfg.N);
    const auto rep = identitySuite(grid, cfg.gamma2, cfg.seed);
    json j = toJson(rep);
    j["config"] = configJson(cfg);
    if (cfg.deepOscillation) j["deep_oscillation"] = toJson(deepOscillationCheck(64, cfg.seed));
    writeJson(cfg.outdir + "/verify.json", j);
    for (const auto& e : rep.entries)
        std::cout << (e.pass ? "pass " : "FAIL ") << e.id << "  measured " << e.measured << "\n";
    return rep.allPass ? 0 : 5;
}

} // namespace

int exportArtifacts(const RunConfig& cfg)
{
    if (cfg.fromDir.empty()) throw ConfigError("export: missing 'from' directory");
    const std::string manifestPath = cfg.fromDir + "/manifest.json";
    std::ifstream is(manifestPath);
    if (!is) throw MissingArtifact("export: no manifest at " + manifestPath);
    json manifest = json::parse(is);
    fs::create_directories(cfg.outdir);

    if (cfg.exportWhat == "spectra") {
        const std::string snap = cfg.fromDir + "/w1.sqgf";
        const Snapshot s = readSnapshot(snap);
        const Grid grid(s.n);
        for (std::size_t c = 0; c < s.components.size(); ++c) {
            const ScalarField f = ScalarField::fromPhysical(grid, s.components[c]);
            writeSpectrumCsv(cfg.outdir + "/spectrum_c" + std::to_string(c) + ".csv", f, 1e-13);
        }
        return 0;
    }
    if (cfg.exportWhat == "energy") {
        std::ofstream os(cfg.outdir + "/energy.csv");
        os << "t,M0,M0_sqrt,residual_rel\n";
        os.precision(17);
        const double L = manifest["params"]["L"].get<double>();
        const double T = manifest["params"]["T"].get<double>();
        const NoiseProfile prof = m0Profile(L, T);
        for (const auto& fr : manifest["frames"]) {
            const double t = fr["t"].get<double>();
            os << t << ',' << prof.M0(t) << ',' << prof.M0sqrt(t) << ','
               << (fr.contains("residual_rel") ? fr["residual_rel"].get<double>() : 0.0) << '\n';
        }
        return 0;
    }
    if (cfg.exportWhat == "noise") {
        const auto& jc = manifest["config"];
        RunConfig nc;
        nc.seed = jc["seed"].get<std::uint64_t>();
        nc.dt = jc["dt"].get<double>();
        nc.zeroNoise = jc["zero_noise"].get<bool>();
        const double L = manifest["params"]["L"].get<double>();
        const WienerPath path = makePath(nc, L + 1.0);
        writePathCsv(cfg.outdir + "/path.csv", path);
        return 0;
    }
    throw ConfigError("export: unknown 'what' (spectra | energy | noise)");
}

int run(const RunConfig& cfg)
{
    set_worker_threads(cfg.threads);
    if (cfg.mode == "certify") return runCertify(cfg);
    if (cfg.mode == "noise") return runNoise(cfg);
    if (cfg.mode == "base") return runBase(cfg);
    if (cfg.mode == "step") return runStepMode(cfg);
    if (cfg.mode == "verify") return runVerify(cfg);
    if (cfg.mode == "export") return exportArtifacts(cfg);
    throw ConfigError("unknown mode: " + cfg.mode);
}

} // namespace sqg
