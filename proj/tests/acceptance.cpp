// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include "sqg/io.hpp"
#include "sqg/norms.hpp"
#include "sqg/runner.hpp"
#include "sqg/util.hpp"
#include "sqg/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <random>

using namespace sqg;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& what)
{
    std::cout << "CRITERION " << idx << (pass ? " PASS: " : " FAIL: ") << what << "\n" << std::flush;
    if (!pass) ++failures;
}

double elapsed(const std::chrono::steady_clock::time_point& t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ScalarField randomBand(const Grid& g, std::mt19937_64& rng, int kcap)
{
    ScalarField f(g);
    auto u = [&rng]() { return (static_cast<double>(rng() >> 11) * 0x1p-53) * 2.0 - 1.0; };
    for (int k1 = -kcap; k1 <= kcap; ++k1)
        for (int k2 = -kcap; k2 <= kcap; ++k2) {
            if ((k1 == 0 && k2 == 0) || k1 < 0 || (k1 == 0 && k2 < 0)) continue;
            const cdouble c(u(), u());
            f.set_coeff(k1, k2, c);
            f.set_coeff(-k1, -k2, std::conj(c));
        }
    return f;
}

ParameterSet toySet(double L)
{
    ParameterSet p;
    p.gamma1 = 1.0;
    p.gamma2 = 1.0;
    p.L = L;
    p.T = 1.0;
    p.b = 2;
    p.beta = Rational{51, 100};
    p.a = 5;
    p.q_max = 2;
    return p;
}

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void criterion1()
{
    const auto t0 = std::chrono::steady_clock::now();
    const Grid g(128);
    std::mt19937_64 rng(101);
    double worstDiv = 0.0, worstTr = 0.0;
    for (int it = 0; it < 100; ++it) {
        const ScalarField psi = randomBand(g, rng, 25);
        VectorField2 f(g);
        f.x1 = derivative(psi, 1);
        f.x1 *= -1.0;
        f.x2 = derivative(psi, 0);
        const SymTensorField2 B = antiDivergence(f);
        VectorField2 d = divergence(B);
        d -= f;
        worstDiv = std::max(worstDiv, supNorm(d) / supNorm(f));
        worstTr = std::max(worstTr, B.traceDefect());
    }
    const double secs = elapsed(t0);
    report(1, worstDiv <= 1e-11 && worstTr <= 1e-12 && secs <= 10.0,
           "anti-divergence contract: div residual " + fmt(worstDiv) + ", trace " + fmt(worstTr) +
               ", " + fmt(secs) + " s");
}

void criterion2()
{
    const auto [f1, f2] = standardFamilies();
    double worst = 0.0, eps = 1e300;
    for (const auto& fam : {f1, f2}) {
        const auto gc = gammaCoefficients(fam);
        eps = std::min(eps, gc.epsilon);
        std::mt19937_64 rng(fam.label + 7);
        auto u = [&rng]() { return (static_cast<double>(rng() >> 11) * 0x1p-53) * 2.0 - 1.0; };
        for (int it = 0; it < 1000; ++it) {
            Sym2 dev{u(), u(), u()};
            const double scale = 0.98 * gc.epsilon * (static_cast<double>(rng() >> 11) * 0x1p-53) / dev.opNorm();
            const Sym2 r = Sym2::identity() + dev * scale;
            worst = std::max(worst, (gc.reconstruct(r) - r).maxAbsEntry());
        }
    }
    report(2, worst <= 1e-12 && eps > 0.0,
           "geometric lemma reconstruction: residual " + fmt(worst) + ", eps_gamma " + fmt(eps));
}

void criterion3()
{
    const Grid g(128);
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (int it = 0; it < 50; ++it) {
        VectorField2 u(g), v(g);
        u.x1 = randomBand(g, rng, 12);
        u.x2 = randomBand(g, rng, 12);
        v.x1 = randomBand(g, rng, 12);
        v.x2 = randomBand(g, rng, 12);
        VectorField2 d = nlTwoTerm(u, v);
        d -= nlPerpForm(u, v);
        worst = std::max(worst, supNorm(d) / (supNorm(u) * cnNorm(v, 1)));
    }
    report(3, worst <= 1e-10, "nonlinearity identity residual " + fmt(worst));
}

void criterion4()
{
    // residual + Richardson at toy L = 1.2, zero noise, dt = 1e-3
    const ParameterSet p = toySet(1.2);
    const Grid grid(256);
    const NoiseProfile prof = m0Profile(p.L, p.T);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    const SequenceValues s0 = sequences(p, 0, true);
    ExponentialProcess noise(path, s0.ell, {p.L, p.delta});
    BaseLevel base(grid, p, prof, &noise);

    auto residual = [&](double tt, double dtc) {
        VectorField2 E = base.y(tt + dtc);
        E -= base.y(tt - dtc);
        E *= 1.0 / (2.0 * dtc);
        VectorField2 half = base.y(tt);
        half *= 0.5;
        E += half;
        VectorField2 nl = nlTwoTerm(fractionalLaplacian(base.y(tt), 2.0 - p.gamma2), base.y(tt));
        nl *= noise.upsilon(tt);
        E += nl;
        E += gradient(base.p(tt));
        E += fractionalLaplacian(base.y(tt), p.gamma1);
        const VectorField2 divR = divergence(base.R(tt));
        E -= divR;
        return supNorm(E) / supNorm(divR);
    };
    double r = 0.0, rh = 0.0;
    for (double t : {1.05, 1.1, 1.15}) {
        r = std::max(r, residual(t, 1e-3));
        rh = std::max(rh, residual(t, 5e-4));
    }
    const double ratio = r / rh;

    // shear gradient-form identity
    const double t = 1.1;
    VectorField2 nl = nlTwoTerm(fractionalLaplacian(base.y(t), 2.0 - p.gamma2), base.y(t));
    nl *= noise.upsilon(t);
    nl += gradient(base.p(t));
    const double gradForm = supNorm(nl) / supNorm(gradient(base.p(t)));

    // Hypothesis 5.1 ratios with certified constants at base scale
    const PaperConstants c = deriveConstants(1.0, 1.0);
    const ParameterSet certified = searchFeasible(1.0, 1.0, 2.0, 1.0, 0.5, c);
    const ParameterSet reduced = reduceToGrid(certified, 5, c);
    const auto hyp = hypothesisBaseFaithful(reduced, 5, c, 64, reduced.L);
    bool hypOk = true;
    double hypWorst = 0.0;
    for (const auto& e : hyp.entries) {
        hypOk = hypOk && e.measured <= e.threshold;
        if (e.threshold > 0.0) hypWorst = std::max(hypWorst, e.measured / e.threshold);
    }

    report(4,
           r <= 1e-6 && ratio >= 3.5 && ratio <= 4.5 && gradForm <= 1e-11 && hypOk,
           "base step: residual " + fmt(r) + " (ratio " + fmt(ratio) + "), gradient form " +
               fmt(gradForm) + ", hypothesis ratio max " + fmt(hypWorst));
}

std::uint64_t pickSeedWithCap(const ParameterSet& p)
{
    for (std::uint64_t seed = 1; seed < 400; ++seed) {
        const WienerPath path = samplePath(seed, 1e-3, p.L + 1.0);
        if (stoppingTime(path, {p.L, p.delta}).fired == "cap") return seed;
    }
    return 1;
}

void criteria5to11()
{
    const auto t0 = std::chrono::steady_clock::now();
    const ParameterSet p = toySet(2.0);
    const PaperConstants c = deriveConstants(1.0, 1.0);
    const Grid grid(512);
    const std::uint64_t seed = pickSeedWithCap(p);
    const WienerPath path = samplePath(seed, 1e-3, p.L + 1.0);
    StepEvaluator step(grid, p, c, path);
    const auto times = step.defaultCheckTimes();
    const double dtc = step.dtCheckDefault();

    double suppW = 0.0, suppY = 0.0, suppR = 0.0, w350 = 0.0, imag = 0.0;
    for (double t : times) {
        const FrameChecks fc = step.frameChecks(t, dtc);
        suppW = std::max(suppW, fc.w_support_outside);
        suppY = std::max(suppY, fc.y1_support_outside);
        suppR = std::max(suppR, fc.r1_support_outside);
        w350 = std::max(w350, fc.w_sup / fc.w_bound_350a);
        imag = std::max(imag, fc.w_imag_defect);
    }
    const double secs = elapsed(t0);
    report(5, suppW <= 1e-13 && suppY <= 1e-13 && suppR <= 1e-13 && secs <= 600.0,
           "frequency supports (w " + fmt(suppW) + ", y " + fmt(suppY) + ", R " + fmt(suppR) +
               ") at N=512 in " + fmt(secs) + " s (seed " + std::to_string(seed) + ")");

    double defect = 0.0;
    int active = 0;
    const double t1 = step.seq1().t_q;
    for (int i = 0; i < 10000; ++i) {
        const double t = t1 + (step.T_L() - t1) * (i + 0.41) / 10000.0;
        defect = std::max(defect, step.cutoffs().partitionDefect(t));
        active = std::max(active, static_cast<int>(step.cutoffs().activeWindows(t).size()));
    }
    report(6, defect <= 1e-12 && active <= 2,
           "partition of unity: defect " + fmt(defect) + ", max active " + std::to_string(active));

    const OscillationReport osc = step.decomposeOscillation(times.back());
    report(7, osc.cancellation_ok,
           "oscillation cancellation: |O1_tf| " + fmt(osc.o1_tracefree_residual) + " vs 1e-8 * " +
               fmt(osc.o1_reference));

    // criterion 8 runs the zero-noise protocol (it also exercises R_Com2 = 0)
    {
        const WienerPath zp = zeroPath(1e-3, p.L + 1.0);
        StepEvaluator zstep(grid, p, c, zp);
        const auto ztimes = zstep.defaultCheckTimes();
        const double zt = ztimes.back();
        const FrameChecks a = zstep.frameChecks(zt, zstep.dtCheckDefault());
        const FrameChecks b = zstep.frameChecks(zt, zstep.dtCheckDefault() / 2.0);
        const double ratio = a.residual_rel / b.residual_rel;
        report(8,
               a.residual_rel <= 1e-6 && ratio >= 3.5 && ratio <= 4.5 && a.com2_sup_zero_noise <= 1e-13,
               "stress self-consistency: residual " + fmt(a.residual_rel) + " (ratio " + fmt(ratio) +
                   "), Com2 sup " + fmt(a.com2_sup_zero_noise));
    }

    report(11, w350 <= 1.0 && imag <= 1e-12,
           "perturbation magnitude: max ||w||/bound " + fmt(w350) + ", imag defect " + fmt(imag));
}

void criterion9()
{
    // 20 (c, L, delta) combinations against the closed form at dt = 1e-4
    const double dt = 1e-4;
    bool ok = true;
    double worstGap = 0.0;
    int count = 0;
    for (const double cc : {0.7, 1.2, 2.0, 3.5, 6.0}) {
        for (const double L : {1.5, 2.0, 4.0, 8.0}) {
            for (const double delta : {1.0 / 16.0}) {
                WienerPath lin = zeroPath(dt, L + dt);
                for (std::size_t i = 0; i < lin.values.size(); ++i)
                    lin.values[i] = cc * std::max(0.0, lin.tAt(i));
                const double expect = std::min(
                    {std::pow(L, 0.25) / cc, std::pow(std::sqrt(L) / cc, 1.0 / (0.5 + 2.0 * delta)), L});
                const auto res = stoppingTime(lin, {L, delta});
                const double gap = std::abs(res.T_L - expect);
                worstGap = std::max(worstGap, gap);
                ok = ok && gap <= dt * (1.0 + 1e-9);
                ++count;
            }
        }
    }

    bool positive = true, monotone = true;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        const WienerPath path = samplePath(seed, 1e-3, 3.0 + 1e-3);
        double prev = 0.0;
        for (const double L : {1.5, 2.0, 3.0}) {
            const auto res = stoppingTime(path, {L, 1.0 / 16.0});
            positive = positive && res.T_L > 0.0;
            monotone = monotone && res.T_L >= prev;
            prev = res.T_L;
        }
    }
    report(9, ok && positive && monotone && count == 20,
           "stopping time: " + std::to_string(count) + " closed-form combos within one step (worst gap " +
               fmt(worstGap) + "), 1000-seed positivity and monotonicity");
}

void criterion10()
{
    const auto t0 = std::chrono::steady_clock::now();
    const PaperConstants c = deriveConstants(1.0, 1.0);
    bool ok = true;
    std::string note;
    try {
        const ParameterSet p = searchFeasible(1.0, 1.0, 2.0, 1.0, 0.5, c);
        const auto rep = certify(p, c);
        const auto rep2 = certify(p, c, 2);
        ok = rep.overall && rep2.overall;
        note = "L=" + fmt(p.L) + " b=" + std::to_string(p.b) + " beta=" + std::to_string(p.beta.num) +
               "/" + std::to_string(p.beta.den) + " a=" + std::to_string(p.a);
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }

    // the deliberately violated input is rejected naming est 315b
    bool named = false;
    ParameterSet bad = toySet(16.0);
    bad.paperFaithful = true;
    bad.b = 2821;
    bad.a = 2985;
    bad.beta = Rational{6, 10};
    const auto repBad = certify(bad, c);
    for (const auto& e : repBad.entries)
        if (e.id == "est315b.hi" && !e.green) named = true;
    const double secs = elapsed(t0);
    report(10, ok && named && !repBad.overall && secs <= 30.0,
           "certifier: green tuple (" + note + "), beta=0.6 rejected naming est 315b, " + fmt(secs) + " s");
}

void criterion12()
{
    const ParameterSet p = toySet(2.0);
    const Grid grid(256);
    const PaperConstants c = deriveConstants(1.0, 1.0);
    const std::uint64_t seed = pickSeedWithCap(p);
    const WienerPath path = samplePath(seed, 1e-3, p.L + 1.0);

    // bitwise-identical manifests across 1 vs 8 worker threads
    auto manifestString = [&]() {
        StepEvaluator step(grid, p, c, path);
        const auto times = step.defaultCheckTimes();
        const FrameChecks fc = step.frameChecks(times.back(), step.dtCheckDefault());
        const StressBreakdown S = step.assembleStresses(times.back());
        json j;
        j["frame"] = toJson(fc);
        j["stress"] = toJson(S);
        return j.dump();
    };
    set_worker_threads(1);
    const std::string m1 = manifestString();
    set_worker_threads(8);
    const std::string m8 = manifestString();
    set_worker_threads(1);
    const bool threadsOk = m1 == m8;

    // adaptedness: modify the path strictly after t
    StepEvaluator step(grid, p, c, path);
    const auto times = step.defaultCheckTimes();
    const double t = times.back();
    const WienerPath mod = path.modifiedAfter(t, 0.2);
    StepEvaluator stepMod(grid, p, c, mod);
    const VectorField2 ya = step.y1(t);
    const VectorField2 yb = stepMod.y1(t);
    const bool adapted =
        std::memcmp(ya.x1.data().data(), yb.x1.data().data(), ya.x1.size() * sizeof(cdouble)) == 0 &&
        std::memcmp(ya.x2.data().data(), yb.x2.data().data(), ya.x2.size() * sizeof(cdouble)) == 0;

    // determinism of the level on [t_1, 0] across seeds
    const WienerPath other = samplePath(seed + 13, 1e-3, p.L + 1.0);
    StepEvaluator stepOther(grid, p, c, other);
    const double tau = step.cutoffs().tau;
    const double tNeg = tau * std::lround(-0.5 / tau) + 0.5 * tau;
    const VectorField2 na = step.y1(tNeg);
    const VectorField2 nb = stepOther.y1(tNeg);
    const bool detNeg =
        std::memcmp(na.x1.data().data(), nb.x1.data().data(), na.x1.size() * sizeof(cdouble)) == 0 &&
        std::memcmp(na.x2.data().data(), nb.x2.data().data(), na.x2.size() * sizeof(cdouble)) == 0;

    report(12, threadsOk && adapted && detNeg,
           std::string("determinism: threads ") + (threadsOk ? "bitwise" : "DIFFER") + ", adaptedness " +
               (adapted ? "bitwise" : "DIFFER") + ", seed-independence on [t_1, 0] " +
               (detNeg ? "bitwise" : "DIFFER"));
}

} // namespace

int main()
{
    std::cout << "acceptance suite\n";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criteria5to11(); // criteria 5, 6, 7, 8, 11 share the toy step
    criterion9();
    criterion10();
    criterion12();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS\n" : "FAILURES: " + std::to_string(failures) + "\n");
    return failures == 0 ? 0 : 1;
}
