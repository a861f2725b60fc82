#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqg/errors.hpp"
#include "sqg/iteration.hpp"
#include "sqg/norms.hpp"
#include "sqg/util.hpp"

#include <cmath>
#include <cstring>
#include <numbers>

using namespace sqg;

namespace {

ParameterSet toySet(double L = 2.0)
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

bool bitwiseEqual(const ScalarField& a, const ScalarField& b)
{
    return a.size() == b.size() &&
           std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(cdouble)) == 0;
}

bool bitwiseEqual(const VectorField2& a, const VectorField2& b)
{
    return bitwiseEqual(a.x1, b.x1) && bitwiseEqual(a.x2, b.x2);
}

} // namespace

TEST_CASE("cutoff partition of unity")
{
    SequenceValues seq{};
    seq.tau = 0.0123;
    const auto cs = buildCutoffs(seq, -1.8, 2.0, 1e-3);
    double worstDefect = 0.0;
    int worstActive = 0;
    for (int i = 0; i < 10000; ++i) {
        const double t = -1.8 + 3.8 * (i + 0.3) / 10000.0;
        worstDefect = std::max(worstDefect, cs.partitionDefect(t));
        worstActive = std::max(worstActive, static_cast<int>(cs.activeWindows(t).size()));
    }
    CHECK(worstDefect < 1e-12);
    CHECK(worstActive <= 2);

    // plateau: at t = tau j exactly, chi_j = 1, neighbors 0
    const long j = 10;
    CHECK(cs.chi(j, seq.tau * j) == 1.0);
    CHECK(cs.chi(j + 1, seq.tau * j) == 0.0);
    CHECK(cs.chi(j - 1, seq.tau * j) == 0.0);

    SequenceValues coarse{};
    coarse.tau = 3e-3;
    CHECK_THROWS_AS(buildCutoffs(coarse, -1.8, 2.0, 1e-3), TimeGridTooCoarse);
}

TEST_CASE("base level solves est 320 exactly up to time discretization")
{
    const ParameterSet p = toySet(1.2);
    const Grid grid(128);
    const NoiseProfile prof = m0Profile(p.L, p.T);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    const SequenceValues s0 = sequences(p, 0, true);
    ExponentialProcess noise(path, s0.ell, {p.L, p.delta});
    BaseLevel base(grid, p, prof, &noise);

    // the advection (Lambda^{2-g2} y0 . grad) y0 vanishes for the shear
    const double t = 1.1; // pure-growth zone (T ^ L = 1)
    const VectorField2 y0 = base.y(t);
    const VectorField2 u = fractionalLaplacian(y0, 2.0 - p.gamma2);
    const auto u1 = u.x1.physical();
    const auto d1 = derivative(y0.x1, 0).physical();
    double adv = 0.0;
    for (std::size_t i = 0; i < u1.size(); ++i) adv = std::max(adv, std::abs(u1[i] * d1[i]));
    CHECK(adv / supNorm(y0) < 1e-12);

    // est 477: Upsilon (grad y0)^T Lambda^{2-g2} y0 + grad p0 = 0
    VectorField2 nl = nlTwoTerm(u, y0);
    nl *= noise.upsilon(t);
    nl += gradient(base.p(t));
    CHECK(supNorm(nl) / supNorm(gradient(base.p(t))) < 1e-11);

    // centered-difference residual of est 320, second order in dt
    auto residual = [&](double tt, double dtc) {
        VectorField2 E = base.y(tt + dtc);
        E -= base.y(tt - dtc);
        E *= 1.0 / (2.0 * dtc);
        VectorField2 half = base.y(tt);
        half *= 0.5;
        E += half;
        VectorField2 nl2 = nlTwoTerm(fractionalLaplacian(base.y(tt), 2.0 - p.gamma2), base.y(tt));
        nl2 *= noise.upsilon(tt);
        E += nl2;
        E += gradient(base.p(tt));
        E += fractionalLaplacian(base.y(tt), p.gamma1);
        const VectorField2 divR = divergence(base.R(tt));
        E -= divR;
        return supNorm(E) / supNorm(divR);
    };
    const double r1 = residual(1.1, 1e-3);
    const double r2 = residual(1.1, 5e-4);
    CHECK(r1 < 1e-6);
    CHECK(r1 / r2 > 3.5);
    CHECK(r1 / r2 < 4.5);

    // in the flat zone (t <= 0) the residual degenerates to roundoff
    CHECK(residual(-1.0, 1e-3) < 1e-12);

    // Hypothesis 5.1 supports at q = 0 are exact two-mode fields
    CHECK(y0.maxCoeffOutsideBall(2.0 * base.lambda0()) == 0.0);
    CHECK(base.R(t).maxCoeffOutsideBall(4.0 * base.lambda0()) == 0.0);
}

TEST_CASE("flow maps: shear closed form and transport residual")
{
    const ParameterSet p = toySet(2.0);
    const Grid grid(256);
    const PaperConstants c = deriveConstants(p.gamma1, p.gamma2);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    StepEvaluator step(grid, p, c, path);

    const double tau = step.cutoffs().tau;
    const long j = std::lround(-0.5 / tau);
    const double t = tau * j + 0.4 * tau;
    const FlowMap fm = step.solveFlowMap(j, t);

    // x2 is conserved along shear characteristics (bitwise: velocity2 = 0)
    CHECK(supNorm(fm.displacement.x2) == 0.0);

    // closed form: Phi1 = x1 - (int_anchor^t c(s) ds) sin x2; Simpson on the
    // mode coefficient recovers the displacement amplitude
    const int M = 200;
    double integral = 0.0;
    for (int i = 0; i <= M; ++i) {
        const double s = fm.anchor + (t - fm.anchor) * i / M;
        const auto v = step.flowVelocity(s);
        // extract the physical amplitude of the (0, +-1) pair at x2 = pi/2
        const double amp = v.evaluate1(0.0, std::numbers::pi / 2.0);
        const double w = (i == 0 || i == M) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        integral += w * amp;
    }
    integral *= (t - fm.anchor) / (3.0 * M);
    const auto disp = fm.displacement.x1.physical();
    const int n = grid.n;
    double worst = 0.0;
    for (int i2 = 0; i2 < n; ++i2) {
        const double x2 = i2 * grid.dx();
        const double expect = -integral * std::sin(x2);
        worst = std::max(worst, std::abs(disp[static_cast<std::size_t>(0) * n + i2] - expect));
    }
    CHECK(worst < 1e-8 * std::max(1.0, std::abs(integral)));

    // est 199a with the measured velocity gradient, in logs
    CHECK(std::log1p(fm.gradDefect) <= fm.gradBoundLog * (1.0 + 1e-6) + 1e-12);

    // transported stress: anchor identity and material-derivative residual
    const WindowData win = step.buildWindow(j, tau * j);
    const MollifiedState ms = step.mollify(tau * j);
    SymTensorField2 d = win.R_qj;
    d -= ms.R_l;
    CHECK(supNorm(d) / supNorm(ms.R_l) < 1e-11);

    const double dtc = 1e-5;
    const WindowData wp = step.buildWindow(j, t + dtc);
    const WindowData wm = step.buildWindow(j, t - dtc);
    const WindowData w0 = step.buildWindow(j, t);
    const auto vel = step.flowVelocity(t);
    // D_t R_qj = dt R_qj + u . grad R_qj
    ScalarField dt12 = wp.R_qj.t12;
    dt12 -= wm.R_qj.t12;
    dt12 *= 1.0 / (2.0 * dtc);
    const auto g1 = derivative(w0.R_qj.t12, 0).physical();
    const auto g2 = derivative(w0.R_qj.t12, 1).physical();
    auto dphys = dt12.physical();
    const double dx = grid.dx();
    double res = 0.0;
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
            const std::size_t idx = static_cast<std::size_t>(i1) * n + i2;
            const double x1 = i1 * dx, x2 = i2 * dx;
            const double mat = dphys[idx] + vel.evaluate1(x1, x2) * g1[idx] + vel.evaluate2(x1, x2) * g2[idx];
            res = std::max(res, std::abs(mat));
        }
    CHECK(res / std::max(1e-300, cnNorm(w0.R_qj.t12, 1)) < 1e-6);
}

TEST_CASE("perturbation: realness, support, est 350a, amplitude bounds")
{
    const ParameterSet p = toySet(2.0);
    const Grid grid(256);
    const PaperConstants c = deriveConstants(p.gamma1, p.gamma2);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    StepEvaluator step(grid, p, c, path);
    const auto times = step.defaultCheckTimes();
    REQUIRE(!times.empty());
    const double t = times.back();

    std::vector<WindowData> wins;
    double imag = 0.0;
    const VectorField2 w = step.perturbation(t, wins, &imag);
    CHECK(imag < 1e-12);
    const double lam1 = step.seq1().lambda;
    CHECK(w.x1.maxCoeffOutsideAnnulus(lam1 / 2.0, 2.0 * lam1) == 0.0);
    CHECK(w.x2.maxCoeffOutsideAnnulus(lam1 / 2.0, 2.0 * lam1) == 0.0);
    CHECK(w.divergenceDefect() < 1e-12);

    // amplitude sup bounds (est 360c shape)
    for (const auto& win : wins) {
        const double m0j = step.profile().M0(win.flow.anchor);
        for (const auto& ap : win.amplitudes)
            CHECK(ap.supA <= c.gammaSup.hiD() * std::sqrt(m0j / p.gamma2) *
                                 std::sqrt(step.seq1().delta_q) * (1.0 + 1e-12));
    }

    // est 350a with the artifact constants
    const double bound = 2.0 * c.gammaSup.hiD() * c.C1.hiD() * std::exp(0.5 * std::pow(p.L, 0.25)) *
                         step.profile().M0sqrt(t) * std::sqrt(step.seq1().delta_q) / std::sqrt(p.gamma2);
    CHECK(supNorm(w) <= bound);
}

TEST_CASE("micro step: zero-noise frame checks at N=256")
{
    const ParameterSet p = toySet(2.0);
    const Grid grid(256);
    const PaperConstants c = deriveConstants(p.gamma1, p.gamma2);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    StepEvaluator step(grid, p, c, path);
    const auto times = step.defaultCheckTimes();
    const double t = times.back();
    const double dtc = step.dtCheckDefault();

    // mollifier first-order bound and the single-shear commutator vanishing
    {
        const MollifiedState ms = step.mollify(t);
        VectorField2 d = ms.y_l;
        d -= step.base().y(t);
        const double ell = sequences(p, 0).ell;
        const double spaceScale = cnNorm(step.base().y(t), 1) - supNorm(step.base().y(t));
        VectorField2 dy = step.base().y(t + 1e-5);
        dy -= step.base().y(t - 1e-5);
        dy *= 1.0 / 2e-5;
        CHECK(supNorm(d) <= 2.0 * ell * (spaceScale + 2.0 * supNorm(dy)));
        // shear mode: the est 338 density is a mollified gradient, so B kills it
        CHECK(supNorm(ms.R_com1) <= 1e-11 * supNorm(ms.R_l));
    }

    const FrameChecks fc = step.frameChecks(t, dtc);
    CHECK(fc.w_support_outside <= 1e-13);
    CHECK(fc.y1_support_outside <= 1e-13);
    CHECK(fc.r1_support_outside <= 1e-13);
    CHECK(fc.residual_rel < 1e-6);
    CHECK(fc.com2_sup_zero_noise < 1e-13); // B = 0 kills all three R_Com2 parts
    CHECK(fc.w_sup <= fc.w_bound_350a);
    CHECK(fc.y_dist_sup <= fc.y_dist_bound_327);
    CHECK(fc.mollified_eq_residual < 1e-6);

    // Richardson: halving dt_check divides the residual by ~4 (the moving-node
    // field mollifier commutes with time differencing exactly)
    const FrameChecks fcHalf = step.frameChecks(t, dtc / 2.0);
    const double ratio = fc.residual_rel / fcHalf.residual_rel;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);

    // oscillation cancellation (est 459)
    const OscillationReport osc = step.decomposeOscillation(t);
    CHECK(osc.cancellation_ok);
    CHECK(osc.o1_tracefree_residual <= 1e-8 * osc.o1_reference);

    // the assembled stress stays symmetric (structural) and trace-free
    const StressBreakdown S = step.assembleStresses(t);
    CHECK(S.norms.at("total_trace_defect") <= 1e-12);
}

TEST_CASE("deep oscillation dual-route check")
{
    const auto rep = deepOscillationCheck(64, 11);
    CHECK(rep.ro_rel_diff <= 1e-6);
    CHECK(rep.high_rel_diff <= 1e-6);
    CHECK(rep.low_rel_diff <= 1e-6);
    CHECK(rep.ok);
    CHECK_THROWS_AS(deepOscillationCheck(128, 11), DeepModeTooLarge);
}

TEST_CASE("adaptedness and determinism")
{
    const ParameterSet p = toySet(2.0);
    const Grid grid(256);
    const PaperConstants c = deriveConstants(p.gamma1, p.gamma2);

    // seed-independence on [t_1, 0]
    const WienerPath pa = samplePath(3, 1e-3, p.L + 1.0);
    const WienerPath pb = samplePath(77, 1e-3, p.L + 1.0);
    StepEvaluator sa(grid, p, c, pa);
    StepEvaluator sb(grid, p, c, pb);
    const double tNeg = sa.cutoffs().tau * std::lround(-0.5 / sa.cutoffs().tau) + 0.5 * sa.cutoffs().tau;
    CHECK(bitwiseEqual(sa.y1(tNeg), sb.y1(tNeg)));

    // modifying the path strictly after t leaves fields at t unchanged
    const auto timesA = sa.defaultCheckTimes();
    const double tPos = timesA.back();
    if (sa.T_L() > tPos + 0.05) {
        const WienerPath mod = pa.modifiedAfter(tPos, 0.13);
        StepEvaluator sm(grid, p, c, mod);
        CHECK(bitwiseEqual(sa.y1(tPos), sm.y1(tPos)));
    }

    // worker threads must not change results bitwise
    set_worker_threads(1);
    const VectorField2 w1 = sa.y1(tNeg);
    set_worker_threads(8);
    const VectorField2 w8 = sa.y1(tNeg);
    set_worker_threads(1);
    CHECK(bitwiseEqual(w1, w8));
}

TEST_CASE("grid bound and 5N guards")
{
    ParameterSet p = toySet(2.0);
    const PaperConstants c = deriveConstants(p.gamma1, p.gamma2);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    CHECK_THROWS_AS(StepEvaluator(Grid(128), p, c, path), GridBound); // 4 lambda_1 = 100 >= 64
    p.a = 4;
    CHECK_THROWS_AS(StepEvaluator(Grid(256), p, c, path), ConfigError);
}
