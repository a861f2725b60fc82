#include "sqg/errors.hpp"
#include "sqg/iteration.hpp"
#include "sqg/norms.hpp"
#include "sqg/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqg {

namespace {

// acc += x + conj-mirror(x): the real field 2 Re(x) at coefficient level
void addTwoRe(ScalarField& acc, const ScalarField& x)
{
    const int n = acc.grid().n;
    for (int k1 = -n / 2 + 1; k1 <= n / 2 - 1; ++k1)
        for (int k2 = -n / 2 + 1; k2 <= n / 2 - 1; ++k2)
            acc.set_coeff(k1, k2, acc.coeff(k1, k2) + x.coeff(k1, k2) + std::conj(x.coeff(-k1, -k2)));
}

void addTwoRe(VectorField2& acc, const VectorField2& x)
{
    addTwoRe(acc.x1, x.x1);
    addTwoRe(acc.x2, x.x2);
}

// band bump + Leray at direction k (the P_{q+1,k} symbol) on a complex field
VectorField2 applyBandLeray(const VectorField2& v, Vec2 k, double lambda)
{
    const Grid& g = v.grid();
    VectorField2 out(g);
    const int n = g.n;
    for (int i = 0; i < n; ++i) {
        const int q1 = g.freq(i);
        for (int jj = 0; jj < n; ++jj) {
            const int q2 = g.freq(jj);
            const std::size_t idx = static_cast<std::size_t>(i) * n + jj;
            const double r = std::hypot(q1 / lambda - k.x, q2 / lambda - k.y);
            const double kb = bump::k_approx1(r);
            if (kb == 0.0) continue;
            cdouble o1 = v.x1.hat(idx), o2 = v.x2.hat(idx);
            const double r2 = static_cast<double>(q1) * q1 + static_cast<double>(q2) * q2;
            if (r2 > 0.0) {
                const cdouble kd = (static_cast<double>(q1) * o1 + static_cast<double>(q2) * o2) / r2;
                o1 -= static_cast<double>(q1) * kd;
                o2 -= static_cast<double>(q2) * kd;
            }
            out.x1.hat(idx) = kb * o1;
            out.x2.hat(idx) = kb * o2;
        }
    }
    out.x1.zeroNyquist();
    out.x2.zeroNyquist();
    return out;
}

ScalarField scaleComplex(const ScalarField& f, cdouble s)
{
    ScalarField out = f;
    out *= s;
    return out;
}

// u . grad F for real u (physical arrays) and complex F
ScalarField advectScalar(std::span<const double> u1, std::span<const double> u2, const ScalarField& f)
{
    auto d1 = derivative(f, 0).physicalComplex();
    const auto d2 = derivative(f, 1).physicalComplex();
    for (std::size_t i = 0; i < d1.size(); ++i) d1[i] = u1[i] * d1[i] + u2[i] * d2[i];
    return ScalarField::fromPhysicalComplex(f.grid(), std::move(d1));
}

VectorField2 advect(std::span<const double> u1, std::span<const double> u2, const VectorField2& f)
{
    VectorField2 out(f.grid());
    out.x1 = advectScalar(u1, u2, f.x1);
    out.x2 = advectScalar(u1, u2, f.x2);
    return out;
}

// (Lambda^{2-g2} A . grad) B - (grad A)^T Lambda^{2-g2} B for complex fields
VectorField2 bilinearT3minusT4(const VectorField2& A, const VectorField2& B, double g2)
{
    const Grid& g = A.grid();
    const VectorField2 LA = fractionalLaplacian(A, 2.0 - g2);
    const VectorField2 LB = fractionalLaplacian(B, 2.0 - g2);
    const auto la1 = LA.x1.physicalComplex();
    const auto la2 = LA.x2.physicalComplex();
    const auto lb1 = LB.x1.physicalComplex();
    const auto lb2 = LB.x2.physicalComplex();
    const auto d1b1 = derivative(B.x1, 0).physicalComplex();
    const auto d2b1 = derivative(B.x1, 1).physicalComplex();
    const auto d1b2 = derivative(B.x2, 0).physicalComplex();
    const auto d2b2 = derivative(B.x2, 1).physicalComplex();
    const auto d1a1 = derivative(A.x1, 0).physicalComplex();
    const auto d2a1 = derivative(A.x1, 1).physicalComplex();
    const auto d1a2 = derivative(A.x2, 0).physicalComplex();
    const auto d2a2 = derivative(A.x2, 1).physicalComplex();
    std::vector<cdouble> c1(g.size()), c2(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        c1[i] = la1[i] * d1b1[i] + la2[i] * d2b1[i] - (d1a1[i] * lb1[i] + d1a2[i] * lb2[i]);
        c2[i] = la1[i] * d1b2[i] + la2[i] * d2b2[i] - (d2a1[i] * lb1[i] + d2a2[i] * lb2[i]);
    }
    VectorField2 out(g);
    out.x1 = ScalarField::fromPhysicalComplex(g, std::move(c1));
    out.x2 = ScalarField::fromPhysicalComplex(g, std::move(c2));
    return out;
}

// (grad v)^T u for real fields
VectorField2 gradTransposeDot(const VectorField2& v, const VectorField2& u)
{
    const auto u1 = u.x1.physical();
    const auto u2 = u.x2.physical();
    const auto d1v1 = derivative(v.x1, 0).physical();
    const auto d2v1 = derivative(v.x1, 1).physical();
    const auto d1v2 = derivative(v.x2, 0).physical();
    const auto d2v2 = derivative(v.x2, 1).physical();
    std::vector<double> c1(u1.size()), c2(u1.size());
    for (std::size_t i = 0; i < u1.size(); ++i) {
        c1[i] = d1v1[i] * u1[i] + d1v2[i] * u2[i];
        c2[i] = d2v1[i] * u1[i] + d2v2[i] * u2[i];
    }
    VectorField2 out(v.grid());
    out.x1 = ScalarField::fromPhysical(v.grid(), c1);
    out.x2 = ScalarField::fromPhysical(v.grid(), c2);
    return out;
}

// u_perp * s for real u and scalar s (the perp-form densities)
VectorField2 perpTimes(const VectorField2& u, const ScalarField& s)
{
    const auto u1 = u.x1.physical();
    const auto u2 = u.x2.physical();
    const auto sp = s.physical();
    std::vector<double> c1(u1.size()), c2(u1.size());
    for (std::size_t i = 0; i < u1.size(); ++i) {
        c1[i] = -u2[i] * sp[i];
        c2[i] = u1[i] * sp[i];
    }
    VectorField2 out(u.grid());
    out.x1 = ScalarField::fromPhysical(u.grid(), c1);
    out.x2 = ScalarField::fromPhysical(u.grid(), c2);
    return out;
}

ScalarField dotProduct(const VectorField2& a, const VectorField2& b)
{
    const auto a1 = a.x1.physical();
    const auto a2 = a.x2.physical();
    const auto b1 = b.x1.physical();
    const auto b2 = b.x2.physical();
    std::vector<double> c(a1.size());
    for (std::size_t i = 0; i < a1.size(); ++i) c[i] = a1[i] * b1[i] + a2[i] * b2[i];
    return ScalarField::fromPhysical(a.grid(), c);
}

VectorField2 zeroMeanLeray(VectorField2 v)
{
    v.x1.zeroMean();
    v.x2.zeroMean();
    return leray(v);
}

} // namespace

StressBreakdown StepEvaluator::assembleStresses(double t) const
{
    StressBreakdown S;
    const double lambda1 = seq1_.lambda;
    const double g2 = params_.gamma2;
    const MollifiedState moll = mollify(t);
    std::vector<WindowData> windows;
    const VectorField2 w = perturbation(t, windows);

    const double ups = noise_->upsilon(t);
    const double upsl = moll.upsilon_l;
    const double upslDt = moll.upsilon_l_dt;

    const VectorField2 Lyl = fractionalLaplacian(moll.y_l, 2.0 - g2);
    const VectorField2 Lw = fractionalLaplacian(w, 2.0 - g2);
    std::vector<double> u1(grid_.size()), u2(grid_.size());
    {
        const auto l1 = Lyl.x1.physical();
        const auto l2 = Lyl.x2.physical();
        for (std::size_t i = 0; i < grid_.size(); ++i) {
            u1[i] = upsl * l1[i];
            u2[i] = upsl * l2[i];
        }
    }

    // --- transport error, est 366: commutator + analytic time factors
    VectorField2 densT(grid_);
    for (const auto& win : windows) {
        for (int p = 0; p < 3; ++p) {
            const int d = 2 * p;
            const Vec2 k = win.family->directions[d];
            const ScalarField s = scalarPacket(win, d, lambda1);
            VectorField2 basePk(grid_);
            const Vec2 kp = k.perp();
            basePk.x1 = scaleComplex(s, cdouble(0.0, kp.x));
            basePk.x2 = scaleComplex(s, cdouble(0.0, kp.y));
            const VectorField2 Pk = applyBandLeray(basePk, k, lambda1);
            // [u.grad, P_{q+1,k}] (chi base) = chi (u.grad Pk - P_k(u.grad base))
            VectorField2 term = advect(u1, u2, Pk);
            term -= applyBandLeray(advect(u1, u2, basePk), k, lambda1);
            term *= win.chi;
            // P_k((dchi - chi Upsilon_l' / (2 Upsilon_l)) base): est 356 time factors
            VectorField2 tf = basePk;
            tf *= win.chiDt - 0.5 * win.chi * upslDt / upsl;
            term += applyBandLeray(tf, k, lambda1);
            addTwoRe(densT, term);
        }
    }
    S.R_T = antiDivergence(annulusProjector(densT, lambda1));

    // --- Nash error, est 370
    {
        VectorField2 n1 = gradTransposeDot(Lyl, w);
        n1 *= upsl;
        S.N1 = antiDivergence(annulusProjector(n1, lambda1));
        VectorField2 n2 = perpTimes(Lw, perpDiv(moll.y_l));
        n2 *= upsl;
        S.N2 = antiDivergence(annulusProjector(n2, lambda1));
    }

    // --- linear error, est 377
    S.L1 = antiDivergence(fractionalLaplacian(w, params_.gamma1));
    {
        SymTensorField2 l2 = antiDivergence(w);
        l2 *= 0.5;
        S.L2 = l2;
    }

    // --- oscillation error, est 345b (the computation path; the appendix
    // decomposition is the verification layer in decomposeOscillation)
    {
        VectorField2 densO = divergence(moll.R_l);
        VectorField2 nl = nlTwoTerm(Lw, w);
        nl *= upsl;
        densO += nl;
        S.R_O = antiDivergence(densO);
    }

    S.R_com1 = moll.R_com1;

    // --- stochastic commutator, est 390/391
    {
        const double dU = ups - upsl;
        S.Com2_1 = moll.R_l;
        S.Com2_1 *= -dU / upsl;
        S.Com2_2 = S.R_O;
        S.Com2_2 *= dU / upsl;
        VectorField2 inner = perpTimes(Lw, perpDiv(moll.y_l));
        inner += perpTimes(Lyl, perpDiv(w));
        inner = annulusProjector(inner, lambda1);
        inner += perpTimes(Lyl, perpDiv(moll.y_l));
        S.Com2_3 = antiDivergence(inner);
        S.Com2_3 *= dU;
    }

    S.total = S.R_T;
    S.total += S.N1;
    S.total += S.N2;
    S.total += S.L1;
    S.total += S.L2;
    S.total += S.R_O;
    S.total += S.R_com1;
    S.total += S.Com2_1;
    S.total += S.Com2_2;
    S.total += S.Com2_3;

    const double lnA = std::log(static_cast<double>(params_.a));
    const double lam2log = static_cast<double>(params_.b) * static_cast<double>(params_.b) * lnA;
    const double target = profile_.M0(t) * std::exp((2.0 - g2 - 2.0 * params_.beta.value()) * lam2log);
    auto put = [&](const std::string& name, const SymTensorField2& f) {
        const double s = supNorm(f);
        S.norms[name] = s;
        S.ratios[name] = s / target;
    };
    put("R_T", S.R_T);
    put("N1", S.N1);
    put("N2", S.N2);
    put("L1", S.L1);
    put("L2", S.L2);
    put("R_O", S.R_O);
    put("R_Com1", S.R_com1);
    put("R_Com2_1", S.Com2_1);
    put("R_Com2_2", S.Com2_2);
    put("R_Com2_3", S.Com2_3);
    put("total", S.total);
    S.norms["total_trace_defect"] = S.total.traceDefect();
    return S;
}

OscillationReport StepEvaluator::decomposeOscillation(double t) const
{
    OscillationReport rep{};
    const double lambda1 = seq1_.lambda;
    const double g2 = params_.gamma2;
    const MollifiedState moll = mollify(t);
    std::vector<WindowData> windows;
    for (long j : cutoffs_.activeWindows(t)) windows.push_back(buildWindow(j, t));
    const double upsl = noise_->upsilonMollified(t);
    const double sqrtUpsl = std::sqrt(upsl);

    // packets with plain a-amplitudes: G = chi sqrt(Upsilon_l) P_{q+1,k}(bar-a b(lambda Phi))
    std::vector<std::vector<VectorField2>> G(windows.size());
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
        G[wi].reserve(6);
        for (int d = 0; d < 6; ++d) {
            VectorField2 pk = packet(windows[wi], d, lambda1);
            pk *= windows[wi].chi * sqrtUpsl;
            G[wi].push_back(std::move(pk));
        }
    }
    VectorField2 Wa(grid_);
    for (const auto& gw : G)
        for (const auto& pk : gw) Wa += pk;

    const VectorField2 Ffull = bilinearT3minusT4(Wa, Wa, g2);

    // O1 (est 263a) and the geometric cancellation (est 459)
    SymTensorField2 O1(grid_);
    SymTensorField2 chi2Rqj(grid_);
    for (const auto& win : windows) {
        const double c2 = win.chi * win.chi;
        SymTensorField2 rq = win.R_qj;
        rq *= c2;
        chi2Rqj += rq;
        for (int p = 0; p < 3; ++p) {
            const Vec2 kp = win.family->directions[2 * p].perp();
            ScalarField a2 = multiply(win.amplitudes[p].a, win.amplitudes[p].a);
            // both +-k carry the same amplitude: factor 2
            a2 *= c2 * 2.0 * g2 * std::pow(lambda1, 2.0 - g2) / 2.0;
            SymTensorField2 contrib(grid_);
            contrib.t11 = a2;
            contrib.t11 *= kp.x * kp.x - 1.0;
            contrib.t12 = a2;
            contrib.t12 *= kp.x * kp.y;
            contrib.t22 = a2;
            contrib.t22 *= kp.y * kp.y - 1.0;
            O1 += contrib;
        }
    }
    O1 += chi2Rqj;
    rep.o1_tracefree_residual = supNorm(O1.traceFreePart());
    rep.o1_reference = supNorm(chi2Rqj);
    rep.cancellation_ok = rep.o1_tracefree_residual <= 1e-8 * rep.o1_reference;

    // R_O,approx (est 259)
    SymTensorField2 approx(grid_);
    for (const auto& win : windows) {
        SymTensorField2 d = moll.R_l;
        d -= win.R_qj;
        d *= win.chi * win.chi;
        approx += d;
    }
    rep.approx_norm = supNorm(approx);

    // R_O,high (est 272/386): cross interactions = full bilinear minus the
    // k + k' = 0 diagonal, pushed through B and the annulus projector
    VectorField2 diag(grid_);
    for (std::size_t wi = 0; wi < windows.size(); ++wi) {
        for (int p = 0; p < 3; ++p) {
            VectorField2 d = bilinearT3minusT4(G[wi][2 * p], G[wi][2 * p + 1], g2);
            addTwoRe(diag, d);
        }
    }
    VectorField2 cross = Ffull;
    cross -= diag;
    const SymTensorField2 high = antiDivergence(annulusProjector(cross, lambda1));
    rep.high_norm = supNorm(high);

    // inferred low part (est 291)
    VectorField2 densO = divergence(moll.R_l);
    densO += Ffull;
    SymTensorField2 low = antiDivergence(densO);
    low -= approx;
    low -= high;
    rep.low_inferred_norm = supNorm(low);
    return rep;
}

FrameChecks StepEvaluator::frameChecks(double t, double dtCheck) const
{
    FrameChecks fc{};
    const double g2 = params_.gamma2;
    const double lambda1 = seq1_.lambda;
    const MollifiedState moll = mollify(t);
    std::vector<WindowData> windows;
    const VectorField2 w = perturbation(t, windows, &fc.w_imag_defect);
    VectorField2 y1t = moll.y_l;
    y1t += w;

    // equation side with centered time differences
    const VectorField2 yp = y1(t + dtCheck);
    const VectorField2 ym = y1(t - dtCheck);
    VectorField2 E = yp;
    E -= ym;
    E *= 1.0 / (2.0 * dtCheck);
    {
        VectorField2 half = y1t;
        half *= 0.5;
        E += half;
        VectorField2 nl = nlTwoTerm(fractionalLaplacian(y1t, 2.0 - g2), y1t);
        nl *= noise_->upsilon(t);
        E += nl;
        E += fractionalLaplacian(y1t, params_.gamma1);
    }

    const StressBreakdown S = assembleStresses(t);
    const VectorField2 divR = divergence(S.total);

    // mean-free, Leray-projected comparison (dot-space convention: gradients
    // and spatial constants belong to the pressure slot)
    VectorField2 diff = divR;
    diff -= E;
    const VectorField2 pDiff = zeroMeanLeray(diff);
    const VectorField2 pE = zeroMeanLeray(E);
    fc.residual_rel = supNorm(pDiff) / std::max(1e-300, supNorm(pE));

    // pressure cross-check: recovered potential vs p_l + Upsilon_l (w . Lambda^{2-g2} y_l)
    {
        const ScalarField pRec = gradientPotential(diff);
        ScalarField p1 = dotProduct(w, fractionalLaplacian(moll.y_l, 2.0 - g2));
        p1 *= moll.upsilon_l;
        p1 += moll.p_l;
        VectorField2 gdiff = gradient(pRec);
        gdiff -= gradient(p1);
        fc.pressure_crosscheck = supNorm(gdiff) / std::max(1e-300, supNorm(gradient(p1)));
    }

    // mollified equation (est 341), centered-difference time term
    {
        VectorField2 El = mollifiedY(t + dtCheck);
        El -= mollifiedY(t - dtCheck);
        El *= 1.0 / (2.0 * dtCheck);
        VectorField2 half = moll.y_l;
        half *= 0.5;
        El += half;
        VectorField2 nl = nlTwoTerm(fractionalLaplacian(moll.y_l, 2.0 - g2), moll.y_l);
        nl *= moll.upsilon_l;
        El += nl;
        El += fractionalLaplacian(moll.y_l, params_.gamma1);
        El -= divergence(moll.R_l);
        El -= divergence(moll.R_com1);
        const double scale = supNorm(zeroMeanLeray(divergence(moll.R_l))) + 1e-300;
        fc.mollified_eq_residual = supNorm(zeroMeanLeray(El)) / scale;
    }

    // frequency supports (Hypothesis 5.1 and est 163)
    const double wmax = std::max(w.x1.maxAbsCoeff(), w.x2.maxAbsCoeff()) + 1e-300;
    fc.w_support_outside =
        std::max(w.x1.maxCoeffOutsideAnnulus(lambda1 / 2.0, 2.0 * lambda1),
                 w.x2.maxCoeffOutsideAnnulus(lambda1 / 2.0, 2.0 * lambda1)) /
        wmax;
    const double ymax = std::max(y1t.x1.maxAbsCoeff(), y1t.x2.maxAbsCoeff()) + 1e-300;
    fc.y1_support_outside = y1t.maxCoeffOutsideBall(2.0 * lambda1) / ymax;
    const double rmax = std::max({S.total.t11.maxAbsCoeff(), S.total.t12.maxAbsCoeff(),
                                  S.total.t22.maxAbsCoeff()}) +
                        1e-300;
    fc.r1_support_outside = S.total.maxCoeffOutsideBall(4.0 * lambda1) / rmax;

    // est 350a with the artifact's constants
    fc.w_sup = supNorm(w);
    fc.w_bound_350a = 2.0 * constants_.gammaSup.hiD() * constants_.C1.hiD() *
                      std::exp(0.5 * std::pow(params_.L, 0.25)) * profile_.M0sqrt(t) *
                      std::sqrt(seq1_.delta_q) / std::sqrt(g2);

    // est 327 distance
    {
        VectorField2 d = y1t;
        d -= base_->y(t);
        fc.y_dist_sup = supNorm(d);
        fc.y_dist_bound_327 = constants_.C0.hiD() * std::exp(0.5 * std::pow(params_.L, 0.25)) *
                              profile_.M0sqrt(t) * std::sqrt(seq1_.delta_q);
    }

    fc.com2_sup_zero_noise =
        std::max({S.norms.at("R_Com2_1"), S.norms.at("R_Com2_2"), S.norms.at("R_Com2_3")});
    return fc;
}

} // namespace sqg
