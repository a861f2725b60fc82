#include "sqg/iteration.hpp"

#include "sqg/errors.hpp"
#include "sqg/norms.hpp"
#include "sqg/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sqg {

namespace {

constexpr double kPi = std::numbers::pi;

// symmetrize coefficients so the field is exactly real: c(k) <- (c(k)+conj(c(-k)))/2
void symmetrizeReal(ScalarField& f)
{
    const int n = f.grid().n;
    for (int k1 = -n / 2 + 1; k1 <= n / 2 - 1; ++k1) {
        for (int k2 = -n / 2 + 1; k2 <= n / 2 - 1; ++k2) {
            if (k1 < 0 || (k1 == 0 && k2 < 0)) continue;
            const cdouble a = f.coeff(k1, k2), b = f.coeff(-k1, -k2);
            const cdouble s = 0.5 * (a + std::conj(b));
            f.set_coeff(k1, k2, s);
            f.set_coeff(-k1, -k2, std::conj(s));
        }
    }
}

void symmetrizeReal(VectorField2& v)
{
    symmetrizeReal(v.x1);
    symmetrizeReal(v.x2);
}

double chiShape(double u)
{
    const double au = std::abs(u);
    if (au <= 0.25) return 1.0;
    if (au >= 0.75) return 0.0;
    return std::cos(0.5 * kPi * bump::smooth_step(2.0 * (au - 0.25)));
}

double chiShapeD(double u)
{
    const double au = std::abs(u);
    if (au <= 0.25 || au >= 0.75) return 0.0;
    const double w = 2.0 * (au - 0.25);
    const double d = -std::sin(0.5 * kPi * bump::smooth_step(w)) * 0.5 * kPi * bump::smooth_step_d(w) * 2.0;
    return u < 0.0 ? -d : d;
}

} // namespace

// ---------------------------------------------------------------------------
// BaseLevel

BaseLevel::BaseLevel(const Grid& grid, const ParameterSet& params, const NoiseProfile& profile,
                     const ExponentialProcess* noise)
    : grid_(grid), params_(params), profile_(profile), noise_(noise),
      lambda0_(static_cast<double>(params.a)), sinx2_(grid), cosx2_(grid), sin2x2_(grid)
{
    if (2.0 * lambda0_ >= grid.n / 2.0) throw GridBound("BaseLevel: 2 lambda_0 >= N/2");
    // sin x2 = -i/2 e^{i x2} + i/2 e^{-i x2}; cos x2 = 1/2 (e^{i x2} + e^{-i x2})
    sinx2_.set_coeff(0, 1, cdouble(0.0, -0.5));
    sinx2_.set_coeff(0, -1, cdouble(0.0, 0.5));
    cosx2_.set_coeff(0, 1, cdouble(0.5, 0.0));
    cosx2_.set_coeff(0, -1, cdouble(0.5, 0.0));
    // sin^2 x2 = 1/2 - (e^{2i x2} + e^{-2i x2})/4
    sin2x2_.set_coeff(0, 0, cdouble(0.5, 0.0));
    sin2x2_.set_coeff(0, 2, cdouble(-0.25, 0.0));
    sin2x2_.set_coeff(0, -2, cdouble(-0.25, 0.0));

    VectorField2 shear(grid);
    shear.x1 = sinx2_;
    bLambdaShear_ = antiDivergence(fractionalLaplacian(shear, params.gamma1));
}

VectorField2 BaseLevel::y(double t) const
{
    const double c = profile_.mL * profile_.M0sqrt(t) / (2.0 * kPi);
    VectorField2 out(grid_);
    out.x1 = sinx2_;
    out.x1 *= c;
    return out;
}

SymTensorField2 BaseLevel::R(double t) const
{
    // est 322: (m_L (d/dt + 1/2) M0^{1/2} / 2pi) [[0,-cos],[-cos,0]] + B(Lambda^{g1} y0)
    const double c1 = profile_.mL * (profile_.M0sqrtPrime(t) + 0.5 * profile_.M0sqrt(t)) / (2.0 * kPi);
    const double c0 = profile_.mL * profile_.M0sqrt(t) / (2.0 * kPi);
    SymTensorField2 out(grid_);
    out.t12 = cosx2_;
    out.t12 *= -c1;
    SymTensorField2 diss = bLambdaShear_;
    diss *= c0;
    out += diss;
    return out;
}

ScalarField BaseLevel::p(double t) const
{
    const double ups = noise_ ? noise_->upsilon(t) : 1.0;
    const double c = ups * profile_.mL * profile_.mL * profile_.M0(t) / (2.0 * std::pow(2.0 * kPi, 2));
    ScalarField out = sin2x2_;
    out *= c;
    return out;
}

double BaseLevel::yFreqRadius() const { return 2.0 * lambda0_; }
double BaseLevel::rFreqRadius() const { return 4.0 * lambda0_; }

// ---------------------------------------------------------------------------
// CutoffSystem

double CutoffSystem::chi(long j, double t) const { return chiShape(t / tau - static_cast<double>(j)); }
double CutoffSystem::chiDt(long j, double t) const
{
    return chiShapeD(t / tau - static_cast<double>(j)) / tau;
}

std::vector<long> CutoffSystem::activeWindows(double t) const
{
    std::vector<long> out;
    const double u = t / tau;
    const long lo = static_cast<long>(std::ceil(u - 0.75 + 1e-12));
    const long hi = static_cast<long>(std::floor(u + 0.75 - 1e-12));
    for (long j = std::max(lo, jmin); j <= std::min(hi, jmax); ++j)
        if (chi(j, t) != 0.0) out.push_back(j);
    return out;
}

double CutoffSystem::partitionDefect(double t) const
{
    double s = 0.0;
    for (long j : activeWindows(t)) {
        const double c = chi(j, t);
        s += c * c;
    }
    return std::abs(s - 1.0);
}

CutoffSystem buildCutoffs(const SequenceValues& seq, double t_start, double T_L, double dt_path)
{
    if (seq.tau < 4.0 * dt_path)
        throw TimeGridTooCoarse("buildCutoffs: tau_{q+1} smaller than 4 path steps");
    CutoffSystem cs;
    cs.tau = seq.tau;
    cs.jmin = static_cast<long>(std::floor(t_start / seq.tau));
    cs.jmax = static_cast<long>(std::ceil(T_L / seq.tau));
    return cs;
}

// ---------------------------------------------------------------------------
// StepEvaluator

StepEvaluator::StepEvaluator(const Grid& grid, const ParameterSet& params,
                             const PaperConstants& constants, const WienerPath& path)
    : grid_(grid), params_(params), constants_(constants),
      profile_(m0Profile(params.L, params.T)), seq0_(sequences(params, 0, true)),
      seq1_(sequences(params, 1, true))
{
    if (params_.a % 5 != 0)
        throw ConfigError("StepEvaluator: a must lie in 5N (lattice direction periodicity)");
    if (4.0 * seq1_.lambda >= grid.n / 2.0)
        throw GridBound("StepEvaluator: 4 lambda_{q+1} >= N/2");
    noise_ = std::make_unique<ExponentialProcess>(path, seq0_.ell,
                                                  StoppingTimeSpec{params.L, params.delta});
    base_ = std::make_unique<BaseLevel>(grid, params, profile_, noise_.get());
    cutoffs_ = buildCutoffs(seq0_, seq1_.t_q, noise_->T_L(), path.dt);
    auto fams = standardFamilies();
    fam1_ = fams.first;
    fam2_ = fams.second;
    geo1_ = gammaCoefficients(fam1_);
    geo2_ = gammaCoefficients(fam2_);

    kernel_.ell = seq0_.ell;
    const int nNodes = std::max<long>(8, std::lround(seq0_.ell / path.dt));
    double mass = 0.0;
    for (int i = 0; i < nNodes; ++i) {
        const double u = 1.0 + (i + 0.5) / nNodes; // kernel argument in (1, 2)
        const double w = bump::time_kernel(u);
        if (w <= 0.0) continue;
        kernel_.offsets.push_back(seq0_.ell * u);
        kernel_.weights.push_back(w);
        mass += w;
    }
    for (auto& w : kernel_.weights) w /= mass;
}

VectorField2 StepEvaluator::mollifiedY(double t) const
{
    if (t - 2.0 * kernel_.ell < seq0_.t_q - 1e-9)
        throw InsufficientHistory("mollify: kernel reaches before t_q");
    VectorField2 yacc(grid_);
    for (std::size_t i = 0; i < kernel_.offsets.size(); ++i) {
        VectorField2 yu = base_->y(t - kernel_.offsets[i]);
        yu *= kernel_.weights[i];
        yacc += yu;
    }
    return mollifySpaceSpectral(yacc, seq0_.ell);
}

SymTensorField2 StepEvaluator::mollifiedR(double t) const
{
    if (t - 2.0 * kernel_.ell < seq0_.t_q - 1e-9)
        throw InsufficientHistory("mollify: kernel reaches before t_q");
    SymTensorField2 racc(grid_);
    for (std::size_t i = 0; i < kernel_.offsets.size(); ++i) {
        SymTensorField2 ru = base_->R(t - kernel_.offsets[i]);
        ru *= kernel_.weights[i];
        racc += ru;
    }
    return mollifySpaceSpectral(racc, seq0_.ell);
}

MollifiedState StepEvaluator::mollify(double t) const
{
    MollifiedState ms;
    ms.t = t;
    ms.y_l = mollifiedY(t);
    ms.R_l = mollifiedR(t);

    ScalarField pacc(grid_);
    VectorField2 nlacc(grid_);
    for (std::size_t i = 0; i < kernel_.offsets.size(); ++i) {
        const double u = t - kernel_.offsets[i];
        const double w = kernel_.weights[i];
        ScalarField pu = base_->p(u);
        pu *= w;
        pacc += pu;
        // (Upsilon nl(y_q))(u), perp form as in est 338
        VectorField2 yq = base_->y(u);
        VectorField2 nlu = nlPerpForm(fractionalLaplacian(yq, 2.0 - params_.gamma2), yq);
        nlu *= w * noise_->upsilon(u);
        nlacc += nlu;
    }
    ms.p_l = mollifySpaceSpectral(pacc, seq0_.ell);
    ms.upsilon_l = noise_->upsilonMollified(t);
    ms.upsilon_l_dt = noise_->upsilonMollifiedDt(t);

    VectorField2 dens = nlPerpForm(fractionalLaplacian(ms.y_l, 2.0 - params_.gamma2), ms.y_l);
    dens *= ms.upsilon_l;
    dens -= mollifySpaceSpectral(nlacc, seq0_.ell);
    ms.R_com1 = antiDivergence(dens);
    return ms;
}

StepEvaluator::SparseVelocity StepEvaluator::flowVelocity(double t) const
{
    // time-average the (sparse) base coefficients, then the spatial mollifier,
    // Lambda^{2-gamma2}, and the Upsilon_l factor, all mode-wise
    std::map<std::pair<int, int>, std::array<cdouble, 2>> acc;
    for (std::size_t i = 0; i < kernel_.offsets.size(); ++i) {
        VectorField2 yu = base_->y(t - kernel_.offsets[i]);
        for (int comp = 0; comp < 2; ++comp) {
            const auto sm = SparseModes::fromField(comp == 0 ? yu.x1 : yu.x2, 1e-300);
            for (const auto& m : sm.modes) acc[{m.k1, m.k2}][comp] += kernel_.weights[i] * m.c;
        }
    }
    const double ups = noise_->upsilonMollified(t);
    SparseVelocity v;
    for (const auto& [k, c] : acc) {
        const double r = std::hypot(k.first, k.second);
        const double mult = ups * bump::mollifier_hat(seq0_.ell * r) *
                            (r > 0.0 ? std::pow(r, 2.0 - params_.gamma2) : 0.0);
        if (std::abs(c[0]) > 1e-300) v.m1.modes.push_back({k.first, k.second, mult * c[0]});
        if (std::abs(c[1]) > 1e-300) v.m2.modes.push_back({k.first, k.second, mult * c[1]});
    }
    return v;
}

double StepEvaluator::SparseVelocity::gradSupBound() const
{
    double g1 = 0.0, g2 = 0.0;
    for (const auto& m : m1.modes) g1 += std::hypot(m.k1, m.k2) * std::abs(m.c);
    for (const auto& m : m2.modes) g2 += std::hypot(m.k1, m.k2) * std::abs(m.c);
    return std::max(g1, g2);
}

FlowMap StepEvaluator::solveFlowMap(long j, double t) const
{
    FlowMap fm;
    fm.j = j;
    fm.t = t;
    fm.anchor = cutoffs_.tau * static_cast<double>(j);
    const double span = fm.anchor - t;
    const int nsteps = std::max(4, static_cast<int>(std::ceil(std::abs(span) / (flowStepFactor_ * cutoffs_.tau))));
    const double h = span / nsteps;

    // velocities at whole and half steps
    std::vector<SparseVelocity> vel(2 * nsteps + 1);
    double maxGrad = 0.0;
    for (int m = 0; m <= 2 * nsteps; ++m) {
        vel[m] = flowVelocity(t + 0.5 * h * m);
        maxGrad = std::max(maxGrad, vel[m].gradSupBound());
    }
    if (std::abs(h) * maxGrad > 0.5)
        throw CFLViolation("solveFlowMap: characteristic step exceeds stability bound");
    fm.gradBoundLog = std::abs(span) * maxGrad;

    const int n = grid_.n;
    const double dx = grid_.dx();
    std::vector<double> d1(grid_.size()), d2(grid_.size());
    parallel_for(grid_.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const double x1 = static_cast<double>(idx / n) * dx;
            const double x2 = static_cast<double>(idx % n) * dx;
            double z1 = x1, z2 = x2;
            for (int m = 0; m < nsteps; ++m) {
                const auto& v0 = vel[2 * m];
                const auto& vh = vel[2 * m + 1];
                const auto& v1 = vel[2 * m + 2];
                const double a1 = v0.evaluate1(z1, z2), a2 = v0.evaluate2(z1, z2);
                const double b1 = vh.evaluate1(z1 + 0.5 * h * a1, z2 + 0.5 * h * a2);
                const double b2 = vh.evaluate2(z1 + 0.5 * h * a1, z2 + 0.5 * h * a2);
                const double c1 = vh.evaluate1(z1 + 0.5 * h * b1, z2 + 0.5 * h * b2);
                const double c2 = vh.evaluate2(z1 + 0.5 * h * b1, z2 + 0.5 * h * b2);
                const double e1 = v1.evaluate1(z1 + h * c1, z2 + h * c2);
                const double e2 = v1.evaluate2(z1 + h * c1, z2 + h * c2);
                z1 += h / 6.0 * (a1 + 2.0 * b1 + 2.0 * c1 + e1);
                z2 += h / 6.0 * (a2 + 2.0 * b2 + 2.0 * c2 + e2);
            }
            d1[idx] = z1 - x1;
            d2[idx] = z2 - x2;
        }
    });
    fm.displacement = VectorField2(grid_);
    fm.displacement.x1 = ScalarField::fromPhysical(grid_, d1);
    fm.displacement.x2 = ScalarField::fromPhysical(grid_, d2);
    fm.gradDefect = std::max(cnNorm(fm.displacement.x1, 1) - supNorm(fm.displacement.x1),
                             cnNorm(fm.displacement.x2, 1) - supNorm(fm.displacement.x2));
    return fm;
}

WindowData StepEvaluator::buildWindow(long j, double t) const
{
    WindowData win;
    win.j = j;
    win.chi = cutoffs_.chi(j, t);
    win.chiDt = cutoffs_.chiDt(j, t);
    const bool odd = (j % 2) != 0;
    win.family = odd ? &fam1_ : &fam2_;
    win.coeffs = odd ? &geo1_ : &geo2_;
    win.flow = solveFlowMap(j, t);

    // transported stress: R_l(anchor) evaluated along the flow (est 355)
    const SymTensorField2 rl = mollifiedR(win.flow.anchor);
    const auto s11 = SparseModes::fromField(rl.t11, 1e-300);
    const auto s12 = SparseModes::fromField(rl.t12, 1e-300);
    const auto s22 = SparseModes::fromField(rl.t22, 1e-300);

    const auto p1 = win.flow.displacement.x1.physical();
    const auto p2 = win.flow.displacement.x2.physical();
    const int n = grid_.n;
    const double dx = grid_.dx();
    std::vector<double> r11(grid_.size()), r12(grid_.size()), r22(grid_.size());
    parallel_for(grid_.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const double z1 = static_cast<double>(idx / n) * dx + p1[idx];
            const double z2 = static_cast<double>(idx % n) * dx + p2[idx];
            r11[idx] = s11.evaluate(z1, z2).real();
            r12[idx] = s12.evaluate(z1, z2).real();
            r22[idx] = s22.evaluate(z1, z2).real();
        }
    });
    win.R_qj = SymTensorField2(grid_);
    win.R_qj.t11 = ScalarField::fromPhysical(grid_, r11);
    win.R_qj.t12 = ScalarField::fromPhysical(grid_, r12);
    win.R_qj.t22 = ScalarField::fromPhysical(grid_, r22);

    // amplitudes a_{k,j} (est 447)
    const double m0j = profile_.M0(win.flow.anchor);
    const double denom = std::pow(seq1_.lambda, 2.0 - params_.gamma2) * seq1_.delta_q * m0j;
    const double front = std::sqrt(m0j / params_.gamma2) * std::sqrt(seq1_.delta_q);
    for (int p = 0; p < 3; ++p) {
        AmplitudePair ap;
        ap.pairIndex = p;
        std::vector<double> a(grid_.size());
        double supA = 0.0;
        for (std::size_t idx = 0; idx < grid_.size(); ++idx) {
            const Sym2 arg{1.0 - r11[idx] / denom, -r12[idx] / denom, 1.0 - r22[idx] / denom};
            const Sym2 dev = arg - Sym2::identity();
            if (dev.opNorm() > win.coeffs->epsilon * (1.0 + 1e-12))
                throw OutsideGeometricBall("build_amplitudes: argument left B(Id, eps) at t=" +
                                           std::to_string(t) + " j=" + std::to_string(j));
            a[idx] = front * std::sqrt(win.coeffs->cp(p, arg));
            supA = std::max(supA, a[idx]);
        }
        ap.a = ScalarField::fromPhysical(grid_, a);
        ap.supA = supA;
        win.amplitudes.push_back(std::move(ap));
    }
    return win;
}

ScalarField StepEvaluator::amplitudeField(const WindowData& win, int pairIndex, bool bar, double t) const
{
    ScalarField a = win.amplitudes[pairIndex].a;
    if (bar) a *= 1.0 / std::sqrt(noise_->upsilonMollified(t));
    return a;
}

ScalarField StepEvaluator::scalarPacket(const WindowData& win, int dirIndex, double lambda) const
{
    const Vec2 k = win.family->directions[dirIndex];
    const double lk1 = lambda * k.x, lk2 = lambda * k.y;
    // lambda k must be a lattice vector for periodicity
    if (std::abs(lk1 - std::round(lk1)) + std::abs(lk2 - std::round(lk2)) > 1e-9)
        throw ConfigError("packet: lambda k not on the integer lattice (a not in 5N?)");

    const auto amp = win.amplitudes[dirIndex / 2].a.physical();
    const auto d1 = win.flow.displacement.x1.physical();
    const auto d2 = win.flow.displacement.x2.physical();
    const int n = grid_.n;
    const double dx = grid_.dx();
    std::vector<cdouble> s(grid_.size());
    const double upsFactor = 1.0 / std::sqrt(noise_->upsilonMollified(win.flow.t));
    parallel_for(grid_.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const double x1 = static_cast<double>(idx / n) * dx;
            const double x2 = static_cast<double>(idx % n) * dx;
            const double ph = lk1 * (x1 + d1[idx]) + lk2 * (x2 + d2[idx]);
            s[idx] = upsFactor * amp[idx] * cdouble(std::cos(ph), std::sin(ph));
        }
    });
    return ScalarField::fromPhysicalComplex(grid_, std::move(s));
}

// P_{q+1,k}(amp * b_k(lambda Phi_j)) for one direction; complex output.
VectorField2 StepEvaluator::packet(const WindowData& win, int dirIndex, double lambda) const
{
    const Vec2 k = win.family->directions[dirIndex];
    ScalarField shat = scalarPacket(win, dirIndex, lambda);

    // apply K_{~1}((xi - lambda k)/lambda) and the Leray matrix to (i kperp) s
    const Vec2 kp = k.perp();
    const int n = grid_.n;
    VectorField2 out(grid_);
    const cdouble I(0.0, 1.0);
    for (int i = 0; i < n; ++i) {
        const int q1 = grid_.freq(i);
        for (int jj = 0; jj < n; ++jj) {
            const int q2 = grid_.freq(jj);
            const std::size_t idx = static_cast<std::size_t>(i) * n + jj;
            const double r = std::hypot(q1 / lambda - k.x, q2 / lambda - k.y);
            const double kb = bump::k_approx1(r);
            if (kb == 0.0) {
                out.x1.hat(idx) = 0.0;
                out.x2.hat(idx) = 0.0;
                continue;
            }
            const cdouble v1 = I * kp.x * shat.hat(idx);
            const cdouble v2 = I * kp.y * shat.hat(idx);
            const double r2 = static_cast<double>(q1) * q1 + static_cast<double>(q2) * q2;
            cdouble o1 = v1, o2 = v2;
            if (r2 > 0.0) {
                const cdouble kd = (static_cast<double>(q1) * v1 + static_cast<double>(q2) * v2) / r2;
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

VectorField2 StepEvaluator::perturbation(double t, std::vector<WindowData>& windows,
                                         double* imagDefect) const
{
    if (t < seq1_.t_q - 1e-12 || t > noise_->T_L() + 1e-12)
        throw OutOfWindow("perturbation: t outside [t_{q+1}, T_L]");
    windows.clear();
    for (long j : cutoffs_.activeWindows(t)) windows.push_back(buildWindow(j, t));

    VectorField2 w(grid_);
    for (const auto& win : windows) {
        for (int d = 0; d < 6; ++d) {
            VectorField2 pk = packet(win, d, seq1_.lambda);
            pk *= win.chi;
            w += pk;
        }
    }
    const double defect = std::max(w.x1.conjugateSymmetryDefect(), w.x2.conjugateSymmetryDefect()) /
                          std::max(1e-300, std::max(w.x1.maxAbsCoeff(), w.x2.maxAbsCoeff()));
    if (imagDefect) *imagDefect = defect;
    if (defect > 1e-12) throw NonRealOutput("perturbation: conjugate pairing broken");
    symmetrizeReal(w);
    return w;
}

VectorField2 StepEvaluator::y1(double t) const
{
    VectorField2 yl = mollifiedY(t);
    std::vector<WindowData> wins;
    return yl + perturbation(t, wins);
}

std::vector<double> StepEvaluator::defaultCheckTimes() const
{
    const double tau = cutoffs_.tau;
    const double TL = noise_->T_L();
    const double eps = geo1_.epsilon;
    auto admissible = [&](double t) -> bool {
        if (t < seq1_.t_q + 2.0 * tau || t > TL - 2.0 * tau) return false;
        // gamma-ball margin from the base-stress scale at the anchor
        const double rsup = supNorm(base_->R(t));
        const double denom = std::pow(seq1_.lambda, 2.0 - params_.gamma2) * seq1_.delta_q *
                             profile_.M0(t) / std::exp(8.0 * params_.L * tau);
        if (rsup / denom > 0.9 * eps) return false;
        // resolvable characteristics, measured velocity gradient
        return tau * flowVelocity(t).gradSupBound() <= 3.0;
    };
    auto snap = [&](double t) { return tau * (std::floor(t / tau) + 0.5); };
    std::vector<double> out;
    for (double t = -0.2; t > seq1_.t_q; t -= 0.1)
        if (admissible(t)) {
            out.push_back(snap(t));
            break;
        }
    double lo = 1e300, hi = -1e300;
    for (double t = 0.0; t <= TL; t += tau)
        if (admissible(t)) {
            lo = std::min(lo, t);
            hi = std::max(hi, t);
        }
    if (lo < hi) {
        out.push_back(snap(lo + 0.15 * (hi - lo)));
        out.push_back(snap(lo + 0.6 * (hi - lo)));
    }
    if (out.empty())
        throw ConfigError("defaultCheckTimes: no admissible check time (gamma ball or CFL window empty)");
    return out;
}

} // namespace sqg
