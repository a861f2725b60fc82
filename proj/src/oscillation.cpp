#include "sqg/errors.hpp"
#include "sqg/iteration.hpp"
#include "sqg/norms.hpp"

#include <cmath>
#include <map>
#include <random>

// Deep verification of the oscillation bilinear machinery: the same truncated
// wave packets are pushed through (a) the pseudo-spectral product path and
// (b) direct mode-space double sums (the discrete form of the appendix
// bilinear symbol integrals), and the assembled R_O / R_O,high / inferred
// R_O,low are compared entrywise.

namespace sqg {

namespace {

using Key = std::pair<int, int>;
using SpField = std::map<Key, cdouble>; // sparse spectral scalar
struct SpVec {
    SpField x1, x2;
};
struct SpTensor {
    SpField t11, t12, t22;
};

SpField fromScalar(const ScalarField& f)
{
    SpField out;
    const int n = f.grid().n;
    for (int i = 0; i < n; ++i) {
        const int k1 = f.grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const auto c = f.hat(static_cast<std::size_t>(i) * n + j);
            if (std::abs(c) > 0.0) out[{k1, f.grid().freq(j)}] = c;
        }
    }
    return out;
}

SpField convolve(const SpField& a, const SpField& b)
{
    SpField out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return out;
}

template <typename Fn> SpField applySym(const SpField& f, Fn&& m)
{
    SpField out;
    for (const auto& [k, c] : f) {
        const cdouble v = m(k.first, k.second) * c;
        if (std::abs(v) > 0.0) out[k] = v;
    }
    return out;
}

SpField lamPow(const SpField& f, double g)
{
    return applySym(f, [g](int k1, int k2) -> cdouble {
        if (k1 == 0 && k2 == 0) return 0.0;
        return std::pow(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2, 0.5 * g);
    });
}

SpField deriv(const SpField& f, int axis)
{
    return applySym(f, [axis](int k1, int k2) { return cdouble(0.0, axis == 0 ? k1 : k2); });
}

SpField add(SpField a, const SpField& b)
{
    for (const auto& [k, c] : b) a[k] += c;
    return a;
}

SpField sub(SpField a, const SpField& b)
{
    for (const auto& [k, c] : b) a[k] -= c;
    return a;
}

// (Lambda^{2-g2} A . grad)B - (grad A)^T Lambda^{2-g2} B, all products by
// explicit double sums over modes
SpVec bilinearDeep(const SpVec& A, const SpVec& B, double g2)
{
    const SpField la1 = lamPow(A.x1, 2.0 - g2), la2 = lamPow(A.x2, 2.0 - g2);
    const SpField lb1 = lamPow(B.x1, 2.0 - g2), lb2 = lamPow(B.x2, 2.0 - g2);
    SpVec out;
    out.x1 = sub(add(convolve(la1, deriv(B.x1, 0)), convolve(la2, deriv(B.x1, 1))),
                 add(convolve(deriv(A.x1, 0), lb1), convolve(deriv(A.x2, 0), lb2)));
    out.x2 = sub(add(convolve(la1, deriv(B.x2, 0)), convolve(la2, deriv(B.x2, 1))),
                 add(convolve(deriv(A.x1, 1), lb1), convolve(deriv(A.x2, 1), lb2)));
    return out;
}

SpTensor antiDivDeep(const SpVec& f)
{
    SpTensor out;
    // collect union of keys
    SpField keys = f.x1;
    for (const auto& [k, c] : f.x2) keys[k] += 0.0;
    for (const auto& [k, cdummy] : keys) {
        (void)cdummy;
        if (k.first == 0 && k.second == 0) continue;
        const double r2 = static_cast<double>(k.first) * k.first + static_cast<double>(k.second) * k.second;
        cdouble f1 = 0.0, f2 = 0.0;
        if (auto it = f.x1.find(k); it != f.x1.end()) f1 = it->second;
        if (auto it = f.x2.find(k); it != f.x2.end()) f2 = it->second;
        // Leray
        const cdouble kd = (static_cast<double>(k.first) * f1 + static_cast<double>(k.second) * f2) / r2;
        f1 -= static_cast<double>(k.first) * kd;
        f2 -= static_cast<double>(k.second) * kd;
        const cdouble iOver(0.0, -1.0 / r2);
        out.t11[k] = iOver * (2.0 * k.first * f1);
        out.t12[k] = iOver * (static_cast<double>(k.second) * f1 + static_cast<double>(k.first) * f2);
        out.t22[k] = iOver * (2.0 * k.second * f2);
    }
    return out;
}

double compareField(const SpField& deep, const ScalarField& fft, double scale)
{
    double worst = 0.0;
    const int n = fft.grid().n;
    // union: every deep mode, plus every fft mode
    for (const auto& [k, c] : deep) {
        if (std::abs(k.first) >= n / 2 || std::abs(k.second) >= n / 2)
            throw GridBound("deep oscillation: product mode exceeds the comparison grid");
        worst = std::max(worst, std::abs(c - fft.coeff(k.first, k.second)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k1 = fft.grid().freq(i), k2 = fft.grid().freq(j);
            const auto c = fft.hat(static_cast<std::size_t>(i) * n + j);
            if (std::abs(c) == 0.0) continue;
            if (!deep.count({k1, k2})) worst = std::max(worst, std::abs(c));
        }
    return worst / scale;
}

double compareTensor(const SpTensor& deep, const SymTensorField2& fft)
{
    const double scale = std::max({fft.t11.maxAbsCoeff(), fft.t12.maxAbsCoeff(),
                                   fft.t22.maxAbsCoeff(), 1e-300});
    return std::max({compareField(deep.t11, fft.t11, scale), compareField(deep.t12, fft.t12, scale),
                     compareField(deep.t22, fft.t22, scale)});
}

ScalarField randomBandLimited(const Grid& g, std::mt19937_64& rng, int kcap, double amp)
{
    ScalarField f(g);
    auto u = [&rng]() { return (static_cast<double>(rng() >> 11) * 0x1p-53) * 2.0 - 1.0; };
    for (int k1 = -kcap; k1 <= kcap; ++k1) {
        for (int k2 = -kcap; k2 <= kcap; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            if (k1 < 0 || (k1 == 0 && k2 < 0)) continue;
            const cdouble c(u(), u());
            f.set_coeff(k1, k2, c);
            f.set_coeff(-k1, -k2, std::conj(c));
        }
    }
    const double s = supNorm(f);
    if (s > 0.0) f *= amp / s;
    return f;
}

// band bump + Leray at direction k: local copy of the packet filtering
VectorField2 bandLeray(const VectorField2& v, Vec2 k, double lambda)
{
    VectorField2 out(v.grid());
    const int n = v.grid().n;
    for (int i = 0; i < n; ++i) {
        const int q1 = v.grid().freq(i);
        for (int jj = 0; jj < n; ++jj) {
            const int q2 = v.grid().freq(jj);
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
    return out;
}

VectorField2 bilinearFFT(const VectorField2& A, const VectorField2& B, double g2)
{
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
    const Grid& g = A.grid();
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

} // namespace

DeepOscillationReport deepOscillationCheck(int n, std::uint64_t seed)
{
    if (n > 64) throw DeepModeTooLarge("deepOscillationCheck: N > 64");
    const Grid g(n);
    const double lambda = 10.0; // smallest scale with multi-mode lattice packets
    const double g2 = 1.0;
    if (g.kmax() < static_cast<int>(2.25 * lambda + 3.0))
        throw GridBound("deepOscillationCheck: grid cannot hold the packet products");

    std::mt19937_64 rng(seed);
    const auto [fam1, fam2] = standardFamilies();
    const auto geo1 = gammaCoefficients(fam1);
    const auto geo2 = gammaCoefficients(fam2);

    // synthetic mollified stress (trace-free) and two window flows
    SymTensorField2 Rl(g);
    Rl.t11 = randomBandLimited(g, rng, 2, 0.08);
    Rl.t22 = Rl.t11;
    Rl.t22 *= -1.0;
    Rl.t12 = randomBandLimited(g, rng, 2, 0.08);

    struct Win {
        double chi;
        const DirectionFamily* fam;
        const GeometricCoefficients* geo;
        VectorField2 disp;
        SymTensorField2 Rqj;
        std::array<ScalarField, 3> a;
    };
    std::array<Win, 2> wins{Win{0.8, &fam1, &geo1, VectorField2(g), SymTensorField2(g), {}},
                            Win{std::sqrt(1.0 - 0.64), &fam2, &geo2, VectorField2(g), SymTensorField2(g), {}}};

    const auto s11 = SparseModes::fromField(Rl.t11, 1e-300);
    const auto s12 = SparseModes::fromField(Rl.t12, 1e-300);
    const auto s22 = SparseModes::fromField(Rl.t22, 1e-300);
    const double dx = g.dx();
    for (auto& w : wins) {
        w.disp.x1 = randomBandLimited(g, rng, 2, 0.02);
        w.disp.x2 = randomBandLimited(g, rng, 2, 0.02);
        const auto p1 = w.disp.x1.physical();
        const auto p2 = w.disp.x2.physical();
        std::vector<double> r11(g.size()), r12(g.size()), r22(g.size());
        for (std::size_t idx = 0; idx < g.size(); ++idx) {
            const double z1 = static_cast<double>(idx / n) * dx + p1[idx];
            const double z2 = static_cast<double>(idx % n) * dx + p2[idx];
            r11[idx] = s11.evaluate(z1, z2).real();
            r12[idx] = s12.evaluate(z1, z2).real();
            r22[idx] = s22.evaluate(z1, z2).real();
        }
        w.Rqj.t11 = ScalarField::fromPhysical(g, r11);
        w.Rqj.t12 = ScalarField::fromPhysical(g, r12);
        w.Rqj.t22 = ScalarField::fromPhysical(g, r22);
        for (int p = 0; p < 3; ++p) {
            std::vector<double> a(g.size());
            for (std::size_t idx = 0; idx < g.size(); ++idx) {
                const Sym2 arg{1.0 - r11[idx], -r12[idx], 1.0 - r22[idx]};
                a[idx] = 0.3 * std::sqrt(w.geo->cp(p, arg));
            }
            w.a[p] = ScalarField::fromPhysical(g, a);
        }
    }

    // packets (FFT route), exactly band-limited after the bump+Leray filter
    std::vector<VectorField2> G;
    for (auto& w : wins) {
        const auto d1 = w.disp.x1.physical();
        const auto d2 = w.disp.x2.physical();
        for (int d = 0; d < 6; ++d) {
            const Vec2 k = w.fam->directions[d];
            const auto amp = w.a[d / 2].physical();
            std::vector<cdouble> s(g.size());
            for (std::size_t idx = 0; idx < g.size(); ++idx) {
                const double x1 = static_cast<double>(idx / n) * dx;
                const double x2 = static_cast<double>(idx % n) * dx;
                const double ph = lambda * (k.x * (x1 + d1[idx]) + k.y * (x2 + d2[idx]));
                s[idx] = amp[idx] * cdouble(std::cos(ph), std::sin(ph));
            }
            ScalarField sf = ScalarField::fromPhysicalComplex(g, std::move(s));
            VectorField2 base(g);
            const Vec2 kp = k.perp();
            base.x1 = sf;
            base.x1 *= cdouble(0.0, kp.x);
            base.x2 = sf;
            base.x2 *= cdouble(0.0, kp.y);
            VectorField2 pk = bandLeray(base, k, lambda);
            pk *= w.chi;
            G.push_back(std::move(pk));
        }
    }
    VectorField2 W(g);
    for (const auto& pk : G) W += pk;

    // FFT route
    const VectorField2 FfullFFT = bilinearFFT(W, W, g2);
    VectorField2 diagFFT(g);
    for (int wi = 0; wi < 2; ++wi)
        for (int p = 0; p < 3; ++p) {
            const auto& Gp = G[wi * 6 + 2 * p];
            const auto& Gm = G[wi * 6 + 2 * p + 1];
            VectorField2 d = bilinearFFT(Gp, Gm, g2);
            VectorField2 d2 = bilinearFFT(Gm, Gp, g2);
            diagFFT += d;
            diagFFT += d2;
        }
    VectorField2 crossFFT = FfullFFT;
    crossFFT -= diagFFT;
    const auto annulusSym = [lambda](int k1, int k2) -> cdouble {
        return bump::annulus(std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2) / lambda);
    };
    VectorField2 crossFiltFFT(g);
    crossFiltFFT.x1 = applyMultiplier(crossFFT.x1, annulusSym);
    crossFiltFFT.x2 = applyMultiplier(crossFFT.x2, annulusSym);
    const SymTensorField2 highFFT = antiDivergence(crossFiltFFT);
    VectorField2 densO = divergence(Rl);
    densO += FfullFFT;
    const SymTensorField2 roFFT = antiDivergence(densO);
    SymTensorField2 approx(g);
    for (const auto& w : wins) {
        SymTensorField2 d = Rl;
        d -= w.Rqj;
        d *= w.chi * w.chi;
        approx += d;
    }
    SymTensorField2 lowFFT = roFFT;
    lowFFT -= approx;
    lowFFT -= highFFT;

    // deep route: identical formulas, products by explicit double sums
    std::vector<SpVec> Gs;
    for (const auto& pk : G) Gs.push_back({fromScalar(pk.x1), fromScalar(pk.x2)});
    SpVec Ws;
    for (const auto& gs : Gs) {
        Ws.x1 = add(Ws.x1, gs.x1);
        Ws.x2 = add(Ws.x2, gs.x2);
    }
    const SpVec FfullDeep = bilinearDeep(Ws, Ws, g2);
    SpVec diagDeep;
    for (int wi = 0; wi < 2; ++wi)
        for (int p = 0; p < 3; ++p) {
            const SpVec d = bilinearDeep(Gs[wi * 6 + 2 * p], Gs[wi * 6 + 2 * p + 1], g2);
            const SpVec d2 = bilinearDeep(Gs[wi * 6 + 2 * p + 1], Gs[wi * 6 + 2 * p], g2);
            diagDeep.x1 = add(add(diagDeep.x1, d.x1), d2.x1);
            diagDeep.x2 = add(add(diagDeep.x2, d.x2), d2.x2);
        }
    SpVec crossDeep{sub(FfullDeep.x1, diagDeep.x1), sub(FfullDeep.x2, diagDeep.x2)};
    SpVec crossFiltDeep{applySym(crossDeep.x1, annulusSym), applySym(crossDeep.x2, annulusSym)};
    const SpTensor highDeep = antiDivDeep(crossFiltDeep);
    // div R_l is linear and shared between the routes; extract it sparsely
    const VectorField2 divRl = divergence(Rl);
    SpVec densDeep{add(fromScalar(divRl.x1), FfullDeep.x1), add(fromScalar(divRl.x2), FfullDeep.x2)};
    const SpTensor roDeep = antiDivDeep(densDeep);
    SpTensor lowDeep;
    lowDeep.t11 = sub(sub(roDeep.t11, fromScalar(approx.t11)), highDeep.t11);
    lowDeep.t12 = sub(sub(roDeep.t12, fromScalar(approx.t12)), highDeep.t12);
    lowDeep.t22 = sub(sub(roDeep.t22, fromScalar(approx.t22)), highDeep.t22);

    DeepOscillationReport rep{};
    rep.ro_rel_diff = compareTensor(roDeep, roFFT);
    rep.high_rel_diff = compareTensor(highDeep, highFFT);
    rep.low_rel_diff = compareTensor(lowDeep, lowFFT);
    rep.ok = rep.ro_rel_diff <= 1e-6 && rep.high_rel_diff <= 1e-6 && rep.low_rel_diff <= 1e-6;
    return rep;
}

} // namespace sqg
