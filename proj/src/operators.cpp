#include "sqg/operators.hpp"

#include "sqg/errors.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace sqg {

namespace bump {

namespace {
double fexp(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
double fexp_d(double u) { return u > 0.0 ? std::exp(-1.0 / u) / (u * u) : 0.0; }
} // namespace

double smooth_step(double u)
{
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double a = fexp(u), b = fexp(1.0 - u);
    return a / (a + b);
}

double smooth_step_d(double u)
{
    if (u <= 0.0 || u >= 1.0) return 0.0;
    const double a = fexp(u), b = fexp(1.0 - u);
    const double ad = fexp_d(u), bd = -fexp_d(1.0 - u);
    const double s = a + b;
    return (ad * s - a * (ad + bd)) / (s * s);
}

double k_approx1(double r)
{
    if (r <= 1.0 / 16.0) return 1.0;
    if (r >= 1.0 / 8.0) return 0.0;
    return 1.0 - smooth_step((r - 1.0 / 16.0) * 16.0);
}

double annulus(double r)
{
    if (r <= 0.25 || r >= 4.0) return 0.0;
    if (r < 0.375) return smooth_step((r - 0.25) * 8.0);
    if (r <= 3.0) return 1.0;
    return 1.0 - smooth_step(r - 3.0);
}

namespace {

// Gauss-Legendre nodes/weights on [0,1], 64 points.
struct GL64 {
    std::vector<double> x, w;
    GL64()
    {
        const int n = 64;
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n; ++i) {
            // Newton on Legendre polynomial, standard [-1,1] rule
            double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int j = 2; j <= n; ++j) {
                    const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                const double dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[i] = 0.5 * (t + 1.0);
            w[i] = 1.0 / ((1.0 - t * t) * dp * dp); // = w_[-1,1]/2
        }
    }
};

const GL64& gl64()
{
    static const GL64 g;
    return g;
}

double bessel_j0(double z)
{
    // (2/pi) * int_0^{pi/2} cos(z sin t) dt by Gauss-Legendre
    const auto& g = gl64();
    double acc = 0.0;
    for (int i = 0; i < 64; ++i) {
        const double t = g.x[i] * std::numbers::pi / 2.0;
        acc += g.w[i] * std::cos(z * std::sin(t));
    }
    return acc; // the pi/2 interval factor cancels against 2/pi
}

// phi_hat(z)/phi_hat(0) for phi(x) = c exp(-1/(1-|x|^2)) on the unit disc.
struct MollifierTable {
    double zmax = 96.0;
    double dz = 1.0 / 256.0;
    std::vector<double> val;
    MollifierTable()
    {
        const auto& g = gl64();
        const int m = static_cast<int>(zmax / dz) + 4;
        val.resize(m);
        double i0 = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double r = g.x[i];
            i0 += g.w[i] * std::exp(-1.0 / (1.0 - r * r)) * r;
        }
        for (int j = 0; j < m; ++j) {
            const double z = j * dz;
            double iz = 0.0;
            for (int i = 0; i < 64; ++i) {
                const double r = g.x[i];
                iz += g.w[i] * std::exp(-1.0 / (1.0 - r * r)) * bessel_j0(z * r) * r;
            }
            val[j] = iz / i0;
        }
    }
    double eval(double z) const
    {
        if (z >= zmax) return 0.0;
        const double u = z / dz;
        const int j = static_cast<int>(u);
        const double f = u - j;
        // cubic Catmull-Rom on the dense table
        const double p0 = val[j == 0 ? 0 : j - 1];
        const double p1 = val[j];
        const double p2 = val[j + 1];
        const double p3 = val[j + 2];
        return p1 + 0.5 * f * (p2 - p0 + f * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 + f * (3.0 * (p1 - p2) + p3 - p0)));
    }
};

const MollifierTable& mollifier_table()
{
    static const MollifierTable t;
    return t;
}

} // namespace

double mollifier_hat(double z) { return mollifier_table().eval(std::abs(z)); }

double time_kernel(double u)
{
    if (u <= 1.0 || u >= 2.0) return 0.0;
    const double w = 2.0 * u - 3.0;
    return std::exp(-1.0 / (1.0 - w * w));
}

double time_kernel_d(double u)
{
    if (u <= 1.0 || u >= 2.0) return 0.0;
    const double w = 2.0 * u - 3.0;
    const double q = 1.0 - w * w;
    return std::exp(-1.0 / q) * (-4.0 * w / (q * q));
}

} // namespace bump

ScalarField applyMultiplier(const ScalarField& f, const std::function<cdouble(int, int)>& m)
{
    ScalarField out = f;
    const int n = f.grid().n;
    for (int i = 0; i < n; ++i) {
        const int k1 = f.grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            out.hat(idx) = f.hat(idx) * m(k1, f.grid().freq(j));
        }
    }
    out.zeroNyquist();
    return out;
}

ScalarField fractionalLaplacian(const ScalarField& f, double gamma)
{
    if (gamma < -2.0 || gamma > 4.0) throw ConfigError("fractionalLaplacian: gamma outside [-2, 4]");
    if (gamma < 0.0 && std::abs(f.mean()) > 1e-13 * (f.maxAbsCoeff() + 1e-300))
        throw NonMeanZeroNegativePower("fractionalLaplacian: negative power of a non-mean-zero field");
    return applyMultiplier(f, [gamma](int k1, int k2) -> cdouble {
        if (k1 == 0 && k2 == 0) return 0.0;
        const double r2 = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
        return std::pow(r2, 0.5 * gamma);
    });
}

VectorField2 fractionalLaplacian(const VectorField2& v, double gamma)
{
    VectorField2 out(v.grid());
    out.x1 = fractionalLaplacian(v.x1, gamma);
    out.x2 = fractionalLaplacian(v.x2, gamma);
    return out;
}

VectorField2 riesz(const ScalarField& f)
{
    if (std::abs(f.mean()) > 1e-13 * (f.maxAbsCoeff() + 1e-300))
        throw NonMeanZeroNegativePower("riesz: field must be mean-zero");
    VectorField2 out(f.grid());
    out.x1 = applyMultiplier(f, [](int k1, int k2) -> cdouble {
        if (k1 == 0 && k2 == 0) return 0.0;
        const double r = std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
        return cdouble(0.0, -k1 / r);
    });
    out.x2 = applyMultiplier(f, [](int k1, int k2) -> cdouble {
        if (k1 == 0 && k2 == 0) return 0.0;
        const double r = std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
        return cdouble(0.0, -k2 / r);
    });
    return out;
}

ScalarField derivative(const ScalarField& f, int axis)
{
    return applyMultiplier(f, [axis](int k1, int k2) -> cdouble {
        return cdouble(0.0, axis == 0 ? k1 : k2);
    });
}

VectorField2 gradient(const ScalarField& f)
{
    VectorField2 out(f.grid());
    out.x1 = derivative(f, 0);
    out.x2 = derivative(f, 1);
    return out;
}

VectorField2 perp(const VectorField2& v)
{
    VectorField2 out(v.grid());
    out.x1 = v.x2;
    out.x1 *= -1.0;
    out.x2 = v.x1;
    return out;
}

ScalarField perpDiv(const VectorField2& v)
{
    ScalarField out = derivative(v.x2, 0);
    out -= derivative(v.x1, 1);
    return out;
}

VectorField2 leray(const VectorField2& v)
{
    VectorField2 out(v.grid());
    const int n = v.grid().n;
    out.x1 = v.x1;
    out.x2 = v.x2;
    for (int i = 0; i < n; ++i) {
        const int k1 = v.grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const int k2 = v.grid().freq(j);
            if (k1 == 0 && k2 == 0) continue;
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            const double r2 = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            const cdouble kd = (static_cast<double>(k1) * v.x1.hat(idx) + static_cast<double>(k2) * v.x2.hat(idx)) / r2;
            out.x1.hat(idx) -= static_cast<double>(k1) * kd;
            out.x2.hat(idx) -= static_cast<double>(k2) * kd;
        }
    }
    out.x1.zeroNyquist();
    out.x2.zeroNyquist();
    return out;
}

SymTensorField2 antiDivergence(const VectorField2& f)
{
    VectorField2 g = leray(f);
    g.x1.zeroMean();
    g.x2.zeroMean();
    SymTensorField2 out(f.grid());
    const int n = f.grid().n;
    for (int i = 0; i < n; ++i) {
        const int k1 = f.grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const int k2 = f.grid().freq(j);
            if (k1 == 0 && k2 == 0) continue;
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            const double r2 = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
            const cdouble i_over = cdouble(0.0, -1.0 / r2); // -i / |k|^2
            // (Bf)_mj = -d_j L^-2 f_m - d_m L^-2 f_j
            out.t11.hat(idx) = i_over * (2.0 * k1 * g.x1.hat(idx));
            out.t12.hat(idx) = i_over * (static_cast<double>(k2) * g.x1.hat(idx) + static_cast<double>(k1) * g.x2.hat(idx));
            out.t22.hat(idx) = i_over * (2.0 * k2 * g.x2.hat(idx));
        }
    }
    out.t11.zeroNyquist();
    out.t12.zeroNyquist();
    out.t22.zeroNyquist();
    return out;
}

VectorField2 divergence(const SymTensorField2& t)
{
    VectorField2 out(t.grid());
    out.x1 = derivative(t.t11, 0);
    out.x1 += derivative(t.t12, 1);
    out.x2 = derivative(t.t12, 0);
    out.x2 += derivative(t.t22, 1);
    return out;
}

ScalarField gradientPotential(const VectorField2& v)
{
    // p = Laplacian^-1 div v, so grad p = (Id - P)(v - mean)
    ScalarField divv = derivative(v.x1, 0);
    divv += derivative(v.x2, 1);
    return applyMultiplier(divv, [](int k1, int k2) -> cdouble {
        if (k1 == 0 && k2 == 0) return 0.0;
        const double r2 = static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2;
        return -1.0 / r2;
    });
}

namespace {
void checkBandRepresentable(const Grid& g, double kn, double lambda)
{
    if (lambda * (kn + 0.125) > g.kmax())
        throw NyquistOverflow("bandProjector: shifted bump exceeds representable frequencies");
}
} // namespace

ScalarField bandProjector(const ScalarField& f, double kdir1, double kdir2, double lambda)
{
    checkBandRepresentable(f.grid(), std::hypot(kdir1, kdir2), lambda);
    return applyMultiplier(f, [=](int k1, int k2) -> cdouble {
        const double r = std::hypot(k1 / lambda - kdir1, k2 / lambda - kdir2);
        return bump::k_approx1(r);
    });
}

VectorField2 bandProjector(const VectorField2& v, double kdir1, double kdir2, double lambda)
{
    VectorField2 out(v.grid());
    out.x1 = bandProjector(v.x1, kdir1, kdir2, lambda);
    out.x2 = bandProjector(v.x2, kdir1, kdir2, lambda);
    return out;
}

VectorField2 projectorPqk(const VectorField2& v, double kdir1, double kdir2, double lambda)
{
    return leray(bandProjector(v, kdir1, kdir2, lambda));
}

ScalarField annulusProjector(const ScalarField& f, double lambda)
{
    if (4.0 * lambda > f.grid().kmax())
        throw NyquistOverflow("annulusProjector: 4*lambda exceeds representable frequencies");
    return applyMultiplier(f, [lambda](int k1, int k2) -> cdouble {
        const double r = std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2) / lambda;
        return bump::annulus(r);
    });
}

VectorField2 annulusProjector(const VectorField2& v, double lambda)
{
    VectorField2 out(v.grid());
    out.x1 = annulusProjector(v.x1, lambda);
    out.x2 = annulusProjector(v.x2, lambda);
    return out;
}

SymTensorField2 annulusProjector(const SymTensorField2& t, double lambda)
{
    SymTensorField2 out(t.grid());
    out.t11 = annulusProjector(t.t11, lambda);
    out.t12 = annulusProjector(t.t12, lambda);
    out.t22 = annulusProjector(t.t22, lambda);
    return out;
}

namespace {
ScalarField mollifyMultiplier(const ScalarField& f, double ell)
{
    return applyMultiplier(f, [ell](int k1, int k2) -> cdouble {
        const double r = std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
        return bump::mollifier_hat(ell * r);
    });
}
} // namespace

ScalarField mollifySpace(const ScalarField& f, double ell)
{
    if (ell < 2.0 * f.grid().dx()) throw ScaleTooFine("mollifySpace: ell under-resolved on this grid");
    return mollifyMultiplier(f, ell);
}

ScalarField mollifySpaceSpectral(const ScalarField& f, double ell)
{
    if (ell <= 0.0) throw ScaleTooFine("mollifySpaceSpectral: ell must be positive");
    if (f.supportRadius(1e-13) > f.grid().kmax() / 2.0)
        throw ScaleTooFine("mollifySpaceSpectral: input not band-limited well inside Nyquist");
    return mollifyMultiplier(f, ell);
}

VectorField2 mollifySpaceSpectral(const VectorField2& v, double ell)
{
    VectorField2 out(v.grid());
    out.x1 = mollifySpaceSpectral(v.x1, ell);
    out.x2 = mollifySpaceSpectral(v.x2, ell);
    return out;
}

SymTensorField2 mollifySpaceSpectral(const SymTensorField2& t, double ell)
{
    SymTensorField2 out(t.grid());
    out.t11 = mollifySpaceSpectral(t.t11, ell);
    out.t12 = mollifySpaceSpectral(t.t12, ell);
    out.t22 = mollifySpaceSpectral(t.t22, ell);
    return out;
}

VectorField2 mollifySpace(const VectorField2& v, double ell)
{
    VectorField2 out(v.grid());
    out.x1 = mollifySpace(v.x1, ell);
    out.x2 = mollifySpace(v.x2, ell);
    return out;
}

SymTensorField2 mollifySpace(const SymTensorField2& t, double ell)
{
    SymTensorField2 out(t.grid());
    out.t11 = mollifySpace(t.t11, ell);
    out.t12 = mollifySpace(t.t12, ell);
    out.t22 = mollifySpace(t.t22, ell);
    return out;
}

VectorField2 nlTwoTerm(const VectorField2& u, const VectorField2& v)
{
    const auto u1 = u.x1.physical();
    const auto u2 = u.x2.physical();
    const auto d1v1 = derivative(v.x1, 0).physical();
    const auto d2v1 = derivative(v.x1, 1).physical();
    const auto d1v2 = derivative(v.x2, 0).physical();
    const auto d2v2 = derivative(v.x2, 1).physical();
    std::vector<double> c1(u1.size()), c2(u1.size());
    for (std::size_t i = 0; i < u1.size(); ++i) {
        // (u.grad)v - (grad v)^T u
        c1[i] = u1[i] * d1v1[i] + u2[i] * d2v1[i] - (d1v1[i] * u1[i] + d1v2[i] * u2[i]);
        c2[i] = u1[i] * d1v2[i] + u2[i] * d2v2[i] - (d2v1[i] * u1[i] + d2v2[i] * u2[i]);
    }
    VectorField2 out(u.grid());
    out.x1 = ScalarField::fromPhysical(u.grid(), c1);
    out.x2 = ScalarField::fromPhysical(u.grid(), c2);
    return out;
}

VectorField2 nlPerpForm(const VectorField2& u, const VectorField2& v)
{
    const auto u1 = u.x1.physical();
    const auto u2 = u.x2.physical();
    const auto pd = perpDiv(v).physical();
    std::vector<double> c1(u1.size()), c2(u1.size());
    for (std::size_t i = 0; i < u1.size(); ++i) {
        c1[i] = -u2[i] * pd[i];
        c2[i] = u1[i] * pd[i];
    }
    VectorField2 out(u.grid());
    out.x1 = ScalarField::fromPhysical(u.grid(), c1);
    out.x2 = ScalarField::fromPhysical(u.grid(), c2);
    return out;
}

} // namespace sqg
