#include "sqg/field.hpp"

#include "sqg/util.hpp"

#include <algorithm>
#include <cmath>

namespace sqg {

ScalarField ScalarField::fromPhysical(const Grid& g, std::span<const double> samples)
{
    ScalarField f(g);
    if (samples.size() != g.size()) throw GridError("fromPhysical: sample count mismatch");
    for (std::size_t i = 0; i < samples.size(); ++i) f.hat_[i] = cdouble(samples[i], 0.0);
    fft2_forward(f.hat_, g.n);
    f.zeroNyquist();
    return f;
}

ScalarField ScalarField::fromPhysicalComplex(const Grid& g, std::vector<cdouble> samples)
{
    ScalarField f(g);
    if (samples.size() != g.size()) throw GridError("fromPhysicalComplex: sample count mismatch");
    f.hat_ = std::move(samples);
    fft2_forward(f.hat_, g.n);
    f.zeroNyquist();
    return f;
}

std::vector<double> ScalarField::physical() const
{
    auto c = hat_;
    fft2_inverse(c, grid_.n);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].real();
    return out;
}

std::vector<cdouble> ScalarField::physicalComplex() const
{
    auto c = hat_;
    fft2_inverse(c, grid_.n);
    return c;
}

double ScalarField::maxAbsCoeff() const
{
    double m = 0.0;
    for (const auto& v : hat_) m = std::max(m, std::abs(v));
    return m;
}

double ScalarField::supportRadius(double tol) const
{
    const double thr = tol * maxAbsCoeff();
    double r2max = 0.0;
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) {
        const int k1 = grid_.freq(i);
        for (int j = 0; j < n; ++j) {
            if (std::abs(hat_[static_cast<std::size_t>(i) * n + j]) > thr) {
                const int k2 = grid_.freq(j);
                r2max = std::max(r2max, static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
            }
        }
    }
    return std::sqrt(r2max);
}

double ScalarField::maxCoeffOutsideAnnulus(double rlo, double rhi) const
{
    double m = 0.0;
    const int n = grid_.n;
    for (int i = 0; i < n; ++i) {
        const int k1 = grid_.freq(i);
        for (int j = 0; j < n; ++j) {
            const int k2 = grid_.freq(j);
            const double r = std::sqrt(static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2);
            if (r < rlo - 1e-12 || r > rhi + 1e-12)
                m = std::max(m, std::abs(hat_[static_cast<std::size_t>(i) * n + j]));
        }
    }
    return m;
}

double ScalarField::conjugateSymmetryDefect() const
{
    double m = 0.0;
    const int n = grid_.n;
    for (int k1 = -n / 2 + 1; k1 <= n / 2 - 1; ++k1)
        for (int k2 = -n / 2 + 1; k2 <= n / 2 - 1; ++k2)
            m = std::max(m, std::abs(coeff(-k1, -k2) - std::conj(coeff(k1, k2))));
    return m;
}

void ScalarField::zeroNyquist()
{
    const int n = grid_.n;
    const int ny = n / 2; // storage index of k = -n/2
    for (int j = 0; j < n; ++j) hat_[static_cast<std::size_t>(ny) * n + j] = 0.0;
    for (int i = 0; i < n; ++i) hat_[static_cast<std::size_t>(i) * n + ny] = 0.0;
}

ScalarField& ScalarField::operator+=(const ScalarField& o)
{
    for (std::size_t i = 0; i < hat_.size(); ++i) hat_[i] += o.hat_[i];
    return *this;
}
ScalarField& ScalarField::operator-=(const ScalarField& o)
{
    for (std::size_t i = 0; i < hat_.size(); ++i) hat_[i] -= o.hat_[i];
    return *this;
}
ScalarField& ScalarField::operator*=(double s)
{
    for (auto& v : hat_) v *= s;
    return *this;
}
ScalarField& ScalarField::operator*=(cdouble s)
{
    for (auto& v : hat_) v *= s;
    return *this;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b)
{
    auto pa = a.physicalComplex();
    const auto pb = b.physicalComplex();
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= pb[i];
    return ScalarField::fromPhysicalComplex(a.grid(), std::move(pa));
}

ScalarField multiplyChecked(const ScalarField& a, const ScalarField& b, double tol)
{
    const double ra = a.supportRadius(tol);
    const double rb = b.supportRadius(tol);
    if (ra + rb > a.grid().kmax())
        throw NyquistOverflow("multiplyChecked: exact product not representable on this grid");
    return multiply(a, b);
}

ScalarField multiplyPhysical(const ScalarField& a, std::span<const double> phys_b)
{
    auto pa = a.physicalComplex();
    for (std::size_t i = 0; i < pa.size(); ++i) pa[i] *= phys_b[i];
    return ScalarField::fromPhysicalComplex(a.grid(), std::move(pa));
}

double VectorField2::divergenceDefect() const
{
    const int n = grid().n;
    double mc = std::max(x1.maxAbsCoeff(), x2.maxAbsCoeff());
    if (mc == 0.0) return 0.0;
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        const int k1 = grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const int k2 = grid().freq(j);
            const std::size_t idx = static_cast<std::size_t>(i) * n + j;
            m = std::max(m, std::abs(static_cast<double>(k1) * x1.hat(idx) + static_cast<double>(k2) * x2.hat(idx)));
        }
    }
    return m / mc;
}

double VectorField2::supportRadius(double tol) const
{
    return std::max(x1.supportRadius(tol), x2.supportRadius(tol));
}

double VectorField2::maxCoeffOutsideBall(double r) const
{
    return std::max(x1.maxCoeffOutsideAnnulus(0.0, r), x2.maxCoeffOutsideAnnulus(0.0, r));
}

VectorField2& VectorField2::operator+=(const VectorField2& o)
{
    x1 += o.x1;
    x2 += o.x2;
    return *this;
}
VectorField2& VectorField2::operator-=(const VectorField2& o)
{
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
}
VectorField2& VectorField2::operator*=(double s)
{
    x1 *= s;
    x2 *= s;
    return *this;
}

double SymTensorField2::traceDefect() const
{
    const auto p11 = t11.physical();
    const auto p22 = t22.physical();
    double tr = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < p11.size(); ++i) {
        tr = std::max(tr, std::abs(p11[i] + p22[i]));
        scale = std::max(scale, std::abs(p11[i]) + std::abs(p22[i]));
    }
    return scale > 0.0 ? tr / scale : tr;
}

double SymTensorField2::supportRadius(double tol) const
{
    return std::max({t11.supportRadius(tol), t12.supportRadius(tol), t22.supportRadius(tol)});
}

double SymTensorField2::maxCoeffOutsideBall(double r) const
{
    return std::max({t11.maxCoeffOutsideAnnulus(0.0, r), t12.maxCoeffOutsideAnnulus(0.0, r),
                     t22.maxCoeffOutsideAnnulus(0.0, r)});
}

SymTensorField2 SymTensorField2::traceFreePart() const
{
    SymTensorField2 out = *this;
    ScalarField half_tr = t11;
    half_tr += t22;
    half_tr *= 0.5;
    out.t11 -= half_tr;
    out.t22 -= half_tr;
    return out;
}

SymTensorField2& SymTensorField2::operator+=(const SymTensorField2& o)
{
    t11 += o.t11;
    t12 += o.t12;
    t22 += o.t22;
    return *this;
}
SymTensorField2& SymTensorField2::operator-=(const SymTensorField2& o)
{
    t11 -= o.t11;
    t12 -= o.t12;
    t22 -= o.t22;
    return *this;
}
SymTensorField2& SymTensorField2::operator*=(double s)
{
    t11 *= s;
    t12 *= s;
    t22 *= s;
    return *this;
}

SparseModes SparseModes::fromField(const ScalarField& f, double tol)
{
    SparseModes sm;
    const int n = f.grid().n;
    for (int i = 0; i < n; ++i) {
        const int k1 = f.grid().freq(i);
        for (int j = 0; j < n; ++j) {
            const auto c = f.hat(static_cast<std::size_t>(i) * n + j);
            if (std::abs(c) > tol) sm.modes.push_back({k1, f.grid().freq(j), c});
        }
    }
    return sm;
}

cdouble SparseModes::evaluate(double x1, double x2) const
{
    cdouble acc(0.0, 0.0);
    for (const auto& m : modes) {
        const double ph = m.k1 * x1 + m.k2 * x2;
        acc += m.c * cdouble(std::cos(ph), std::sin(ph));
    }
    return acc;
}

} // namespace sqg
