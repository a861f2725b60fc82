#pragma once

#include "sqg/fft.hpp"
#include "sqg/grid.hpp"

#include <span>
#include <vector>

namespace sqg {

// Scalar field on the torus, stored as lattice Fourier coefficients c_k with
//
//     f(x) = sum_k c_k e^{i k.x},
//
// so the physical samples are the plain inverse DFT of the stored array and
// the integral against e^{-ik.x} equals (2pi)^2 c_k.  All norm conventions
// are collected in norms.hpp.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid_(g), hat_(g.size(), cdouble(0.0, 0.0)) {}

    static ScalarField fromPhysical(const Grid& g, std::span<const double> samples);
    static ScalarField fromPhysicalComplex(const Grid& g, std::vector<cdouble> samples);

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return hat_.size(); }

    cdouble& hat(std::size_t idx) { return hat_[idx]; }
    const cdouble& hat(std::size_t idx) const { return hat_[idx]; }
    cdouble coeff(int k1, int k2) const
    {
        return hat_[static_cast<std::size_t>(grid_.index_of(k1)) * grid_.n + grid_.index_of(k2)];
    }
    void set_coeff(int k1, int k2, cdouble v)
    {
        hat_[static_cast<std::size_t>(grid_.index_of(k1)) * grid_.n + grid_.index_of(k2)] = v;
    }
    std::vector<cdouble>& data() { return hat_; }
    const std::vector<cdouble>& data() const { return hat_; }

    // Physical samples (real part; imaginary residue of a real field is at
    // roundoff and asserted by callers that require it).
    std::vector<double> physical() const;
    std::vector<cdouble> physicalComplex() const;

    double maxAbsCoeff() const;
    // Largest |k| (Euclidean) carrying a coefficient above tol * maxAbsCoeff.
    double supportRadius(double tol = 1e-13) const;
    // Max |c_k| over modes with |k| outside [rlo, rhi].
    double maxCoeffOutsideAnnulus(double rlo, double rhi) const;
    // Max |c(-k) - conj(c(k))| over the lattice: real-valuedness defect.
    double conjugateSymmetryDefect() const;

    void zeroNyquist();
    void zeroMean() { hat_[0] = 0.0; }
    cdouble mean() const { return hat_[0]; }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double s);
    ScalarField& operator*=(cdouble s);
    friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
    friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
    friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

private:
    Grid grid_;
    std::vector<cdouble> hat_;
};

// Pointwise product of two fields formed in physical space. The caller is
// responsible for resolution (see multiplyChecked for the guarded version).
ScalarField multiply(const ScalarField& a, const ScalarField& b);
// Same, but raises NyquistOverflow when the exact product cannot be
// represented (sum of support radii reaches the usable band).
ScalarField multiplyChecked(const ScalarField& a, const ScalarField& b, double tol = 1e-13);
// Pointwise product with a complex physical array already in hand.
ScalarField multiplyPhysical(const ScalarField& a, std::span<const double> phys_b);

struct VectorField2 {
    ScalarField x1, x2;

    VectorField2() = default;
    explicit VectorField2(const Grid& g) : x1(g), x2(g) {}
    const Grid& grid() const { return x1.grid(); }

    // max_k |k.v(k)| / max_k |v(k)|: divergence defect of the coefficients
    double divergenceDefect() const;
    double supportRadius(double tol = 1e-13) const;
    double maxCoeffOutsideBall(double r) const;

    VectorField2& operator+=(const VectorField2& o);
    VectorField2& operator-=(const VectorField2& o);
    VectorField2& operator*=(double s);
    friend VectorField2 operator+(VectorField2 a, const VectorField2& b) { return a += b; }
    friend VectorField2 operator-(VectorField2 a, const VectorField2& b) { return a -= b; }
    friend VectorField2 operator*(double s, VectorField2 a) { return a *= s; }
};

// Symmetric 2x2 tensor field; t21 == t12 structurally.
struct SymTensorField2 {
    ScalarField t11, t12, t22;

    SymTensorField2() = default;
    explicit SymTensorField2(const Grid& g) : t11(g), t12(g), t22(g) {}
    const Grid& grid() const { return t11.grid(); }

    // sup-norm of the trace field relative to the entry scale
    double traceDefect() const;
    double supportRadius(double tol = 1e-13) const;
    double maxCoeffOutsideBall(double r) const;
    SymTensorField2 traceFreePart() const;

    SymTensorField2& operator+=(const SymTensorField2& o);
    SymTensorField2& operator-=(const SymTensorField2& o);
    SymTensorField2& operator*=(double s);
    friend SymTensorField2 operator+(SymTensorField2 a, const SymTensorField2& b) { return a += b; }
    friend SymTensorField2 operator-(SymTensorField2 a, const SymTensorField2& b) { return a -= b; }
    friend SymTensorField2 operator*(double s, SymTensorField2 a) { return a *= s; }
};

// Active-mode list for evaluating a band-limited field at off-grid points.
struct SparseModes {
    struct Mode {
        int k1, k2;
        cdouble c;
    };
    std::vector<Mode> modes;

    static SparseModes fromField(const ScalarField& f, double tol = 1e-300);
    cdouble evaluate(double x1, double x2) const;
};

} // namespace sqg
