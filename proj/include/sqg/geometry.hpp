#pragma once

#include "sqg/field.hpp"

#include <array>
#include <complex>

namespace sqg {

struct Vec2 {
    double x, y;
    Vec2 perp() const { return {-y, x}; }
};

struct Sym2 {
    double a11, a12, a22;

    static Sym2 identity() { return {1.0, 0.0, 1.0}; }
    Sym2 operator-(const Sym2& o) const { return {a11 - o.a11, a12 - o.a12, a22 - o.a22}; }
    Sym2 operator+(const Sym2& o) const { return {a11 + o.a11, a12 + o.a12, a22 + o.a22}; }
    Sym2 operator*(double s) const { return {a11 * s, a12 * s, a22 * s}; }
    // operator norm = spectral radius for symmetric matrices
    double opNorm() const;
    // nuclear norm = |lambda1| + |lambda2|
    double nuclearNorm() const;
    double maxAbsEntry() const;
};

// Direction family: three +/- pairs of unit vectors with 5k integer.
struct DirectionFamily {
    int label = 0; // 1 or 2
    std::array<Vec2, 6> directions;

    // Index of -k for direction i (pairs stored adjacently: 2p, 2p+1).
    static int paired(int i) { return i ^ 1; }
};

// Gamma_1 = {+-(1,0), +-(3/5,4/5), +-(3/5,-4/5)},
// Gamma_2 = {+-(0,1), +-(4/5,3/5), +-(-4/5,3/5)}.
std::pair<DirectionFamily, DirectionFamily> standardFamilies();

// Geometric-lemma coefficients for one family: affine functionals c_p on
// symmetric matrices with R = sum_p c_p(R) kperp_p (x) kperp_p and
// gamma_k = sqrt(c_p) on the ball B(Id, eps).
struct GeometricCoefficients {
    DirectionFamily family;
    std::array<Sym2, 3> functionals;  // c_p(R) = <A_p, R> entrywise pairing
    std::array<double, 3> atIdentity; // c_p(Id)
    double epsilon;                   // ball radius with c_p >= floor * c_p(Id)
    double gammaSup;                  // sup over pairs of sqrt(max c_p on the ball)

    double cp(int pair, const Sym2& r) const
    {
        const Sym2& a = functionals[pair];
        return a.a11 * r.a11 + 2.0 * a.a12 * r.a12 + a.a22 * r.a22;
    }
    // gamma for direction index i (pair i/2); throws OutsideGeometricBall.
    double gamma(int dirIndex, const Sym2& r) const;
    // R reconstructed as (1/2) sum_k gamma_k(R)^2 kperp (x) kperp.
    Sym2 reconstruct(const Sym2& r) const;
};

GeometricCoefficients gammaCoefficients(const DirectionFamily& family, double floor = 1e-3);

// Unit-circle building blocks b_k(xi) = i kperp e^{ik.xi}, c_k(xi) = e^{ik.xi}.
struct BuildingBlock {
    Vec2 k;
    std::complex<double> c(double xi1, double xi2) const;
    std::array<std::complex<double>, 2> b(double xi1, double xi2) const;
};

// Residuals of the wave-field identities
//   div(W (x) W) = (1/2) grad |W|^2 + (perp_div W) W_perp
//   sum_k W_k (x) W_{-k} = sum_k |a_k|^2 kperp (x) kperp
// for W = sum_k a_k b_k(lambda k . x) on the given grid.
struct WavefieldReport {
    double divergence_identity_residual;
    double tensor_sum_residual;
};
WavefieldReport wavefieldIdentitiesCheck(const Grid& grid, const DirectionFamily& family,
                                         const std::array<std::complex<double>, 3>& pairAmplitudes,
                                         double lambda);

} // namespace sqg
