#include "sqg/geometry.hpp"

#include "sqg/errors.hpp"
#include "sqg/norms.hpp"
#include "sqg/operators.hpp"

#include <cmath>

namespace sqg {

double Sym2::opNorm() const
{
    const double tr = a11 + a22;
    const double disc = std::sqrt(std::max(0.0, (a11 - a22) * (a11 - a22) + 4.0 * a12 * a12));
    return std::max(std::abs((tr + disc) / 2.0), std::abs((tr - disc) / 2.0));
}

double Sym2::nuclearNorm() const
{
    const double tr = a11 + a22;
    const double disc = std::sqrt(std::max(0.0, (a11 - a22) * (a11 - a22) + 4.0 * a12 * a12));
    return std::abs((tr + disc) / 2.0) + std::abs((tr - disc) / 2.0);
}

double Sym2::maxAbsEntry() const { return std::max({std::abs(a11), std::abs(a12), std::abs(a22)}); }

std::pair<DirectionFamily, DirectionFamily> standardFamilies()
{
    DirectionFamily f1, f2;
    f1.label = 1;
    f1.directions = {Vec2{1.0, 0.0},        Vec2{-1.0, 0.0},      Vec2{3.0 / 5, 4.0 / 5},
                     Vec2{-3.0 / 5, -4.0 / 5}, Vec2{3.0 / 5, -4.0 / 5}, Vec2{-3.0 / 5, 4.0 / 5}};
    f2.label = 2;
    f2.directions = {Vec2{0.0, 1.0},        Vec2{0.0, -1.0},      Vec2{4.0 / 5, 3.0 / 5},
                     Vec2{-4.0 / 5, -3.0 / 5}, Vec2{-4.0 / 5, 3.0 / 5}, Vec2{4.0 / 5, -3.0 / 5}};
    return {f1, f2};
}

GeometricCoefficients gammaCoefficients(const DirectionFamily& family, double floor)
{
    GeometricCoefficients gc;
    gc.family = family;

    // columns: (m11, m12, m22) of kperp (x) kperp per pair
    double M[3][3];
    for (int p = 0; p < 3; ++p) {
        const Vec2 kp = family.directions[2 * p].perp();
        M[0][p] = kp.x * kp.x;
        M[1][p] = kp.x * kp.y;
        M[2][p] = kp.y * kp.y;
    }
    // invert the 3x3
    const double det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                       M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                       M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
    if (std::abs(det) < 1e-12) throw DegenerateFamily("gammaCoefficients: kperp tensors do not span Sym(2)");
    double inv[3][3];
    inv[0][0] = (M[1][1] * M[2][2] - M[1][2] * M[2][1]) / det;
    inv[0][1] = (M[0][2] * M[2][1] - M[0][1] * M[2][2]) / det;
    inv[0][2] = (M[0][1] * M[1][2] - M[0][2] * M[1][1]) / det;
    inv[1][0] = (M[1][2] * M[2][0] - M[1][0] * M[2][2]) / det;
    inv[1][1] = (M[0][0] * M[2][2] - M[0][2] * M[2][0]) / det;
    inv[1][2] = (M[0][2] * M[1][0] - M[0][0] * M[1][2]) / det;
    inv[2][0] = (M[1][0] * M[2][1] - M[1][1] * M[2][0]) / det;
    inv[2][1] = (M[0][1] * M[2][0] - M[0][0] * M[2][1]) / det;
    inv[2][2] = (M[0][0] * M[1][1] - M[0][1] * M[1][0]) / det;

    for (int p = 0; p < 3; ++p) {
        // c_p(R) = inv[p][0] R11 + inv[p][1] R12 + inv[p][2] R22 = <A_p, R>
        gc.functionals[p] = Sym2{inv[p][0], inv[p][1] / 2.0, inv[p][2]};
        gc.atIdentity[p] = inv[p][0] + inv[p][2];
        if (gc.atIdentity[p] <= 0.0) throw DegenerateFamily("gammaCoefficients: c_p(Id) not positive");
    }

    // Largest operator-norm ball around Id on which every affine c_p stays
    // above floor * c_p(Id); the extremum of an affine functional over the
    // ball is c_p(Id) - eps * nuclear(A_p).
    double eps = 1e300;
    for (int p = 0; p < 3; ++p)
        eps = std::min(eps, gc.atIdentity[p] * (1.0 - floor) / gc.functionals[p].nuclearNorm());
    gc.epsilon = eps;

    double gs = 0.0;
    for (int p = 0; p < 3; ++p)
        gs = std::max(gs, std::sqrt(gc.atIdentity[p] + eps * gc.functionals[p].nuclearNorm()));
    gc.gammaSup = gs;
    return gc;
}

double GeometricCoefficients::gamma(int dirIndex, const Sym2& r) const
{
    const Sym2 dev = r - Sym2::identity();
    if (dev.opNorm() > epsilon * (1.0 + 1e-12))
        throw OutsideGeometricBall("gamma: argument outside B(Id, eps)");
    const double c = cp(dirIndex / 2, r);
    if (c <= 0.0) throw OutsideGeometricBall("gamma: functional not positive");
    return std::sqrt(c);
}

Sym2 GeometricCoefficients::reconstruct(const Sym2& r) const
{
    Sym2 acc{0.0, 0.0, 0.0};
    for (int i = 0; i < 6; ++i) {
        const double g = gamma(i, r);
        const Vec2 kp = family.directions[i].perp();
        acc = acc + Sym2{kp.x * kp.x, kp.x * kp.y, kp.y * kp.y} * (0.5 * g * g);
    }
    return acc;
}

std::complex<double> BuildingBlock::c(double xi1, double xi2) const
{
    const double ph = k.x * xi1 + k.y * xi2;
    return {std::cos(ph), std::sin(ph)};
}

std::array<std::complex<double>, 2> BuildingBlock::b(double xi1, double xi2) const
{
    const auto e = c(xi1, xi2);
    const std::complex<double> i(0.0, 1.0);
    const Vec2 kp = k.perp();
    return {i * kp.x * e, i * kp.y * e};
}

WavefieldReport wavefieldIdentitiesCheck(const Grid& grid, const DirectionFamily& family,
                                         const std::array<std::complex<double>, 3>& pairAmplitudes,
                                         double lambda)
{
    const int n = grid.n;
    const double dx = grid.dx();
    std::vector<double> w1(grid.size()), w2(grid.size());
    Sym2 tensorSum{0.0, 0.0, 0.0};
    double tensorResidual = 0.0;

    // a_{-k} = conj(a_k) by pair structure, so W is real
    std::array<std::complex<double>, 6> amps;
    for (int p = 0; p < 3; ++p) {
        amps[2 * p] = pairAmplitudes[p];
        amps[2 * p + 1] = std::conj(pairAmplitudes[p]);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double x1 = lambda * i * dx, x2 = lambda * j * dx;
            std::complex<double> acc1(0.0), acc2(0.0);
            std::array<std::array<std::complex<double>, 2>, 6> bk;
            for (int d = 0; d < 6; ++d) {
                BuildingBlock bb{family.directions[d]};
                bk[d] = bb.b(x1, x2);
                acc1 += amps[d] * bk[d][0];
                acc2 += amps[d] * bk[d][1];
            }
            if (std::abs(acc1.imag()) + std::abs(acc2.imag()) > 1e-11 * (std::abs(acc1) + std::abs(acc2) + 1.0))
                throw NonRealField("wavefieldIdentitiesCheck: conjugacy violated");
            w1[static_cast<std::size_t>(i) * n + j] = acc1.real();
            w2[static_cast<std::size_t>(i) * n + j] = acc2.real();

            // sum_k W_k (x) W_{-k}
            Sym2 s{0.0, 0.0, 0.0};
            for (int d = 0; d < 6; ++d) {
                const int dm = DirectionFamily::paired(d);
                const auto a = amps[d], am = amps[dm];
                s.a11 += (a * bk[d][0] * am * bk[dm][0]).real();
                s.a12 += (a * bk[d][0] * am * bk[dm][1]).real();
                s.a22 += (a * bk[d][1] * am * bk[dm][1]).real();
            }
            Sym2 expect{0.0, 0.0, 0.0};
            for (int d = 0; d < 6; ++d) {
                const Vec2 kp = family.directions[d].perp();
                const double a2 = std::norm(amps[d]);
                expect = expect + Sym2{kp.x * kp.x, kp.x * kp.y, kp.y * kp.y} * a2;
            }
            tensorResidual = std::max(tensorResidual, (s - expect).maxAbsEntry());
            tensorSum = expect;
        }
    }
    (void)tensorSum;

    VectorField2 W(grid);
    W.x1 = ScalarField::fromPhysical(grid, w1);
    W.x2 = ScalarField::fromPhysical(grid, w2);

    // div(W (x) W) vs (1/2) grad |W|^2 + (perp_div W) W_perp
    SymTensorField2 ww(grid);
    {
        std::vector<double> p11(grid.size()), p12(grid.size()), p22(grid.size());
        for (std::size_t q = 0; q < grid.size(); ++q) {
            p11[q] = w1[q] * w1[q];
            p12[q] = w1[q] * w2[q];
            p22[q] = w2[q] * w2[q];
        }
        ww.t11 = ScalarField::fromPhysical(grid, p11);
        ww.t12 = ScalarField::fromPhysical(grid, p12);
        ww.t22 = ScalarField::fromPhysical(grid, p22);
    }
    VectorField2 lhs = divergence(ww);

    ScalarField w2abs(grid);
    {
        std::vector<double> pw(grid.size());
        for (std::size_t q = 0; q < grid.size(); ++q) pw[q] = w1[q] * w1[q] + w2[q] * w2[q];
        w2abs = ScalarField::fromPhysical(grid, pw);
    }
    VectorField2 rhs = gradient(w2abs);
    rhs *= 0.5;
    {
        const auto pd = perpDiv(W).physical();
        std::vector<double> r1(grid.size()), r2(grid.size());
        for (std::size_t q = 0; q < grid.size(); ++q) {
            r1[q] = -w2[q] * pd[q];
            r2[q] = w1[q] * pd[q];
        }
        VectorField2 extra(grid);
        extra.x1 = ScalarField::fromPhysical(grid, r1);
        extra.x2 = ScalarField::fromPhysical(grid, r2);
        rhs += extra;
    }
    lhs -= rhs;
    const double scale = supNorm(W);
    WavefieldReport rep;
    rep.divergence_identity_residual = supNorm(lhs) / std::max(1.0, scale * scale);
    rep.tensor_sum_residual = tensorResidual / std::max(1.0, scale * scale);
    return rep;
}

} // namespace sqg
