#pragma once

#include "sqg/field.hpp"

#include <functional>

namespace sqg {

// C^inf step: 0 for u <= 0, 1 for u >= 1, built from exp(-1/u).
namespace bump {
double smooth_step(double u);
double smooth_step_d(double u);
// Radial symbol of the frequency bump K_{~1}: 1 on r <= 1/16, 0 on r >= 1/8.
double k_approx1(double r);
// Annulus symbol: supported on r in [1/4, 4], identically 1 on [3/8, 3].
double annulus(double r);
// Transform of the mass-one radial mollifier bump, normalized phi_hat(0) = 1.
double mollifier_hat(double z);
// One-sided time kernel profile on (1,2] (unnormalized) and its derivative.
double time_kernel(double u);
double time_kernel_d(double u);
} // namespace bump

// Generic Fourier multiplier m(k1,k2); Nyquist lines zeroed afterwards.
ScalarField applyMultiplier(const ScalarField& f, const std::function<cdouble(int, int)>& m);

ScalarField fractionalLaplacian(const ScalarField& f, double gamma);
VectorField2 fractionalLaplacian(const VectorField2& v, double gamma);

// Classical Riesz transform vector, symbol -i k_m / |k| (so that the Leray
// projection is Id + R (x) R).
VectorField2 riesz(const ScalarField& f);

ScalarField derivative(const ScalarField& f, int axis); // axis 0 -> d/dx1, 1 -> d/dx2
VectorField2 gradient(const ScalarField& f);

// x_perp = (-x2, x1) conventions
VectorField2 perp(const VectorField2& v);
ScalarField perpDiv(const VectorField2& v); // -d2 v1 + d1 v2

VectorField2 leray(const VectorField2& v);

// Inverse divergence: symmetric trace-free B f with div(B f) = P(f - mean).
SymTensorField2 antiDivergence(const VectorField2& f);
VectorField2 divergence(const SymTensorField2& t);

// Scalar potential of the gradient part: p with grad p = (Id - P)(v - mean).
ScalarField gradientPotential(const VectorField2& v);

// Frequency-shifted bump projector P_{~k lambda}; symbol K_{~1}(xi/lambda - kdir).
ScalarField bandProjector(const ScalarField& f, double kdir1, double kdir2, double lambda);
VectorField2 bandProjector(const VectorField2& v, double kdir1, double kdir2, double lambda);
// P_{q+1,k} = Leray after the band projector.
VectorField2 projectorPqk(const VectorField2& v, double kdir1, double kdir2, double lambda);

ScalarField annulusProjector(const ScalarField& f, double lambda);
VectorField2 annulusProjector(const VectorField2& v, double lambda);
SymTensorField2 annulusProjector(const SymTensorField2& t, double lambda);

ScalarField mollifySpace(const ScalarField& f, double ell);
VectorField2 mollifySpace(const VectorField2& v, double ell);
SymTensorField2 mollifySpace(const SymTensorField2& t, double ell);

// Same multiplier without the physical-resolution guard: exact per mode for
// inputs whose spectrum sits well inside the Nyquist band (checked). The
// induction step uses this for its low-frequency level-q fields, whose
// mollification scale can undercut 2 dx on the toy grid.
ScalarField mollifySpaceSpectral(const ScalarField& f, double ell);
VectorField2 mollifySpaceSpectral(const VectorField2& v, double ell);
SymTensorField2 mollifySpaceSpectral(const SymTensorField2& t, double ell);

// Momentum-SQG nonlinearity, two-term form: (u.grad)v - (grad v)^T u.
VectorField2 nlTwoTerm(const VectorField2& u, const VectorField2& v);
// Same quantity through the pointwise identity u_perp (perp_div v).
VectorField2 nlPerpForm(const VectorField2& u, const VectorField2& v);

} // namespace sqg
