#pragma once

#include "sqg/field.hpp"

namespace sqg {

// Norm conventions (declared once, used everywhere):
//  * coefficients: f(x) = sum_k c_k e^{ik.x}
//  * L2:      ||f||^2   = int |f|^2 dx           = (2pi)^2 sum |c_k|^2
//  * Hs dot:  ||f||^2   = (2pi)^2 sum |k|^{2s} |c_k|^2
//  * C^0:     grid max of |f|
//  * C^N:     sum over 0 <= |alpha| <= N of sup |D^alpha f| (spectral derivatives)
//  * C^s, s in (0,1): sup norm plus a Holder seminorm sampled over dyadic
//    grid offsets (an under-estimate; offsets include the injectivity-scale
//    diameter so single-mode fields are measured exactly up to grid density)
//  * vector / tensor fields: max over components.

double supNorm(const ScalarField& f);
double supNorm(const VectorField2& v);
double supNorm(const SymTensorField2& t);

double cnNorm(const ScalarField& f, int order);
double cnNorm(const VectorField2& v, int order);

double holderSeminorm(const ScalarField& f, double s);
// ||f||_{C^s} = sup + seminorm for fractional s in (0,1); falls back to
// cnNorm for integer s.
double holderNorm(const ScalarField& f, double s);
double holderNorm(const VectorField2& v, double s);

double l2Norm(const ScalarField& f);
double l2Norm(const VectorField2& v);

double hsDotNorm(const ScalarField& f, double s);
double hsDotNorm(const VectorField2& v, double s);

} // namespace sqg
