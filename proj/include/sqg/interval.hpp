#pragma once

#include "sqg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sqg {

// Outward-rounded interval arithmetic. Endpoints are computed in long double
// and widened by a relative margin that dominates the evaluation error of the
// library functions involved; `Iv::widening` selects the margin (standard or
// the doubled-precision re-evaluation mode).
struct Iv {
    long double lo = 0.0L, hi = 0.0L;

    static long double widening; // relative outward margin

    Iv() = default;
    Iv(long double x) : lo(x), hi(x) {}
    Iv(long double l, long double h) : lo(l), hi(h) {}

    static Iv exact(long double x) { return {x, x}; }

    double loD() const { return static_cast<double>(lo); }
    double hiD() const { return static_cast<double>(hi); }
    double mid() const { return static_cast<double>((lo + hi) / 2.0L); }

    Iv widened() const
    {
        const long double m = widening;
        const long double wl = std::abs(lo) * m + 1e-300L;
        const long double wh = std::abs(hi) * m + 1e-300L;
        return {lo - wl, hi + wh};
    }
};

inline Iv operator+(Iv a, Iv b) { return Iv{a.lo + b.lo, a.hi + b.hi}.widened(); }
inline Iv operator-(Iv a, Iv b) { return Iv{a.lo - b.hi, a.hi - b.lo}.widened(); }
inline Iv operator-(Iv a) { return {-a.hi, -a.lo}; }

inline Iv operator*(Iv a, Iv b)
{
    const long double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return Iv{std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})}.widened();
}

inline Iv operator/(Iv a, Iv b)
{
    if (b.lo <= 0.0L && b.hi >= 0.0L) throw Overflow("interval division by an interval containing zero");
    const long double c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return Iv{std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})}.widened();
}

inline Iv iv_exp(Iv a)
{
    if (a.hi > 11000.0L) throw Overflow("iv_exp: exponent too large");
    return Iv{std::exp(a.lo), std::exp(a.hi)}.widened();
}

inline Iv iv_log(Iv a)
{
    if (a.lo <= 0.0L) throw Overflow("iv_log: argument not positive");
    return Iv{std::log(a.lo), std::log(a.hi)}.widened();
}

inline Iv iv_sqrt(Iv a)
{
    if (a.lo < 0.0L) throw Overflow("iv_sqrt: negative argument");
    return Iv{std::sqrt(a.lo), std::sqrt(a.hi)}.widened();
}

// a^x for a > 0 via exp(x log a)
inline Iv iv_pow(Iv a, Iv x) { return iv_exp(x * iv_log(a)); }

inline Iv iv_max(Iv a, Iv b) { return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }

// Certified strict/non-strict comparisons: true only when provable.
inline bool certifiedLess(Iv a, Iv b) { return a.hi < b.lo; }
inline bool certifiedLeq(Iv a, Iv b) { return a.hi <= b.lo; }

} // namespace sqg
