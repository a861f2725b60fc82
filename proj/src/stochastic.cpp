#include "sqg/stochastic.hpp"

#include "sqg/errors.hpp"
#include "sqg/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace sqg {

namespace {

double uniform01(std::mt19937_64& rng)
{
    // 53-bit mantissa in (0, 1]; implementation-independent
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

} // namespace

std::size_t WienerPath::indexBefore(double t) const
{
    if (t < t0 - 1e-12) throw OutOfWindow("WienerPath: time before domain");
    const double u = (t - t0) / dt + 1e-9;
    const std::size_t i = static_cast<std::size_t>(std::max(0.0, u));
    return std::min(i, values.size() - 1);
}

double WienerPath::value(double t) const
{
    // hold-left convention: B(t) reads the most recent grid sample, so every
    // evaluation is adapted to the filtration up to t exactly
    return values[indexBefore(t)];
}

WienerPath WienerPath::modifiedAfter(double t, double offset) const
{
    WienerPath out = *this;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        if (tAt(i) > t + 1e-12) out.values[i] += offset * (1.0 + 0.1 * std::sin(static_cast<double>(i)));
    return out;
}

WienerPath samplePath(std::uint64_t seed, double dt, double horizon)
{
    WienerPath p;
    p.dt = dt;
    p.horizon = horizon;
    p.seed = seed;
    const std::size_t nflat = static_cast<std::size_t>(std::llround(2.0 / dt));
    const std::size_t n = nflat + static_cast<std::size_t>(std::ceil(horizon / dt)) + 1;
    p.values.assign(n + 1, 0.0);
    std::mt19937_64 rng(seed);
    const double sdt = std::sqrt(dt);
    for (std::size_t i = nflat; i + 1 <= n; ++i) {
        const double u1 = uniform01(rng);
        const double u2 = uniform01(rng);
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        p.values[i + 1] = p.values[i] + sdt * z;
    }
    return p;
}

WienerPath zeroPath(double dt, double horizon)
{
    WienerPath p;
    p.dt = dt;
    p.horizon = horizon;
    p.seed = 0;
    const std::size_t n = static_cast<std::size_t>(std::llround(2.0 / dt)) +
                          static_cast<std::size_t>(std::ceil(horizon / dt)) + 2;
    p.values.assign(n, 0.0);
    return p;
}

namespace {

// Pair offsets probed against index i: a sliding window plus dyadic
// long-range offsets plus the anchor pair (start of window, i).
constexpr std::size_t kSlidingWindow = 256;

double pairMax(const WienerPath& path, double exponent, std::size_t i0, std::size_t i)
{
    double best = 0.0;
    const double bi = path.values[i];
    auto probe = [&](std::size_t j) {
        if (j < i0 || j >= i) return;
        const double ds = (static_cast<double>(i) - static_cast<double>(j)) * path.dt;
        best = std::max(best, std::abs(bi - path.values[j]) / std::pow(ds, exponent));
    };
    const std::size_t wlo = i > kSlidingWindow ? i - kSlidingWindow : 0;
    for (std::size_t j = std::max(i0, wlo); j < i; ++j) probe(j);
    for (std::size_t off = kSlidingWindow; off < i; off <<= 1) probe(i - off);
    probe(i0);
    return best;
}

} // namespace

double holderSeminorm(const WienerPath& path, double exponent, double ta, double tb)
{
    if (exponent <= 0.0 || exponent >= 1.0) throw ConfigError("holderSeminorm: exponent outside (0,1)");
    const std::size_t i0 = path.indexBefore(ta);
    const std::size_t i1 = path.indexBefore(tb);
    double best = 0.0;
    for (std::size_t i = i0 + 1; i <= i1; ++i) best = std::max(best, pairMax(path, exponent, i0, i));
    return best;
}

StoppingResult stoppingTime(const WienerPath& path, const StoppingTimeSpec& spec)
{
    if (spec.L <= 1.0) throw ConfigError("stoppingTime: L must exceed 1");
    const double tend = path.t0 + (path.values.size() - 1) * path.dt;
    if (tend + 1e-9 < spec.L) throw HorizonTooShort("stoppingTime: path horizon shorter than L");
    const double ampThr = std::pow(spec.L, 0.25);
    const double holThr = std::sqrt(spec.L);
    const double h = 0.5 - 2.0 * spec.delta;
    const std::size_t i0 = path.indexBefore(0.0);
    double running = 0.0;
    for (std::size_t i = i0 + 1; i < path.values.size(); ++i) {
        const double t = path.tAt(i);
        if (t > spec.L + 1e-12) break;
        if (std::abs(path.values[i]) >= ampThr) return {t, "amplitude"};
        running = std::max(running, pairMax(path, h, i0, i));
        if (running >= holThr) return {t, "holder"};
    }
    return {spec.L, "cap"};
}

TimeMollifier::TimeMollifier(double ell, double dt, double t0) : ell_(ell), dt_(dt), t0_(t0)
{
    if (ell < 4.0 * dt) throw TimeGridTooCoarse("TimeMollifier: ell must cover at least 4 path steps");
}

TimeMollifier::Nodes TimeMollifier::nodes(double t) const
{
    Nodes nd;
    // kernel support: s in (ell, 2 ell], samples at u = t - s
    const double ulo = t - 2.0 * ell_;
    const double uhi = t - ell_;
    const long jlo = static_cast<long>(std::ceil((ulo - t0_) / dt_ - 1e-9));
    const long jhi = static_cast<long>(std::floor((uhi - t0_) / dt_ + 1e-9));
    for (long j = jlo; j <= jhi; ++j) {
        const double u = t0_ + j * dt_;
        const double s = (t - u) / ell_;
        const double w = bump::time_kernel(s);
        if (w <= 0.0) continue;
        nd.times.push_back(u);
        nd.weights.push_back(w);
        nd.dweights.push_back(bump::time_kernel_d(s) / ell_);
        nd.mass += w;
        nd.dmass += nd.dweights.back();
    }
    if (nd.times.empty()) throw InsufficientHistory("TimeMollifier: no samples under the kernel");
    return nd;
}

namespace {

double seriesAt(const std::vector<double>& series, double u, double t0, double dt)
{
    const long j = static_cast<long>(std::llround((u - t0) / dt));
    if (j < 0 || static_cast<std::size_t>(j) >= series.size())
        throw InsufficientHistory("TimeMollifier: series does not cover the kernel");
    return series[static_cast<std::size_t>(j)];
}

} // namespace

double TimeMollifier::apply(const std::vector<double>& series, double t) const
{
    const auto nd = nodes(t);
    double acc = 0.0;
    for (std::size_t i = 0; i < nd.times.size(); ++i)
        acc += nd.weights[i] * seriesAt(series, nd.times[i], t0_, dt_);
    return acc / nd.mass;
}

double TimeMollifier::applyDerivative(const std::vector<double>& series, double t) const
{
    const auto nd = nodes(t);
    double a = 0.0, da = 0.0;
    for (std::size_t i = 0; i < nd.times.size(); ++i) {
        const double v = seriesAt(series, nd.times[i], t0_, dt_);
        a += nd.weights[i] * v;
        da += nd.dweights[i] * v;
    }
    return (da * nd.mass - a * nd.dmass) / (nd.mass * nd.mass);
}

double TimeMollifier::apply(const std::function<double(double)>& f, double t) const
{
    const auto nd = nodes(t);
    double acc = 0.0;
    for (std::size_t i = 0; i < nd.times.size(); ++i) acc += nd.weights[i] * f(nd.times[i]);
    return acc / nd.mass;
}

double TimeMollifier::applyDerivative(const std::function<double(double)>& f, double t) const
{
    const auto nd = nodes(t);
    double a = 0.0, da = 0.0;
    for (std::size_t i = 0; i < nd.times.size(); ++i) {
        a += nd.weights[i] * f(nd.times[i]);
        da += nd.dweights[i] * f(nd.times[i]);
    }
    return (da * nd.mass - a * nd.dmass) / (nd.mass * nd.mass);
}

double TimeMollifier::firstMoment() const
{
    // mollifying f(t) = t at t = 0 gives -c ell
    const auto nd = nodes(0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < nd.times.size(); ++i) acc += nd.weights[i] * nd.times[i];
    return -(acc / nd.mass) / ell_;
}

ExponentialProcess::ExponentialProcess(const WienerPath& path, double ell, const StoppingTimeSpec& spec)
    : path_(path), spec_(spec), T_L_(stoppingTime(path, spec).T_L), moll_(ell, path.dt, path.t0)
{
    ups_.resize(path_.values.size());
    for (std::size_t i = 0; i < ups_.size(); ++i) ups_[i] = std::exp(path_.values[i]);
}

void ExponentialProcess::gate(double t) const
{
    if (t < path_.t0 - 1e-12 || t > T_L_ + 1e-12)
        throw OutOfWindow("ExponentialProcess: evaluation outside [-2, T_L]");
}

double ExponentialProcess::upsilon(double t) const
{
    gate(t);
    return std::exp(path_.value(t));
}

double ExponentialProcess::upsilonMollified(double t) const
{
    gate(t);
    return moll_.apply(ups_, t);
}

double ExponentialProcess::upsilonMollifiedDt(double t) const
{
    gate(t);
    return moll_.applyDerivative(ups_, t);
}

UpsilonBounds ExponentialProcess::boundsReport() const
{
    UpsilonBounds b{};
    const double h = 0.5 - 2.0 * spec_.delta;
    // samples strictly before T_L; the discrete stopping convention can
    // overshoot at T_L itself by one increment
    const std::size_t i1 = path_.indexBefore(std::max(path_.t0, T_L_ - path_.dt));
    double supU = 0.0, supUi = 0.0;
    for (std::size_t i = 0; i <= i1; ++i) {
        supU = std::max(supU, ups_[i]);
        supUi = std::max(supUi, 1.0 / ups_[i]);
    }
    b.sup_upsilon = supU;
    b.sup_upsilon_inv = supUi;

    WienerPath expPath = path_;
    expPath.values = ups_;
    b.holder_upsilon = holderSeminorm(expPath, h, 0.0, std::max(0.0, T_L_ - path_.dt));
    for (auto& v : expPath.values) v = 1.0 / v;
    b.holder_upsilon_inv = holderSeminorm(expPath, h, 0.0, std::max(0.0, T_L_ - path_.dt));

    const double L = spec_.L;
    b.bound_sup = std::exp(std::pow(L, 0.25));
    const double mL = std::sqrt(3.0) * std::pow(L, 0.25) * std::exp(0.5 * std::pow(L, 0.25));
    b.bound_holder = mL * mL;
    b.ok = supU <= b.bound_sup && supUi <= b.bound_sup && b.holder_upsilon <= b.bound_holder &&
           b.holder_upsilon_inv <= b.bound_holder;
    return b;
}

double NoiseProfile::rho(double t) const
{
    if (t <= 0.0) return 0.0;
    if (t >= S) return t;
    return t * bump::smooth_step(t / S);
}

double NoiseProfile::rhoPrime(double t) const
{
    if (t <= 0.0) return 0.0;
    if (t >= S) return 1.0;
    const double u = t / S;
    return bump::smooth_step(u) + u * bump::smooth_step_d(u);
}

double NoiseProfile::M0(double t) const { return std::exp(logM0(t)); }
double NoiseProfile::M0prime(double t) const { return 4.0 * L * rhoPrime(t) * M0(t); }
double NoiseProfile::M0sqrt(double t) const { return std::exp(0.5 * logM0(t)); }
double NoiseProfile::M0sqrtPrime(double t) const { return 2.0 * L * rhoPrime(t) * M0sqrt(t); }

NoiseProfile m0Profile(double L, double T, int verifySamples)
{
    if (L <= 0.0 || T <= 0.0) throw ConfigError("m0Profile: L and T must be positive");
    NoiseProfile p;
    p.L = L;
    p.T = T;
    p.S = std::min(T, L);
    p.mL = std::sqrt(3.0) * std::pow(L, 0.25) * std::exp(0.5 * std::pow(L, 0.25));
    for (int i = 0; i <= verifySamples; ++i) {
        const double t = -1.0 + (p.S + 2.0) * i / verifySamples;
        const double rp = p.rhoPrime(t);
        if (rp < -1e-15 || rp > 2.0)
            throw ProfileBoundViolation("m0Profile: derivative bound 0 <= M0' <= 8 L M0 fails");
    }
    return p;
}

} // namespace sqg
