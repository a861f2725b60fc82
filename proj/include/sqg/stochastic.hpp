#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sqg {

// Sampled scalar Wiener path on [-2, horizon], extended by B(t) = B(0) = 0 on
// [-2, 0]. Increments use mt19937_64 with explicit uniform extraction and
// Box-Muller so the sequence is identical across platforms and thread counts.
struct WienerPath {
    double dt = 1e-3;
    double t0 = -2.0;
    double horizon = 2.0;
    std::uint64_t seed = 0;
    std::vector<double> values; // values[i] = B(t0 + i dt)

    std::size_t indexBefore(double t) const; // greatest i with t0 + i dt <= t + tiny
    double value(double t) const;            // piecewise-linear interpolation
    double tAt(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }

    // Truncate randomness strictly after time t: values at grid times > t are
    // frozen at B(t_keep). Used by the adaptedness checks.
    WienerPath modifiedAfter(double t, double offset) const;
};

WienerPath samplePath(std::uint64_t seed, double dt, double horizon);
// B identically zero (deterministic runs).
WienerPath zeroPath(double dt, double horizon);

struct StoppingTimeSpec {
    double L = 2.0;       // > 1
    double delta = 1.0 / 16.0; // Holder offset, in (0, 1/4)
};

// max over sampled pairs s != t in [ta, tb] of |B(t)-B(s)| / |t-s|^exponent.
// Pairs: all offsets within a sliding window, dyadic long-range offsets, plus
// the anchor pair (window start, t). Documented under-estimate.
double holderSeminorm(const WienerPath& path, double exponent, double ta, double tb);

struct StoppingResult {
    double T_L;
    std::string fired; // "amplitude" | "holder" | "cap"
};

// T_L = inf{t>0: |B| >= L^{1/4}} ^ inf{t>0: ||B||_{C_t^{1/2-2delta}} >= L^{1/2}} ^ L,
// first-grid-time convention.
StoppingResult stoppingTime(const WienerPath& path, const StoppingTimeSpec& spec);

// One-sided temporal mollifier at scale ell, kernel supported in (ell, 2 ell];
// discrete convolution over the path grid with per-evaluation mass
// normalization. The output at t reads samples in [t - 2 ell, t - ell) only.
class TimeMollifier {
public:
    TimeMollifier(double ell, double dt, double t0);

    double ell() const { return ell_; }
    // mollify a sampled series aligned with the path grid
    double apply(const std::vector<double>& series, double t) const;
    double applyDerivative(const std::vector<double>& series, double t) const;
    // mollify an analytic function of time (same grid/normalization)
    double apply(const std::function<double(double)>& f, double t) const;
    double applyDerivative(const std::function<double(double)>& f, double t) const;
    // Raw kernel samples at evaluation time t. Consumers accumulate with the
    // raw weights and divide by mass once, so constants mollify exactly:
    //   M[f](t)   = sum w_i f(u_i) / mass
    //   d/dt M[f] = (sum dw_i f(u_i) * mass - sum w_i f(u_i) * dmass) / mass^2
    struct Nodes {
        std::vector<double> times;
        std::vector<double> weights;  // raw kernel values
        std::vector<double> dweights; // d/dt of the raw values
        double mass = 0.0, dmass = 0.0;
    };
    Nodes nodes(double t) const;
    double firstMoment() const; // c with mollified(t -> t) = t - c*ell, c in (1,2)

private:
    double ell_, dt_, t0_;
};

struct UpsilonBounds {
    double sup_upsilon, sup_upsilon_inv;
    double holder_upsilon, holder_upsilon_inv;
    double bound_sup;    // e^{L^{1/4}}
    double bound_holder; // m_L^2
    bool ok;
};

// Upsilon = e^B and its mollification; evaluation is gated to [-2, T_L].
class ExponentialProcess {
public:
    ExponentialProcess(const WienerPath& path, double ell, const StoppingTimeSpec& spec);

    double T_L() const { return T_L_; }
    const StoppingTimeSpec& spec() const { return spec_; }
    double upsilon(double t) const;
    double upsilonInv(double t) const { return 1.0 / upsilon(t); }
    double upsilonMollified(double t) const;
    double upsilonMollifiedDt(double t) const;
    const TimeMollifier& mollifier() const { return moll_; }
    UpsilonBounds boundsReport() const;

private:
    void gate(double t) const;
    const WienerPath path_;
    StoppingTimeSpec spec_;
    double T_L_;
    TimeMollifier moll_;
    std::vector<double> ups_; // e^{B} on the path grid
};

// Noise profile M0 and m_L. M0(t) = exp(2L + 4L rho(t)) with rho(t) = t psi(t/S),
// S = T ^ L, psi the C^inf step; rho' in [0, 2] gives 0 <= M0' <= 8 L M0.
struct NoiseProfile {
    double L, T, S;
    double mL; // sqrt(3) L^{1/4} e^{L^{1/4}/2}

    double rho(double t) const;
    double rhoPrime(double t) const;
    double logM0(double t) const { return 2.0 * L + 4.0 * L * rho(t); }
    double M0(double t) const;
    double M0prime(double t) const;
    double M0sqrt(double t) const;
    double M0sqrtPrime(double t) const; // 2 L rho'(t) M0^{1/2}
};

// Verifies the derivative bound on a dense sample; throws ProfileBoundViolation.
NoiseProfile m0Profile(double L, double T, int verifySamples = 10000);

} // namespace sqg
