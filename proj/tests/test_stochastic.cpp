#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqg/errors.hpp"
#include "sqg/stochastic.hpp"

#include <cmath>

using namespace sqg;

TEST_CASE("path sampling: determinism, extension, increment statistics")
{
    const WienerPath a = samplePath(42, 1e-3, 3.0);
    const WienerPath b = samplePath(42, 1e-3, 3.0);
    CHECK(a.values == b.values);

    // flat on [-2, 0]
    for (double t : {-2.0, -1.3, -0.4, 0.0}) CHECK(a.value(t) == 0.0);

    // increment variance within 5% of dt over 1e5 increments
    const double dt = 1e-4;
    const WienerPath p = samplePath(7, dt, 10.0 + 2.0 * dt);
    const std::size_t i0 = p.indexBefore(0.0);
    double var = 0.0;
    std::size_t n = 0;
    for (std::size_t i = i0 + 1; i < p.values.size() && n < 100000; ++i, ++n) {
        const double inc = p.values[i] - p.values[i - 1];
        var += inc * inc;
    }
    var /= static_cast<double>(n);
    CHECK(var == doctest::Approx(dt).epsilon(0.05));
}

TEST_CASE("Holder seminorm: constant, linear closed form, monotone window")
{
    WienerPath flat = zeroPath(1e-3, 2.0);
    CHECK(holderSeminorm(flat, 0.375, 0.0, 1.5) == 0.0);

    // linear path c t: seminorm over [0, t*] = c t*^{1-h}, extremal pair (0, t*)
    const double c = 1.7, h = 0.375, tstar = 1.25;
    WienerPath lin = zeroPath(1e-3, 2.0);
    for (std::size_t i = 0; i < lin.values.size(); ++i) lin.values[i] = c * std::max(0.0, lin.tAt(i));
    const double got = holderSeminorm(lin, h, 0.0, tstar);
    // grid-search oracle over all offsets from zero
    double oracle = 0.0;
    for (double t = 1e-3; t <= tstar + 1e-12; t += 1e-3) oracle = std::max(oracle, c * t / std::pow(t, h));
    CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(got == doctest::Approx(c * std::pow(tstar, 1.0 - h)).epsilon(2e-3));

    CHECK(holderSeminorm(lin, h, 0.0, 0.7) <= holderSeminorm(lin, h, 0.0, 1.4));
}

TEST_CASE("stopping time: cap, linear closed form, positivity, monotone in L")
{
    // zero path -> cap at L
    WienerPath flat = zeroPath(1e-3, 3.0);
    const auto capRes = stoppingTime(flat, {2.5, 1.0 / 16.0});
    CHECK(capRes.T_L == 2.5);
    CHECK(capRes.fired == "cap");

    // linear path: T_L = min(L^{1/4}/c, (L^{1/2}/c)^{1/(1/2+2 delta)}, L)
    const double dt = 1e-4;
    for (const double cc : {0.8, 1.6, 3.0, 6.0}) {
        for (const double L : {1.5, 2.0, 4.0}) {
            WienerPath lin = zeroPath(dt, L + dt);
            for (std::size_t i = 0; i < lin.values.size(); ++i)
                lin.values[i] = cc * std::max(0.0, lin.tAt(i));
            const double delta = 1.0 / 16.0;
            const double expect = std::min({std::pow(L, 0.25) / cc,
                                            std::pow(std::sqrt(L) / cc, 1.0 / (0.5 + 2.0 * delta)), L});
            const auto res = stoppingTime(lin, {L, delta});
            CHECK(std::abs(res.T_L - expect) <= dt * (1.0 + 1e-9));
        }
    }

    // positivity and monotonicity over random seeds
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const WienerPath p = samplePath(seed, 1e-3, 3.0 + 1e-3);
        double prev = 0.0;
        for (const double L : {1.5, 2.0, 3.0}) {
            const auto res = stoppingTime(p, {L, 1.0 / 16.0});
            CHECK(res.T_L > 0.0);
            CHECK(res.T_L >= prev);
            prev = res.T_L;
        }
    }

    CHECK_THROWS_AS(stoppingTime(flat, {5.0, 1.0 / 16.0}), HorizonTooShort);
}

TEST_CASE("time mollifier: mass, first moment, adaptedness window")
{
    const double ell = 0.02, dt = 1e-3;
    const TimeMollifier m(ell, dt, -2.0);

    // constants preserved to rounding (exact when the constant is 1.0)
    const auto c = m.apply([](double) { return 3.25; }, 0.7);
    CHECK(c == doctest::Approx(3.25).epsilon(1e-14));
    CHECK(m.apply([](double) { return 1.0; }, 0.7) == 1.0);

    // f(t) = t maps to t - c ell with c in (1, 2)
    const double fm = m.firstMoment();
    CHECK(fm > 1.0);
    CHECK(fm < 2.0);
    const double at = m.apply([](double u) { return u; }, 0.4);
    CHECK(at == doctest::Approx(0.4 - fm * ell).epsilon(1e-12));

    // kernel nodes strictly in [t - 2 ell, t - ell]
    const auto nd = m.nodes(0.5);
    for (double u : nd.times) {
        CHECK(u <= 0.5 - ell + 1e-12);
        CHECK(u >= 0.5 - 2.0 * ell - 1e-12);
    }

    CHECK_THROWS_AS(TimeMollifier(2.0 * dt, dt, -2.0), TimeGridTooCoarse);
}

TEST_CASE("exponential process: zero path, bounds, mollifier Holder estimate")
{
    const double dt = 1e-3;
    const StoppingTimeSpec spec{2.0, 1.0 / 16.0};

    // zero path: Upsilon and its mollification identically one (bitwise)
    const WienerPath flat = zeroPath(dt, 3.0);
    ExponentialProcess ez(flat, 0.02, spec);
    CHECK(ez.T_L() == 2.0);
    CHECK(ez.upsilon(0.5) == 1.0);
    CHECK(ez.upsilonMollified(0.5) == 1.0);
    CHECK(ez.upsilonMollified(-1.0) == 1.0);

    CHECK_THROWS_AS(ez.upsilon(2.5), OutOfWindow);

    // seeded path: est 332 bounds hold on the sampled window
    const WienerPath p = samplePath(3, dt, 3.0);
    ExponentialProcess ep(p, 0.02, spec);
    const auto b = ep.boundsReport();
    CHECK(b.ok);
    CHECK(b.sup_upsilon <= b.bound_sup);
    CHECK(b.holder_upsilon <= b.bound_holder);

    // ||Upsilon - Upsilon_l||_inf <= [Upsilon]_h (2 ell)^h on the sampled window
    const double h = 0.5 - 2.0 * spec.delta;
    const double ell = 0.02;
    double worst = 0.0;
    for (double t = 0.2; t < std::min(1.0, ep.T_L()); t += 0.05)
        worst = std::max(worst, std::abs(ep.upsilon(t) - ep.upsilonMollified(t)));
    WienerPath ePath = p;
    for (std::size_t i = 0; i < ePath.values.size(); ++i) ePath.values[i] = std::exp(p.values[i]);
    const double semi = holderSeminorm(ePath, h, -0.1, std::min(1.0, ep.T_L()));
    CHECK(worst <= semi * std::pow(2.0 * ell, h) * (1.0 + 1e-9));
}

TEST_CASE("noise profile M0 and m_L")
{
    const double L = 2.0, T = 1.0;
    const NoiseProfile prof = m0Profile(L, T);
    CHECK(prof.M0(-1.0) == doctest::Approx(std::exp(2.0 * L)).epsilon(1e-14));
    CHECK(prof.M0(std::min(T, L) + 1.0) ==
          doctest::Approx(std::exp(4.0 * L * (std::min(T, L) + 1.0) + 2.0 * L)).epsilon(1e-13));
    CHECK(prof.mL == doctest::Approx(std::sqrt(3.0) * std::pow(L, 0.25) *
                                     std::exp(0.5 * std::pow(L, 0.25))));
    // sampled derivative bound 0 <= M0' <= 8 L M0
    double worst = 0.0;
    for (int i = 0; i <= 10000; ++i) {
        const double t = -1.0 + 3.0 * i / 10000.0;
        worst = std::max(worst, prof.M0prime(t) / (8.0 * L * prof.M0(t)));
        CHECK(prof.M0prime(t) >= -1e-12);
    }
    CHECK(worst <= 1.0);
}
