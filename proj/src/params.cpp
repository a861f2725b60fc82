#include "sqg/params.hpp"

#include "sqg/fft.hpp"
#include "sqg/operators.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

namespace sqg {

long double Iv::widening = 1e-13L;

namespace {

// l1 mass of the kernel of P o P_{~k lambda} (C_x -> C_x operator norm bound),
// max over rows of the 2x2 matrix kernel, computed by direct summation.
double projectorKernelMass(double k1, double k2, double lambda, int n)
{
    const Grid g(n);
    double rowMass[2] = {0.0, 0.0};
    for (int m = 0; m < 2; ++m) {
        for (int j = 0; j < 2; ++j) {
            std::vector<cdouble> sym(g.size(), cdouble(0.0, 0.0));
            for (int i = 0; i < n; ++i) {
                const int q1 = g.freq(i);
                for (int jj = 0; jj < n; ++jj) {
                    const int q2 = g.freq(jj);
                    if (std::abs(q1) == n / 2 || std::abs(q2) == n / 2) continue;
                    const double r = std::hypot(q1 / lambda - k1, q2 / lambda - k2);
                    const double kb = bump::k_approx1(r);
                    if (kb == 0.0) continue;
                    double leray = (m == j) ? 1.0 : 0.0;
                    const double r2 = static_cast<double>(q1) * q1 + static_cast<double>(q2) * q2;
                    if (r2 > 0.0) {
                        const double qm = (m == 0 ? q1 : q2), qj = (j == 0 ? q1 : q2);
                        leray -= qm * qj / r2;
                    }
                    sym[static_cast<std::size_t>(i) * n + jj] = kb * leray;
                }
            }
            fft2_inverse(sym, n);
            double mass = 0.0;
            for (const auto& v : sym) mass += std::abs(v);
            rowMass[m] += mass / g.size();
        }
    }
    return std::max(rowMass[0], rowMass[1]);
}

Iv latticeSumCS(double gamma1)
{
    // CS^2 >= sum_{k != 0} |k|^{-2(3-gamma1)}, truncated at |k| <= R with an
    // integral tail enclosure (cells of side 1: |x| >= |k| - sqrt(2)/2).
    const double p = 2.0 * (3.0 - gamma1);
    if (p <= 2.0) throw ConfigError("latticeSumCS: needs gamma1 < 2");
    const int R = 1000;
    long double sum = 0.0L;
    for (int k1 = -R; k1 <= R; ++k1) {
        for (int k2 = -R; k2 <= R; ++k2) {
            if (k1 == 0 && k2 == 0) continue;
            const long double r2 = static_cast<long double>(k1) * k1 + static_cast<long double>(k2) * k2;
            if (r2 > static_cast<long double>(R) * R) continue;
            sum += std::pow(r2, static_cast<long double>(-p / 2.0));
        }
    }
    const long double Rm = R - std::numbers::sqrt2_v<long double>;
    const long double tail = 2.0L * std::numbers::pi_v<long double> *
                             (std::pow(Rm, static_cast<long double>(2.0 - p)) / (p - 2.0) +
                              (std::numbers::sqrt2_v<long double> / 2.0L) *
                                  std::pow(Rm, static_cast<long double>(1.0 - p)) / (p - 1.0));
    Iv s2{sum * (1.0L - 1e-12L), (sum + tail) * (1.0L + 1e-12L)};
    return iv_sqrt(s2);
}

Iv gagliardoNirenbergCG(double gamma2)
{
    // Admissible constant for est 155a via the Fourier split
    //   sum |k|^s |c_k| <= Slo(K)^{1/2} (sum|c|^2)^{1/2} + Shi(K)^{1/2} (sum |k|^6 |c|^2)^{1/2},
    // s = 2-gamma2, with integral bounds Slo(K) <= 2pi (K+sqrt2)^{2s+2}/(2s+2),
    // Shi(K) <= 2pi (K-sqrt2)^{2s-4}/(4-2s+2)... evaluated on a dyadic K-grid and
    // maximized over the ratio Y/X >= 1 (note ||L^3 f|| >= ||f|| for mean-zero f).
    const double s = 2.0 - gamma2;
    const double front = 2.0 + std::pow(2.0, gamma2 - 1.0); // sup-norm + Holder-seminorm folding
    auto slo = [&](double K) { return 2.0 * std::numbers::pi * std::pow(K + 1.5, 2.0 * s + 2.0) / (2.0 * s + 2.0); };
    auto shi = [&](double K) {
        const double q = 6.0 - 2.0 * s; // decay power, > 2
        return 2.0 * std::numbers::pi * std::pow(std::max(1.0, K - 1.5), 2.0 - q) / (q - 2.0);
    };
    const double theta = gamma2 / 3.0;
    double worst = 0.0;
    for (double lr = 0.0; lr <= 40.0; lr += 0.125) {
        const double ratio = std::exp(lr); // Y/X
        double best = 1e300;
        for (double K = 4.0; K <= 1e9; K *= 1.25)
            best = std::min(best, std::sqrt(slo(K)) + std::sqrt(shi(K)) * ratio);
        worst = std::max(worst, best / std::pow(ratio, 1.0 - theta));
    }
    const double cg = front * worst / (2.0 * std::numbers::pi);
    return {cg * (1.0 - 1e-9), cg * (1.0 + 1e-9)};
}

} // namespace

PaperConstants deriveConstants(double gamma1, double gamma2)
{
    static std::map<std::pair<double, double>, PaperConstants> cache;
    const auto key = std::make_pair(gamma1, gamma2);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    PaperConstants c;
    c.gamma1 = gamma1;
    c.gamma2 = gamma2;

    const auto [f1, f2] = standardFamilies();
    const auto g1 = gammaCoefficients(f1);
    const auto g2 = gammaCoefficients(f2);
    const double eps = std::min(g1.epsilon, g2.epsilon);
    const double gs = std::max(g1.gammaSup, g2.gammaSup);
    c.epsGamma = Iv{eps * (1.0L - 1e-12L), eps * (1.0L + 1e-12L)};
    c.gammaSup = Iv{gs * (1.0L - 1e-12L), gs * (1.0L + 1e-12L)};

    // reference-scale kernel masses, padded upward (see decisions ledger)
    double mass = 0.0;
    for (const double lambda : {16.0, 32.0, 64.0}) {
        const int n = static_cast<int>(8 * lambda);
        for (int d = 0; d < 6; d += 2) {
            mass = std::max(mass, projectorKernelMass(f1.directions[d].x, f1.directions[d].y, lambda, n));
            mass = std::max(mass, projectorKernelMass(f2.directions[d].x, f2.directions[d].y, lambda, n));
        }
    }
    c.C1 = Iv{mass * (1.0L - 1e-9L), mass * 1.05L};
    c.C0 = iv_max(Iv(std::numbers::pi / 2.0), Iv(16.0) * c.gammaSup * c.C1);
    c.CS = latticeSumCS(gamma1);
    c.CG = gagliardoNirenbergCG(gamma2);

    cache[key] = c;
    return c;
}

SequenceValues sequences(const ParameterSet& p, int q, bool requireRepresentable)
{
    if (q > p.q_max) throw ConfigError("sequences: q beyond q_max");
    SequenceValues s{};
    const double lna = std::log(static_cast<double>(p.a));
    const double beta = p.beta.value();
    auto lamLog = [&](int qq) { return std::pow(static_cast<double>(p.b), qq) * lna; };
    s.lambda_log = lamLog(q);
    s.lambda = s.lambda_log < 700.0 ? std::exp(s.lambda_log) : std::numeric_limits<double>::infinity();
    if (requireRepresentable && !std::isfinite(s.lambda))
        throw Overflow("sequences: lambda_q exceeds floating range; use log-space accessors");
    s.delta_q = std::exp(-2.0 * beta * s.lambda_log);
    s.t_q = -2.0;
    for (int i = 1; i <= q; ++i) s.t_q += std::exp(-beta * lamLog(i));
    if (s.t_q >= -1.0) throw ConfigError("sequences: t_q >= -1 (est 463 violated; a^{b beta} too small)");
    const double lamLog1 = lamLog(q + 1);
    s.ell = std::exp(-p.alpha() * lamLog1);
    // tau^{-1} = ell^{-1/2} lambda^{(3-gamma2)/2} delta^{1/4}
    const double logTauInv =
        0.5 * p.alpha() * lamLog1 + 0.5 * (3.0 - p.gamma2) * lamLog1 - 0.5 * beta * lamLog1;
    s.tau = std::exp(-logTauInv);
    return s;
}

std::optional<std::uint64_t> exactPow(std::uint64_t a, long b, int q)
{
    // a^(b^q) if it fits in 64 bits
    std::uint64_t e = 1;
    for (int i = 0; i < q; ++i) {
        if (e > 100) return std::nullopt;
        e *= static_cast<std::uint64_t>(b);
    }
    if (e > 100) return std::nullopt;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
        r *= a;
    }
    return r;
}

const LedgerEntry* FeasibilityReport::find(const std::string& id) const
{
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

namespace {

LedgerEntry makeEntry(std::string id, std::string tag, Iv lhs, std::string rel, Iv rhs,
                      std::string mono = "")
{
    LedgerEntry e;
    e.id = std::move(id);
    e.paper_tag = std::move(tag);
    e.lhs = lhs;
    e.rhs = rhs;
    e.relation = std::move(rel);
    e.monotone = std::move(mono);
    if (e.relation == "<")
        e.green = certifiedLess(lhs, rhs);
    else if (e.relation == "<=")
        e.green = certifiedLeq(lhs, rhs);
    else if (e.relation == ">")
        e.green = certifiedLess(rhs, lhs);
    else if (e.relation == ">=")
        e.green = certifiedLeq(rhs, lhs);
    else {
        // equality of stored vs derived value, up to double rounding
        const long double scale = std::max({std::abs(lhs.hi), std::abs(rhs.hi), 1.0L});
        e.green = lhs.lo <= rhs.hi + 1e-12L * scale && rhs.lo <= lhs.hi + 1e-12L * scale;
    }
    return e;
}

// RHS of est 445 / est 153b: sqrt(eps) e^{L/2} / (sqrt(m_L) sqrt((4L+1/2)/pi + CS/sqrt2))
Iv rhs153(const Iv& L, const PaperConstants& c)
{
    const Iv mL = iv_sqrt(Iv(3.0)) * iv_pow(L, Iv(0.25)) * iv_exp(Iv(0.5) * iv_pow(L, Iv(0.25)));
    const Iv inner = (Iv(4.0) * L + Iv(0.5)) / Iv(std::numbers::pi) + c.CS / iv_sqrt(Iv(2.0));
    return iv_sqrt(c.epsGamma) * iv_exp(L / Iv(2.0)) / (iv_sqrt(mL) * iv_sqrt(inner));
}

Iv lhs153(const Iv& g2, const PaperConstants& c)
{
    return iv_max(Iv(2.0), iv_pow(Iv(2.0), Iv(2.5) - g2 / Iv(2.0)) * c.C0 / Iv(std::numbers::pi));
}

} // namespace

FeasibilityReport certify(const ParameterSet& p, const PaperConstants& c, int precision)
{
    const long double savedWidening = Iv::widening;
    Iv::widening = precision >= 2 ? 1e-17L : 1e-13L;

    FeasibilityReport rep;
    rep.mode = p.paperFaithful ? "paper-faithful" : "toy";
    rep.params = p;
    rep.constants = c;

    const Iv g1(p.gamma1), g2(p.gamma2), L(p.L), b(static_cast<double>(p.b));
    const Iv beta = Iv(static_cast<long double>(p.beta.num)) / Iv(static_cast<long double>(p.beta.den));
    const Iv alpha = Iv(1.0) + beta / Iv(2.0);
    const Iv delta(p.delta);
    const Iv lna = iv_log(Iv(static_cast<double>(p.a)));
    auto& E = rep.entries;

    E.push_back(makeEntry("est315a.lo", "gamma2 in [1,2)", Iv(1.0), "<=", g2));
    E.push_back(makeEntry("est315a.hi", "gamma2 in [1,2)", g2, "<", Iv(2.0)));
    E.push_back(makeEntry("est315d.lo", "gamma1 in (0, 2-gamma2/2)", Iv(0.0), "<", g1));
    E.push_back(makeEntry("est315d.hi", "gamma1 in (0, 2-gamma2/2)", g1, "<", Iv(2.0) - g2 / Iv(2.0)));
    E.push_back(makeEntry("est315b.lo", "1-gamma2/2 < beta", Iv(1.0) - g2 / Iv(2.0), "<", beta));
    E.push_back(makeEntry("est315b.hi", "beta < (12-6 gamma2)/11", beta, "<",
                          (Iv(12.0) - Iv(6.0) * g2) / Iv(11.0)));
    E.push_back(makeEntry("est315c", "alpha = 1 + beta/2", Iv(p.alpha()), "==", alpha));
    E.push_back(makeEntry("delta.range", "delta in (0, 1/8) for est 473/474", delta, "<", Iv(0.125)));

    E.push_back(makeEntry("est443", "L >= 44/(10-5 gamma2)", L, ">=",
                          Iv(44.0) / (Iv(10.0) - Iv(5.0) * g2), "L:safe-up"));
    E.push_back(makeEntry("est445", "LHS of est 153b < RHS at this L", lhs153(g2, c), "<", rhs153(L, c)));
    E.push_back(makeEntry("est446", "b > 11 L^2/(2-gamma2) + 5", b, ">",
                          Iv(11.0) * L * L / (Iv(2.0) - g2) + Iv(5.0), "b:safe-up"));

    const Iv mid153 = iv_exp(b * (Iv(-1.0) + g2 / Iv(2.0) + beta) * lna);
    E.push_back(makeEntry("est153b.lower", "max{2, 2^{5/2-g2/2} C0/pi} < a^{b(-1+g2/2+beta)}",
                          lhs153(g2, c), "<", mid153, "a:safe-up b:safe-up"));
    E.push_back(makeEntry("est153b.upper", "a^{b(-1+g2/2+beta)} <= sqrt(eps) e^{L/2}/...",
                          mid153, "<=", rhs153(L, c), "a:can-flip-up b:can-flip-up"));
    E.push_back(makeEntry("est442", "2 <= a^{b beta} (compared in logs)", iv_log(Iv(2.0)), "<=",
                          b * beta * lna, "a:safe-up b:safe-up"));

    E.push_back(makeEntry("est335.first", "sqrt2 e^{2LT} > (sqrt8+sqrt2) e^{2 sqrt L} (in logs)",
                          iv_log(iv_sqrt(Iv(2.0))) + Iv(2.0) * L * Iv(p.T), ">",
                          iv_log(iv_sqrt(Iv(8.0)) + iv_sqrt(Iv(2.0))) + Iv(2.0) * iv_sqrt(L),
                          "L:safe-up"));
    E.push_back(makeEntry("est335.second", "L > [ln(K e^{T/2})]^2", L, ">",
                          iv_pow(iv_log(Iv(p.K) * iv_exp(Iv(p.T) / Iv(2.0))), Iv(2.0)), "L:safe-up"));

    auto bGreater = [&](const std::string& id, const std::string& tag, Iv num, Iv den) {
        if (den.lo <= 0.0L) {
            auto e = makeEntry(id, tag, b, ">", Iv(1e308));
            e.green = false;
            e.note = "denominator not certifiably positive";
            E.push_back(e);
            return;
        }
        E.push_back(makeEntry(id, tag, b, ">", num / den, "b:safe-up"));
    };

    bGreater("est464", "b > 22(L^2+1)/(5+3 gamma2)", Iv(22.0) * (L * L + Iv(1.0)), Iv(5.0) + Iv(3.0) * g2);
    bGreater("est465.a", "b > 2[L^2+3-g2-beta]/(alpha+3-g2-beta)",
             Iv(2.0) * (L * L + Iv(3.0) - g2 - beta), alpha + Iv(3.0) - g2 - beta);
    bGreater("est465.b", "b > 2L^2/(-alpha+3-g2-beta)", Iv(2.0) * L * L, Iv(3.0) - alpha - g2 - beta);
    bGreater("est466", "b > (L+2-g2-beta)/(2-g2-beta)", L + Iv(2.0) - g2 - beta, Iv(2.0) - g2 - beta);
    bGreater("est467", "b > 2[L^2+3-g2-beta]/(alpha+3-g2-beta)",
             Iv(2.0) * (L * L + Iv(3.0) - g2 - beta), alpha + Iv(3.0) - g2 - beta);
    bGreater("est450", "b > 2[2-g2-beta+L^2]/(1-g2+alpha-beta)",
             Iv(2.0) * (Iv(2.0) - g2 - beta + L * L), Iv(1.0) - g2 + alpha - beta);
    bGreater("est468", "b > (3-g2-beta+L)/(1+beta)", Iv(3.0) - g2 - beta + L, Iv(1.0) + beta);
    bGreater("est469", "b > (3-g2-beta+L)/(1+beta)", Iv(3.0) - g2 - beta + L, Iv(1.0) + beta);
    bGreater("est472.a", "b > (1/alpha)[L^2+(9-3g2-5beta)/2]",
             L * L + (Iv(9.0) - Iv(3.0) * g2 - Iv(5.0) * beta) / Iv(2.0), alpha);
    bGreater("est472.b", "b > (L^2+9-3g2-4beta)/(2 alpha)",
             L * L + Iv(9.0) - Iv(3.0) * g2 - Iv(4.0) * beta, Iv(2.0) * alpha);
    const Iv halfMinus2d = Iv(0.5) - Iv(2.0) * delta;
    bGreater("est473", "b > L/(alpha(1/2-2delta)-2+g2+2beta)", L,
             alpha * halfMinus2d - Iv(2.0) + g2 + Iv(2.0) * beta);
    bGreater("est474.a", "b > (2-g2-beta+L)/(alpha(1/2-2delta)+beta)", Iv(2.0) - g2 - beta + L,
             alpha * halfMinus2d + beta);
    bGreater("est474.b", "b > (3-g2-2beta+L)/(alpha(1/2-2delta))", Iv(3.0) - g2 - Iv(2.0) * beta + L,
             alpha * halfMinus2d);
    bGreater("est476", "b > (2-beta+L)/(g2+beta)", Iv(2.0) - beta + L, g2 + beta);
    bGreater("est470", "b > (L^2+3-g2-beta)/alpha", L * L + Iv(3.0) - g2 - beta, alpha);
    bGreater("est471.a", "b > 2L/(-alpha-1+g2+3beta)", Iv(2.0) * L,
             g2 + Iv(3.0) * beta - alpha - Iv(1.0));
    bGreater("est471.b", "b > (1+L)/(-1+g2+2beta)", Iv(1.0) + L, g2 + Iv(2.0) * beta - Iv(1.0));

    E.push_back(makeEntry("est475", "a >= e^8", Iv(static_cast<double>(p.a)), ">=", iv_exp(Iv(8.0)),
                          "a:safe-up"));

    rep.overall = true;
    for (const auto& e : E) rep.overall = rep.overall && e.green;
    Iv::widening = savedWidening;
    return rep;
}

std::optional<Rational> smallestDenominatorRational(double lo, double hi, std::int64_t maxDen)
{
    if (!(lo < hi)) return std::nullopt;
    // Stern-Brocot walk; assumes the interval may straddle integers.
    const double fl = std::floor(lo);
    if (fl + 1.0 > lo && fl + 1.0 < hi) return Rational{static_cast<std::int64_t>(fl) + 1, 1};
    // reduce to the fractional interval (lo - fl, hi - fl) in (0,1)
    std::function<std::optional<Rational>(double, double, int)> rec =
        [&](double l, double h, int depth) -> std::optional<Rational> {
        if (depth > 128) return std::nullopt;
        const double f = std::floor(l);
        if (f + 1.0 > l && f + 1.0 < h) return Rational{static_cast<std::int64_t>(f) + 1, 1};
        // strip integer part, invert
        const double l2 = l - f, h2 = h - f;
        auto inner = rec(1.0 / h2, 1.0 / l2, depth + 1);
        if (!inner) return std::nullopt;
        // x = f + 1/(p/q) = (f p + q)/p
        Rational r{inner->den + static_cast<std::int64_t>(f) * inner->num, inner->num};
        return r;
    };
    auto r = rec(lo, hi, 0);
    if (!r || r->den > maxDen || r->den <= 0) return std::nullopt;
    return r;
}

ParameterSet reduceToGrid(const ParameterSet& certified, std::uint64_t aGrid, const PaperConstants& c)
{
    if (aGrid % 5 != 0) throw ConfigError("reduceToGrid: a must lie in 5N");
    ParameterSet p = certified;
    p.a = aGrid;
    const Iv lhs = lhs153(Iv(p.gamma2), c);
    const Iv rhs = rhs153(Iv(p.L), c);
    const double lna = std::log(static_cast<double>(aGrid));
    const double base = 1.0 - p.gamma2 / 2.0;
    const double blo = base + static_cast<double>(iv_log(lhs).hi) / (p.b * lna) * (1.0 + 1e-12) + 1e-15;
    const double bhi = std::min(base + static_cast<double>(iv_log(rhs).lo) / (p.b * lna) * (1.0 - 1e-12),
                                (12.0 - 6.0 * p.gamma2) / 11.0 * (1.0 - 1e-12));
    const auto r = smallestDenominatorRational(blo, bhi, 100000);
    if (!r) throw SearchExhausted("reduceToGrid: est 153b window empty at the reduced a");
    p.beta = *r;
    const auto rep = certify(p, c);
    for (const auto& e : rep.entries) {
        if (e.id == "est475") continue; // asymptotic-a entry, waived for the grid instantiation
        if (!e.green) throw SearchExhausted("reduceToGrid: ledger entry " + e.id + " red at reduced a");
    }
    return p;
}

ParameterSet searchFeasible(double gamma1, double gamma2, double K, double T, double kappa,
                            const PaperConstants& c, const SearchOptions& opts)
{
    if (opts.fixedBeta) {
        const double lo = 1.0 - gamma2 / 2.0, hi = (12.0 - 6.0 * gamma2) / 11.0;
        if (*opts.fixedBeta <= lo || *opts.fixedBeta >= hi)
            throw SearchExhausted("searchFeasible: requested beta violates est 315b");
    }
    std::string binding = "est443/est335 lower bound on L";
    const double Lstart = std::max(44.0 / (10.0 - 5.0 * gamma2),
                                   std::pow(std::log(K * std::exp(T / 2.0)), 2.0) * (1.0 + 1e-9));
    for (double L = std::ceil(Lstart * 4.0) / 4.0; L <= opts.Lmax; L += 0.25) {
        ParameterSet p;
        p.gamma1 = gamma1;
        p.gamma2 = gamma2;
        p.L = L;
        p.K = K;
        p.T = T;
        p.kappa = kappa;
        p.paperFaithful = true;

        const Iv lhs = lhs153(Iv(gamma2), c);
        const Iv rhs = rhs153(Iv(L), c);
        if (!certifiedLess(lhs, rhs)) {
            binding = "est445";
            continue;
        }
        p.b = static_cast<long>(std::floor(11.0 * L * L / (2.0 - gamma2) + 5.0)) + 1;

        // a fixed at the smallest 5N above e^8 (est 475); beta from the est 153b window
        p.a = static_cast<std::uint64_t>(std::ceil(std::exp(8.0) / 5.0)) * 5;
        const double lna = std::log(static_cast<double>(p.a));
        const double base = 1.0 - gamma2 / 2.0;
        double blo = base + static_cast<double>(iv_log(lhs).hi) / (p.b * lna) * (1.0 + 1e-12) + 1e-15;
        double bhi = base + static_cast<double>(iv_log(rhs).lo) / (p.b * lna) * (1.0 - 1e-12);
        blo = std::max(blo, base * (1.0 + 1e-12));
        bhi = std::min(bhi, (12.0 - 6.0 * gamma2) / 11.0 * (1.0 - 1e-12));
        if (opts.fixedBeta) {
            if (*opts.fixedBeta <= blo || *opts.fixedBeta >= bhi) {
                binding = "est153b window at fixed beta";
                continue;
            }
            p.beta = Rational{static_cast<std::int64_t>(std::llround(*opts.fixedBeta * 1e6)), 1000000};
        } else {
            auto r = smallestDenominatorRational(blo, bhi, opts.maxBetaDen);
            if (!r) {
                binding = "est153b window admits no rational beta (den <= 1e4)";
                continue;
            }
            p.beta = *r;
        }
        auto rep = certify(p, c);
        if (rep.overall) return p;
        for (const auto& e : rep.entries)
            if (!e.green) {
                binding = e.id;
                break;
            }
    }
    throw SearchExhausted("searchFeasible: exhausted L grid; binding constraint: " + binding);
}

} // namespace sqg
