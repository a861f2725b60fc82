#pragma once

#include "sqg/geometry.hpp"
#include "sqg/interval.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqg {

// Computed universal constants of the construction (rigorous enclosures).
struct PaperConstants {
    Iv epsGamma;  // geometric-lemma ball radius
    Iv gammaSup;  // sup_k ||gamma_k|| on B(Id, eps)
    Iv C1;        // band-projector C->C norm bound (l1 kernel mass)
    Iv C0;        // max{pi/2, 2^4 gammaSup C1}
    Iv CS;        // Sobolev: ||f||_inf <= CS ||f||_{H^{3-gamma1}} (lattice sum)
    Iv CG;        // admissible Gagliardo-Nirenberg constant (recorded)
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

PaperConstants deriveConstants(double gamma1, double gamma2);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ParameterSet {
    double gamma2 = 1.0;  // [1, 2)
    double gamma1 = 1.0;  // (0, 2 - gamma2/2)
    double L = 2.0;
    long b = 2;
    Rational beta{51, 100};
    double delta = 1.0 / 16.0; // Holder parameter, (0, 1/8)
    std::uint64_t a = 5;       // 5N
    int q_max = 1;
    double K = 2.0, T = 1.0, kappa = 0.5;
    bool paperFaithful = false;

    double alpha() const { return 1.0 + beta.value() / 2.0; }
};

struct SequenceValues {
    double lambda_log; // ln lambda_q
    double lambda;     // exp, or inf if not representable
    double delta_q;
    double t_q;        // -2 + sum_{1<=i<=q} delta_i^{1/2}
    double ell;        // lambda_{q+1}^{-alpha}
    double tau;        // from est 210
};

// Derived sequences at level q; throws Overflow when lambda_q exceeds double
// range and `requireRepresentable` is set.
SequenceValues sequences(const ParameterSet& p, int q, bool requireRepresentable = false);

// Exact integer a^(b^q) when it fits in 64 bits (cross-check of the log-space path).
std::optional<std::uint64_t> exactPow(std::uint64_t a, long b, int q);

struct LedgerEntry {
    std::string id;
    std::string paper_tag;
    Iv lhs, rhs;
    std::string relation; // "<", "<=", ">", ">=", "=="
    bool green = false;
    std::string note;
    std::string monotone; // e.g. "a:safe-up"
};

struct FeasibilityReport {
    std::string mode; // "paper-faithful" | "toy"
    ParameterSet params;
    PaperConstants constants;
    std::vector<LedgerEntry> entries;
    bool overall = false;

    const LedgerEntry* find(const std::string& id) const;
};

// Evaluates the full inequality ledger (est 443/445/446/153b/442/335/464-476/
// 450/470-475 plus the range checks est 315a-d). precision = 2 re-evaluates
// with the narrower widening (the doubled-precision soundness check).
FeasibilityReport certify(const ParameterSet& p, const PaperConstants& c, int precision = 1);

struct SearchOptions {
    std::optional<double> fixedBeta;
    double Lmax = 64.0;
    std::int64_t maxBetaDen = 10000;
};

// Deterministic search for the lexicographically smallest (L, b, beta, a)
// passing certify; throws SearchExhausted naming the binding constraint.
ParameterSet searchFeasible(double gamma1, double gamma2, double K, double T, double kappa,
                            const PaperConstants& c, const SearchOptions& opts = {});

// Base-scale instantiation: keep the certified (L, b) but reduce a to a
// grid-representable value in 5N, re-picking beta inside the est 153b window
// evaluated at the reduced a (est 153b/442 re-verified; est 475 applies to
// the certified asymptotic tuple, not to this grid instantiation).
ParameterSet reduceToGrid(const ParameterSet& certified, std::uint64_t aGrid, const PaperConstants& c);

// Smallest-denominator rational strictly inside (lo, hi).
std::optional<Rational> smallestDenominatorRational(double lo, double hi, std::int64_t maxDen);

} // namespace sqg
