#pragma once

#include "sqg/field.hpp"
#include "sqg/iteration.hpp"
#include "sqg/params.hpp"
#include "sqg/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace sqg {

using json = nlohmann::ordered_json;

// Field snapshot format (bit-exact): magic "SQGF", version u32 = 1, N u32,
// component count u32, time f64, then components as row-major f64 physical
// samples; little-endian.
void writeSnapshot(const std::string& path, double time, const std::vector<const ScalarField*>& components);
struct Snapshot {
    int n = 0;
    double time = 0.0;
    std::vector<std::vector<double>> components;
};
Snapshot readSnapshot(const std::string& path);

// CSV spectrum export: rows (k1, k2, re, im), nonzero coefficients only.
void writeSpectrumCsv(const std::string& path, const ScalarField& f, double tol = 0.0);

// CSV noise path export: rows (t, B, Upsilon).
void writePathCsv(const std::string& path, const WienerPath& p);

json toJson(const Iv& iv);
json toJson(const PaperConstants& c);
json toJson(const ParameterSet& p);
json toJson(const FeasibilityReport& rep);
json toJson(const VerificationReport& rep);
json toJson(const StressBreakdown& s);
json toJson(const OscillationReport& o);
json toJson(const FrameChecks& f);
json toJson(const DeepOscillationReport& d);

void writeJson(const std::string& path, const json& j);

} // namespace sqg
