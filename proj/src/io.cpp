#include "sqg/io.hpp"

#include "sqg/errors.hpp"

#include <cstring>
#include <fstream>

namespace sqg {

namespace {

void putU32(std::ostream& os, std::uint32_t v)
{
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff), static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t getU32(std::istream& is)
{
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void putF64(std::ostream& os, double v)
{
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

double getF64(std::istream& is)
{
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

} // namespace

void writeSnapshot(const std::string& path, double time, const std::vector<const ScalarField*>& components)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw MissingArtifact("writeSnapshot: cannot open " + path);
    os.write("SQGF", 4);
    putU32(os, 1);
    putU32(os, static_cast<std::uint32_t>(components.at(0)->grid().n));
    putU32(os, static_cast<std::uint32_t>(components.size()));
    putF64(os, time);
    for (const auto* c : components) {
        const auto p = c->physical();
        for (double v : p) putF64(os, v);
    }
}

Snapshot readSnapshot(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw MissingArtifact("readSnapshot: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (std::memcmp(magic, "SQGF", 4) != 0) throw MissingArtifact("readSnapshot: bad magic");
    if (getU32(is) != 1) throw MissingArtifact("readSnapshot: unsupported version");
    Snapshot s;
    s.n = static_cast<int>(getU32(is));
    const std::uint32_t nc = getU32(is);
    s.time = getF64(is);
    s.components.resize(nc);
    for (auto& comp : s.components) {
        comp.resize(static_cast<std::size_t>(s.n) * s.n);
        for (auto& v : comp) v = getF64(is);
    }
    return s;
}

void writeSpectrumCsv(const std::string& path, const ScalarField& f, double tol)
{
    std::ofstream os(path);
    if (!os) throw MissingArtifact("writeSpectrumCsv: cannot open " + path);
    os << "k1,k2,re,im\n";
    os.precision(17);
    const int n = f.grid().n;
    const double thr = tol * f.maxAbsCoeff();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto c = f.hat(static_cast<std::size_t>(i) * n + j);
            if (std::abs(c) > thr)
                os << f.grid().freq(i) << ',' << f.grid().freq(j) << ',' << c.real() << ',' << c.imag()
                   << '\n';
        }
    }
}

void writePathCsv(const std::string& path, const WienerPath& p)
{
    std::ofstream os(path);
    if (!os) throw MissingArtifact("writePathCsv: cannot open " + path);
    os << "t,B,Upsilon\n";
    os.precision(17);
    for (std::size_t i = 0; i < p.values.size(); ++i)
        os << p.tAt(i) << ',' << p.values[i] << ',' << std::exp(p.values[i]) << '\n';
}

json toJson(const Iv& iv) { return json::array({iv.loD(), iv.hiD()}); }

json toJson(const PaperConstants& c)
{
    json j;
    j["eps_gamma"] = toJson(c.epsGamma);
    j["gamma_sup"] = toJson(c.gammaSup);
    j["C1"] = toJson(c.C1);
    j["C0"] = toJson(c.C0);
    j["CS"] = toJson(c.CS);
    j["CG"] = toJson(c.CG);
    j["gamma1"] = c.gamma1;
    j["gamma2"] = c.gamma2;
    return j;
}

json toJson(const ParameterSet& p)
{
    json j;
    j["gamma1"] = p.gamma1;
    j["gamma2"] = p.gamma2;
    j["L"] = p.L;
    j["b"] = p.b;
    j["beta"] = {{"num", p.beta.num}, {"den", p.beta.den}, {"value", p.beta.value()}};
    j["alpha"] = p.alpha();
    j["delta"] = p.delta;
    j["a"] = p.a;
    j["K"] = p.K;
    j["T"] = p.T;
    j["kappa"] = p.kappa;
    j["paper_faithful"] = p.paperFaithful;
    return j;
}

json toJson(const FeasibilityReport& rep)
{
    json j;
    j["mode"] = rep.mode;
    j["params"] = toJson(rep.params);
    j["constants"] = toJson(rep.constants);
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["id"] = e.id;
        je["paper_tag"] = e.paper_tag;
        je["lhs"] = toJson(e.lhs);
        je["rhs"] = toJson(e.rhs);
        je["relation"] = e.relation;
        je["verdict"] = e.green ? "green" : "red";
        if (!e.note.empty()) je["note"] = e.note;
        if (!e.monotone.empty()) je["monotone"] = e.monotone;
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["overall"] = rep.overall ? "green" : "red";
    return j;
}

json toJson(const VerificationReport& rep)
{
    json j;
    j["suite"] = rep.suite;
    json entries = json::array();
    for (const auto& e : rep.entries) {
        json je;
        je["id"] = e.id;
        je["paper_tag"] = e.paper_tag;
        je["measured"] = e.measured;
        if (!e.informational) je["threshold"] = e.threshold;
        je["verdict"] = e.informational ? "info" : (e.pass ? "pass" : "fail");
        if (!e.note.empty()) je["note"] = e.note;
        entries.push_back(je);
    }
    j["entries"] = entries;
    j["all_pass"] = rep.allPass;
    return j;
}

json toJson(const StressBreakdown& s)
{
    json j;
    j["norms"] = s.norms;
    j["ratios_vs_next_level"] = s.ratios;
    return j;
}

json toJson(const OscillationReport& o)
{
    json j;
    j["O1_tracefree_residual"] = o.o1_tracefree_residual;
    j["O1_reference"] = o.o1_reference;
    j["cancellation_ok"] = o.cancellation_ok;
    j["approx_norm"] = o.approx_norm;
    j["high_norm"] = o.high_norm;
    j["low_inferred_norm"] = o.low_inferred_norm;
    return j;
}

json toJson(const FrameChecks& f)
{
    json j;
    j["w_imag_defect"] = f.w_imag_defect;
    j["w_support_outside"] = f.w_support_outside;
    j["y1_support_outside"] = f.y1_support_outside;
    j["r1_support_outside"] = f.r1_support_outside;
    j["w_sup"] = f.w_sup;
    j["w_bound_350a"] = f.w_bound_350a;
    j["y_dist_sup"] = f.y_dist_sup;
    j["y_dist_bound_327"] = f.y_dist_bound_327;
    j["residual_rel"] = f.residual_rel;
    j["pressure_crosscheck"] = f.pressure_crosscheck;
    j["mollified_eq_residual"] = f.mollified_eq_residual;
    j["com2_sup"] = f.com2_sup_zero_noise;
    return j;
}

json toJson(const DeepOscillationReport& d)
{
    json j;
    j["ro_rel_diff"] = d.ro_rel_diff;
    j["high_rel_diff"] = d.high_rel_diff;
    j["low_rel_diff"] = d.low_rel_diff;
    j["ok"] = d.ok;
    return j;
}

void writeJson(const std::string& path, const json& j)
{
    std::ofstream os(path);
    if (!os) throw MissingArtifact("writeJson: cannot open " + path);
    os << j.dump(2) << '\n';
}

} // namespace sqg
