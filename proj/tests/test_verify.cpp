#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqg/io.hpp"
#include "sqg/runner.hpp"
#include "sqg/verify.hpp"

#include <cstdio>
#include <filesystem>

using namespace sqg;

TEST_CASE("identity suite all green at N = 128")
{
    const auto rep = identitySuite(Grid(128), 1.0, 2024);
    for (const auto& e : rep.entries) {
        INFO(e.id, " measured ", e.measured);
        CHECK(e.pass);
    }
    CHECK(rep.allPass);
}

TEST_CASE("base-faithful hypothesis ratios at certified constants")
{
    const PaperConstants c = deriveConstants(1.0, 1.0);
    const ParameterSet certified = searchFeasible(1.0, 1.0, 2.0, 1.0, 0.5, c);
    const ParameterSet reduced = reduceToGrid(certified, 5, c);
    // pathwise window capped at L; ratios must hold over the whole of it
    const auto rep = hypothesisBaseFaithful(reduced, 5, c, 64, reduced.L);
    for (const auto& e : rep.entries) {
        INFO(e.id, " measured ", e.measured);
        CHECK(e.measured <= e.threshold);
    }
}

TEST_CASE("energy report: est 334 constant and est 335/336 arithmetic")
{
    ParameterSet p;
    p.gamma1 = 1.0;
    p.gamma2 = 1.0;
    p.L = 2.0;
    p.T = 1.0;
    p.b = 2;
    p.beta = Rational{51, 100};
    p.a = 5;
    p.q_max = 2;
    const PaperConstants c = deriveConstants(1.0, 1.0);
    const WienerPath path = zeroPath(1e-3, p.L + 1.0);
    StepEvaluator step(Grid(256), p, c, path);
    const auto times = step.defaultCheckTimes();

    ParameterSet certified = searchFeasible(1.0, 1.0, 2.0, 1.0, 0.5, c);
    const auto rep = energyReport(step, times, certified, c);
    const auto* e334 = rep.find("est334.constant");
    REQUIRE(e334 != nullptr);
    CHECK(e334->measured <= e334->threshold);
    const auto* q334 = rep.find("est334.quadrature");
    CHECK(q334->measured <= q334->threshold);
    const auto* e335 = rep.find("est335");
    CHECK(e335->measured <= e335->threshold);
    const auto* e336 = rep.find("est336.y0");
    CHECK(e336->measured <= e336->threshold);
}

TEST_CASE("snapshot and report round trips")
{
    namespace fs = std::filesystem;
    const std::string dir = "test_io_tmp";
    fs::create_directories(dir);

    const Grid g(32);
    ScalarField f(g);
    f.set_coeff(1, 2, cdouble(0.3, -0.1));
    f.set_coeff(-1, -2, cdouble(0.3, 0.1));
    writeSnapshot(dir + "/f.sqgf", 0.25, {&f});
    const Snapshot s = readSnapshot(dir + "/f.sqgf");
    CHECK(s.n == 32);
    CHECK(s.time == 0.25);
    const ScalarField back = ScalarField::fromPhysical(g, s.components.at(0));
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(f.hat(i) - back.hat(i)));
    CHECK(worst < 1e-14);

    writeSpectrumCsv(dir + "/f.csv", f, 1e-13);
    CHECK(fs::exists(dir + "/f.csv"));
    fs::remove_all(dir);
}

TEST_CASE("config parsing rejects unknown keys and honors values")
{
    namespace fs = std::filesystem;
    const std::string path = "test_cfg_tmp.cfg";
    {
        std::FILE* fp = std::fopen(path.c_str(), "w");
        std::fputs("mode = step\nN = 256\nseed = 9\ncheck_times = 0.5,0.75\n", fp);
        std::fclose(fp);
    }
    const RunConfig cfg = parseConfigFile(path);
    CHECK(cfg.mode == "step");
    CHECK(cfg.N == 256);
    CHECK(cfg.seed == 9);
    REQUIRE(cfg.checkTimes.size() == 2);
    CHECK(cfg.checkTimes[1] == 0.75);
    fs::remove(path);

    RunConfig c2;
    CHECK_THROWS_AS(applyKeyValue(c2, "no_such_key", "1"), ConfigError);
}
