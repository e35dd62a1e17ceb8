#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "tcqed/io.hpp"
#include "tcqed/sweep.hpp"

using namespace tcqed;

namespace {

SystemParams sym_params(double g, double J, double delta = 0.0) {
    SystemParams p;
    p.gamma1 = p.gamma2 = 1.0;
    p.kappa_l = p.kappa_r = 1.0;
    p.g1 = p.g2 = g;
    p.J = J;
    p.delta_c = p.delta_eg1 = p.delta_eg2 = delta;
    return p;
}

SweepSpec spec_of(SweepVariable v, double a, double b, int n,
                  DriveMode m = DriveMode::two_input_equal, bool lock = false) {
    SweepSpec s;
    s.variable = v;
    s.start = a;
    s.stop = b;
    s.points = n;
    s.mode = m;
    s.coupling_lock = lock;
    return s;
}

} // namespace

TEST_CASE("detuning sweep grid and endpoints") {
    const SystemParams p = sym_params(10.0, 0.0);
    const auto t = sweep_detuning(p, DriveConfig(1.0, 1.0),
                                  spec_of(SweepVariable::detuning, -40.0, 40.0, 81));
    REQUIRE(t.rows.size() == 81);
    CHECK(t.rows.front().x == -40.0);
    CHECK(t.rows.back().x == 40.0);
    CHECK(t.rows[40].x == doctest::Approx(0.0));

    // empty-cavity two-point sweep: full reflection everywhere
    const auto e = sweep_detuning(sym_params(0.0, 0.0), DriveConfig(1.0, 1.0),
                                  spec_of(SweepVariable::detuning, -5.0, 5.0, 2));
    REQUIRE(e.rows.size() == 2);
    for (const auto& row : e.rows) {
        CHECK(row.obs.out_l == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(row.obs.out_r == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(sweep_detuning(p, DriveConfig(1.0, 1.0),
                                   spec_of(SweepVariable::detuning, 0.0, 1.0, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(sweep_detuning(p, DriveConfig(1.0, 2.0),
                                   spec_of(SweepVariable::detuning, 0.0, 1.0, 5)),
                    std::invalid_argument);
}

TEST_CASE("on-resonance sweep reproduces the absorption dips") {
    // g = 10, J = 0: zeros at +-sqrt(199), strong dip at the line center too
    const SystemParams p = sym_params(10.0, 0.0);
    const auto t = sweep_detuning(p, DriveConfig(1.0, 1.0),
                                  spec_of(SweepVariable::detuning, -40.0, 40.0, 8001));
    double min_out = 1e300;
    double at = 0.0;
    for (const auto& row : t.rows) {
        if (row.obs.out_l < min_out) {
            min_out = row.obs.out_l;
            at = row.x;
        }
    }
    CHECK(min_out < 1e-4);
    CHECK(std::min(std::abs(at - std::sqrt(199.0)),
                   std::abs(at + std::sqrt(199.0))) < 0.02);
}

TEST_CASE("coupling lock holds the atom-cavity offset") {
    SystemParams p = sym_params(10.0, 20.0);
    p.delta_eg1 = p.delta_eg2 = 3.0;
    p.delta_c = 3.0 + 20.0;  // delta_ac = -20 = -J
    const auto t = sweep_detuning(p, DriveConfig(1.0, 1.0),
                                  spec_of(SweepVariable::detuning, -50.0, 10.0,
                                          6001, DriveMode::two_input_equal, true));
    // perfect absorption at delta_eg = -J +- sqrt(199)
    const double d1 = -20.0 - std::sqrt(199.0), d2 = -20.0 + std::sqrt(199.0);
    double best1 = 1e300, best2 = 1e300;
    for (const auto& row : t.rows) {
        if (std::abs(row.x - d1) < 0.5) best1 = std::min(best1, row.obs.out_l);
        if (std::abs(row.x - d2) < 0.5) best2 = std::min(best2, row.obs.out_l);
    }
    CHECK(best1 < 1e-3);
    CHECK(best2 < 1e-3);
}

TEST_CASE("single-input modes mirror each other") {
    const SystemParams p = sym_params(10.0, 15.0, 2.0);
    const auto sl = spec_of(SweepVariable::detuning, -40.0, 40.0, 501,
                            DriveMode::single_input_left);
    const auto sr = spec_of(SweepVariable::detuning, -40.0, 40.0, 501,
                            DriveMode::single_input_right);
    const auto tl = sweep_detuning(p, DriveConfig(1.0, 1.0), sl);
    const auto tr = sweep_detuning(p, DriveConfig(1.0, 1.0), sr);
    REQUIRE(tl.rows.size() == tr.rows.size());
    for (size_t i = 0; i < tl.rows.size(); ++i) {
        CHECK(tl.rows[i].obs.out_l ==
              doctest::Approx(tr.rows[i].obs.out_r).epsilon(1e-12));
        CHECK(tl.rows[i].obs.out_r ==
              doctest::Approx(tr.rows[i].obs.out_l).epsilon(1e-12));
    }
}

TEST_CASE("phase sweep symmetry and cancellation") {
    const SystemParams p = sym_params(10.0, 0.0, std::sqrt(199.0));
    const auto t = sweep_phase(p, spec_of(SweepVariable::phase, -pi, pi, 1001));
    REQUIRE(t.rows.size() == 1001);
    // even in the relative phase
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& mirror = t.rows[t.rows.size() - 1 - i];
        CHECK(t.rows[i].obs.out_l ==
              doctest::Approx(mirror.obs.out_l).epsilon(1e-8));
    }
    // dphi = 0 absorbs fully, dphi = +-pi reflects fully
    CHECK(t.rows[500].obs.out_l < 1e-20);
    CHECK(t.rows.front().obs.out_l == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(t.rows.back().obs.cavity < 1e-25);

    CHECK_THROWS_AS(sweep_phase(p, spec_of(SweepVariable::phase, -10.0, 10.0, 11)),
                    std::invalid_argument);
}

TEST_CASE("ddi sweep consistency at J = 0") {
    const SystemParams p = sym_params(10.0, 7.7, 5.0);
    const auto t = sweep_ddi(p, DriveConfig(1.0, 1.0),
                             spec_of(SweepVariable::ddi, 0.0, 20.0, 201));
    REQUIRE(t.rows.size() == 201);
    // the first row (J = 0) matches a direct evaluation with J zeroed
    SystemParams p0 = p;
    p0.J = 0.0;
    const Observables direct = observables(p0, DriveConfig(1.0, 1.0));
    CHECK(t.rows.front().obs.out_l == doctest::Approx(direct.out_l).epsilon(1e-14));
    CHECK(t.rows.front().obs.cavity == doctest::Approx(direct.cavity).epsilon(1e-14));
}

TEST_CASE("sweeps are deterministic across thread counts") {
    const SystemParams p = sym_params(10.0, 5.0, 1.0);
    const auto spec = spec_of(SweepVariable::detuning, -30.0, 30.0, 1501);
    const auto t1 = sweep_detuning(p, DriveConfig(1.0, 1.0), spec);
    const auto t2 = sweep_detuning(p, DriveConfig(1.0, 1.0), spec);
    REQUIRE(t1.rows.size() == t2.rows.size());
    for (size_t i = 0; i < t1.rows.size(); ++i) {
        CHECK(t1.rows[i].x == t2.rows[i].x);
        CHECK(t1.rows[i].obs.out_l == t2.rows[i].obs.out_l);
        CHECK(t1.rows[i].obs.out_r == t2.rows[i].obs.out_r);
        CHECK(t1.rows[i].obs.cavity == t2.rows[i].obs.cavity);
        CHECK(t1.rows[i].obs.atoms == t2.rows[i].obs.atoms);
    }
}

TEST_CASE("CSV schema and round trip") {
    const SystemParams p = sym_params(10.0, 5.0, 1.0);
    const auto t = sweep_detuning(p, DriveConfig(1.0, 1.0),
                                  spec_of(SweepVariable::detuning, -20.0, 20.0, 101));
    std::ostringstream os;
    write_table_csv(os, t);
    const std::string text = os.str();
    CHECK(text.rfind("x,out_l,out_r,cavity,atoms\n", 0) == 0);
    CHECK(text.find("\r") == std::string::npos);

    std::istringstream is(text);
    const auto rows = parse_table_csv(is);
    REQUIRE(rows.size() == t.rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].x == t.rows[i].x);
        CHECK(rows[i].obs.out_l == t.rows[i].obs.out_l);
        CHECK(rows[i].obs.out_r == t.rows[i].obs.out_r);
        CHECK(rows[i].obs.cavity == t.rows[i].obs.cavity);
        CHECK(rows[i].obs.atoms == t.rows[i].obs.atoms);
    }

    std::istringstream bad("wrong,header\n1,2,3,4,5\n");
    CHECK_THROWS_AS(parse_table_csv(bad), std::invalid_argument);
}

TEST_CASE("JSON table output") {
    const SystemParams p = sym_params(10.0, 0.0);
    const auto t = sweep_detuning(p, DriveConfig(1.0, 1.0),
                                  spec_of(SweepVariable::detuning, -1.0, 1.0, 3));
    std::ostringstream os;
    write_table_json(os, t);
    const std::string text = os.str();
    CHECK(text.find("\"columns\"") != std::string::npos);
    CHECK(text.find("\"out_l\"") != std::string::npos);
    CHECK(text.find("\"rows\"") != std::string::npos);
}

TEST_CASE("parameter JSON load") {
    const std::string doc = R"({
        "gamma1": 1.0, "gamma2": 1.0,
        "kappa_l": 1.0, "kappa_r": 1.0,
        "g1": 10.0, "g2": [10.0, 0.5],
        "J": 20.0,
        "delta_c": 2.0, "delta_eg1": 3.0, "delta_eg2": 3.0,
        "amp_l": 0.5, "phase_r": 1.25
    })";
    std::istringstream is(doc);
    const ParameterFile pf = load_params_json(is);
    CHECK(pf.params.g1 == complexd(10.0, 0.0));
    CHECK(pf.params.g2 == complexd(10.0, 0.5));
    CHECK(pf.params.J == 20.0);
    CHECK(pf.drive.amp_l() == 0.5);
    CHECK(pf.drive.amp_r() == 1.0);
    CHECK(pf.drive.phase_r() == doctest::Approx(1.25));

    // round trip through the writer
    std::ostringstream os;
    write_params_json(os, pf);
    std::istringstream is2(os.str());
    const ParameterFile back = load_params_json(is2);
    CHECK(back.params.g2 == pf.params.g2);
    CHECK(back.params.delta_c == pf.params.delta_c);
    CHECK(back.drive.amp_l() == pf.drive.amp_l());

    // unknown keys are rejected
    std::istringstream junk(R"({"gamma1": 1, "gamma2": 1, "kappa_l": 1,
        "kappa_r": 1, "g1": 1, "g2": 1, "J": 0, "delta_c": 0,
        "delta_eg1": 0, "delta_eg2": 0, "bogus": 3})");
    CHECK_THROWS_AS(load_params_json(junk), std::invalid_argument);

    // missing keys are rejected
    std::istringstream missing(R"({"gamma1": 1})");
    CHECK_THROWS_AS(load_params_json(missing), std::invalid_argument);
}
