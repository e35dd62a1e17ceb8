#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tcqed/cpa.hpp"
#include "tcqed/steady_state.hpp"

using namespace tcqed;

namespace {

SystemParams sym_params(double g, double gamma, double kappa, double J,
                        double delta_eg, double delta_c) {
    SystemParams p;
    p.gamma1 = p.gamma2 = gamma;
    p.kappa_l = p.kappa_r = kappa;
    p.g1 = p.g2 = g;
    p.J = J;
    p.delta_eg1 = p.delta_eg2 = delta_eg;
    p.delta_c = delta_c;
    return p;
}

} // namespace

TEST_CASE("cpa_residuals examples") {
    // line center, g = 10, kappa = gamma = 1, J = 0:
    // r1 = 1*(1) - 2*100*1 = -199, r2 = 0
    auto r = cpa_residuals(sym_params(10.0, 1.0, 1.0, 0.0, 0.0, 0.0));
    CHECK(r.r1 == doctest::Approx(-199.0));
    CHECK(r.r2 == doctest::Approx(0.0));

    // at an analytic solution both residuals vanish
    const double A = std::sqrt(199.0);
    r = cpa_residuals(sym_params(10.0, 1.0, 1.0, 0.0, A, A));
    CHECK(std::abs(r.r1) < 1e-10);
    CHECK(std::abs(r.r2) < 1e-10);

    // no coupling: r1 = kappa(gamma^2 + J^2 - Deg^2) + 2 Dc Deg gamma
    r = cpa_residuals(sym_params(0.0, 2.0, 3.0, 4.0, 1.0, 5.0));
    CHECK(r.r1 == doctest::Approx(3.0 * (4.0 + 16.0 - 1.0) + 2.0 * 5.0 * 2.0));
    CHECK(r.r2 == doctest::Approx(2.0 * 3.0 * 2.0 * 1.0 - 5.0 * 19.0));

    SystemParams asym = sym_params(10.0, 1.0, 1.0, 0.0, 0.0, 0.0);
    asym.kappa_r = 2.0;
    CHECK_THROWS_AS(cpa_residuals(asym), std::invalid_argument);
}

TEST_CASE("cpa_detuning_solutions examples") {
    // kappa = gamma = 1, g = 10, J = 0: delta_eg = delta_c = +-sqrt(199)
    auto sols = cpa_detuning_solutions(10.0, 1.0, 1.0, 0.0);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].delta_eg == doctest::Approx(std::sqrt(199.0)));
    CHECK(sols[0].delta_c == doctest::Approx(std::sqrt(199.0)));
    CHECK(sols[0].branch == CpaBranch::plus_minus);
    CHECK(sols[1].delta_eg == doctest::Approx(-std::sqrt(199.0)));
    CHECK(sols[1].delta_c == doctest::Approx(-std::sqrt(199.0)));
    CHECK(sols[1].branch == CpaBranch::minus_plus);

    // DDI shifts the emitter branch only
    sols = cpa_detuning_solutions(10.0, 1.0, 1.0, 20.0);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0].delta_eg == doctest::Approx(-20.0 + std::sqrt(199.0)));
    CHECK(sols[0].delta_c == doctest::Approx(std::sqrt(199.0)));
    CHECK(sols[0].delta_ac == doctest::Approx(-20.0));
    CHECK(sols[1].delta_ac == doctest::Approx(-20.0));

    // weak coupling: no real solution
    CHECK(cpa_detuning_solutions(0.5, 1.0, 1.0, 0.0).empty());
}

TEST_CASE("analytic solutions null the outputs (soundness)") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> rate(0.2, 3.0);
    std::uniform_real_distribution<double> coup(3.0, 15.0);
    std::uniform_real_distribution<double> ddi(-25.0, 25.0);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        const double g = coup(rng), gamma = rate(rng), kappa = rate(rng);
        const double J = ddi(rng);
        for (const auto& s : cpa_detuning_solutions(g, gamma, kappa, J)) {
            const SystemParams p =
                sym_params(g, gamma, kappa, J, s.delta_eg, s.delta_c);
            auto r = cpa_residuals(p);
            CHECK(std::abs(r.r1) < 1e-8);
            CHECK(std::abs(r.r2) < 1e-8);
            const SteadyState st = solve_steady_state(p, DriveConfig(1.0, 1.0));
            CHECK(std::norm(st.a_out_l) < 1e-18);
            CHECK(std::norm(st.a_out_r) < 1e-18);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("kappa = gamma locks delta_ac to -J") {
    std::mt19937 rng(73);
    std::uniform_real_distribution<double> rate(0.2, 3.0);
    std::uniform_real_distribution<double> coup(3.0, 15.0);
    std::uniform_real_distribution<double> ddi(-25.0, 25.0);
    for (int i = 0; i < 500; ++i) {
        const double r = rate(rng), J = ddi(rng);
        for (const auto& s : cpa_detuning_solutions(coup(rng), r, r, J))
            CHECK(s.delta_ac == doctest::Approx(-J).epsilon(1e-12));
    }
}

TEST_CASE("single_input_scattering") {
    // at a perfect-absorption point the halves split exactly
    auto sols = cpa_detuning_solutions(10.0, 1.0, 1.0, 20.0);
    REQUIRE(!sols.empty());
    const SystemParams p =
        sym_params(10.0, 1.0, 1.0, 20.0, sols[0].delta_eg, sols[0].delta_c);
    auto [tl, tr] = single_input_scattering(p);
    CHECK(std::abs(tl - complexd(0.5, 0.0)) < 1e-10);
    CHECK(std::abs(tr - complexd(-0.5, 0.0)) < 1e-10);

    // empty resonant cavity: full reflection with a phase flip
    const SystemParams empty = sym_params(0.0, 1.0, 1.0, 0.0, 0.0, 0.0);
    auto [rl, rr] = single_input_scattering(empty);
    CHECK(std::abs(rl - complexd(0.0, 0.0)) < 1e-14);
    CHECK(std::abs(rr - complexd(-1.0, 0.0)) < 1e-14);
}

TEST_CASE("golden_section_minimize") {
    const double xm = golden_section_minimize(
        [](double x) { return (x - 2.5) * (x - 2.5) + 1.0; }, 0.0, 10.0, 1e-10);
    CHECK(xm == doctest::Approx(2.5).epsilon(1e-8));

    // abscissa accuracy at a smooth minimum is limited to ~sqrt(eps)
    const double xc = golden_section_minimize(
        [](double x) { return std::cos(x); }, 2.0, 4.5, 1e-12);
    CHECK(xc == doctest::Approx(pi).epsilon(1e-7));
}

TEST_CASE("find_absorption_minima recovers the analytic points") {
    // J = 0, g = 10, kappa = gamma = 1, delta_ac = 0: minima at +-sqrt(199)
    SystemParams p = sym_params(10.0, 1.0, 1.0, 0.0, 0.0, 0.0);
    auto minima = find_absorption_minima(p, DriveConfig(1.0, 1.0),
                                         -40.0, 40.0, 4001);
    REQUIRE(minima.size() == 2);
    CHECK(minima[0].delta == doctest::Approx(-std::sqrt(199.0)).epsilon(1e-4));
    CHECK(minima[1].delta == doctest::Approx(std::sqrt(199.0)).epsilon(1e-4));
    CHECK(minima[0].depth < 1e-8);
    CHECK(minima[1].depth < 1e-8);

    // results are sorted
    CHECK(minima[0].delta < minima[1].delta);

    CHECK_THROWS_AS(find_absorption_minima(p, DriveConfig(1.0, 1.0),
                                           -40.0, 40.0, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_absorption_minima(p, DriveConfig(1.0, 1.0),
                                           40.0, -40.0, 4001),
                    std::invalid_argument);
    CHECK_THROWS_AS(find_absorption_minima(p, DriveConfig(1.0, 2.0),
                                           -40.0, 40.0, 4001),
                    std::invalid_argument);
}

TEST_CASE("find_absorption_minima with fixed atom-cavity offset") {
    // delta_ac = -J with kappa = gamma: the sweep passes exactly through
    // both perfect-absorption points
    auto sols = cpa_detuning_solutions(10.0, 1.0, 1.0, 20.0);
    REQUIRE(sols.size() == 2);
    SystemParams p = sym_params(10.0, 1.0, 1.0, 20.0, 1.0, 1.0 + 20.0);
    auto minima = find_absorption_minima(p, DriveConfig(1.0, 1.0),
                                         -50.0, 10.0, 4001);
    REQUIRE(minima.size() == 2);
    CHECK(minima[0].delta == doctest::Approx(sols[1].delta_eg).epsilon(1e-4));
    CHECK(minima[1].delta == doctest::Approx(sols[0].delta_eg).epsilon(1e-4));
    CHECK(minima[0].depth < 1e-8);
    CHECK(minima[1].depth < 1e-8);
}
