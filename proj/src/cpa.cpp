#include "tcqed/cpa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tcqed/steady_state.hpp"

namespace tcqed {

namespace {

constexpr double kRefineTol = 1e-6;

void require_symmetric(const SystemParams& p, const char* who) {
    if (p.gamma1 != p.gamma2)
        throw std::invalid_argument(std::string(who) + ": gamma1 != gamma2");
    if (p.delta_eg1 != p.delta_eg2)
        throw std::invalid_argument(std::string(who) + ": delta_eg1 != delta_eg2");
    if (p.g1 != p.g2)
        throw std::invalid_argument(std::string(who) + ": g1 != g2");
    if (p.g1.imag() != 0.0)
        throw std::invalid_argument(std::string(who) + ": coupling must be real");
    if (p.kappa_l != p.kappa_r)
        throw std::invalid_argument(std::string(who) + ": kappa_l != kappa_r");
}

} // namespace

CpaResidual cpa_residuals(const SystemParams& p) {
    require_symmetric(p, "cpa_residuals");
    const double kappa = p.kappa_l;
    const double gamma = p.gamma1;
    const double g = p.g1.real();
    const double deg = p.delta_eg1;
    const double dc = p.delta_c;
    const double q = -deg * deg + gamma * gamma + p.J * p.J;

    CpaResidual r;
    r.r1 = kappa * q + 2.0 * dc * deg * gamma - 2.0 * g * g * gamma;
    r.r2 = 2.0 * kappa * gamma * deg - dc * q - 2.0 * g * g * (deg - p.J);
    return r;
}

std::vector<CpaSolution> cpa_detuning_solutions(double g, double gamma,
                                                double kappa, double J) {
    if (!(g > 0.0) || !(gamma > 0.0) || !(kappa > 0.0))
        throw std::invalid_argument("cpa_detuning_solutions: g, gamma, kappa must be > 0");

    const double rad_eg = 2.0 * g * g * gamma / kappa - gamma * gamma;
    const double rad_c = 2.0 * g * g * kappa / gamma - kappa * kappa;
    if (rad_eg < 0.0 || rad_c < 0.0) return {};

    const double a = std::sqrt(rad_eg);
    const double b = std::sqrt(rad_c);
    // Same-sign pairing satisfies both residual conditions; the mixed-sign
    // choices do not and are discarded.
    std::vector<CpaSolution> out;
    out.push_back({-J + a, b, (-J + a) - b, CpaBranch::plus_minus});
    out.push_back({-J - a, -b, (-J - a) + b, CpaBranch::minus_plus});
    return out;
}

std::pair<complexd, complexd> single_input_scattering(const SystemParams& p) {
    if (!p.symmetric_cavity())
        throw std::invalid_argument("single_input_scattering: kappa_l != kappa_r");
    const DriveConfig drive(1.0, 0.0);
    const SteadyState st = solve_steady_state(p, drive);
    return {st.a_out_l, st.a_out_r};
}

double golden_section_minimize(const std::function<double(double)>& f,
                               double a, double b, double tol) {
    constexpr double invphi = 0.6180339887498949;  // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

std::vector<AbsorptionMinimum> find_absorption_minima(
    const SystemParams& p, const DriveConfig& drive,
    double delta_lo, double delta_hi, int n_grid) {
    if (!std::isfinite(delta_lo) || !std::isfinite(delta_hi) || delta_lo >= delta_hi)
        throw std::invalid_argument("find_absorption_minima: empty or non-finite range");
    if (n_grid < 64)
        throw std::invalid_argument("find_absorption_minima: n_grid must be >= 64");
    if (drive.in_left() != drive.in_right())
        throw std::invalid_argument("find_absorption_minima: equal drives required");

    const double delta_ac = p.delta_ac();
    auto out_l_at = [&](double delta) {
        SystemParams q = p;
        q.delta_eg1 = q.delta_eg2 = delta;
        q.delta_c = delta - delta_ac;
        return observables(q, drive).out_l;
    };

    std::vector<double> x(n_grid), v(n_grid);
    const double h = (delta_hi - delta_lo) / (n_grid - 1);
    for (int i = 0; i < n_grid; ++i) {
        x[i] = delta_lo + i * h;
        v[i] = out_l_at(x[i]);
    }

    std::vector<AbsorptionMinimum> minima;
    for (int i = 1; i + 1 < n_grid; ++i) {
        if (v[i] < v[i - 1] && v[i] < v[i + 1]) {
            const double d = golden_section_minimize(out_l_at, x[i - 1], x[i + 1],
                                                     kRefineTol);
            minima.push_back({d, out_l_at(d), false});
        }
    }
    std::sort(minima.begin(), minima.end(),
              [](const auto& a, const auto& b) { return a.delta < b.delta; });

    // Merge dips closer than the refinement tolerance and flag the survivor.
    std::vector<AbsorptionMinimum> merged;
    for (const auto& m : minima) {
        if (!merged.empty() && m.delta - merged.back().delta < kRefineTol) {
            if (m.depth < merged.back().depth) {
                merged.back().delta = m.delta;
                merged.back().depth = m.depth;
            }
            merged.back().merged = true;
        } else {
            merged.push_back(m);
        }
    }
    return merged;
}

} // namespace tcqed
