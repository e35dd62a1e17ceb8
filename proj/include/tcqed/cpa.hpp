#ifndef TCQED_CPA_HPP
#define TCQED_CPA_HPP

#include <functional>
#include <utility>
#include <vector>

#include "tcqed/params.hpp"

namespace tcqed {

// Residuals of the two equal-drive perfect-absorption conditions; both vanish
// iff the outputs vanish for identical equal-phase inputs.
struct CpaResidual {
    double r1;  // kappa(-Deg^2 + gamma^2 + J^2) + 2 Dc Deg gamma - 2 g^2 gamma
    double r2;  // 2 kappa gamma Deg - Dc(-Deg^2 + gamma^2 + J^2) - 2 g^2 (Deg - J)
};

// The two real branches of the analytic detuning solutions.
enum class CpaBranch { plus_minus, minus_plus };

struct CpaSolution {
    double delta_eg;
    double delta_c;
    double delta_ac;  // delta_eg - delta_c; equals -J for kappa = gamma
    CpaBranch branch;
};

// Identical emitters, symmetric cavity, real coupling required.
CpaResidual cpa_residuals(const SystemParams& p);

// delta_eg = -J +- sqrt(2 g^2 gamma/kappa - gamma^2), paired with
// delta_c = +- sqrt(2 g^2 kappa/gamma - kappa^2) of the same sign.
// Empty when a radicand is negative (weak coupling, no perfect absorption).
std::vector<CpaSolution> cpa_detuning_solutions(double g, double gamma,
                                                double kappa, double J);

// Left-only unit drive; returns (a_out_l, a_out_r) / a_in_l.
// At perfect-absorption parameters this is exactly (+1/2, -1/2).
std::pair<complexd, complexd> single_input_scattering(const SystemParams& p);

struct AbsorptionMinimum {
    double delta;   // refined location of the local minimum
    double depth;   // normalized left-output intensity at the minimum
    bool merged = false;  // two grid minima collapsed within the tolerance
};

// Grid pre-scan plus golden-section refinement of the equal-drive output
// intensity over the detuning axis. The sweep variable is the emitter
// detuning: delta_eg = delta, delta_c = delta - delta_ac, with delta_ac
// taken from p and held fixed.
std::vector<AbsorptionMinimum> find_absorption_minima(
    const SystemParams& p, const DriveConfig& drive,
    double delta_lo, double delta_hi, int n_grid);

// Minimizes f over [a, b]; the interval must bracket a single minimum.
// Returns the abscissa once the interval shrinks below tol.
double golden_section_minimize(const std::function<double(double)>& f,
                               double a, double b, double tol);

} // namespace tcqed

#endif
