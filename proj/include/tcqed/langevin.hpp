#ifndef TCQED_LANGEVIN_HPP
#define TCQED_LANGEVIN_HPP

#include <ostream>
#include <stdexcept>
#include <vector>

#include "tcqed/params.hpp"

namespace tcqed {

// Full mean-field state with dynamical population inversion.
struct MeanFieldState {
    complexd a{0.0, 0.0};
    complexd sigma1{0.0, 0.0};
    complexd sigma2{0.0, 0.0};
    double sz1 = -1.0;
    double sz2 = -1.0;
    double t = 0.0;

    static MeanFieldState ground() { return {}; }
};

// Time derivative of the mean-field equations with the mean-field
// factorization applied to all operator products; the t field carries dt = 1.
MeanFieldState mean_field_derivatives(const MeanFieldState& s,
                                      const SystemParams& p,
                                      const DriveConfig& drive);

struct IntegrationError : std::runtime_error {
    MeanFieldState last_state;
    IntegrationError(const std::string& msg, MeanFieldState s)
        : std::runtime_error(msg), last_state(s) {}
};

// Adaptive Dormand-Prince RK45 trajectory from `initial` to t_end.
// sample_dt > 0 forces step endpoints on that stride; 0 records every
// accepted step. Deterministic for fixed inputs.
std::vector<MeanFieldState> integrate(const SystemParams& p,
                                      const DriveConfig& drive, double t_end,
                                      double rel_tol, double abs_tol,
                                      const MeanFieldState& initial,
                                      double sample_dt = 0.0);

struct RelaxationReport {
    MeanFieldState final;
    bool converged = false;
    double residual_norm = 0.0;
    long steps = 0;
};

// Integrates from the ground state until the scaled derivative norm stays
// below tol for a sustained window, or the time cap is hit.
RelaxationReport relax_to_steady(const SystemParams& p, const DriveConfig& drive,
                                 double tol);

// Columns: t,re_a,im_a,re_sigma1,im_sigma1,re_sigma2,im_sigma2,sz1,sz2
void write_trace_csv(std::ostream& os, const std::vector<MeanFieldState>& trace);

} // namespace tcqed

#endif
