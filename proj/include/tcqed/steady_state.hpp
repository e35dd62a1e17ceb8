#ifndef TCQED_STEADY_STATE_HPP
#define TCQED_STEADY_STATE_HPP

#include <stdexcept>
#include <utility>

#include "tcqed/params.hpp"

namespace tcqed {

// Thrown when the 3x3 steady-state system is numerically singular.
struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weak-excitation mean-field steady state (<sigma_z> = -1).
struct SteadyState {
    complexd a;        // intracavity amplitude <a>
    complexd sigma1;   // emitter coherences <sigma_j>
    complexd sigma2;
    complexd a_out_l;  // output amplitudes, a_out = a_in + sqrt(kappa) a
    complexd a_out_r;
};

// Normalized intensities; reference is the left input when nonzero,
// else the right input.
struct Observables {
    double out_l;
    double out_r;
    double cavity;
    double atoms;  // |<sigma1> + <sigma2>|^2 / |a_in|^2
};

// Solves the 3x3 complex linear system for (<a>, <sigma1>, <sigma2>) and
// attaches the output amplitudes.
SteadyState solve_steady_state(const SystemParams& p, const DriveConfig& drive);

// Closed-form intracavity amplitude with the DDI-dressed self-energy.
// Cross-check path for solve_steady_state; exact for equal couplings.
complexd closed_form_intracavity(const SystemParams& p, const DriveConfig& drive);

// Input-output reconstruction: a_out = a_in + sqrt(kappa) a per mirror.
std::pair<complexd, complexd> output_fields(complexd a, const SystemParams& p,
                                            const DriveConfig& drive);

// Single-emitter closed form: a_in - 2 kappa a_in / (i D + kappa + |g|^2/(i Deg + gamma)).
// Requires a symmetric cavity and equal drives.
complexd single_qe_output(const SystemParams& p, const DriveConfig& drive);

// Two identical emitters, on resonance (delta_eg = delta_c), symmetric cavity,
// equal drives.
complexd two_qe_output(const SystemParams& p, const DriveConfig& drive);

Observables observables(const SystemParams& p, const DriveConfig& drive);

} // namespace tcqed

#endif
