#ifndef TCQED_SWEEP_HPP
#define TCQED_SWEEP_HPP

#include <vector>

#include "tcqed/params.hpp"
#include "tcqed/steady_state.hpp"

namespace tcqed {

enum class SweepVariable { detuning, phase, ddi };
enum class DriveMode { two_input_equal, single_input_left, single_input_right };

struct SweepSpec {
    SweepVariable variable = SweepVariable::detuning;
    double start = 0.0;
    double stop = 1.0;
    int points = 2;
    DriveMode mode = DriveMode::two_input_equal;
    // Detuning sweeps: false sets delta_eg = delta_c = x (on-resonance
    // convention); true holds delta_ac fixed, sweeping x = delta_eg with
    // delta_c = x - delta_ac.
    bool coupling_lock = false;
};

struct SweepRow {
    double x;
    Observables obs;
};

struct SweepTable {
    SweepSpec spec;
    SystemParams params;
    std::vector<SweepRow> rows;
};

SweepTable sweep_detuning(const SystemParams& p, const DriveConfig& drive,
                          const SweepSpec& spec);

// Varies the relative phase phi_l - phi_r at unit equal amplitudes.
SweepTable sweep_phase(const SystemParams& p, const SweepSpec& spec);

SweepTable sweep_ddi(const SystemParams& p, const DriveConfig& drive,
                     const SweepSpec& spec);

} // namespace tcqed

#endif
