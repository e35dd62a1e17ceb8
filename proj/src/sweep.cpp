#include "tcqed/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace tcqed {

namespace {

void check_grid(const SweepSpec& spec) {
    if (!std::isfinite(spec.start) || !std::isfinite(spec.stop) ||
        spec.start >= spec.stop)
        throw std::invalid_argument("sweep: start must be finite and < stop");
    if (spec.points < 2)
        throw std::invalid_argument("sweep: points must be >= 2");
}

int pool_size(int n) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TAVIS_CPA_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, unsigned(cap));
    }
    return int(std::min<unsigned>(hw, unsigned(n)));
}

// Evaluates fn(i) for i in [0, n) on the work pool; results land in grid
// order regardless of scheduling.
void parallel_rows(int n, const std::function<void(int)>& fn) {
    const int workers = pool_size(n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

DriveConfig mode_drive(const DriveConfig& base, DriveMode mode) {
    switch (mode) {
        case DriveMode::two_input_equal:
            if (base.amp_l() != base.amp_r())
                throw std::invalid_argument("two-input-equal mode requires equal amplitudes");
            return base;
        case DriveMode::single_input_left:
            return DriveConfig(base.amp_l() > 0.0 ? base.amp_l() : 1.0, 0.0,
                               base.phase_l(), 0.0);
        case DriveMode::single_input_right:
            return DriveConfig(0.0, base.amp_r() > 0.0 ? base.amp_r() : 1.0,
                               0.0, base.phase_r());
    }
    throw std::logic_error("unreachable");
}

SweepTable run_grid(const SystemParams& p, const SweepSpec& spec,
                    const std::function<Observables(double)>& eval) {
    SweepTable table;
    table.spec = spec;
    table.params = p;
    table.rows.resize(spec.points);
    const double h = (spec.stop - spec.start) / (spec.points - 1);
    parallel_rows(spec.points, [&](int i) {
        const double x = i + 1 == spec.points ? spec.stop : spec.start + i * h;
        table.rows[i] = {x, eval(x)};
    });
    return table;
}

} // namespace

SweepTable sweep_detuning(const SystemParams& p, const DriveConfig& drive,
                          const SweepSpec& spec) {
    if (spec.variable != SweepVariable::detuning)
        throw std::invalid_argument("sweep_detuning: spec.variable mismatch");
    check_grid(spec);
    const DriveConfig d = mode_drive(drive, spec.mode);
    const double delta_ac = spec.coupling_lock ? p.delta_ac() : 0.0;

    return run_grid(p, spec, [&](double x) {
        SystemParams q = p;
        q.delta_eg1 = q.delta_eg2 = x;
        q.delta_c = spec.coupling_lock ? x - delta_ac : x;
        return observables(q, d);
    });
}

SweepTable sweep_phase(const SystemParams& p, const SweepSpec& spec) {
    if (spec.variable != SweepVariable::phase)
        throw std::invalid_argument("sweep_phase: spec.variable mismatch");
    check_grid(spec);
    if (spec.mode != DriveMode::two_input_equal)
        throw std::invalid_argument("sweep_phase: equal amplitudes required");
    if (spec.start < -2.0 * pi - 1e-12 || spec.stop > 2.0 * pi + 1e-12)
        throw std::invalid_argument("sweep_phase: grid must lie within [-2pi, 2pi]");

    return run_grid(p, spec, [&](double dphi) {
        return observables(p, DriveConfig(1.0, 1.0, dphi, 0.0));
    });
}

SweepTable sweep_ddi(const SystemParams& p, const DriveConfig& drive,
                     const SweepSpec& spec) {
    if (spec.variable != SweepVariable::ddi)
        throw std::invalid_argument("sweep_ddi: spec.variable mismatch");
    check_grid(spec);
    const DriveConfig d = mode_drive(drive, spec.mode);

    return run_grid(p, spec, [&](double j) {
        SystemParams q = p;
        q.J = j;
        return observables(q, d);
    });
}

} // namespace tcqed
