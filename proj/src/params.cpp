#include "tcqed/params.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tcqed {

bool SystemParams::identical_emitters() const {
    return gamma1 == gamma2 && delta_eg1 == delta_eg2 && g1 == g2;
}

bool SystemParams::symmetric_cavity() const {
    return kappa_l == kappa_r;
}

bool SystemParams::symmetric() const {
    return identical_emitters() && symmetric_cavity() &&
           g1.imag() == 0.0 && g2.imag() == 0.0;
}

double SystemParams::delta_ac() const {
    if (delta_eg1 != delta_eg2) {
        throw std::logic_error(
            "delta_ac is defined for the identical-emitter case "
            "(delta_eg1 != delta_eg2)");
    }
    return delta_eg1 - delta_c;
}

std::vector<Diagnostic> validate(const SystemParams& p) {
    std::vector<Diagnostic> out;
    auto finite = [](double x) { return std::isfinite(x); };

    if (!finite(p.gamma1) || p.gamma1 <= 0.0)
        out.push_back({"gamma1", "negative decay rate (must be > 0)"});
    if (!finite(p.gamma2) || p.gamma2 <= 0.0)
        out.push_back({"gamma2", "negative decay rate (must be > 0)"});
    if (!finite(p.kappa_l) || p.kappa_l < 0.0)
        out.push_back({"kappa_l", "negative leakage rate"});
    if (!finite(p.kappa_r) || p.kappa_r < 0.0)
        out.push_back({"kappa_r", "negative leakage rate"});
    if (finite(p.kappa_l) && finite(p.kappa_r) && p.kappa_l + p.kappa_r <= 0.0)
        out.push_back({"kappa_l+kappa_r", "no output channel"});
    if (!finite(p.g1.real()) || !finite(p.g1.imag()))
        out.push_back({"g1", "non-finite coupling"});
    if (!finite(p.g2.real()) || !finite(p.g2.imag()))
        out.push_back({"g2", "non-finite coupling"});
    if (!finite(p.J))
        out.push_back({"J", "non-finite DDI strength"});
    if (!finite(p.delta_c))
        out.push_back({"delta_c", "non-finite detuning"});
    if (!finite(p.delta_eg1))
        out.push_back({"delta_eg1", "non-finite detuning"});
    if (!finite(p.delta_eg2))
        out.push_back({"delta_eg2", "non-finite detuning"});
    return out;
}

void require_valid(const SystemParams& p) {
    auto diags = validate(p);
    if (diags.empty()) return;
    std::ostringstream msg;
    msg << "invalid system parameters:";
    for (const auto& d : diags) msg << " [" << d.field << ": " << d.message << "]";
    throw std::invalid_argument(msg.str());
}

double ddi_from_geometry(const GeometryInput& geom) {
    if (!(geom.r12 > 0.0))
        throw std::domain_error("ddi_from_geometry: r12 must be > 0");
    if (!(geom.gamma0 > 0.0))
        throw std::domain_error("ddi_from_geometry: gamma0 must be > 0");
    if (!(geom.omega_eg > 0.0))
        throw std::domain_error("ddi_from_geometry: omega_eg must be > 0");
    if (!(geom.c > 0.0))
        throw std::domain_error("ddi_from_geometry: c must be > 0");
    if (!(geom.phi >= 0.0 && geom.phi <= pi))
        throw std::domain_error("ddi_from_geometry: phi must be in [0, pi]");

    const double cphi = std::cos(geom.phi);
    const double angular = 1.0 - 3.0 * cphi * cphi;
    const double c3 = geom.c * geom.c * geom.c;
    const double w3 = geom.omega_eg * geom.omega_eg * geom.omega_eg;
    const double r3 = geom.r12 * geom.r12 * geom.r12;
    return 3.0 * geom.gamma0 * c3 / (4.0 * w3 * r3) * angular;
}

double separation_from_ddi(double J, double gamma0, double omega_eg, double c) {
    if (!(J > 0.0))
        throw std::domain_error(
            "separation_from_ddi: J must be > 0 for perpendicular dipoles");
    if (!(gamma0 > 0.0) || !(omega_eg > 0.0) || !(c > 0.0))
        throw std::domain_error("separation_from_ddi: rates must be > 0");
    const double c3 = c * c * c;
    const double w3 = omega_eg * omega_eg * omega_eg;
    return std::cbrt(3.0 * gamma0 * c3 / (4.0 * w3 * J));
}

double cooperativity(const SystemParams& p) {
    if (!p.symmetric()) {
        throw std::invalid_argument(
            "cooperativity requires identical emitters, a symmetric cavity "
            "and equal real couplings");
    }
    const double g = p.g1.real();
    return g * g / (2.0 * p.kappa_l * p.gamma1);
}

double wrap_phase(double phi) {
    double r = std::remainder(phi, 2.0 * pi);
    if (r <= -pi) r = pi;
    return r;
}

DriveConfig::DriveConfig(double amp_l, double amp_r,
                         double phase_l, double phase_r)
    : amp_l_(amp_l), amp_r_(amp_r),
      phase_l_(wrap_phase(phase_l)), phase_r_(wrap_phase(phase_r)) {
    if (!(amp_l >= 0.0) || !(amp_r >= 0.0))
        throw std::invalid_argument("drive amplitudes must be >= 0");
    if (!std::isfinite(phase_l) || !std::isfinite(phase_r))
        throw std::invalid_argument("drive phases must be finite");
}

complexd DriveConfig::in_left() const {
    return amp_l_ * std::polar(1.0, phase_l_);
}

complexd DriveConfig::in_right() const {
    return amp_r_ * std::polar(1.0, phase_r_);
}

} // namespace tcqed
