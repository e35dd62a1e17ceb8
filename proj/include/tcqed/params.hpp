#ifndef TCQED_PARAMS_HPP
#define TCQED_PARAMS_HPP

#include <complex>
#include <string>
#include <vector>

namespace tcqed {

using complexd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// All rates and detunings are dimensionless, in units of a common reference
// decay rate gamma_ref. Only GeometryInput carries physical units.
struct SystemParams {
    double gamma1 = 1.0;      // emitter spontaneous-emission rates
    double gamma2 = 1.0;
    double kappa_l = 1.0;     // mirror leakage rates
    double kappa_r = 1.0;
    complexd g1{0.0, 0.0};    // emitter-cavity couplings
    complexd g2{0.0, 0.0};
    double J = 0.0;           // dipole-dipole strength, any sign
    double delta_c = 0.0;     // cavity-laser detuning
    double delta_eg1 = 0.0;   // emitter-laser detunings
    double delta_eg2 = 0.0;

    double kappa_total() const { return kappa_l + kappa_r; }

    bool identical_emitters() const;
    bool symmetric_cavity() const;
    // identical emitters + symmetric cavity + equal real couplings
    bool symmetric() const;

    // Atom-cavity detuning delta_eg - delta_c; identical-emitter case only.
    double delta_ac() const;
};

struct Diagnostic {
    std::string field;
    std::string message;
};

std::vector<Diagnostic> validate(const SystemParams& p);

// Throws std::invalid_argument listing every diagnostic.
void require_valid(const SystemParams& p);

// Physical-unit inputs for the DDI strength of two dipoles.
struct GeometryInput {
    double gamma0;    // free-space atomic decay rate [angular frequency]
    double omega_eg;  // atomic transition frequency [angular frequency]
    double r12;       // inter-emitter separation [length]
    double phi;       // dipole / inter-emitter axis angle [rad], 0..pi
    double c;         // speed of light [length/time]
};

// J = 3*Gamma0*c^3 / (4*omega_eg^3*r12^3) * (1 - 3 cos^2 phi)
double ddi_from_geometry(const GeometryInput& geom);

// Inverse of ddi_from_geometry at phi = pi/2 (perpendicular dipoles); J > 0.
double separation_from_ddi(double J, double gamma0, double omega_eg, double c);

// C = g^2 / (2 kappa gamma); symmetric identical-emitter case only.
double cooperativity(const SystemParams& p);

// Reduce a phase to (-pi, pi].
double wrap_phase(double phi);

// Complex amplitudes of the two coherent inputs. Immutable after construction;
// phases are wrapped to (-pi, pi] on construction.
class DriveConfig {
public:
    DriveConfig(double amp_l, double amp_r,
                double phase_l = 0.0, double phase_r = 0.0);

    double amp_l() const { return amp_l_; }
    double amp_r() const { return amp_r_; }
    double phase_l() const { return phase_l_; }
    double phase_r() const { return phase_r_; }
    double relative_phase() const { return phase_l_ - phase_r_; }

    complexd in_left() const;
    complexd in_right() const;

private:
    double amp_l_, amp_r_, phase_l_, phase_r_;
};

} // namespace tcqed

#endif
