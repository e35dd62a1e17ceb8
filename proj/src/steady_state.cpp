#include "tcqed/steady_state.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace tcqed {

namespace {

constexpr double kConditionLimit = 1e12;
const complexd I{0.0, 1.0};

void require_driven(const DriveConfig& drive) {
    if (drive.amp_l() == 0.0 && drive.amp_r() == 0.0)
        throw std::invalid_argument("at least one drive amplitude must be > 0");
}

void require_equal_drives(const DriveConfig& drive) {
    if (drive.in_left() != drive.in_right())
        throw std::invalid_argument("equal drives required");
}

void require_symmetric_cavity(const SystemParams& p) {
    if (!p.symmetric_cavity())
        throw std::invalid_argument("symmetric cavity (kappa_l = kappa_r) required");
}

} // namespace

SteadyState solve_steady_state(const SystemParams& p, const DriveConfig& drive) {
    require_valid(p);
    require_driven(drive);

    const double kbar = 0.5 * p.kappa_total();
    Eigen::Matrix3cd m;
    m << complexd(kbar, p.delta_c), I * std::conj(p.g1), I * std::conj(p.g2),
         I * p.g1, complexd(p.gamma1, p.delta_eg1), I * p.J,
         I * p.g2, I * p.J, complexd(p.gamma2, p.delta_eg2);

    Eigen::Vector3cd rhs;
    rhs << -std::sqrt(p.kappa_l) * drive.in_left()
               - std::sqrt(p.kappa_r) * drive.in_right(),
           0.0, 0.0;

    Eigen::JacobiSVD<Eigen::Matrix3cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv(2) > 0.0) || sv(0) / sv(2) > kConditionLimit) {
        throw SingularSystemError(
            "resonant singular parameters: steady-state determinant vanishes "
            "(condition number above 1e12)");
    }
    Eigen::Vector3cd x = svd.solve(rhs);

    SteadyState st;
    st.a = x(0);
    st.sigma1 = x(1);
    st.sigma2 = x(2);
    auto [ol, orr] = output_fields(st.a, p, drive);
    st.a_out_l = ol;
    st.a_out_r = orr;
    return st;
}

complexd closed_form_intracavity(const SystemParams& p, const DriveConfig& drive) {
    require_valid(p);
    require_driven(drive);

    const complexd d1(p.gamma1, p.delta_eg1);
    const complexd d2(p.gamma2, p.delta_eg2);
    const complexd det = d1 * d2 + p.J * p.J;
    if (std::abs(det) <= 1e-300 * (std::abs(d1 * d2) + p.J * p.J + 1.0))
        throw SingularSystemError("closed_form_intracavity: inner denominator vanishes");

    const double g1n = std::norm(p.g1);
    const double g2n = std::norm(p.g2);
    const complexd num = std::conj(p.g1) * p.g2 * d1 + p.g1 * std::conj(p.g2) * d2
                         - I * (g1n + g2n) * p.J;
    const complexd self_energy = num / det;

    const complexd forcing = std::sqrt(p.kappa_l) * drive.in_left()
                             + std::sqrt(p.kappa_r) * drive.in_right();
    return -forcing / (complexd(0.5 * p.kappa_total(), p.delta_c) + self_energy);
}

std::pair<complexd, complexd> output_fields(complexd a, const SystemParams& p,
                                            const DriveConfig& drive) {
    return {drive.in_left() + std::sqrt(p.kappa_l) * a,
            drive.in_right() + std::sqrt(p.kappa_r) * a};
}

complexd single_qe_output(const SystemParams& p, const DriveConfig& drive) {
    require_valid(p);
    require_driven(drive);
    require_symmetric_cavity(p);
    require_equal_drives(drive);

    const double kappa = p.kappa_l;
    const complexd a_in = drive.in_left();
    const complexd denom = complexd(kappa, p.delta_c)
                           + std::norm(p.g1) / complexd(p.gamma1, p.delta_eg1);
    return a_in - 2.0 * kappa * a_in / denom;
}

complexd two_qe_output(const SystemParams& p, const DriveConfig& drive) {
    require_valid(p);
    require_driven(drive);
    require_symmetric_cavity(p);
    require_equal_drives(drive);
    if (!p.identical_emitters())
        throw std::invalid_argument("two_qe_output requires identical emitters");
    if (p.delta_eg1 != p.delta_c)
        throw std::invalid_argument("two_qe_output requires on-resonance emitters "
                                    "(delta_eg = delta_c)");

    const double kappa = p.kappa_l;
    const double gamma = p.gamma1;
    const double g2n = std::norm(p.g1);
    const complexd a_in = drive.in_left();
    const complexd d(gamma, p.delta_c);
    const complexd inner = d * d + p.J * p.J;
    if (std::abs(inner) == 0.0)
        throw SingularSystemError("two_qe_output: inner denominator vanishes");
    const complexd self_energy = (2.0 * g2n * d - 2.0 * I * g2n * p.J) / inner;
    return a_in - 2.0 * kappa * a_in / (complexd(kappa, p.delta_c) + self_energy);
}

Observables observables(const SystemParams& p, const DriveConfig& drive) {
    if (drive.amp_l() == 0.0 && drive.amp_r() == 0.0)
        throw std::invalid_argument("undefined normalization: both drives are zero");

    const SteadyState st = solve_steady_state(p, drive);
    const double ref = drive.amp_l() > 0.0 ? drive.amp_l() * drive.amp_l()
                                           : drive.amp_r() * drive.amp_r();
    Observables obs;
    obs.out_l = std::norm(st.a_out_l) / ref;
    obs.out_r = std::norm(st.a_out_r) / ref;
    obs.cavity = std::norm(st.a) / ref;
    obs.atoms = std::norm(st.sigma1 + st.sigma2) / ref;
    return obs;
}

} // namespace tcqed
