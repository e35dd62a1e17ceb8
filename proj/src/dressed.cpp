#include "tcqed/dressed.hpp"

#include <cmath>
#include <stdexcept>

namespace tcqed {

namespace {

void require_identical(const SystemParams& p, const char* who) {
    if (p.delta_eg1 != p.delta_eg2)
        throw std::invalid_argument(std::string(who) + ": delta_eg1 != delta_eg2");
    if (p.g1 != p.g2 || p.g1.imag() != 0.0)
        throw std::invalid_argument(std::string(who) + ": equal real couplings required");
}

// Fix the phase of an eigenvector column: first nonzero component positive real.
void fix_column_sign(Eigen::MatrixXcd& vecs, int col) {
    for (int r = 0; r < vecs.rows(); ++r) {
        const complexd c = vecs(r, col);
        if (std::abs(c) > 1e-12) {
            vecs.col(col) *= std::conj(c) / std::abs(c);
            break;
        }
    }
}

} // namespace

TransformedModel transform_model(const SystemParams& p) {
    require_identical(p, "transform_model");
    const double g = p.g1.real();
    return {p.delta_eg1 + p.J, p.delta_eg1 - p.J, std::sqrt(2.0) * g, true};
}

PolaritonLevel polariton_eigensystem(int n, const SystemParams& p) {
    if (n < 1)
        throw std::invalid_argument("polariton_eigensystem: n must be >= 1");
    require_identical(p, "polariton_eigensystem");

    const double g = p.g1.real();
    const double dac = p.delta_eg1 - p.delta_c + p.J;
    if (g == 0.0 && dac == 0.0)
        throw std::invalid_argument(
            "polariton_eigensystem: degenerate mixing angle (g = 0 and "
            "effective detuning = 0)");

    const double coupling = 2.0 * g * std::sqrt(2.0 * n);
    const double omega = std::hypot(dac, coupling);
    // atan2 keeps phi in (0, pi) for g > 0 and continuous through dac = 0,
    // where phi = pi/2.
    const double phi = std::atan2(coupling, dac);

    PolaritonLevel lvl;
    lvl.n = n;
    lvl.omega_n = omega;
    lvl.phi_n = phi;
    lvl.lambda_plus = n * p.delta_c + 0.5 * dac + 0.5 * omega;
    lvl.lambda_minus = n * p.delta_c + 0.5 * dac - 0.5 * omega;
    lvl.weights = {std::cos(0.5 * phi), std::sin(0.5 * phi)};
    return lvl;
}

double rabi_splitting(int n, const SystemParams& p) {
    return polariton_eigensystem(n, p).omega_n;
}

std::array<double, 2> transition_weights(const SystemParams& p) {
    return polariton_eigensystem(1, p).weights;
}

Eigen::MatrixXcd manifold_matrix(const SystemParams& p, int n,
                                 bool include_double_excitation) {
    if (n < 1)
        throw std::invalid_argument("manifold_matrix: n must be >= 1");

    const int dim = (n >= 2 && include_double_excitation) ? 4 : 3;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);

    h(0, 0) = double(n) * p.delta_c;
    h(1, 1) = double(n - 1) * p.delta_c + p.delta_eg1;
    h(2, 2) = double(n - 1) * p.delta_c + p.delta_eg2;
    h(1, 0) = p.g1 * std::sqrt(double(n));
    h(0, 1) = std::conj(h(1, 0));
    h(2, 0) = p.g2 * std::sqrt(double(n));
    h(0, 2) = std::conj(h(2, 0));
    h(1, 2) = p.J;
    h(2, 1) = p.J;
    if (dim == 4) {
        h(3, 3) = double(n - 2) * p.delta_c + p.delta_eg1 + p.delta_eg2;
        h(3, 1) = p.g2 * std::sqrt(double(n - 1));
        h(1, 3) = std::conj(h(3, 1));
        h(3, 2) = p.g1 * std::sqrt(double(n - 1));
        h(2, 3) = std::conj(h(3, 2));
    }
    return h;
}

std::vector<LadderManifold> numeric_ladder(const SystemParams& p, int n_max,
                                           bool include_double_excitation) {
    if (n_max < 1 || n_max > 12)
        throw std::invalid_argument("numeric_ladder: n_max must be in [1, 12]");

    std::vector<LadderManifold> ladder;
    ladder.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const Eigen::MatrixXcd h = manifold_matrix(p, n, include_double_excitation);
        if (!h.isApprox(h.adjoint(), 1e-15))
            throw std::runtime_error("numeric_ladder: non-Hermitian manifold assembly");

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        if (es.info() != Eigen::Success)
            throw std::runtime_error("numeric_ladder: eigendecomposition failed");

        LadderManifold m;
        m.n = n;
        m.eigenvalues = es.eigenvalues();
        m.eigenvectors = es.eigenvectors();
        for (int c = 0; c < m.eigenvectors.cols(); ++c)
            fix_column_sign(m.eigenvectors, c);
        ladder.push_back(std::move(m));
    }
    return ladder;
}

} // namespace tcqed
