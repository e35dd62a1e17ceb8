#ifndef TCQED_DRESSED_HPP
#define TCQED_DRESSED_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "tcqed/params.hpp"

namespace tcqed {

// Effective single-emitter parameters after the bright/dark rotation.
struct TransformedModel {
    double bright_detuning;   // delta_eg + J
    double dark_detuning;     // delta_eg - J
    double bright_coupling;   // sqrt(2) g
    bool dark_decoupled = true;
};

// One dressed doublet in excitation manifold n.
struct PolaritonLevel {
    int n;
    double lambda_plus;
    double lambda_minus;
    double phi_n;     // mixing angle in (0, pi); pi/2 on resonance
    double omega_n;   // generalized Rabi frequency sqrt(Dac~^2 + 8 g^2 n)
    std::array<double, 2> weights;  // (cos(phi/2), sin(phi/2)) on |e,n-1>, |g,n>
};

// One total-excitation block of the lossless Hamiltonian.
struct LadderManifold {
    int n;
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // columns, first nonzero component positive
};

// Requires identical emitters with equal real couplings.
TransformedModel transform_model(const SystemParams& p);

PolaritonLevel polariton_eigensystem(int n, const SystemParams& p);

double rabi_splitting(int n, const SystemParams& p);

// Weights of the lowest-manifold transitions to |g,0>:
// sin(phi/2) for |lambda+>, cos(phi/2) for |lambda->.
std::array<double, 2> transition_weights(const SystemParams& p);

// Hermitian manifold block of the lossless two-emitter Hamiltonian in the
// basis {|gg,n>, |eg,n-1>, |ge,n-1>, |ee,n-2>}; the last state only exists
// for n >= 2 and is dropped when include_double_excitation is false
// (weak-excitation truncation).
Eigen::MatrixXcd manifold_matrix(const SystemParams& p, int n,
                                 bool include_double_excitation = true);

// Diagonalizes manifolds 1..n_max; losses are excluded.
std::vector<LadderManifold> numeric_ladder(const SystemParams& p, int n_max,
                                           bool include_double_excitation = true);

} // namespace tcqed

#endif
