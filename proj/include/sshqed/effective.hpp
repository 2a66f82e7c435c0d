// effective.hpp — momentum-space band basis, atom-band couplings g_{k,sigma},
// and the effective photon-photon Hamiltonian obtained by adiabatically
// eliminating the giant atom to second order.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "sshqed/spectrum.hpp"

namespace sshqed {

using Complex = std::complex<double>;

// Eigenpair of the 2x2 Bloch Hamiltonian [[0, t1 + t2 e^{-ik}], [c.c., 0]] in
// the (A, B) cell basis; phase convention: A component real positive.
struct BlochBand {
    double k = 0.0;
    double energy_plus = 0.0;   // +omega_k
    double energy_minus = 0.0;  // -omega_k
    Eigen::Vector2cd state_plus;
    Eigen::Vector2cd state_minus;
};

BlochBand band_basis(double k, double t1, double t2);

// Coupling of the atom to band mode (k, band), band = +1 or -1.
Complex atom_mode_coupling(double k, int band, const SshParams& params,
                           const AtomCoupling& atom);

// All 2L band modes with their couplings, on the grid k_j = 2 pi j / L.
// Mode index: j for (k_j, +), L + j for (k_j, -).
struct EffectiveModel {
    SshParams params;
    AtomCoupling atom;
    std::vector<double> k;         // size L
    Eigen::VectorXd mode_energy;   // size 2L
    Eigen::VectorXcd coupling;     // size 2L

    int modes() const { return static_cast<int>(mode_energy.size()); }
    int mode_index(int j, int band) const { return band > 0 ? j : params.cells + j; }
};

EffectiveModel build_effective_model(const SshParams& params, const AtomCoupling& atom);

// Symmetrized second-order elimination of the zero-frequency atom:
//   G_ab = (1/2) g_a conj(g_b) (1/E_a + 1/E_b)
Complex effective_coupling(const EffectiveModel& model, int mode_a, int mode_b);

// H_eff = diag(E) + G over the band modes. Modes closer to zero energy than
// min_mode_energy are invalid to eliminate against and raise NumericError.
Eigen::MatrixXcd effective_hamiltonian(const EffectiveModel& model,
                                       double min_mode_energy = 1e-9);

// Largest |g| / |E| ratio over the modes; the elimination is perturbative
// only when this is small.
double max_coupling_ratio(const EffectiveModel& model);

// Rebuilds the full (2L+1)-dimensional Hamiltonian in the (band modes, atom)
// basis. Isospectral with the real-space Hamiltonian by construction; used as
// the reconstruction cross-check.
Eigen::MatrixXcd momentum_space_hamiltonian(const EffectiveModel& model);

// Exact-vs-effective degeneracy splitting for the (k, 2pi - k) partner pairs.
struct PairSplitting {
    double k = 0.0;          // member with k < pi
    int band = +1;
    double exact = 0.0;      // from dense diagonalization
    double predicted = 0.0;  // 2 |G_{k sigma, (2pi-k) sigma}|
};

std::vector<PairSplitting> pair_splitting_comparison(const SshParams& params,
                                                     const AtomCoupling& atom);

}  // namespace sshqed
