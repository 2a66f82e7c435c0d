// spectrum.hpp — exact diagonalization, level classification, degeneracy
// analysis, photon distributions, sweeps, and unitary time evolution.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "sshqed/lattice.hpp"

namespace sshqed {

// Full eigensystem of a Hamiltonian. Energies ascend; eigenvectors are the
// matching columns with the sign fixed so the largest-magnitude component is
// positive (first such index on ties).
struct Spectrum {
    Eigen::VectorXd energies;
    Eigen::MatrixXd states;
    BasisLayout layout{0, false, false};
    SshParams params;
    AtomCoupling atom;
    ProbeConfig probe;

    int dim() const { return static_cast<int>(energies.size()); }
};

Spectrum eigensolve(const Hamiltonian& h);

enum class LevelClass { bulk, gap, bound, indeterminate };

const char* to_string(LevelClass c);

// bulk: |E| within [band_min - eps, band_max + eps]; gap: below; bound: above.
// When the gap is closed within tolerance the gap/bulk distinction is
// meaningless and non-bound levels are flagged indeterminate.
std::vector<LevelClass> classify_levels(const Eigen::VectorXd& energies, double t1,
                                        double t2, double eps);

struct LevelPair {
    int lower_index = 0;  // indices into the full spectrum
    int upper_index = 0;
    double mean_energy = 0.0;
    double splitting = 0.0;
};

struct BandPairing {
    std::vector<LevelPair> pairs;  // ordered by mean energy
    std::vector<int> singlets;     // unpaired level indices
    double min_splitting = 0.0;
    double max_splitting = 0.0;
    double mean_splitting = 0.0;
    int degenerate_count = 0;  // pairs with splitting <= tolerance
};

struct DegeneracyReport {
    BandPairing lower;  // bulk levels with E < 0
    BandPairing upper;  // bulk levels with E > 0
};

// Pairs bulk levels within each band by greedily matching the closest
// adjacent energies; leftovers (band-edge singlets) stay unpaired.
DegeneracyReport degeneracy_report(const Eigen::VectorXd& energies,
                                   const std::vector<LevelClass>& classes,
                                   double pairing_tolerance);

// Amplitudes of a single-excitation state, reindexed by (sublattice, cell).
struct ExcitationAmplitudes {
    double atom = 0.0;
    std::optional<double> probe;
    std::vector<double> a;  // a[l-1] is the A amplitude in cell l
    std::vector<double> b;

    int cells() const { return static_cast<int>(a.size()); }
    double a_at(int cell) const { return a[static_cast<size_t>(cell - 1)]; }
    double b_at(int cell) const { return b[static_cast<size_t>(cell - 1)]; }
    double norm_sq() const;
    void normalize();             // scales total probability to 1
    void fix_sign_by_atom();      // makes the atom amplitude positive
    Eigen::VectorXd to_vector(const BasisLayout& layout) const;
};

ExcitationAmplitudes photon_distribution(const Eigen::VectorXd& state,
                                         const BasisLayout& layout);

// One point of a theta sweep; eigenvectors are dropped to keep sweeps light.
struct SweepPoint {
    double theta = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    Eigen::VectorXd energies;
    std::vector<LevelClass> classes;
};

// Diagonalizes one Hamiltonian per grid point, optionally across threads.
// Results are returned in grid order regardless of the thread count.
std::vector<SweepPoint> sweep_theta(const std::vector<double>& grid,
                                    const SshParams& base, const AtomCoupling& atom,
                                    const ProbeConfig& probe = {}, int threads = 1,
                                    double band_eps_scale = 1e-6);

// Unitary evolution through the spectral decomposition:
//   |psi(t)> = sum_j exp(-i E_j t) <v_j|psi0> |v_j>
struct Evolution {
    std::vector<double> times;
    Eigen::MatrixXcd amplitudes;  // row per time, column per basis index

    Eigen::VectorXd populations(int time_index) const;
};

Evolution time_evolve(const Hamiltonian& h, const Eigen::VectorXd& initial,
                      const std::vector<double>& times);

}  // namespace sshqed
