// lattice.hpp — SSH ring parameters, giant-atom attachment, basis layout, and
// assembly of the single-excitation real-space Hamiltonian.

#pragma once

#include <Eigen/Dense>

#include <utility>

#include "sshqed/common.hpp"

namespace sshqed {

enum class Boundary { periodic, open };
enum class CouplingKind { aa, ab, none };
enum class Sublattice { a, b };

// t1 = q(1 + delta cos theta), t2 = q(1 - delta cos theta)
std::pair<double, double> hopping_strengths(double q, double delta, double theta);

// Waveguide geometry and couplings. Cells are numbered 1..cells; each cell
// holds one A and one B resonator, all at frequency zero.
struct SshParams {
    int cells = 100;
    double q = 1.0;       // energy unit
    double delta = 0.5;   // dimerization strength, in [0, 1)
    double theta = 0.0;   // modulation angle, in [0, 2*pi]
    Boundary boundary = Boundary::periodic;

    double t1() const { return hopping_strengths(q, delta, theta).first; }
    double t2() const { return hopping_strengths(q, delta, theta).second; }

    // band edges of the bare waveguide: |E| in [band_min, band_max]
    double band_min() const { return std::abs(t1() - t2()); }
    double band_max() const { return t1() + t2(); }

    void validate() const;  // throws InputError
};

// Two-level giant atom attached at cells n and m (transition frequency fixed
// to zero, the common reference). For kind aa both legs sit on sublattice A
// and n < m is required; for kind ab the legs sit on (A,n) and (B,m) with
// n <= m (n == m is the same-cell case).
struct AtomCoupling {
    CouplingKind kind = CouplingKind::none;
    int n = 1;
    int m = 1;
    double g = 0.0;

    int size() const { return m - n; }  // d = |m - n|, guaranteed m >= n

    void validate(const SshParams& params) const;
};

// Optional auxiliary probe atom, coupled to a single resonator.
struct ProbeConfig {
    bool enabled = false;
    int cell = 1;
    Sublattice sublattice = Sublattice::b;
    double gp = 0.0;
    double frequency = 0.0;

    void validate(const SshParams& params) const;
};

// Fixed basis ordering: (A,1),(B,1),...,(A,L),(B,L), atom, probe. The layout
// is deterministic so emitted eigenvector indexing never depends on options.
class BasisLayout {
public:
    BasisLayout(int cells, bool has_atom, bool has_probe)
        : cells_(cells), has_atom_(has_atom), has_probe_(has_probe) {}

    int dim() const { return 2 * cells_ + (has_atom_ ? 1 : 0) + (has_probe_ ? 1 : 0); }
    int cells() const { return cells_; }
    bool has_atom() const { return has_atom_; }
    bool has_probe() const { return has_probe_; }

    int site(Sublattice s, int cell) const;  // cell in [1, cells]
    int atom() const;                        // throws InputError if absent
    int probe() const;

private:
    int cells_;
    bool has_atom_;
    bool has_probe_;
};

struct Hamiltonian {
    Eigen::MatrixXd matrix;  // dense real symmetric
    BasisLayout layout;
    SshParams params;
    AtomCoupling atom;
    ProbeConfig probe;
};

Hamiltonian build_hamiltonian(const SshParams& params, const AtomCoupling& atom,
                              const ProbeConfig& probe = {});

// Partition test on the adjacency structure: colour every A resonator (plus a
// probe hanging off a B site) one way, every B resonator, the atom (and a
// probe hanging off an A site) the other, and require each nonzero
// off-diagonal to cross the partition. Holds for aa coupling, fails for ab.
bool obeys_bipartition(const Hamiltonian& h);

}  // namespace sshqed
