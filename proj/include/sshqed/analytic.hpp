// analytic.hpp — closed-form results for the dressed giant atom: dispersion,
// winding number, transcendental eigenvalue conditions, exponential amplitude
// profiles of the bound states and zero modes, and mirror-symmetry checks.

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "sshqed/spectrum.hpp"

namespace sshqed {

// Positive branch of the band dispersion, omega_k = sqrt(t1^2 + t2^2 + 2 t1 t2 cos k).
double dispersion(double k, double t1, double t2);

struct WindingResult {
    int winding = 0;            // meaningful only when defined
    double min_band_energy = 0.0;
    bool defined = false;       // false when the gap is closed
};

// Phase winding of h(k) = t1 + t2 e^{ik} around the Brillouin zone, integrated
// on a uniform grid (resolution >= 100) and rounded to the nearest integer.
// The result is cross-checked against the t1 vs t2 comparison.
WindingResult winding_number(double t1, double t2, int resolution = 400);

// Quantities entering the exponential profiles for an energy E outside the
// bands (|x| > 2). `a` is the decay base per cell, |a| < 1; `branch_sign`
// carries the sign of the lattice Green's function on the active branch.
struct AmplitudeContext {
    double energy = 0.0;
    double t = 0.0;    // g E / (t1 t2)
    double y1 = 0.0;   // g / t2
    double y2 = 0.0;   // g / t1
    double x = 0.0;    // (E^2 - t1^2 - t2^2) / (t1 t2)
    double a = 0.0;
    double tau = 0.0;  // t1 / t2
    double root = 0.0; // sqrt(x^2 - 4)
    double branch_sign = 1.0;

    // site Green's factor: branch_sign * a^|r| / sqrt(x^2 - 4)
    double green(int r) const;

    static AmplitudeContext make(double energy, double t1, double t2, double g);
};

// Discrete self-consistency residuals on the L-point momentum grid; a root is
// an eigenvalue of the dressed ring. Throws NumericError when E comes within
// pole_tolerance of a band energy +-omega_k.
double self_consistency_aa(double energy, const SshParams& params,
                           const AtomCoupling& atom, double pole_tolerance = 1e-12);
double self_consistency_ab(double energy, const SshParams& params,
                           const AtomCoupling& atom, double pole_tolerance = 1e-12);

// Continuum (L -> infinity) residuals via adaptive quadrature over the zone.
double self_consistency_aa_continuum(double energy, const SshParams& params,
                                     const AtomCoupling& atom);
double self_consistency_ab_continuum(double energy, const SshParams& params,
                                     const AtomCoupling& atom);

struct RootReport {
    std::vector<double> roots;                           // sorted ascending
    std::vector<std::pair<double, double>> brackets;     // bracket per root
    std::vector<double> residuals;                       // |f(root)|
};

// Locates every sign-change root of fn inside each pole-free interval by fine
// scanning plus bisection. Intervals with no sign change contribute nothing.
RootReport find_roots(const std::function<double(double)>& fn,
                      const std::vector<std::pair<double, double>>& intervals,
                      double residual_tolerance, int scan_points = 512);

// Default pole-free search regions: the spectral gap and the two regions
// beyond the band edges, wide enough to bracket the atom-photon bound states.
std::vector<std::pair<double, double>> default_search_intervals(const SshParams& params,
                                                                const AtomCoupling& atom);

// Normalized analytic eigenstates (atom amplitude positive). Distances are
// taken minimum-image on the ring. Throws InputError for energies inside the
// bands, where no exponentially decaying profile exists.
ExcitationAmplitudes amplitudes_aa(double energy, const SshParams& params,
                                   const AtomCoupling& atom);
ExcitationAmplitudes amplitudes_ab(double energy, const SshParams& params,
                                   const AtomCoupling& atom);

// E = 0 chiral profiles, valid in the topological phase t2 > t1 only.
ExcitationAmplitudes zero_mode_aa(const SshParams& params, const AtomCoupling& atom);
ExcitationAmplitudes zero_mode_ab(const SshParams& params, const AtomCoupling& atom);

// Largest mirror mismatch about the midpoint of the coupling cells:
// | |A_r| - |A_{m+n-r}| | (and B likewise) for aa coupling,
// | |A_r| - |B_{m+n-r}| | (both orders) for ab. Indices wrap on the ring.
double symmetry_check(const ExcitationAmplitudes& state, CouplingKind kind, int n,
                      int m, Boundary boundary = Boundary::periodic);

}  // namespace sshqed
