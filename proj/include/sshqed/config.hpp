// config.hpp — run configuration: a flat key = value file mirrored one-to-one
// by CLI flags, so figure recipes are reproducible text documents.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sshqed/lattice.hpp"
#include "sshqed/tables.hpp"

namespace sshqed {

struct RunConfig {
    SshParams params;
    AtomCoupling atom;
    ProbeConfig probe;

    // sweeps
    double theta_min = 0.0;
    double theta_max = 2.0 * pi;
    int theta_points = 201;
    std::vector<int> d_list;       // spectrum: one table per atom size
    std::vector<double> k_list;    // effective: partner-coupling curves

    // outputs
    std::string outdir = "out";
    OutputFormat format = OutputFormat::csv;
    bool absolute_units = false;   // default emits energies in units of q

    // numerics
    double band_eps_scale = 1e-6;  // level classification tolerance, in q
    int threads = 1;

    // distribution / probe
    std::string target = "zero";
    double time_max = 0.0;         // 0 = derive from the Rabi period estimate
    int time_points = 600;

    // validate-only fault injection (negative control)
    double corrupt_t2 = 0.0;

    void validate() const;
    std::vector<double> theta_grid() const;
};

// Accepts "0.8pi"/"0.8 pi" or a plain number in radians.
double parse_angle(const std::string& text);

// Applies one key = value assignment; unknown keys raise InputError naming the key.
void apply_key(RunConfig& config, const std::string& key, const std::string& value);

RunConfig load_config(const std::filesystem::path& path);

}  // namespace sshqed
