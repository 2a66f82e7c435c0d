// commands.hpp — the five CLI commands. Each returns deterministic tables;
// the driver decides where and in which format to write them.

#pragma once

#include <vector>

#include "sshqed/config.hpp"
#include "sshqed/tables.hpp"

namespace sshqed {

struct CommandResult {
    std::vector<OutputTable> tables;
    bool passed = true;  // only run_validate may clear this
};

// Energy spectrum versus theta, one table per coupling geometry.
CommandResult run_spectrum(const RunConfig& config);

// Photon distribution of a selected level, with the matching closed-form
// profile when one exists (zero modes, bound and gap states).
CommandResult run_distribution(const RunConfig& config);

// Momentum-space couplings g_{k,band}, the induced photon-photon matrix G,
// and partner-pair coupling curves versus theta.
CommandResult run_effective(const RunConfig& config);

// Probe-atom Rabi experiment against the zero mode.
CommandResult run_probe(const RunConfig& config);

// Cross-validation battery: closed-form against exact diagonalization.
CommandResult run_validate(const RunConfig& config);

}  // namespace sshqed
