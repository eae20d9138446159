#pragma once

#include <iosfwd>

#include "relosc/run_config.hpp"

namespace relosc {

// Commands return process exit codes: 0 on success, 1 when a verification
// check fails.  Configuration errors surface as std::invalid_argument /
// std::domain_error, which the CLI maps to exit 2.
//
// File-emitting commands render to rc.out_path (atomic write) when set,
// otherwise stream the rendered table to `report`.
int cmd_verify(const RunConfig& rc, std::ostream& report);
int cmd_spectrum(const RunConfig& rc, std::ostream& report);
int cmd_density(const RunConfig& rc, std::ostream& report);
int cmd_spin_sweep(const RunConfig& rc, std::ostream& report);
int cmd_wavefront(const RunConfig& rc, std::ostream& report);

// Dispatch on rc.command; throws std::invalid_argument for unknown commands.
int run_command(const RunConfig& rc, std::ostream& report);

}  // namespace relosc
