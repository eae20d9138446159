#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relosc/config.hpp"
#include "relosc/io.hpp"
#include "relosc/operators.hpp"

namespace relosc {

struct BetaGrid {
    double start = 0.0;
    double stop = 0.99;
    int count = 101;
    bool operator==(const BetaGrid&) const = default;
};

// Fully resolved description of one tool invocation.  Embedded as the
// metadata block of every output file, so any file traces back to the run
// that produced it (and parses back to an equal RunConfig).
struct RunConfig {
    std::string command;
    double m = 1.0;
    bool critical = true;      // frequency tied to 2 m^2 / 3
    double omega = 2.0 / 3.0;  // resolved value, kept in sync with `critical`
    double beta = 0.0;
    std::optional<BetaGrid> beta_grid;
    QuantumNumbers qn{};
    double s = 0.5;
    char sign = '+';  // ladder branch for bispinor-based commands
    int quad_order = 40;
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 1;

    int n_max = 5;            // spectrum: levels 0..n_max
    int grid_points = 41;     // density: points per axis
    double grid_radius = 3.0; // density: half-width in characteristic lengths
    bool marginal = false;    // density: emit the r3 marginal instead
    int component = -1;       // wavefront: -1 resolves to the twisted slot
    double radius = 2.0;      // wavefront: rho cap in characteristic lengths
    double level = 0.0;       // wavefront: isophase value
    int points = 64;          // wavefront: azimuthal samples per ring

    bool operator==(const RunConfig&) const = default;
};

// Oscillator configuration of the run at one velocity.
OscillatorConfig oscillator_config(const RunConfig& rc, double beta);

LadderSign run_sign(const RunConfig& rc);  // '+' raising, '-' lowering

// count evenly spaced values from start to stop inclusive (count >= 2),
// or {start} when count == 1.
std::vector<double> resolve_beta_grid(const BetaGrid& g);

BetaGrid parse_beta_grid(const std::string& text);  // "start:stop:count"

io::Metadata to_metadata(const RunConfig& rc);
// Ignores unknown keys (commands may append notes after the config block);
// throws std::invalid_argument on malformed values.
RunConfig from_metadata(const io::Metadata& meta);

}  // namespace relosc
