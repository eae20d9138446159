#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "relosc/four_vector.hpp"

namespace relosc {

// Every formula in this library assumes natural units hbar = c = 1.  The enum
// exists so that configuration and reports can state the convention explicitly.
enum class UnitsConvention { natural };

struct Units {
    UnitsConvention convention = UnitsConvention::natural;
    // Characteristic oscillator length sqrt(2/Omega); used only for reporting
    // and for sizing probe/plot grids, never inside the dynamics.
    double length_scale = 0.0;
};

struct QuantumNumbers {
    int u = 0;
    int v = 0;
    int w = 0;

    // Total excitation; always recomputed from the triple, never stored.
    constexpr int n() const { return u + v + w; }

    friend constexpr bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

// Physical parameters of one oscillator state.  Single source of kinematic
// truth: everything else (gamma, M, E, p3, the +/- mass-squared splittings)
// is derived through kinematics() below.
struct OscillatorConfig {
    double m = 1.0;            // constituent rest mass
    double omega = 2.0 / 3.0;  // spring constant Omega > 0
    double beta = 0.0;         // boost velocity along axis 3, in [0, 1)
    QuantumNumbers qn{};
    double s = 0.5;            // spin projection, +1/2 or -1/2

    friend constexpr bool operator==(const OscillatorConfig&, const OscillatorConfig&) = default;
};

struct Kinematics {
    double gamma = 1.0;     // 1/sqrt(1 - beta^2)
    double lambda = 0.0;    // sqrt(Omega/2); inverse of the characteristic length
    double M = 0.0;         // oscillator rest energy, M^2 = Omega(3/2 + n) + m^2
    double E = 0.0;         // gamma * M
    double p3 = 0.0;        // beta * E, so p3/E == beta holds bit-exactly
    double m_plus_sq = 0.0;   // m^2 + (3/2) Omega
    double m_minus_sq = 0.0;  // m^2 - (3/2) Omega; may be negative (kept squared)
    bool over_critical = false;  // m_minus_sq < 0
    FourVector momentum{};       // (E, 0, 0, p3)
};

// Spring constant at which m_minus vanishes: 2 m^2 / 3.
inline double critical_omega(double m) { return 2.0 * m * m / 3.0; }

// Characteristic oscillator length sqrt(2/Omega).
inline double length_scale(double omega) { return std::sqrt(2.0 / omega); }

inline double mass_sq(const OscillatorConfig& cfg) {
    return cfg.omega * (1.5 + cfg.qn.n()) + cfg.m * cfg.m;
}

// Throws std::invalid_argument on out-of-domain parameters.  Omega = 0 is
// allowed here (free limit, used by spectrum tables); field construction
// additionally requires Omega > 0 and checks it separately.
inline void validate(const OscillatorConfig& cfg) {
    if (!(cfg.m > 0.0))
        throw std::invalid_argument("OscillatorConfig: m must be > 0, got " + std::to_string(cfg.m));
    if (!(cfg.omega >= 0.0))
        throw std::invalid_argument("OscillatorConfig: Omega must be >= 0, got " + std::to_string(cfg.omega));
    if (!(cfg.beta >= 0.0) || !(cfg.beta < 1.0))
        throw std::invalid_argument("OscillatorConfig: beta must lie in [0, 1), got " + std::to_string(cfg.beta));
    if (cfg.qn.u < 0 || cfg.qn.v < 0 || cfg.qn.w < 0)
        throw std::invalid_argument("OscillatorConfig: quantum numbers must be non-negative");
    if (cfg.s != 0.5 && cfg.s != -0.5)
        throw std::invalid_argument("OscillatorConfig: s must be +1/2 or -1/2");
}

inline Kinematics kinematics(const OscillatorConfig& cfg) {
    validate(cfg);
    Kinematics k;
    k.gamma = 1.0 / std::sqrt(1.0 - cfg.beta * cfg.beta);
    k.lambda = std::sqrt(cfg.omega / 2.0);
    k.M = std::sqrt(mass_sq(cfg));
    k.E = k.gamma * k.M;
    k.p3 = cfg.beta * k.E;  // beta * E rather than gamma*beta*M: keeps p3/E == beta exact
    k.m_plus_sq = cfg.m * cfg.m + 1.5 * cfg.omega;
    k.m_minus_sq = cfg.m * cfg.m - 1.5 * cfg.omega;
    k.over_critical = k.m_minus_sq < 0.0;
    k.momentum = FourVector{{{k.E, 0.0, 0.0, k.p3}}};
    return k;
}

}  // namespace relosc
