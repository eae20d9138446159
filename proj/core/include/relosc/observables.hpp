#pragma once

#include <string>
#include <vector>

#include "relosc/bispinor.hpp"
#include "relosc/integrate.hpp"
#include "relosc/operators.hpp"

namespace relosc {

// Angular-momentum operators along the boost axis.  spin_s3 is the constant
// matrix (1/2) diag(sigma3, sigma3); oam_l3 acts componentwise as
// -i (r1 d/dr2 - r2 d/dr1); tam_j3 is their sum.
enum class AngularOp { identity, spin_s3, oam_l3, tam_j3 };

std::string angular_op_name(AngularOp op);

struct StateDescriptor {
    char sign = '0';  // ladder branch of the state ('+'/'-'), '0' for scalars
    double s = 0.0;
    int n = 0;
    double beta = 0.0;
    double omega = 0.0;
    double m = 0.0;
};

struct ExpectationResult {
    Complex value{0.0, 0.0};
    // |order-N value minus order-N/2 value| plus a roundoff floor scaled by
    // the L1 magnitude of the integrand.
    double quad_error = 0.0;
    std::string op_name;
    StateDescriptor state;
};

// Instant-form expectation <bra| op |ket>: 3-D Gauss-Hermite quadrature on
// the tau = 0 surface, conjugating the bra components.
ExpectationResult expect(const BispinorField& bra, AngularOp op,
                         const BispinorField& ket, int quad_order = 40);
// Scalar overload: identity and oam_l3 (tam_j3 coincides with oam_l3 for a
// one-component field); spin_s3 is rejected.
ExpectationResult expect(const ScalarField& bra, AngularOp op,
                         const ScalarField& ket, int quad_order = 40);

// <r_axis^2> / <1> of a scalar state (axis in {1, 2, 3}), instant form.
double second_moment(const ScalarField& f, int axis, int quad_order = 40);

double sam_expect(const BispinorField& bs, int quad_order = 40);
double oam_expect(const BispinorField& bs, int quad_order = 40);
double tam_expect(const BispinorField& bs, int quad_order = 40);

// Closed forms for the ground mode:
//   lowering: sam = s, oam = 0
//   raising:  sam = N+^2 [(E+m_-)^2 + p3^2 + Omega (gamma^2 + beta^2 gamma^2 - 2)] s
//             oam = N+^2 4 Omega s
// Their sum is s for either branch.
double sam_closed(const OscillatorConfig& cfg, LadderSign sign);
double oam_closed(const OscillatorConfig& cfg, LadderSign sign);

// At the critical frequency Omega = 2 m^2 / 3 the raising-branch ratios
// collapse to functions of beta alone.
double critical_sam_ratio(double beta);  // (1 + 3 b^2) / (3 + b^2)
double critical_oam_ratio(double beta);  // (2 - 2 b^2) / (3 + b^2)

struct SpinCompositionRow {
    double beta = 0.0;
    double sam_over_s = 0.0;  // quadrature values per unit s
    double oam_over_s = 0.0;
    double tam_over_s = 0.0;
    double sam_closed_over_s = 0.0;
    double oam_closed_over_s = 0.0;
    double abs_err_sam = 0.0;  // |quadrature - closed| on the per-unit-s scale
    double abs_err_oam = 0.0;
    double quad_error_sam = 0.0;  // quadrature self-estimates, same scale
    double quad_error_oam = 0.0;
};

// One row per beta for the raising-branch ground mode.  Rejects beta outside
// [0, 1); construction itself rejects frequencies with m_-^2 < 0.
std::vector<SpinCompositionRow> spin_composition_sweep(
    double m, double omega, const std::vector<double>& betas, double s,
    int quad_order = 40);

struct PhasePoint {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double rho = 0.0;
    double phi = 0.0;
};

struct PhaseSurface {
    int component = 0;
    bool helicoid = false;    // false: phase carries no phi term (planar)
    double handedness = 0.0;  // sign of the phi coefficient (2s); 0 if planar
    std::vector<PhasePoint> points;
};

// Isophase sheet of one bispinor component of the raising branch at t = 0,
// where the phase angle is p3 x3 + (2s) phi for the transverse-ladder
// component and p3 x3 for the others.  Helicoid: x3 = (level - 2 s phi)/p3
// over one turn phi in [-pi, pi); planar: x3 = level/p3.  Samples 8 radial
// rings rho <= radius with points_per_ring azimuthal samples each;
// radius = 0 gives an empty point set.  Requires p3 != 0.
PhaseSurface phase_surface(const BispinorField& bs, int component,
                           double radius, double level, int points_per_ring);

}  // namespace relosc
