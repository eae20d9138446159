#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "relosc/quadrature.hpp"
#include "relosc/scalar_field.hpp"

namespace relosc {

// First-class linear operator on fields.
struct DiffOperator {
    std::string name;
    std::function<ScalarField(const ScalarField&)> fn;
    ScalarField operator()(const ScalarField& f) const { return fn(f); }
};

enum class LadderSign : int { raising = +1, lowering = -1 };

constexpr LadderSign opposite(LadderSign s) {
    return s == LadderSign::raising ? LadderSign::lowering : LadderSign::raising;
}
constexpr int sign_value(LadderSign s) { return static_cast<int>(s); }
constexpr char sign_char(LadderSign s) { return s == LadderSign::raising ? '+' : '-'; }

// Cartesian shape-axis ladder  b_i^{±} = ∓ d/dy_i + (Omega/2) y_i  (axis 1..3,
// axis 3 acting on the boosted shape variable).  On the basis functions these
// are exact index shifts:
//   b^+ phi_j = lambda phi_{j+1},   b^- phi_j = 2 lambda j phi_{j-1}.
ScalarField apply_cartesian_ladder(const ScalarField& f, int axis, LadderSign sign);

// Covariant ladder component (lower index mu 0..3):
//   alpha_0^{±} = -beta gamma b_3^{±}   ( = ∓d_tau - (Omega/2) beta gamma^2 (r3 - beta tau) )
//   alpha_1^{±} =  b_1^{±}              ( = ∓d_r1  + (Omega/2) r1 )
//   alpha_2^{±} =  b_2^{±}
//   alpha_3^{±} =  gamma b_3^{±}        ( = ∓d_r3  + (Omega/2) gamma^2 (r3 - beta tau) )
ScalarField apply_ladder(const ScalarField& f, int mu, LadderSign sign);

// Contravariant component alpha^{mu}: index raised with diag(+,-,-,-).
ScalarField apply_ladder_upper(const ScalarField& f, int mu, LadderSign sign);

// Relative-momentum component Q_mu = i d/dR^mu (lower index).
ScalarField apply_q(const ScalarField& f, int mu);

// Orbital angular momentum about the boost axis: L3 = -i (r1 d_r2 - r2 d_r1).
ScalarField oam_l3_apply(const ScalarField& f);

DiffOperator ladder_operator(int mu, LadderSign sign);
DiffOperator cartesian_ladder_operator(int axis, LadderSign sign);
DiffOperator oam_l3_operator();

// --- operator identities, reported as normalized residuals ------------------
// Each returns  max |(identity defect) f| / (M^2 max |f|)  over the probe
// points.  The numeric four-momentum is taken from the field's kinematics
// (these are operator identities; they hold for arbitrary test fields).

// P^mu (alpha_mu^+ + alpha_mu^-) = 0: the multiplication parts cancel against
// p3 = beta E identically.
double p_dot_ladder_residual(const ScalarField& f, std::span<const std::array<double, 4>> pts);

// alpha_mu^{sign} alpha^{opposite mu} = Q.Q + U + sign * (3/2) Omega
// (left factor carries `sign` and is applied second).
double ladder_product_residual(const ScalarField& f, LadderSign sign,
                               std::span<const std::array<double, 4>> pts);

// (P + alpha^{opposite})·(P + alpha^{sign}) - m_{opposite}^2  equals the full
// wave operator P.P + Q.Q + U - m^2; `sign` labels the right (first applied)
// factor and m_{opposite}^2 = m^2 - sign*(3/2)Omega is the mass square that
// pairs with it.
double factorization_residual(const ScalarField& f, LadderSign sign,
                              std::span<const std::array<double, 4>> pts);

// --- ground-state ladder actions --------------------------------------------

struct GroundStateCouples {
    double c0, c1, c2, c3;  // alpha_mu^- alpha_mu^+ psi0 = c_mu psi0 (no sum)
    double sum;             // c0 + c1 + c2 + c3
};

// Extracts the couples numerically and checks the ratio field/psi0 is constant
// (throws std::runtime_error if the relative spread exceeds 1e-9).
// Expected values: c0 = beta^2 gamma^2 Omega, c1 = c2 = Omega, c3 = gamma^2 Omega,
// sum = Omega (gamma^2 + beta^2 gamma^2 + 2).
GroundStateCouples ground_state_couples(const OscillatorConfig& cfg);

// max over mu and sign of |<psi0, alpha_mu^{±} psi0>| (instant-form quadrature):
// every first moment vanishes by parity.
double first_moment_max(const OscillatorConfig& cfg, const QuadratureRule& rule);

// Reproducible corpus of random polynomial-times-Gaussian fields (phaseless,
// degree <= max_degree, `terms` monomials each) sharing cfg's kinematics.
std::vector<ScalarField> random_test_fields(const OscillatorConfig& cfg, int count,
                                            int max_degree, int terms, std::uint64_t seed);

}  // namespace relosc
