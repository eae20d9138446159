#pragma once

#include <array>
#include <span>

#include "relosc/gamma.hpp"
#include "relosc/operators.hpp"
#include "relosc/quadrature.hpp"
#include "relosc/scalar_field.hpp"

namespace relosc {

// A four-component field built from a scalar oscillator mode.  `sign` labels
// the ladder branch that appears inside the components; `norm` is the overall
// constant already folded into the components (kept for reporting).
struct BispinorField {
    OscillatorConfig cfg;
    LadderSign sign = LadderSign::lowering;
    double s = 0.5;
    std::array<ScalarField, 4> comp;
    double norm = 1.0;
};

// Mass constant paired with the branch: sqrt(m^2 - sign * (3/2) Omega), i.e.
// m_minus for the raising branch and m_plus for the lowering branch.  This is
// the mass that enters both the components and the first-order operator.
// Throws std::domain_error when the square is negative (raising branch above
// the critical frequency).
double paired_mass(const OscillatorConfig& cfg, LadderSign sign);

// Closed-form normalization for the ground mode (u=v=w=0), chosen so the
// instant-form density integrates to 1:
//   lowering: 1 / sqrt((E + m_plus)^2 + p3^2)
//   raising:  1 / sqrt((E + m_minus)^2 + p3^2 + Omega (gamma^2 + beta^2 gamma^2 + 2))
// Throws std::invalid_argument for excited modes, where no closed form is kept.
double norm_constant_closed(const OscillatorConfig& cfg, LadderSign sign);

// Same constant measured by quadrature on the unnormalized components; valid
// for any mode.  Used to cross-check the closed form and to normalize excited
// modes.
double norm_constant_measured(const OscillatorConfig& cfg, LadderSign sign,
                              const QuadratureRule& rule);

// Builds the bispinor for the requested branch.  The upper doublet carries
// (E + m + alpha_0) on chi(s); the lower doublet couples through sigma3,
//   (p3 + alpha_3) sigma3 chi(s) + (alpha_1 + 2 i s alpha_2) chi(-s),
// the sigma3 factor fixing the relative sign between the two spin states so
// that the lowering branch solves its first-order equation at every velocity.
// Ground modes use the closed-form normalization; excited modes (experimental)
// are normalized by quadrature of the given order.
BispinorField build_bispinor(const OscillatorConfig& cfg, LadderSign sign,
                             int quad_order = 40);

// Max over probe points and components of |D psi| / (M * max|psi|), where
//   D = gamma_mu (P^mu + alpha^{sign, mu}) - paired_mass(sign).
// For the lowering branch this vanishes to rounding.  For the raising branch
// no Hermite-Gaussian bispinor annihilates D: the purely raised sector of the
// candidate equation is injective, so the residual stays order unity.  See the
// README numerical notes.
double dirac_residual(const BispinorField& bs,
                      std::span<const std::array<double, 4>> pts,
                      const GammaSet& gammas = dirac_gamma_set());

// Component-wise complex conjugate (row-form ingredients for sesquilinear
// integrals).
std::array<ScalarField, 4> conjugate_components(const BispinorField& bs);

}  // namespace relosc
