#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "relosc/config.hpp"

namespace relosc {

using Complex = std::complex<double>;

// Relative coordinates of the two-body system: tau is the relative time,
// r1..r3 the relative spatial coordinates.  The boost is along axis 3.
enum class Axis { tau = 0, r1 = 1, r2 = 2, r3 = 3 };

// A solution-space field
//
//   F(tau, r) = sum_{u,v,w} c_{uvw} H_u(z1) H_v(z2) H_w(z3)
//               * exp(-(z1^2 + z2^2 + z3^2)/2) * phase,
//
// where z1 = lambda r1, z2 = lambda r2, z3 = lambda gamma (r3 - beta tau),
// lambda = sqrt(Omega/2).  The boosted third argument makes the shape an
// exact eigenfunction family at every beta.  The plane-wave factor
// exp(-i (E t - p3 x3)) lives on the carrier coordinates (t, x3), which are
// independent of the relative ones, so it enters evaluation only through a
// stored reference point and the stored four-momentum.  A field with zero
// stored momentum represents a bare shape (no plane-wave factor).
//
// Fields are immutable: every operation returns a new value.
class ScalarField {
public:
    using Index = std::array<int, 3>;  // Hermite orders per axis
    using CoeffMap = std::map<Index, Complex>;

    ScalarField() = default;
    ScalarField(const OscillatorConfig& cfg, CoeffMap coeffs, const FourVector& momentum);

    const OscillatorConfig& config() const { return cfg_; }
    const Kinematics& kin() const { return kin_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    const FourVector& momentum() const { return momentum_; }
    double phase_ref_t() const { return phase_t_; }
    double phase_ref_x3() const { return phase_x3_; }
    // Normalization constant of the generating eigenstate; informational,
    // 0 for fields that are not built/normalized eigenstates.
    double norm_constant() const { return norm_constant_; }
    bool is_zero() const { return coeffs_.empty(); }

    Complex evaluate(double tau, double r1, double r2, double r3) const;
    // Polynomial part only (no Gaussian envelope, no plane-wave phase),
    // as a function of the dimensionless arguments z1, z2, z3.
    Complex evaluate_bare(double z1, double z2, double z3) const;
    Complex phase_factor() const;

    // Analytic partial derivative with respect to a relative coordinate.
    ScalarField derivative(Axis a) const;
    // d/dy_i and y_i* in the shape variables y1 = r1, y2 = r2,
    // y3 = gamma (r3 - beta tau); axis in {1, 2, 3}.
    ScalarField shape_derivative(int axis) const;
    ScalarField shape_multiply(int axis) const;

    // Copy carrying the same kinematic context and phase data but the given
    // coefficient map; the building block for linear operators.
    ScalarField replace_coeffs(CoeffMap m) const;

    ScalarField conjugate() const;  // conjugates coefficients, negates momentum
    ScalarField with_phase_reference(double t, double x3) const;
    ScalarField with_momentum(const FourVector& p) const;  // e.g. zero = strip phase
    ScalarField with_norm_constant(double n) const;

    ScalarField operator+(const ScalarField& rhs) const;
    ScalarField operator-(const ScalarField& rhs) const;
    friend ScalarField operator*(Complex k, const ScalarField& f);
    friend ScalarField operator*(double k, const ScalarField& f);

    // Highest Hermite order used on each axis (0 for empty fields).
    const Index& max_orders() const { return max_orders_; }

private:
    OscillatorConfig cfg_{};
    Kinematics kin_{};
    CoeffMap coeffs_;
    FourVector momentum_{};
    double phase_t_ = 0.0;
    double phase_x3_ = 0.0;
    double norm_constant_ = 0.0;
    Index max_orders_{0, 0, 0};

    void prune_and_scan();           // drop exact zeros, refresh max_orders_
    void require_compatible(const ScalarField& rhs) const;
};

// Normalization constant of the (u,v,w) eigenstate:
//   N^2 = gamma lambda^3 / (pi^{3/2} 2^n u! v! w!),
// fixed by the instant-form condition  integral |Psi|^2 d^3r = 1  at tau = 0
// (the third axis contributes 1/gamma through the contracted argument).
double norm_constant(const OscillatorConfig& cfg);

// The normalized eigenstate with the config's quantum numbers and the
// plane-wave four-momentum (E, 0, 0, p3).  Requires Omega > 0.
ScalarField build_psi(const OscillatorConfig& cfg);

// Instant-form probability density |Psi(tau=0, r)|^2.
double density(const ScalarField& f, double r1, double r2, double r3);

// Probe points for residual checks: a 5^4 tensor grid over
// [-3, 3] characteristic lengths in (tau, r1, r2, r3) plus 20 random
// points from the given seed.
std::vector<std::array<double, 4>> probe_points(const OscillatorConfig& cfg,
                                                std::uint64_t seed);

double max_abs_on(const ScalarField& f, std::span<const std::array<double, 4>> pts);

// Second-order relative-coordinate wave operator  -d_tau^2 + d_r1^2 + d_r2^2 + d_r3^2
// (the contraction of the relative momentum with itself, sign convention such
// that it reduces to the spatial Laplacian in the rest frame).
ScalarField q_dot_q_apply(const ScalarField& f);

// Potential term  -(Omega^2/4) (r1^2 + r2^2 + (gamma (r3 - beta tau))^2) f.
ScalarField potential_apply(const ScalarField& f);

// Full wave operator  [P.P + Q.Q + U - m^2] f,  with P.P taken from the
// field's stored four-momentum (so a field with the plane-wave factor
// stripped fails the P.P constraint, as it should).
ScalarField kge_apply(const ScalarField& f);

// max |kge_apply(f)| / (M^2 max |f|) over the probe points.
double kge_residual(const ScalarField& f, std::span<const std::array<double, 4>> pts);

struct ConstraintResiduals {
    double pp = 0.0;  // |[P.P - M^2] f| normalized
    double pq = 0.0;  // |P^mu Q_mu f| normalized, P the stored numeric momentum
};
ConstraintResiduals constraint_residuals(const ScalarField& f,
                                         std::span<const std::array<double, 4>> pts);

// Leading-order oscillator energy  omega_nr (3/2 + n)  with omega_nr = Omega/(2m);
// the relativistic M - m approaches this as Omega/m^2 -> 0.
double nonrelativistic_energy(const OscillatorConfig& cfg);

}  // namespace relosc
