#include "relosc/observables.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace relosc {

namespace {

// Diagonal of (1/2) diag(sigma3, sigma3) in the component basis.
constexpr std::array<double, 4> spin_diag{0.5, -0.5, 0.5, -0.5};

StateDescriptor describe(const OscillatorConfig& cfg, char sign_label) {
    StateDescriptor d;
    d.sign = sign_label;
    d.s = cfg.s;
    d.n = cfg.qn.n();
    d.beta = cfg.beta;
    d.omega = cfg.omega;
    d.m = cfg.m;
    return d;
}

Complex bispinor_pairing(const BispinorField& bra, AngularOp op,
                         const BispinorField& ket, const QuadratureRule& rule,
                         double* abs_scale) {
    Complex total{0.0, 0.0};
    double mag = 0.0;
    for (int d = 0; d < 4; ++d) {
        const ScalarField& b = bra.comp[d];
        const ScalarField& k = ket.comp[d];
        if (b.is_zero() || k.is_zero()) continue;
        if (op == AngularOp::identity || op == AngularOp::spin_s3 ||
            op == AngularOp::tam_j3) {
            const double w = op == AngularOp::identity ? 1.0 : spin_diag[d];
            total += w * inner_product(b, k, rule);
            mag += std::abs(w) * inner_product_abs(b, k, rule);
        }
        if (op == AngularOp::oam_l3 || op == AngularOp::tam_j3) {
            const ScalarField lk = oam_l3_apply(k);
            total += inner_product(b, lk, rule);
            mag += inner_product_abs(b, lk, rule);
        }
    }
    if (abs_scale) *abs_scale = mag;
    return total;
}

double roundoff_floor(double abs_scale) {
    return 64.0 * std::numeric_limits<double>::epsilon() * abs_scale;
}

}  // namespace

std::string angular_op_name(AngularOp op) {
    switch (op) {
        case AngularOp::identity: return "identity";
        case AngularOp::spin_s3: return "spin_s3";
        case AngularOp::oam_l3: return "oam_l3";
        case AngularOp::tam_j3: return "tam_j3";
    }
    return "unknown";
}

ExpectationResult expect(const BispinorField& bra, AngularOp op,
                         const BispinorField& ket, int quad_order) {
    if (!(bra.cfg == ket.cfg))
        throw std::invalid_argument(
            "expectation requires bra and ket with the same configuration");
    const QuadratureRule full = gauss_hermite(quad_order);
    const QuadratureRule half = gauss_hermite(std::max(2, quad_order / 2));
    double mag = 0.0;
    const Complex v_full = bispinor_pairing(bra, op, ket, full, &mag);
    const Complex v_half = bispinor_pairing(bra, op, ket, half, nullptr);
    ExpectationResult r;
    r.value = v_full;
    r.quad_error = std::abs(v_full - v_half) + roundoff_floor(mag);
    r.op_name = angular_op_name(op);
    r.state = describe(bra.cfg, sign_char(bra.sign));
    return r;
}

ExpectationResult expect(const ScalarField& bra, AngularOp op,
                         const ScalarField& ket, int quad_order) {
    if (op == AngularOp::spin_s3)
        throw std::invalid_argument(
            "spin_s3 acts on bispinor components, not scalar fields");
    if (!(bra.config() == ket.config()))
        throw std::invalid_argument(
            "expectation requires bra and ket with the same configuration");
    const QuadratureRule full = gauss_hermite(quad_order);
    const QuadratureRule half = gauss_hermite(std::max(2, quad_order / 2));
    const ScalarField target =
        op == AngularOp::identity ? ket : oam_l3_apply(ket);
    ExpectationResult r;
    r.value = inner_product(bra, target, full);
    r.quad_error = std::abs(r.value - inner_product(bra, target, half)) +
                   roundoff_floor(inner_product_abs(bra, target, full));
    r.op_name = angular_op_name(op);
    r.state = describe(bra.config(), '0');
    return r;
}

double second_moment(const ScalarField& f, int axis, int quad_order) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument("moment axis must be 1, 2, or 3");
    const QuadratureRule rule = gauss_hermite(quad_order);
    // shape_multiply applies the contracted variable y3 = gamma (r3 - beta tau)
    // on axis 3; at tau = 0 one factor of r3 is y3 / gamma.
    const ScalarField rf = f.shape_multiply(axis).shape_multiply(axis);
    const double scale =
        axis == 3 ? 1.0 / (f.kin().gamma * f.kin().gamma) : 1.0;
    const double num = scale * inner_product(f, rf, rule).real();
    const double den = inner_product(f, f, rule).real();
    return num / den;
}

double sam_expect(const BispinorField& bs, int quad_order) {
    return expect(bs, AngularOp::spin_s3, bs, quad_order).value.real();
}

double oam_expect(const BispinorField& bs, int quad_order) {
    return expect(bs, AngularOp::oam_l3, bs, quad_order).value.real();
}

double tam_expect(const BispinorField& bs, int quad_order) {
    return expect(bs, AngularOp::tam_j3, bs, quad_order).value.real();
}

double sam_closed(const OscillatorConfig& cfg, LadderSign sign) {
    if (sign == LadderSign::lowering) return cfg.s;
    const Kinematics kin = kinematics(cfg);
    const double n = norm_constant_closed(cfg, sign);
    const double m_minus = paired_mass(cfg, sign);
    const double g2 = kin.gamma * kin.gamma;
    const double bracket = (kin.E + m_minus) * (kin.E + m_minus) +
                           kin.p3 * kin.p3 +
                           cfg.omega * (g2 + cfg.beta * cfg.beta * g2 - 2.0);
    return n * n * bracket * cfg.s;
}

double oam_closed(const OscillatorConfig& cfg, LadderSign sign) {
    if (sign == LadderSign::lowering) return 0.0;
    const double n = norm_constant_closed(cfg, sign);
    return n * n * 4.0 * cfg.omega * cfg.s;
}

double critical_sam_ratio(double beta) {
    return (1.0 + 3.0 * beta * beta) / (3.0 + beta * beta);
}

double critical_oam_ratio(double beta) {
    return (2.0 - 2.0 * beta * beta) / (3.0 + beta * beta);
}

std::vector<SpinCompositionRow> spin_composition_sweep(
    double m, double omega, const std::vector<double>& betas, double s,
    int quad_order) {
    std::vector<SpinCompositionRow> rows;
    rows.reserve(betas.size());
    for (const double beta : betas) {
        if (!(beta >= 0.0 && beta < 1.0))
            throw std::invalid_argument("sweep velocities must lie in [0, 1)");
        OscillatorConfig cfg;
        cfg.m = m;
        cfg.omega = omega;
        cfg.beta = beta;
        cfg.qn = {0, 0, 0};
        cfg.s = s;
        const BispinorField bs =
            build_bispinor(cfg, LadderSign::raising, quad_order);
        const ExpectationResult sam =
            expect(bs, AngularOp::spin_s3, bs, quad_order);
        const ExpectationResult oam =
            expect(bs, AngularOp::oam_l3, bs, quad_order);
        SpinCompositionRow row;
        row.beta = beta;
        row.sam_over_s = sam.value.real() / s;
        row.oam_over_s = oam.value.real() / s;
        row.tam_over_s = row.sam_over_s + row.oam_over_s;
        row.sam_closed_over_s = sam_closed(cfg, LadderSign::raising) / s;
        row.oam_closed_over_s = oam_closed(cfg, LadderSign::raising) / s;
        row.abs_err_sam = std::abs(row.sam_over_s - row.sam_closed_over_s);
        row.abs_err_oam = std::abs(row.oam_over_s - row.oam_closed_over_s);
        row.quad_error_sam = sam.quad_error / std::abs(s);
        row.quad_error_oam = oam.quad_error / std::abs(s);
        rows.push_back(row);
    }
    return rows;
}

PhaseSurface phase_surface(const BispinorField& bs, int component,
                           double radius, double level, int points_per_ring) {
    if (component < 0 || component > 3)
        throw std::invalid_argument("component index must lie in 0..3");
    if (points_per_ring < 1)
        throw std::invalid_argument("need at least one point per ring");
    const Kinematics kin = kinematics(bs.cfg);
    if (kin.p3 == 0.0)
        throw std::invalid_argument(
            "isophase sheets need nonzero momentum along axis 3 (beta > 0)");

    // Only the transverse-ladder component carries exp(2 i s phi); its slot
    // follows the spin projection (see the bispinor layout).
    const int helicoid_slot = bs.s > 0.0 ? 3 : 2;
    PhaseSurface out;
    out.component = component;
    out.helicoid = component == helicoid_slot && !bs.comp[component].is_zero();
    out.handedness = out.helicoid ? (bs.s > 0.0 ? 1.0 : -1.0) : 0.0;
    if (radius <= 0.0) return out;

    const double two_s = 2.0 * bs.s;
    constexpr int rings = 8;
    constexpr double pi = std::numbers::pi;
    out.points.reserve(static_cast<std::size_t>(rings) * points_per_ring);
    for (int k = 1; k <= rings; ++k) {
        const double rho = radius * static_cast<double>(k) / rings;
        for (int j = 0; j < points_per_ring; ++j) {
            const double phi =
                -pi + 2.0 * pi * static_cast<double>(j) / points_per_ring;
            PhasePoint p;
            p.rho = rho;
            p.phi = phi;
            p.x1 = rho * std::cos(phi);
            p.x2 = rho * std::sin(phi);
            p.x3 = out.helicoid ? (level - two_s * phi) / kin.p3
                                : level / kin.p3;
            out.points.push_back(p);
        }
    }
    return out;
}

}  // namespace relosc
