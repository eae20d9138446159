#include "relosc/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "relosc/integrate.hpp"
#include "relosc/rng.hpp"

namespace relosc {

ScalarField apply_cartesian_ladder(const ScalarField& f, int axis, LadderSign sign) {
    if (axis < 1 || axis > 3)
        throw std::invalid_argument("apply_cartesian_ladder: axis must be 1..3");
    const int a = axis - 1;
    const double lambda = f.kin().lambda;
    ScalarField::CoeffMap out;
    if (sign == LadderSign::raising) {
        for (const auto& [idx, c] : f.coeffs()) {
            ScalarField::Index hi = idx;
            hi[a] = idx[a] + 1;
            out[hi] += lambda * c;
        }
    } else {
        for (const auto& [idx, c] : f.coeffs()) {
            const int j = idx[a];
            if (j == 0) continue;
            ScalarField::Index lo = idx;
            lo[a] = j - 1;
            out[lo] += 2.0 * lambda * static_cast<double>(j) * c;
        }
    }
    return f.replace_coeffs(std::move(out));
}

ScalarField apply_ladder(const ScalarField& f, int mu, LadderSign sign) {
    const Kinematics& k = f.kin();
    switch (mu) {
        case 0:
            return (-f.config().beta * k.gamma) * apply_cartesian_ladder(f, 3, sign);
        case 1:
            return apply_cartesian_ladder(f, 1, sign);
        case 2:
            return apply_cartesian_ladder(f, 2, sign);
        case 3:
            return k.gamma * apply_cartesian_ladder(f, 3, sign);
        default:
            throw std::invalid_argument("apply_ladder: mu must be 0..3");
    }
}

ScalarField apply_ladder_upper(const ScalarField& f, int mu, LadderSign sign) {
    ScalarField g = apply_ladder(f, mu, sign);
    return mu == 0 ? g : -1.0 * g;
}

ScalarField apply_q(const ScalarField& f, int mu) {
    const Complex i{0.0, 1.0};
    switch (mu) {
        case 0:
            return i * f.derivative(Axis::tau);
        case 1:
            return i * f.derivative(Axis::r1);
        case 2:
            return i * f.derivative(Axis::r2);
        case 3:
            return i * f.derivative(Axis::r3);
        default:
            throw std::invalid_argument("apply_q: mu must be 0..3");
    }
}

ScalarField oam_l3_apply(const ScalarField& f) {
    const Complex minus_i{0.0, -1.0};
    const ScalarField a = f.derivative(Axis::r2).shape_multiply(1);  // r1 d_r2 f
    const ScalarField b = f.derivative(Axis::r1).shape_multiply(2);  // r2 d_r1 f
    return minus_i * (a - b);
}

DiffOperator ladder_operator(int mu, LadderSign sign) {
    return {std::string("alpha_") + std::to_string(mu) + "^" + sign_char(sign),
            [mu, sign](const ScalarField& f) { return apply_ladder(f, mu, sign); }};
}

DiffOperator cartesian_ladder_operator(int axis, LadderSign sign) {
    return {std::string("b_") + std::to_string(axis) + "^" + sign_char(sign),
            [axis, sign](const ScalarField& f) { return apply_cartesian_ladder(f, axis, sign); }};
}

DiffOperator oam_l3_operator() {
    return {"L3", [](const ScalarField& f) { return oam_l3_apply(f); }};
}

namespace {

double normalized_max(const ScalarField& defect, const ScalarField& f,
                      std::span<const std::array<double, 4>> pts) {
    const double scale = mass_sq(f.config()) * max_abs_on(f, pts);
    if (scale == 0.0) return 0.0;
    return max_abs_on(defect, pts) / scale;
}

}  // namespace

double p_dot_ladder_residual(const ScalarField& f, std::span<const std::array<double, 4>> pts) {
    const FourVector p = f.kin().momentum;
    ScalarField acc;
    for (int mu = 0; mu < 4; ++mu) {
        if (p[mu] == 0.0) continue;
        const ScalarField sum_mu =
            apply_ladder(f, mu, LadderSign::raising) + apply_ladder(f, mu, LadderSign::lowering);
        acc = acc + p[mu] * sum_mu;
    }
    return normalized_max(acc, f, pts);
}

double ladder_product_residual(const ScalarField& f, LadderSign sign,
                               std::span<const std::array<double, 4>> pts) {
    // Contraction with the metric: left factor (applied second) carries `sign`.
    ScalarField lhs = apply_ladder(apply_ladder(f, 0, opposite(sign)), 0, sign);
    for (int i = 1; i < 4; ++i)
        lhs = lhs - apply_ladder(apply_ladder(f, i, opposite(sign)), i, sign);
    const ScalarField rhs = q_dot_q_apply(f) + potential_apply(f) +
                            (sign_value(sign) * 1.5 * f.config().omega) * f;
    return normalized_max(lhs - rhs, f, pts);
}

double factorization_residual(const ScalarField& f, LadderSign sign,
                              std::span<const std::array<double, 4>> pts) {
    const Kinematics& k = f.kin();
    // Covariant numeric momentum components (E, 0, 0, -p3).
    const std::array<double, 4> p_cov{k.E, 0.0, 0.0, -k.p3};
    const auto apply_k = [&](const ScalarField& g, int mu, LadderSign h) {
        return p_cov[mu] * g + apply_ladder(g, mu, h);
    };

    ScalarField lhs = apply_k(apply_k(f, 0, sign), 0, opposite(sign));
    for (int i = 1; i < 4; ++i) lhs = lhs - apply_k(apply_k(f, i, sign), i, opposite(sign));

    const double m2 = f.config().m * f.config().m;
    const double mass_sq_paired = m2 - sign_value(sign) * 1.5 * f.config().omega;
    lhs = lhs - mass_sq_paired * f;

    // Wave operator with the same numeric momentum (identity side).
    const ScalarField rhs =
        (k.E * k.E - k.p3 * k.p3 - m2) * f + q_dot_q_apply(f) + potential_apply(f);
    return normalized_max(lhs - rhs, f, pts);
}

GroundStateCouples ground_state_couples(const OscillatorConfig& cfg) {
    OscillatorConfig ground = cfg;
    ground.qn = {0, 0, 0};
    const ScalarField psi0 = build_psi(ground);
    const Complex base = psi0.coeffs().at({0, 0, 0});

    double c[4];
    for (int mu = 0; mu < 4; ++mu) {
        const ScalarField g =
            apply_ladder(apply_ladder(psi0, mu, LadderSign::raising), mu, LadderSign::lowering);
        // g must be an exact multiple of psi0: a single (0,0,0) entry.
        Complex ratio{0.0, 0.0};
        double spread = 0.0;
        for (const auto& [idx, coeff] : g.coeffs()) {
            if (idx == ScalarField::Index{0, 0, 0})
                ratio = coeff / base;
            else
                spread = std::max(spread, std::abs(coeff));
        }
        const double scale = std::max(1.0, std::abs(ratio)) * std::abs(base);
        if (spread > 1e-9 * scale || std::abs(ratio.imag()) > 1e-12 * std::max(1.0, std::abs(ratio)))
            throw std::runtime_error("ground_state_couples: field is not a constant multiple of psi0");
        c[mu] = ratio.real();
    }
    return {c[0], c[1], c[2], c[3], c[0] + c[1] + c[2] + c[3]};
}

double first_moment_max(const OscillatorConfig& cfg, const QuadratureRule& rule) {
    OscillatorConfig ground = cfg;
    ground.qn = {0, 0, 0};
    const ScalarField psi0 = build_psi(ground);
    double worst = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (LadderSign sign : {LadderSign::raising, LadderSign::lowering}) {
            const Complex val = inner_product(psi0, apply_ladder(psi0, mu, sign), rule);
            worst = std::max(worst, std::abs(val));
        }
    return worst;
}

std::vector<ScalarField> random_test_fields(const OscillatorConfig& cfg, int count,
                                            int max_degree, int terms, std::uint64_t seed) {
    OscillatorConfig shape = cfg;
    shape.qn = {0, 0, 0};
    validate(shape);
    Rng rng(seed);
    std::vector<ScalarField> fields;
    fields.reserve(count);
    const FourVector zero_momentum{};
    for (int fidx = 0; fidx < count; ++fidx) {
        ScalarField::CoeffMap coeffs;
        int placed = 0;
        while (placed < terms) {
            const int u = rng.index(max_degree + 1);
            const int v = rng.index(max_degree + 1);
            const int w = rng.index(max_degree + 1);
            if (u + v + w > max_degree) continue;
            coeffs[{u, v, w}] += Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            ++placed;
        }
        fields.emplace_back(shape, std::move(coeffs), zero_momentum);
    }
    return fields;
}

}  // namespace relosc
