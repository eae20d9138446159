#include "relosc/bispinor.hpp"

#include <cmath>
#include <stdexcept>

#include "relosc/integrate.hpp"

namespace relosc {

namespace {

// Unnormalized components for the requested branch.  With chi(s) the
// two-spinor of the spin projection and m_in the paired mass,
//   upper doublet: (E + m_in + alpha_0) Psi  on chi(s)
//   lower doublet: (p3 + alpha_3) Psi on sigma3 chi(s)
//                  + (alpha_1 + 2 i s alpha_2) Psi on chi(-s),
// and sigma3 chi(s) = 2s chi(s).
std::array<ScalarField, 4> raw_components(const OscillatorConfig& cfg,
                                          LadderSign sign) {
    const Kinematics kin = kinematics(cfg);
    const double m_in = paired_mass(cfg, sign);
    const ScalarField psi = build_psi(cfg);
    const ScalarField zero(cfg, {}, kin.momentum);

    const ScalarField a = (kin.E + m_in) * psi + apply_ladder(psi, 0, sign);
    const ScalarField b = kin.p3 * psi + apply_ladder(psi, 3, sign);
    const Complex two_i_s{0.0, 2.0 * cfg.s};
    const ScalarField c =
        apply_ladder(psi, 1, sign) + two_i_s * apply_ladder(psi, 2, sign);

    const double two_s = 2.0 * cfg.s;
    if (cfg.s > 0.0) return {a, zero, two_s * b, c};
    return {zero, a, c, two_s * b};
}

}  // namespace

double paired_mass(const OscillatorConfig& cfg, LadderSign sign) {
    const Kinematics kin = kinematics(cfg);
    const double msq =
        sign == LadderSign::raising ? kin.m_minus_sq : kin.m_plus_sq;
    if (msq < 0.0)
        throw std::domain_error(
            "paired mass squared is negative: the frequency exceeds the "
            "critical value for the raising branch");
    return std::sqrt(msq);
}

double norm_constant_closed(const OscillatorConfig& cfg, LadderSign sign) {
    if (cfg.qn.n() != 0)
        throw std::invalid_argument(
            "closed-form bispinor normalization is only kept for the ground "
            "mode (u = v = w = 0)");
    const Kinematics kin = kinematics(cfg);
    const double m_in = paired_mass(cfg, sign);
    const double base = (kin.E + m_in) * (kin.E + m_in) + kin.p3 * kin.p3;
    if (sign == LadderSign::lowering) return 1.0 / std::sqrt(base);
    // The raising branch adds the expectation of the squared ladder couples
    // of the ground mode: Omega (gamma^2 + beta^2 gamma^2 + 2).
    const double g2 = kin.gamma * kin.gamma;
    const double extra =
        cfg.omega * (g2 + cfg.beta * cfg.beta * g2 + 2.0);
    return 1.0 / std::sqrt(base + extra);
}

double norm_constant_measured(const OscillatorConfig& cfg, LadderSign sign,
                              const QuadratureRule& rule) {
    const auto raw = raw_components(cfg, sign);
    double total = 0.0;
    for (const auto& f : raw) total += inner_product(f, f, rule).real();
    if (!(total > 0.0))
        throw std::runtime_error(
            "bispinor components integrate to a non-positive norm");
    return 1.0 / std::sqrt(total);
}

BispinorField build_bispinor(const OscillatorConfig& cfg, LadderSign sign,
                             int quad_order) {
    validate(cfg);
    if (!(cfg.omega > 0.0))
        throw std::invalid_argument("bispinor construction requires omega > 0");
    const double norm = cfg.qn.n() == 0
                            ? norm_constant_closed(cfg, sign)
                            : norm_constant_measured(cfg, sign,
                                                     gauss_hermite(quad_order));
    const auto raw = raw_components(cfg, sign);
    BispinorField bs;
    bs.cfg = cfg;
    bs.sign = sign;
    bs.s = cfg.s;
    bs.norm = norm;
    for (int d = 0; d < 4; ++d) bs.comp[d] = norm * raw[d];
    return bs;
}

double dirac_residual(const BispinorField& bs,
                      std::span<const std::array<double, 4>> pts,
                      const GammaSet& gammas) {
    const Kinematics kin = kinematics(bs.cfg);
    const double m_in = paired_mass(bs.cfg, bs.sign);
    const double p_up[4] = {kin.E, 0.0, 0.0, kin.p3};

    // K^mu applied to every component (upper index: plane-wave momentum plus
    // the contravariant ladder of the branch).
    std::array<std::array<ScalarField, 4>, 4> k;
    for (int mu = 0; mu < 4; ++mu)
        for (int d = 0; d < 4; ++d)
            k[mu][d] = p_up[mu] * bs.comp[d] +
                       apply_ladder_upper(bs.comp[d], mu, bs.sign);

    double scale = 0.0;
    for (const auto& f : bs.comp) scale = std::max(scale, max_abs_on(f, pts));
    scale *= std::sqrt(mass_sq(bs.cfg));
    if (scale == 0.0) return 0.0;

    // gamma_mu K^mu = eta_{mu nu} gamma^nu K^mu: spatial terms enter with a
    // minus sign relative to the stored upper-index gamma matrices.
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    for (int c = 0; c < 4; ++c) {
        ScalarField row(bs.cfg, {}, kin.momentum);
        for (int mu = 0; mu < 4; ++mu)
            for (int d = 0; d < 4; ++d) {
                const Complex g = eta[mu] * gammas.g[mu][c][d];
                if (g == Complex{0.0, 0.0}) continue;
                row = row + g * k[mu][d];
            }
        row = row + (-m_in) * bs.comp[c];
        worst = std::max(worst, max_abs_on(row, pts));
    }
    return worst / scale;
}

std::array<ScalarField, 4> conjugate_components(const BispinorField& bs) {
    return {bs.comp[0].conjugate(), bs.comp[1].conjugate(),
            bs.comp[2].conjugate(), bs.comp[3].conjugate()};
}

}  // namespace relosc
