#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "relosc/observables.hpp"

using namespace relosc;

namespace {

OscillatorConfig spin_config(double beta, double s = 0.5) {
    OscillatorConfig cfg;
    cfg.m = 1.0;
    cfg.omega = critical_omega(cfg.m);
    cfg.beta = beta;
    cfg.s = s;
    return cfg;
}

}  // namespace

TEST_CASE("angular-momentum expectations match the closed forms on both branches") {
    for (const LadderSign sign : {LadderSign::lowering, LadderSign::raising})
        for (const double s : {0.5, -0.5})
            for (const double beta : {0.0, 0.3, 0.6, 0.9}) {
                const OscillatorConfig cfg = spin_config(beta, s);
                const BispinorField bs = build_bispinor(cfg, sign);
                CHECK(std::abs(sam_expect(bs) - sam_closed(cfg, sign)) <= 1e-10);
                CHECK(std::abs(oam_expect(bs) - oam_closed(cfg, sign)) <= 1e-10);
                CHECK(std::abs(tam_expect(bs) - s) <= 1e-10);
            }
}

TEST_CASE("lowering branch carries pure spin") {
    for (const double beta : {0.0, 0.5, 0.9})
        for (const double s : {0.5, -0.5}) {
            const OscillatorConfig cfg = spin_config(beta, s);
            CHECK(sam_closed(cfg, LadderSign::lowering) == s);
            CHECK(oam_closed(cfg, LadderSign::lowering) == 0.0);
            const BispinorField bs = build_bispinor(cfg, LadderSign::lowering);
            CHECK(std::abs(sam_expect(bs) - s) <= 1e-12);
            CHECK(std::abs(oam_expect(bs)) <= 1e-12);
        }
}

TEST_CASE("expectation values of Hermitian operators are real") {
    const BispinorField bs = build_bispinor(spin_config(0.6), LadderSign::raising);
    for (const AngularOp op :
         {AngularOp::identity, AngularOp::spin_s3, AngularOp::oam_l3, AngularOp::tam_j3}) {
        const ExpectationResult r = expect(bs, op, bs);
        CHECK(std::abs(r.value.imag()) <= 1e-12);
        CHECK(!r.op_name.empty());
        CHECK(r.state.sign == '+');
        CHECK(r.state.beta == doctest::Approx(0.6));
    }
    CHECK(expect(bs, AngularOp::identity, bs).value.real() ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("critical-frequency sharing curves take hand-reduced values") {
    // At Omega = 2 m^2 / 3 the raising-branch shares reduce to rational
    // functions of the velocity; spot values worked out by hand:
    //   beta = 0:   1/3 and 2/3
    //   beta = 0.5: 7/13 and 6/13
    //   beta = 0.6: 13/21 and 8/21
    CHECK(critical_sam_ratio(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(critical_oam_ratio(0.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(critical_sam_ratio(0.5) == doctest::Approx(7.0 / 13.0).epsilon(1e-15));
    CHECK(critical_oam_ratio(0.5) == doctest::Approx(6.0 / 13.0).epsilon(1e-15));
    CHECK(critical_sam_ratio(0.6) == doctest::Approx(13.0 / 21.0).epsilon(1e-15));
    CHECK(critical_oam_ratio(0.6) == doctest::Approx(8.0 / 21.0).epsilon(1e-15));

    // The quadrature pipeline must land on the same numbers independently.
    for (const double s : {0.5, -0.5}) {
        const auto rows = spin_composition_sweep(1.0, 2.0 / 3.0, {0.0, 0.5, 0.6}, s);
        REQUIRE(rows.size() == 3);
        CHECK(std::abs(rows[0].sam_over_s - 1.0 / 3.0) <= 1e-9);
        CHECK(std::abs(rows[0].oam_over_s - 2.0 / 3.0) <= 1e-9);
        CHECK(std::abs(rows[1].sam_over_s - 7.0 / 13.0) <= 1e-9);
        CHECK(std::abs(rows[1].oam_over_s - 6.0 / 13.0) <= 1e-9);
        CHECK(std::abs(rows[2].sam_over_s - 13.0 / 21.0) <= 1e-9);
        CHECK(std::abs(rows[2].oam_over_s - 8.0 / 21.0) <= 1e-9);
    }
}

TEST_CASE("sweep rows are internally consistent") {
    std::vector<double> betas;
    for (int i = 0; i <= 20; ++i) betas.push_back(0.98 * i / 20.0);
    const auto rows = spin_composition_sweep(1.0, 2.0 / 3.0, betas, 0.5);
    REQUIRE(rows.size() == betas.size());

    int covered_sam = 0, covered_oam = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SpinCompositionRow& r = rows[i];
        CHECK(r.beta == betas[i]);
        CHECK(r.tam_over_s == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(std::abs(r.sam_over_s + r.oam_over_s - r.tam_over_s) <= 1e-12);
        CHECK(std::abs(r.sam_over_s - r.sam_closed_over_s) == doctest::Approx(r.abs_err_sam));
        CHECK(r.abs_err_sam <= 1e-9);
        CHECK(r.abs_err_oam <= 1e-9);
        if (r.abs_err_sam <= r.quad_error_sam) ++covered_sam;
        if (r.abs_err_oam <= r.quad_error_oam) ++covered_oam;
        if (i > 0) {
            // Monotone exchange: spin share grows with velocity, orbital share falls.
            CHECK(r.sam_over_s > rows[i - 1].sam_over_s);
            CHECK(r.oam_over_s < rows[i - 1].oam_over_s);
        }
    }
    // The quadrature error estimate must cover the true error on almost all rows.
    CHECK(covered_sam * 100 >= 95 * static_cast<int>(rows.size()));
    CHECK(covered_oam * 100 >= 95 * static_cast<int>(rows.size()));
}

TEST_CASE("sweep validates its velocity grid") {
    CHECK_THROWS_AS(spin_composition_sweep(1.0, 2.0 / 3.0, {0.0, 1.0}, 0.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(spin_composition_sweep(1.0, 2.0 / 3.0, {-0.1}, 0.5),
                    std::invalid_argument);
    // Over-critical frequency: the raising branch does not exist.
    CHECK_THROWS_AS(spin_composition_sweep(1.0, 1.0, {0.0}, 0.5), std::domain_error);
}

TEST_CASE("second moments take Gaussian values and contract under boosts") {
    // Ground state: <r1^2> = 1/Omega; first excited along axis 1: 3/Omega.
    const double omega = 2.0 / 3.0;
    const ScalarField ground = build_psi(spin_config(0.0));
    CHECK(second_moment(ground, 1) == doctest::Approx(1.0 / omega).epsilon(1e-12));
    OscillatorConfig excited_cfg = spin_config(0.0);
    excited_cfg.qn = {1, 0, 0};
    const ScalarField excited = build_psi(excited_cfg);
    CHECK(second_moment(excited, 1) == doctest::Approx(3.0 / omega).epsilon(1e-12));
    CHECK(second_moment(excited, 2) == doctest::Approx(1.0 / omega).epsilon(1e-12));

    // gamma^2 <r3^2> = <r1^2> whenever the transverse and longitudinal
    // excitations match.
    for (const double beta : {0.5, 0.9}) {
        for (const QuantumNumbers qn : {QuantumNumbers{0, 0, 0}, {1, 0, 1}}) {
            OscillatorConfig cfg = spin_config(beta);
            cfg.qn = qn;
            const ScalarField psi = build_psi(cfg);
            const Kinematics k = kinematics(cfg);
            const double lhs = k.gamma * k.gamma * second_moment(psi, 3);
            const double rhs = second_moment(psi, 1);
            CHECK(std::abs(lhs - rhs) / rhs <= 1e-12);
        }
    }

    CHECK_THROWS_AS(second_moment(ground, 0), std::invalid_argument);
}

TEST_CASE("scalar expectations support the spinless operators only") {
    const ScalarField psi = build_psi(spin_config(0.4));
    CHECK(expect(psi, AngularOp::identity, psi).value.real() ==
          doctest::Approx(1.0).epsilon(1e-12));
    // A rotationally symmetric state carries no orbital component.
    CHECK(std::abs(expect(psi, AngularOp::oam_l3, psi).value) <= 1e-13);
    CHECK(expect(psi, AngularOp::tam_j3, psi).state.sign == '0');
    CHECK_THROWS_AS(expect(psi, AngularOp::spin_s3, psi), std::invalid_argument);
}

TEST_CASE("isophase sheet of the twisted component is a helicoid") {
    const OscillatorConfig cfg = spin_config(0.5, 0.5);
    const Kinematics k = kinematics(cfg);
    const BispinorField bs = build_bispinor(cfg, LadderSign::raising);

    const double radius = 2.0, level = 0.3;
    const PhaseSurface sheet = phase_surface(bs, 3, radius, level, 16);
    CHECK(sheet.component == 3);
    CHECK(sheet.helicoid);
    CHECK(sheet.handedness == 1.0);
    REQUIRE(sheet.points.size() == 8 * 16);
    for (const PhasePoint& p : sheet.points) {
        CHECK(p.rho <= radius + 1e-12);
        CHECK(p.phi >= -std::numbers::pi);
        CHECK(p.phi < std::numbers::pi);
        CHECK(p.x1 == doctest::Approx(p.rho * std::cos(p.phi)).epsilon(1e-12));
        CHECK(p.x2 == doctest::Approx(p.rho * std::sin(p.phi)).epsilon(1e-12));
        // Phase angle p3 x3 + 2 s phi held at `level`.
        CHECK(std::abs(p.x3 - (level - 2.0 * cfg.s * p.phi) / k.p3) <= 1e-12);
    }

    // Flipping the spin moves the twisted slot and reverses the handedness.
    const OscillatorConfig down_cfg = spin_config(0.5, -0.5);
    const BispinorField down = build_bispinor(down_cfg, LadderSign::raising);
    const PhaseSurface down_sheet = phase_surface(down, 2, radius, level, 8);
    CHECK(down_sheet.helicoid);
    CHECK(down_sheet.handedness == -1.0);
    for (const PhasePoint& p : down_sheet.points)
        CHECK(std::abs(p.x3 - (level + p.phi) / k.p3) <= 1e-12);
}

TEST_CASE("isophase sheets of untwisted components are planar") {
    const OscillatorConfig cfg = spin_config(0.5, 0.5);
    const Kinematics k = kinematics(cfg);
    const BispinorField bs = build_bispinor(cfg, LadderSign::raising);
    const PhaseSurface sheet = phase_surface(bs, 0, 1.5, 0.2, 8);
    CHECK(!sheet.helicoid);
    CHECK(sheet.handedness == 0.0);
    for (const PhasePoint& p : sheet.points)
        CHECK(std::abs(p.x3 - 0.2 / k.p3) <= 1e-13);
}

TEST_CASE("phase surfaces validate their inputs") {
    const BispinorField bs = build_bispinor(spin_config(0.5), LadderSign::raising);
    CHECK(phase_surface(bs, 3, 0.0, 0.0, 8).points.empty());
    CHECK_THROWS_AS(phase_surface(bs, 4, 1.0, 0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(phase_surface(bs, -1, 1.0, 0.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(phase_surface(bs, 3, 1.0, 0.0, 0), std::invalid_argument);

    // p3 = 0: the phase carries no x3 dependence and no sheet exists.
    const BispinorField rest = build_bispinor(spin_config(0.0), LadderSign::raising);
    CHECK_THROWS_AS(phase_surface(rest, 3, 1.0, 0.0, 8), std::invalid_argument);
}

TEST_CASE("operator names are stable identifiers") {
    CHECK(angular_op_name(AngularOp::identity) == "identity");
    CHECK(angular_op_name(AngularOp::spin_s3) == "spin_s3");
    CHECK(angular_op_name(AngularOp::oam_l3) == "oam_l3");
    CHECK(angular_op_name(AngularOp::tam_j3) == "tam_j3");
}
