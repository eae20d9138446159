// Acceptance gate: each numbered block checks one release criterion at its
// stated tolerance and runtime budget, prints exactly one [PASS]/[FAIL] line,
// and the process exits non-zero when any criterion fails.  Two criteria are
// expected to fail on this implementation: the raising-branch first-order
// equation has no solution in the Hermite-Gaussian solution space, which also
// keeps the default verification suite from exiting 0.  The README numerical
// notes carry the analysis; the criteria are reported honestly rather than
// weakened.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "relosc/bispinor.hpp"
#include "relosc/commands.hpp"
#include "relosc/observables.hpp"
#include "relosc/operators.hpp"
#include "relosc/run_config.hpp"
#include "relosc/scalar_field.hpp"

using namespace relosc;

namespace {

int failures = 0;

struct Outcome {
    bool pass = false;
    double measured = 0.0;
    std::string note;
};

void run_criterion(int id, const char* description, const char* tolerance,
                   const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.measured = std::nan("");
        out.note = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] %2d. %s: measured=%.3e (%s) [%.2fs]%s%s\n",
                out.pass ? "PASS" : "FAIL", id, description, out.measured,
                tolerance, seconds, out.note.empty() ? "" : " -- ",
                out.note.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
}

OscillatorConfig state_config(double beta, double s = 0.5, QuantumNumbers qn = {}) {
    OscillatorConfig cfg;
    cfg.m = 1.0;
    cfg.omega = critical_omega(cfg.m);
    cfg.beta = beta;
    cfg.s = s;
    cfg.qn = qn;
    return cfg;
}

}  // namespace

int main() {
    run_criterion(1, "rest-frame spin/orbital split is (1/3, 2/3)",
                  "abs tol 1e-9, < 1 s", [] {
                      const auto t0 = std::chrono::steady_clock::now();
                      const BispinorField bs =
                          build_bispinor(state_config(0.0), LadderSign::raising);
                      const double s = bs.cfg.s;
                      const double dev =
                          std::max(std::abs(sam_expect(bs) / s - 1.0 / 3.0),
                                   std::abs(oam_expect(bs) / s - 2.0 / 3.0));
                      const double sec = std::chrono::duration<double>(
                                             std::chrono::steady_clock::now() - t0)
                                             .count();
                      Outcome out;
                      out.measured = dev;
                      out.pass = dev <= 1e-9 && sec < 1.0;
                      if (sec >= 1.0) out.note = "runtime budget exceeded";
                      return out;
                  });

    run_criterion(2, "spin/orbital sharing curves over 101 velocities",
                  "abs tol 1e-8 per row, < 30 s", [] {
                      const auto t0 = std::chrono::steady_clock::now();
                      const std::vector<double> betas =
                          resolve_beta_grid(BetaGrid{0.0, 0.99, 101});
                      const auto rows = spin_composition_sweep(
                          1.0, critical_omega(1.0), betas, 0.5);
                      double dev = 0.0;
                      for (const SpinCompositionRow& r : rows) {
                          const double b2 = r.beta * r.beta;
                          const double sam = (1.0 + 3.0 * b2) / (3.0 + b2);
                          const double oam = (2.0 - 2.0 * b2) / (3.0 + b2);
                          dev = std::max(dev, std::abs(r.sam_over_s - sam));
                          dev = std::max(dev, std::abs(r.oam_over_s - oam));
                      }
                      const double sec = std::chrono::duration<double>(
                                             std::chrono::steady_clock::now() - t0)
                                             .count();
                      Outcome out;
                      out.measured = dev;
                      out.pass = rows.size() == 101 && dev <= 1e-8 && sec < 30.0;
                      if (sec >= 30.0) out.note = "runtime budget exceeded";
                      return out;
                  });

    run_criterion(3, "total angular momentum equals the spin projection",
                  "abs tol 1e-9", [] {
                      double dev = 0.0;
                      for (const LadderSign sign :
                           {LadderSign::lowering, LadderSign::raising})
                          for (const double s : {0.5, -0.5})
                              for (const double beta : {0.0, 0.3, 0.6, 0.9}) {
                                  const BispinorField bs = build_bispinor(
                                      state_config(beta, s), sign);
                                  dev = std::max(dev,
                                                 std::abs(tam_expect(bs) - s));
                              }
                      Outcome out;
                      out.measured = dev;
                      out.pass = dev <= 1e-9;
                      return out;
                  });

    run_criterion(4, "all lowering components annihilate the ground state",
                  "pointwise tol 1e-12 x field scale", [] {
                      double dev = 0.0;
                      for (const double beta : {0.0, 0.6}) {
                          const OscillatorConfig cfg = state_config(beta);
                          const ScalarField psi0 = build_psi(cfg);
                          const auto pts = probe_points(cfg, 1);
                          const double scale = max_abs_on(psi0, pts);
                          for (int mu = 0; mu < 4; ++mu) {
                              const ScalarField low =
                                  apply_ladder(psi0, mu, LadderSign::lowering);
                              dev = std::max(dev, max_abs_on(low, pts) / scale);
                          }
                      }
                      Outcome out;
                      out.measured = dev;
                      out.pass = dev <= 1e-12;
                      return out;
                  });

    run_criterion(5, "ladder operator identities on the 20-field random corpus",
                  "normalized tol 1e-10", [] {
                      const OscillatorConfig cfg = state_config(0.6);
                      const auto corpus = random_test_fields(cfg, 20, 6, 6, 2024);
                      const auto pts = probe_points(cfg, 5);
                      double dev = 0.0;
                      for (const ScalarField& f : corpus) {
                          dev = std::max(dev, p_dot_ladder_residual(f, pts));
                          dev = std::max(
                              dev, ladder_product_residual(f, LadderSign::raising, pts));
                          dev = std::max(
                              dev, ladder_product_residual(f, LadderSign::lowering, pts));
                      }
                      Outcome out;
                      out.measured = dev;
                      out.pass = corpus.size() == 20 && dev <= 1e-10;
                      return out;
                  });

    run_criterion(
        6, "wave-equation and first-order-equation residuals",
        "normalized tol 1e-9", [] {
            double dev = 0.0;
            for (const double beta : {0.0, 0.5, 0.9}) {
                for (const QuantumNumbers qn :
                     {QuantumNumbers{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2},
                      {1, 1, 1}, {0, 3, 0}}) {
                    const OscillatorConfig cfg = state_config(beta, 0.5, qn);
                    dev = std::max(dev,
                                   kge_residual(build_psi(cfg), probe_points(cfg, 1)));
                }
                for (const LadderSign sign :
                     {LadderSign::lowering, LadderSign::raising})
                    for (const double s : {0.5, -0.5}) {
                        const OscillatorConfig cfg = state_config(beta, s);
                        const BispinorField bs = build_bispinor(cfg, sign);
                        dev = std::max(dev,
                                       dirac_residual(bs, probe_points(cfg, 1)));
                    }
            }
            Outcome out;
            out.measured = dev;
            out.pass = dev <= 1e-9;
            if (!out.pass)
                out.note =
                    "raising-branch first-order equation has no solution in the "
                    "Hermite-Gaussian space (lowering branch and all "
                    "wave-equation rows are at rounding; see README numerical "
                    "notes)";
            return out;
        });

    run_criterion(7, "closed-form normalization constants match quadrature",
                  "rel tol 1e-10 (+ spot values at rest)", [] {
                      const auto rule = gauss_hermite(40);
                      double dev = 0.0;
                      for (const double beta : {0.0, 0.6})
                          for (const LadderSign sign :
                               {LadderSign::lowering, LadderSign::raising}) {
                              const OscillatorConfig cfg = state_config(beta);
                              const double closed = norm_constant_closed(cfg, sign);
                              const double measured =
                                  norm_constant_measured(cfg, sign, rule);
                              dev = std::max(dev,
                                             std::abs(closed - measured) / closed);
                          }
                      // Hand-derived rest-frame spot values at the critical
                      // frequency: 1/sqrt(8) and 1/2.
                      const OscillatorConfig rest = state_config(0.0);
                      dev = std::max(
                          dev, std::abs(norm_constant_closed(rest, LadderSign::lowering) -
                                        1.0 / std::sqrt(8.0)));
                      dev = std::max(
                          dev, std::abs(norm_constant_closed(rest, LadderSign::raising) -
                                        0.5));
                      Outcome out;
                      out.measured = dev;
                      out.pass = dev <= 1e-10;
                      return out;
                  });

    run_criterion(
        8, "mass spectrum and degeneracies exact; non-relativistic limit",
        "exact for n <= 5; rel tol 1e-3 at Omega/m^2 = 2e-3", [] {
            double mass_dev = 0.0;
            bool degeneracies_ok = true;
            for (int n = 0; n <= 5; ++n) {
                OscillatorConfig cfg = state_config(0.3);
                cfg.qn = {n, 0, 0};
                const double expected =
                    std::sqrt(cfg.omega * (1.5 + n) + cfg.m * cfg.m);
                mass_dev = std::max(mass_dev,
                                    std::abs(kinematics(cfg).M - expected));
                int count = 0;
                for (int u = 0; u <= n; ++u)
                    for (int v = 0; u + v <= n; ++v) ++count;  // w fixed by n
                degeneracies_ok =
                    degeneracies_ok && count == (n + 1) * (n + 2) / 2;
            }
            OscillatorConfig nr;
            nr.m = 1.0;
            nr.omega = 2e-3;
            const double eo = nonrelativistic_energy(nr);
            const double nr_dev = std::abs((kinematics(nr).M - nr.m) - eo) / eo;
            Outcome out;
            out.measured = nr_dev;
            out.pass = mass_dev == 0.0 && degeneracies_ok && nr_dev <= 1e-3;
            out.note = mass_dev == 0.0 && degeneracies_ok
                           ? "mass table and degeneracy counts exact"
                           : "mass table or degeneracy counts deviate";
            return out;
        });

    run_criterion(9, "longitudinal second moment contracts by gamma^2",
                  "rel tol 1e-9", [] {
                      double dev = 0.0;
                      for (const double beta : {0.0, 0.5, 0.9})
                          for (const QuantumNumbers qn :
                               {QuantumNumbers{0, 0, 0}, {1, 0, 1}}) {
                              const OscillatorConfig cfg =
                                  state_config(beta, 0.5, qn);
                              const ScalarField psi = build_psi(cfg);
                              const Kinematics k = kinematics(cfg);
                              const double lhs =
                                  k.gamma * k.gamma * second_moment(psi, 3);
                              const double rhs = second_moment(psi, 1);
                              dev = std::max(dev, std::abs(lhs - rhs) / rhs);
                          }
                      Outcome out;
                      out.measured = dev;
                      out.pass = dev <= 1e-9;
                      return out;
                  });

    run_criterion(10, "full verification suite exits 0",
                  "exit code 0, < 60 s", [] {
                      const auto t0 = std::chrono::steady_clock::now();
                      RunConfig rc;
                      rc.command = "verify";
                      std::ostringstream sink;
                      const int code = cmd_verify(rc, sink);
                      const double sec = std::chrono::duration<double>(
                                             std::chrono::steady_clock::now() - t0)
                                             .count();
                      Outcome out;
                      out.measured = code;
                      out.pass = code == 0 && sec < 60.0;
                      if (code != 0)
                          out.note =
                              "the suite stays red on purpose: its "
                              "raising-branch first-order check measures the "
                              "order-one residual documented in the README "
                              "numerical notes";
                      return out;
                  });

    std::printf("acceptance: %d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
