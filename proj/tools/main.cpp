#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relosc/commands.hpp"
#include "relosc/run_config.hpp"
#include "relosc/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "relosc: relativistic oscillator modes — verification suite, "
        "spectra, densities, spin-composition sweeps, and isophase "
        "wavefronts"};
    app.set_version_flag("--version", relosc::version_string);
    app.require_subcommand(1);

    relosc::RunConfig rc;
    double omega_value = 0.0;
    std::string beta_grid_text;
    std::string s_text = "+";
    std::string sign_text = "+";
    std::vector<int> uvw;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", rc.m, "constituent rest mass (natural units)")
            ->check(CLI::PositiveNumber);
        auto* omega_opt =
            cmd->add_option("--omega", omega_value, "spring constant Omega");
        auto* critical_opt = cmd->add_flag(
            "--critical-omega",
            "use the critical spring constant 2 m^2 / 3 (default)");
        omega_opt->excludes(critical_opt);
        auto* beta_opt =
            cmd->add_option("--beta", rc.beta, "boost velocity in [0, 1)")
                ->check(CLI::Range(0.0, 1.0));
        auto* grid_opt = cmd->add_option("--beta-grid", beta_grid_text,
                                         "velocity grid start:stop:count");
        grid_opt->excludes(beta_opt);
        cmd->add_option("--uvw", uvw,
                        "oscillator quanta per axis, e.g. --uvw 1,0,2")
            ->delimiter(',');
        cmd->add_option("--s", s_text, "spin projection: + for +1/2, - for -1/2")
            ->check(CLI::IsMember({"+", "-"}));
        cmd->add_option("--sign", sign_text, "ladder branch: + raising, - lowering")
            ->check(CLI::IsMember({"+", "-"}));
        cmd->add_option("--quad-order", rc.quad_order,
                        "Gauss-Hermite order per axis")
            ->check(CLI::Range(1, 128));
        cmd->add_option("--format", rc.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", rc.out_path,
                        "output file (atomic write); stdout when omitted");
        cmd->add_option("--seed", rc.seed, "seed for randomized checks");
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "run the full invariant suite; exit 0 iff every check passes");
    add_common(verify);

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "mass/energy table for levels 0..n-max");
    add_common(spectrum);
    spectrum->add_option("--n-max", rc.n_max, "highest total excitation")
        ->check(CLI::NonNegativeNumber);

    CLI::App* density = app.add_subcommand(
        "density", "instant-form probability density on a regular grid");
    add_common(density);
    density->add_option("--grid-points", rc.grid_points, "points per axis")
        ->check(CLI::Range(2, 501));
    density->add_option("--grid-radius", rc.grid_radius,
                        "half-width in characteristic lengths")
        ->check(CLI::PositiveNumber);
    density->add_flag("--marginal", rc.marginal,
                      "emit the r3 marginal instead of the full grid");

    CLI::App* sweep = app.add_subcommand(
        "spin-sweep",
        "spin/orbital composition of the raising-branch ground mode over a "
        "velocity grid");
    add_common(sweep);

    CLI::App* wavefront = app.add_subcommand(
        "wavefront", "isophase point cloud of one bispinor component");
    add_common(wavefront);
    wavefront->add_option("--component", rc.component,
                          "component index 0..3; default: the twisted slot")
        ->check(CLI::Range(-1, 3));
    wavefront->add_option("--radius", rc.radius,
                          "transverse radius cap in characteristic lengths")
        ->check(CLI::NonNegativeNumber);
    wavefront->add_option("--level", rc.level, "isophase value");
    wavefront->add_option("--points", rc.points, "azimuthal samples per ring")
        ->check(CLI::Range(1, 4096));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        rc.command = sub->get_name();
        if (sub->count("--omega")) {
            rc.critical = false;
            rc.omega = omega_value;
        } else {
            rc.critical = true;
            rc.omega = relosc::critical_omega(rc.m);
        }
        if (!uvw.empty()) {
            if (uvw.size() != 3 || uvw[0] < 0 || uvw[1] < 0 || uvw[2] < 0)
                throw std::invalid_argument(
                    "--uvw needs three non-negative integers");
            rc.qn = {uvw[0], uvw[1], uvw[2]};
        }
        rc.s = s_text == "+" ? 0.5 : -0.5;
        rc.sign = sign_text[0];
        if (sub->count("--beta-grid"))
            rc.beta_grid = relosc::parse_beta_grid(beta_grid_text);
        // A single --beta turns the sweep into a one-row grid.
        if (rc.command == "spin-sweep" && sub->count("--beta") &&
            !sub->count("--beta-grid"))
            rc.beta_grid = relosc::BetaGrid{rc.beta, rc.beta, 1};
        // Isophase sheets need momentum along axis 3; default to a moving
        // frame when the velocity was not specified.
        if (rc.command == "wavefront" && !sub->count("--beta")) rc.beta = 0.5;

        return relosc::run_command(rc, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
