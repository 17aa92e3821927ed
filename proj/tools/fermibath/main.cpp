// fermibath — reproduce the occupation, current, transport-factor, and
// spectrum results of a fermionic (or bosonic) oscillator coupled to two
// thermal reservoirs, and verify the Grassmann coherent-state calculus.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "fermibath/errors.hpp"
#include "run_config.hpp"

int main(int argc, char** argv)
{
    using namespace fermibath;
    using cli::RunConfig;

    RunConfig cfg;
    CLI::App app{"fermibath: a fermionic oscillator between two thermal reservoirs"};
    app.set_config("--config", "", "flat key = value configuration file; flags override");
    app.require_subcommand(1);

    app.add_option("--omega", cfg.omega_s, "system angular frequency omega_s [rad/s]")
        ->capture_default_str();
    app.add_option("--omega-shifted", cfg.omega_shifted,
                   "shifted frequency omega for the unitary term [rad/s]; defaults to omega_s");
    app.add_option("--gamma-e", cfg.gamma_e, "emitter coupling rate [1/s]")
        ->capture_default_str();
    app.add_option("--gamma-c", cfg.gamma_c, "collector coupling rate [1/s]")
        ->capture_default_str();
    app.add_option("--temp-e", cfg.temp_e, "emitter temperature [K]")->capture_default_str();
    app.add_option("--temp-c", cfg.temp_c,
                   "collector temperature [K]; repeatable for spectrum curves (default 150)");
    app.add_option("--n0", cfg.n0, "initial occupation of the oscillator")
        ->capture_default_str();
    app.add_option("--variant", cfg.variant, "fermionic generator form")
        ->check(CLI::IsMember({"reference", "paper-literal"}))
        ->capture_default_str();
    app.add_option("--stats", cfg.stats, "oscillator and bath statistics")
        ->check(CLI::IsMember({"fermi", "bose"}))
        ->capture_default_str();
    app.add_option("--n-max", cfg.n_max, "bosonic Fock-space truncation")
        ->check(CLI::Range(8, 4096))
        ->capture_default_str();
    app.add_option("--t-max", cfg.t_max, "trace horizon [s]; 0 picks 10/(gamma_e+gamma_c)")
        ->capture_default_str();
    app.add_option("--dt", cfg.dt, "RK4 step [s]; 0 picks 2e-3/(gamma_e+gamma_c)")
        ->capture_default_str();
    app.add_option("--ratio", cfg.ratio, "T_e/T_c for the transport sweep")
        ->capture_default_str();
    app.add_option("--out", cfg.out, "output CSV path; stdout when omitted");
    app.add_flag("--svg", cfg.svg, "also render <out>.svg");
    app.add_option("--jobs", cfg.jobs, "worker threads for sweep points")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_flag("--use-shifted-omega", cfg.use_shifted_omega,
                 "use --omega-shifted in the transport-factor prefactor");
    app.add_flag("--diagnostics", cfg.diagnostics,
                 "append E_s, Q, and the matching rate f to the sweep CSV");

    auto* trace = app.add_subcommand("trace", "occupation and current vs time (CSV)");
    auto* transport = app.add_subcommand("transport", "transport-factor sweep (CSV)");
    auto* spectrum = app.add_subcommand("spectrum", "current power spectrum (CSV)");
    auto* verify = app.add_subcommand("grassmann-verify",
                                      "verify the coherent-state calculus and the P dynamics");
    for (auto* sub : {trace, transport, spectrum, verify}) {
        sub->fallthrough(); // shared options may follow the subcommand name
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*trace) {
            return cli::cmd_trace(cfg);
        }
        if (*transport) {
            return cli::cmd_transport(cfg);
        }
        if (*spectrum) {
            return cli::cmd_spectrum(cfg);
        }
        if (*verify) {
            return cli::cmd_grassmann_verify(cfg);
        }
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const NumericalInstabilityError& e) {
        std::cerr << "numerical instability: " << e.what() << "\n";
        return 3;
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
