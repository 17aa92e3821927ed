// run_config.hpp — Validated CLI parameters shared by every subcommand

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fermibath::cli {

struct RunConfig {
    double omega_s = 1e12; // rad/s
    double gamma_e = 1e9;  // s^-1
    double gamma_c = 1e9;  // s^-1
    double temp_e = 300.0; // K
    std::vector<double> temp_c{};          // K; defaults to {150} when empty
    double n0 = 1.0;
    std::string variant = "reference";     // reference | paper-literal
    std::string stats = "fermi";           // fermi | bose
    int n_max = 40;
    double t_max = 0.0;                    // 0 -> 10/(gamma_e+gamma_c)
    double dt = 0.0;                       // 0 -> 2e-3/(gamma_e+gamma_c)
    double ratio = 2.0;                    // T_e/T_c for the sweep
    std::string out;                       // empty -> stdout
    bool svg = false;
    int jobs = 1;
    std::optional<double> omega_shifted;   // unitary frequency when provided
    bool use_shifted_omega = false;        // shifted prefactor in eta_fermi
    bool diagnostics = false;              // extra sweep columns

    // fixed grid sizes, documented in the README
    static constexpr int trace_points = 201;
    static constexpr int spectrum_points = 513;
    static constexpr int sweep_points = 121;

    double first_temp_c() const { return temp_c.empty() ? 150.0 : temp_c.front(); }
    std::vector<double> all_temp_c() const
    {
        return temp_c.empty() ? std::vector<double>{150.0} : temp_c;
    }
};

int cmd_trace(const RunConfig& cfg);
int cmd_transport(const RunConfig& cfg);
int cmd_spectrum(const RunConfig& cfg);
int cmd_grassmann_verify(const RunConfig& cfg);

} // namespace fermibath::cli
