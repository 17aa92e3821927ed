// transport.hpp — Quantum transport factors and the temperature sweep

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fermibath/analytics.hpp"

namespace fermibath {

struct EfficiencyPoint {
    double T_c = 0.0;
    double T_e = 0.0;
    double eta_carnot = 0.0;
    double eta_fermi = 0.0;
    double eta_bose = 0.0;
};

// 1 - T_c/T_e. Requires T_e >= T_c > 0.
double eta_carnot(double T_e, double T_c);

// (2 k_B T_c/(hbar omega)) (1 - nbar_c/nbar_e) with Fermi occupations at
// omega_s. The prefactor uses omega_s unless a shifted frequency is supplied.
double eta_fermionic(double omega_s, double T_e, double T_c,
                     std::optional<double> shifted_omega = std::nullopt);

// 1 - nbar_c^b/nbar_e^b with Bose occupations at omega_s.
double eta_bosonic(double omega_s, double T_e, double T_c);

// One point per T_c with T_e = ratio * T_c; requires ratio > 1 and a strictly
// increasing positive grid. Domain errors are annotated with the grid point.
std::vector<EfficiencyPoint> sweep_fig1(double omega_s, double ratio,
                                        std::span<const double> tc_grid,
                                        std::optional<double> shifted_omega = std::nullopt);

// Steady energy loss E_s, emitter heat input Q, and the matching rate
// f = (gamma_e gamma_c/(gamma_e+gamma_c)) (2 k_B T_c/(hbar omega_s)), which
// ties the transport factor to the Carnot limit.
struct TransportDiagnostics {
    double energy_loss;   // E_s, J/s
    double heat_input;    // Q = f hbar omega_s nbar_e, J/s
    double matching_rate; // f, s^-1
};
TransportDiagnostics transport_diagnostics(const TransportParams& p, double T_c);

// x_c where the fermionic factor crosses Carnot at fixed ratio, found by
// bisection of eta_fermi - eta_carnot over [lo, hi] in x_c = hbar w/(k_B T_c).
double carnot_crossing_xc(double ratio, double lo = 1e-3, double hi = 30.0);

} // namespace fermibath
