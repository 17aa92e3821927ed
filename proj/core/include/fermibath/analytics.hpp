// analytics.hpp — Closed-form occupation, flux balance, current, and energy loss

#pragma once

#include <span>
#include <vector>

namespace fermibath {

struct TransportParams {
    double gamma_e = 0.0; // s^-1
    double gamma_c = 0.0; // s^-1
    double nbar_e = 0.0;
    double nbar_c = 0.0;
    double n0 = 0.0;      // initial occupation
    double omega_s = 0.0; // rad/s, only used by steady_energy_loss

    double gamma_total() const { return gamma_e + gamma_c; }
    // nbar_s = (gamma_e nbar_e + gamma_c nbar_c)/(gamma_e + gamma_c)
    double steady_occupation() const
    {
        return (gamma_e * nbar_e + gamma_c * nbar_c) / gamma_total();
    }

    void validate() const; // gamma_total > 0
};

// <n>(t) = nbar_s + (n0 - nbar_s) e^{-(gamma_e+gamma_c) t}
double occupation_closed_form(const TransportParams& p, double t);

// gamma_e (nbar_e - n) - gamma_c (n - nbar_c); zero exactly at n = nbar_s.
double flux_residual(const TransportParams& p, double n);

// Mean current at occupation n: (1/2)[gamma_e(nbar_e - n) + gamma_c(n - nbar_c)].
double current_at_occupation(const TransportParams& p, double n);

struct CurrentConstants {
    double initial; // I_0, the bracket at n0
    double steady;  // I_s = gamma_e gamma_c (nbar_e - nbar_c)/(gamma_e + gamma_c)
};
CurrentConstants current_constants(const TransportParams& p);

// I(t) = I_s + (I_0 - I_s) e^{-(gamma_e+gamma_c) t}
double current_closed_form(const TransportParams& p, double t);

// E_s = hbar omega_s I_s, J/s
double steady_energy_loss(const TransportParams& p);

struct CurrentTrace {
    std::vector<double> times;
    std::vector<double> occupation;
    std::vector<double> current;
};
CurrentTrace closed_form_trace(const TransportParams& p, std::span<const double> times);

} // namespace fermibath
