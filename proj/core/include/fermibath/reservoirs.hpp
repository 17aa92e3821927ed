// reservoirs.hpp — Physical constants, thermal ratios, and bath occupation numbers

#pragma once

namespace fermibath {

// 2019 SI redefinition values; both are exact by definition.
struct PhysicalConstants {
    static constexpr double hbar = 1.054571817e-34; // J s
    static constexpr double k_B  = 1.380649e-23;    // J/K
};

enum class Statistics { fermionic, bosonic };

// One thermal bath: emitter or collector.
struct ReservoirSpec {
    double temperature = 0.0; // K
    double coupling = 0.0;    // s^-1
    Statistics statistics = Statistics::fermionic;

    void validate() const; // throws std::domain_error / std::invalid_argument
};

struct SystemSpec {
    double omega_s = 0.0; // rad/s
    Statistics statistics = Statistics::fermionic;
    double initial_occupation = 0.0;

    void validate() const;
};

// x = hbar*omega_s / (k_B*T). Throws std::domain_error for T <= 0.
double thermal_ratio(double omega_s, double temperature);

// Fermi-Dirac mean occupation 1/(e^x + 1); defined for all finite x.
double fermi_occupation(double x);

// Bose-Einstein mean occupation 1/(e^x - 1); requires x > 0.
// Below x = 1e-6 the series 1/x - 1/2 + x/12 is used to avoid cancellation.
double bose_occupation(double x);

// Occupation of the given statistics at dimensionless energy x.
double mean_occupation(Statistics statistics, double x);

// Bath occupation evaluated at the system frequency omega_s.
double reservoir_occupation(const ReservoirSpec& bath, double omega_s);

} // namespace fermibath
