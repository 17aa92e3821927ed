#include "fermibath/reservoirs.hpp"

#include <cmath>
#include <stdexcept>

namespace fermibath {

namespace {
constexpr double kBoseSeriesThreshold = 1e-6;
}

void ReservoirSpec::validate() const
{
    if (!(temperature > 0.0)) {
        throw std::domain_error("reservoir temperature must be positive");
    }
    if (!(coupling >= 0.0)) {
        throw std::invalid_argument("reservoir coupling must be non-negative");
    }
}

void SystemSpec::validate() const
{
    if (!(omega_s > 0.0)) {
        throw std::invalid_argument("system frequency must be positive");
    }
    if (statistics == Statistics::fermionic) {
        if (!(initial_occupation >= 0.0 && initial_occupation <= 1.0)) {
            throw std::invalid_argument("fermionic initial occupation must lie in [0, 1]");
        }
    } else if (!(initial_occupation >= 0.0)) {
        throw std::invalid_argument("bosonic initial occupation must be non-negative");
    }
}

double thermal_ratio(double omega_s, double temperature)
{
    if (!(temperature > 0.0)) {
        throw std::domain_error("thermal_ratio requires a positive temperature");
    }
    return PhysicalConstants::hbar * omega_s / (PhysicalConstants::k_B * temperature);
}

double fermi_occupation(double x)
{
    // 1/(e^x + 1) evaluated without overflow on either tail.
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (std::exp(x) + 1.0);
}

double bose_occupation(double x)
{
    if (!(x > 0.0)) {
        throw std::domain_error("bose_occupation requires x > 0");
    }
    if (x < kBoseSeriesThreshold) {
        return 1.0 / x - 0.5 + x / 12.0;
    }
    return 1.0 / std::expm1(x);
}

double mean_occupation(Statistics statistics, double x)
{
    return statistics == Statistics::fermionic ? fermi_occupation(x) : bose_occupation(x);
}

double reservoir_occupation(const ReservoirSpec& bath, double omega_s)
{
    return mean_occupation(bath.statistics, thermal_ratio(omega_s, bath.temperature));
}

} // namespace fermibath
