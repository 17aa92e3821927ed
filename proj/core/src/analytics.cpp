#include "fermibath/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "fermibath/reservoirs.hpp"

namespace fermibath {

void TransportParams::validate() const
{
    if (!(gamma_e >= 0.0) || !(gamma_c >= 0.0) || !(gamma_total() > 0.0)) {
        throw std::invalid_argument("TransportParams: gamma_e + gamma_c must be positive");
    }
}

double occupation_closed_form(const TransportParams& p, double t)
{
    const double ns = p.steady_occupation();
    return ns + (p.n0 - ns) * std::exp(-p.gamma_total() * t);
}

double flux_residual(const TransportParams& p, double n)
{
    return p.gamma_e * (p.nbar_e - n) - p.gamma_c * (n - p.nbar_c);
}

double current_at_occupation(const TransportParams& p, double n)
{
    return 0.5 * (p.gamma_e * (p.nbar_e - n) + p.gamma_c * (n - p.nbar_c));
}

CurrentConstants current_constants(const TransportParams& p)
{
    return {current_at_occupation(p, p.n0),
            p.gamma_e * p.gamma_c / p.gamma_total() * (p.nbar_e - p.nbar_c)};
}

double current_closed_form(const TransportParams& p, double t)
{
    const auto [i0, is] = current_constants(p);
    return is + (i0 - is) * std::exp(-p.gamma_total() * t);
}

double steady_energy_loss(const TransportParams& p)
{
    return PhysicalConstants::hbar * p.omega_s * current_constants(p).steady;
}

CurrentTrace closed_form_trace(const TransportParams& p, std::span<const double> times)
{
    CurrentTrace trace;
    trace.times.assign(times.begin(), times.end());
    trace.occupation.reserve(times.size());
    trace.current.reserve(times.size());
    for (double t : times) {
        const double n = occupation_closed_form(p, t);
        trace.occupation.push_back(n);
        trace.current.push_back(current_at_occupation(p, n));
    }
    return trace;
}

} // namespace fermibath
