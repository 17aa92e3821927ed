#include "fermibath/transport.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fermibath/errors.hpp"
#include "fermibath/reservoirs.hpp"

namespace fermibath {

namespace {

void require_ordered(double T_e, double T_c)
{
    if (!(T_c > 0.0) || !(T_e > 0.0)) {
        throw std::domain_error("transport factors require positive temperatures");
    }
    if (T_c > T_e) {
        throw std::domain_error("transport factors require T_e >= T_c");
    }
}

} // namespace

double eta_carnot(double T_e, double T_c)
{
    require_ordered(T_e, T_c);
    return 1.0 - T_c / T_e;
}

double eta_fermionic(double omega_s, double T_e, double T_c,
                     std::optional<double> shifted_omega)
{
    require_ordered(T_e, T_c);
    const double ne = fermi_occupation(thermal_ratio(omega_s, T_e));
    const double nc = fermi_occupation(thermal_ratio(omega_s, T_c));
    const double prefactor_omega = shifted_omega.value_or(omega_s);
    return 2.0 / thermal_ratio(prefactor_omega, T_c) * (1.0 - nc / ne);
}

double eta_bosonic(double omega_s, double T_e, double T_c)
{
    require_ordered(T_e, T_c);
    const double ne = bose_occupation(thermal_ratio(omega_s, T_e));
    const double nc = bose_occupation(thermal_ratio(omega_s, T_c));
    return 1.0 - nc / ne;
}

std::vector<EfficiencyPoint> sweep_fig1(double omega_s, double ratio,
                                        std::span<const double> tc_grid,
                                        std::optional<double> shifted_omega)
{
    if (!(ratio > 1.0)) {
        throw std::domain_error("sweep_fig1 requires T_e/T_c > 1");
    }
    std::vector<EfficiencyPoint> points;
    points.reserve(tc_grid.size());
    double previous = 0.0;
    for (std::size_t k = 0; k < tc_grid.size(); ++k) {
        const double tc = tc_grid[k];
        if (!(tc > 0.0) || (k > 0 && tc <= previous)) {
            std::ostringstream os;
            os << "sweep_fig1 grid must be strictly increasing and positive (grid index " << k
               << ", T_c = " << tc << " K)";
            throw std::domain_error(os.str());
        }
        previous = tc;
        const double te = ratio * tc;
        try {
            points.push_back({tc, te, eta_carnot(te, tc), eta_fermionic(omega_s, te, tc, shifted_omega),
                              eta_bosonic(omega_s, te, tc)});
        } catch (const std::domain_error& e) {
            std::ostringstream os;
            os << e.what() << " (grid index " << k << ", T_c = " << tc << " K)";
            throw std::domain_error(os.str());
        }
    }
    return points;
}

TransportDiagnostics transport_diagnostics(const TransportParams& p, double T_c)
{
    p.validate();
    const double f = p.gamma_e * p.gamma_c / p.gamma_total() * 2.0 *
                     PhysicalConstants::k_B * T_c / (PhysicalConstants::hbar * p.omega_s);
    return {steady_energy_loss(p), f * PhysicalConstants::hbar * p.omega_s * p.nbar_e, f};
}

double carnot_crossing_xc(double ratio, double lo, double hi)
{
    // Work in x_c directly; temperatures enter only through x_e = x_c/ratio.
    const auto gap = [ratio](double xc) {
        const double ne = fermi_occupation(xc / ratio);
        const double nc = fermi_occupation(xc);
        return 2.0 / xc * (1.0 - nc / ne) - (1.0 - 1.0 / ratio);
    };
    double a = lo, b = hi;
    double fa = gap(a);
    if (fa * gap(b) > 0.0) {
        throw ConvergenceError("carnot_crossing_xc: no sign change on the bracket");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = gap(mid);
        if (fm == 0.0 || 0.5 * (b - a) < 1e-14 * mid) {
            return mid;
        }
        if (fa * fm < 0.0) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

} // namespace fermibath
