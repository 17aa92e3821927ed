#include "fermibath/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "fermibath/errors.hpp"

namespace fermibath {

Eigen::MatrixXcd CurrentOperator::matrix() const
{
    Eigen::MatrixXcd m = c_identity * Eigen::MatrixXcd::Identity(dim, dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) -= c_number * static_cast<double>(i);
    }
    return m;
}

double CurrentOperator::expectation(const DensityMatrix& rho) const
{
    double v = 0.0;
    for (int i = 0; i < dim; ++i) {
        v += (c_identity - c_number * i) * rho.matrix()(i, i).real();
    }
    return v;
}

double CurrentOperator::expectation_of_square(const DensityMatrix& rho) const
{
    double v = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double eigenvalue = c_identity - c_number * i;
        v += eigenvalue * eigenvalue * rho.matrix()(i, i).real();
    }
    return v;
}

CurrentOperator current_operator(const TransportParams& p, int dim)
{
    if (dim < 2) {
        throw StructuralError("current_operator: dim must be at least 2");
    }
    p.validate();
    CurrentOperator op{0.5 * (p.gamma_e * p.nbar_e - p.gamma_c * p.nbar_c),
                       0.5 * (p.gamma_e - p.gamma_c), dim};
    // The operator must reproduce the flux-balance current on number
    // states; surface any mismatch rather than absorbing it.
    for (double n : {0.0, 1.0}) {
        const double from_operator = op.c_identity - op.c_number * n;
        const double from_flux = current_at_occupation(p, n);
        const double scale = std::max({std::abs(from_operator), std::abs(from_flux), 1e-300});
        if (std::abs(from_operator - from_flux) > 1e-12 * scale) {
            throw VerificationError(
                "current_operator: operator disagrees with the flux-balance current");
        }
    }
    return op;
}

double correlation_analytic(const TransportParams& p, double tau)
{
    const auto [i0, is] = current_constants(p);
    const double g = p.gamma_total();
    const double at = std::abs(tau);
    const double decay = std::exp(-g * at);
    return is * is + (i0 * i0 - is * is) * decay + g * (is * i0 - is * is) * at * decay;
}

double correlation_transient(const TransportParams& p, double second_moment0, double tau)
{
    const auto [i0, is] = current_constants(p);
    const double floor_value = is * i0;
    return floor_value + (second_moment0 - floor_value) * std::exp(-p.gamma_total() * std::abs(tau));
}

std::vector<double> correlation_regression(const GeneratorSpec& spec, const DensityMatrix& rho0,
                                           std::span<const double> taus, double dt)
{
    const TransportParams p{spec.gamma_e, spec.gamma_c, spec.nbar_e, spec.nbar_c, 0.0, spec.omega};
    const CurrentOperator op = current_operator(p, spec.dim());
    if (dt <= 0.0) {
        dt = 2e-3 / spec.gamma_total();
    }

    Eigen::MatrixXcd weighted = op.matrix() * rho0.matrix();
    std::vector<double> values;
    values.reserve(taus.size());
    double t = 0.0;
    const Eigen::MatrixXcd iota = op.matrix();
    for (double tau : taus) {
        if (tau < t) {
            throw ConfigurationError("correlation_regression: tau grid must be non-decreasing");
        }
        weighted = propagate_matrix(spec, std::move(weighted), tau - t, dt);
        t = tau;
        values.push_back((iota * weighted).trace().real());
    }
    return values;
}

namespace {

SpectrumResult lorentzian_squared_spectrum(double i0, double is, double g,
                                           std::span<const double> omegas)
{
    SpectrumResult result;
    result.dc_weight = is * is;
    result.omegas.assign(omegas.begin(), omegas.end());
    result.continuous.reserve(omegas.size());
    for (double w : omegas) {
        const double lorentz = 1.0 / (g * g + w * w);
        result.continuous.push_back(2.0 * g * (i0 - is) * lorentz *
                                    (i0 + is * 2.0 * g * g * lorentz));
    }
    return result;
}

} // namespace

SpectrumResult spectrum_analytic(const TransportParams& p, std::span<const double> omegas)
{
    const auto [i0, is] = current_constants(p);
    return lorentzian_squared_spectrum(i0, is, p.gamma_total(), omegas);
}

SpectrumResult spectrum_numeric(std::span<const double> taus, std::span<const double> correlation,
                                double gamma_total, double asymptote,
                                std::span<const double> omegas)
{
    if (taus.size() != correlation.size() || taus.size() < 2) {
        throw StructuralError("spectrum_numeric: tau and correlation sizes must match");
    }
    if (taus.front() != 0.0) {
        throw ConfigurationError("spectrum_numeric: tau grid must start at zero");
    }
    const double h = taus[1] - taus[0];
    if (!(h > 0.0)) {
        throw ConfigurationError("spectrum_numeric: tau grid must be increasing");
    }
    for (std::size_t k = 1; k < taus.size(); ++k) {
        if (std::abs(taus[k] - static_cast<double>(k) * h) > 1e-9 * taus.back()) {
            throw ConfigurationError("spectrum_numeric: tau grid must be uniform");
        }
    }
    if (taus.back() < 12.0 / gamma_total * (1.0 - 1e-12)) {
        throw ConfigurationError("spectrum_numeric: tau grid must cover 12/(gamma_e+gamma_c)");
    }

    SpectrumResult result;
    result.dc_weight = asymptote;
    result.omegas.assign(omegas.begin(), omegas.end());
    result.continuous.reserve(omegas.size());
    const std::size_t n = taus.size();
    for (double w : omegas) {
        // Even extension: integral over the whole line is 2 * int_0^T cos(w t) g(t) dt.
        double acc = 0.5 * (correlation[0] - asymptote);
        for (std::size_t k = 1; k + 1 < n; ++k) {
            acc += (correlation[k] - asymptote) * std::cos(w * taus[k]);
        }
        acc += 0.5 * (correlation[n - 1] - asymptote) * std::cos(w * taus[n - 1]);
        result.continuous.push_back(2.0 * h * acc);
    }
    return result;
}

SpectrumResult spectrum_bosonic(const TransportParams& p, std::span<const double> omegas)
{
    const auto [i0, is] = current_constants(p);
    return lorentzian_squared_spectrum(i0, is, p.gamma_total(), omegas);
}

} // namespace fermibath
