// spectrum.hpp — Current operator, two-time correlations, and power spectra

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fermibath/analytics.hpp"
#include "fermibath/density_matrix.hpp"
#include "fermibath/lindblad.hpp"

namespace fermibath {

// iota = c_identity * 1 - c_number * n with
// c_identity = (gamma_e nbar_e - gamma_c nbar_c)/2, c_number = (gamma_e - gamma_c)/2.
struct CurrentOperator {
    double c_identity = 0.0; // s^-1
    double c_number = 0.0;   // s^-1
    int dim = 2;

    Eigen::MatrixXcd matrix() const;
    double expectation(const DensityMatrix& rho) const;
    double expectation_of_square(const DensityMatrix& rho) const; // <iota^2>
};

// Builds the operator and verifies that its expectation on diag(1-n, n)
// reproduces current_at_occupation; a mismatch throws VerificationError
// instead of being patched.
CurrentOperator current_operator(const TransportParams& p, int dim = 2);

// Stationary-form correlation:
// I_s^2 + (I_0^2 - I_s^2) e^{-g|tau|} + g (I_s I_0 - I_s^2)|tau| e^{-g|tau|}.
double correlation_analytic(const TransportParams& p, double tau);

// Exact solution of the regression ODE d C/d tau = -g (C - I_s I_0) for a
// diagonal initial state with second moment <iota^2>(0):
// I_s I_0 + (<iota^2>(0) - I_s I_0) e^{-g tau}. Coincides with
// correlation_analytic only when I_s = 0 or I_0 = I_s.
double correlation_transient(const TransportParams& p, double second_moment0, double tau);

// C(tau) = Tr[iota exp(L tau)(iota rho0)] by propagating iota*rho0 under the
// generator. dt = 0 picks an internal step satisfying the RK4 bound.
std::vector<double> correlation_regression(const GeneratorSpec& spec, const DensityMatrix& rho0,
                                           std::span<const double> taus, double dt = 0.0);

struct SpectrumResult {
    double dc_weight = 0.0; // coefficient of 2*pi*delta(omega); equals I_s^2
    std::vector<double> omegas;
    std::vector<double> continuous; // spectral density samples
};

// Continuous part
// [2 g (I_0-I_s)/(g^2+w^2)] [I_0 + I_s 2 g^2/(g^2+w^2)], g = gamma_e+gamma_c.
SpectrumResult spectrum_analytic(const TransportParams& p, std::span<const double> omegas);

// Discrete check of the Fourier pair: subtracts the known asymptote (assigned
// to dc_weight), extends the remainder evenly to tau < 0, and integrates
// e^{i w tau} by the trapezoid rule. Requires a uniform tau grid from 0
// covering at least 12/gamma_total.
SpectrumResult spectrum_numeric(std::span<const double> taus, std::span<const double> correlation,
                                double gamma_total, double asymptote,
                                std::span<const double> omegas);

// Same closed form with I_0^b, I_s^b built from Bose occupations carried in p.
SpectrumResult spectrum_bosonic(const TransportParams& p, std::span<const double> omegas);

} // namespace fermibath
