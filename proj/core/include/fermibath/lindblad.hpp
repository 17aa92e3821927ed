// lindblad.hpp — Two-reservoir generators, propagation, and steady states

#pragma once

#include <string>

#include <Eigen/Dense>

#include "fermibath/density_matrix.hpp"
#include "fermibath/reservoirs.hpp"

namespace fermibath {

// paper_literal is the literal three-term fermionic master equation;
// reference_thermal is the standard thermal dissipator form whose mean
// occupation obeys d<n>/dt = -(gamma_e+gamma_c)(<n> - nbar_s). The two are
// not equivalent; see variant_discrepancy_report.
enum class GeneratorVariant { paper_literal, reference_thermal };

struct GeneratorSpec {
    Statistics statistics = Statistics::fermionic;
    GeneratorVariant variant = GeneratorVariant::reference_thermal;
    double omega = 0.0;   // rad/s, unitary term only
    double gamma_e = 0.0; // s^-1
    double gamma_c = 0.0; // s^-1
    double nbar_e = 0.0;
    double nbar_c = 0.0;
    int n_max = 40;       // bosonic truncation; ignored for fermions

    int dim() const { return statistics == Statistics::fermionic ? 2 : n_max + 1; }
    double gamma_total() const { return gamma_e + gamma_c; }
    // alpha = gamma_e*nbar_e + gamma_c*nbar_c
    double pumping_rate() const { return gamma_e * nbar_e + gamma_c * nbar_c; }

    void validate() const;
};

// d(rho)/dt for the given generator; preserves trace and hermiticity.
Eigen::MatrixXcd generator_apply(const GeneratorSpec& spec, const Eigen::MatrixXcd& rho);

// Fixed-step classical RK4 on an arbitrary matrix (quantum regression needs
// non-hermitian inputs). The final partial step lands exactly on t_final.
Eigen::MatrixXcd propagate_matrix(const GeneratorSpec& spec, Eigen::MatrixXcd m0,
                                  double t_final, double dt);

// RK4 propagation of a state; renormalizes the trace when drift exceeds 1e-12
// and re-validates the density-matrix invariants on output.
DensityMatrix propagate(const GeneratorSpec& spec, const DensityMatrix& rho0,
                        double t_final, double dt);

// Stationary state: direct null-space solve of the vectorized generator for
// dim <= 2, long-time propagation for bosons.
DensityMatrix steady_state(const GeneratorSpec& spec);

// Tr(n rho); the imaginary residue must stay below 1e-12.
double occupation(const DensityMatrix& rho);

// Population of the top two Fock levels; the bosonic truncation diagnostic.
double truncation_tail(const DensityMatrix& rho);

// Side-by-side steady occupations and mean-occupation decay rates of the two
// fermionic variants, which disagree whenever nbar_e != nbar_c.
std::string variant_discrepancy_report(const GeneratorSpec& spec);

} // namespace fermibath
