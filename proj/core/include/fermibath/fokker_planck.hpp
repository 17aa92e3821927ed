// fokker_planck.hpp — P-representation dynamics of the fermionic mode
//
// The quasi-probability weight of the mode is P(xi*, xi, t) = p0(t) + p1(t)
// xi* xi. The engine pairs P with the trace-consistent coherent kernel
// e^{2 xi* xi}|xi><xi| (whose graded trace is exactly 1, so normalization
// int d2xi P = 1 is trace normalization and the delta initial condition maps
// to the vacuum), converts the density matrix through exact Berezin
// integration, applies the master-equation generator, and pulls the result
// back to the coefficient ODE. The literal drift operators of the derivation
// are kept alongside for comparison; where they disagree with the generator's
// exact action the divergence is reported, never patched.

#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermibath/graded_matrix.hpp"
#include "fermibath/grassmann.hpp"
#include "fermibath/lindblad.hpp"

namespace fermibath {

// P = p0 + p1 xi* xi; even by construction.
struct PDistribution {
    std::complex<double> p0{0.0};
    std::complex<double> p1{0.0};
};

GrassmannPoly to_poly(const PDistribution& p, const AlgebraPtr& algebra);
// StructuralError unless the polynomial is even over the two-generator universe.
PDistribution from_poly(const GrassmannPoly& poly);

// The pairing kernel e^{2 xi* xi} |xi><xi| and the density matrix
// rho(P) = int d2xi P(xi*,xi) K(xi), evaluated symbolically.
GradedMatrix pairing_kernel(const AlgebraPtr& algebra);
Eigen::Matrix2cd density_of(const PDistribution& p);

// Time derivative of P under the chosen generator variant: the exact
// Grassmann polynomial dp0/dt + dp1/dt xi* xi (dp1/dt vanishes identically).
GrassmannPoly fp_apply(double alpha, double beta, const PDistribution& p,
                       GeneratorVariant variant = GeneratorVariant::reference_thermal);
GrassmannPoly fp_apply(double alpha, double beta, const GrassmannPoly& p,
                       GeneratorVariant variant = GeneratorVariant::reference_thermal);

// The literal drift operators of the derivation,
//   I  = -(beta/2)(xi d_xi + xi* d_xi* + 4 xi* xi)
//   II = alpha (d2/(d_xi* d_xi) - xi d_xi - xi* d_xi* - 2 xi* xi),
// applied directly to P. Disagrees with fp_apply; see the report.
GrassmannPoly fp_apply_literal(double alpha, double beta, const GrassmannPoly& p);

// dp0/dt = a p0 + b with p1 pinned at -1 by normalization; p1_rate is the
// verified dp1/dt (identically zero). Throws VerificationError if the
// symbolic projection is inconsistent.
struct CoefficientOde {
    double a = 0.0;
    double b = 0.0;
    double p1_rate = 0.0;

    double steady_p0() const { return -b / a; }
    // Solution from p0(0) = p0_initial.
    double solve(double p0_initial, double t) const;
};
CoefficientOde derive_coefficient_ode(double alpha, double beta,
                                      GeneratorVariant variant = GeneratorVariant::reference_thermal);

// Expands (alpha/beta) e^{-beta xi* xi / alpha} by nilpotency and checks
// exact equality with p0 = alpha/beta, p1 = -1.
struct GaussianCheck {
    bool equal = false;
    PDistribution expansion;
};
GaussianCheck gaussian_steady_equivalence(double alpha, double beta);

// --- verification reporting -------------------------------------------------

enum class CheckStatus { pass, fail, warn };

struct CheckItem {
    CheckStatus status = CheckStatus::fail;
    std::string name;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckItem> items;

    bool engine_ok() const; // no FAIL entries (WARNs are expected divergences)
    std::string render() const;
};

// Exact checks of every coherent-state identity used by the derivation:
// displacement expansion and unitarity, the shift conjugations, the ket/bra
// ladder actions, the four projector identities, and completeness.
std::vector<CheckItem> coherent_identity_suite();

// Full report: Berezin axioms, delta function, identity suite, kernel facts,
// the derived coefficient ODE against its closed-form solution, the Gaussian
// steady state, and the divergences from the literal intermediates.
VerificationReport grassmann_verification_report(double alpha, double beta);

} // namespace fermibath
