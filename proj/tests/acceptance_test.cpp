// Acceptance suite: one pass/fail line per criterion, exit code = failures.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fermibath/analytics.hpp"
#include "fermibath/fokker_planck.hpp"
#include "fermibath/grassmann.hpp"
#include "fermibath/lindblad.hpp"
#include "fermibath/reservoirs.hpp"
#include "fermibath/spectrum.hpp"
#include "fermibath/transport.hpp"

using namespace fermibath;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message)
{
    if (!ok) {
        throw Failure{message};
    }
}

double rel_error(double value, double reference)
{
    const double scale = std::abs(reference);
    if (scale == 0.0) {
        return std::abs(value);
    }
    return std::abs(value - reference) / scale;
}

std::vector<double> uniform_grid(double start, double stop, int points)
{
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = start + (stop - start) * k / (points - 1);
    }
    return grid;
}

// --- criterion 1 -------------------------------------------------------------

void criterion_closed_form_equivalence()
{
    std::mt19937_64 rng(0x5eed0001);
    std::uniform_real_distribution<double> loggamma(6.0, 10.0);
    std::uniform_real_distribution<double> xdist(0.01, 20.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    for (int trial = 0; trial < 200; ++trial) {
        GeneratorSpec g;
        g.variant = GeneratorVariant::reference_thermal;
        g.omega = 1e12;
        g.gamma_e = std::pow(10.0, loggamma(rng));
        g.gamma_c = std::pow(10.0, loggamma(rng));
        g.nbar_e = fermi_occupation(xdist(rng));
        g.nbar_c = fermi_occupation(xdist(rng));
        const double n0 = trial % 3 == 0 ? 0.0 : (trial % 3 == 1 ? 1.0 : uniform(rng));

        const TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, n0, g.omega};
        Eigen::VectorXd pops(2);
        pops << 1.0 - n0, n0;
        DensityMatrix rho = DensityMatrix::from_populations(pops);

        const double beta = g.gamma_total();
        const double dt = 2e-3 / beta;
        double t = 0.0;
        for (int s = 1; s <= 50; ++s) {
            const double target = 5.0 / beta * s / 50.0;
            rho = propagate(g, rho, target - t, dt);
            t = target;
            const double err = rel_error(occupation(rho), occupation_closed_form(p, t));
            require(err <= 1e-8, "trial " + std::to_string(trial) + ": relative error " +
                                     std::to_string(err) + " at grid point " + std::to_string(s));
        }
    }
}

// --- criterion 2 -------------------------------------------------------------

void criterion_steady_state_flux_balance()
{
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_real_distribution<double> gammas(0.1, 10.0);
    std::uniform_real_distribution<double> nbars(0.05, 0.95);

    for (int trial = 0; trial < 50; ++trial) {
        GeneratorSpec g;
        g.variant = GeneratorVariant::reference_thermal;
        g.omega = gammas(rng);
        g.gamma_e = gammas(rng);
        g.gamma_c = gammas(rng);
        g.nbar_e = nbars(rng);
        g.nbar_c = nbars(rng);

        const double n_ss = occupation(steady_state(g));
        const double expected = g.pumping_rate() / g.gamma_total();
        require(std::abs(n_ss - expected) <= 1e-10,
                "steady occupation off by " + std::to_string(std::abs(n_ss - expected)));

        const TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 0.0, 1e12};
        const double residual = flux_residual(p, n_ss);
        require(std::abs(residual) <= 1e-12,
                "flux residual " + std::to_string(residual) + " 1/s");
    }

    // occupation accuracy also holds at SI-scale rates
    GeneratorSpec si;
    si.variant = GeneratorVariant::reference_thermal;
    si.omega = 1e12;
    si.gamma_e = 3.7e9;
    si.gamma_c = 1.1e8;
    si.nbar_e = 0.81;
    si.nbar_c = 0.17;
    const double n_si = occupation(steady_state(si));
    require(rel_error(n_si, si.pumping_rate() / si.gamma_total()) <= 1e-10,
            "SI-scale steady occupation out of tolerance");
}

// --- criterion 3 -------------------------------------------------------------

void criterion_variant_discrepancy()
{
    GeneratorSpec g;
    g.variant = GeneratorVariant::paper_literal;
    g.omega = 2.0;
    g.gamma_e = 1.3;
    g.gamma_c = 0.7;
    g.nbar_e = 0.8;
    g.nbar_c = 0.25; // nbar_e != nbar_c
    const double beta = g.gamma_total();
    const double alpha = g.pumping_rate();

    const double literal = occupation(steady_state(g));
    require(std::abs(literal - alpha / (beta + 2.0 * alpha)) <= 1e-10,
            "paper-literal steady occupation disagrees with alpha/(gamma+2 alpha)");

    const double reference = alpha / beta;
    require(std::abs(literal - reference) > 1e-3,
            "variants failed to disagree although nbar_e != nbar_c");

    const std::string report = variant_discrepancy_report(g);
    require(report.find("paper_literal") != std::string::npos &&
                report.find("reference_thermal") != std::string::npos,
            "discrepancy report missing");
    std::cout << "  -- variant discrepancy report --\n" << report;
}

// --- criterion 4 -------------------------------------------------------------

void criterion_current_anchor()
{
    for (auto [ge, gc] : std::vector<std::pair<double, double>>{
             {1.0, 1.0}, {1.3, 0.7}, {2.5e9, 0.4e9}, {5.0, 0.125}}) {
        const TransportParams p{ge, gc, 1.0, 0.0, 0.0, 1e12};
        const double expected = ge * gc / (ge + gc);
        require(current_constants(p).steady == expected,
                "I_s anchor not exact for gamma_e=" + std::to_string(ge));
    }
}

// --- criterion 5 -------------------------------------------------------------

void criterion_transport_limits()
{
    const double omega = 1e12;
    const auto tc_of = [omega](double xc) {
        return PhysicalConstants::hbar * omega / (PhysicalConstants::k_B * xc);
    };

    const double t005 = tc_of(0.05);
    require(std::abs(eta_fermionic(omega, 2.0 * t005, t005) - 0.5) <= 0.01,
            "eta_fermi misses Carnot by more than 2% at x_c = 0.05");
    require(std::abs(eta_bosonic(omega, 2.0 * t005, t005) - 0.5) <= 0.01,
            "eta_bose misses Carnot by more than 2% at x_c = 0.05");

    const double t10 = tc_of(10.0);
    const double ef = eta_fermionic(omega, 2.0 * t10, t10);
    const double eb = eta_bosonic(omega, 2.0 * t10, t10);
    require(std::abs(ef - 0.19865) <= 1e-5, "eta_fermi(x_c=10) = " + std::to_string(ef));
    require(std::abs(eb - 0.99331) <= 1e-5, "eta_bose(x_c=10) = " + std::to_string(eb));
    require(ef < 0.5 && 0.5 < eb, "low-temperature ordering violated");

    for (int k = 0; k < 121; ++k) {
        const double xc = std::pow(10.0, -3.0 + (std::log10(30.0) + 3.0) * k / 120.0);
        const double tc = tc_of(xc);
        const double f = eta_fermionic(omega, 2.0 * tc, tc);
        const double b = eta_bosonic(omega, 2.0 * tc, tc);
        require(f > 0.0 && f < 1.0 && b > 0.0 && b < 1.0,
                "transport factor out of (0, 1) at x_c = " + std::to_string(xc));
    }
}

// --- criterion 6 -------------------------------------------------------------

void criterion_fourier_pair_core(const TransportParams& p, const std::string& label)
{
    const double g = p.gamma_total();
    const auto [i0, is] = current_constants(p);

    const auto taus = uniform_grid(0.0, 12.0 / g, 4096);
    std::vector<double> corr(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
        corr[k] = correlation_analytic(p, taus[k]);
    }
    const auto omegas = uniform_grid(0.0, 10.0 * g, 201);
    const auto numeric = spectrum_numeric(taus, corr, g, is * is, omegas);
    const auto analytic = spectrum_analytic(p, omegas);

    require(numeric.dc_weight == is * is, label + ": dc weight not exactly I_s^2");
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        const double err = rel_error(numeric.continuous[k], analytic.continuous[k]);
        require(err <= 1e-3, label + ": Fourier-pair relative error " + std::to_string(err) +
                                 " at omega index " + std::to_string(k));
    }
}

void criterion_fourier_pair()
{
    // n0 = 0 keeps I_0 and I_s on the same side, away from the near
    // cancellation of the Lorentzian-squared bracket at large omega
    criterion_fourier_pair_core({1.3, 0.7, 0.8, 0.25, 0.0, 1e12}, "fermionic");
}

// --- criterion 7 -------------------------------------------------------------

void criterion_regression_oracle()
{
    // equal couplings and a single bath (I_s = 0) are exactly where the
    // stationary-form correlation solves the regression ODE; generic unequal
    // couplings depart from it and are documented in the spectrum tests.
    {
        GeneratorSpec g;
        g.variant = GeneratorVariant::reference_thermal;
        g.omega = 1.0;
        g.gamma_e = g.gamma_c = 1.0;
        g.nbar_e = 0.8;
        g.nbar_c = 0.3;
        const TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 1.0, 1e12};
        const auto taus = uniform_grid(0.0, 5.0 / g.gamma_total(), 50);
        const auto values = correlation_regression(g, DensityMatrix::number_state(2, 1), taus);
        for (std::size_t k = 0; k < taus.size(); ++k) {
            require(rel_error(values[k], correlation_analytic(p, taus[k])) <= 1e-6,
                    "equal-coupling regression departs from the stationary-form correlation");
        }
    }
    {
        GeneratorSpec g;
        g.variant = GeneratorVariant::reference_thermal;
        g.omega = 1.0;
        g.gamma_e = 2.0;
        g.gamma_c = 0.0;
        g.nbar_e = 0.8;
        g.nbar_c = 0.3;
        const TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 1.0, 1e12};
        const auto taus = uniform_grid(0.0, 5.0 / g.gamma_total(), 50);
        const auto values = correlation_regression(g, DensityMatrix::number_state(2, 1), taus);
        for (std::size_t k = 0; k < taus.size(); ++k) {
            require(rel_error(values[k], correlation_analytic(p, taus[k])) <= 1e-6,
                    "single-bath regression departs from the stationary-form correlation");
        }
    }
    {
        // mixed initial state: the reported second-moment gap
        GeneratorSpec g;
        g.variant = GeneratorVariant::reference_thermal;
        g.omega = 1.0;
        g.gamma_e = 1.3;
        g.gamma_c = 0.7;
        g.nbar_e = 0.8;
        g.nbar_c = 0.3;
        const TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 0.5, 1e12};
        Eigen::VectorXd pops(2);
        pops << 0.5, 0.5;
        const auto rho0 = DensityMatrix::from_populations(pops);
        const std::vector<double> tau0{0.0};
        const double c0 = correlation_regression(g, rho0, tau0)[0];
        const double i0 = current_constants(p).initial;
        const double expected_gap =
            0.25 * (g.gamma_e - g.gamma_c) * (g.gamma_e - g.gamma_c) * (0.5 - 0.25);
        require(std::abs((c0 - i0 * i0) - expected_gap) <= 1e-10,
                "second-moment gap differs from (gamma_e-gamma_c)^2/4 (<n> - <n>^2)");
    }
}

// --- criterion 8 -------------------------------------------------------------

void criterion_grassmann_engine()
{
    const double alpha = 0.6, beta = 1.4;

    // Berezin axioms and the identity suite must pass exactly.
    const VerificationReport report = grassmann_verification_report(alpha, beta);
    for (const auto& item : report.items) {
        require(item.status != CheckStatus::fail, "engine check failed: " + item.name);
    }
    require(report.engine_ok(), "verification report flags an engine failure");

    // Engine-derived ODE and its solution, exactly.
    const CoefficientOde ode = derive_coefficient_ode(alpha, beta);
    require(ode.a == -beta && ode.b == alpha, "coefficient ODE is not dp0/dt = alpha - beta p0");
    require(ode.p1_rate == 0.0, "dp1/dt is not identically zero");
    for (double scaled : {0.0, 0.05, 0.3, 1.0, 4.0, 12.0}) {
        const double t = scaled / beta;
        require(ode.solve(0.0, t) == alpha / beta * (1.0 - std::exp(-beta * t)),
                "solution from p0(0) = 0 deviates from (alpha/beta)(1 - e^{-beta t})");
    }

    const GaussianCheck gauss = gaussian_steady_equivalence(alpha, beta);
    require(gauss.equal && gauss.expansion.p1 == std::complex<double>(-1.0),
            "Gaussian steady expansion mismatch");
    require(gauss.expansion.p0 == std::complex<double>(ode.steady_p0()),
            "ODE steady value and Gaussian amplitude differ");

    // delta initial condition: p0(0) = 0, p1 = -1, and the stationary pair kills the drift
    const PDistribution delta = from_poly(grassmann_delta(mode_algebra()));
    require(delta.p0 == std::complex<double>(0.0) && delta.p1 == std::complex<double>(-1.0),
            "delta expansion is not (0, -1)");
    require(fp_apply(0.5, 2.0, PDistribution{0.25, -1.0}).is_zero(),
            "steady pair is not stationary under the engine generator");
}

// --- criterion 9 -------------------------------------------------------------

void criterion_bosonic_sector()
{
    GeneratorSpec g;
    g.statistics = Statistics::bosonic;
    g.omega = 1.0;
    g.gamma_e = 1.0;
    g.gamma_c = 0.5;
    g.nbar_e = bose_occupation(0.5);
    g.nbar_c = bose_occupation(1.0);
    g.n_max = 40;

    const TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 0.0, 1e12};
    DensityMatrix rho = DensityMatrix::number_state(g.dim(), 0);
    const double beta = g.gamma_total();
    const double dt = 2e-3 / beta;
    double t = 0.0;
    for (int s = 1; s <= 25; ++s) {
        const double target = 10.0 / beta * s / 25.0;
        rho = propagate(g, rho, target - t, dt);
        t = target;
        const double err = std::abs(occupation(rho) - occupation_closed_form(p, t));
        require(err <= 1e-6, "bosonic occupation law violated by " + std::to_string(err));
    }
    require(truncation_tail(rho) < 1e-8, "top-level Fock population above 1e-8");

    // the bosonic spectrum satisfies the same Fourier-pair check
    criterion_fourier_pair_core({1.3, 0.7, bose_occupation(0.5), bose_occupation(1.0), 0.0, 1e12},
                                "bosonic");
}

// --- criterion 10 ------------------------------------------------------------

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    require(in.good(), "missing CLI output " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_cli_determinism()
{
    const char* bin = std::getenv("FERMIBATH_BIN");
    require(bin != nullptr, "FERMIBATH_BIN is not set");

    const auto run = [bin](const std::string& args) {
        const std::string cmd = "\"" + std::string(bin) + "\" " + args + " >/dev/null 2>&1";
        const int status = std::system(cmd.c_str());
        require(status != -1 && WEXITSTATUS(status) == 0,
                "CLI invocation failed: " + args);
    };

    for (const std::string sub : {"trace", "transport", "spectrum"}) {
        run(sub + " --out acc_a.csv");
        run(sub + " --out acc_b.csv");
        require(slurp("acc_a.csv") == slurp("acc_b.csv"),
                sub + ": repeated runs are not byte-identical");
    }

    // the spectrum defaults are exactly the caption parameters
    run("spectrum --out acc_fig2.csv");
    const std::string fig2 = slurp("acc_fig2.csv");
    require(fig2.find("omega_s_rad_s=1000000000000 ") != std::string::npos,
            "default omega_s is not 1e12 rad/s");
    require(fig2.find("gamma_e_per_s=1000000000 ") != std::string::npos,
            "default gamma_e is not 1e9 1/s");
    require(fig2.find("gamma_c_per_s=1000000000 ") != std::string::npos,
            "default gamma_c is not 1e9 1/s");
    require(fig2.find("T_e_K=300 ") != std::string::npos, "default T_e is not 300 K");
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        std::string title;
        std::function<void()> run;
    };

    const std::vector<Criterion> criteria{
        {1, "closed-form/numeric equivalence (200 random parameter sets)",
         criterion_closed_form_equivalence},
        {2, "steady state and flux balance", criterion_steady_state_flux_balance},
        {3, "documented paper-literal/reference inconsistency", criterion_variant_discrepancy},
        {4, "current anchor I_s = gamma_e gamma_c/(gamma_e+gamma_c)", criterion_current_anchor},
        {5, "transport-factor limits and bounds at ratio 2", criterion_transport_limits},
        {6, "spectrum Fourier pair (4096-point tau grid)", criterion_fourier_pair},
        {7, "quantum-regression oracle and second-moment gap", criterion_regression_oracle},
        {8, "Grassmann engine: axioms, identities, coefficient ODE", criterion_grassmann_engine},
        {9, "bosonic sector: occupation law, truncation, spectrum", criterion_bosonic_sector},
        {10, "CLI determinism and caption defaults", criterion_cli_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.run();
            std::cout << "[PASS] criterion " << criterion.id << ": " << criterion.title << "\n";
        } catch (const Failure& f) {
            ++failures;
            std::cout << "[FAIL] criterion " << criterion.id << ": " << criterion.title << " — "
                      << f.message << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "[FAIL] criterion " << criterion.id << ": " << criterion.title
                      << " — unexpected exception: " << e.what() << "\n";
        }
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << criteria.size() - failures << "/" << criteria.size() << ")\n";
    return failures;
}
