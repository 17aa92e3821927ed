#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fermibath/errors.hpp"
#include "fermibath/spectrum.hpp"

using namespace fermibath;

namespace {

std::vector<double> uniform_grid(double start, double stop, int points)
{
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = start + (stop - start) * k / (points - 1);
    }
    return grid;
}

} // namespace

TEST_CASE("current operator")
{
    // equal couplings at full bias: iota = (gamma/2) 1, number-independent
    TransportParams flat{0.9, 0.9, 1.0, 0.0, 0.0, 1e12};
    const CurrentOperator op_flat = current_operator(flat);
    CHECK(op_flat.c_identity == 0.45);
    CHECK(op_flat.c_number == 0.0);

    // collector switched off: iota = (gamma_e/2)(nbar_e 1 - n)
    TransportParams single{1.6, 0.0, 0.7, 0.0, 0.0, 1e12};
    const CurrentOperator op_single = current_operator(single);
    CHECK(op_single.c_identity == 0.5 * 1.6 * 0.7);
    CHECK(op_single.c_number == 0.8);

    // expectation on the steady mixture reproduces I_s
    TransportParams p{1.3, 0.7, 0.8, 0.25, 0.0, 1e12};
    const CurrentOperator op = current_operator(p);
    Eigen::VectorXd pops(2);
    const double ns = p.steady_occupation();
    pops << 1.0 - ns, ns;
    const auto rho = DensityMatrix::from_populations(pops);
    CHECK(op.expectation(rho) ==
          doctest::Approx(current_constants(p).steady).epsilon(1e-13));

    // matrix form: c_identity 1 - c_number n
    const Eigen::MatrixXcd m = op.matrix();
    CHECK(m(0, 0).real() == op.c_identity);
    CHECK(m(1, 1).real() == op.c_identity - op.c_number);

    CHECK_THROWS_AS(current_operator(p, 1), StructuralError);
}

TEST_CASE("analytic correlation")
{
    TransportParams p{1.3, 0.7, 0.8, 0.25, 1.0, 1e12};
    const auto [i0, is] = current_constants(p);

    CHECK(correlation_analytic(p, 0.0) == doctest::Approx(i0 * i0).epsilon(1e-14));
    CHECK(correlation_analytic(p, 200.0 / p.gamma_total()) ==
          doctest::Approx(is * is).epsilon(1e-12));
    // even in tau by construction
    CHECK(correlation_analytic(p, 0.37) == correlation_analytic(p, -0.37));

    // steady start: constant correlation
    TransportParams steady = p;
    steady.n0 = p.steady_occupation();
    const double is2 = current_constants(steady).steady;
    for (double tau : {0.0, 0.5, 3.0}) {
        CHECK(correlation_analytic(steady, tau) ==
              doctest::Approx(is2 * is2).epsilon(1e-12));
    }
}

TEST_CASE("regression against its exact closed form")
{
    // generic couplings: the regression ODE dC/dtau = -g(C - Is I0) solves to
    // Is I0 + (<iota^2>0 - Is I0) e^{-g tau}
    GeneratorSpec g;
    g.variant = GeneratorVariant::reference_thermal;
    g.omega = 2.0;
    g.gamma_e = 1.3;
    g.gamma_c = 0.7;
    g.nbar_e = 0.8;
    g.nbar_c = 0.3;
    TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 1.0, 1e12};

    const DensityMatrix rho0 = DensityMatrix::number_state(2, 1);
    const CurrentOperator op = current_operator(p);
    const double second0 = op.expectation_of_square(rho0);

    const auto taus = uniform_grid(0.0, 5.0 / g.gamma_total(), 26);
    const auto values = correlation_regression(g, rho0, taus);
    REQUIRE(values.size() == taus.size());
    CHECK(values.front() == doctest::Approx(second0).epsilon(1e-13));
    for (std::size_t k = 0; k < taus.size(); ++k) {
        const double expected = correlation_transient(p, second0, taus[k]);
        CHECK(values[k] == doctest::Approx(expected).epsilon(1e-8));
    }

    // documented gap to the stationary-form correlation:
    // Delta = -Is(I0 - Is)(1 - (1 + g tau) e^{-g tau})
    const auto [i0, is] = current_constants(p);
    for (std::size_t k = 0; k < taus.size(); ++k) {
        const double gt = g.gamma_total() * taus[k];
        const double gap = -is * (i0 - is) * (1.0 - (1.0 + gt) * std::exp(-gt));
        const double measured = correlation_analytic(p, taus[k]) - values[k];
        CHECK(measured == doctest::Approx(gap).epsilon(1e-6));
    }
}

TEST_CASE("regression matches the stationary-form correlation on its validity domain")
{
    const auto taus = uniform_grid(0.0, 5.0 / 2.0, 26);

    // collector off: I_s = 0, both forms reduce to I_0^2 e^{-g tau}
    GeneratorSpec g;
    g.variant = GeneratorVariant::reference_thermal;
    g.gamma_e = 2.0;
    g.gamma_c = 0.0;
    g.nbar_e = 0.8;
    g.nbar_c = 0.3;
    TransportParams p{g.gamma_e, g.gamma_c, g.nbar_e, g.nbar_c, 1.0, 1e12};
    const auto values = correlation_regression(g, DensityMatrix::number_state(2, 1), taus);
    for (std::size_t k = 0; k < taus.size(); ++k) {
        CHECK(values[k] == doctest::Approx(correlation_analytic(p, taus[k])).epsilon(1e-6));
    }

    // equal couplings: iota is proportional to the identity, I_0 = I_s
    GeneratorSpec eq = g;
    eq.gamma_e = eq.gamma_c = 1.0;
    TransportParams peq{1.0, 1.0, 0.8, 0.3, 1.0, 1e12};
    const auto taus_eq = uniform_grid(0.0, 5.0 / eq.gamma_total(), 26);
    const auto flat = correlation_regression(eq, DensityMatrix::number_state(2, 1), taus_eq);
    for (std::size_t k = 0; k < taus_eq.size(); ++k) {
        CHECK(flat[k] == doctest::Approx(correlation_analytic(peq, taus_eq[k])).epsilon(1e-10));
    }
}

TEST_CASE("mixed initial state second-moment gap")
{
    TransportParams p{1.3, 0.7, 0.8, 0.3, 0.5, 1e12};
    Eigen::VectorXd pops(2);
    pops << 0.5, 0.5;
    const auto rho0 = DensityMatrix::from_populations(pops);
    const CurrentOperator op = current_operator(p);

    const double c0 = op.expectation_of_square(rho0);
    const double i0 = current_constants(p).initial;
    const double gap = 0.25 * (p.gamma_e - p.gamma_c) * (p.gamma_e - p.gamma_c) *
                       (0.5 - 0.25); // <n> - <n>^2 at <n> = 1/2
    CHECK(c0 - i0 * i0 == doctest::Approx(gap).epsilon(1e-10));
}

TEST_CASE("analytic spectrum")
{
    TransportParams p{1.3, 0.7, 0.8, 0.25, 1.0, 1e12};
    const double g = p.gamma_total();
    const auto grid = uniform_grid(-10.0 * g, 10.0 * g, 257);
    const auto s = spectrum_analytic(p, grid);
    const auto [i0, is] = current_constants(p);

    CHECK(s.dc_weight == is * is);
    // evenness is bit-exact on the symmetric grid
    for (std::size_t k = 0; k < grid.size() / 2; ++k) {
        CHECK(s.continuous[k] == s.continuous[grid.size() - 1 - k]);
    }
    // omega = 0 value
    const auto center = spectrum_analytic(p, std::vector<double>{0.0});
    CHECK(center.continuous[0] ==
          doctest::Approx(2.0 * (i0 - is) * (i0 + 2.0 * is) / g).epsilon(1e-14));

    // cross-check by quadrature of the analytic correlation
    const int quad_points = 400000;
    const double t_max = 40.0 / g;
    double integral = 0.5 * (correlation_analytic(p, 0.0) - is * is);
    for (int k = 1; k < quad_points; ++k) {
        integral += correlation_analytic(p, t_max * k / quad_points) - is * is;
    }
    integral *= 2.0 * t_max / quad_points;
    CHECK(center.continuous[0] == doctest::Approx(integral).epsilon(1e-6));

    // large-omega falloff ~ omega^-2
    const auto tail = spectrum_analytic(p, std::vector<double>{50.0 * g, 100.0 * g});
    const double ratio = tail.continuous[0] / tail.continuous[1];
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));

    // steady start: continuous part identically zero
    TransportParams steady = p;
    steady.n0 = p.steady_occupation();
    const auto flat = spectrum_analytic(steady, grid);
    const double scale = is * is;
    for (double v : flat.continuous) {
        CHECK(std::abs(v) <= 1e-12 * scale);
    }
}

TEST_CASE("numeric Fourier pair")
{
    TransportParams p{1.3, 0.7, 0.8, 0.25, 1.0, 1e12};
    const double g = p.gamma_total();
    const auto [i0, is] = current_constants(p);

    const auto taus = uniform_grid(0.0, 12.0 / g, 4096);
    std::vector<double> corr(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
        corr[k] = correlation_analytic(p, taus[k]);
    }
    const auto omegas = uniform_grid(0.0, 10.0 * g, 101);
    const auto numeric = spectrum_numeric(taus, corr, g, is * is, omegas);
    const auto analytic = spectrum_analytic(p, omegas);

    CHECK(numeric.dc_weight == is * is);
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        CHECK(numeric.continuous[k] ==
              doctest::Approx(analytic.continuous[k]).epsilon(1e-3));
    }

    // constant correlation: continuous part vanishes
    std::vector<double> constant(taus.size(), is * is);
    const auto zero = spectrum_numeric(taus, constant, g, is * is, omegas);
    for (double v : zero.continuous) {
        CHECK(v == 0.0);
    }

    // pure exponential reduces to the plain Lorentzian
    std::vector<double> expo(taus.size());
    for (std::size_t k = 0; k < taus.size(); ++k) {
        expo[k] = is * is + (i0 * i0 - is * is) * std::exp(-g * taus[k]);
    }
    const auto lorentz = spectrum_numeric(taus, expo, g, is * is, omegas);
    for (std::size_t k = 0; k < omegas.size(); ++k) {
        const double w = omegas[k];
        const double expected = 2.0 * g * (i0 * i0 - is * is) / (g * g + w * w);
        CHECK(lorentz.continuous[k] == doctest::Approx(expected).epsilon(1e-3));
    }

    // numeric evenness to 1e-10
    const auto sym = uniform_grid(-5.0 * g, 5.0 * g, 81);
    const auto both = spectrum_numeric(taus, corr, g, is * is, sym);
    for (std::size_t k = 0; k < sym.size() / 2; ++k) {
        CHECK(both.continuous[k] ==
              doctest::Approx(both.continuous[sym.size() - 1 - k]).epsilon(1e-10));
    }

    // insufficient coverage is a configuration error
    const auto short_taus = uniform_grid(0.0, 8.0 / g, 1024);
    std::vector<double> short_corr(short_taus.size(), is * is);
    CHECK_THROWS_AS(spectrum_numeric(short_taus, short_corr, g, is * is, omegas),
                    ConfigurationError);

    std::vector<double> warped = taus;
    warped[100] += 0.3 / g;
    CHECK_THROWS_AS(spectrum_numeric(warped, corr, g, is * is, omegas), ConfigurationError);
}

TEST_CASE("bosonic spectrum")
{
    // matched temperatures, thermal start: no current, zero continuous part
    TransportParams balanced{1.0, 0.6, 2.4, 2.4, 2.4, 1e12};
    const auto grid = uniform_grid(-8.0, 8.0, 65);
    const auto flat = spectrum_bosonic(balanced, grid);
    for (double v : flat.continuous) {
        CHECK(v == 0.0);
    }

    // Bose occupations exceed Fermi ones at matched parameters, so the
    // bosonic curve dominates pointwise (couplings unequal, n0 = 0).
    TransportParams fermi{1.3, 0.7, 0.49, 0.38, 0.0, 1e12};
    TransportParams bose{1.3, 0.7, 19.5, 4.48, 0.0, 1e12};
    const auto sf = spectrum_analytic(fermi, grid);
    const auto sb = spectrum_bosonic(bose, grid);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        CHECK(sb.continuous[k] > sf.continuous[k]);
    }

    // omega -> infinity falls off as omega^-2
    const double g = bose.gamma_total();
    const auto tail = spectrum_bosonic(bose, std::vector<double>{60.0 * g, 120.0 * g});
    CHECK(tail.continuous[0] / tail.continuous[1] == doctest::Approx(4.0).epsilon(0.05));
}
