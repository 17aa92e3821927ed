#include <benchmark/benchmark.h>

#include <vector>

#include "fermibath/analytics.hpp"
#include "fermibath/fokker_planck.hpp"
#include "fermibath/grassmann.hpp"
#include "fermibath/lindblad.hpp"
#include "fermibath/spectrum.hpp"

using namespace fermibath;

namespace {

GeneratorSpec fermionic_spec()
{
    GeneratorSpec g;
    g.omega = 3.0;
    g.gamma_e = 1.3;
    g.gamma_c = 0.7;
    g.nbar_e = 0.8;
    g.nbar_c = 0.3;
    return g;
}

GeneratorSpec bosonic_spec(int n_max)
{
    GeneratorSpec g;
    g.statistics = Statistics::bosonic;
    g.omega = 1.0;
    g.gamma_e = 1.0;
    g.gamma_c = 0.5;
    g.nbar_e = 1.5;
    g.nbar_c = 0.6;
    g.n_max = n_max;
    return g;
}

} // namespace

static void BM_GeneratorApplyFermion(benchmark::State& state)
{
    const GeneratorSpec g = fermionic_spec();
    const Eigen::MatrixXcd rho = DensityMatrix::number_state(2, 1).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(generator_apply(g, rho));
    }
}
BENCHMARK(BM_GeneratorApplyFermion);

static void BM_GeneratorApplyBoson(benchmark::State& state)
{
    const GeneratorSpec g = bosonic_spec(static_cast<int>(state.range(0)));
    const Eigen::MatrixXcd rho = DensityMatrix::number_state(g.dim(), 0).matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(generator_apply(g, rho));
    }
}
BENCHMARK(BM_GeneratorApplyBoson)->Arg(16)->Arg(40)->Arg(96);

static void BM_PropagateBoson(benchmark::State& state)
{
    const GeneratorSpec g = bosonic_spec(40);
    const DensityMatrix vacuum = DensityMatrix::number_state(g.dim(), 0);
    const double dt = 2e-3 / g.gamma_total();
    for (auto _ : state) {
        benchmark::DoNotOptimize(propagate(g, vacuum, 0.2 / g.gamma_total(), dt));
    }
}
BENCHMARK(BM_PropagateBoson);

static void BM_SteadyStateFermion(benchmark::State& state)
{
    const GeneratorSpec g = fermionic_spec();
    for (auto _ : state) {
        benchmark::DoNotOptimize(steady_state(g));
    }
}
BENCHMARK(BM_SteadyStateFermion);

static void BM_SpectrumAnalytic(benchmark::State& state)
{
    const TransportParams p{1.3, 0.7, 0.8, 0.3, 1.0, 1e12};
    std::vector<double> omegas(513);
    for (int k = 0; k < 513; ++k) {
        omegas[k] = -20.0 + 40.0 * k / 512.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(spectrum_analytic(p, omegas));
    }
}
BENCHMARK(BM_SpectrumAnalytic);

static void BM_CorrelationRegression(benchmark::State& state)
{
    const GeneratorSpec g = fermionic_spec();
    const DensityMatrix rho0 = DensityMatrix::number_state(2, 1);
    std::vector<double> taus(64);
    for (int k = 0; k < 64; ++k) {
        taus[k] = 5.0 / g.gamma_total() * k / 63.0;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(correlation_regression(g, rho0, taus));
    }
}
BENCHMARK(BM_CorrelationRegression);

static void BM_GrassmannProduct(benchmark::State& state)
{
    const auto alg = mode_algebra();
    const GrassmannPoly a = GrassmannPoly::constant(alg, 1.0) +
                            GrassmannPoly::generator(alg, "xi") * std::complex<double>(0.5);
    const GrassmannPoly b = GrassmannPoly::constant(alg, 2.0) +
                            GrassmannPoly::generator(alg, "xi*") * std::complex<double>(-1.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(g_mul(a, b));
    }
}
BENCHMARK(BM_GrassmannProduct);

static void BM_DeriveCoefficientOde(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_coefficient_ode(0.6, 1.4));
    }
}
BENCHMARK(BM_DeriveCoefficientOde);

static void BM_CoherentIdentitySuite(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(coherent_identity_suite());
    }
}
BENCHMARK(BM_CoherentIdentitySuite);

BENCHMARK_MAIN();
