#include "run_config.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <sstream>
#include <thread>

#include "fermibath/analytics.hpp"
#include "fermibath/errors.hpp"
#include "fermibath/fokker_planck.hpp"
#include "fermibath/lindblad.hpp"
#include "fermibath/reservoirs.hpp"
#include "fermibath/spectrum.hpp"
#include "fermibath/transport.hpp"

#include "csv_writer.hpp"
#include "svg_writer.hpp"

namespace fermibath::cli {

namespace {

Statistics parse_stats(const std::string& s)
{
    if (s == "fermi") {
        return Statistics::fermionic;
    }
    if (s == "bose") {
        return Statistics::bosonic;
    }
    throw ConfigurationError("--stats must be 'fermi' or 'bose'");
}

GeneratorVariant parse_variant(const std::string& v)
{
    if (v == "reference") {
        return GeneratorVariant::reference_thermal;
    }
    if (v == "paper-literal") {
        return GeneratorVariant::paper_literal;
    }
    throw ConfigurationError("--variant must be 'reference' or 'paper-literal'");
}

std::vector<double> linspace(double a, double b, int points)
{
    std::vector<double> grid(points);
    for (int k = 0; k < points; ++k) {
        grid[k] = a + (b - a) * k / (points - 1);
    }
    return grid;
}

std::string params_line(const RunConfig& cfg)
{
    std::ostringstream os;
    os << "params: omega_s_rad_s=" << format_number(cfg.omega_s)
       << " gamma_e_per_s=" << format_number(cfg.gamma_e)
       << " gamma_c_per_s=" << format_number(cfg.gamma_c)
       << " T_e_K=" << format_number(cfg.temp_e) << " T_c_K=";
    const auto temps = cfg.all_temp_c();
    for (std::size_t i = 0; i < temps.size(); ++i) {
        os << (i ? ";" : "") << format_number(temps[i]);
    }
    os << " n0=" << format_number(cfg.n0) << " variant=" << cfg.variant
       << " stats=" << cfg.stats << " n_max=" << cfg.n_max;
    if (cfg.omega_shifted) {
        os << " omega_rad_s=" << format_number(*cfg.omega_shifted);
    }
    return os.str();
}

DensityMatrix initial_state(Statistics stats, double n0, int dim)
{
    if (stats == Statistics::fermionic) {
        if (!(n0 >= 0.0 && n0 <= 1.0)) {
            throw ConfigurationError("--n0 must lie in [0, 1] for fermionic runs");
        }
        Eigen::VectorXd pops(2);
        pops << 1.0 - n0, n0;
        return DensityMatrix::from_populations(pops);
    }
    if (!(n0 >= 0.0)) {
        throw ConfigurationError("--n0 must be non-negative for bosonic runs");
    }
    // geometric (thermal) populations with the requested mean
    Eigen::VectorXd pops(dim);
    const double q = n0 / (1.0 + n0);
    double w = 1.0 / (1.0 + n0);
    for (int k = 0; k < dim; ++k) {
        pops(k) = w;
        w *= q;
    }
    return DensityMatrix::from_populations(pops);
}

void maybe_svg(const RunConfig& cfg, const std::string& title, const std::vector<double>& x,
               const std::vector<SvgSeries>& series)
{
    if (!cfg.svg) {
        return;
    }
    if (cfg.out.empty()) {
        throw ConfigurationError("--svg requires --out");
    }
    write_svg(cfg.out + ".svg", title, x, series);
}

} // namespace

int cmd_trace(const RunConfig& cfg)
{
    const Statistics stats = parse_stats(cfg.stats);
    const GeneratorVariant variant = parse_variant(cfg.variant);
    if (stats == Statistics::bosonic && variant == GeneratorVariant::paper_literal) {
        throw ConfigurationError("the paper-literal variant applies to the fermionic generator");
    }

    const double nbar_e = mean_occupation(stats, thermal_ratio(cfg.omega_s, cfg.temp_e));
    const double nbar_c = mean_occupation(stats, thermal_ratio(cfg.omega_s, cfg.first_temp_c()));

    GeneratorSpec g;
    g.statistics = stats;
    g.variant = variant;
    g.omega = cfg.omega_shifted.value_or(cfg.omega_s);
    g.gamma_e = cfg.gamma_e;
    g.gamma_c = cfg.gamma_c;
    g.nbar_e = nbar_e;
    g.nbar_c = nbar_c;
    g.n_max = cfg.n_max;
    g.validate();
    if (!(g.gamma_total() > 0.0)) {
        throw ConfigurationError("gamma_e + gamma_c must be positive");
    }

    const double t_max = cfg.t_max > 0.0 ? cfg.t_max : 10.0 / g.gamma_total();
    const double dt = cfg.dt > 0.0 ? cfg.dt : 2e-3 / g.gamma_total();

    const TransportParams p{cfg.gamma_e, cfg.gamma_c, nbar_e, nbar_c, cfg.n0, cfg.omega_s};
    const auto times = linspace(0.0, t_max, RunConfig::trace_points);

    CsvWriter csv(cfg.out);
    csv.metadata(params_line(cfg));
    csv.metadata("t_max_s=" + format_number(t_max) + " dt_s=" + format_number(dt) +
                 " nbar_e=" + format_number(nbar_e) + " nbar_c=" + format_number(nbar_c));
    if (variant == GeneratorVariant::paper_literal) {
        const double beta = g.gamma_total();
        const double alpha = g.pumping_rate();
        csv.metadata("note: numeric column follows the paper-literal master equation, whose "
                     "mean occupation relaxes at rate gamma+2*alpha, not gamma");
        csv.metadata("reference_steady=" + format_number(alpha / beta) +
                     " paper_literal_steady=" + format_number(alpha / (beta + 2.0 * alpha)));
    }

    const std::vector<std::string> names{"t_s", "n_analytic", "n_numeric", "current_analytic"};
    csv.header(names);

    DensityMatrix rho = initial_state(stats, cfg.n0, g.dim());
    std::vector<double> col_analytic, col_numeric, col_current;
    double t = 0.0;
    for (double target : times) {
        rho = propagate(g, rho, target - t, dt);
        t = target;
        const double n_analytic = occupation_closed_form(p, target);
        const double n_numeric = occupation(rho);
        const double current = current_closed_form(p, target);
        csv.row(std::vector<double>{target, n_analytic, n_numeric, current});
        col_analytic.push_back(n_analytic);
        col_numeric.push_back(n_numeric);
        col_current.push_back(current);
    }

    maybe_svg(cfg, "occupation and current vs time", times,
              {{"n_analytic", col_analytic},
               {"n_numeric", col_numeric},
               {"current_analytic", col_current}});
    return 0;
}

int cmd_transport(const RunConfig& cfg)
{
    if (!(cfg.ratio > 1.0)) {
        throw ConfigurationError("--ratio must exceed 1");
    }
    std::optional<double> shifted;
    if (cfg.use_shifted_omega) {
        if (!cfg.omega_shifted) {
            throw ConfigurationError("--use-shifted-omega requires --omega-shifted");
        }
        shifted = cfg.omega_shifted;
    }

    // log-spaced x_c from 30 down to 1e-3, so T_c increases along the grid
    std::vector<double> tc_grid(RunConfig::sweep_points);
    for (int k = 0; k < RunConfig::sweep_points; ++k) {
        const double xc =
            std::pow(10.0, std::log10(30.0) -
                               (std::log10(30.0) + 3.0) * k / (RunConfig::sweep_points - 1));
        tc_grid[k] = PhysicalConstants::hbar * cfg.omega_s / (PhysicalConstants::k_B * xc);
    }

    std::vector<EfficiencyPoint> points(tc_grid.size());
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        const auto swept = sweep_fig1(cfg.omega_s, cfg.ratio, tc_grid, shifted);
        std::copy(swept.begin(), swept.end(), points.begin());
    } else {
        std::vector<std::thread> workers;
        std::atomic<std::size_t> next{0};
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < tc_grid.size();
                     k = next.fetch_add(1)) {
                    const double tc = tc_grid[k];
                    const double te = cfg.ratio * tc;
                    points[k] = {tc, te, eta_carnot(te, tc),
                                 eta_fermionic(cfg.omega_s, te, tc, shifted),
                                 eta_bosonic(cfg.omega_s, te, tc)};
                }
            });
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }

    CsvWriter csv(cfg.out);
    csv.metadata(params_line(cfg));
    csv.metadata("ratio_Te_over_Tc=" + format_number(cfg.ratio));
    try {
        csv.metadata("eta_fermi_carnot_crossing_x_c=" +
                     format_number(carnot_crossing_xc(cfg.ratio)));
    } catch (const ConvergenceError&) {
        csv.metadata("eta_fermi_carnot_crossing_x_c=none in [1e-3, 30]");
    }

    std::vector<std::string> names{"T_c_K", "x_c", "eta_carnot", "eta_fermi", "eta_bose"};
    if (cfg.diagnostics) {
        names.insert(names.end(), {"E_s_J_per_s", "Q_J_per_s", "f_per_s"});
    }
    csv.header(names);

    std::vector<double> xs, carnots, fermis, boses;
    for (const auto& pt : points) {
        const double xc = thermal_ratio(cfg.omega_s, pt.T_c);
        std::vector<double> row{pt.T_c, xc, pt.eta_carnot, pt.eta_fermi, pt.eta_bose};
        if (cfg.diagnostics) {
            const TransportParams p{cfg.gamma_e, cfg.gamma_c,
                                    fermi_occupation(thermal_ratio(cfg.omega_s, pt.T_e)),
                                    fermi_occupation(xc), cfg.n0, cfg.omega_s};
            const auto d = transport_diagnostics(p, pt.T_c);
            row.insert(row.end(), {d.energy_loss, d.heat_input, d.matching_rate});
        }
        csv.row(row);
        xs.push_back(xc);
        carnots.push_back(pt.eta_carnot);
        fermis.push_back(pt.eta_fermi);
        boses.push_back(pt.eta_bose);
    }

    maybe_svg(cfg, "transport factors vs x_c", xs,
              {{"eta_carnot", carnots}, {"eta_fermi", fermis}, {"eta_bose", boses}});
    return 0;
}

int cmd_spectrum(const RunConfig& cfg)
{
    const Statistics stats = parse_stats(cfg.stats);
    const double g_total = cfg.gamma_e + cfg.gamma_c;
    if (!(g_total > 0.0)) {
        throw ConfigurationError("gamma_e + gamma_c must be positive");
    }
    const auto temps = cfg.all_temp_c();
    const auto omegas = linspace(-10.0 * g_total, 10.0 * g_total, RunConfig::spectrum_points);

    CsvWriter csv(cfg.out);
    csv.metadata(params_line(cfg));

    std::vector<SpectrumResult> curves;
    curves.reserve(temps.size());
    for (std::size_t i = 0; i < temps.size(); ++i) {
        const double nbar_e = mean_occupation(stats, thermal_ratio(cfg.omega_s, cfg.temp_e));
        const double nbar_c = mean_occupation(stats, thermal_ratio(cfg.omega_s, temps[i]));
        const TransportParams p{cfg.gamma_e, cfg.gamma_c, nbar_e, nbar_c, cfg.n0, cfg.omega_s};
        curves.push_back(stats == Statistics::bosonic ? spectrum_bosonic(p, omegas)
                                                      : spectrum_analytic(p, omegas));
        if (temps.size() == 1) {
            csv.metadata("dc_weight=" + format_number(curves[i].dc_weight));
        } else {
            csv.metadata("curve " + std::to_string(i + 1) + ": T_c_K=" +
                         format_number(temps[i]) +
                         " dc_weight=" + format_number(curves[i].dc_weight));
        }
    }

    std::vector<std::string> names{"omega_rad_s"};
    if (temps.size() == 1) {
        names.push_back("S_continuous");
    } else {
        for (std::size_t i = 1; i <= temps.size(); ++i) {
            names.push_back("S_continuous_" + std::to_string(i));
        }
    }
    csv.header(names);

    for (std::size_t k = 0; k < omegas.size(); ++k) {
        std::vector<double> row{omegas[k]};
        for (const auto& curve : curves) {
            row.push_back(curve.continuous[k]);
        }
        csv.row(row);
    }

    std::vector<SvgSeries> series;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        series.push_back({"T_c_K=" + format_number(temps[i]), curves[i].continuous});
    }
    maybe_svg(cfg, "current power spectrum (continuous part)", omegas, series);
    return 0;
}

int cmd_grassmann_verify(const RunConfig& cfg)
{
    const double nbar_e = fermi_occupation(thermal_ratio(cfg.omega_s, cfg.temp_e));
    const double nbar_c = fermi_occupation(thermal_ratio(cfg.omega_s, cfg.first_temp_c()));
    const double alpha = cfg.gamma_e * nbar_e + cfg.gamma_c * nbar_c;
    const double beta = cfg.gamma_e + cfg.gamma_c;
    if (!(beta > 0.0)) {
        throw ConfigurationError("gamma_e + gamma_c must be positive");
    }

    std::cout << "# " << params_line(cfg) << "\n";
    std::cout << "# alpha_per_s=" << format_number(alpha)
              << " beta_per_s=" << format_number(beta) << "\n";
    const VerificationReport report = grassmann_verification_report(alpha, beta);
    std::cout << report.render();
    std::cout << (report.engine_ok() ? "ENGINE OK" : "ENGINE FAILURE") << "\n";
    return report.engine_ok() ? 0 : 1;
}

} // namespace fermibath::cli
