#include "fermibath/lindblad.hpp"

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "fermibath/errors.hpp"

namespace fermibath {

namespace {

using Matrix = Eigen::MatrixXcd;
constexpr std::complex<double> kImag{0.0, 1.0};

constexpr double kMaxStepFraction = 1e-2;  // dt * gamma_total bound
constexpr double kTraceDrift = 1e-12;
constexpr double kTruncationTail = 1e-8;
constexpr double kStationaryResidual = 1e-12;

// Fermionic two-level action, rho 2x2. The paper_literal branch is the
// literal three-term master equation; reference_thermal uses the dissipators
// gamma_k(1-nbar_k) D[a] + gamma_k nbar_k D[a+].
Matrix apply_fermionic(const GeneratorSpec& g, const Matrix& rho)
{
    const std::complex<double> r00 = rho(0, 0), r01 = rho(0, 1);
    const std::complex<double> r10 = rho(1, 0), r11 = rho(1, 1);
    const double beta = g.gamma_total();
    const double alpha = g.pumping_rate();

    Matrix out(2, 2);
    if (g.variant == GeneratorVariant::reference_thermal) {
        const double down = beta - alpha; // sum gamma_k (1 - nbar_k)
        const std::complex<double> gain = down * r11 - alpha * r00;
        out(0, 0) = gain;
        out(1, 1) = -gain;
        // coherences: -i w (r01 from [n, rho]) and -(down+alpha)/2 damping
        out(0, 1) = (kImag * g.omega - 0.5 * beta) * r01;
        out(1, 0) = (-kImag * g.omega - 0.5 * beta) * r10;
    } else {
        // -iw[n,rho] - (beta/2)(n rho + rho n - 2 a rho a+)
        //            - alpha (rho - a rho a+ - a+ rho a)
        const std::complex<double> gain = beta * r11 - alpha * (r00 - r11);
        out(0, 0) = gain;
        out(1, 1) = -gain;
        out(0, 1) = (kImag * g.omega - 0.5 * beta - alpha) * r01;
        out(1, 0) = (-kImag * g.omega - 0.5 * beta - alpha) * r10;
    }
    return out;
}

// Bosonic thermal generator on the truncated Fock space, using ladder index
// arithmetic instead of dense matrix products. The raising channel is clamped
// at the top level so the truncated generator preserves the trace exactly;
// the clamping error is monitored by truncation_tail.
Matrix apply_bosonic(const GeneratorSpec& g, const Matrix& rho)
{
    const auto d = rho.rows();
    const double alpha = g.pumping_rate();       // sum gamma_k nbar_k
    const double down = g.gamma_total() + alpha; // sum gamma_k (nbar_k + 1)
    const auto raise_weight = [d](Eigen::Index i) {
        return i + 1 < d ? static_cast<double>(i + 1) : 0.0;
    };
    Matrix out(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            std::complex<double> v = -kImag * g.omega * static_cast<double>(i - j) * rho(i, j);
            // D[b]: b rho b+ - {b+ b, rho}/2
            if (i + 1 < d && j + 1 < d) {
                v += down * std::sqrt(double((i + 1) * (j + 1))) * rho(i + 1, j + 1);
            }
            v -= down * 0.5 * double(i + j) * rho(i, j);
            // D[b+] with the truncated raising operator
            if (i > 0 && j > 0) {
                v += alpha * std::sqrt(double(i * j)) * rho(i - 1, j - 1);
            }
            v -= alpha * 0.5 * (raise_weight(i) + raise_weight(j)) * rho(i, j);
            out(i, j) = v;
        }
    }
    return out;
}

Matrix rk4_step(const GeneratorSpec& g, const Matrix& m, double h)
{
    const Matrix k1 = generator_apply(g, m);
    const Matrix k2 = generator_apply(g, m + (0.5 * h) * k1);
    const Matrix k3 = generator_apply(g, m + (0.5 * h) * k2);
    const Matrix k4 = generator_apply(g, m + h * k3);
    return m + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Column-stacking superoperator of the generator, dim^2 x dim^2.
Matrix vectorized_generator(const GeneratorSpec& g)
{
    const Eigen::Index d = g.dim();
    Matrix L = Matrix::Zero(d * d, d * d);
    Matrix basis = Matrix::Zero(d, d);
    for (Eigen::Index col = 0; col < d; ++col) {
        for (Eigen::Index row = 0; row < d; ++row) {
            basis(row, col) = 1.0;
            const Matrix image = generator_apply(g, basis);
            basis(row, col) = 0.0;
            L.col(col * d + row) = Eigen::Map<const Eigen::VectorXcd>(image.data(), d * d);
        }
    }
    return L;
}

} // namespace

void GeneratorSpec::validate() const
{
    if (!(gamma_e >= 0.0) || !(gamma_c >= 0.0)) {
        throw std::invalid_argument("GeneratorSpec: couplings must be non-negative");
    }
    if (statistics == Statistics::fermionic) {
        for (double n : {nbar_e, nbar_c}) {
            if (!(n > 0.0 && n < 1.0)) {
                throw std::invalid_argument("GeneratorSpec: fermionic nbar must lie in (0, 1)");
            }
        }
    } else {
        for (double n : {nbar_e, nbar_c}) {
            if (!(n > 0.0)) {
                throw std::invalid_argument("GeneratorSpec: bosonic nbar must be positive");
            }
        }
        if (n_max < 8) {
            throw std::invalid_argument("GeneratorSpec: bosonic truncation needs n_max >= 8");
        }
    }
}

Eigen::MatrixXcd generator_apply(const GeneratorSpec& spec, const Eigen::MatrixXcd& rho)
{
    if (rho.rows() != spec.dim() || rho.cols() != spec.dim()) {
        throw StructuralError("generator_apply: state dimension does not match the generator");
    }
    return spec.statistics == Statistics::fermionic ? apply_fermionic(spec, rho)
                                                    : apply_bosonic(spec, rho);
}

Eigen::MatrixXcd propagate_matrix(const GeneratorSpec& spec, Eigen::MatrixXcd m0,
                                  double t_final, double dt)
{
    if (!(dt > 0.0)) {
        throw ConfigurationError("propagate: dt must be positive");
    }
    if (dt * spec.gamma_total() > kMaxStepFraction) {
        throw ConfigurationError("propagate: dt * (gamma_e + gamma_c) exceeds 1e-2");
    }
    if (!(t_final >= 0.0)) {
        throw ConfigurationError("propagate: t_final must be non-negative");
    }
    const auto full_steps = static_cast<long>(t_final / dt);
    Matrix m = std::move(m0);
    for (long k = 0; k < full_steps; ++k) {
        m = rk4_step(spec, m, dt);
    }
    const double remainder = t_final - static_cast<double>(full_steps) * dt;
    if (remainder > 0.0) {
        m = rk4_step(spec, m, remainder);
    }
    return m;
}

DensityMatrix propagate(const GeneratorSpec& spec, const DensityMatrix& rho0,
                        double t_final, double dt)
{
    Matrix m = propagate_matrix(spec, rho0.matrix(), t_final, dt);
    const std::complex<double> tr = m.trace();
    if (std::abs(tr - std::complex<double>(1.0)) > kTraceDrift) {
        m /= tr;
    }

    const DensityMatrix::Tolerances tol{};
    if (hermiticity_defect(m) > tol.hermiticity || trace_defect(m) > tol.trace ||
        min_eigenvalue(m) < -tol.positivity) {
        throw NumericalInstabilityError("propagate: output violates density-matrix invariants");
    }
    DensityMatrix out = DensityMatrix::from_matrix(std::move(m), tol);
    if (spec.statistics == Statistics::bosonic && truncation_tail(out) > kTruncationTail) {
        throw NumericalInstabilityError("propagate: bosonic truncation tail above 1e-8; raise n_max");
    }
    return out;
}

DensityMatrix steady_state(const GeneratorSpec& spec)
{
    if (!(spec.gamma_total() > 0.0)) {
        throw std::invalid_argument("steady_state: gamma_e + gamma_c must be positive");
    }
    const double residual_scale = std::max(1.0, spec.gamma_total());

    if (spec.dim() <= 2) {
        const Matrix L = vectorized_generator(spec);
        const Eigen::FullPivLU<Matrix> lu(L);
        const Matrix kernel = lu.kernel();
        if (kernel.cols() < 1) {
            throw ConvergenceError("steady_state: vectorized generator has no null space");
        }
        const int d = spec.dim();
        Matrix rho = Eigen::Map<const Matrix>(kernel.col(0).data(), d, d);
        rho = 0.5 * (rho + rho.adjoint()).eval();
        rho /= rho.trace();
        if (generator_apply(spec, rho).cwiseAbs().maxCoeff() > kStationaryResidual * residual_scale) {
            throw ConvergenceError("steady_state: null-space residual above tolerance");
        }
        return DensityMatrix::from_matrix(std::move(rho));
    }

    // Bosonic: relax from the vacuum until the generator residual vanishes.
    const double dt = 0.5 * kMaxStepFraction / spec.gamma_total();
    const double chunk = 2.0 / spec.gamma_total();
    constexpr int max_chunks = 100; // horizon 200/gamma_total
    DensityMatrix rho = DensityMatrix::number_state(spec.dim(), 0);
    for (int k = 0; k < max_chunks; ++k) {
        rho = propagate(spec, rho, chunk, dt);
        const double residual = generator_apply(spec, rho.matrix()).cwiseAbs().maxCoeff();
        if (residual <= kStationaryResidual * residual_scale) {
            return rho;
        }
    }
    throw ConvergenceError("steady_state: no stationary state within the configured horizon");
}

double occupation(const DensityMatrix& rho)
{
    std::complex<double> tr = 0.0;
    for (int i = 1; i < rho.dim(); ++i) {
        tr += static_cast<double>(i) * rho.matrix()(i, i);
    }
    if (std::abs(tr.imag()) > 1e-12) {
        throw NumericalInstabilityError("occupation: imaginary residue above 1e-12");
    }
    return tr.real();
}

double truncation_tail(const DensityMatrix& rho)
{
    const int d = rho.dim();
    double tail = std::abs(rho.matrix()(d - 1, d - 1));
    if (d >= 2) {
        tail += std::abs(rho.matrix()(d - 2, d - 2));
    }
    return tail;
}

std::string variant_discrepancy_report(const GeneratorSpec& spec)
{
    const double beta = spec.gamma_total();
    const double alpha = spec.pumping_rate();
    const double reference_steady = alpha / beta;
    const double literal_steady = alpha / (beta + 2.0 * alpha);

    GeneratorSpec ref = spec;
    ref.statistics = Statistics::fermionic;
    ref.variant = GeneratorVariant::reference_thermal;
    GeneratorSpec lit = ref;
    lit.variant = GeneratorVariant::paper_literal;

    std::ostringstream os;
    os.precision(17);
    os << "fermionic generator variants disagree unless nbar_e == nbar_c:\n"
       << "  reference_thermal: d<n>/dt = -(gamma_e+gamma_c)(<n> - nbar_s), "
       << "steady <n> = " << occupation(steady_state(ref)) << " (closed form " << reference_steady
       << ")\n"
       << "  paper_literal:     d<n>/dt = -(gamma+2*alpha)<n> + alpha, "
       << "steady <n> = " << occupation(steady_state(lit)) << " (closed form " << literal_steady
       << ")\n"
       << "  gamma = " << beta << ", alpha = " << alpha
       << ", steady-state gap = " << (reference_steady - literal_steady) << "\n";
    return os.str();
}

} // namespace fermibath
