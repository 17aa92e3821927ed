#include "fermibath/graded_matrix.hpp"

#include <sstream>

#include "fermibath/errors.hpp"

namespace fermibath {

GradedMatrix::GradedMatrix(std::vector<int> row_parity, std::vector<int> col_parity,
                           AlgebraPtr algebra)
    : row_parity_(std::move(row_parity)), col_parity_(std::move(col_parity)),
      algebra_(std::move(algebra))
{
    if (row_parity_.empty() || col_parity_.empty()) {
        throw StructuralError("GradedMatrix: empty shape");
    }
    entries_.assign(static_cast<std::size_t>(rows()) * cols(), GrassmannPoly(algebra_));
}

GradedMatrix GradedMatrix::identity(std::vector<int> parity, AlgebraPtr algebra)
{
    GradedMatrix m(parity, parity, algebra);
    for (int i = 0; i < m.rows(); ++i) {
        m.at(i, i) = GrassmannPoly::constant(algebra, 1.0);
    }
    return m;
}

GradedMatrix GradedMatrix::operator*(const GradedMatrix& other) const
{
    if (cols() != other.rows() || col_parity_ != other.row_parity_) {
        throw StructuralError("GradedMatrix: incompatible shapes or parities in product");
    }
    GradedMatrix out(row_parity_, other.col_parity_, algebra_);
    for (int i = 0; i < rows(); ++i) {
        for (int l = 0; l < other.cols(); ++l) {
            GrassmannPoly acc(algebra_);
            for (int j = 0; j < cols(); ++j) {
                // (|i><j| (x) f)(|j><l| (x) g) = (-1)^{|f|(p(j)+p(l))} |i><l| (x) fg
                const int block_parity = other.row_parity(j) + other.col_parity(l);
                acc = acc + g_mul(at(i, j).parity_twisted(block_parity), other.at(j, l));
            }
            out.at(i, l) = acc;
        }
    }
    return out;
}

GradedMatrix GradedMatrix::operator+(const GradedMatrix& other) const
{
    if (row_parity_ != other.row_parity_ || col_parity_ != other.col_parity_) {
        throw StructuralError("GradedMatrix: incompatible shapes in sum");
    }
    GradedMatrix out(row_parity_, col_parity_, algebra_);
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) {
            out.at(i, j) = at(i, j) + other.at(i, j);
        }
    }
    return out;
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& other) const
{
    return *this + (-other);
}

GradedMatrix GradedMatrix::operator-() const
{
    GradedMatrix out(row_parity_, col_parity_, algebra_);
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) {
            out.at(i, j) = -at(i, j);
        }
    }
    return out;
}

GradedMatrix GradedMatrix::operator*(std::complex<double> scale) const
{
    GradedMatrix out(row_parity_, col_parity_, algebra_);
    for (int i = 0; i < rows(); ++i) {
        for (int j = 0; j < cols(); ++j) {
            out.at(i, j) = at(i, j) * scale;
        }
    }
    return out;
}

bool GradedMatrix::operator==(const GradedMatrix& other) const
{
    return (*this - other).is_zero();
}

bool GradedMatrix::is_zero() const
{
    for (const auto& e : entries_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

GrassmannPoly GradedMatrix::trace() const
{
    if (rows() != cols()) {
        throw StructuralError("GradedMatrix: trace of a non-square matrix");
    }
    GrassmannPoly acc(algebra_);
    for (int i = 0; i < rows(); ++i) {
        acc = acc + at(i, i);
    }
    return acc;
}

std::string GradedMatrix::to_string() const
{
    std::ostringstream os;
    for (int i = 0; i < rows(); ++i) {
        os << "[ ";
        for (int j = 0; j < cols(); ++j) {
            os << at(i, j).to_string() << (j + 1 < cols() ? " | " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

GradedMatrix scale_left(const GrassmannPoly& s, const GradedMatrix& m)
{
    GradedMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const int block_parity = m.row_parity(i) + m.col_parity(j);
            out.at(i, j) = g_mul(s.parity_twisted(block_parity), m.at(i, j));
        }
    }
    return out;
}

GradedMatrix scale_right(const GradedMatrix& m, const GrassmannPoly& s)
{
    GradedMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out.at(i, j) = g_mul(m.at(i, j), s);
        }
    }
    return out;
}

GradedMatrix derivative_left(const GradedMatrix& m, const std::string& generator)
{
    // The odd operator d/d(generator) passes the |i><j| block as a whole:
    // a uniform (-1)^{p(i)+p(j)} per entry, independent of the term degrees.
    GradedMatrix out = m;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            const int block_parity = m.row_parity(i) + m.col_parity(j);
            GrassmannPoly d = g_derivative_left(m.at(i, j), generator);
            out.at(i, j) = block_parity % 2 == 0 ? d : -d;
        }
    }
    return out;
}

GradedMatrix berezin_integrate(const GradedMatrix& m, std::span<const std::string> measure)
{
    GradedMatrix out = m;
    for (auto it = measure.rbegin(); it != measure.rend(); ++it) {
        out = derivative_left(out, *it);
    }
    return out;
}

GradedMatrix exp_nilpotent(const GradedMatrix& m, int max_order)
{
    if (m.rows() != m.cols()) {
        throw StructuralError("exp_nilpotent: square matrix required");
    }
    std::vector<int> parity(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        parity[i] = m.row_parity(i);
    }
    GradedMatrix sum = GradedMatrix::identity(parity, m.algebra());
    GradedMatrix power = sum;
    double factorial = 1.0;
    for (int k = 1; k <= max_order; ++k) {
        power = power * m;
        if (power.is_zero()) {
            return sum;
        }
        factorial *= k;
        sum = sum + power * std::complex<double>(1.0 / factorial);
    }
    throw VerificationError("exp_nilpotent: argument is not nilpotent at the requested order");
}

GrassmannPoly exp_nilpotent(const GrassmannPoly& p, int max_order)
{
    if (p.constant_term() != std::complex<double>(0.0, 0.0)) {
        throw StructuralError("exp_nilpotent: constant term must vanish");
    }
    GrassmannPoly sum = GrassmannPoly::constant(p.algebra(), 1.0);
    GrassmannPoly power = sum;
    double factorial = 1.0;
    for (int k = 1; k <= max_order; ++k) {
        power = g_mul(power, p);
        if (power.is_zero()) {
            return sum;
        }
        factorial *= k;
        sum = sum + power * std::complex<double>(1.0 / factorial);
    }
    throw VerificationError("exp_nilpotent: argument is not nilpotent at the requested order");
}

// --- fermionic mode fixtures ------------------------------------------------

AlgebraPtr mode_algebra()
{
    static const AlgebraPtr algebra =
        std::make_shared<const GrassmannAlgebra>(std::vector<std::string>{"xi", "xi*"});
    return algebra;
}

const std::string& xi_name()
{
    static const std::string name = "xi";
    return name;
}

const std::string& xi_star_name()
{
    static const std::string name = "xi*";
    return name;
}

namespace {
const std::vector<int> kModeParity{0, 1}; // |0> even, |1> odd
}

GradedMatrix mode_annihilator(const AlgebraPtr& algebra)
{
    GradedMatrix a(kModeParity, kModeParity, algebra);
    a.at(0, 1) = GrassmannPoly::constant(algebra, 1.0);
    return a;
}

GradedMatrix mode_creator(const AlgebraPtr& algebra)
{
    GradedMatrix ad(kModeParity, kModeParity, algebra);
    ad.at(1, 0) = GrassmannPoly::constant(algebra, 1.0);
    return ad;
}

GradedMatrix mode_identity(const AlgebraPtr& algebra)
{
    return GradedMatrix::identity(kModeParity, algebra);
}

GradedMatrix vacuum_ket(const AlgebraPtr& algebra)
{
    GradedMatrix ket(kModeParity, {0}, algebra);
    ket.at(0, 0) = GrassmannPoly::constant(algebra, 1.0);
    return ket;
}

GradedMatrix vacuum_bra(const AlgebraPtr& algebra)
{
    GradedMatrix bra({0}, kModeParity, algebra);
    bra.at(0, 0) = GrassmannPoly::constant(algebra, 1.0);
    return bra;
}

GradedMatrix displacement(const AlgebraPtr& algebra, int sign)
{
    const auto xi = GrassmannPoly::generator(algebra, xi_name()) * std::complex<double>(sign);
    const auto xi_star =
        GrassmannPoly::generator(algebra, xi_star_name()) * std::complex<double>(sign);
    const GradedMatrix exponent = scale_right(mode_creator(algebra), xi) -
                                  scale_left(xi_star, mode_annihilator(algebra));
    return exp_nilpotent(exponent);
}

GradedMatrix coherent_ket(const AlgebraPtr& algebra)
{
    return displacement(algebra, +1) * vacuum_ket(algebra);
}

GradedMatrix coherent_bra(const AlgebraPtr& algebra)
{
    return vacuum_bra(algebra) * displacement(algebra, -1);
}

GradedMatrix coherent_projector(const AlgebraPtr& algebra)
{
    return coherent_ket(algebra) * coherent_bra(algebra);
}

} // namespace fermibath
