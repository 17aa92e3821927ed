// graded_matrix.hpp — Z2-graded matrices over a Grassmann algebra
//
// Rows and columns carry parities (the fermionic mode is the super vector
// space with |0> even and |1> odd); products, scalar actions, derivatives,
// and Berezin integrals follow the Koszul sign rule, under which the
// anticommutation of Grassmann generators with the mode operators holds
// automatically.

#pragma once

#include <vector>

#include "fermibath/grassmann.hpp"

namespace fermibath {

class GradedMatrix {
public:
    GradedMatrix(std::vector<int> row_parity, std::vector<int> col_parity, AlgebraPtr algebra);

    static GradedMatrix identity(std::vector<int> parity, AlgebraPtr algebra);

    int rows() const { return static_cast<int>(row_parity_.size()); }
    int cols() const { return static_cast<int>(col_parity_.size()); }
    int row_parity(int i) const { return row_parity_[i]; }
    int col_parity(int j) const { return col_parity_[j]; }
    const AlgebraPtr& algebra() const { return algebra_; }

    GrassmannPoly& at(int i, int j) { return entries_[index(i, j)]; }
    const GrassmannPoly& at(int i, int j) const { return entries_[index(i, j)]; }

    GradedMatrix operator*(const GradedMatrix& other) const;
    GradedMatrix operator+(const GradedMatrix& other) const;
    GradedMatrix operator-(const GradedMatrix& other) const;
    GradedMatrix operator-() const;
    GradedMatrix operator*(std::complex<double> scale) const;
    friend GradedMatrix operator*(std::complex<double> scale, const GradedMatrix& m)
    {
        return m * scale;
    }

    bool operator==(const GradedMatrix& other) const;
    bool is_zero() const;

    GrassmannPoly trace() const;
    std::string to_string() const;

private:
    std::vector<int> row_parity_;
    std::vector<int> col_parity_;
    AlgebraPtr algebra_;
    std::vector<GrassmannPoly> entries_;

    int index(int i, int j) const { return i * cols() + j; }
};

// s * M with the Koszul twist of s against each |i><j| block parity.
GradedMatrix scale_left(const GrassmannPoly& s, const GradedMatrix& m);
// M * s; the scalar passes nothing, plain entrywise product.
GradedMatrix scale_right(const GradedMatrix& m, const GrassmannPoly& s);

// Entrywise left derivative / Berezin integral with the block parity sign.
GradedMatrix derivative_left(const GradedMatrix& m, const std::string& generator);
GradedMatrix berezin_integrate(const GradedMatrix& m, std::span<const std::string> measure);

// exp by power series; the argument must be nilpotent (series terminates).
GradedMatrix exp_nilpotent(const GradedMatrix& m, int max_order = 8);
GrassmannPoly exp_nilpotent(const GrassmannPoly& p, int max_order = 8);

// --- fermionic mode fixtures over the universe {xi, xi*} -------------------

// The shared two-generator universe used by the coherent-state calculus.
AlgebraPtr mode_algebra();
const std::string& xi_name();      // "xi"
const std::string& xi_star_name(); // "xi*"

GradedMatrix mode_annihilator(const AlgebraPtr& algebra); // a, odd operator
GradedMatrix mode_creator(const AlgebraPtr& algebra);     // a+
GradedMatrix mode_identity(const AlgebraPtr& algebra);
GradedMatrix vacuum_ket(const AlgebraPtr& algebra);
GradedMatrix vacuum_bra(const AlgebraPtr& algebra);

// D(sign * xi) = exp(a+ (s xi) - (s xi*) a), expanded exactly.
GradedMatrix displacement(const AlgebraPtr& algebra, int sign = +1);
GradedMatrix coherent_ket(const AlgebraPtr& algebra);       // D(xi)|0>
GradedMatrix coherent_bra(const AlgebraPtr& algebra);       // <0|D(-xi)
GradedMatrix coherent_projector(const AlgebraPtr& algebra); // |xi><xi|

} // namespace fermibath
