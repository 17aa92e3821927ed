// grassmann.hpp — Exact multilinear algebra over anticommuting generators

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fermibath {

// Ordered generator universe; the insertion order is the canonical order.
class GrassmannAlgebra {
public:
    explicit GrassmannAlgebra(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int index) const { return names_.at(index); }
    int index_of(const std::string& name) const; // StructuralError if unknown

    bool operator==(const GrassmannAlgebra& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

using AlgebraPtr = std::shared_ptr<const GrassmannAlgebra>;

// Finite multilinear combination with complex coefficients. Terms are stored
// on canonically ordered monomials (ascending generator index, bitmask keys);
// coefficients are pruned only when they are exactly zero.
class GrassmannPoly {
public:
    GrassmannPoly() = default;
    explicit GrassmannPoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

    static GrassmannPoly constant(AlgebraPtr algebra, std::complex<double> value);
    static GrassmannPoly generator(AlgebraPtr algebra, const std::string& name);
    // Monomial written in the given order; the stored coefficient picks up the
    // reordering sign.
    static GrassmannPoly monomial(AlgebraPtr algebra, std::span<const std::string> factors,
                                  std::complex<double> coefficient = 1.0);

    const AlgebraPtr& algebra() const { return algebra_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_even() const;

    // Coefficient of the monomial written in the given generator order.
    std::complex<double> coefficient_of(std::span<const std::string> factors) const;
    std::complex<double> constant_term() const;

    GrassmannPoly operator+(const GrassmannPoly& other) const;
    GrassmannPoly operator-(const GrassmannPoly& other) const;
    GrassmannPoly operator-() const;
    GrassmannPoly operator*(std::complex<double> scale) const;
    friend GrassmannPoly operator*(std::complex<double> scale, const GrassmannPoly& poly)
    {
        return poly * scale;
    }

    bool operator==(const GrassmannPoly& other) const;

    std::string to_string() const;

    // Sign-flips every odd-degree term when parity is odd; the Koszul twist.
    GrassmannPoly parity_twisted(int parity) const;

    const std::map<std::uint32_t, std::complex<double>>& terms() const { return terms_; }

private:
    AlgebraPtr algebra_;
    std::map<std::uint32_t, std::complex<double>> terms_;

    void add_term(std::uint32_t mask, std::complex<double> value);

    friend GrassmannPoly g_mul(const GrassmannPoly&, const GrassmannPoly&);
    friend GrassmannPoly g_derivative_left(const GrassmannPoly&, const std::string&);
};

// Product with the sign of reordering into canonical form; repeated
// generators vanish by nilpotency.
GrassmannPoly g_mul(const GrassmannPoly& a, const GrassmannPoly& b);

// Left derivative: anticommute the generator to the front, then delete it.
GrassmannPoly g_derivative_left(const GrassmannPoly& a, const std::string& generator);

// Iterated Berezin integral; the measure is written outermost-first and the
// innermost (last listed) symbol integrates first, so with measure
// {"xi*", "xi"} (d2xi = dxi* dxi) one gets int d2xi (xi xi*) = +1.
GrassmannPoly berezin_integrate(const GrassmannPoly& a, std::span<const std::string> measure);

// xi xi*, the two-generator Grassmann delta; int d2xi delta = 1.
GrassmannPoly grassmann_delta(const AlgebraPtr& algebra);

} // namespace fermibath
