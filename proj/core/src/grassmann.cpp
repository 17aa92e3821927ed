#include "fermibath/grassmann.hpp"

#include <bit>
#include <sstream>

#include "fermibath/errors.hpp"

namespace fermibath {

namespace {

constexpr int kMaxGenerators = 16;

// Parity of the number of (i in a, j in b) pairs with i > j; the sign of
// merging two canonically ordered monomials.
int merge_sign(std::uint32_t a, std::uint32_t b)
{
    int inversions = 0;
    for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        inversions += std::popcount(a >> (j + 1));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

void require_same_algebra(const GrassmannPoly& a, const GrassmannPoly& b)
{
    if (!a.algebra() || !b.algebra() || !(*a.algebra() == *b.algebra())) {
        throw StructuralError("grassmann: operands live in different generator universes");
    }
}

} // namespace

GrassmannAlgebra::GrassmannAlgebra(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty() || names_.size() > kMaxGenerators) {
        throw StructuralError("GrassmannAlgebra: between 1 and 16 generators supported");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j]) {
                throw StructuralError("GrassmannAlgebra: duplicate generator name");
            }
        }
    }
}

int GrassmannAlgebra::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return static_cast<int>(i);
        }
    }
    throw StructuralError("grassmann: unknown generator symbol '" + name + "'");
}

void GrassmannPoly::add_term(std::uint32_t mask, std::complex<double> value)
{
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
        it->second += value;
        if (it->second == std::complex<double>(0.0, 0.0)) {
            terms_.erase(it);
        }
    } else if (value == std::complex<double>(0.0, 0.0)) {
        terms_.erase(it);
    }
}

GrassmannPoly GrassmannPoly::constant(AlgebraPtr algebra, std::complex<double> value)
{
    GrassmannPoly p(std::move(algebra));
    p.add_term(0, value);
    return p;
}

GrassmannPoly GrassmannPoly::generator(AlgebraPtr algebra, const std::string& name)
{
    const int index = algebra->index_of(name);
    GrassmannPoly p(std::move(algebra));
    p.add_term(std::uint32_t{1} << index, 1.0);
    return p;
}

GrassmannPoly GrassmannPoly::monomial(AlgebraPtr algebra, std::span<const std::string> factors,
                                      std::complex<double> coefficient)
{
    GrassmannPoly p = constant(std::move(algebra), coefficient);
    for (const auto& name : factors) {
        p = g_mul(p, generator(p.algebra(), name));
    }
    return p;
}

bool GrassmannPoly::is_even() const
{
    for (const auto& [mask, value] : terms_) {
        if (std::popcount(mask) % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::complex<double> GrassmannPoly::coefficient_of(std::span<const std::string> factors) const
{
    GrassmannPoly probe = monomial(algebra_, factors);
    if (probe.terms_.size() != 1) {
        throw StructuralError("coefficient_of: repeated generator in monomial");
    }
    const auto& [mask, sign] = *probe.terms_.begin();
    const auto it = terms_.find(mask);
    if (it == terms_.end()) {
        return 0.0;
    }
    // stored * basis == coeff * (sign * basis)  =>  coeff = stored / sign
    return it->second / sign;
}

std::complex<double> GrassmannPoly::constant_term() const
{
    const auto it = terms_.find(0);
    return it == terms_.end() ? std::complex<double>(0.0) : it->second;
}

GrassmannPoly GrassmannPoly::operator+(const GrassmannPoly& other) const
{
    require_same_algebra(*this, other);
    GrassmannPoly out = *this;
    for (const auto& [mask, value] : other.terms_) {
        out.add_term(mask, value);
    }
    return out;
}

GrassmannPoly GrassmannPoly::operator-(const GrassmannPoly& other) const
{
    return *this + (-other);
}

GrassmannPoly GrassmannPoly::operator-() const
{
    GrassmannPoly out(algebra_);
    for (const auto& [mask, value] : terms_) {
        out.terms_.emplace(mask, -value);
    }
    return out;
}

GrassmannPoly GrassmannPoly::operator*(std::complex<double> scale) const
{
    GrassmannPoly out(algebra_);
    if (scale == std::complex<double>(0.0, 0.0)) {
        return out;
    }
    for (const auto& [mask, value] : terms_) {
        out.terms_.emplace(mask, value * scale);
    }
    return out;
}

bool GrassmannPoly::operator==(const GrassmannPoly& other) const
{
    require_same_algebra(*this, other);
    return terms_ == other.terms_;
}

GrassmannPoly GrassmannPoly::parity_twisted(int parity) const
{
    if (parity % 2 == 0) {
        return *this;
    }
    GrassmannPoly out(algebra_);
    for (const auto& [mask, value] : terms_) {
        out.terms_.emplace(mask, std::popcount(mask) % 2 == 0 ? value : -value);
    }
    return out;
}

std::string GrassmannPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    os.precision(12);
    bool first = true;
    for (const auto& [mask, value] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << value.real();
        if (value.imag() != 0.0) {
            os << (value.imag() > 0 ? "+" : "") << value.imag() << "i";
        }
        os << ")";
        for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
            os << " " << algebra_->name(std::countr_zero(rest));
        }
    }
    return os.str();
}

GrassmannPoly g_mul(const GrassmannPoly& a, const GrassmannPoly& b)
{
    require_same_algebra(a, b);
    GrassmannPoly out(a.algebra());
    for (const auto& [ma, va] : a.terms_) {
        for (const auto& [mb, vb] : b.terms_) {
            if ((ma & mb) != 0) {
                continue; // nilpotency
            }
            out.add_term(ma | mb, va * vb * static_cast<double>(merge_sign(ma, mb)));
        }
    }
    return out;
}

GrassmannPoly g_derivative_left(const GrassmannPoly& a, const std::string& generator)
{
    if (!a.algebra()) {
        throw StructuralError("g_derivative_left: polynomial has no universe");
    }
    const int index = a.algebra()->index_of(generator);
    const std::uint32_t bit = std::uint32_t{1} << index;
    const std::uint32_t below = bit - 1;
    GrassmannPoly out(a.algebra());
    for (const auto& [mask, value] : a.terms_) {
        if ((mask & bit) == 0) {
            continue;
        }
        const int hops = std::popcount(mask & below);
        out.add_term(mask & ~bit, hops % 2 == 0 ? value : -value);
    }
    return out;
}

GrassmannPoly berezin_integrate(const GrassmannPoly& a, std::span<const std::string> measure)
{
    GrassmannPoly out = a;
    for (auto it = measure.rbegin(); it != measure.rend(); ++it) {
        out = g_derivative_left(out, *it);
    }
    return out;
}

GrassmannPoly grassmann_delta(const AlgebraPtr& algebra)
{
    if (!algebra || algebra->size() != 2) {
        throw StructuralError("grassmann_delta: requires the two-generator universe {xi, xi*}");
    }
    const std::string factors[] = {algebra->name(0), algebra->name(1)};
    return GrassmannPoly::monomial(algebra, factors);
}

} // namespace fermibath
