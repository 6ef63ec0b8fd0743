#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "oresme/rational.hpp"

namespace oresme {

using Exponent = std::int64_t;

/// Sparse Laurent polynomial in one indeterminate x: a finite map from
/// integer exponents (either sign) to nonzero rational coefficients.
///
/// Canonical form is enforced on every constructor/operation exit: no stored
/// coefficient is zero, so equality is exact map equality and the zero
/// polynomial is the empty map.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<Exponent, Rational>> terms);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(Rational c);
    static LaurentPoly monomial(Rational coeff, Exponent e);
    /// The indeterminate itself.
    static LaurentPoly var() { return monomial(Rational(1), 1); }

    bool is_zero() const { return m_terms.empty(); }
    std::size_t term_count() const { return m_terms.size(); }
    const TermMap& terms() const { return m_terms; }

    /// Lowest/highest exponent with nonzero coefficient; zero poly has none.
    Exponent low_exponent() const;
    Exponent high_exponent() const;

    Rational coeff(Exponent e) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly scaled(const Rational& c) const;
    /// Multiplication by the monomial c * x^e.
    LaurentPoly shifted(Exponent e, const Rational& c = Rational(1)) const;
    LaurentPoly pow(std::uint64_t e) const;

    /// Term-wise d/dx; the exponent-0 term vanishes.
    LaurentPoly derivative() const;

    /// Exact evaluation at a rational point. Throws ZeroPointError when the
    /// polynomial has a negative-exponent term and x0 == 0.
    Rational eval_exact(const Rational& x0) const;

    /// Binary64 evaluation, accumulated in descending exponent order with
    /// each coefficient rounded to nearest binary64 first.
    double eval_float(double x0) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.m_terms == b.m_terms; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human form like "x^-1 - 2*x^-3"; "0" for the zero polynomial.
    std::string str() const;

private:
    void insert_term(Exponent e, Rational c);

    TermMap m_terms;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace oresme
