#pragma once

#include <iosfwd>
#include <string>

#include "oresme/laurent.hpp"

namespace oresme {

/// Quotient of two Laurent polynomials. Never reduced to lowest terms;
/// equality is decided by cross-multiplication, a/b == c/d iff a*d - c*b is
/// the zero polynomial. A monomial denominator is folded into the numerator
/// (that is a ring operation for Laurent polynomials), so denominators stay 1
/// unless a genuinely non-monomial divisor shows up.
class RationalFunction {
public:
    RationalFunction() : m_num(), m_den(LaurentPoly::constant(Rational(1))) {}
    RationalFunction(LaurentPoly num, LaurentPoly den);
    RationalFunction(LaurentPoly num) // NOLINT: lossless embedding of the ring
        : m_num(std::move(num)), m_den(LaurentPoly::constant(Rational(1))) {}

    static RationalFunction zero() { return RationalFunction(); }
    static RationalFunction constant(Rational c) {
        return RationalFunction(LaurentPoly::constant(std::move(c)));
    }
    static RationalFunction var() { return RationalFunction(LaurentPoly::var()); }

    const LaurentPoly& num() const { return m_num; }
    const LaurentPoly& den() const { return m_den; }

    bool is_zero() const { return m_num.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws EvaluationError when b is identically zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction pow(std::int64_t e) const;

    /// Exact field equality by cross-multiplication.
    bool equals(const RationalFunction& o) const;

    /// Exact value at a rational point; throws ZeroPointError when the
    /// denominator vanishes there.
    Rational eval_exact(const Rational& x0) const;

    std::string str() const;

private:
    LaurentPoly m_num;
    LaurentPoly m_den;
};

inline bool rf_equals(const RationalFunction& a, const RationalFunction& b) {
    return a.equals(b);
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

} // namespace oresme
