#include "oresme/rational_function.hpp"

#include <ostream>

namespace oresme {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : m_num(std::move(num)), m_den(std::move(den)) {
    if (m_den.is_zero()) {
        throw EvaluationError("rational function with zero denominator");
    }
    if (m_den.term_count() == 1) {
        const auto& [e, c] = *m_den.terms().begin();
        m_num = m_num.shifted(-e, Rational(1) / c);
        m_den = LaurentPoly::constant(Rational(1));
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.m_num = -m_num;
    r.m_den = m_den;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.m_den == b.m_den) {
        return RationalFunction(a.m_num + b.m_num, a.m_den);
    }
    return RationalFunction(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.m_den == b.m_den) {
        return RationalFunction(a.m_num - b.m_num, a.m_den);
    }
    return RationalFunction(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.m_num * b.m_num, a.m_den * b.m_den);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) {
        throw EvaluationError("division by an identically zero rational function");
    }
    return RationalFunction(a.m_num * b.m_den, a.m_den * b.m_num);
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
    if (e == 0) {
        return constant(Rational(1));
    }
    bool invert = e < 0;
    std::uint64_t k = invert ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    if (invert && is_zero()) {
        throw EvaluationError("zero rational function raised to a negative power");
    }
    LaurentPoly n = m_num.pow(k);
    LaurentPoly d = m_den.pow(k);
    return invert ? RationalFunction(std::move(d), std::move(n))
                  : RationalFunction(std::move(n), std::move(d));
}

bool RationalFunction::equals(const RationalFunction& o) const {
    if (m_den == o.m_den) {
        return m_num == o.m_num;
    }
    return (m_num * o.m_den - o.m_num * m_den).is_zero();
}

Rational RationalFunction::eval_exact(const Rational& x0) const {
    Rational d = m_den.eval_exact(x0);
    if (d.is_zero()) {
        throw ZeroPointError("denominator vanishes at x = " + x0.str());
    }
    return m_num.eval_exact(x0) / d;
}

std::string RationalFunction::str() const {
    if (m_den == LaurentPoly::constant(Rational(1))) {
        return m_num.str();
    }
    return "(" + m_num.str() + ") / (" + m_den.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

} // namespace oresme
