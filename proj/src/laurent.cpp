#include "oresme/laurent.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace oresme {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
    Exponent out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ExponentOverflowError("exponent overflow in polynomial arithmetic");
    }
    return out;
}

} // namespace

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, Rational>> terms) {
    for (const auto& [e, c] : terms) {
        insert_term(e, c);
    }
}

LaurentPoly LaurentPoly::constant(Rational c) {
    return monomial(std::move(c), 0);
}

LaurentPoly LaurentPoly::monomial(Rational coeff, Exponent e) {
    LaurentPoly p;
    p.insert_term(e, std::move(coeff));
    return p;
}

void LaurentPoly::insert_term(Exponent e, Rational c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

Exponent LaurentPoly::low_exponent() const {
    if (m_terms.empty()) {
        throw std::logic_error("low_exponent of zero polynomial");
    }
    return m_terms.begin()->first;
}

Exponent LaurentPoly::high_exponent() const {
    if (m_terms.empty()) {
        throw std::logic_error("high_exponent of zero polynomial");
    }
    return m_terms.rbegin()->first;
}

Rational LaurentPoly::coeff(Exponent e) const {
    auto it = m_terms.find(e);
    return it == m_terms.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : m_terms) {
        r.m_terms.emplace(e, -c);
    }
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.m_terms) {
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.m_terms) {
        auto [it, inserted] = m_terms.try_emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }
    return *this;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r += b;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    r -= b;
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) {
        return r;
    }
    Exponent lo = checked_add(a.low_exponent(), b.low_exponent());
    Exponent hi = checked_add(a.high_exponent(), b.high_exponent());
    // Dense accumulation over the exponent span; our polynomials fill every
    // other slot, so the span rarely exceeds twice the term count. Widely
    // scattered supports fall back to map accumulation.
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span <= 8 * (a.term_count() + b.term_count()) + 16) {
        std::vector<Rational> acc(span);
        for (const auto& [ea, ca] : a.terms()) {
            for (const auto& [eb, cb] : b.terms()) {
                acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
            }
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (!acc[i].is_zero()) {
                r.m_terms.emplace_hint(r.m_terms.end(), lo + static_cast<Exponent>(i),
                                       std::move(acc[i]));
            }
        }
        return r;
    }
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            r.insert_term(checked_add(ea, eb), ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [e, coeff] : m_terms) {
        r.m_terms.emplace_hint(r.m_terms.end(), e, coeff * c);
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(Exponent e, const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [exp, coeff] : m_terms) {
        r.m_terms.emplace_hint(r.m_terms.end(), checked_add(exp, e), coeff * c);
    }
    return r;
}

LaurentPoly LaurentPoly::pow(std::uint64_t e) const {
    LaurentPoly result = constant(Rational(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly r;
    for (const auto& [e, c] : m_terms) {
        if (e == 0) {
            continue;
        }
        r.m_terms.emplace_hint(r.m_terms.end(), e - 1, c * Rational(e));
    }
    return r;
}

Rational LaurentPoly::eval_exact(const Rational& x0) const {
    if (x0.is_zero() && !m_terms.empty() && low_exponent() < 0) {
        throw ZeroPointError("evaluating a negative-exponent term at x = 0");
    }
    // Horner over exponent gaps, ascending; equals sum of c_e * x0^e.
    Rational acc(0);
    Exponent prev = 0;
    bool first = true;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        if (first) {
            acc = it->second;
            prev = it->first;
            first = false;
            continue;
        }
        acc = acc * x0.pow(prev - it->first) + it->second;
        prev = it->first;
    }
    if (first) {
        return Rational(0);
    }
    return acc * x0.pow(prev);
}

double LaurentPoly::eval_float(double x0) const {
    if (x0 == 0.0 && !m_terms.empty() && low_exponent() < 0) {
        throw ZeroPointError("evaluating a negative-exponent term at x = 0");
    }
    double acc = 0.0;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        acc += it->second.to_double() * std::pow(x0, static_cast<double>(it->first));
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        const Rational c = it->second;
        const Exponent e = it->first;
        Rational mag = c.abs();
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && e != 0;
        if (!unit) {
            os << (mag.is_integer() ? mag.num().str() : mag.str());
            if (e != 0) {
                os << "*";
            }
        }
        if (e == 1) {
            os << "x";
        } else if (e != 0) {
            os << "x^" << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.str();
}

} // namespace oresme
