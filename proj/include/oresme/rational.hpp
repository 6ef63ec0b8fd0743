#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "oresme/errors.hpp"

namespace oresme {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced fraction over arbitrary-precision integers.
///
/// Invariants: gcd(|num|, den) == 1, den > 0, zero is 0/1. The sign lives in
/// the numerator. All arithmetic is exact.
class Rational {
public:
    Rational() : m_value(0) {}
    Rational(long long n) : m_value(n) {} // NOLINT: implicit by design
    explicit Rational(BigInt n) : m_value(std::move(n)) {}
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt num() const { return numerator(m_value); }
    BigInt den() const { return denominator(m_value); }

    bool is_zero() const { return m_value.is_zero(); }
    int sign() const { return m_value.sign(); }
    bool is_integer() const { return denominator(m_value) == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { m_value += o.m_value; return *this; }
    Rational& operator-=(const Rational& o) { m_value -= o.m_value; return *this; }
    Rational& operator*=(const Rational& o) { m_value *= o.m_value; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.m_value == b.m_value; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.m_value != b.m_value; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.m_value < b.m_value; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.m_value <= b.m_value; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.m_value > b.m_value; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.m_value >= b.m_value; }

    Rational abs() const { return m_value < 0 ? -*this : *this; }

    /// x^e for any machine integer e; negative e inverts (throws on 0^-e).
    Rational pow(std::int64_t e) const;

    /// Round-to-nearest-even conversion to binary64.
    double to_double() const;

    /// Renders "num/den", keeping "/den" even when den == 1.
    std::string str() const;

    /// Accepts "p", "p/q" and finite decimals like "-3.25".
    static Rational parse(const std::string& text);

    /// Exact value of a finite binary64 (every finite double is p/2^k).
    static Rational from_double(double d);

private:
    boost::multiprecision::cpp_rational m_value;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(n, k) with the usual convention: 0 outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

} // namespace oresme
