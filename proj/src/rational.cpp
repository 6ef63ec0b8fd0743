#include "oresme/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>

namespace oresme {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) {
    if (den.is_zero()) {
        throw ZeroPointError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    m_value = mp::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational r;
    r.m_value = -m_value;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ZeroPointError("rational division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

Rational Rational::pow(std::int64_t e) const {
    if (e == 0) {
        return Rational(1);
    }
    bool invert = e < 0;
    if (invert && is_zero()) {
        throw ZeroPointError("zero raised to a negative power");
    }
    std::uint64_t k = invert ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    BigInt n = mp::pow(num(), static_cast<unsigned>(k));
    BigInt d = mp::pow(den(), static_cast<unsigned>(k));
    return invert ? Rational(std::move(d), std::move(n)) : Rational(std::move(n), std::move(d));
}

double Rational::to_double() const {
    if (is_zero()) {
        return 0.0;
    }
    BigInt a = mp::abs(num());
    BigInt b = den();
    bool negative = num() < 0;

    // Scale so the integer quotient carries 53..55 significant bits, then
    // round half to even using the remainder as the sticky bit.
    long la = static_cast<long>(mp::msb(a)) + 1;
    long lb = static_cast<long>(mp::msb(b)) + 1;
    long shift = 54 - (la - lb);
    if (shift > 0) {
        a <<= shift;
    } else if (shift < 0) {
        b <<= -shift;
    }
    BigInt q, r;
    mp::divide_qr(a, b, q, r);

    long qbits = static_cast<long>(mp::msb(q)) + 1;
    long drop = qbits - 53;
    if (drop > 0) {
        BigInt low = q & ((BigInt(1) << drop) - 1);
        q >>= drop;
        bool round_bit = mp::bit_test(low, static_cast<unsigned>(drop - 1));
        BigInt below = low & ((BigInt(1) << (drop - 1)) - 1);
        bool sticky = !r.is_zero() || !below.is_zero();
        if (round_bit && (sticky || mp::bit_test(q, 0))) {
            ++q;
        }
    } else {
        // Exactly 53 quotient bits; decide on 2r vs b.
        BigInt twice = r << 1;
        if (twice > b || (twice == b && mp::bit_test(q, 0))) {
            ++q;
        }
    }
    double mant = static_cast<double>(q.convert_to<std::uint64_t>());
    double value = std::ldexp(mant, static_cast<int>((drop > 0 ? drop : 0) - shift));
    return negative ? -value : value;
}

std::string Rational::str() const {
    return num().str() + "/" + den().str();
}

Rational Rational::parse(const std::string& text) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    };
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        return fail();
    }
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        }
        return true;
    };
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string ns = s.substr(0, slash);
        std::string ds = s.substr(slash + 1);
        if (!is_int(ns) || !is_int(ds)) {
            return fail();
        }
        return Rational(BigInt(ns), BigInt(ds));
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot);
        std::string fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '+' || ip[0] == '-')) {
            ip = ip.substr(1);
        }
        if (ip.empty()) ip = "0";
        if (!is_int(ip) || !is_int(fp)) {
            return fail();
        }
        BigInt scale = mp::pow(BigInt(10), static_cast<unsigned>(fp.size()));
        BigInt n = BigInt(ip) * scale + BigInt(fp);
        if (neg) n = -n;
        return Rational(n, scale);
    }
    if (!is_int(s)) {
        return fail();
    }
    return Rational(BigInt(s));
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) {
        throw std::invalid_argument("cannot represent a non-finite double as a rational");
    }
    if (d == 0.0) {
        return Rational(0);
    }
    int e = 0;
    double m = std::frexp(d, &e); // |m| in [0.5, 1), d = m * 2^e
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    BigInt n(mant);
    int shift = e - 53;
    if (shift >= 0) {
        return Rational(n << shift);
    }
    return Rational(std::move(n), BigInt(1) << -shift);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return BigInt(0);
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt result(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i; // exact at every step: result is C(n-k+i, i)
    }
    return result;
}

} // namespace oresme
