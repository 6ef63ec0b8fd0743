#include "oresme/sequences.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace oresme {

namespace {

// Memoized prefixes of O_n and O_n'. std::deque keeps references stable while
// the caches grow; the mutex covers both lookup and extension, and entries
// are never mutated once constructed.
std::mutex g_cache_mutex;
std::deque<LaurentPoly> g_poly_cache;
std::deque<LaurentPoly> g_deriv_cache;

void require(bool cond, const char* message) {
    if (!cond) {
        throw std::invalid_argument(message);
    }
}

} // namespace

const LaurentPoly& oresme_poly(std::int64_t n) {
    require(n >= 0, "oresme_poly requires n >= 0");
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (g_poly_cache.empty()) {
        g_poly_cache.push_back(LaurentPoly::zero());           // O_0
        g_poly_cache.push_back(LaurentPoly::monomial(1, -1));  // O_1
    }
    while (static_cast<std::int64_t>(g_poly_cache.size()) <= n) {
        std::size_t k = g_poly_cache.size();
        g_poly_cache.push_back(g_poly_cache[k - 1] - g_poly_cache[k - 2].shifted(-2));
    }
    return g_poly_cache[static_cast<std::size_t>(n)];
}

LaurentPoly oresme_poly_closed(std::int64_t n) {
    require(n >= 1, "oresme_poly_closed requires n >= 1");
    LaurentPoly p;
    for (std::int64_t j = 0; 2 * j <= n - 1; ++j) {
        BigInt c = binomial(n - j - 1, j);
        if (j % 2 != 0) {
            c = -c;
        }
        p += LaurentPoly::monomial(Rational(std::move(c)), -2 * j - 1);
    }
    return p;
}

LaurentPoly oresme_by_matrix(std::int64_t n) {
    require(n >= 1, "oresme_by_matrix requires n >= 1");
    Mat2 m = mat_pow(companion_matrix(), static_cast<std::uint64_t>(n));
    return m.e21.shifted(-1); // e21 is x * O_n
}

LaurentPoly oresme_neg_index(std::int64_t n) {
    require(n >= 1, "oresme_neg_index requires n >= 1");
    return oresme_poly(n).shifted(2 * n, Rational(-1));
}

LaurentPoly oresme_poly_any(std::int64_t n) {
    return n >= 0 ? oresme_poly(n) : oresme_neg_index(-n);
}

const LaurentPoly& oresme_derivative_poly(std::int64_t n) {
    require(n >= 0, "oresme_derivative_poly requires n >= 0");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        if (static_cast<std::int64_t>(g_deriv_cache.size()) > n) {
            return g_deriv_cache[static_cast<std::size_t>(n)];
        }
    }
    oresme_poly(n); // make sure the base prefix exists
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    while (static_cast<std::int64_t>(g_deriv_cache.size()) <= n) {
        g_deriv_cache.push_back(g_poly_cache[g_deriv_cache.size()].derivative());
    }
    return g_deriv_cache[static_cast<std::size_t>(n)];
}

LaurentPoly oresme_derivative_any(std::int64_t n) {
    return n >= 0 ? oresme_derivative_poly(n) : oresme_neg_index(-n).derivative();
}

Rational oresme_eval(std::int64_t n, const Rational& k) {
    return eval_recurrence(n, k);
}

BigInt fibonacci(std::int64_t n) {
    require(n >= 0, "fibonacci requires n >= 0");
    BigInt a = 0, b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        BigInt next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

RationalFunction prefix_sums(std::int64_t n, SumKind kind) {
    require(n >= 0, "prefix_sums requires n >= 0");
    LaurentPoly acc;
    for (std::int64_t j = 0; j <= n; ++j) {
        switch (kind) {
        case SumKind::plain:
            acc += oresme_poly(j);
            break;
        case SumKind::alternating:
            if (j % 2 == 0) {
                acc += oresme_poly(j);
            } else {
                acc -= oresme_poly(j);
            }
            break;
        case SumKind::odd_index:
            acc += oresme_poly(2 * j + 1);
            break;
        }
    }
    return RationalFunction(std::move(acc));
}

SequenceTable make_table(std::int64_t from, std::int64_t to, bool derivative,
                         Provenance provenance) {
    require(from <= to, "make_table requires from <= to");
    SequenceTable table;
    table.provenance = provenance;
    table.derivative = derivative;
    for (std::int64_t n = from; n <= to; ++n) {
        LaurentPoly p;
        if (derivative) {
            p = oresme_derivative_any(n);
        } else {
            switch (provenance) {
            case Provenance::recurrence:
                p = oresme_poly_any(n);
                break;
            case Provenance::closed:
                p = n >= 1 ? oresme_poly_closed(n) : oresme_poly_any(n);
                break;
            case Provenance::matrix:
                p = n >= 1 ? oresme_by_matrix(n) : oresme_poly_any(n);
                break;
            }
        }
        table.entries.push_back({n, std::move(p)});
    }
    return table;
}

namespace {

// O_{-n}(k) = -k^(2n) * O_n(k).
Rational negative_index_value(std::int64_t n, const Rational& k, Rational positive_value) {
    return -(k.pow(2 * n) * positive_value);
}

} // namespace

Rational eval_recurrence(std::int64_t n, const Rational& x) {
    if (x.is_zero()) {
        throw ZeroPointError("Oresme evaluation at x = 0");
    }
    if (n < 0) {
        return negative_index_value(-n, x, eval_recurrence(-n, x));
    }
    // With x = p/q, the scaled sequence T_n = p^n * O_n(x) satisfies the
    // integer recurrence T_{n+1} = p*T_n - q^2*T_{n-1} with T_0 = 0, T_1 = q.
    const BigInt p = x.num();
    const BigInt q2 = x.den() * x.den();
    BigInt a = 0, b = x.den();
    if (n == 0) {
        return Rational(0);
    }
    for (std::int64_t i = 1; i < n; ++i) {
        BigInt next = p * b - q2 * a;
        a = std::move(b);
        b = std::move(next);
    }
    return Rational(std::move(b), boost::multiprecision::pow(p, static_cast<unsigned>(n)));
}

Rational eval_matrix(std::int64_t n, const Rational& x) {
    if (x.is_zero()) {
        throw ZeroPointError("Oresme evaluation at x = 0");
    }
    if (n < 0) {
        return negative_index_value(-n, x, eval_matrix(-n, x));
    }
    if (n == 0) {
        return Rational(0);
    }
    // 2x2 powers of the companion matrix evaluated at x; e21 equals x * O_n.
    const Rational minus_inv_x2 = -(Rational(1) / (x * x));
    struct RMat {
        Rational a, b, c, d;
    };
    auto mul = [](const RMat& l, const RMat& r) {
        return RMat{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                    l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    };
    RMat result{1, 0, 0, 1};
    RMat base{Rational(1), minus_inv_x2, Rational(1), Rational(0)};
    std::uint64_t e = static_cast<std::uint64_t>(n);
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = mul(base, base);
        }
    }
    return result.c / x;
}

Rational eval_closed(std::int64_t n, const Rational& x) {
    if (x.is_zero()) {
        throw ZeroPointError("Oresme evaluation at x = 0");
    }
    if (n < 0) {
        return negative_index_value(-n, x, eval_closed(-n, x));
    }
    if (n == 0) {
        return Rational(0);
    }
    // Accumulate sum_j (-1)^j C(n-j-1, j) x^(-2j-1) over the fixed common
    // denominator p^(2J+1) * q^... by tracking powers of p and q directly.
    const BigInt p = x.num();
    const BigInt q = x.den();
    const std::int64_t jmax = (n - 1) / 2;
    // term_j = (-1)^j C(n-j-1,j) q^(2j+1) / p^(2j+1); common denominator p^(2*jmax+1).
    BigInt numerator = 0;
    BigInt coeff = 1;                                                 // C(n-1, 0)
    BigInt qpow = q;                                                  // q^(2j+1)
    BigInt ppow = boost::multiprecision::pow(p, static_cast<unsigned>(2 * jmax)); // p^(2(jmax-j))
    const BigInt p2 = p * p;
    const BigInt q2 = q * q;
    for (std::int64_t j = 0; j <= jmax; ++j) {
        BigInt term = coeff * qpow * ppow;
        if (j % 2 == 0) {
            numerator += term;
        } else {
            numerator -= term;
        }
        if (j == jmax) {
            break;
        }
        // C(n-j-2, j+1) from C(n-j-1, j); the combined division is exact.
        coeff *= (n - 2 * j - 1) * (n - 2 * j - 2);
        coeff /= (j + 1) * (n - j - 1);
        qpow *= q2;
        ppow /= p2;
    }
    return Rational(std::move(numerator),
                    boost::multiprecision::pow(p, static_cast<unsigned>(2 * jmax + 1)));
}

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::recurrence: return "recurrence";
    case Provenance::closed: return "closed";
    case Provenance::matrix: return "matrix";
    }
    return "?";
}

const char* sum_kind_name(SumKind k) {
    switch (k) {
    case SumKind::plain: return "plain";
    case SumKind::alternating: return "alternating";
    case SumKind::odd_index: return "odd_index";
    }
    return "?";
}

} // namespace oresme
