#include <doctest.h>

#include <cmath>
#include <thread>

#include "oresme/analytic.hpp"
#include "oresme/sequences.hpp"

using oresme::BigInt;
using oresme::LaurentPoly;
using oresme::Rational;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<oresme::Exponent, long long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) {
        p += LaurentPoly::monomial(Rational(c), e);
    }
    return p;
}

} // namespace

TEST_CASE("initial Oresme polynomials") {
    CHECK(oresme::oresme_poly(0).is_zero());
    CHECK(oresme::oresme_poly(1) == poly({{-1, 1}}));
    CHECK(oresme::oresme_poly(2) == poly({{-1, 1}}));
    CHECK(oresme::oresme_poly(3) == poly({{-1, 1}, {-3, -1}}));
    CHECK(oresme::oresme_poly(4) == poly({{-1, 1}, {-3, -2}}));
    CHECK(oresme::oresme_poly(5) == poly({{-1, 1}, {-3, -3}, {-5, 1}}));
    CHECK(oresme::oresme_poly(6) == poly({{-1, 1}, {-3, -4}, {-5, 3}}));
}

TEST_CASE("closed form matches the recurrence") {
    CHECK(oresme::oresme_poly_closed(1) == poly({{-1, 1}}));
    CHECK(oresme::oresme_poly_closed(5) == poly({{-1, 1}, {-3, -3}, {-5, 1}}));
    CHECK(oresme::oresme_poly_closed(9) == oresme::oresme_poly(9));
}

TEST_CASE("matrix generator matches the recurrence") {
    CHECK(oresme::oresme_by_matrix(1) == poly({{-1, 1}}));
    CHECK(oresme::oresme_by_matrix(2) == poly({{-1, 1}}));
    CHECK(oresme::oresme_by_matrix(40) == oresme::oresme_poly(40));
}

TEST_CASE("three-way agreement up to n = 200") {
    for (std::int64_t n = 1; n <= 200; ++n) {
        const LaurentPoly& rec = oresme::oresme_poly(n);
        CHECK(oresme::oresme_poly_closed(n) == rec);
        CHECK(oresme::oresme_by_matrix(n) == rec);
    }
}

TEST_CASE("support structure and leading coefficient") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        const LaurentPoly& p = oresme::oresme_poly(n);
        CHECK(p.coeff(-1) == Rational(1));
        for (const auto& [e, c] : p.terms()) {
            CHECK(e <= -1);
            CHECK(e >= -(2 * ((n - 1) / 2) + 1));
            CHECK(e % 2 != 0);
            CHECK_FALSE(c.is_zero());
        }
    }
}

TEST_CASE("x^n O_n is a polynomial of degree exactly n-1") {
    for (std::int64_t n = 1; n <= 100; ++n) {
        LaurentPoly p = oresme::oresme_poly(n).shifted(n);
        CHECK(p.low_exponent() >= 0);
        CHECK(p.high_exponent() == n - 1);
        for (const auto& [e, c] : p.terms()) {
            (void)c;
            CHECK((e - (n - 1)) % 2 == 0);
        }
    }
}

TEST_CASE("negative indices via the backward extension") {
    CHECK(oresme::oresme_neg_index(1) == poly({{1, -1}}));
    CHECK(oresme::oresme_neg_index(2) == poly({{3, -1}}));
    CHECK(oresme::oresme_poly_any(-1) == poly({{1, -1}}));

    // running the recurrence forward from O_{-n-1}, O_{-n} reproduces O_{-n+1}
    for (std::int64_t n = 1; n <= 30; ++n) {
        LaurentPoly lhs = oresme::oresme_poly_any(-n + 1);
        LaurentPoly rhs = oresme::oresme_poly_any(-n) -
                          oresme::oresme_poly_any(-n - 1).shifted(-2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("negative-index Binet consistency") {
    double expected = oresme::oresme_poly_any(-3).eval_float(3.0);
    double got = oresme::binet_float(-3, 3.0);
    CHECK(std::abs(got - expected) / std::abs(expected) < 1e-10);
}

TEST_CASE("derivative polynomials") {
    CHECK(oresme::oresme_derivative_poly(0).is_zero());
    CHECK(oresme::oresme_derivative_poly(1) == poly({{-2, -1}}));
    CHECK(oresme::oresme_derivative_poly(4) == poly({{-2, -1}, {-4, 6}}));
    CHECK(oresme::oresme_derivative_poly(6) == poly({{-2, -1}, {-4, 12}, {-6, -15}}));
}

TEST_CASE("derivative matches a central finite difference") {
    const double x0 = 3.1;
    const double h = 1e-6;
    for (std::int64_t n = 1; n <= 12; ++n) {
        const LaurentPoly& p = oresme::oresme_poly(n);
        double exact = oresme::oresme_derivative_poly(n).eval_float(x0);
        double approx = (p.eval_float(x0 + h) - p.eval_float(x0 - h)) / (2 * h);
        CHECK(std::abs(exact - approx) / std::abs(exact) < 1e-6);
    }
}

TEST_CASE("numeric derivative sequences at x = 3 and x = 4") {
    const Rational three(3), four(4);
    const Rational at3[] = {Rational(0), Rational(-1, 9), Rational(-1, 9), Rational(-6, 81),
                            Rational(-3, 81)};
    const Rational at4[] = {Rational(0), Rational(-1, 16), Rational(-1, 16),
                            Rational(-13, 256), Rational(-10, 256)};
    for (std::int64_t n = 0; n <= 4; ++n) {
        CHECK(oresme::oresme_derivative_poly(n).eval_exact(three) == at3[n]);
        CHECK(oresme::oresme_derivative_poly(n).eval_exact(four) == at4[n]);
    }
}

TEST_CASE("point evaluation") {
    CHECK(oresme::oresme_eval(5, Rational(2)) == Rational(5, 32));
    CHECK(oresme::oresme_eval(4, Rational(3)) == Rational(7, 27));
    CHECK(oresme::oresme_eval(0, Rational(9, 7)) == Rational(0));
    CHECK_THROWS_AS(oresme::oresme_eval(3, Rational(0)), oresme::ZeroPointError);
}

TEST_CASE("Fibonacci numbers") {
    CHECK(oresme::fibonacci(0) == 0);
    CHECK(oresme::fibonacci(1) == 1);
    CHECK(oresme::fibonacci(8) == 21);
    CHECK(oresme::fibonacci(10) == 55);
}

TEST_CASE("Fibonacci link and classical Oresme numbers up to n = 60") {
    for (std::int64_t n = 0; n <= 60; ++n) {
        Rational v3 = oresme::oresme_eval(n, Rational(3));
        CHECK(v3 * Rational(3).pow(n) == Rational(oresme::fibonacci(2 * n)));

        Rational v2 = oresme::oresme_eval(n, Rational(2));
        CHECK(v2 == Rational(BigInt(n), BigInt(1) << n));
    }
}

TEST_CASE("evaluation strategies agree by independent routes") {
    const Rational points[] = {Rational(3), Rational(-3), Rational(5, 2), Rational(-7, 3)};
    for (const Rational& x : points) {
        for (std::int64_t n : {-9, -2, 0, 1, 2, 7, 25, 100}) {
            Rational a = oresme::eval_recurrence(n, x);
            CHECK(oresme::eval_matrix(n, x) == a);
            CHECK(oresme::eval_closed(n, x) == a);
            if (-100 <= n) {
                CHECK(oresme::oresme_poly_any(n).eval_exact(x) == a);
            }
        }
    }
}

TEST_CASE("prefix sums by direct summation") {
    using oresme::SumKind;
    auto plain2 = oresme::prefix_sums(2, SumKind::plain);
    CHECK(plain2.equals(oresme::RationalFunction(poly({{-1, 2}}))));
    // equals x^2 (1/x - O_4)
    LaurentPoly closed = (poly({{-1, 1}}) - oresme::oresme_poly(4)).shifted(2);
    CHECK(plain2.equals(oresme::RationalFunction(closed)));

    CHECK(oresme::prefix_sums(0, SumKind::alternating).is_zero());
    CHECK(oresme::prefix_sums(0, SumKind::odd_index)
              .equals(oresme::RationalFunction(poly({{-1, 1}}))));
}

TEST_CASE("tables cover both directions and negative indices") {
    oresme::SequenceTable t = oresme::make_table(-2, 3, false);
    REQUIRE(t.entries.size() == 6);
    CHECK(t.entries.front().index == -2);
    CHECK(t.entries.front().poly == poly({{3, -1}}));
    CHECK(t.entries.back().poly == poly({{-1, 1}, {-3, -1}}));
    for (std::size_t i = 1; i < t.entries.size(); ++i) {
        CHECK(t.entries[i].index > t.entries[i - 1].index);
    }
}

TEST_CASE("memoized generators are pure under concurrent access") {
    std::vector<std::thread> threads;
    std::vector<LaurentPoly> results(4);
    for (int t = 0; t < 4; ++t) {
        threads.emplace_back([t, &results] {
            for (std::int64_t n = 0; n <= 80; ++n) {
                results[t] = oresme::oresme_poly(n) + oresme::oresme_derivative_poly(n);
            }
        });
    }
    for (auto& th : threads) {
        th.join();
    }
    for (int t = 1; t < 4; ++t) {
        CHECK(results[t] == results[0]);
    }
    CHECK(oresme::oresme_poly(80) == oresme::oresme_poly_closed(80));
}
