#include <doctest.h>

#include <cmath>
#include <random>

#include "oresme/laurent.hpp"
#include "oresme/mat2.hpp"
#include "oresme/rational_function.hpp"

using oresme::LaurentPoly;
using oresme::Mat2;
using oresme::Rational;
using oresme::RationalFunction;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 8);
    std::uniform_int_distribution<int> exps(-30, 30);
    std::uniform_int_distribution<int> nums(-20, 20);
    std::uniform_int_distribution<int> dens(1, 10);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        p += LaurentPoly::monomial(Rational(nums(rng), dens(rng)), exps(rng));
    }
    return p;
}

} // namespace

TEST_CASE("canonical sparse form") {
    LaurentPoly p{{-1, Rational(1)}, {-3, Rational(-1)}};
    CHECK(p.term_count() == 2);

    // cancellation leaves a single canonical term
    LaurentPoly q = p - LaurentPoly::monomial(Rational(1), -1);
    CHECK(q.term_count() == 1);
    CHECK(q == LaurentPoly::monomial(Rational(-1), -3));

    CHECK((p + LaurentPoly::zero()) == p);
    CHECK((p - p).is_zero());
    CHECK(LaurentPoly{{2, Rational(0)}}.is_zero());
}

TEST_CASE("multiplication is the Cauchy product over exponents") {
    LaurentPoly p{{-1, Rational(1)}, {-3, Rational(-1)}};
    LaurentPoly shift = LaurentPoly::monomial(Rational(1), -1);
    CHECK(p * shift == LaurentPoly{{-2, Rational(1)}, {-4, Rational(-1)}});

    LaurentPoly a{{0, Rational(1)}, {1, Rational(1)}};  // 1 + x
    LaurentPoly b{{0, Rational(1)}, {1, Rational(-1)}}; // 1 - x
    CHECK(a * b == LaurentPoly{{0, Rational(1)}, {2, Rational(-1)}});
}

TEST_CASE("derivative is term-wise with vanishing constant term") {
    LaurentPoly p{{-1, Rational(1)}, {-3, Rational(-1)}};
    CHECK(p.derivative() == LaurentPoly{{-2, Rational(-1)}, {-4, Rational(3)}});
    CHECK(LaurentPoly::constant(Rational(5)).derivative().is_zero());
    CHECK(LaurentPoly::monomial(Rational(1), 2).derivative() ==
          LaurentPoly::monomial(Rational(2), 1));
}

TEST_CASE("exact evaluation") {
    LaurentPoly o4{{-1, Rational(1)}, {-3, Rational(-2)}};
    CHECK(o4.eval_exact(Rational(3)) == Rational(7, 27));
    CHECK(LaurentPoly::zero().eval_exact(Rational(5)) == Rational(0));
    CHECK(LaurentPoly::monomial(Rational(1), -1).eval_exact(Rational(2)) == Rational(1, 2));

    CHECK_THROWS_AS(o4.eval_exact(Rational(0)), oresme::ZeroPointError);
    LaurentPoly plain{{0, Rational(3)}, {2, Rational(1)}};
    CHECK(plain.eval_exact(Rational(0)) == Rational(3));
}

TEST_CASE("float evaluation") {
    CHECK(LaurentPoly::monomial(Rational(1), -1).eval_float(2.0) == 0.5);
    LaurentPoly o4{{-1, Rational(1)}, {-3, Rational(-2)}};
    CHECK(std::abs(o4.eval_float(3.0) - 7.0 / 27.0) < 1e-15);
    CHECK(LaurentPoly::zero().eval_float(1.0) == 0.0);
    CHECK_THROWS_AS(o4.eval_float(0.0), oresme::ZeroPointError);
}

TEST_CASE("ring laws on random sparse polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("exponent overflow aborts with a clear error") {
    LaurentPoly big = LaurentPoly::monomial(Rational(1), INT64_MAX - 1);
    CHECK_THROWS_AS(big * big, oresme::ExponentOverflowError);
    CHECK_THROWS_AS(big.shifted(10), oresme::ExponentOverflowError);
}

TEST_CASE("rational function equality by cross-multiplication") {
    LaurentPoly x2m1{{2, Rational(1)}, {0, Rational(-1)}};
    LaurentPoly x4mx2{{4, Rational(1)}, {2, Rational(-1)}};
    RationalFunction a(x2m1, LaurentPoly::monomial(Rational(1), 3));
    RationalFunction b(x4mx2, LaurentPoly::monomial(Rational(1), 5));
    CHECK(a.equals(b));

    RationalFunction inv_x(LaurentPoly::constant(Rational(1)),
                           LaurentPoly::monomial(Rational(1), 1));
    LaurentPoly x2p1{{2, Rational(1)}, {0, Rational(1)}};
    LaurentPoly den = LaurentPoly::monomial(Rational(1), 1) *
                      LaurentPoly{{2, Rational(2)}, {0, Rational(1)}};
    RationalFunction other(x2p1, den);
    CHECK_FALSE(inv_x.equals(other));

    RationalFunction z1(LaurentPoly::zero(), LaurentPoly::constant(Rational(1)));
    RationalFunction z2(LaurentPoly::zero(), LaurentPoly{{2, Rational(1)}, {0, Rational(-4)}});
    CHECK(z1.equals(z2));

    CHECK_THROWS_AS(RationalFunction(x2p1, LaurentPoly::zero()), oresme::EvaluationError);
}

TEST_CASE("rational function equality is an equivalence relation") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly num = random_poly(rng);
        LaurentPoly den = random_poly(rng);
        if (den.is_zero()) {
            den = LaurentPoly::constant(Rational(1));
        }
        LaurentPoly scale1 = random_poly(rng);
        if (scale1.is_zero()) {
            scale1 = LaurentPoly::monomial(Rational(2), -1);
        }
        LaurentPoly scale2{{1, Rational(1)}, {0, Rational(1)}};

        RationalFunction a(num, den);
        RationalFunction b(num * scale1, den * scale1);
        RationalFunction c(num * scale2, den * scale2);
        CHECK(a.equals(a));
        CHECK(b.equals(a));
        CHECK(a.equals(b));
        CHECK(b.equals(c));
        CHECK(a.equals(c)); // transitivity across the chain
    }
}

TEST_CASE("monomial denominators fold into the numerator") {
    LaurentPoly num{{2, Rational(1)}, {0, Rational(-1)}};
    RationalFunction f(num, LaurentPoly::monomial(Rational(2), 3));
    CHECK(f.den() == LaurentPoly::constant(Rational(1)));
    CHECK(f.num() == LaurentPoly{{-1, Rational(1, 2)}, {-3, Rational(-1, 2)}});
}

TEST_CASE("2x2 matrices over polynomials") {
    Mat2 m = oresme::companion_matrix();
    CHECK(oresme::mat_mul(m, Mat2::identity()) == m);

    Mat2 m2 = oresme::mat_mul(m, m);
    CHECK(m2.e11 == LaurentPoly{{0, Rational(1)}, {-2, Rational(-1)}});
    CHECK(m2.e12 == LaurentPoly::monomial(Rational(-1), -2));
    CHECK(m2.e21 == LaurentPoly::constant(Rational(1)));
    CHECK(m2.e22 == LaurentPoly::monomial(Rational(-1), -2));

    CHECK(oresme::mat_pow(m, 0) == Mat2::identity());
    CHECK(oresme::mat_pow(m, 2) == m2);
    CHECK(oresme::mat_pow(m, 7).det() == LaurentPoly::monomial(Rational(1), -14));

    // det multiplicativity on random matrices
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        Mat2 a{random_poly(rng), random_poly(rng), random_poly(rng), random_poly(rng)};
        Mat2 b{random_poly(rng), random_poly(rng), random_poly(rng), random_poly(rng)};
        CHECK(oresme::mat_mul(a, b).det() == a.det() * b.det());
    }

    // power addition law
    for (std::uint64_t a = 0; a <= 16; a += 3) {
        for (std::uint64_t b = 0; b <= 16; b += 5) {
            CHECK(oresme::mat_pow(m, a + b) ==
                  oresme::mat_mul(oresme::mat_pow(m, a), oresme::mat_pow(m, b)));
        }
    }
}
