#include <doctest.h>

#include <cmath>

#include "oresme/analytic.hpp"
#include "oresme/sequences.hpp"

using oresme::ConvergenceTrace;
using oresme::Rational;
using oresme::RootPair;
using oresme::TraceVerdict;

TEST_CASE("characteristic roots") {
    RootPair r = oresme::lambda_roots(3.0);
    CHECK(std::abs(r.lambda1 - 0.8726779962) < 1e-9);
    CHECK(std::abs(r.lambda2 - 0.1273220038) < 1e-9);
    CHECK(std::abs(r.lambda1 * r.lambda2 - 1.0 / 9.0) / (1.0 / 9.0) < 1e-12);
    CHECK(std::abs(r.lambda1 + r.lambda2 - 1.0) < 1e-12);

    RootPair big = oresme::lambda_roots(1000.0);
    CHECK(big.lambda1 > 0.999998);
    CHECK(big.lambda1 < 1.0);
    CHECK(big.lambda2 > 0.0);
    CHECK(big.lambda2 < 2e-6);

    RootPair neg = oresme::lambda_roots(-3.0);
    CHECK(neg.lambda1 >= neg.lambda2);
    CHECK(std::abs(neg.lambda1 * neg.lambda2 - 1.0 / 9.0) / (1.0 / 9.0) < 1e-12);
    CHECK(std::abs(neg.lambda1 + neg.lambda2 - 1.0) < 1e-12);

    CHECK_THROWS_AS(oresme::lambda_roots(2.0), oresme::DomainError);
    CHECK_THROWS_AS(oresme::lambda_roots(-2.0), oresme::DomainError);
    CHECK_THROWS_AS(oresme::lambda_roots(0.5), oresme::DomainError);
}

TEST_CASE("Binet evaluation in binary64") {
    CHECK(std::abs(oresme::binet_float(4, 3.0) - 7.0 / 27.0) / (7.0 / 27.0) < 1e-12);
    CHECK(oresme::binet_float(0, 5.0) == 0.0);

    // n = 5, x = 3 written out from the closed form
    double sqrt5 = std::sqrt(5.0);
    double expected = (std::pow((3 + sqrt5) / 2, 5) - std::pow((3 - sqrt5) / 2, 5)) /
                      (std::pow(3.0, 5) * sqrt5);
    CHECK(std::abs(oresme::binet_float(5, 3.0) - expected) < 1e-15);

    // negative x uses the plus-branch root, not the sorted pair
    CHECK(std::abs(oresme::binet_float(1, -3.0) - (-1.0 / 3.0)) < 1e-15);
    CHECK_THROWS_AS(oresme::binet_float(3, 1.0), oresme::DomainError);
}

TEST_CASE("hyperbolic form agrees with Binet") {
    CHECK(std::abs(oresme::hyperbolic_eval(1, 3.0) - 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(oresme::hyperbolic_eval(4, 3.0) - 7.0 / 27.0) / (7.0 / 27.0) < 1e-9);
    CHECK(std::abs(oresme::hyperbolic_eval(10, 5.0) - oresme::binet_float(10, 5.0)) /
              std::abs(oresme::binet_float(10, 5.0)) <
          1e-9);
    CHECK_THROWS_AS(oresme::hyperbolic_eval(3, 2.0), oresme::DomainError);
    CHECK_THROWS_AS(oresme::hyperbolic_eval(0, 3.0), std::invalid_argument);
}

TEST_CASE("float formulas track the exact values on the test grid") {
    const std::pair<Rational, double> grid[] = {
        {Rational(5, 2), 2.5}, {Rational(3), 3.0}, {Rational(4), 4.0}, {Rational(10), 10.0}};
    for (const auto& [xr, xd] : grid) {
        for (std::int64_t n = 1; n <= 60; ++n) {
            double exact = oresme::oresme_eval(n, xr).to_double();
            double binet = oresme::binet_float(n, xd);
            double hyper = oresme::hyperbolic_eval(n, xd);
            CHECK(std::abs(binet - exact) / std::abs(exact) < 1e-9);
            CHECK(std::abs(hyper - exact) / std::abs(exact) < 1e-9);
            CHECK(std::abs(hyper - binet) / std::abs(binet) < 1e-9);
        }
    }
}

TEST_CASE("exact ratio probe converges for x = 3") {
    ConvergenceTrace t = oresme::ratio_limit_probe(Rational(3), 60);
    CHECK(t.verdict == TraceVerdict::converged);
    CHECK_FALSE(t.flagged);
    REQUIRE(t.steps.size() == 60);

    for (const auto& s : t.steps) {
        if (s.n >= 40) {
            CHECK(s.error < 1e-12);
        }
    }
    CHECK(t.steps.back().error < 1e-40); // far below binary64 cancellation

    // burn-in index marks the non-increasing tail
    CHECK(t.burn_in >= 1);
    bool tail = false;
    double prev = 0;
    for (const auto& s : t.steps) {
        if (s.n == t.burn_in) {
            tail = true;
            prev = s.error;
            continue;
        }
        if (tail) {
            CHECK(s.error <= prev);
            prev = s.error;
        }
    }
}

TEST_CASE("error envelope 2C (lambda2/lambda1)^n from the fit at n = 10") {
    ConvergenceTrace t = oresme::ratio_limit_probe(Rational(3), 50);
    RootPair roots = oresme::lambda_roots(3.0);
    double rho = roots.lambda2 / roots.lambda1;
    double c = 0;
    for (const auto& s : t.steps) {
        if (s.n == 10) {
            c = s.error / std::pow(rho, 10);
        }
    }
    REQUIRE(c > 0);
    for (const auto& s : t.steps) {
        if (s.n >= 10 && s.n <= 50) {
            CHECK(s.error <= 2 * c * std::pow(rho, static_cast<double>(s.n)));
        }
    }
}

TEST_CASE("boundary points are degenerate with the observed limit 1/2") {
    for (long long sgn : {1, -1}) {
        ConvergenceTrace t = oresme::ratio_limit_probe(Rational(2 * sgn), 100);
        CHECK(t.verdict == TraceVerdict::degenerate);
        CHECK(std::abs(t.observed_limit - 0.5) < 0.01);
        CHECK(t.flagged); // measured 1/2, claimed 1
        CHECK_FALSE(t.note.empty());
    }
}

TEST_CASE("interior points oscillate") {
    ConvergenceTrace t = oresme::ratio_limit_probe(Rational(1), 200);
    CHECK(t.verdict == TraceVerdict::oscillating);
    // O_3(1) = 0, so some ratios are undefined
    bool has_nan = false;
    for (const auto& s : t.steps) {
        has_nan = has_nan || std::isnan(s.ratio);
    }
    CHECK(has_nan);

    ConvergenceTrace half = oresme::ratio_limit_probe(Rational(1, 2), 120);
    CHECK(half.verdict == TraceVerdict::oscillating);
}

TEST_CASE("probe rejects x = 0 and silly step counts") {
    CHECK_THROWS_AS(oresme::ratio_limit_probe(Rational(0), 10), oresme::ZeroPointError);
    CHECK_THROWS_AS(oresme::ratio_limit_probe(Rational(3), 0), std::invalid_argument);
}

TEST_CASE("float-recurrence probe mirrors the exact one") {
    ConvergenceTrace t = oresme::ratio_limit_probe(3.0, 60);
    CHECK(t.verdict == TraceVerdict::converged);
    CHECK(t.steps.back().error < 1e-12);
    ConvergenceTrace osc = oresme::ratio_limit_probe(1.25, 200);
    CHECK(osc.verdict == TraceVerdict::oscillating);
    CHECK_THROWS_AS(oresme::ratio_limit_probe(0.0, 10), oresme::ZeroPointError);
}

TEST_CASE("cosine roots of x^n O_n") {
    auto r4 = oresme::product_roots(4);
    REQUIRE(r4.size() == 3);
    CHECK(std::abs(r4[0] + std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(r4[1]) < 1e-15);
    CHECK(std::abs(r4[2] - std::sqrt(2.0)) < 1e-15);

    CHECK(oresme::product_roots(1).empty());
    auto r2 = oresme::product_roots(2);
    REQUIRE(r2.size() == 1);
    CHECK(std::abs(r2[0]) < 1e-15);
    CHECK_THROWS_AS(oresme::product_roots(0), std::invalid_argument);
}

TEST_CASE("product reconstruction against exact coefficients") {
    auto rep4 = oresme::product_reconstruct(4, 1e-12);
    CHECK(rep4.pass);
    REQUIRE(rep4.exact.size() == 4);
    // x^3 - 2x
    CHECK(rep4.exact[0] == 0);
    CHECK(rep4.exact[1] == -2);
    CHECK(rep4.exact[2] == 0);
    CHECK(rep4.exact[3] == 1);

    auto rep1 = oresme::product_reconstruct(1, 1e-12);
    CHECK(rep1.pass);
    REQUIRE(rep1.reconstructed.size() == 1);
    CHECK(rep1.reconstructed[0] == 1.0);
    CHECK(rep1.exact[0] == 1);

    for (std::int64_t n = 1; n <= 24; ++n) {
        auto rep = oresme::product_reconstruct(n, 1e-8);
        CAPTURE(n);
        CHECK(rep.pass);
    }
}
