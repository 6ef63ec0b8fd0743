#include <doctest.h>

#include "oresme/identities.hpp"
#include "oresme/json_io.hpp"
#include "oresme/sequences.hpp"

using oresme::Expected;
using oresme::IdentityCatalog;
using oresme::IdentityReport;
using oresme::LaurentPoly;
using oresme::Rational;
using oresme::RationalFunction;
using oresme::Sweep;
using oresme::Verdict;

namespace {

const IdentityCatalog& catalog() { return IdentityCatalog::instance(); }

RationalFunction rf(std::initializer_list<std::pair<oresme::Exponent, long long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) {
        p += LaurentPoly::monomial(Rational(c), e);
    }
    return RationalFunction(p);
}

} // namespace

TEST_CASE("catalog lists every identity once, sorted") {
    auto ids = catalog().ids();
    CHECK(ids.size() == 21);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    for (const char* id :
         {"CASSINI", "THREE_TERM", "ADD", "GB1", "COR", "SUM", "ALT_SUM", "ODD_SUM_T",
          "ODD_SUM_C", "G1", "N2", "G2", "G3_T", "G3_C", "REMARK_COMBINED", "BN_T", "BN_C",
          "BN1_T", "BN1_C", "MAT_ENTRY", "DET"}) {
        CHECK_NOTHROW(catalog().entry(id));
    }
    CHECK_THROWS_AS(catalog().entry("NOPE"), oresme::UnknownIdentityError);
}

TEST_CASE("Cassini at n = 2: both sides are -x^-4") {
    IdentityReport r = catalog().check_identity("CASSINI", Sweep::single("n", 2, 2));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.checked == 1);

    auto sv = catalog().entry("CASSINI").check({2});
    CHECK(sv.equal);
    CHECK(sv.lhs.equals(rf({{-4, -1}})));
    CHECK(sv.rhs.equals(rf({{-4, -1}})));
}

TEST_CASE("G3 as transcribed fails at n = 2 with the expected witness") {
    IdentityReport r = catalog().check_identity("G3_T", Sweep::single("n", 2, 2));
    CHECK(r.verdict == Verdict::fails);
    CHECK(r.unexpected == false);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].params == std::vector<std::pair<std::string, std::int64_t>>{{"n", 2}});
    CHECK(r.witnesses[0].lhs.equals(rf({{-1, -3}, {-3, 4}}))); // (4 - 3x^2)/x^3
    CHECK(r.witnesses[0].rhs.equals(rf({{-1, -1}, {-3, 4}}))); // (4 - x^2)/x^3
}

TEST_CASE("odd-index sum as transcribed fails already at n = 0") {
    IdentityReport r = catalog().check_identity("ODD_SUM_T", Sweep::single("n", 0, 0));
    CHECK(r.verdict == Verdict::fails);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].lhs.equals(rf({{-1, 1}})));
    // (x^2+1)/(x(2x^2+1))
    LaurentPoly num{{2, Rational(1)}, {0, Rational(1)}};
    LaurentPoly den = LaurentPoly::monomial(Rational(1), 1) *
                      LaurentPoly{{2, Rational(2)}, {0, Rational(1)}};
    CHECK(r.witnesses[0].rhs.equals(RationalFunction(num, den)));
}

TEST_CASE("addition formula at n = 2, m = 1") {
    Sweep sweep;
    sweep.add("n", 2, 2).add("m", 1, 1);
    IdentityReport r = catalog().check_identity("ADD", sweep);
    CHECK(r.verdict == Verdict::holds);
    auto sv = catalog().entry("ADD").check({2, 1});
    CHECK(sv.lhs.equals(rf({{-1, 1}, {-3, -1}})));
    CHECK(sv.rhs.equals(rf({{-1, 1}, {-3, -1}})));
}

TEST_CASE("quick catalog run matches every expectation") {
    auto reports = catalog().run_catalog(oresme::SweepProfile::quick);
    CHECK(reports.size() == 21);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        CHECK(reports[i - 1].id < reports[i].id);
    }
    for (const auto& r : reports) {
        CAPTURE(r.id);
        CHECK_FALSE(r.unexpected);
        CHECK_FALSE(r.vacuous);
        CHECK(r.checked > 0);
        if (r.expected == Expected::fails_as_transcribed) {
            CHECK(r.verdict == Verdict::fails);
            CHECK(r.failures > 0);
            CHECK(r.witnesses.size() > 0);
            CHECK(r.witnesses.size() <= oresme::kWitnessCap);
        } else {
            CHECK(r.verdict == Verdict::holds);
            CHECK(r.failures == 0);
            CHECK(r.witnesses.empty());
        }
    }
}

TEST_CASE("degenerate ranges are vacuous holds; expectation mismatch is flagged") {
    IdentityReport r = catalog().check_identity("CASSINI", Sweep::single("n", 5, 1));
    CHECK(r.vacuous);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.checked == 0);
    CHECK_FALSE(r.unexpected);

    IdentityReport t = catalog().check_identity("ODD_SUM_T", Sweep::single("n", 5, 1));
    CHECK(t.vacuous);
    CHECK(t.unexpected); // vacuous holds contradicts the expected failure
}

TEST_CASE("invalid sweeps are rejected") {
    CHECK_THROWS_AS(catalog().check_identity("CASSINI", Sweep::single("n", 0, 5)),
                    oresme::InvalidSweepError);
    CHECK_THROWS_AS(catalog().check_identity("CASSINI", Sweep::single("m", 1, 5)),
                    oresme::InvalidSweepError);
    Sweep cor;
    cor.add("n", 5, 5).add("m", 1, 1); // constraint m >= n empties the sweep
    CHECK_THROWS_AS(catalog().check_identity("COR", cor), oresme::InvalidSweepError);
    Sweep wrong_arity = Sweep::single("n", 1, 5);
    CHECK_THROWS_AS(catalog().check_identity("ADD", wrong_arity), oresme::InvalidSweepError);
}

TEST_CASE("GB1 specializes to COR") {
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t m = n + 1; m <= 12; ++m) {
            auto gb = catalog().entry("GB1").check({n + 1, m, n, m + 1, n - 1});
            auto cor = catalog().entry("COR").check({n, m});
            CHECK(gb.equal);
            CHECK(cor.equal);
            CHECK(gb.lhs.equals(cor.lhs));
            CHECK(gb.rhs.equals(cor.rhs));
        }
    }
}

TEST_CASE("N2 and G2 right-hand sides agree") {
    for (std::int64_t n = 2; n <= 60; ++n) {
        auto n2 = catalog().entry("N2").check({n});
        auto g2 = catalog().entry("G2").check({n});
        CHECK(n2.rhs.equals(g2.rhs));
    }
}

TEST_CASE("witness values re-verify against the builders") {
    IdentityReport r = catalog().check_identity("G3_T", Sweep::single("n", 1, 10));
    CHECK(r.failures == 10);
    for (const auto& w : r.witnesses) {
        auto sv = catalog().entry("G3_T").check({w.params[0].second});
        CHECK_FALSE(sv.equal);
        CHECK(sv.lhs.num() == w.lhs.num());
        CHECK(sv.lhs.den() == w.lhs.den());
        CHECK(sv.rhs.num() == w.rhs.num());
        CHECK(sv.rhs.den() == w.rhs.den());
    }
}

TEST_CASE("numeric checks at rational points") {
    IdentityReport cassini = catalog().numeric_check("CASSINI", Rational(2),
                                                     Sweep::single("n", 3, 3));
    CHECK(cassini.verdict == Verdict::holds);

    IdentityReport sum = catalog().numeric_check("SUM", Rational(3), Sweep::single("n", 4, 4));
    CHECK(sum.verdict == Verdict::holds);

    // hand value: O_4(2) O_2(2) - O_3(2)^2 = -1/64
    auto sv = catalog().entry("CASSINI").check({3});
    CHECK(sv.lhs.eval_exact(Rational(2)) == Rational(-1, 64));
    CHECK(sv.rhs.eval_exact(Rational(2)) == Rational(-1, 64));

    CHECK_THROWS_AS(catalog().numeric_check("CASSINI", Rational(0), Sweep::single("n", 1, 3)),
                    oresme::ZeroPointError);
    // the derivative identity has x^2 - 4 in the denominator
    CHECK_THROWS_AS(catalog().numeric_check("G1", Rational(2), Sweep::single("n", 2, 2)),
                    oresme::ZeroPointError);
}

TEST_CASE("float Binet tracks the exact recurrence at rational points") {
    IdentityReport r = catalog().numeric_check("BINET1", Rational(3), Sweep::single("n", 0, 60));
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.checked == 61);
    CHECK_THROWS_AS(catalog().numeric_check("BINET1", Rational(2), Sweep::single("n", 0, 5)),
                    oresme::DomainError);
    CHECK_THROWS_AS(catalog().numeric_check("BINET1", Rational(0), Sweep::single("n", 0, 5)),
                    oresme::ZeroPointError);
}

TEST_CASE("reports are deterministic across worker counts") {
    auto one = catalog().run_catalog(oresme::SweepProfile::quick, 1);
    auto four = catalog().run_catalog(oresme::SweepProfile::quick, 4);
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(oresme::json_of(one[i]).dump() == oresme::json_of(four[i]).dump());
    }
}
