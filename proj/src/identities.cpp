#include "oresme/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "oresme/analytic.hpp"
#include "oresme/mat2.hpp"
#include "oresme/parallel.hpp"
#include "oresme/sequences.hpp"

namespace oresme {

namespace {

using Params = std::vector<std::int64_t>;

RationalFunction O(std::int64_t i) { return RationalFunction(oresme_poly_any(i)); }
RationalFunction dO(std::int64_t i) { return RationalFunction(oresme_derivative_any(i)); }
RationalFunction mono(long long c, Exponent e) {
    return RationalFunction(LaurentPoly::monomial(Rational(c), e));
}

SideValues sides(RationalFunction lhs, RationalFunction rhs) {
    SideValues sv;
    sv.equal = lhs.equals(rhs);
    sv.lhs = std::move(lhs);
    sv.rhs = std::move(rhs);
    return sv;
}

// Pairwise products O_i * O_j come up hundreds of thousands of times in the
// bilinear sweeps; cache them by sorted index pair.
class ProductCache {
public:
    LaurentPoly get(std::int64_t i, std::int64_t j) const {
        if (i > j) {
            std::swap(i, j);
        }
        const auto key = std::make_pair(i, j);
        {
            std::shared_lock lock(m_mutex);
            auto it = m_cache.find(key);
            if (it != m_cache.end()) {
                return it->second;
            }
        }
        LaurentPoly value = oresme_poly_any(i) * oresme_poly_any(j);
        std::unique_lock lock(m_mutex);
        return m_cache.try_emplace(key, std::move(value)).first->second;
    }

private:
    mutable std::shared_mutex m_mutex;
    mutable std::map<std::pair<std::int64_t, std::int64_t>, LaurentPoly> m_cache;
};

const ProductCache& product_cache() {
    static ProductCache cache;
    return cache;
}

LaurentPoly convolution_sum(std::int64_t n) {
    // sum_{j=1}^{n-1} O_j O_{n-j}
    LaurentPoly acc;
    for (std::int64_t j = 1; j <= n - 1; ++j) {
        acc += product_cache().get(j, n - j);
    }
    return acc;
}

LaurentPoly colinear_lhs(std::int64_t n) {
    // O_n' + (n/x) O_n, shared by the convolved identities
    return oresme_derivative_any(n) + oresme_poly_any(n).shifted(-1, Rational(n));
}

// x^3 (x^2 - 4) and friends used by the derivative identities.
LaurentPoly derivative_denominator() {
    return LaurentPoly{{5, Rational(1)}, {3, Rational(-4)}};
}

LaurentPoly two_x2_plus_1() {
    return LaurentPoly{{2, Rational(2)}, {0, Rational(1)}};
}

std::int64_t alternating_sign(std::int64_t e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

std::string Sweep::describe(const std::string& constraint_desc) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, lo, hi] : ranges) {
        if (!first) {
            os << ", ";
        }
        os << name << "=" << lo << ".." << hi;
        first = false;
    }
    if (!constraint_desc.empty()) {
        os << " (" << constraint_desc << ")";
    }
    return os.str();
}

const char* expected_name(Expected e) {
    return e == Expected::holds ? "holds" : "fails_as_transcribed";
}

const char* verdict_name(Verdict v) {
    return v == Verdict::holds ? "holds" : "fails";
}

IdentityCatalog::IdentityCatalog() {
    auto add = [this](IdentityEntry entry) { m_entries.push_back(std::move(entry)); };

    auto single = [](std::string id, std::string description, Expected expected,
                     std::int64_t min_n, std::function<SideValues(std::int64_t)> check) {
        IdentityEntry e;
        e.id = std::move(id);
        e.description = std::move(description);
        e.expected = expected;
        e.params = {"n"};
        e.min_value = {min_n};
        e.quick = Sweep::single("n", min_n, 20);
        e.full = Sweep::single("n", min_n, 100);
        e.check = [check = std::move(check)](const Params& p) { return check(p[0]); };
        return e;
    };

    add(single("CASSINI", "Cassini determinant identity", Expected::holds, 1,
               [](std::int64_t n) {
                   return sides(O(n + 1) * O(n - 1) - O(n) * O(n), mono(-1, -2 * n));
               }));

    add(single("THREE_TERM", "second-order recurrence folded to step two", Expected::holds, 1,
               [](std::int64_t n) {
                   LaurentPoly coeff{{0, Rational(1)}, {-2, Rational(-1)}}; // (x^2-1)/x^2
                   return sides(O(n + 2),
                                RationalFunction(coeff) * O(n + 1) - mono(1, -4) * O(n - 1));
               }));

    {
        IdentityEntry e;
        e.id = "ADD";
        e.description = "index addition via companion-matrix entries";
        e.expected = Expected::holds;
        e.params = {"n", "m"};
        e.min_value = {INT64_MIN, INT64_MIN};
        e.quick = Sweep::single("n", -8, 8).add("m", -8, 8);
        e.full = Sweep::single("n", -12, 12).add("m", -12, 12);
        e.check = [](const Params& p) {
            const std::int64_t n = p[0], m = p[1];
            return sides(O(n + m),
                         mono(1, 1) * O(n) * O(m + 1) - mono(1, -1) * O(n - 1) * O(m));
        };
        add(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "GB1";
        e.description = "general bilinear index reduction";
        e.expected = Expected::holds;
        e.params = {"a", "b", "c", "d", "t"};
        e.min_value = {INT64_MIN, INT64_MIN, INT64_MIN, INT64_MIN, INT64_MIN};
        for (const char* name : {"a", "b", "c", "d", "t"}) {
            e.quick.add(name, -8, 8);
            e.full.add(name, -12, 12);
        }
        e.constraint = [](const Params& p) { return p[0] + p[1] == p[2] + p[3]; };
        e.constraint_desc = "a+b = c+d";
        e.check = [](const Params& p) {
            const std::int64_t a = p[0], b = p[1], c = p[2], d = p[3], t = p[4];
            const auto& cache = product_cache();
            LaurentPoly lhs = cache.get(a, b) - cache.get(c, d);
            LaurentPoly rhs =
                (cache.get(a - t, b - t) - cache.get(c - t, d - t)).shifted(-2 * t);
            return sides(RationalFunction(std::move(lhs)), RationalFunction(std::move(rhs)));
        };
        add(std::move(e));
    }

    {
        IdentityEntry e;
        e.id = "COR";
        e.description = "cross-product difference reduced to a single term";
        e.expected = Expected::holds;
        e.params = {"n", "m"};
        e.min_value = {INT64_MIN, INT64_MIN};
        e.quick = Sweep::single("n", -8, 8).add("m", -8, 8);
        e.full = Sweep::single("n", -12, 12).add("m", -12, 12);
        e.constraint = [](const Params& p) { return p[1] >= p[0]; };
        e.constraint_desc = "m >= n";
        e.check = [](const Params& p) {
            const std::int64_t n = p[0], m = p[1];
            return sides(O(n + 1) * O(m) - O(n) * O(m + 1), mono(1, -2 * n - 1) * O(m - n));
        };
        add(std::move(e));
    }

    add(single("SUM", "prefix sum closed form", Expected::holds, 0, [](std::int64_t n) {
        return sides(prefix_sums(n, SumKind::plain),
                     mono(1, 2) * (mono(1, -1) - O(n + 2)));
    }));

    add(single("ALT_SUM", "alternating prefix sum closed form", Expected::holds, 0,
               [](std::int64_t n) {
                   RationalFunction factor(LaurentPoly::monomial(Rational(1), 2),
                                           two_x2_plus_1());
                   LaurentPoly tail =
                       (oresme_poly_any(n + 2) - oresme_poly_any(n + 1).scaled(Rational(2)))
                           .scaled(Rational(alternating_sign(n + 1)));
                   return sides(prefix_sums(n, SumKind::alternating),
                                factor * (mono(-1, -1) + RationalFunction(std::move(tail))));
               }));

    add(single("ODD_SUM_T",
               "odd-index prefix sum, closed form as transcribed (known discrepancy)",
               Expected::fails_as_transcribed, 0, [](std::int64_t n) {
                   RationalFunction factor(LaurentPoly::monomial(Rational(1), 2),
                                           two_x2_plus_1());
                   // (x^2+1)/x and (x^2+1)/x^2
                   LaurentPoly a{{1, Rational(1)}, {-1, Rational(1)}};
                   LaurentPoly b{{0, Rational(1)}, {-2, Rational(1)}};
                   LaurentPoly inner =
                       oresme_poly_any(2 * n + 1) - oresme_poly_any(2 * n + 2).shifted(2);
                   RationalFunction rhs =
                       factor * (RationalFunction(a) + RationalFunction(b) * RationalFunction(inner));
                   return sides(prefix_sums(n, SumKind::odd_index), rhs);
               }));

    add(single("ODD_SUM_C", "odd-index prefix sum, corrected closed form", Expected::holds, 0,
               [](std::int64_t n) {
                   LaurentPoly x2p1{{2, Rational(1)}, {0, Rational(1)}}; // x^2 + 1
                   LaurentPoly num = LaurentPoly{{3, Rational(1)}, {1, Rational(1)}} +
                                     x2p1 * oresme_poly_any(2 * n + 1) -
                                     oresme_poly_any(2 * n + 2).shifted(4);
                   return sides(prefix_sums(n, SumKind::odd_index),
                                RationalFunction(std::move(num), two_x2_plus_1()));
               }));

    add(single("G1", "derivative from neighbours two apart", Expected::holds, 2,
               [](std::int64_t n) {
                   LaurentPoly coeff{{2, Rational(2 * n)}, {4, Rational(-1)}}; // x^2(2n - x^2)
                   LaurentPoly num = coeff * oresme_poly_any(n) -
                                     oresme_poly_any(n - 2).scaled(Rational(2 * n));
                   return sides(dO(n),
                                RationalFunction(std::move(num), derivative_denominator()));
               }));

    add(single("N2", "derivative as a self-convolution", Expected::holds, 2,
               [](std::int64_t n) {
                   return sides(RationalFunction(colinear_lhs(n)),
                                RationalFunction(convolution_sum(n)));
               }));

    add(single("G2", "derivative as a weighted downward sum", Expected::holds, 2,
               [](std::int64_t n) {
                   LaurentPoly rhs;
                   for (std::int64_t j = 0; 2 * j <= n - 2; ++j) {
                       rhs += oresme_poly_any(n - 1 - 2 * j)
                                  .shifted(-(2 * j + 1), Rational(n - 1 - 2 * j));
                   }
                   return sides(RationalFunction(colinear_lhs(n)),
                                RationalFunction(std::move(rhs)));
               }));

    auto g3_rhs = [](std::int64_t n) {
        return RationalFunction(oresme_derivative_any(n + 1).shifted(1) -
                                oresme_derivative_any(n - 1).shifted(-1));
    };
    add(single("G3_T", "derivative cross phrase, as transcribed (known discrepancy)",
               Expected::fails_as_transcribed, 1, [g3_rhs](std::int64_t n) {
                   LaurentPoly lhs = oresme_poly_any(n).scaled(Rational(n - 1)) -
                                     oresme_poly_any(n + 1).scaled(Rational(2 * n));
                   return sides(RationalFunction(std::move(lhs)), g3_rhs(n));
               }));
    add(single("G3_C", "derivative cross phrase, corrected coefficient", Expected::holds, 1,
               [g3_rhs](std::int64_t n) {
                   LaurentPoly lhs = oresme_poly_any(n).scaled(Rational(2 * n - 1)) -
                                     oresme_poly_any(n + 1).scaled(Rational(2 * n));
                   return sides(RationalFunction(std::move(lhs)), g3_rhs(n));
               }));

    add(single("REMARK_COMBINED", "convolution written without the derivative",
               Expected::holds, 2, [](std::int64_t n) {
                   LaurentPoly coeff{{4, Rational(n - 1)}, {2, Rational(-2 * n)}};
                   LaurentPoly num = coeff * oresme_poly_any(n) -
                                     oresme_poly_any(n - 2).scaled(Rational(2 * n));
                   return sides(RationalFunction(std::move(num), derivative_denominator()),
                                RationalFunction(convolution_sum(n)));
               }));

    add(single("BN_T", "binomial closed form, exponents as transcribed (known discrepancy)",
               Expected::fails_as_transcribed, 1, [](std::int64_t n) {
                   LaurentPoly rhs;
                   for (std::int64_t j = 0; 2 * j <= n - 1; ++j) {
                       BigInt c = binomial(n - j - 1, j);
                       rhs += LaurentPoly::monomial(
                           Rational(alternating_sign(j)) * Rational(std::move(c)), -2 * j);
                   }
                   return sides(O(n), RationalFunction(std::move(rhs)));
               }));

    add(single("BN_C", "binomial closed form, corrected exponent", Expected::holds, 1,
               [](std::int64_t n) {
                   return sides(O(n), RationalFunction(oresme_poly_closed(n)));
               }));

    add(single("BN1_T",
               "derivative binomial closed form, as transcribed (known discrepancy)",
               Expected::fails_as_transcribed, 1, [](std::int64_t n) {
                   LaurentPoly rhs;
                   for (std::int64_t j = 0; 2 * j <= n - 2; ++j) {
                       Rational c = Rational(-alternating_sign(j)) * Rational(2 * j) *
                                    Rational(binomial(n - j - 1, j));
                       rhs += LaurentPoly::monomial(std::move(c), -2 * j - 1);
                   }
                   return sides(dO(n), RationalFunction(std::move(rhs)));
               }));

    add(single("BN1_C", "derivative binomial closed form, corrected", Expected::holds, 1,
               [](std::int64_t n) {
                   LaurentPoly rhs;
                   for (std::int64_t j = 0; 2 * j <= n - 1; ++j) {
                       Rational c = Rational(-alternating_sign(j)) * Rational(2 * j + 1) *
                                    Rational(binomial(n - j - 1, j));
                       rhs += LaurentPoly::monomial(std::move(c), -2 * j - 2);
                   }
                   return sides(dO(n), RationalFunction(std::move(rhs)));
               }));

    add(single("MAT_ENTRY", "companion-matrix power entries", Expected::holds, 1,
               [](std::int64_t n) {
                   Mat2 m = mat_pow(companion_matrix(), static_cast<std::uint64_t>(n));
                   Mat2 want{
                       oresme_poly_any(n + 1).shifted(1),
                       oresme_poly_any(n).shifted(-1, Rational(-1)),
                       oresme_poly_any(n).shifted(1),
                       oresme_poly_any(n - 1).shifted(-1, Rational(-1)),
                   };
                   const LaurentPoly* got[] = {&m.e11, &m.e12, &m.e21, &m.e22};
                   const LaurentPoly* expd[] = {&want.e11, &want.e12, &want.e21, &want.e22};
                   for (int i = 0; i < 4; ++i) {
                       if (*got[i] != *expd[i]) {
                           SideValues sv;
                           sv.equal = false;
                           sv.lhs = RationalFunction(*got[i]);
                           sv.rhs = RationalFunction(*expd[i]);
                           return sv;
                       }
                   }
                   SideValues sv;
                   sv.equal = true;
                   sv.lhs = RationalFunction(m.e11);
                   sv.rhs = RationalFunction(want.e11);
                   return sv;
               }));

    add(single("DET", "determinant of the companion-matrix power", Expected::holds, 1,
               [](std::int64_t n) {
                   Mat2 m = mat_pow(companion_matrix(), static_cast<std::uint64_t>(n));
                   return sides(RationalFunction(m.det()), mono(1, -2 * n));
               }));

    std::sort(m_entries.begin(), m_entries.end(),
              [](const IdentityEntry& a, const IdentityEntry& b) { return a.id < b.id; });
}

const IdentityCatalog& IdentityCatalog::instance() {
    static IdentityCatalog catalog;
    return catalog;
}

std::vector<std::string> IdentityCatalog::ids() const {
    std::vector<std::string> out;
    out.reserve(m_entries.size());
    for (const auto& e : m_entries) {
        out.push_back(e.id);
    }
    return out;
}

const IdentityEntry& IdentityCatalog::entry(const std::string& id) const {
    auto it = std::lower_bound(
        m_entries.begin(), m_entries.end(), id,
        [](const IdentityEntry& e, const std::string& key) { return e.id < key; });
    if (it == m_entries.end() || it->id != id) {
        throw UnknownIdentityError(id);
    }
    return *it;
}

namespace {

// Lexicographic enumeration of the Cartesian product, constraint applied
// before evaluation.
std::vector<Params> enumerate_assignments(const Sweep& sweep,
                                          const IdentityEntry& entry,
                                          bool& empty_range) {
    empty_range = false;
    for (const auto& [name, lo, hi] : sweep.ranges) {
        (void)name;
        if (lo > hi) {
            empty_range = true;
            return {};
        }
    }
    std::vector<Params> out;
    Params current(sweep.ranges.size());
    for (std::size_t i = 0; i < sweep.ranges.size(); ++i) {
        current[i] = std::get<1>(sweep.ranges[i]);
    }
    while (true) {
        if (!entry.constraint || entry.constraint(current)) {
            out.push_back(current);
        }
        std::size_t pos = sweep.ranges.size();
        while (pos > 0) {
            --pos;
            if (current[pos] < std::get<2>(sweep.ranges[pos])) {
                ++current[pos];
                for (std::size_t i = pos + 1; i < sweep.ranges.size(); ++i) {
                    current[i] = std::get<1>(sweep.ranges[i]);
                }
                break;
            }
            if (pos == 0) {
                return out;
            }
        }
    }
}

void validate_sweep(const IdentityEntry& entry, const Sweep& sweep) {
    if (sweep.ranges.size() != entry.params.size()) {
        throw InvalidSweepError("identity " + entry.id + " takes " +
                                std::to_string(entry.params.size()) + " parameter(s)");
    }
    for (std::size_t i = 0; i < entry.params.size(); ++i) {
        const auto& [name, lo, hi] = sweep.ranges[i];
        (void)hi;
        if (name != entry.params[i]) {
            throw InvalidSweepError("identity " + entry.id + " expects parameter '" +
                                    entry.params[i] + "', got '" + name + "'");
        }
        if (entry.min_value[i] != INT64_MIN && lo < entry.min_value[i]) {
            throw InvalidSweepError("identity " + entry.id + " requires " + name +
                                    " >= " + std::to_string(entry.min_value[i]));
        }
    }
}

} // namespace

IdentityReport IdentityCatalog::check_identity(const std::string& id, const Sweep& sweep,
                                               int workers) const {
    const IdentityEntry& e = entry(id);
    validate_sweep(e, sweep);

    IdentityReport report;
    report.id = e.id;
    report.sweep = sweep.describe(e.constraint_desc);
    report.expected = e.expected;

    bool empty_range = false;
    std::vector<Params> assignments = enumerate_assignments(sweep, e, empty_range);
    if (empty_range) {
        report.vacuous = true;
        report.verdict = Verdict::holds;
        report.unexpected = e.expected != Expected::holds;
        return report;
    }
    if (assignments.empty()) {
        throw InvalidSweepError("identity " + e.id + ": constraint '" + e.constraint_desc +
                                "' eliminates every assignment in " + report.sweep);
    }

    struct ChunkResult {
        std::int64_t failures = 0;
        std::vector<Witness> witnesses;
    };
    int nworkers = effective_workers(workers);
    std::vector<ChunkResult> chunks(static_cast<std::size_t>(nworkers) < assignments.size()
                                        ? static_cast<std::size_t>(nworkers)
                                        : assignments.size());
    parallel_chunks(assignments.size(), nworkers,
                    [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                        ChunkResult& cr = chunks[chunk];
                        for (std::size_t i = begin; i < end; ++i) {
                            SideValues sv = e.check(assignments[i]);
                            if (sv.equal) {
                                continue;
                            }
                            ++cr.failures;
                            if (cr.witnesses.size() < kWitnessCap) {
                                Witness w;
                                for (std::size_t p = 0; p < e.params.size(); ++p) {
                                    w.params.emplace_back(e.params[p], assignments[i][p]);
                                }
                                w.lhs = std::move(sv.lhs);
                                w.rhs = std::move(sv.rhs);
                                cr.witnesses.push_back(std::move(w));
                            }
                        }
                    });

    report.checked = static_cast<std::int64_t>(assignments.size());
    for (auto& cr : chunks) {
        report.failures += cr.failures;
        for (auto& w : cr.witnesses) {
            if (report.witnesses.size() < kWitnessCap) {
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.verdict = report.failures == 0 ? Verdict::holds : Verdict::fails;
    report.unexpected = (report.verdict == Verdict::holds) != (e.expected == Expected::holds);
    return report;
}

std::vector<IdentityReport> IdentityCatalog::run_catalog(SweepProfile profile,
                                                         int workers) const {
    std::vector<IdentityReport> reports;
    reports.reserve(m_entries.size());
    for (const auto& e : m_entries) {
        reports.push_back(
            check_identity(e.id, profile == SweepProfile::quick ? e.quick : e.full, workers));
    }
    return reports;
}

IdentityReport IdentityCatalog::numeric_check(const std::string& id, const Rational& k,
                                              const Sweep& sweep) const {
    if (k.is_zero()) {
        throw ZeroPointError("numeric check at x = 0");
    }
    IdentityReport report;
    report.sweep = sweep.describe();
    report.expected = Expected::holds;

    if (id == "BINET1") {
        if (k * k <= Rational(4)) {
            throw DomainError("Binet comparison requires k^2 > 4");
        }
        if (sweep.ranges.size() != 1) {
            throw InvalidSweepError("BINET1 takes a single parameter");
        }
        report.id = "BINET1";
        const double kd = k.to_double();
        const auto& [name, lo, hi] = sweep.ranges[0];
        (void)name;
        for (std::int64_t n = lo; n <= hi; ++n) {
            ++report.checked;
            Rational exact = oresme_eval(n, k);
            double approx = binet_float(n, kd);
            double reference = exact.to_double();
            double err = std::abs(approx - reference);
            bool ok = reference == 0.0 ? approx == 0.0 : err / std::abs(reference) < 1e-9;
            if (!ok) {
                ++report.failures;
                if (report.witnesses.size() < kWitnessCap) {
                    Witness w;
                    w.params.emplace_back("n", n);
                    w.lhs = RationalFunction::constant(exact);
                    w.rhs = RationalFunction::constant(Rational::from_double(approx));
                    report.witnesses.push_back(std::move(w));
                }
            }
        }
        report.verdict = report.failures == 0 ? Verdict::holds : Verdict::fails;
        report.unexpected = report.verdict != Verdict::holds;
        return report;
    }

    const IdentityEntry& e = entry(id);
    validate_sweep(e, sweep);
    report.id = e.id;
    report.expected = e.expected;
    report.sweep = sweep.describe(e.constraint_desc) + " at x=" + k.str();

    bool empty_range = false;
    std::vector<Params> assignments = enumerate_assignments(sweep, e, empty_range);
    if (empty_range) {
        report.vacuous = true;
        report.unexpected = e.expected != Expected::holds;
        return report;
    }
    if (assignments.empty()) {
        throw InvalidSweepError("identity " + e.id + ": constraint '" + e.constraint_desc +
                                "' eliminates every assignment");
    }
    for (const auto& asg : assignments) {
        SideValues sv = e.check(asg);
        ++report.checked;
        Rational lhs = sv.lhs.eval_exact(k);
        Rational rhs = sv.rhs.eval_exact(k);
        if (lhs != rhs) {
            ++report.failures;
            if (report.witnesses.size() < kWitnessCap) {
                Witness w;
                for (std::size_t p = 0; p < e.params.size(); ++p) {
                    w.params.emplace_back(e.params[p], asg[p]);
                }
                w.lhs = RationalFunction::constant(std::move(lhs));
                w.rhs = RationalFunction::constant(std::move(rhs));
                report.witnesses.push_back(std::move(w));
            }
        }
    }
    report.verdict = report.failures == 0 ? Verdict::holds : Verdict::fails;
    report.unexpected = (report.verdict == Verdict::holds) != (e.expected == Expected::holds);
    return report;
}

} // namespace oresme
