#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oresme/rational_function.hpp"

namespace oresme {

enum class Expected { holds, fails_as_transcribed };
enum class Verdict { holds, fails };
enum class SweepProfile { quick, full };

/// Inclusive integer ranges, one per named parameter, enumerated in
/// lexicographic order with the first parameter outermost.
struct Sweep {
    std::vector<std::tuple<std::string, std::int64_t, std::int64_t>> ranges;

    static Sweep single(const std::string& name, std::int64_t lo, std::int64_t hi) {
        Sweep s;
        s.ranges.emplace_back(name, lo, hi);
        return s;
    }
    Sweep& add(const std::string& name, std::int64_t lo, std::int64_t hi) {
        ranges.emplace_back(name, lo, hi);
        return *this;
    }
    std::string describe(const std::string& constraint_desc = "") const;
};

struct Witness {
    std::vector<std::pair<std::string, std::int64_t>> params;
    RationalFunction lhs;
    RationalFunction rhs;
};

struct IdentityReport {
    std::string id;
    std::string sweep;
    Verdict verdict = Verdict::holds;
    Expected expected = Expected::holds;
    bool unexpected = false;
    bool vacuous = false;
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    std::vector<Witness> witnesses; // first failures in lexicographic order, capped
};

constexpr std::size_t kWitnessCap = 10;

/// Both sides of one instantiated identity plus the comparison outcome.
struct SideValues {
    bool equal = false;
    RationalFunction lhs;
    RationalFunction rhs;
};

struct IdentityEntry {
    std::string id;
    std::string description;
    Expected expected = Expected::holds;
    std::vector<std::string> params;
    /// Hard per-parameter lower bounds (INT64_MIN when unconstrained).
    std::vector<std::int64_t> min_value;
    Sweep quick;
    Sweep full;
    std::function<bool(const std::vector<std::int64_t>&)> constraint; // may be empty
    std::string constraint_desc;
    std::function<SideValues(const std::vector<std::int64_t>&)> check;
};

/// Registry of every cataloged identity, checkable exactly over sweeps.
class IdentityCatalog {
public:
    static const IdentityCatalog& instance();

    std::vector<std::string> ids() const; // sorted
    const IdentityEntry& entry(const std::string& id) const; // UnknownIdentityError

    /// Checks one identity over a sweep. Throws InvalidSweepError when the
    /// sweep names the wrong parameters, dips below a hard bound, or is
    /// emptied by the entry constraint despite nonempty ranges. A sweep with
    /// an empty range yields a vacuous holds report.
    IdentityReport check_identity(const std::string& id, const Sweep& sweep,
                                  int workers = 1) const;

    /// Runs every entry over its profile sweep; reports sorted by id.
    std::vector<IdentityReport> run_catalog(SweepProfile profile, int workers = 1) const;

    /// Checks one identity with x fixed at a rational point k (exact), or,
    /// for id "BINET1", compares the float Binet value against the exact
    /// recurrence within 1e-9 relative.
    IdentityReport numeric_check(const std::string& id, const Rational& k,
                                 const Sweep& sweep) const;

private:
    IdentityCatalog();
    std::vector<IdentityEntry> m_entries; // sorted by id
};

const char* expected_name(Expected e);
const char* verdict_name(Verdict v);

} // namespace oresme
