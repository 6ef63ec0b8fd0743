#pragma once

#include <json.hpp>

#include "oresme/analytic.hpp"
#include "oresme/identities.hpp"
#include "oresme/sequences.hpp"

namespace oresme {

/// Ordered JSON keeps insertion order, so identical inputs serialize to
/// byte-identical documents.
using Json = nlohmann::ordered_json;

/// "num/den", always with the denominator.
Json json_of(const Rational& r);

/// Array of [exponent, "num/den"] pairs sorted by descending exponent.
Json json_of(const LaurentPoly& p);

/// {"num": ..., "den": ...}
Json json_of(const RationalFunction& f);

Json json_of(const Witness& w);
Json json_of(const IdentityReport& r);
Json json_of(const SequenceTable& t);
Json json_of(const ConvergenceTrace& t);
Json json_of(const ReconstructionReport& r);

/// NaN-safe float cell: NaN becomes null.
Json json_float(double v);

} // namespace oresme
