#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oresme/laurent.hpp"
#include "oresme/mat2.hpp"
#include "oresme/rational_function.hpp"

namespace oresme {

/// O_n(x) for n >= 0 from the recurrence O_0 = 0, O_1 = 1/x,
/// O_{k+1} = O_k - x^-2 * O_{k-1}. Results are memoized; the reference stays
/// valid for the life of the process and the cached values are immutable.
const LaurentPoly& oresme_poly(std::int64_t n);

/// Closed form for n >= 1: sum over j of (-1)^j C(n-j-1, j) x^(-2j-1).
LaurentPoly oresme_poly_closed(std::int64_t n);

/// O_n(x) for n >= 1 read off the n-th power of the companion matrix
/// (entry e21 equals x * O_n).
LaurentPoly oresme_by_matrix(std::int64_t n);

/// Backward extension O_{-n} = -x^(2n) * O_n for n >= 1.
LaurentPoly oresme_neg_index(std::int64_t n);

/// O_n for any integer index, negative ones via the backward extension.
LaurentPoly oresme_poly_any(std::int64_t n);

/// d/dx O_n(x) for n >= 0, memoized like oresme_poly.
const LaurentPoly& oresme_derivative_poly(std::int64_t n);

/// Derivative at any integer index.
LaurentPoly oresme_derivative_any(std::int64_t n);

/// Exact value O_n(k) for any integer n and rational k != 0. This equals the
/// k-Oresme number A_n^(k) when k is a positive integer.
Rational oresme_eval(std::int64_t n, const Rational& k);

/// F_0 = 0, F_1 = 1, F_{k+1} = F_k + F_{k-1}.
BigInt fibonacci(std::int64_t n);

enum class SumKind { plain, alternating, odd_index };

/// Direct summation (no closed form): plain = sum of O_0..O_n, alternating =
/// sum of (-1)^j O_j, odd_index = sum of O_1, O_3, ..., O_{2n+1}.
RationalFunction prefix_sums(std::int64_t n, SumKind kind);

enum class Provenance { recurrence, closed, matrix };

struct SequenceTable {
    struct Row {
        std::int64_t index;
        LaurentPoly poly;
    };
    std::vector<Row> entries; // indices strictly increasing
    Provenance provenance = Provenance::recurrence;
    bool derivative = false;
};

/// Rows for O_n (or O_n') over an inclusive index range; negative indices use
/// the backward extension.
SequenceTable make_table(std::int64_t from, std::int64_t to, bool derivative,
                         Provenance provenance = Provenance::recurrence);

/// Exact evaluation strategies, used by the eval/bench commands. All three
/// agree exactly; they reach the value by independent routes.
Rational eval_recurrence(std::int64_t n, const Rational& x); // integer-scaled three-term recurrence
Rational eval_matrix(std::int64_t n, const Rational& x);     // 2x2 rational matrix power
Rational eval_closed(std::int64_t n, const Rational& x);     // binomial closed-form sum

const char* provenance_name(Provenance p);
const char* sum_kind_name(SumKind k);

} // namespace oresme
