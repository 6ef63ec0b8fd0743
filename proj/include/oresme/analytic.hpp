#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oresme/rational.hpp"

namespace oresme {

/// Characteristic roots lambda_{1,2}(x) = (x +- sqrt(x^2-4)) / (2x), ordered
/// lambda1 >= lambda2. They multiply to 1/x^2 and sum to 1.
struct RootPair {
    double lambda1;
    double lambda2;
    double x;
};

/// Requires the real branch x^2 > 4; throws DomainError otherwise.
RootPair lambda_roots(double x);

/// Binet value (lambda_plus^n - lambda_minus^n) / sqrt(x^2 - 4) where
/// lambda_plus carries the + sign on the square root. Valid for negative n.
double binet_float(std::int64_t n, double x);

/// x^-n * sinh(n z) / sinh(z) with x/2 = cosh(z); requires x > 2 and n >= 1.
double hyperbolic_eval(std::int64_t n, double x);

enum class TraceVerdict { converged, oscillating, degenerate };

struct ConvergenceTrace {
    struct Step {
        std::int64_t n;
        double ratio;  // O_{n+1}/O_n; NaN when O_n vanishes
        double error;  // |ratio - lambda1|, NaN when not applicable
    };
    double x = 0.0;
    std::string x_str;
    TraceVerdict verdict = TraceVerdict::oscillating;
    std::vector<Step> steps;
    std::int64_t burn_in = -1;     // first index after which error never increases
    double observed_limit = 0.0;   // |last defined ratio|
    bool flagged = false;          // degenerate limit disagrees with the claimed value 1
    std::string note;
};

/// Ratio probe over exact rational arithmetic: ratios O_{n+1}(x)/O_n(x) are
/// computed exactly and, on the |x| > 2 branch, the error against lambda1 is
/// measured with an integer square root at 192 fractional bits so the decay
/// can be followed far below binary64 cancellation.
ConvergenceTrace ratio_limit_probe(const Rational& x, std::int64_t max_steps);

/// Same probe over the binary64 recurrence, for points not given exactly.
ConvergenceTrace ratio_limit_probe(double x, std::int64_t max_steps);

/// The n-1 zeros 2 cos(k pi / n), k = 1..n-1, in ascending order.
std::vector<double> product_roots(std::int64_t n);

struct ReconstructionReport {
    std::int64_t n = 0;
    double tol = 0.0;
    std::vector<double> roots;
    std::vector<double> reconstructed; // coefficients of prod (x - r), degree n-1, index = exponent
    std::vector<BigInt> exact;         // integer coefficients of x^n * O_n(x)
    double max_abs_error = 0.0;
    bool pass = false;
};

/// Expands prod_k (x - 2cos(k pi/n)) in binary64, ascending-root factor
/// order, and compares coefficient-wise with the exact coefficients of
/// x^n * O_n(x).
ReconstructionReport product_reconstruct(std::int64_t n, double tol);

const char* trace_verdict_name(TraceVerdict v);

} // namespace oresme
