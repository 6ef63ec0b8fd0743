#include "oresme/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "oresme/sequences.hpp"

namespace oresme {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Guard bits for the integer-square-root error measurements.
constexpr unsigned kErrorScaleBits = 192;

std::int64_t compute_burn_in(const std::vector<ConvergenceTrace::Step>& steps) {
    // First index after which the error never increases to the end.
    std::int64_t burn_in = -1;
    for (std::size_t i = steps.size(); i-- > 0;) {
        if (std::isnan(steps[i].error)) {
            break;
        }
        if (i + 1 < steps.size() && steps[i].error < steps[i + 1].error) {
            break;
        }
        burn_in = steps[i].n;
    }
    return burn_in;
}

bool oscillation_detected(const std::vector<ConvergenceTrace::Step>& steps) {
    // Look at the last 20 ratios: undefined entries, a sign change, or a
    // spread above 1e-3 all count as non-convergence.
    std::size_t start = steps.size() > 20 ? steps.size() - 20 : 0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool saw_positive = false, saw_negative = false;
    for (std::size_t i = start; i < steps.size(); ++i) {
        double r = steps[i].ratio;
        if (std::isnan(r)) {
            return true;
        }
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        saw_positive = saw_positive || r > 0;
        saw_negative = saw_negative || r < 0;
    }
    return (saw_positive && saw_negative) || (hi - lo > 1e-3);
}

} // namespace

RootPair lambda_roots(double x) {
    if (!(x * x > 4.0)) {
        throw DomainError("lambda_roots requires x^2 > 4");
    }
    double delta = std::sqrt(x * x - 4.0);
    double a = (x + delta) / (2.0 * x);
    double b = (x - delta) / (2.0 * x);
    if (a < b) {
        std::swap(a, b);
    }
    return RootPair{a, b, x};
}

double binet_float(std::int64_t n, double x) {
    if (!(x * x > 4.0)) {
        throw DomainError("binet_float requires x^2 > 4");
    }
    double delta = std::sqrt(x * x - 4.0);
    double lp = (x + delta) / (2.0 * x);
    double lm = (x - delta) / (2.0 * x);
    double dn = static_cast<double>(n);
    return (std::pow(lp, dn) - std::pow(lm, dn)) / delta;
}

double hyperbolic_eval(std::int64_t n, double x) {
    if (!(x > 2.0)) {
        throw DomainError("hyperbolic_eval requires x > 2");
    }
    if (n < 1) {
        throw std::invalid_argument("hyperbolic_eval requires n >= 1");
    }
    double z = std::acosh(x / 2.0);
    double dn = static_cast<double>(n);
    return std::pow(x, -dn) * std::sinh(dn * z) / std::sinh(z);
}

namespace {

// |r - lambda1(x)| for rational r and rational x with x^2 > 4, measured with
// a scaled integer square root so decays far below 1e-16 stay visible.
// lambda1 = (|p| + sqrt(p^2 - 4q^2)) / (2|p|) for x = p/q.
double exact_ratio_error(const Rational& r, const Rational& x) {
    namespace mp = boost::multiprecision;
    const BigInt P = mp::abs(x.num());
    const BigInt q = x.den();
    const BigInt D = x.num() * x.num() - 4 * q * q;
    const BigInt A = 2 * P * r.num() - P * r.den();
    const BigInt B = r.den();
    const BigInt S = BigInt(1) << kErrorScaleBits;
    const BigInt scaled = D * S * S;
    const BigInt sq = mp::sqrt(scaled);
    BigInt diff = A * S - B * sq;
    if (diff < 0) {
        diff = -diff;
    }
    return Rational(std::move(diff), 2 * P * r.den() * S).to_double();
}

ConvergenceTrace finish_trace(ConvergenceTrace trace, bool real_branch, bool on_boundary) {
    double last_defined = kNaN;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (!std::isnan(it->ratio)) {
            last_defined = it->ratio;
            break;
        }
    }
    trace.observed_limit = std::abs(last_defined);
    if (real_branch) {
        trace.verdict = TraceVerdict::converged;
        trace.burn_in = compute_burn_in(trace.steps);
    } else if (on_boundary) {
        trace.verdict = TraceVerdict::degenerate;
        if (std::abs(trace.observed_limit - 1.0) > 1e-3) {
            trace.flagged = true;
            char buf[160];
            std::snprintf(buf, sizeof(buf),
                          "observed |ratio| limit %.6f disagrees with the claimed boundary value 1",
                          trace.observed_limit);
            trace.note = buf;
        }
    } else {
        trace.verdict = TraceVerdict::oscillating;
        if (!oscillation_detected(trace.steps)) {
            trace.note = "tail too short to exhibit oscillation";
        }
    }
    return trace;
}

} // namespace

ConvergenceTrace ratio_limit_probe(const Rational& x, std::int64_t max_steps) {
    if (x.is_zero()) {
        throw ZeroPointError("ratio probe at x = 0");
    }
    if (max_steps < 1) {
        throw std::invalid_argument("ratio probe needs at least one step");
    }
    ConvergenceTrace trace;
    trace.x = x.to_double();
    trace.x_str = x.str();

    const Rational four(4);
    const Rational x2 = x * x;
    const bool real_branch = x2 > four;
    const bool on_boundary = x2 == four;

    const Rational inv_x2 = Rational(1) / x2;
    Rational prev(0);                 // O_n-1
    Rational curr = Rational(1) / x;  // O_n, starting at n = 1
    for (std::int64_t n = 1; n <= max_steps; ++n) {
        Rational next = curr - inv_x2 * prev;
        ConvergenceTrace::Step step{n, kNaN, kNaN};
        if (!curr.is_zero()) {
            Rational ratio = next / curr;
            step.ratio = ratio.to_double();
            if (real_branch) {
                step.error = exact_ratio_error(ratio, x);
            }
        }
        trace.steps.push_back(step);
        prev = std::move(curr);
        curr = std::move(next);
    }
    return finish_trace(std::move(trace), real_branch, on_boundary);
}

ConvergenceTrace ratio_limit_probe(double x, std::int64_t max_steps) {
    if (x == 0.0) {
        throw ZeroPointError("ratio probe at x = 0");
    }
    if (max_steps < 1) {
        throw std::invalid_argument("ratio probe needs at least one step");
    }
    ConvergenceTrace trace;
    trace.x = x;
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    trace.x_str = buf;

    const bool real_branch = x * x > 4.0;
    const bool on_boundary = x * x == 4.0;
    double lambda1 = real_branch ? lambda_roots(x).lambda1 : kNaN;

    const double inv_x2 = 1.0 / (x * x);
    double prev = 0.0;
    double curr = 1.0 / x;
    for (std::int64_t n = 1; n <= max_steps; ++n) {
        double next = curr - inv_x2 * prev;
        ConvergenceTrace::Step step{n, kNaN, kNaN};
        if (curr != 0.0) {
            step.ratio = next / curr;
            if (real_branch) {
                step.error = std::abs(step.ratio - lambda1);
            }
        }
        trace.steps.push_back(step);
        prev = curr;
        curr = next;
    }
    return finish_trace(std::move(trace), real_branch, on_boundary);
}

std::vector<double> product_roots(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("product_roots requires n >= 1");
    }
    std::vector<double> roots;
    roots.reserve(static_cast<std::size_t>(n - 1));
    const double pi = std::acos(-1.0);
    for (std::int64_t k = n - 1; k >= 1; --k) {
        roots.push_back(2.0 * std::cos(static_cast<double>(k) * pi / static_cast<double>(n)));
    }
    return roots;
}

ReconstructionReport product_reconstruct(std::int64_t n, double tol) {
    ReconstructionReport report;
    report.n = n;
    report.tol = tol;
    report.roots = product_roots(n);

    // Expand prod (x - r) in ascending-root order.
    std::vector<double> coeffs{1.0};
    for (double r : report.roots) {
        std::vector<double> next(coeffs.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= r * coeffs[i];
        }
        coeffs = std::move(next);
    }
    report.reconstructed = coeffs;

    // x^n O_n(x) is an ordinary polynomial of degree n-1 with integer coefficients.
    const LaurentPoly shifted = oresme_poly(n).shifted(n);
    report.exact.assign(static_cast<std::size_t>(n), BigInt(0));
    for (const auto& [e, c] : shifted.terms()) {
        report.exact[static_cast<std::size_t>(e)] = c.num();
    }

    double max_err = 0.0;
    for (std::size_t i = 0; i < report.exact.size(); ++i) {
        double exact = Rational(report.exact[i]).to_double();
        max_err = std::max(max_err, std::abs(report.reconstructed[i] - exact));
    }
    report.max_abs_error = max_err;
    report.pass = max_err < tol;
    return report;
}

const char* trace_verdict_name(TraceVerdict v) {
    switch (v) {
    case TraceVerdict::converged: return "converged";
    case TraceVerdict::oscillating: return "oscillating";
    case TraceVerdict::degenerate: return "degenerate";
    }
    return "?";
}

} // namespace oresme
