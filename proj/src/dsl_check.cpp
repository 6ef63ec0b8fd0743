#include <algorithm>

#include "oresme/dsl.hpp"
#include "oresme/parallel.hpp"
#include "oresme/sequences.hpp"

namespace oresme::dsl {

namespace {

// Guards against runaway corpus lines; generous for every shipped identity.
constexpr std::int64_t kMaxSumSpan = 1 << 20;
constexpr std::int64_t kMaxSeqIndex = 5000;
constexpr std::int64_t kMaxAssignments = 10'000'000;

using Env = std::vector<std::pair<std::string, std::int64_t>>;

std::int64_t env_value(const Env& env, const std::string& name) {
    for (const auto& [key, value] : env) {
        if (key == name) {
            return value;
        }
    }
    throw EvaluationError("unbound variable: " + name);
}

std::int64_t eval_affine(const Affine& a, const Env& env) {
    std::int64_t acc = a.constant;
    for (const auto& [name, coeff] : a.terms) {
        std::int64_t term, next;
        if (__builtin_mul_overflow(coeff, env_value(env, name), &term) ||
            __builtin_add_overflow(acc, term, &next)) {
            throw EvaluationError("affine form overflows a machine integer");
        }
        acc = next;
    }
    return acc;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t eval_bound(const Bound& b, const Env& env) {
    return floor_div(eval_affine(b.affine, env), b.divisor);
}

RationalFunction eval_expr(const Expr& e, Env& env) {
    switch (e.kind) {
    case ExprKind::RationalLit:
        return RationalFunction::constant(e.lit);
    case ExprKind::VarX:
        return RationalFunction::var();
    case ExprKind::VarRef:
        return RationalFunction::constant(Rational(env_value(env, e.name)));
    case ExprKind::SeqRef: {
        std::int64_t idx = eval_affine(e.index, env);
        if (idx > kMaxSeqIndex || idx < -kMaxSeqIndex) {
            throw EvaluationError("sequence index out of the supported range");
        }
        return RationalFunction(e.derivative ? oresme_derivative_any(idx)
                                             : oresme_poly_any(idx));
    }
    case ExprKind::Neg:
        return -eval_expr(*e.a, env);
    case ExprKind::Add:
        return eval_expr(*e.a, env) + eval_expr(*e.b, env);
    case ExprKind::Sub:
        return eval_expr(*e.a, env) - eval_expr(*e.b, env);
    case ExprKind::Mul:
        return eval_expr(*e.a, env) * eval_expr(*e.b, env);
    case ExprKind::Div:
        return eval_expr(*e.a, env) / eval_expr(*e.b, env);
    case ExprKind::Pow:
        return eval_expr(*e.a, env).pow(eval_affine(e.index, env));
    case ExprKind::Binom:
        return RationalFunction::constant(
            Rational(binomial(eval_affine(e.index, env), eval_affine(e.index2, env))));
    case ExprKind::Sum: {
        std::int64_t lo = eval_bound(e.lower, env);
        std::int64_t hi = eval_bound(e.upper, env);
        RationalFunction acc = RationalFunction::zero();
        if (lo > hi) {
            return acc;
        }
        if (hi - lo >= kMaxSumSpan) {
            throw EvaluationError("summation range too large");
        }
        env.emplace_back(e.name, lo);
        for (std::int64_t v = lo; v <= hi; ++v) {
            env.back().second = v;
            acc = acc + eval_expr(*e.a, env);
        }
        env.pop_back();
        return acc;
    }
    }
    throw EvaluationError("malformed expression node");
}

} // namespace

IdentityReport check_ast(const IdentityAst& ast, const std::string& name, int workers) {
    IdentityReport report;
    report.id = name.empty() ? "<anonymous>" : name;
    report.expected = Expected::holds;
    {
        Sweep sweep;
        for (const auto& r : ast.ranges) {
            sweep.add(r.var, r.lo, r.hi);
        }
        std::string constraint_desc;
        for (const auto& c : ast.constraints) {
            if (!constraint_desc.empty()) {
                constraint_desc += ", ";
            }
            constraint_desc += c.left + " >= " + c.right;
        }
        report.sweep = sweep.describe(constraint_desc);
    }

    for (const auto& r : ast.ranges) {
        if (r.lo > r.hi) {
            report.vacuous = true;
            report.verdict = Verdict::holds;
            return report;
        }
    }

    // Pre-resolve constraint variable positions.
    auto position = [&](const std::string& var) {
        for (std::size_t i = 0; i < ast.ranges.size(); ++i) {
            if (ast.ranges[i].var == var) {
                return i;
            }
        }
        throw EvaluationError("constraint references an undeclared variable: " + var);
    };
    std::vector<std::pair<std::size_t, std::size_t>> constraints;
    constraints.reserve(ast.constraints.size());
    for (const auto& c : ast.constraints) {
        constraints.emplace_back(position(c.left), position(c.right));
    }

    std::vector<std::vector<std::int64_t>> assignments;
    {
        std::vector<std::int64_t> current;
        current.reserve(ast.ranges.size());
        for (const auto& r : ast.ranges) {
            current.push_back(r.lo);
        }
        while (true) {
            bool keep = true;
            for (const auto& [left, right] : constraints) {
                if (current[left] < current[right]) {
                    keep = false;
                    break;
                }
            }
            if (keep) {
                assignments.push_back(current);
                if (static_cast<std::int64_t>(assignments.size()) > kMaxAssignments) {
                    throw EvaluationError("sweep enumerates too many assignments");
                }
            }
            std::size_t pos = ast.ranges.size();
            bool done = true;
            while (pos > 0) {
                --pos;
                if (current[pos] < ast.ranges[pos].hi) {
                    ++current[pos];
                    for (std::size_t i = pos + 1; i < ast.ranges.size(); ++i) {
                        current[i] = ast.ranges[i].lo;
                    }
                    done = false;
                    break;
                }
            }
            if (done) {
                break;
            }
        }
    }
    if (assignments.empty()) {
        report.vacuous = true;
        report.verdict = Verdict::holds;
        return report;
    }

    struct ChunkResult {
        std::int64_t failures = 0;
        std::vector<Witness> witnesses;
        std::optional<std::string> error;
    };
    int nworkers = effective_workers(workers);
    std::vector<ChunkResult> chunks(std::min<std::size_t>(
        static_cast<std::size_t>(nworkers), assignments.size()));
    parallel_chunks(assignments.size(), nworkers,
                    [&](std::size_t chunk, std::size_t begin, std::size_t end) {
                        ChunkResult& cr = chunks[chunk];
                        try {
                            for (std::size_t i = begin; i < end; ++i) {
                                Env env;
                                for (std::size_t p = 0; p < ast.ranges.size(); ++p) {
                                    env.emplace_back(ast.ranges[p].var, assignments[i][p]);
                                }
                                RationalFunction lhs = eval_expr(*ast.lhs, env);
                                RationalFunction rhs = eval_expr(*ast.rhs, env);
                                if (lhs.equals(rhs)) {
                                    continue;
                                }
                                ++cr.failures;
                                if (cr.witnesses.size() < kWitnessCap) {
                                    Witness w;
                                    for (std::size_t p = 0; p < ast.ranges.size(); ++p) {
                                        w.params.emplace_back(ast.ranges[p].var,
                                                              assignments[i][p]);
                                    }
                                    w.lhs = std::move(lhs);
                                    w.rhs = std::move(rhs);
                                    cr.witnesses.push_back(std::move(w));
                                }
                            }
                        } catch (const std::exception& ex) {
                            cr.error = ex.what();
                        }
                    });
    for (const auto& cr : chunks) {
        if (cr.error) {
            throw EvaluationError("while checking '" + report.id + "': " + *cr.error);
        }
    }

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
    report.unexpected = report.verdict != Verdict::holds;
    return report;
}

} // namespace oresme::dsl
