#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oresme/identities.hpp"
#include "oresme/rational_function.hpp"

namespace oresme::dsl {

/// Integer-valued affine form c0 + sum of coeff * var. Variables keep their
/// first-appearance order for printing; equality is order-insensitive.
struct Affine {
    std::int64_t constant = 0;
    std::vector<std::pair<std::string, std::int64_t>> terms;

    static Affine of_constant(std::int64_t c) {
        Affine a;
        a.constant = c;
        return a;
    }
    bool is_constant() const { return terms.empty(); }
    bool single_var() const { return constant == 0 && terms.size() == 1 && terms[0].second == 1; }
    std::string str() const;
};

bool affine_equal(const Affine& a, const Affine& b);

/// Sum bound: an affine form, optionally floor-divided by a positive literal
/// (floor toward minus infinity), e.g. "(n-1)/2".
struct Bound {
    Affine affine;
    std::int64_t divisor = 1;
    std::string str() const;
};

enum class ExprKind {
    RationalLit,
    VarX,
    VarRef,
    SeqRef,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Sum,
    Binom,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    ExprKind kind = ExprKind::RationalLit;
    int line = 1;
    int column = 1;

    Rational lit;            // RationalLit
    std::string name;        // VarRef, Sum bound variable
    bool derivative = false; // SeqRef: O vs O'
    Affine index;            // SeqRef index, Pow exponent, first Binom argument
    Affine index2;           // second Binom argument
    Bound lower, upper;      // Sum bounds
    ExprPtr a, b;            // children (Pow keeps only the base in a)
};

struct RangeDecl {
    std::string var;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    int line = 1;
    int column = 1;
};

/// Inter-variable constraint "left >= right".
struct VarConstraint {
    std::string left;
    std::string right;
};

struct IdentityAst {
    ExprPtr lhs;
    ExprPtr rhs;
    std::vector<RangeDecl> ranges; // declaration order, also enumeration order
    std::vector<VarConstraint> constraints;
};

struct ParseError {
    std::string message;
    int line = 1;
    int column = 1;
    std::string token;
};

struct ParseResult {
    std::optional<IdentityAst> ast;
    std::optional<ParseError> error;
    bool ok() const { return ast.has_value(); }
};

/// Never aborts: any byte input yields either an AST or a positioned error.
ParseResult parse(const std::string& source);

/// Same, but report positions with the given 1-based starting line (for
/// corpus files).
ParseResult parse_at(const std::string& source, int first_line);

std::string pretty(const IdentityAst& ast);

bool structurally_equal(const IdentityAst& a, const IdentityAst& b);

struct CorpusEntry {
    std::string name; // empty when the line carries no "name:" prefix
    IdentityAst ast;
    int line = 1;
};

struct Corpus {
    std::vector<CorpusEntry> entries; // file order
    std::vector<ParseError> errors;   // aggregated, with file line numbers
};

/// One identity per non-comment line; '#' starts a comment; an optional
/// leading "name:" labels the line. Throws IoError when unreadable.
Corpus load_corpus(const std::string& path);

/// Replaces the bounds of every range declaration whose variable name
/// matches an override.
void override_ranges(IdentityAst& ast, const std::vector<RangeDecl>& overrides);

/// Enumerates all assignments within the declared ranges (constraints
/// applied), evaluates both sides in the rational-function field and compares
/// exactly. Reports use the same shape as the built-in catalog.
IdentityReport check_ast(const IdentityAst& ast, const std::string& name, int workers = 1);

} // namespace oresme::dsl
