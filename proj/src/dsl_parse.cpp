#include "oresme/dsl.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "oresme/errors.hpp"

namespace oresme::dsl {

namespace {

enum class Tok {
    Int, Ident, Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBracket, RBracket, Comma,
    EqEq, Eq, DotDot, Ge, End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int column = 1;
};

// Internal throw type; converted into the public ParseError at the parse()
// boundary so the parser itself never escapes an exception.
struct ParseFailure {
    ParseError error;
};

[[noreturn]] void fail(int line, int column, std::string message, std::string token = "") {
    throw ParseFailure{ParseError{std::move(message), line, column, std::move(token)}};
}

[[noreturn]] void fail_at(const Token& t, std::string message) {
    fail(t.line, t.column, std::move(message), t.text);
}

bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9');
}

std::vector<Token> lex(const std::string& src, int first_line) {
    std::vector<Token> tokens;
    int line = first_line;
    int col = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::string text, int l, int c, std::int64_t value = 0) {
        tokens.push_back(Token{kind, std::move(text), value, l, c});
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
            ++col;
            ++i;
            continue;
        }
        int tl = line, tc = col;
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') {
                ++j;
            }
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, value);
            if (ec != std::errc() || ptr != src.data() + j) {
                fail(tl, tc, "integer literal out of range", src.substr(i, j - i));
            }
            push(Tok::Int, src.substr(i, j - i), tl, tc, value);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) {
                ++j;
            }
            if (j < src.size() && src[j] == '\'') {
                ++j; // derivative marker, e.g. O'
            }
            push(Tok::Ident, src.substr(i, j - i), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto two = [&](char second) { return i + 1 < src.size() && src[i + 1] == second; };
        switch (c) {
        case '+': push(Tok::Plus, "+", tl, tc); break;
        case '-': push(Tok::Minus, "-", tl, tc); break;
        case '*': push(Tok::Star, "*", tl, tc); break;
        case '/': push(Tok::Slash, "/", tl, tc); break;
        case '^': push(Tok::Caret, "^", tl, tc); break;
        case '(': push(Tok::LParen, "(", tl, tc); break;
        case ')': push(Tok::RParen, ")", tl, tc); break;
        case '[': push(Tok::LBracket, "[", tl, tc); break;
        case ']': push(Tok::RBracket, "]", tl, tc); break;
        case ',': push(Tok::Comma, ",", tl, tc); break;
        case '=':
            if (two('=')) {
                push(Tok::EqEq, "==", tl, tc);
                ++i;
                ++col;
            } else {
                push(Tok::Eq, "=", tl, tc);
            }
            break;
        case '.':
            if (two('.')) {
                push(Tok::DotDot, "..", tl, tc);
                ++i;
                ++col;
            } else {
                fail(tl, tc, "expected '..'", ".");
            }
            break;
        case '>':
            if (two('=')) {
                push(Tok::Ge, ">=", tl, tc);
                ++i;
                ++col;
            } else {
                fail(tl, tc, "expected '>='", ">");
            }
            break;
        default:
            fail(tl, tc, "unexpected character", std::string(1, c));
        }
        ++i;
        ++col;
    }
    tokens.push_back(Token{Tok::End, "<end>", 0, line, col});
    return tokens;
}

bool is_reserved(const std::string& name) {
    return name == "x" || name == "O" || name == "O'" || name == "C" || name == "Sum" ||
           name == "where";
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : m_tokens(std::move(tokens)) {}

    IdentityAst parse_identity() {
        IdentityAst ast;
        ast.lhs = parse_expr();
        expect(Tok::EqEq, "expected '=='");
        ast.rhs = parse_expr();
        const Token& w = peek();
        if (!(w.kind == Tok::Ident && w.text == "where")) {
            fail_at(w, "expected 'where'");
        }
        advance();
        parse_ranges(ast);
        expect(Tok::End, "unexpected trailing input");
        validate(ast);
        return ast;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = m_pos + ahead;
        return i < m_tokens.size() ? m_tokens[i] : m_tokens.back();
    }
    const Token& advance() { return m_tokens[m_pos < m_tokens.size() - 1 ? m_pos++ : m_pos]; }
    bool accept(Tok kind) {
        if (peek().kind == kind) {
            advance();
            return true;
        }
        return false;
    }
    const Token& expect(Tok kind, const char* message) {
        if (peek().kind != kind) {
            fail_at(peek(), message);
        }
        return advance();
    }

    ExprPtr make(ExprKind kind, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    ExprPtr parse_expr() { return parse_add(); }

    ExprPtr parse_add() {
        ExprPtr left = parse_mul();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            const Token& op = advance();
            ExprPtr right = parse_mul();
            auto node = std::make_shared<Expr>();
            node->kind = op.kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
            node->line = op.line;
            node->column = op.column;
            node->a = left;
            node->b = right;
            left = node;
        }
        return left;
    }

    ExprPtr parse_mul() {
        ExprPtr left = parse_unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = advance();
            ExprPtr right = parse_unary();
            auto node = std::make_shared<Expr>();
            node->kind = op.kind == Tok::Star ? ExprKind::Mul : ExprKind::Div;
            node->line = op.line;
            node->column = op.column;
            node->a = left;
            node->b = right;
            left = node;
        }
        return left;
    }

    ExprPtr parse_unary() {
        if (peek().kind == Tok::Minus) {
            const Token& op = advance();
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::Neg;
            node->line = op.line;
            node->column = op.column;
            node->a = parse_unary();
            return node;
        }
        return parse_pow();
    }

    ExprPtr parse_pow() {
        ExprPtr base = parse_primary();
        if (peek().kind == Tok::Caret) {
            const Token& op = advance();
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::Pow;
            node->line = op.line;
            node->column = op.column;
            node->a = base;
            node->index = parse_exponent();
            return node;
        }
        return base;
    }

    // exponent := INT | IDENT | '-' (INT | IDENT) | '(' affine ')'
    Affine parse_exponent() {
        if (accept(Tok::LParen)) {
            Affine a = parse_affine();
            expect(Tok::RParen, "expected ')' after exponent");
            return a;
        }
        std::int64_t sign = 1;
        if (accept(Tok::Minus)) {
            sign = -1;
        }
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            advance();
            return Affine::of_constant(sign * t.value);
        }
        if (t.kind == Tok::Ident && !is_reserved(t.text)) {
            advance();
            Affine a;
            a.terms.emplace_back(t.text, sign);
            return a;
        }
        fail_at(t, "expected an integer exponent, a variable, or '(affine)'");
    }

    ExprPtr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
        case Tok::Int: {
            advance();
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::RationalLit;
            node->line = t.line;
            node->column = t.column;
            node->lit = Rational(t.value);
            return node;
        }
        case Tok::LParen: {
            advance();
            ExprPtr inner = parse_expr();
            expect(Tok::RParen, "expected ')'");
            return inner;
        }
        case Tok::Ident:
            if (t.text == "x") {
                advance();
                return make(ExprKind::VarX, t);
            }
            if (t.text == "O" || t.text == "O'") {
                advance();
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::SeqRef;
                node->line = t.line;
                node->column = t.column;
                node->derivative = t.text == "O'";
                expect(Tok::LBracket, "expected '['");
                node->index = parse_affine();
                expect(Tok::RBracket, "expected ']'");
                return node;
            }
            if (t.text == "C") {
                advance();
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::Binom;
                node->line = t.line;
                node->column = t.column;
                expect(Tok::LParen, "expected '(' after 'C'");
                node->index = parse_affine();
                expect(Tok::Comma, "expected ',' between binomial arguments");
                node->index2 = parse_affine();
                expect(Tok::RParen, "expected ')' after binomial arguments");
                return node;
            }
            if (t.text == "Sum") {
                return parse_sum();
            }
            if (t.text == "where") {
                fail_at(t, "unexpected 'where'");
            }
            advance();
            {
                auto node = std::make_shared<Expr>();
                node->kind = ExprKind::VarRef;
                node->line = t.line;
                node->column = t.column;
                node->name = t.text;
                return node;
            }
        default:
            fail_at(t, "expected an expression");
        }
    }

    ExprPtr parse_sum() {
        const Token& kw = advance(); // 'Sum'
        auto node = std::make_shared<Expr>();
        node->kind = ExprKind::Sum;
        node->line = kw.line;
        node->column = kw.column;
        expect(Tok::LParen, "expected '(' after 'Sum'");
        const Token& var = expect(Tok::Ident, "expected a bound variable");
        if (is_reserved(var.text)) {
            fail_at(var, "reserved name cannot be a bound variable");
        }
        node->name = var.text;
        expect(Tok::Eq, "expected '=' after the bound variable");
        node->lower = parse_bound();
        expect(Tok::DotDot, "expected '..' between summation bounds");
        node->upper = parse_bound();
        expect(Tok::Comma, "expected ',' before the summand");
        node->a = parse_expr();
        expect(Tok::RParen, "expected ')' closing 'Sum'");
        return node;
    }

    // bound := '(' affine ')' ['/' INT] | affine
    Bound parse_bound() {
        Bound b;
        if (peek().kind == Tok::LParen) {
            advance();
            b.affine = parse_affine();
            expect(Tok::RParen, "expected ')'");
            if (accept(Tok::Slash)) {
                const Token& d = expect(Tok::Int, "expected an integer divisor");
                if (d.value <= 0) {
                    fail_at(d, "floor divisor must be positive");
                }
                b.divisor = d.value;
            }
            return b;
        }
        b.affine = parse_affine();
        return b;
    }

    // affine := ['-'] aterm (('+'|'-') aterm)*; aterm := INT ['*' IDENT] | IDENT
    Affine parse_affine() {
        Affine a;
        std::int64_t sign = accept(Tok::Minus) ? -1 : 1;
        parse_affine_term(a, sign);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = advance().kind == Tok::Plus ? 1 : -1;
            parse_affine_term(a, sign);
        }
        return a;
    }

    void parse_affine_term(Affine& a, std::int64_t sign) {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            advance();
            if (accept(Tok::Star)) {
                const Token& v = expect(Tok::Ident, "expected a variable after '*'");
                affine_add_var(a, v, sign * t.value);
            } else {
                a.constant += sign * t.value;
            }
            return;
        }
        if (t.kind == Tok::Ident) {
            advance();
            affine_add_var(a, t, sign);
            return;
        }
        fail_at(t, "expected an integer or a variable");
    }

    void affine_add_var(Affine& a, const Token& var, std::int64_t coeff) {
        if (is_reserved(var.text)) {
            fail_at(var, "reserved name cannot appear in an index");
        }
        for (auto& [name, c] : a.terms) {
            if (name == var.text) {
                c += coeff;
                if (c == 0) {
                    std::erase_if(a.terms, [&](const auto& p) { return p.second == 0; });
                }
                return;
            }
        }
        if (coeff != 0) {
            a.terms.emplace_back(var.text, coeff);
        }
    }

    void parse_ranges(IdentityAst& ast) {
        while (true) {
            const Token& v = expect(Tok::Ident, "expected a range variable");
            if (is_reserved(v.text)) {
                fail_at(v, "reserved name cannot be a range variable");
            }
            if (peek().kind == Tok::Ge) {
                advance();
                const Token& rhs = expect(Tok::Ident, "expected a variable after '>='");
                ast.constraints.push_back(VarConstraint{v.text, rhs.text});
            } else {
                expect(Tok::Eq, "expected '=' or '>=' in a range clause");
                std::int64_t lo = parse_signed_int();
                expect(Tok::DotDot, "expected '..' in a range");
                std::int64_t hi = parse_signed_int();
                ast.ranges.push_back(RangeDecl{v.text, lo, hi, v.line, v.column});
            }
            if (!accept(Tok::Comma)) {
                break;
            }
        }
    }

    std::int64_t parse_signed_int() {
        std::int64_t sign = accept(Tok::Minus) ? -1 : 1;
        const Token& t = expect(Tok::Int, "expected an integer");
        return sign * t.value;
    }

    // Scope checking: every variable in an index, bound or scalar position is
    // either a declared range variable or a visible Sum bound variable, and
    // Sum variables shadow nothing.
    void validate(const IdentityAst& ast) {
        std::set<std::string> declared;
        for (const auto& r : ast.ranges) {
            if (!declared.insert(r.var).second) {
                fail(r.line, r.column, "duplicate range variable", r.var);
            }
        }
        if (ast.ranges.empty()) {
            fail(1, 1, "at least one range declaration is required");
        }
        for (const auto& c : ast.constraints) {
            if (!declared.count(c.left) || !declared.count(c.right)) {
                fail(1, 1, "constraint references an undeclared variable",
                     declared.count(c.left) ? c.right : c.left);
            }
        }
        check_scope(*ast.lhs, declared);
        check_scope(*ast.rhs, declared);
    }

    void check_affine(const Expr& at, const Affine& a, const std::set<std::string>& scope) {
        for (const auto& [name, coeff] : a.terms) {
            (void)coeff;
            if (!scope.count(name)) {
                fail(at.line, at.column, "undeclared variable in an index or bound", name);
            }
        }
    }

    void check_scope(const Expr& e, const std::set<std::string>& scope) {
        switch (e.kind) {
        case ExprKind::VarRef:
            if (!scope.count(e.name)) {
                fail(e.line, e.column, "undeclared variable", e.name);
            }
            break;
        case ExprKind::SeqRef:
            check_affine(e, e.index, scope);
            break;
        case ExprKind::Pow:
            check_affine(e, e.index, scope);
            check_scope(*e.a, scope);
            break;
        case ExprKind::Binom:
            check_affine(e, e.index, scope);
            check_affine(e, e.index2, scope);
            break;
        case ExprKind::Sum: {
            if (scope.count(e.name)) {
                fail(e.line, e.column, "summation variable shadows an outer variable", e.name);
            }
            check_affine(e, e.lower.affine, scope);
            check_affine(e, e.upper.affine, scope);
            std::set<std::string> inner = scope;
            inner.insert(e.name);
            check_scope(*e.a, inner);
            break;
        }
        case ExprKind::Neg:
            check_scope(*e.a, scope);
            break;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
        case ExprKind::Div:
            check_scope(*e.a, scope);
            check_scope(*e.b, scope);
            break;
        case ExprKind::RationalLit:
        case ExprKind::VarX:
            break;
        }
    }

    std::vector<Token> m_tokens;
    std::size_t m_pos = 0;
};

} // namespace

ParseResult parse_at(const std::string& source, int first_line) {
    ParseResult result;
    try {
        Parser parser(lex(source, first_line));
        result.ast = parser.parse_identity();
    } catch (const ParseFailure& f) {
        result.error = f.error;
    }
    return result;
}

ParseResult parse(const std::string& source) {
    return parse_at(source, 1);
}

// ---------------------------------------------------------------------------
// Printing

std::string Affine::str() const {
    if (terms.empty()) {
        return std::to_string(constant);
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, coeff] : terms) {
        if (first) {
            if (coeff == -1) {
                os << "-";
            } else if (coeff != 1) {
                os << coeff << "*";
            }
            os << name;
            first = false;
            continue;
        }
        os << (coeff < 0 ? "-" : "+");
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (mag != 1) {
            os << mag << "*";
        }
        os << name;
    }
    if (constant > 0) {
        os << "+" << constant;
    } else if (constant < 0) {
        os << constant;
    }
    return os.str();
}

std::string Bound::str() const {
    if (divisor == 1) {
        return affine.str();
    }
    return "(" + affine.str() + ")/" + std::to_string(divisor);
}

namespace {

// Precedence levels used by the printer: additive 1, multiplicative 2,
// unary minus 3, power 4, atoms 5.
int precedence(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
    }
}

void print_expr(std::ostream& os, const Expr& e, int min_prec);

void print_child(std::ostream& os, const Expr& child, int min_prec) {
    if (precedence(child) < min_prec) {
        os << "(";
        print_expr(os, child, 1);
        os << ")";
    } else {
        print_expr(os, child, 1);
    }
}

void print_expr(std::ostream& os, const Expr& e, int) {
    switch (e.kind) {
    case ExprKind::RationalLit:
        if (e.lit.is_integer()) {
            os << e.lit.num().str();
        } else {
            os << e.lit.str();
        }
        break;
    case ExprKind::VarX:
        os << "x";
        break;
    case ExprKind::VarRef:
        os << e.name;
        break;
    case ExprKind::SeqRef:
        os << (e.derivative ? "O'" : "O") << "[" << e.index.str() << "]";
        break;
    case ExprKind::Neg:
        os << "-";
        print_child(os, *e.a, 3);
        break;
    case ExprKind::Add:
        print_child(os, *e.a, 1);
        os << " + ";
        print_child(os, *e.b, 2);
        break;
    case ExprKind::Sub:
        print_child(os, *e.a, 1);
        os << " - ";
        print_child(os, *e.b, 2);
        break;
    case ExprKind::Mul:
        print_child(os, *e.a, 2);
        os << "*";
        print_child(os, *e.b, 3);
        break;
    case ExprKind::Div:
        print_child(os, *e.a, 2);
        os << "/";
        print_child(os, *e.b, 3);
        break;
    case ExprKind::Pow:
        print_child(os, *e.a, 5);
        os << "^";
        if (e.index.is_constant()) {
            os << e.index.constant;
        } else if (e.index.single_var()) {
            os << e.index.terms[0].first;
        } else {
            os << "(" << e.index.str() << ")";
        }
        break;
    case ExprKind::Sum:
        os << "Sum(" << e.name << "=" << e.lower.str() << ".." << e.upper.str() << ", ";
        print_expr(os, *e.a, 1);
        os << ")";
        break;
    case ExprKind::Binom:
        os << "C(" << e.index.str() << ", " << e.index2.str() << ")";
        break;
    }
}

} // namespace

std::string pretty(const IdentityAst& ast) {
    std::ostringstream os;
    print_expr(os, *ast.lhs, 1);
    os << " == ";
    print_expr(os, *ast.rhs, 1);
    os << " where ";
    bool first = true;
    for (const auto& r : ast.ranges) {
        if (!first) {
            os << ", ";
        }
        os << r.var << "=" << r.lo << ".." << r.hi;
        first = false;
    }
    for (const auto& c : ast.constraints) {
        os << ", " << c.left << " >= " << c.right;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Structural equality

bool affine_equal(const Affine& a, const Affine& b) {
    if (a.constant != b.constant || a.terms.size() != b.terms.size()) {
        return false;
    }
    for (const auto& [name, coeff] : a.terms) {
        bool found = false;
        for (const auto& [bname, bcoeff] : b.terms) {
            if (name == bname) {
                if (coeff != bcoeff) {
                    return false;
                }
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

namespace {

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) {
        return false;
    }
    switch (a.kind) {
    case ExprKind::RationalLit:
        return a.lit == b.lit;
    case ExprKind::VarX:
        return true;
    case ExprKind::VarRef:
        return a.name == b.name;
    case ExprKind::SeqRef:
        return a.derivative == b.derivative && affine_equal(a.index, b.index);
    case ExprKind::Neg:
        return expr_equal(*a.a, *b.a);
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
        return expr_equal(*a.a, *b.a) && expr_equal(*a.b, *b.b);
    case ExprKind::Pow:
        return affine_equal(a.index, b.index) && expr_equal(*a.a, *b.a);
    case ExprKind::Sum:
        return a.name == b.name && a.lower.divisor == b.lower.divisor &&
               a.upper.divisor == b.upper.divisor &&
               affine_equal(a.lower.affine, b.lower.affine) &&
               affine_equal(a.upper.affine, b.upper.affine) && expr_equal(*a.a, *b.a);
    case ExprKind::Binom:
        return affine_equal(a.index, b.index) && affine_equal(a.index2, b.index2);
    }
    return false;
}

} // namespace

bool structurally_equal(const IdentityAst& a, const IdentityAst& b) {
    if (a.ranges.size() != b.ranges.size() || a.constraints.size() != b.constraints.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.ranges.size(); ++i) {
        if (a.ranges[i].var != b.ranges[i].var || a.ranges[i].lo != b.ranges[i].lo ||
            a.ranges[i].hi != b.ranges[i].hi) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.constraints.size(); ++i) {
        if (a.constraints[i].left != b.constraints[i].left ||
            a.constraints[i].right != b.constraints[i].right) {
            return false;
        }
    }
    return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
}

// ---------------------------------------------------------------------------
// Corpus files

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open corpus file: " + path);
    }
    Corpus corpus;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string text = line;
        auto hash = text.find('#');
        if (hash != std::string::npos) {
            text.resize(hash);
        }
        bool blank = true;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (blank) {
            continue;
        }

        // Optional "name:" prefix. Blank out the prefix instead of erasing it
        // so error columns keep pointing into the original line.
        std::string name;
        std::size_t i = 0;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        std::size_t start = i;
        if (i < text.size() && ident_start(text[i])) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) {
                ++j;
            }
            std::size_t k = j;
            while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
                ++k;
            }
            if (k < text.size() && text[k] == ':') {
                name = text.substr(start, j - start);
                for (std::size_t p = start; p <= k; ++p) {
                    text[p] = ' ';
                }
            }
        }

        ParseResult result = parse_at(text, lineno);
        if (result.ok()) {
            corpus.entries.push_back(CorpusEntry{std::move(name), std::move(*result.ast), lineno});
        } else {
            corpus.errors.push_back(std::move(*result.error));
        }
    }
    return corpus;
}

void override_ranges(IdentityAst& ast, const std::vector<RangeDecl>& overrides) {
    for (auto& r : ast.ranges) {
        for (const auto& o : overrides) {
            if (o.var == r.var) {
                r.lo = o.lo;
                r.hi = o.hi;
            }
        }
    }
}

} // namespace oresme::dsl
