#include "dfsub/frontend/parser.hpp"

#include <cctype>

namespace dfsub {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(std::string_view text, ParseMode mode, const SymbolLookup& lookup)
        : s_(text), mode_(mode), lookup_(lookup) {}

    AstPtr parse_all() {
        skip();
        if (at_end()) fail("empty expression");
        AstPtr e = expr();
        skip();
        if (!at_end()) fail(std::string("unexpected '") + s_[p_] + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t p_ = 0;
    ParseMode mode_;
    const SymbolLookup& lookup_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(p_), p_);
    }
    bool at_end() const { return p_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool accept(char c) {
        skip();
        if (!at_end() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static AstPtr node(ExprAst::Kind k, std::size_t pos, std::vector<AstPtr> kids = {}) {
        auto n = std::make_shared<ExprAst>();
        n->kind = k;
        n->pos = pos;
        n->kids = std::move(kids);
        return n;
    }
    static AstPtr constant(const Const& c, std::size_t pos) {
        auto n = std::make_shared<ExprAst>();
        n->kind = ExprAst::Kind::Constant;
        n->value = c;
        n->pos = pos;
        return n;
    }

    AstPtr expr() {
        skip();
        std::size_t pos = p_;
        AstPtr lhs = term();
        while (true) {
            skip();
            if (accept('+')) {
                lhs = node(ExprAst::Kind::Sum, pos, {lhs, term()});
            } else if (accept('-')) {
                lhs = node(ExprAst::Kind::Difference, pos, {lhs, term()});
            } else {
                return lhs;
            }
        }
    }

    AstPtr term() {
        skip();
        std::size_t pos = p_;
        AstPtr lhs = unary();
        while (true) {
            if (accept('*')) {
                lhs = node(ExprAst::Kind::Product, pos, {lhs, unary()});
            } else if (accept('/')) {
                lhs = node(ExprAst::Kind::Quotient, pos, {lhs, unary()});
            } else {
                return lhs;
            }
        }
    }

    AstPtr unary() {
        skip();
        std::size_t pos = p_;
        if (accept('-')) return node(ExprAst::Kind::Negate, pos, {unary()});
        return factor();
    }

    std::string digits() {
        skip();
        std::size_t start = p_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (start == p_) fail("expected digits");
        return std::string(s_.substr(start, p_ - start));
    }

    AstPtr factor() {
        skip();
        std::size_t pos = p_;
        AstPtr b = base();
        if (!accept('^')) return b;
        skip();
        bool negative = accept('-');
        std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        auto e = static_cast<std::uint32_t>(std::stoul(d));
        auto pw = std::make_shared<ExprAst>();
        pw->kind = ExprAst::Kind::Power;
        pw->pos = pos;
        pw->kids = {b};
        pw->exponent = e;
        if (!negative) return pw;
        return node(ExprAst::Kind::Quotient, pos, {constant(Const(1), pos), pw});
    }

    AstPtr base() {
        skip();
        if (at_end()) fail("unexpected end of input");
        std::size_t pos = p_;
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            AstPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(digits());
            std::size_t save = p_;
            skip();
            if (!at_end() && s_[p_] == '/') {
                std::size_t slash = p_++;
                skip();
                if (!at_end() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
                    mpz_class den(digits());
                    if (den == 0) {
                        p_ = slash;
                        throw Error(ErrorKind::DivisionByZero, "zero denominator at position " + std::to_string(slash), slash);
                    }
                    return constant(Const(mpq_class(num, den)), pos);
                }
            }
            p_ = save;
            return constant(Const(mpq_class(num)), pos);
        }
        if (c == '@') {
            ++p_;
            std::size_t start = p_;
            while (!at_end() && (ident_char(s_[p_]) || s_[p_] == '=')) ++p_;
            if (start == p_) fail("expected atom name after '@'");
            return constant(Const::atom(s_.substr(start, p_ - start)), pos);
        }
        if (ident_start(c)) {
            std::size_t start = p_;
            while (!at_end() && ident_char(s_[p_])) ++p_;
            std::string_view id = s_.substr(start, p_ - start);
            if (id == "ln") {
                expect('(');
                AstPtr arg = expr();
                expect(')');
                return node(ExprAst::Kind::Ln, pos, {arg});
            }
            if (id == "i") return constant(Const::i(), pos);
            auto n = std::make_shared<ExprAst>();
            n->kind = ExprAst::Kind::Symbol;
            n->name = std::string(id);
            n->pos = pos;
            if (id == "x") return n;
            if (mode_ == ParseMode::IterLog) {
                p_ = start;
                fail("unknown identifier '" + std::string(id) + "'");
            }
            if (!lookup_ || !lookup_(id)) {
                throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + std::string(id) + "'", start);
            }
            return n;
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

int precedence(ExprAst::Kind k) {
    switch (k) {
        case ExprAst::Kind::Sum:
        case ExprAst::Kind::Difference:
            return 1;
        case ExprAst::Kind::Product:
        case ExprAst::Kind::Quotient:
            return 2;
        case ExprAst::Kind::Negate:
            return 3;
        case ExprAst::Kind::Power:
            return 4;
        default:
            return 5;
    }
}

std::string wrap(const AstPtr& a, int min_prec) {
    std::string t = ast_text(a);
    bool compound_const = a->kind == ExprAst::Kind::Constant && (a->value.is_compound() || t[0] == '-');
    if (precedence(a->kind) < min_prec || (compound_const && min_prec > 1)) return "(" + t + ")";
    return t;
}

}  // namespace

AstPtr parse(std::string_view text, ParseMode mode, const SymbolLookup& lookup) {
    return Parser(text, mode, lookup).parse_all();
}

std::string ast_text(const AstPtr& a) {
    using K = ExprAst::Kind;
    switch (a->kind) {
        case K::Sum:
            return wrap(a->kids[0], 1) + "+" + wrap(a->kids[1], 2);
        case K::Difference:
            return wrap(a->kids[0], 1) + "-" + wrap(a->kids[1], 2);
        case K::Product:
            return wrap(a->kids[0], 2) + "*" + wrap(a->kids[1], 3);
        case K::Quotient:
            return wrap(a->kids[0], 2) + "/" + wrap(a->kids[1], 3);
        case K::Negate:
            return "-" + wrap(a->kids[0], 3);
        case K::Power:
            return wrap(a->kids[0], 5) + "^" + std::to_string(a->exponent);
        case K::Symbol:
            return a->name;
        case K::Constant:
            return a->value.to_string();
        case K::Ln:
            return "ln(" + ast_text(a->kids[0]) + ")";
    }
    return "";
}

RatExpr evaluate(const AstPtr& a, const SymbolLookup& lookup) {
    using K = ExprAst::Kind;
    switch (a->kind) {
        case K::Sum:
            return evaluate(a->kids[0], lookup) + evaluate(a->kids[1], lookup);
        case K::Difference:
            return evaluate(a->kids[0], lookup) - evaluate(a->kids[1], lookup);
        case K::Product:
            return evaluate(a->kids[0], lookup) * evaluate(a->kids[1], lookup);
        case K::Quotient: {
            RatExpr d = evaluate(a->kids[1], lookup);
            if (d.is_zero()) {
                throw Error(ErrorKind::DivisionByZero, "division by zero in '" + ast_text(a) + "'", a->pos);
            }
            return evaluate(a->kids[0], lookup) / d;
        }
        case K::Negate:
            return -evaluate(a->kids[0], lookup);
        case K::Power:
            return evaluate(a->kids[0], lookup).pow(a->exponent);
        case K::Constant:
            return RatExpr(a->value);
        case K::Symbol: {
            if (a->name == "x") return RatExpr::symbol(SymbolTable::instance().x());
            std::optional<SymId> s = lookup ? lookup(a->name) : std::nullopt;
            if (!s) throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + a->name + "'", a->pos);
            return RatExpr::symbol(*s);
        }
        case K::Ln: {
            RatExpr arg = evaluate(a->kids[0], lookup);
            auto bad = [&]() {
                return Error(ErrorKind::NotIterLog,
                             "ln argument is not an iterated logarithm plus a constant: " + ast_text(a), a->pos);
            };
            if (!arg.is_polynomial()) throw bad();
            MPoly p = arg.num().scaled(Const(1) / arg.den().constant_value());
            std::optional<SymId> inner;
            Const shift;
            for (const auto& t : p.terms()) {
                if (t.m.is_one()) {
                    shift = t.c;
                    continue;
                }
                if (inner || t.m.deg != 1 || !t.c.is_one() || !is_logsym(t.m.f[0].first)) throw bad();
                inner = t.m.f[0].first;
            }
            if (!inner) throw bad();
            ConstVec v = sym_info(*inner).vec;
            v.push_back(shift);
            return RatExpr::symbol(SymbolTable::instance().iterlog(v));
        }
    }
    throw Error(ErrorKind::SyntaxError, "malformed expression tree");
}

RatExpr normalize_iterlog(const AstPtr& ast) { return evaluate(ast); }

RatExpr parse_expression(std::string_view text, ParseMode mode, const SymbolLookup& lookup) {
    return evaluate(parse(text, mode, lookup), lookup);
}

}  // namespace dfsub
