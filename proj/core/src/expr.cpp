#include "pmech/expr.hpp"

#include <cctype>

namespace pmech {

namespace {

enum class Tok { number, plus, minus, star, slash, caret, lparen, rparen, var, hbar, imag, end };

struct Token {
    Tok kind;
    SourcePos pos;
    std::string text;
    VarId var;
    Hbar hbar = Hbar::h1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            SourcePos at = pos_;
            if (idx_ >= src_.size()) {
                out.push_back({Tok::end, at, "", {}, Hbar::h1});
                return out;
            }
            char c = src_[idx_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string digits;
                while (idx_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[idx_]))) digits += advance();
                out.push_back({Tok::number, at, digits, {}, Hbar::h1});
                continue;
            }
            switch (c) {
                case '+': out.push_back(single(Tok::plus)); continue;
                case '-': out.push_back(single(Tok::minus)); continue;
                case '*': out.push_back(single(Tok::star)); continue;
                case '/': out.push_back(single(Tok::slash)); continue;
                case '^': out.push_back(single(Tok::caret)); continue;
                case '(': out.push_back(single(Tok::lparen)); continue;
                case ')': out.push_back(single(Tok::rparen)); continue;
                case 'i': out.push_back(single(Tok::imag)); continue;
                default: break;
            }
            if (c == 'q' || c == 'p') {
                advance();
                Token t{Tok::var, at, std::string(1, c), {}, Hbar::h1};
                t.var.kind = c == 'q' ? Kind::q : Kind::p;
                if (idx_ >= src_.size() || (src_[idx_] != '1' && src_[idx_] != '2'))
                    throw ParseError("expected sector digit 1 or 2 after '" + std::string(1, c) + "'", pos_.line,
                                     pos_.column, "'1' or '2'");
                t.var.sector = advance() - '0';
                t.var.index = 1;
                if (idx_ < src_.size() && src_[idx_] == '_') {
                    advance();
                    std::string digits;
                    while (idx_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[idx_])))
                        digits += advance();
                    if (digits.empty())
                        throw ParseError("expected index after '_'", pos_.line, pos_.column, "integer");
                    if (digits.size() > 6 || std::stoi(digits) == 0)
                        throw ParseError("variable index must be between 1 and 999999", at.line, at.column,
                                         "positive index");
                    t.var.index = std::stoi(digits);
                }
                out.push_back(t);
                continue;
            }
            if (c == 'h') {
                advance();
                Token t{Tok::hbar, at, "h", {}, Hbar::h1};
                if (idx_ < src_.size() && (src_[idx_] == '1' || src_[idx_] == '2'))
                    t.hbar = advance() == '1' ? Hbar::h1 : Hbar::h2;
                out.push_back(t);
                continue;
            }
            throw ParseError(std::string("unexpected character '") + c + "'", at.line, at.column,
                             "integer, variable, h1/h2/h, 'i', '(' or operator");
        }
    }

private:
    char advance() {
        char c = src_[idx_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip_space() {
        while (idx_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[idx_]))) advance();
    }

    Token single(Tok kind) {
        SourcePos at = pos_;
        std::string text(1, advance());
        return {kind, at, text, {}, Hbar::h1};
    }

    std::string_view src_;
    std::size_t idx_ = 0;
    SourcePos pos_;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprNode parse_all() {
        ExprNode e = expr();
        if (peek().kind != Tok::end) fail("operator or end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[at_]; }
    const Token& take() { return toks_[at_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
        throw ParseError("parse error at " + std::to_string(t.pos.line) + ":" + std::to_string(t.pos.column) +
                             ": unexpected " + got + ", expected " + expected,
                         t.pos.line, t.pos.column, expected);
    }

    static bool starts_base(Tok k) {
        return k == Tok::number || k == Tok::var || k == Tok::hbar || k == Tok::imag || k == Tok::lparen;
    }

    static ExprNode binary(ExprNode::Type type, SourcePos pos, ExprNode lhs, ExprNode rhs) {
        ExprNode n;
        n.type = type;
        n.pos = pos;
        n.children.push_back(std::move(lhs));
        n.children.push_back(std::move(rhs));
        return n;
    }

    ExprNode expr() {
        ExprNode lhs = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const Token& op = take();
            ExprNode rhs = term();
            lhs = binary(op.kind == Tok::plus ? ExprNode::Type::add : ExprNode::Type::sub, op.pos, std::move(lhs),
                         std::move(rhs));
        }
        return lhs;
    }

    ExprNode term() {
        ExprNode lhs = factor();
        while (true) {
            Tok k = peek().kind;
            if (k == Tok::star || k == Tok::slash) {
                const Token& op = take();
                ExprNode rhs = factor();
                lhs = binary(op.kind == Tok::star ? ExprNode::Type::mul : ExprNode::Type::div, op.pos, std::move(lhs),
                             std::move(rhs));
            } else if (starts_base(k)) {
                SourcePos pos = peek().pos;
                ExprNode rhs = factor();
                lhs = binary(ExprNode::Type::mul, pos, std::move(lhs), std::move(rhs));
            } else {
                return lhs;
            }
        }
    }

    ExprNode factor() {
        if (peek().kind == Tok::minus) {
            ExprNode n;
            n.type = ExprNode::Type::neg;
            n.pos = take().pos;
            n.children.push_back(factor());
            return n;
        }
        ExprNode b = base();
        if (peek().kind == Tok::caret) {
            SourcePos pos = take().pos;
            if (peek().kind != Tok::number) fail("unsigned integer exponent");
            const Token& num = take();
            if (num.text.size() > 4) fail("exponent below 10000");
            ExprNode n;
            n.type = ExprNode::Type::pow;
            n.pos = pos;
            n.exponent = static_cast<unsigned>(std::stoul(num.text));
            n.children.push_back(std::move(b));
            return n;
        }
        return b;
    }

    ExprNode base() {
        const Token& t = peek();
        ExprNode n;
        n.pos = t.pos;
        switch (t.kind) {
            case Tok::number:
                take();
                n.type = ExprNode::Type::rational;
                n.value = Rational(mpz_class(t.text));
                return n;
            case Tok::imag:
                take();
                n.type = ExprNode::Type::imaginary;
                return n;
            case Tok::var:
                take();
                n.type = ExprNode::Type::variable;
                n.var = t.var;
                return n;
            case Tok::hbar:
                take();
                n.type = ExprNode::Type::hbar;
                n.hbar = t.hbar;
                return n;
            case Tok::lparen: {
                take();
                n.type = ExprNode::Type::paren;
                n.children.push_back(expr());
                if (peek().kind != Tok::rparen) fail("')'");
                take();
                return n;
            }
            default: fail("integer, variable, h1/h2/h, 'i' or '('");
        }
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

}  // namespace

ExprNode parse(std::string_view input) { return Parser(Lexer(input).run()).parse_all(); }

Symbol lower(const ExprNode& ast, unsigned n) {
    using T = ExprNode::Type;
    switch (ast.type) {
        case T::rational: return Symbol(n, RationalFunction(ast.value));
        case T::imaginary: return Symbol(n, RationalFunction::i());
        case T::hbar: return Symbol(n, RationalFunction::variable(ast.hbar));
        case T::variable:
            if (static_cast<unsigned>(ast.var.index) > n)
                throw IndexOutOfRange("variable " + ast.var.name() + " at " + std::to_string(ast.pos.line) + ":" +
                                      std::to_string(ast.pos.column) + " exceeds n=" + std::to_string(n));
            return Symbol::variable(n, ast.var);
        case T::add: return lower(ast.children[0], n) + lower(ast.children[1], n);
        case T::sub: return lower(ast.children[0], n) - lower(ast.children[1], n);
        case T::mul: return lower(ast.children[0], n) * lower(ast.children[1], n);
        case T::div: {
            Symbol den = lower(ast.children[1], n);
            bool scalar = den.is_zero() || (den.terms().size() == 1 && den.terms().begin()->first.is_one());
            if (!scalar)
                throw ParseError("division by an expression containing phase variables at " +
                                     std::to_string(ast.pos.line) + ":" + std::to_string(ast.pos.column),
                                 ast.pos.line, ast.pos.column, "divisor in h1, h2 and constants only");
            if (den.is_zero())
                throw ParseError("division by zero at " + std::to_string(ast.pos.line) + ":" +
                                     std::to_string(ast.pos.column),
                                 ast.pos.line, ast.pos.column, "nonzero divisor");
            return lower(ast.children[0], n) * den.terms().begin()->second.inverse();
        }
        case T::pow: return lower(ast.children[0], n).pow(ast.exponent);
        case T::neg: return -lower(ast.children[0], n);
        case T::paren: return lower(ast.children[0], n);
    }
    return Symbol(n);
}

RationalFunction parse_coefficient(std::string_view text) {
    ExprNode ast = parse(text);
    Symbol s = lower(ast, 1);
    if (s.is_zero()) return {};
    if (s.terms().size() != 1 || !s.terms().begin()->first.is_one())
        throw ParseError("coefficient must not contain phase variables", 1, 1, "expression in h1, h2");
    return s.terms().begin()->second;
}

}  // namespace pmech
