#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <wwords/dsl/ast.hpp>
#include <wwords/errors.hpp>

namespace wwords::dsl
{

enum class TokenKind { integer, identifier, plus, minus, star, slash, caret, lparen, rparen, comma, arrow, end };

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    int line = 1;
    int column = 1;
};

inline std::string describe(const Token &t)
{
    if (t.kind == TokenKind::end) {
        return "end of input";
    }
    return "'" + t.text + "'";
}

inline std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };
    while (i < src.size()) {
        const char ch = src[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = column;
        std::size_t len = 1;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) {
                ++len;
            }
            t.kind = TokenKind::integer;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i + len < src.size()
                   && (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_')) {
                ++len;
            }
            t.kind = TokenKind::identifier;
        } else if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            len = 2;
            t.kind = TokenKind::arrow;
        } else {
            switch (ch) {
            case '+':
                t.kind = TokenKind::plus;
                break;
            case '-':
                t.kind = TokenKind::minus;
                break;
            case '*':
                t.kind = TokenKind::star;
                break;
            case '/':
                t.kind = TokenKind::slash;
                break;
            case '^':
                t.kind = TokenKind::caret;
                break;
            case '(':
                t.kind = TokenKind::lparen;
                break;
            case ')':
                t.kind = TokenKind::rparen;
                break;
            case ',':
                t.kind = TokenKind::comma;
                break;
            default:
                throw SyntaxError(line, column, "an expression", "'" + std::string(1, ch) + "'");
            }
        }
        t.text = std::string(src.substr(i, len));
        advance(len);
        out.push_back(std::move(t));
    }
    out.push_back(Token{TokenKind::end, "", line, column});
    return out;
}

// Recursive descent over
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := '-' unary | power
//   power    := atom ('^' exponent)?
//   exponent := '-' exponent | atom
//   atom     := integer | identifier | identifier '(' args ')' | '(' expr ')'
//   args     := arg (',' arg)*
//   arg      := expr ('->' expr)?      mappings only inside subst
class Parser
{
public:
    explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        if (peek().kind != TokenKind::end) {
            fail("an operator or end of input");
        }
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token &peek() const { return tokens_[pos_]; }
    const Token &take() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string &expected) const
    {
        const Token &t = peek();
        throw SyntaxError(t.line, t.column, expected, describe(t));
    }

    void expect(TokenKind kind, const std::string &what)
    {
        if (peek().kind != kind) {
            fail(what);
        }
        take();
    }

    NodePtr expr()
    {
        NodePtr lhs = term();
        while (peek().kind == TokenKind::plus || peek().kind == TokenKind::minus) {
            const Token op = take();
            NodePtr rhs = term();
            lhs = make_node(op.kind == TokenKind::plus ? NodeKind::add : NodeKind::subtract, {lhs, rhs}, op.line,
                            op.column);
        }
        return lhs;
    }

    NodePtr term()
    {
        NodePtr lhs = unary();
        while (peek().kind == TokenKind::star || peek().kind == TokenKind::slash) {
            const Token op = take();
            NodePtr rhs = unary();
            lhs = make_node(op.kind == TokenKind::star ? NodeKind::multiply : NodeKind::divide, {lhs, rhs}, op.line,
                            op.column);
        }
        return lhs;
    }

    NodePtr unary()
    {
        if (peek().kind == TokenKind::minus) {
            const Token op = take();
            return make_node(NodeKind::negate, {unary()}, op.line, op.column);
        }
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (peek().kind == TokenKind::caret) {
            const Token op = take();
            return make_node(NodeKind::power, {base, exponent()}, op.line, op.column);
        }
        return base;
    }

    NodePtr exponent()
    {
        if (peek().kind == TokenKind::minus) {
            const Token op = take();
            return make_node(NodeKind::negate, {exponent()}, op.line, op.column);
        }
        return atom();
    }

    NodePtr atom()
    {
        const Token &t = peek();
        switch (t.kind) {
        case TokenKind::integer: {
            const Token tok = take();
            return make_node(NodeKind::integer, {}, tok.line, tok.column, {}, BigInt(tok.text));
        }
        case TokenKind::identifier: {
            const Token tok = take();
            if (peek().kind == TokenKind::lparen) {
                return call(tok);
            }
            return make_node(NodeKind::name, {}, tok.line, tok.column, tok.text);
        }
        case TokenKind::lparen: {
            take();
            NodePtr e = expr();
            expect(TokenKind::rparen, "')'");
            return e;
        }
        default:
            fail("an integer, identifier or '('");
        }
    }

    NodePtr call(const Token &name)
    {
        const FunctionSignature *sig = find_function(name.text);
        if (sig == nullptr) {
            throw UnknownIdentifier("unknown function '" + name.text + "' at " + std::to_string(name.line) + ":"
                                    + std::to_string(name.column));
        }
        take(); // '('
        std::vector<NodePtr> args;
        const bool maps_allowed = name.text == "subst";
        while (true) {
            NodePtr a = expr();
            if (peek().kind == TokenKind::arrow) {
                const Token op = peek();
                if (!maps_allowed || args.empty()) {
                    fail("',' or ')'");
                }
                take();
                a = make_node(NodeKind::mapping, {a, expr()}, op.line, op.column);
            }
            args.push_back(std::move(a));
            if (peek().kind == TokenKind::comma) {
                take();
                continue;
            }
            break;
        }
        const auto count = static_cast<int>(args.size());
        if (peek().kind == TokenKind::rparen && count < sig->min_args) {
            fail("',' (" + name.text + " takes at least " + std::to_string(sig->min_args) + " arguments)");
        }
        if (sig->max_args >= 0 && count > sig->max_args) {
            const NodePtr &extra = args[static_cast<std::size_t>(sig->max_args)];
            throw SyntaxError(extra->line, extra->column,
                              "')' (" + name.text + " takes at most " + std::to_string(sig->max_args) + " arguments)",
                              "an extra argument");
        }
        expect(TokenKind::rparen, "',' or ')'");
        return make_node(NodeKind::call, std::move(args), name.line, name.column, name.text);
    }
};

inline NodePtr parse(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace wwords::dsl
