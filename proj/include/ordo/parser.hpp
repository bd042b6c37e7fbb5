#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordo/algebra.hpp"
#include "ordo/bigint.hpp"
#include "ordo/normal_form.hpp"
#include "ordo/word.hpp"

namespace ordo {

// Grammar:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' nat)?
//   atom   := 'a' | 'A' | 'a†' | 'ad' | 'I' | integer | '(' expr ')'
// Juxtaposition is the noncommutative product, left to right; whitespace
// separates tokens and is otherwise ignored.

struct ParseError : std::runtime_error {
    std::size_t offset;
    std::string expected;

    ParseError(std::size_t offset_, std::string expected_, const std::string& found)
        : std::runtime_error("parse error at byte " + std::to_string(offset_) + ": expected " +
                             expected_ + ", found " + found),
          offset(offset_),
          expected(std::move(expected_)) {}
};

struct ParseOptions {
    unsigned long max_exponent = 1'000'000;
};

struct Expr {
    enum class Kind { Scalar, Gen, Identity, Sum, Product, Power, Negate };

    Kind kind = Kind::Identity;
    BigInt scalar;                        // Scalar
    Letter letter = Letter::Annihilator;  // Gen
    unsigned long exponent = 0;           // Power
    std::vector<Expr> children;           // Sum/Product operands, Power base, Negate operand
};

namespace detail {

enum class TokenKind { Plus, Minus, Star, Caret, LParen, RParen, Integer, Gen, IdentityI, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::size_t offset = 0;
    std::size_t length = 0;
    Letter letter = Letter::Annihilator;  // Gen
};

inline std::string token_text(TokenKind kind) {
    switch (kind) {
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Integer: return "integer";
        case TokenKind::Gen: return "generator";
        case TokenKind::IdentityI: return "'I'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    std::string_view slice(const Token& t) const { return text_.substr(t.offset, t.length); }

private:
    void advance() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                       text_[pos_] == '\n' || text_[pos_] == '\r')) {
            ++pos_;
        }
        current_ = Token{TokenKind::End, pos_, 0};
        if (pos_ >= text_.size()) return;

        const std::size_t start = pos_;
        const char c = text_[pos_];
        switch (c) {
            case '+': current_ = {TokenKind::Plus, start, 1}; ++pos_; return;
            case '-': current_ = {TokenKind::Minus, start, 1}; ++pos_; return;
            case '*': current_ = {TokenKind::Star, start, 1}; ++pos_; return;
            case '^': current_ = {TokenKind::Caret, start, 1}; ++pos_; return;
            case '(': current_ = {TokenKind::LParen, start, 1}; ++pos_; return;
            case ')': current_ = {TokenKind::RParen, start, 1}; ++pos_; return;
            case 'I': current_ = {TokenKind::IdentityI, start, 1}; ++pos_; return;
            default: break;
        }
        if (c >= '0' && c <= '9') {
            while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
            current_ = {TokenKind::Integer, start, pos_ - start};
            return;
        }
        if (auto letter = scan_letter(text_, pos_)) {
            current_ = {TokenKind::Gen, start, pos_ - start};
            current_.letter = *letter;
            return;
        }
        throw ParseError(start, "a token ('+', '-', '*', '^', '(', ')', generator, 'I', or integer)",
                         "'" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    Parser(std::string_view text, ParseOptions options) : lexer_(text), options_(options) {}

    Expr parse() {
        Expr e = parse_expr();
        if (lexer_.peek().kind != TokenKind::End) {
            throw unexpected("'+', '-', or end of input");
        }
        return e;
    }

private:
    ParseError unexpected(std::string expected) const {
        const Token& t = lexer_.peek();
        const std::string found =
            t.kind == TokenKind::End ? "end of input" : "'" + std::string(lexer_.slice(t)) + "'";
        return ParseError(t.offset, std::move(expected), found);
    }

    static bool starts_factor(TokenKind kind) {
        return kind == TokenKind::Integer || kind == TokenKind::Gen ||
               kind == TokenKind::IdentityI || kind == TokenKind::LParen;
    }

    Expr parse_expr() {
        bool negate_head = false;
        if (lexer_.peek().kind == TokenKind::Minus) {
            lexer_.take();
            negate_head = true;
        }
        Expr head = parse_term();
        if (negate_head) {
            Expr neg;
            neg.kind = Expr::Kind::Negate;
            neg.children.push_back(std::move(head));
            head = std::move(neg);
        }

        if (lexer_.peek().kind != TokenKind::Plus && lexer_.peek().kind != TokenKind::Minus) {
            return head;
        }
        Expr sum;
        sum.kind = Expr::Kind::Sum;
        sum.children.push_back(std::move(head));
        while (lexer_.peek().kind == TokenKind::Plus || lexer_.peek().kind == TokenKind::Minus) {
            const bool minus = lexer_.take().kind == TokenKind::Minus;
            Expr term = parse_term();
            if (minus) {
                Expr neg;
                neg.kind = Expr::Kind::Negate;
                neg.children.push_back(std::move(term));
                term = std::move(neg);
            }
            sum.children.push_back(std::move(term));
        }
        return sum;
    }

    Expr parse_term() {
        Expr head = parse_factor();
        if (lexer_.peek().kind != TokenKind::Star && !starts_factor(lexer_.peek().kind)) {
            return head;
        }
        Expr product;
        product.kind = Expr::Kind::Product;
        product.children.push_back(std::move(head));
        while (true) {
            if (lexer_.peek().kind == TokenKind::Star) {
                lexer_.take();
            } else if (!starts_factor(lexer_.peek().kind)) {
                break;
            }
            product.children.push_back(parse_factor());
        }
        return product;
    }

    Expr parse_factor() {
        Expr base = parse_atom();
        if (lexer_.peek().kind != TokenKind::Caret) return base;
        lexer_.take();
        if (lexer_.peek().kind != TokenKind::Integer) {
            throw unexpected("a nonnegative integer exponent");
        }
        const Token t = lexer_.take();
        const std::string digits(lexer_.slice(t));
        unsigned long exponent = 0;
        try {
            exponent = std::stoul(digits);
        } catch (const std::out_of_range&) {
            exponent = options_.max_exponent + 1;
        }
        if (exponent > options_.max_exponent) {
            throw ParseError(t.offset,
                             "exponent <= " + std::to_string(options_.max_exponent), digits);
        }
        Expr pow;
        pow.kind = Expr::Kind::Power;
        pow.exponent = exponent;
        pow.children.push_back(std::move(base));
        return pow;
    }

    Expr parse_atom() {
        const Token& t = lexer_.peek();
        Expr e;
        switch (t.kind) {
            case TokenKind::Integer: {
                const Token tok = lexer_.take();
                e.kind = Expr::Kind::Scalar;
                e.scalar = BigInt(std::string(lexer_.slice(tok)));
                return e;
            }
            case TokenKind::Gen: {
                const Token tok = lexer_.take();
                e.kind = Expr::Kind::Gen;
                e.letter = tok.letter;
                return e;
            }
            case TokenKind::IdentityI:
                lexer_.take();
                e.kind = Expr::Kind::Identity;
                return e;
            case TokenKind::LParen: {
                lexer_.take();
                e = parse_expr();
                if (lexer_.peek().kind != TokenKind::RParen) throw unexpected("')'");
                lexer_.take();
                return e;
            }
            default:
                throw unexpected("an atom (generator, 'I', integer, or '(')");
        }
    }

    Lexer lexer_;
    ParseOptions options_;
};

}  // namespace detail

inline Expr parse(std::string_view text, ParseOptions options = {}) {
    return detail::Parser(text, options).parse();
}

inline NormalForm eval(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Scalar:
            return e.scalar == 0 ? NormalForm{} : NormalForm{{{0, 0}, e.scalar}};
        case Expr::Kind::Gen:
            return e.letter == Letter::Creator ? NormalForm{{{1, 0}, 1}} : NormalForm{{{0, 1}, 1}};
        case Expr::Kind::Identity:
            return NormalForm::identity();
        case Expr::Kind::Sum: {
            NormalForm acc;
            for (const Expr& child : e.children) acc = add(acc, eval(child));
            return acc;
        }
        case Expr::Kind::Product: {
            NormalForm acc = eval(e.children.front());
            for (std::size_t i = 1; i < e.children.size(); ++i) {
                acc = multiply(acc, eval(e.children[i]));
            }
            return acc;
        }
        case Expr::Kind::Power:
            return power(eval(e.children.front()), e.exponent);
        case Expr::Kind::Negate:
            return scalar_mul(-1, eval(e.children.front()));
    }
    throw std::logic_error("eval: bad node");
}

inline NormalForm eval_text(std::string_view text, ParseOptions options = {}) {
    return eval(parse(text, options));
}

}  // namespace ordo
