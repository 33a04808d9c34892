#include "legendrian/expr_parser.hpp"

#include <cctype>

namespace legendrian {

namespace {

struct Token {
    enum class Kind { number, imag, var, plus, minus, star, slash, caret, lparen, rparen, end };
    Kind kind = Kind::end;
    Rational value;  // for number
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }
    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.pos = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::end;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Token::Kind::plus; ++pos_; return;
            case '-': current_.kind = Token::Kind::minus; ++pos_; return;
            case '*': current_.kind = Token::Kind::star; ++pos_; return;
            case '/': current_.kind = Token::Kind::slash; ++pos_; return;
            case '^': current_.kind = Token::Kind::caret; ++pos_; return;
            case '(': current_.kind = Token::Kind::lparen; ++pos_; return;
            case ')': current_.kind = Token::Kind::rparen; ++pos_; return;
            default: break;
        }
        if (c == 'i') {
            current_.kind = Token::Kind::imag;
            ++pos_;
            return;
        }
        if (c == 'z') {
            current_.kind = Token::Kind::var;
            ++pos_;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string digits = text_.substr(start, pos_ - start);
            Rational v(rational_from_string(digits));
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                std::size_t fstart = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
                if (pos_ == fstart) throw ParseError("digits expected after '.'", pos_);
                std::string frac = text_.substr(fstart, pos_ - fstart);
                Rational scale(1);
                for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
                v += Rational(rational_from_string(frac)) / scale;
            }
            current_.kind = Token::Kind::number;
            current_.value = v;
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        if (lex_.peek().kind != Token::Kind::end)
            throw ParseError("trailing input", lex_.peek().pos);
        return r;
    }

private:
    RationalFunction expr() {
        RationalFunction acc = term();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Token::Kind::minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::star) {
                lex_.take();
                acc = acc * factor();
            } else if (k == Token::Kind::slash) {
                Token t = lex_.take();
                RationalFunction d = factor();
                if (d.is_zero()) throw ParseError("division by the zero function", t.pos);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            return -factor();
        }
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (lex_.peek().kind != Token::Kind::caret) return base;
        Token caret = lex_.take();
        RationalFunction e = factor();  // recursion keeps ^ right-associative
        if (!e.is_constant() || !e.is_polynomial())
            throw ParseError("exponent must be a constant integer", caret.pos);
        GaussianRational c = e.num().coeff(0);
        if (!c.is_real() || c.re().get_den() != 1)
            throw ParseError("non-integer exponent", caret.pos);
        long exp = 0;
        if (!c.re().get_num().fits_slong_p())
            throw ParseError("exponent out of range", caret.pos);
        exp = c.re().get_num().get_si();
        if (exp > 4096 || exp < -4096) throw ParseError("exponent out of range", caret.pos);
        bool negative = exp < 0;
        unsigned mag = static_cast<unsigned>(negative ? -exp : exp);
        if (mag == 0) return RationalFunction(GaussianRational(1));
        RationalFunction acc(GaussianRational(1));
        RationalFunction b = base;
        unsigned e2 = mag;
        while (e2 > 0) {
            if (e2 & 1u) acc = acc * b;
            b = b * b;
            e2 >>= 1u;
        }
        if (!negative) return acc;
        if (acc.is_zero()) throw ParseError("zero raised to a negative power", caret.pos);
        return acc.inverse();
    }

    RationalFunction atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number: return RationalFunction(GaussianRational(t.value));
            case Token::Kind::imag: return RationalFunction(GaussianRational::i());
            case Token::Kind::var: return RationalFunction::variable();
            case Token::Kind::lparen: {
                RationalFunction inner = expr();
                if (lex_.peek().kind != Token::Kind::rparen)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.take();
                return inner;
            }
            default: throw ParseError("expected a literal, 'z', 'i' or '('", t.pos);
        }
    }

    Lexer lex_;
};

}  // namespace

RationalFunction parse_expression(const std::string& text) {
    if (text.empty()) throw ParseError("empty expression", 0);
    return Parser(text).parse();
}

std::string print_expression(const RationalFunction& r, const std::string& var) {
    return r.str(var);
}

}  // namespace legendrian
