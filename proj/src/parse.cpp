#include "charcycle/parse.hpp"

#include <cctype>

namespace charcycle {

Lexer::Lexer(const std::string& text) {
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        if (c == '#') { // comment to end of line
            while (i < text.size() && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = Token::Kind::Ident;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                tok.text += text[i];
                advance(text[i]);
                ++i;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = Token::Kind::Integer;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                tok.text += text[i];
                advance(text[i]);
                ++i;
            }
        } else if (c == '.' && i + 1 < text.size() && text[i + 1] == '.') {
            tok.kind = Token::Kind::Punct;
            tok.text = "..";
            advance(c);
            advance(c);
            i += 2;
        } else if (std::string("+-*^/(),;[]{}=").find(c) != std::string::npos) {
            tok.kind = Token::Kind::Punct;
            tok.text = std::string(1, c);
            advance(c);
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        tokens_.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.col = col;
    tokens_.push_back(std::move(end));
}

const Token& Lexer::next() {
    const Token& t = tokens_[pos_];
    if (t.kind != Token::Kind::End)
        ++pos_;
    return t;
}

void Lexer::fail(const std::string& msg) const {
    const Token& t = peek();
    std::string what = msg;
    if (t.kind == Token::Kind::End)
        what += " at end of input";
    else
        what += " at '" + t.text + "'";
    throw ParseError(what, t.line, t.col);
}

namespace {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' nat)?
// base   := ident | number ['/' number] | '(' expr ')'
class PolyParser {
  public:
    PolyParser(Lexer& lexer, const RingPtr& ring) : lex_(lexer), ring_(ring) {}

    Polynomial expr() {
        bool negate = false;
        if (is_punct("-")) {
            lex_.next();
            negate = true;
        }
        Polynomial p = term();
        if (negate)
            p = -p;
        while (is_punct("+") || is_punct("-")) {
            bool minus = lex_.next().text == "-";
            Polynomial q = term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

  private:
    Polynomial term() {
        Polynomial p = factor();
        while (is_punct("*")) {
            lex_.next();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial p = base();
        if (is_punct("^")) {
            lex_.next();
            if (lex_.peek().kind != Token::Kind::Integer)
                lex_.fail("expected integer exponent");
            p = p.pow(std::stoi(lex_.next().text));
        }
        return p;
    }

    Polynomial base() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Ident) {
            int idx = ring_->find(t.text);
            if (idx < 0)
                lex_.fail("unknown variable");
            lex_.next();
            return Polynomial::variable(ring_, idx);
        }
        if (t.kind == Token::Kind::Integer) {
            mpz_class num(lex_.next().text);
            if (is_punct("/")) {
                lex_.next();
                if (lex_.peek().kind != Token::Kind::Integer)
                    lex_.fail("expected denominator");
                mpz_class den(lex_.next().text);
                if (den == 0)
                    lex_.fail("zero denominator");
                Rational q(num, den);
                q.canonicalize();
                return Polynomial::constant(ring_, q);
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        if (is_punct("(")) {
            lex_.next();
            Polynomial p = expr();
            if (!is_punct(")"))
                lex_.fail("expected ')'");
            lex_.next();
            return p;
        }
        lex_.fail("expected polynomial");
    }

    bool is_punct(const char* s) const {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == s;
    }

    Lexer& lex_;
    const RingPtr& ring_;
};

} // namespace

Polynomial parse_polynomial_tokens(Lexer& lexer, const RingPtr& ring) {
    return PolyParser(lexer, ring).expr();
}

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    Lexer lexer(text);
    Polynomial p = parse_polynomial_tokens(lexer, ring);
    if (!lexer.at_end())
        lexer.fail("unexpected trailing input");
    return p;
}

} // namespace charcycle
