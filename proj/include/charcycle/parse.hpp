#pragma once

#include <string>
#include <vector>

#include "charcycle/polynomial.hpp"
#include "charcycle/ring.hpp"

namespace charcycle {

struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")"),
          line(line), col(col) {}
    int line;
    int col;
};

/// Token stream over the input grammar shared by polynomials and job files.
struct Token {
    enum class Kind { Ident, Integer, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text);
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next();
    bool at_end() const { return peek().kind == Token::Kind::End; }
    [[noreturn]] void fail(const std::string& msg) const;

  private:
    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

/// Parse a polynomial in the text grammar: identifiers as variables,
/// integer and rational (`p/q`) literals, `+ - * ^`, parentheses.
/// Implicit multiplication is rejected.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Parser entry used by the job grammar: polynomial up to a stopping
/// punctuation token.
Polynomial parse_polynomial_tokens(Lexer& lexer, const RingPtr& ring);

} // namespace charcycle
