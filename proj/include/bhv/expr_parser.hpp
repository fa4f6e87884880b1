#pragma once

#include <map>
#include <string>
#include <vector>

#include "bhv/freealg.hpp"
#include "bhv/poly.hpp"

namespace bhv {

/// Token stream over one source string, with 1-based line/column positions
/// for error reporting. Handles arbitrary bytes; anything outside the
/// grammar becomes a positioned ParseError.
class Lexer {
public:
    enum class Tok { Int, Name, Plus, Minus, Star, Caret, Slash, LParen,
                     RParen, Colon, Arrow, Newline, End };

    explicit Lexer(const std::string& text, std::size_t line_offset = 0);

    Tok peek() const { return cur_; }
    const std::string& text() const { return text_value_; }
    std::size_t line() const { return tok_line_; }
    std::size_t column() const { return tok_col_; }

    void next();
    void expect(Tok t, const std::string& what);
    [[noreturn]] void fail(const std::string& msg) const;

private:
    void advance_char();
    const std::string src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1, col_ = 1;
    Tok cur_ = Tok::End;
    std::string text_value_;
    std::size_t tok_line_ = 1, tok_col_ = 1;
};

/// Polynomial expression grammar shared by files and the CLI:
///   expr   := [sign] term ((+|-) term)*
///   term   := factor (* factor)*
///   factor := base [^ INT]
///   base   := INT [/ INT] | VAR | ( expr )
/// Implicit multiplication is a syntax error; `/` only over the rationals.
/// Parsing stops cleanly at the first token that cannot extend the
/// expression, so rows of several entries are maximal expressions.
Poly parse_poly_expr(Lexer& lx, const RingPtr& ring,
                     const std::map<std::string, int>& vars);

/// Same grammar with noncommutative products.
FreePoly parse_free_expr(Lexer& lx, const FieldSpec& field, int nvars,
                         const std::map<std::string, int>& vars);

/// True when the current token can begin a new expression.
bool starts_expression(const Lexer& lx);

}  // namespace bhv
