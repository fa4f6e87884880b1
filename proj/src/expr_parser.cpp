#include "bhv/expr_parser.hpp"

#include <cctype>

namespace bhv {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 20;
constexpr std::size_t kMaxWordLength = 1u << 12;

}  // namespace

Lexer::Lexer(const std::string& text, std::size_t line_offset)
    : src_(text), line_(1 + line_offset) {
    next();
}

void Lexer::fail(const std::string& msg) const {
    throw ParseError(msg, tok_line_, tok_col_);
}

void Lexer::advance_char() {
    if (pos_ >= src_.size()) return;
    if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
    } else {
        ++col_;
    }
    ++pos_;
}

void Lexer::next() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\r'))
        advance_char();
    tok_line_ = line_;
    tok_col_ = col_;
    text_value_.clear();
    if (pos_ >= src_.size()) {
        cur_ = Tok::End;
        return;
    }
    char c = src_[pos_];
    if (c == '\n') {
        advance_char();
        cur_ = Tok::Newline;
        return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            text_value_.push_back(src_[pos_]);
            advance_char();
        }
        cur_ = Tok::Int;
        return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
            text_value_.push_back(src_[pos_]);
            advance_char();
        }
        cur_ = Tok::Name;
        return;
    }
    switch (c) {
        case '+': cur_ = Tok::Plus; break;
        case '*': cur_ = Tok::Star; break;
        case '^': cur_ = Tok::Caret; break;
        case '/': cur_ = Tok::Slash; break;
        case '(': cur_ = Tok::LParen; break;
        case ')': cur_ = Tok::RParen; break;
        case ':': cur_ = Tok::Colon; break;
        case '-':
            advance_char();
            if (pos_ < src_.size() && src_[pos_] == '>') {
                advance_char();
                cur_ = Tok::Arrow;
                return;
            }
            cur_ = Tok::Minus;
            return;
        default:
            throw ParseError("unexpected character", tok_line_, tok_col_);
    }
    advance_char();
}

void Lexer::expect(Tok t, const std::string& what) {
    if (cur_ != t) fail("expected " + what);
    next();
}

bool starts_expression(const Lexer& lx) {
    switch (lx.peek()) {
        case Lexer::Tok::Int:
        case Lexer::Tok::Name:
        case Lexer::Tok::LParen:
            return true;
        default:
            return false;
    }
}

namespace {

std::uint32_t parse_exponent(Lexer& lx) {
    if (lx.peek() != Lexer::Tok::Int) lx.fail("expected exponent");
    const std::string& digits = lx.text();
    if (digits.size() > 7) lx.fail("exponent too large");
    std::uint64_t e = std::stoull(digits);
    if (e > kMaxExponent) lx.fail("exponent too large");
    lx.next();
    return static_cast<std::uint32_t>(e);
}

Scalar parse_number(Lexer& lx, const FieldSpec& field) {
    std::string num = lx.text();
    if (num.size() > 10000) lx.fail("numeric literal too long");
    lx.next();
    std::string den;
    if (lx.peek() == Lexer::Tok::Slash) {
        if (field.is_prime_field())
            lx.fail("'/denominator' is only valid over the rationals");
        lx.next();
        if (lx.peek() != Lexer::Tok::Int) lx.fail("expected denominator");
        den = lx.text();
        if (den.size() > 10000) lx.fail("numeric literal too long");
        if (den.find_first_not_of('0') == std::string::npos)
            lx.fail("zero denominator");
        lx.next();
    }
    return Scalar::parse(field, den.empty() ? num : num + "/" + den);
}

template <typename P, typename MakeConst, typename MakeVar, typename PowGuard>
P parse_expr_generic(Lexer& lx, const FieldSpec& field,
                     const std::map<std::string, int>& vars,
                     MakeConst make_const, MakeVar make_var,
                     PowGuard pow_guard) {
    auto parse_base = [&](auto& self_expr) -> P {
        if (lx.peek() == Lexer::Tok::Int) {
            return make_const(parse_number(lx, field));
        }
        if (lx.peek() == Lexer::Tok::Name) {
            auto it = vars.find(lx.text());
            if (it == vars.end()) lx.fail("unknown variable '" + lx.text() + "'");
            lx.next();
            return make_var(it->second);
        }
        if (lx.peek() == Lexer::Tok::LParen) {
            lx.next();
            P inner = self_expr(self_expr);
            lx.expect(Lexer::Tok::RParen, "')'");
            return inner;
        }
        lx.fail("expected a number, variable, or '('");
    };

    auto parse_factor = [&](auto& self_expr) -> P {
        P base = parse_base(self_expr);
        if (lx.peek() == Lexer::Tok::Caret) {
            lx.next();
            std::uint32_t e = parse_exponent(lx);
            pow_guard(base, e, lx);
            base = base.pow(e);
        }
        return base;
    };

    auto parse_term = [&](auto& self_expr) -> P {
        P acc = parse_factor(self_expr);
        while (lx.peek() == Lexer::Tok::Star) {
            lx.next();
            acc = acc * parse_factor(self_expr);
        }
        return acc;
    };

    auto parse_expr = [&](auto& self) -> P {
        bool neg = false;
        if (lx.peek() == Lexer::Tok::Plus || lx.peek() == Lexer::Tok::Minus) {
            neg = lx.peek() == Lexer::Tok::Minus;
            lx.next();
        }
        P acc = parse_term(self);
        if (neg) acc = -acc;
        while (lx.peek() == Lexer::Tok::Plus ||
               lx.peek() == Lexer::Tok::Minus) {
            bool sub = lx.peek() == Lexer::Tok::Minus;
            lx.next();
            P t = parse_term(self);
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    };

    return parse_expr(parse_expr);
}

}  // namespace

Poly parse_poly_expr(Lexer& lx, const RingPtr& ring,
                     const std::map<std::string, int>& vars) {
    auto guard = [&](const Poly& base, std::uint32_t e, Lexer& l) {
        std::uint64_t mx = 1;
        for (const auto& [m, c] : base.terms())
            for (auto v : m) mx = std::max<std::uint64_t>(mx, v);
        if (mx * e > kMaxExponent) l.fail("exponent too large");
        if (base.nterms() > 1 && e > 512)
            l.fail("exponent too large for a sum");
    };
    return parse_expr_generic<Poly>(
        lx, ring->field, vars,
        [&](const Scalar& c) { return Poly::constant(ring, c); },
        [&](int j) { return Poly::variable(ring, j); }, guard);
}

FreePoly parse_free_expr(Lexer& lx, const FieldSpec& field, int nvars,
                         const std::map<std::string, int>& vars) {
    auto guard = [&](const FreePoly& base, std::uint32_t e, Lexer& l) {
        std::uint64_t len = 1;
        if (auto d = base.top_degree())
            len = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(*d));
        if (len * e > kMaxWordLength) l.fail("word too long");
        if (base.terms().size() > 1 && e > 16)
            l.fail("exponent too large for a sum");
    };
    return parse_expr_generic<FreePoly>(
        lx, field, vars,
        [&](const Scalar& c) {
            return FreePoly::one(field, nvars).scaled(c);
        },
        [&](int j) { return FreePoly::variable(field, nvars, j); }, guard);
}

}  // namespace bhv
