#include "parser.hpp"

#include <cctype>
#include <sstream>

namespace noether {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
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
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::end, "", start};
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      current_ = {Tok::number, text_.substr(start, pos_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      current_ = {Tok::ident, text_.substr(start, pos_ - start), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Tok::plus, "+", start}; return;
      case '-': current_ = {Tok::minus, "-", start}; return;
      case '*': current_ = {Tok::star, "*", start}; return;
      case '/': current_ = {Tok::slash, "/", start}; return;
      case '^': current_ = {Tok::caret, "^", start}; return;
      case '(': current_ = {Tok::lparen, "(", start}; return;
      case ')': current_ = {Tok::rparen, ")", start}; return;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token current_{Tok::end, "", 0};
};

class Parser {
 public:
  Parser(const std::string& text, const ContextPtr& ctx) : lex_(text), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial p = expression();
    const Token& t = lex_.peek();
    if (t.kind != Tok::end) {
      if (t.kind == Tok::ident || t.kind == Tok::number || t.kind == Tok::lparen)
        throw ParseError("missing operator (implicit multiplication is not allowed)", t.pos);
      throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
    return p;
  }

 private:
  Polynomial expression() {
    Polynomial acc = signed_term();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::plus) {
        lex_.take();
        acc = acc + term();
      } else if (k == Tok::minus) {
        lex_.take();
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial signed_term() {
    int sign = 1;
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      if (lex_.take().kind == Tok::minus) sign = -sign;
    }
    Polynomial t = term();
    return sign < 0 ? -t : t;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::star) {
        lex_.take();
        acc = acc * factor();
      } else if (k == Tok::slash) {
        Token slash = lex_.take();
        Polynomial d = factor();
        if (d.is_zero()) throw ParseError("division by zero", slash.pos);
        if (!d.is_constant())
          throw ParseError("'/' needs a constant divisor", slash.pos);
        acc = acc.scaled(1 / d.terms().front().coeff);
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lex_.peek().kind == Tok::caret) {
      Token caret = lex_.take();
      Token e = lex_.peek();
      if (e.kind != Tok::number)
        throw ParseError("exponent must be a non-negative integer", caret.pos);
      lex_.take();
      unsigned long exp = 0;
      try {
        exp = std::stoul(e.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", e.pos);
      }
      if (exp > 10000) throw ParseError("exponent out of range", e.pos);
      return base.pow(static_cast<unsigned>(exp));
    }
    return base;
  }

  Polynomial primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::number:
        return Polynomial::constant(ctx_, rational_from_string(t.text));
      case Tok::ident: {
        auto idx = ctx_->index_of(t.text);
        if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return Polynomial::variable(ctx_, *idx);
      }
      case Tok::lparen: {
        Polynomial p = expression();
        Token close = lex_.take();
        if (close.kind != Tok::rparen) throw ParseError("expected ')'", close.pos);
        return p;
      }
      case Tok::minus:
      case Tok::plus: {
        // unary sign inside a product, e.g. 2*-x is rejected; signs belong to terms
        throw ParseError("unexpected sign", t.pos);
      }
      default:
        throw ParseError("expected a number, variable or '('", t.pos);
    }
  }

  Lexer lex_;
  const ContextPtr& ctx_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
  return Parser(text, ctx).parse();
}

std::string to_string(const Monomial& m, const VariableContext& ctx) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!first) os << "*";
    os << ctx.name(i);
    if (m.exp(i) > 1) os << "^" << m.exp(i);
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.mono.is_one()) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << "*";
      os << to_string(t.mono, *p.ctx());
    }
    first = false;
  }
  return os.str();
}

}  // namespace noether
