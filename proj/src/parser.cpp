#include "formint/parser.hpp"

#include <cctype>

#include "formint/errors.hpp"

namespace formint {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cl = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      default:
        throw ParseError(l, cl, {"number", "identifier", "operator"}, std::string("'") + c + "'");
    }
    out.push_back({k, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, RingPtr ring, int nform) : toks_(lex(src)), ring_(std::move(ring)), nform_(nform) {}

  ParsedValue parse() {
    ParsedValue v = expr();
    if (peek().kind != Tok::End) fail({"operator", "end of input"});
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, std::move(expected), found);
  }

  void expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail({what});
    ++pos_;
  }

  ParsedValue scalar(const RatFunc& f) const {
    ParsedValue v;
    v.scalar = f;
    return v;
  }

  DiffForm as_form(const ParsedValue& v) const {
    return v.is_form ? v.form : DiffForm::scalar(ring_, nform_, v.scalar);
  }

  ParsedValue add(const ParsedValue& a, const ParsedValue& b, bool subtract, const Token& at) const {
    if (!a.is_form && !b.is_form) return scalar(subtract ? a.scalar - b.scalar : a.scalar + b.scalar);
    DiffForm x = as_form(a), y = as_form(b);
    if (x.degree() != y.degree() && !x.is_zero() && !y.is_zero()) {
      throw ParseError(at.line, at.col, {"terms of equal form degree"}, "mixed degrees");
    }
    ParsedValue v;
    v.is_form = true;
    v.form = subtract ? x - y : x + y;
    if (v.form.is_zero()) v.form = DiffForm(ring_, nform_, std::max(x.degree(), y.degree()));
    return v;
  }

  ParsedValue expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    ParsedValue v = term();
    if (negate) {
      if (v.is_form) {
        v.form = -v.form;
      } else {
        v.scalar = -v.scalar;
      }
    }
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const Token& op = next();
      ParsedValue rhs = term();
      v = add(v, rhs, op.kind == Tok::Minus, op);
    }
    return v;
  }

  ParsedValue term() {
    ParsedValue v = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token op = next();
      ParsedValue rhs = factor();
      if (op.kind == Tok::Star) {
        if (!v.is_form && !rhs.is_form) {
          v.scalar = v.scalar * rhs.scalar;
        } else {
          DiffForm w = wedge(as_form(v), as_form(rhs));
          v.is_form = true;
          v.form = w;
        }
      } else {
        if (rhs.is_form) throw ParseError(op.line, op.col, {"scalar divisor"}, "differential form");
        if (rhs.scalar.is_zero()) throw ParseError(op.line, op.col, {"nonzero divisor"}, "zero");
        if (v.is_form) {
          v.form = v.form * rhs.scalar.inverse();
        } else {
          v.scalar = v.scalar / rhs.scalar;
        }
      }
    }
    return v;
  }

  ParsedValue factor() {
    ParsedValue v = base();
    if (peek().kind == Tok::Caret) {
      const Token op = next();
      if (peek().kind != Tok::Int) fail({"unsigned integer exponent"});
      const Token e = next();
      if (v.is_form) throw ParseError(op.line, op.col, {"scalar base"}, "differential form");
      if (e.text.size() > 4) throw ParseError(e.line, e.col, {"exponent below 10000"}, e.text);
      v.scalar = v.scalar.pow(std::stoi(e.text));
    }
    return v;
  }

  ParsedValue base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        next();
        Rational q(Integer(t.text));
        if (peek().kind == Tok::Slash && toks_[pos_ + 1].kind == Tok::Int) {
          next();
          const Token& d = next();
          Integer den(d.text);
          if (den == 0) throw ParseError(d.line, d.col, {"nonzero denominator"}, "0");
          q /= Rational(den);
        }
        return scalar(RatFunc(MPoly(ring_, q)));
      }
      case Tok::LParen: {
        next();
        ParsedValue v = expr();
        expect(Tok::RParen, "')'");
        return v;
      }
      case Tok::Ident: {
        if (t.text == "d" && toks_[pos_ + 1].kind == Tok::LParen && ring_->index_of("d") < 0) return differential();
        Var v = ring_->index_of(t.text);
        if (v < 0) fail({"variable"});
        next();
        return scalar(RatFunc(MPoly::var(ring_, v)));
      }
      default:
        fail({"number", "identifier", "'('"});
    }
  }

  ParsedValue differential() {
    next();
    next();
    std::vector<int> idx;
    while (true) {
      const Token& t = peek();
      Var v = t.kind == Tok::Ident ? ring_->index_of(t.text) : -1;
      if (v < 0 || v >= nform_) fail({"form variable"});
      next();
      idx.push_back(v);
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::RParen, "',' or ')'");
      break;
    }
    ParsedValue out;
    out.is_form = true;
    out.form = DiffForm::monomial(ring_, nform_, idx, RatFunc(MPoly(ring_, Rational(1))));
    return out;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  RingPtr ring_;
  int nform_;
};

}  // namespace

ParsedValue parse_expression(std::string_view src, const RingPtr& ring, int nform_vars) {
  return Parser(src, ring, nform_vars).parse();
}

RatFunc parse_ratfunc(std::string_view src, const RingPtr& ring) {
  ParsedValue v = parse_expression(src, ring, 0);
  return v.scalar;
}

DiffForm parse_form(std::string_view src, const RingPtr& ring, int nform_vars) {
  ParsedValue v = parse_expression(src, ring, nform_vars);
  if (v.is_form) return v.form;
  return DiffForm::scalar(ring, nform_vars, v.scalar);
}

MPoly parse_poly(std::string_view src, const RingPtr& ring) {
  RatFunc f = parse_ratfunc(src, ring);
  if (!f.is_polynomial()) throw PreconditionViolated("expected a polynomial, got " + f.to_string());
  return f.num() * (1 / f.den().constant_value());
}

}  // namespace formint
