#include "gwalab/expr.hpp"

#include <cctype>

#include "gwalab/errors.hpp"

namespace gwalab {

namespace {

struct Token {
  enum class Kind { End, Number, Name, Symbol };
  Kind kind = Kind::End;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(const SourceText& src) : text_(src.text), pos_(src.pos) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  bool accept(const std::string& symbol) {
    if (current_.kind != Token::Kind::Symbol || current_.text != symbol) return false;
    advance();
    return true;
  }
  void expect(const std::string& symbol) {
    if (!accept(symbol)) fail("expected '" + symbol + "'");
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, current_.pos.line, current_.pos.column);
  }

 private:
  void advance() {
    while (i_ < text_.size()) {
      const char c = text_[i_];
      if (c == '#') {
        while (i_ < text_.size() && text_[i_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        step();
      } else {
        break;
      }
    }
    current_ = Token{};
    current_.pos = pos_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current_.kind = Token::Kind::Number;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
        current_.text += text_[i_];
        step();
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      current_.kind = Token::Kind::Name;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
        current_.text += text_[i_];
        step();
      }
    } else if (std::string("+-*/^()[],;").find(c) != std::string::npos) {
      current_.kind = Token::Kind::Symbol;
      current_.text = std::string(1, c);
      step();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos_.line, pos_.column);
    }
  }
  void step() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  const std::string& text_;
  SourcePos pos_;
  std::size_t i_ = 0;
  Token current_;
};

ExprPtr node(Expr::Kind kind, SourcePos pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(const SourceText& src) : lex_(src) {}

  ExprPtr expression() {
    ExprPtr lhs = term();
    for (;;) {
      const SourcePos pos = lex_.peek().pos;
      if (lex_.accept("+")) {
        lhs = node(Expr::Kind::Add, pos, {lhs, term()});
      } else if (lex_.accept("-")) {
        lhs = node(Expr::Kind::Sub, pos, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  std::vector<ExprPtr> word() {
    std::vector<ExprPtr> gens;
    do {
      gens.push_back(generator());
    } while (lex_.accept(";"));
    finish();
    return gens;
  }

  void finish() {
    if (lex_.peek().kind != Token::Kind::End) lex_.fail("unexpected '" + lex_.peek().text + "'");
  }

 private:
  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      const SourcePos pos = lex_.peek().pos;
      if (lex_.accept("*")) {
        lhs = node(Expr::Kind::Mul, pos, {lhs, unary()});
      } else if (lex_.accept("/")) {
        lhs = node(Expr::Kind::Div, pos, {lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    const SourcePos pos = lex_.peek().pos;
    if (lex_.accept("-")) return node(Expr::Kind::Neg, pos, {unary()});
    if (lex_.accept("+")) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    const SourcePos pos = lex_.peek().pos;
    if (!lex_.accept("^")) return base;
    if (lex_.peek().kind != Token::Kind::Number) lex_.fail("exponent must be a nonnegative integer");
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Pow;
    e->pos = pos;
    e->value = Rational(lex_.take().text);
    e->args = {base};
    return e;
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->pos = t.pos;
      e->value = Rational(lex_.take().text);
      return e;
    }
    if (t.kind == Token::Kind::Name) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Name;
      e->pos = t.pos;
      e->name = lex_.take().text;
      return e;
    }
    if (lex_.accept("(")) {
      ExprPtr inner = expression();
      lex_.expect(")");
      return inner;
    }
    lex_.fail(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  ExprPtr list() {
    const SourcePos pos = lex_.peek().pos;
    lex_.expect("[");
    std::vector<ExprPtr> items;
    do {
      items.push_back(lex_.peek().kind == Token::Kind::Symbol && lex_.peek().text == "[" ? list()
                                                                                       : expression());
    } while (lex_.accept(","));
    lex_.expect("]");
    return node(Expr::Kind::List, pos, std::move(items));
  }

  ExprPtr generator() {
    const Token t = lex_.peek();
    if (t.kind != Token::Kind::Name) lex_.fail("expected elem1, elem2, affine or id");
    lex_.take();
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Call;
    e->name = t.text;
    e->pos = t.pos;
    if (t.text == "id") return e;
    if (t.text != "elem1" && t.text != "elem2" && t.text != "affine") {
      throw ParseError("unknown generator '" + t.text + "'", t.pos.line, t.pos.column);
    }
    lex_.expect("(");
    if (t.text == "affine") {
      e->args.push_back(list());
      lex_.expect(",");
      e->args.push_back(list());
    } else {
      e->args.push_back(expression());
    }
    lex_.expect(")");
    return e;
  }

  Lexer lex_;
};

[[noreturn]] void fail_at(const Expr& e, const std::string& message) {
  throw ParseError(message, e.pos.line, e.pos.column);
}

// Shared evaluator; Ring supplies constants, names, products and scalar division.
template <class T, class Ring>
T evaluate(const ExprPtr& e, const Ring& ring) {
  switch (e->kind) {
    case Expr::Kind::Number:
      return ring.constant(e->value);
    case Expr::Kind::Name:
      return ring.name(*e);
    case Expr::Kind::Add:
      return evaluate<T>(e->args[0], ring) + evaluate<T>(e->args[1], ring);
    case Expr::Kind::Sub:
      return evaluate<T>(e->args[0], ring) - evaluate<T>(e->args[1], ring);
    case Expr::Kind::Neg:
      return -evaluate<T>(e->args[0], ring);
    case Expr::Kind::Mul:
      return ring.mul(evaluate<T>(e->args[0], ring), evaluate<T>(e->args[1], ring));
    case Expr::Kind::Div: {
      const Poly2 d = eval_poly(e->args[1], ring.params);
      if (!d.is_constant() || d.is_zero()) fail_at(*e->args[1], "division by a nonconstant or zero");
      return ring.scale(evaluate<T>(e->args[0], ring), Rational(1) / d.constant_term());
    }
    case Expr::Kind::Pow: {
      const T base = evaluate<T>(e->args[0], ring);
      T r = ring.constant(Rational(1));
      for (Rational k = 0; k < e->value; ++k) r = ring.mul(r, base);
      return r;
    }
    case Expr::Kind::Call:
    case Expr::Kind::List:
      break;
  }
  fail_at(*e, "not an arithmetic expression");
}

struct PolyRing {
  const Bindings& params;
  Poly2 constant(const Rational& c) const { return Poly2(c); }
  Poly2 name(const Expr& e) const {
    if (e.name == "z1") return z1();
    if (e.name == "z2") return z2();
    auto it = params.find(e.name);
    if (it == params.end()) throw UnboundParameter(e.name);
    return Poly2(it->second);
  }
  Poly2 mul(const Poly2& a, const Poly2& b) const { return a * b; }
  Poly2 scale(const Poly2& a, const Rational& s) const { return a * Poly2(s); }
};

struct GwaRing {
  const GwaAlgebra& w;
  const Bindings& params;
  const std::map<std::string, GwaElem>& names;
  GwaElem constant(const Rational& c) const { return GwaElem(Poly2(c)); }
  GwaElem name(const Expr& e) const {
    if (auto it = names.find(e.name); it != names.end()) return it->second;
    if (e.name == "x") return GwaElem::x();
    if (e.name == "y") return GwaElem::y();
    return GwaElem(PolyRing{params}.name(e));
  }
  GwaElem mul(const GwaElem& a, const GwaElem& b) const { return multiply(w, a, b); }
  GwaElem scale(GwaElem a, const Rational& s) const { return s * std::move(a); }
};

Rational list_constant(const ExprPtr& e, const Bindings& params) {
  if (e->kind == Expr::Kind::List) fail_at(*e, "expected a number");
  return eval_constant(e, params);
}

const Expr& list_item(const Expr& l, std::size_t i, std::size_t size) {
  if (l.kind != Expr::Kind::List || l.args.size() != size) {
    fail_at(l, "expected a list of " + std::to_string(size) + " entries");
  }
  return *l.args[i];
}

}  // namespace

ExprPtr parse_expr(const SourceText& src) {
  Parser p(src);
  ExprPtr e = p.expression();
  p.finish();
  return e;
}

std::vector<ExprPtr> parse_word(const SourceText& src) { return Parser(src).word(); }

Poly2 eval_poly(const ExprPtr& e, const Bindings& params) {
  return evaluate<Poly2>(e, PolyRing{params});
}

Rational eval_constant(const ExprPtr& e, const Bindings& params) {
  const Poly2 p = eval_poly(e, params);
  if (!p.is_constant()) fail_at(*e, "expected a constant");
  return p.constant_term();
}

GwaElem eval_gwa(const ExprPtr& e, const GwaAlgebra& w, const Bindings& params,
                 const std::map<std::string, GwaElem>& names) {
  return evaluate<GwaElem>(e, GwaRing{w, params, names});
}

AutWord build_word(const std::vector<ExprPtr>& word, const Bindings& params) {
  std::vector<AutGenerator> factors;
  for (const ExprPtr& g : word) {
    if (g->name == "id") continue;
    if (g->name == "elem1" || g->name == "elem2") {
      const int axis = g->name == "elem1" ? 1 : 2;
      const Poly2 shift = eval_poly(g->args[0], params);
      if (shift.degree_in(axis - 1) > 0) {
        fail_at(*g->args[0], "shift of " + g->name + " must not involve z" + std::to_string(axis));
      }
      factors.emplace_back(Elementary{axis, shift});
      continue;
    }
    Affine a;
    const Expr& m = *g->args[0];
    for (std::size_t r = 0; r < 2; ++r) {
      const Expr& row = list_item(m, r, 2);
      for (std::size_t c = 0; c < 2; ++c) {
        const Expr& item = list_item(row, c, 2);
        a.matrix[r][c] = list_constant(std::make_shared<Expr>(item), params);
      }
    }
    for (std::size_t c = 0; c < 2; ++c) {
      a.translation[c] = list_constant(std::make_shared<Expr>(list_item(*g->args[1], c, 2)), params);
    }
    if (is_zero(a.matrix[0][0] * a.matrix[1][1] - a.matrix[0][1] * a.matrix[1][0])) {
      fail_at(m, "affine matrix is singular");
    }
    factors.emplace_back(a);
  }
  return AutWord(std::move(factors));
}

}  // namespace gwalab
