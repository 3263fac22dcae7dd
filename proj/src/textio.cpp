#include "qw/textio.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace qw {

ParseError::ParseError(const std::string& message, SourcePosition where,
                       std::set<std::string> expected)
    : std::runtime_error(message), where_(where), expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

const std::string kOtimes = "\xE2\x8A\x97";  // U+2297

enum class Tok { end, integer, ident, punct, otimes, unknown };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourcePosition where;
};

class Lexer {
 public:
  explicit Lexer(const std::string& input) : in_(input) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.where = pos_;
      if (pos_.offset >= in_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = in_[pos_.offset];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.kind = Tok::integer;
        while (pos_.offset < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_.offset])))
          t.text += advance();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        t.kind = Tok::ident;
        while (pos_.offset < in_.size() && std::isalnum(static_cast<unsigned char>(in_[pos_.offset])))
          t.text += advance();
      } else if (in_.compare(pos_.offset, kOtimes.size(), kOtimes) == 0) {
        t.kind = Tok::otimes;
        t.text = kOtimes;
        pos_.offset += kOtimes.size();
        pos_.column += 1;
      } else if (std::string("()[],;+-*/^_").find(c) != std::string::npos) {
        t.kind = Tok::punct;
        t.text = advance();
      } else {
        t.kind = Tok::unknown;
        t.text = advance();
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char advance() {
    const char c = in_[pos_.offset++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }
  void skip_space() {
    while (pos_.offset < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_.offset])))
      advance();
  }

  const std::string& in_;
  SourcePosition pos_;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(const std::string& input) : toks_(Lexer(input).run()) {}

  AstPtr run() {
    AstPtr e = expr();
    if (peek().kind != Tok::end) fail({"end of input", "+", "-", "*", "/"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }
  bool is_punct(const char* p) const { return peek().kind == Tok::punct && peek().text == p; }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) fail({p});
  }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::ostringstream msg;
    msg << "syntax error at line " << t.where.line << ", column " << t.where.column << ": found "
        << (t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'") << ", expected ";
    bool first = true;
    for (const auto& e : expected) {
      msg << (first ? "" : " or ") << e;
      first = false;
    }
    throw ParseError(msg.str(), t.where, std::move(expected));
  }

  static std::shared_ptr<ExpressionAst> node(NodeKind kind, SourcePosition where) {
    auto n = std::make_shared<ExpressionAst>();
    n->kind = kind;
    n->where = where;
    return n;
  }

  AstPtr expr() {
    auto sum = node(NodeKind::sum, peek().where);
    int sign = 1;
    if (accept("-")) sign = -1;
    else accept("+");
    sum->children.push_back(tensor());
    sum->signs.push_back(sign);
    for (;;) {
      if (accept("+")) sign = 1;
      else if (accept("-")) sign = -1;
      else break;
      sum->children.push_back(tensor());
      sum->signs.push_back(sign);
    }
    if (sum->children.size() == 1 && sum->signs[0] == 1) return sum->children[0];
    return sum;
  }

  AstPtr tensor() {
    const SourcePosition where = peek().where;
    AstPtr left = term();
    if (peek().kind != Tok::otimes) return left;
    next();
    auto t = node(NodeKind::tensor, where);
    t->children = {left, term()};
    return t;
  }

  AstPtr term() {
    const SourcePosition where = peek().where;
    AstPtr acc = factor();
    std::shared_ptr<ExpressionAst> product;
    for (;;) {
      if (accept("*")) {
        if (!product) {
          product = node(NodeKind::product, where);
          product->children.push_back(acc);
          acc = product;
        }
        product->children.push_back(factor());
      } else if (is_punct("/")) {
        const SourcePosition at = peek().where;
        next();
        auto q = node(NodeKind::quotient, at);
        q->children = {acc, factor()};
        acc = q;
        product.reset();
      } else {
        return acc;
      }
    }
  }

  AstPtr factor() {
    if (is_punct("-")) {
      const SourcePosition where = next().where;
      auto n = node(NodeKind::negation, where);
      n->children.push_back(factor());
      return n;
    }
    const SourcePosition where = peek().where;
    AstPtr base = atom();
    if (!accept("^")) return base;
    auto p = node(NodeKind::power, where);
    p->children.push_back(base);
    p->exponent = signed_int({"integer exponent"});
    return p;
  }

  int signed_int(std::set<std::string> expected) {
    int sign = 1;
    if (accept("-")) sign = -1;
    else accept("+");
    if (peek().kind != Tok::integer) fail(std::move(expected));
    return sign * to_int(next());
  }

  int to_int(const Token& t) const {
    try {
      return std::stoi(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("integer literal out of range at line " + std::to_string(t.where.line) +
                           ", column " + std::to_string(t.where.column),
                       t.where, {"smaller integer"});
    }
  }

  int generator_index() {
    expect("(");
    const Token& start = peek();
    int sign = 1;
    if (accept("-")) sign = -1;
    else accept("+");
    if (peek().kind == Tok::integer) {
      const int v = sign * to_int(next());
      if (accept(")")) return v;
    }
    const Token& bad = peek();
    throw IndexError("generator index must be an integer literal (line " +
                         std::to_string(start.where.line) + ", column " +
                         std::to_string(start.where.column) + ")",
                     bad.where, {"integer", ")"});
  }

  AstPtr application(NodeKind kind, SourcePosition where) {
    auto n = node(kind, where);
    expect("(");
    n->children.push_back(expr());
    expect(")");
    return n;
  }

  AstPtr atom() {
    const Token& t = peek();
    const SourcePosition where = t.where;
    if (t.kind == Tok::integer) {
      auto n = node(NodeKind::integer, where);
      n->value = Integer(next().text);
      return n;
    }
    if (t.kind == Tok::ident) {
      const std::string name = t.text;
      if (name == "q") {
        next();
        return node(NodeKind::q, where);
      }
      if (name == "L" || name == "W") {
        next();
        auto n = node(NodeKind::generator, where);
        const int idx = generator_index();
        n->symbol = name == "L" ? GeneratorSymbol::L(idx) : GeneratorSymbol::W(idx);
        return n;
      }
      if (name == "C" || name == "T") {
        next();
        auto n = node(NodeKind::generator, where);
        n->symbol = name == "C" ? GeneratorSymbol::C() : GeneratorSymbol::T();
        return n;
      }
      if (name == "Delta") {
        next();
        return application(NodeKind::coproduct, where);
      }
      if (name == "S") {
        next();
        return application(NodeKind::antipode, where);
      }
      if (name == "eps") {
        next();
        return application(NodeKind::counit, where);
      }
    }
    if (accept("(")) {
      AstPtr inner = expr();
      expect(")");
      return inner;
    }
    if (accept("[")) {
      auto n = node(NodeKind::bracket, where);
      n->children.push_back(expr());
      expect(",");
      n->children.push_back(expr());
      if (accept(";")) {
        const int wx = signed_int({"integer weight"});
        expect(",");
        const int wy = signed_int({"integer weight"});
        n->weights = std::make_pair(wx, wy);
      }
      expect("]");
      expect("_");
      if (!(peek().kind == Tok::ident && peek().text == "q")) fail({"q"});
      next();
      return n;
    }
    fail({"integer", "q", "L(", "W(", "C", "T", "[", "(", "Delta(", "S(", "eps("});
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Evaluation

const char* kind_name(const Value& v) {
  switch (v.index()) {
    case 0: return "scalar";
    case 1: return "element";
    default: return "tensor";
  }
}

AlgebraElement as_element(const Value& v, const char* context) {
  if (auto s = std::get_if<QScalar>(&v)) return AlgebraElement::scalar(*s);
  if (auto e = std::get_if<AlgebraElement>(&v)) return *e;
  throw EvalTypeError(std::string(context) + " needs an element, got a tensor");
}

TensorElement as_tensor(const Value& v, const char* context) {
  if (auto s = std::get_if<QScalar>(&v)) return TensorElement::identity().scaled(*s);
  if (auto t = std::get_if<TensorElement>(&v)) return *t;
  throw EvalTypeError(std::string(context) + " cannot combine a tensor with a plain element");
}

Value add(const Value& a, const Value& b) {
  if (a.index() == 0 && b.index() == 0) return std::get<QScalar>(a) + std::get<QScalar>(b);
  if (a.index() == 2 || b.index() == 2) return as_tensor(a, "+") + as_tensor(b, "+");
  return as_element(a, "+") + as_element(b, "+");
}

Value scale(const Value& v, const QScalar& s) {
  if (auto x = std::get_if<QScalar>(&v)) return *x * s;
  if (auto e = std::get_if<AlgebraElement>(&v)) return e->scaled(s);
  return std::get<TensorElement>(v).scaled(s);
}

Value mul(const Value& a, const Value& b, RelationMode mode) {
  if (auto s = std::get_if<QScalar>(&a)) return scale(b, *s);
  if (auto s = std::get_if<QScalar>(&b)) return scale(a, *s);
  if (a.index() != b.index())
    throw EvalTypeError(std::string("cannot multiply ") + kind_name(a) + " by " + kind_name(b));
  if (a.index() == 1)
    return multiply(std::get<AlgebraElement>(a), std::get<AlgebraElement>(b), mode);
  return tensor_multiply(std::get<TensorElement>(a), std::get<TensorElement>(b), mode);
}

// Inverse of a unit: a nonzero scalar times a pure power of T.
std::optional<Value> unit_inverse(const Value& v) {
  if (auto s = std::get_if<QScalar>(&v)) {
    if (s->is_zero()) throw EvalError("division by zero");
    return s->inverse();
  }
  if (auto e = std::get_if<AlgebraElement>(&v); e && e->size() == 1) {
    const auto& [m, c] = *e->terms().begin();
    if (m.c == 0 && m.l.empty() && m.w.empty()) {
      NormalMonomial inv;
      inv.t = -m.t;
      return AlgebraElement::monomial(inv, c.inverse());
    }
  }
  return std::nullopt;
}

Value power(const Value& base, int e, RelationMode mode) {
  Value b = base;
  if (e < 0) {
    auto inv = unit_inverse(base);
    if (!inv) throw EvalTypeError("negative powers need a scalar or a power of T");
    b = *inv;
    e = -e;
  }
  Value acc = QScalar(1);
  if (b.index() == 1) acc = AlgebraElement::identity();
  if (b.index() == 2) acc = TensorElement::identity();
  for (int k = 0; k < e; ++k) acc = mul(acc, b, mode);
  return acc;
}

Value eval(const ExpressionAst& n, RelationMode mode) {
  switch (n.kind) {
    case NodeKind::integer: return QScalar(Rational(n.value));
    case NodeKind::q: return QScalar::q();
    case NodeKind::generator: return AlgebraElement::generator(n.symbol);
    case NodeKind::sum: {
      Value acc = QScalar(0);
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        Value v = eval(*n.children[i], mode);
        acc = add(acc, n.signs[i] < 0 ? scale(v, QScalar(-1)) : v);
      }
      return acc;
    }
    case NodeKind::product: {
      Value acc = eval(*n.children[0], mode);
      for (std::size_t i = 1; i < n.children.size(); ++i)
        acc = mul(acc, eval(*n.children[i], mode), mode);
      return acc;
    }
    case NodeKind::quotient: {
      const Value d = eval(*n.children[1], mode);
      const QScalar* s = std::get_if<QScalar>(&d);
      if (!s) throw EvalTypeError("division is only by scalars");
      if (s->is_zero()) throw EvalError("division by zero");
      return scale(eval(*n.children[0], mode), s->inverse());
    }
    case NodeKind::negation: return scale(eval(*n.children[0], mode), QScalar(-1));
    case NodeKind::power: return power(eval(*n.children[0], mode), n.exponent, mode);
    case NodeKind::tensor:
      return tensor(as_element(eval(*n.children[0], mode), "⊗"),
                    as_element(eval(*n.children[1], mode), "⊗"));
    case NodeKind::coproduct:
      return coproduct(as_element(eval(*n.children[0], mode), "Delta"), mode);
    case NodeKind::antipode: return antipode(as_element(eval(*n.children[0], mode), "S"), mode);
    case NodeKind::counit: return counit(as_element(eval(*n.children[0], mode), "eps"));
    case NodeKind::bracket: {
      const AlgebraElement x = as_element(eval(*n.children[0], mode), "bracket");
      const AlgebraElement y = as_element(eval(*n.children[1], mode), "bracket");
      int wx = 0, wy = 0;
      if (n.weights) {
        std::tie(wx, wy) = *n.weights;
      } else {
        const auto hx = homogeneous_weight(x), hy = homogeneous_weight(y);
        if (!hx || !hy)
          throw WeightError("bracket operand is not homogeneous; declare weights as [x, y; m, n]_q");
        wx = *hx;
        wy = *hy;
      }
      AlgebraElement out = q_bracket_realized(x, y, wx, wy, mode);
      // Single generators must agree with the bracket table.
      const AstPtr& a = n.children[0];
      const AstPtr& b = n.children[1];
      if (!n.weights && a->kind == NodeKind::generator && b->kind == NodeKind::generator &&
          a->symbol.kind != GeneratorKind::T && b->symbol.kind != GeneratorKind::T) {
        auto lie = [](GeneratorSymbol g) {
          if (g.kind == GeneratorKind::L) return LieGenerator::L(g.index);
          if (g.kind == GeneratorKind::W) return LieGenerator::W(g.index);
          return LieGenerator::C();
        };
        if (out != bracket_table(lie(a->symbol), lie(b->symbol)))
          throw std::logic_error("realized bracket disagrees with the bracket table");
      }
      return out;
    }
  }
  throw std::logic_error("unknown node kind");
}

}  // namespace

AstPtr parse(const std::string& input) { return Parser(input).run(); }

Value evaluate(const ExpressionAst& ast, RelationMode mode) { return eval(ast, mode); }

Value evaluate(const std::string& input, RelationMode mode) { return eval(*parse(input), mode); }

std::optional<int> homogeneous_weight(const AlgebraElement& x) {
  std::optional<int> w;
  for (const auto& [m, c] : x.terms()) {
    if (w && *w != m.weight()) return std::nullopt;
    w = m.weight();
  }
  return w.value_or(0);
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::latex: return "latex";
  }
  return "text";
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown output format '" + text + "'");
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string power_suffix(int e, bool latex) {
  if (e == 1) return "";
  if (latex) return "^{" + std::to_string(e) + "}";
  return "^" + std::to_string(e);
}

std::string latex_monomial(const NormalMonomial& m) {
  std::string s;
  if (m.t != 0) s += "\\mathcal{T}" + power_suffix(m.t, true);
  if (m.c != 0) s += "\\mathcal{C}" + power_suffix(m.c, true);
  for (int i : m.l) s += "L_{" + std::to_string(i) + "}";
  for (int i : m.w) s += "W_{" + std::to_string(i) + "}";
  return s.empty() ? "1" : s;
}

std::string latex_poly(const QPolynomial& p) {
  // Integer coefficients assumed (callers clear denominators first).
  std::string s;
  const auto& cs = p.coefficients();
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = cs[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    s += neg ? "-" : (s.empty() ? "" : "+");
    if (d == 0 || a != 1) s += rational_text(a);
    if (d >= 1) s += "q" + power_suffix(d, true);
  }
  return s.empty() ? "0" : s;
}

// Magnitude of a scalar in latex, sign handled by the caller.
std::string latex_scalar_abs(const QScalar& x) {
  QPolynomial num = x.numerator();
  QPolynomial den = x.denominator();
  Integer l = 1;
  for (const auto& c : num.coefficients()) l = lcm(l, Integer(c.get_den()));
  num = num.scaled(Rational(l));
  den = den.scaled(Rational(l));
  if (den.is_constant() && den.leading() == 1) return latex_poly(num);
  return "\\frac{" + latex_poly(num) + "}{" + latex_poly(den) + "}";
}

struct TermPiece {
  bool negative = false;
  std::string body;  // coefficient and monomial, without sign
};

// Coefficient text for a term, sign stripped. Empty if the magnitude is 1.
std::string coefficient_text(const QScalar& mag, OutputFormat fmt, bool bare) {
  if (mag.is_one()) return bare ? (fmt == OutputFormat::latex ? "1" : "1") : "";
  if (fmt == OutputFormat::latex) {
    const std::string s = latex_scalar_abs(mag);
    const bool multi = !mag.denominator().is_constant() || !mag.numerator().is_monomial();
    if (bare || !multi || s.rfind("\\frac", 0) == 0) return s;
    return "\\left(" + s + "\\right)";
  }
  if (mag.is_rational()) return rational_text(mag.as_rational());
  return "(" + mag.to_text() + ")";
}

TermPiece term_piece(const QScalar& coeff, const std::string& mono, bool identity,
                     OutputFormat fmt) {
  TermPiece p;
  p.negative = coeff.leading_sign() < 0;
  const QScalar mag = p.negative ? -coeff : coeff;
  const std::string c = coefficient_text(mag, fmt, identity);
  if (identity) p.body = c;
  else if (c.empty()) p.body = mono;
  else p.body = c + (fmt == OutputFormat::latex ? "" : "*") + mono;
  return p;
}

std::string join(const std::vector<TermPiece>& pieces, OutputFormat fmt) {
  if (pieces.empty()) return "0";
  std::string s;
  const bool tight = fmt == OutputFormat::latex;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0) s += pieces[i].negative ? "-" : "";
    else if (tight) s += pieces[i].negative ? "-" : "+";
    else s += pieces[i].negative ? " - " : " + ";
    s += pieces[i].body;
  }
  return s;
}

nlohmann::ordered_json monomial_json(const NormalMonomial& m) {
  nlohmann::ordered_json j;
  j["t"] = m.t;
  j["c"] = m.c;
  j["L"] = m.l;
  j["W"] = m.w;
  return j;
}

template <std::size_t N>
std::string render_tensor(const TensorPower<N>& x, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [k, c] : x.terms()) {
      nlohmann::ordered_json t;
      t["coeff"] = c.to_text();
      if constexpr (N == 2) {
        t["left"] = monomial_json(k[0]);
        t["right"] = monomial_json(k[1]);
      } else {
        nlohmann::ordered_json slots = nlohmann::ordered_json::array();
        for (const auto& m : k) slots.push_back(monomial_json(m));
        t["slots"] = slots;
      }
      terms.push_back(t);
    }
    nlohmann::ordered_json out;
    out["terms"] = terms;
    return out.dump();
  }
  const bool latex = fmt == OutputFormat::latex;
  std::vector<TermPiece> pieces;
  for (const auto& [k, c] : x.terms()) {
    std::string slots;
    for (std::size_t i = 0; i < N; ++i) {
      const std::string s = latex ? latex_monomial(k[i]) : monomial_text(k[i]);
      if (i > 0) {
        if (latex) slots += (s[0] == '\\' ? "\\otimes" : "\\otimes ");
        else slots += " " + kOtimes + " ";
      }
      slots += s;
    }
    pieces.push_back(term_piece(c, slots, false, fmt));
  }
  return join(pieces, fmt);
}

}  // namespace

std::string monomial_text(const NormalMonomial& m) {
  std::vector<std::string> parts;
  if (m.t != 0) parts.push_back("T" + power_suffix(m.t, false));
  if (m.c != 0) parts.push_back("C" + power_suffix(m.c, false));
  for (int i : m.l) parts.push_back("L(" + std::to_string(i) + ")");
  for (int i : m.w) parts.push_back("W(" + std::to_string(i) + ")");
  if (parts.empty()) return "1";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += "*" + parts[i];
  return s;
}

std::string render(const QScalar& x, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return x.to_text();
    case OutputFormat::json: {
      nlohmann::ordered_json j;
      j["scalar"] = x.to_text();
      return j.dump();
    }
    case OutputFormat::latex: {
      if (x.is_zero()) return "0";
      const bool neg = x.leading_sign() < 0;
      return (neg ? "-" : "") + latex_scalar_abs(neg ? -x : x);
    }
  }
  return {};
}

std::string render(const AlgebraElement& x, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : x.terms()) {
      nlohmann::ordered_json t;
      t["coeff"] = c.to_text();
      t.update(monomial_json(m));
      terms.push_back(t);
    }
    nlohmann::ordered_json out;
    out["terms"] = terms;
    return out.dump();
  }
  const bool latex = format == OutputFormat::latex;
  std::vector<TermPiece> pieces;
  for (const auto& [m, c] : x.terms())
    pieces.push_back(term_piece(c, latex ? latex_monomial(m) : monomial_text(m), m.is_identity(),
                                format));
  return join(pieces, format);
}

std::string render(const TensorElement& x, OutputFormat format) { return render_tensor(x, format); }

std::string render(const TensorCubeElement& x, OutputFormat format) {
  return render_tensor(x, format);
}

std::string render(const Value& x, OutputFormat format) {
  return std::visit([format](const auto& v) { return render(v, format); }, x);
}

}  // namespace qw
