#include "convexmod/terms.hpp"

#include <algorithm>
#include <cctype>

namespace convexmod {

TermPtr Term::bot() { return std::make_shared<Term>(Term{Kind::bot, {}, {}, nullptr, nullptr}); }
TermPtr Term::zero() { return std::make_shared<Term>(Term{Kind::zero, {}, {}, nullptr, nullptr}); }
TermPtr Term::var(Symbol x) {
  return std::make_shared<Term>(Term{Kind::var, std::move(x), {}, nullptr, nullptr});
}
TermPtr Term::scale(Scalar lambda, TermPtr t) {
  return std::make_shared<Term>(Term{Kind::scale, {}, std::move(lambda), std::move(t), nullptr});
}
TermPtr Term::add(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::add, {}, {}, std::move(a), std::move(b)});
}
TermPtr Term::join(TermPtr a, TermPtr b) {
  return std::make_shared<Term>(Term{Kind::join, {}, {}, std::move(a), std::move(b)});
}

namespace {

enum class Tok { bar, plus, dot, lparen, rparen, number, ident, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '|': out.push_back({Tok::bar, "|", i++}); continue;
      case '+': out.push_back({Tok::plus, "+", i++}); continue;
      case '.': out.push_back({Tok::dot, ".", i++}); continue;
      case '(': out.push_back({Tok::lparen, "(", i++}); continue;
      case ')': out.push_back({Tok::rparen, ")", i++}); continue;
      default: break;
    }
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i + 1 < s.size() && s[i] == '/' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c)) {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
  }
  out.push_back({Tok::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, Semiring sr) : toks_(tokenize(text)), sr_(sr) {}

  TermPtr parse() {
    auto t = term();
    if (peek().kind != Tok::end) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return t;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  TermPtr term() {
    auto t = sum();
    while (peek().kind == Tok::bar) {
      next();
      t = Term::join(t, sum());
    }
    return t;
  }

  TermPtr sum() {
    auto t = scaled();
    while (peek().kind == Tok::plus) {
      next();
      t = Term::add(t, scaled());
    }
    return t;
  }

  TermPtr scaled() {
    if (peek().kind == Tok::number && peek(1).kind == Tok::dot) {
      const Token& num = next();
      next();
      Scalar lambda;
      try {
        lambda = sr_.parse(num.text);
      } catch (const Error& e) {
        throw ParseError(e.what(), num.pos);
      }
      return Term::scale(std::move(lambda), scaled());
    }
    return atom();
  }

  TermPtr atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::number:
        if (t.text == "0") return Term::zero();
        throw ParseError("scalar '" + t.text + "' must be followed by '.'", t.pos);
      case Tok::ident:
        if (t.text == "bot") return Term::bot();
        return Term::var(t.text);
      case Tok::lparen: {
        auto inner = term();
        if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
        next();
        return inner;
      }
      case Tok::end: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Semiring sr_;
};

int precedence(const Term& t) {
  switch (t.kind) {
    case Term::Kind::join: return 0;
    case Term::Kind::add: return 1;
    case Term::Kind::scale: return 2;
    default: return 3;
  }
}

void print_into(const TermPtr& t, int needed, std::string& out) {
  bool paren = precedence(*t) < needed;
  if (paren) out += '(';
  switch (t->kind) {
    case Term::Kind::bot: out += "bot"; break;
    case Term::Kind::zero: out += "0"; break;
    case Term::Kind::var: out += t->name; break;
    case Term::Kind::scale:
      out += t->scalar.str() + ".";
      print_into(t->lhs, 2, out);
      break;
    case Term::Kind::add:
      print_into(t->lhs, 1, out);
      out += " + ";
      print_into(t->rhs, 2, out);
      break;
    case Term::Kind::join:
      print_into(t->lhs, 0, out);
      out += " | ";
      print_into(t->rhs, 1, out);
      break;
  }
  if (paren) out += ')';
}

void collect_vars(const TermPtr& t, SymbolSet& out) {
  if (!t) return;
  if (t->kind == Term::Kind::var) out.insert(t->name);
  collect_vars(t->lhs, out);
  collect_vars(t->rhs, out);
}

}  // namespace

TermPtr parse_term(std::string_view text, Semiring sr) { return Parser(text, sr).parse(); }

std::string print_term(const TermPtr& t) {
  std::string out;
  print_into(t, 0, out);
  return out;
}

bool structurally_equal(const TermPtr& a, const TermPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::bot:
    case Term::Kind::zero: return true;
    case Term::Kind::var: return a->name == b->name;
    case Term::Kind::scale: return a->scalar == b->scalar && structurally_equal(a->lhs, b->lhs);
    default: return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
  }
}

SymbolSet free_variables(const TermPtr& t) {
  SymbolSet out;
  collect_vars(t, out);
  return out;
}

ConvexSet eval(const TermPtr& t, Semiring sr, const SymbolSet& vars) {
  switch (t->kind) {
    case Term::Kind::bot: return cs_empty<Symbol>(sr);
    case Term::Kind::zero: return cs_zero<Symbol>(sr);
    case Term::Kind::var:
      if (!vars.contains(t->name)) throw Error("unbound variable '" + t->name + "'");
      return Hull<Symbol>::singleton(fs_unit(sr, t->name));
    case Term::Kind::scale:
      // 0·t is {ε} whatever t is, but t must still be well formed.
      return cs_scale(t->scalar, eval(t->lhs, sr, vars));
    case Term::Kind::add: return cs_add(eval(t->lhs, sr, vars), eval(t->rhs, sr, vars));
    case Term::Kind::join: return cs_join(eval(t->lhs, sr, vars), eval(t->rhs, sr, vars));
  }
  throw Error("malformed term");
}

bool term_equal(const TermPtr& a, const TermPtr& b, Semiring sr, const SymbolSet& vars) {
  return cs_equal(eval(a, sr, vars), eval(b, sr, vars));
}

TermPtr synthesize(const ConvexSet& a) {
  TermPtr out;
  for (auto& g : a.generators()) {
    TermPtr sum;
    for (auto& [x, v] : g) {
      TermPtr part = v == Scalar(1) ? Term::var(x) : Term::scale(v, Term::var(x));
      sum = sum ? Term::add(sum, part) : part;
    }
    if (!sum) sum = Term::zero();
    out = out ? Term::join(out, sum) : sum;
  }
  return out ? out : Term::bot();
}

namespace {

void require_qplus(const ConvexSet& a) {
  if (a.semiring().id() != SemiringId::qplus) throw Error("rendering needs the qplus semiring");
}

void require_vars(const ConvexSet& a, const SymbolSet& allowed) {
  for (auto& g : a.generators())
    for (auto& [x, v] : g)
      if (!allowed.contains(x)) throw Error("wrong dimension: '" + x + "' is not a rendered variable");
}

}  // namespace

Interval render_interval(const ConvexSet& a, const Symbol& var) {
  require_qplus(a);
  require_vars(a, {var});
  Interval out;
  for (auto& g : a.generators()) {
    Scalar v = g(var);
    if (out.empty) {
      out = {false, v, v};
    } else {
      out.lo = std::min(out.lo, v);
      out.hi = std::max(out.hi, v);
    }
  }
  return out;
}

std::vector<Vertex> render_polygon(const ConvexSet& a, const Symbol& x, const Symbol& y) {
  require_qplus(a);
  require_vars(a, {x, y});
  std::vector<Vertex> pts;
  for (auto& g : a.generators()) pts.emplace_back(g(x), g(y));
  if (pts.empty()) return pts;

  Rational cx = 0, cy = 0;
  for (auto& [px, py] : pts) {
    cx += px.value();
    cy += py.value();
  }
  cx /= static_cast<long>(pts.size());
  cy /= static_cast<long>(pts.size());

  // Angle classes in increasing order over (-π, π]; the zero vector last.
  auto half = [](const Rational& dx, const Rational& dy) {
    if (sgn(dy) < 0) return 0;
    if (sgn(dy) == 0 && sgn(dx) > 0) return 1;
    if (sgn(dy) > 0) return 2;
    if (sgn(dx) < 0) return 3;
    return 4;
  };
  std::sort(pts.begin(), pts.end(), [&](const Vertex& p, const Vertex& q) {
    Rational pdx = p.first.value() - cx, pdy = p.second.value() - cy;
    Rational qdx = q.first.value() - cx, qdy = q.second.value() - cy;
    int hp = half(pdx, pdy), hq = half(qdx, qdy);
    if (hp != hq) return hp < hq;
    Rational cross = pdx * qdy - pdy * qdx;
    if (sgn(cross) != 0) return sgn(cross) > 0;
    return p < q;
  });
  return pts;
}

std::string to_string(const Interval& i) {
  if (i.empty) return "empty";
  return "[" + i.lo.str() + ", " + i.hi.str() + "]";
}

}  // namespace convexmod
