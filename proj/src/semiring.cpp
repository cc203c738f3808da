#include "convexmod/semiring.hpp"

#include <functional>

namespace convexmod {

Scalar::Scalar(long num, long den) : value_(num, den) {
  if (den == 0) throw Error("not invertible");
  value_.canonicalize();
}

std::string Scalar::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string_view to_string(SemiringId id) {
  switch (id) {
    case SemiringId::boolean: return "bool";
    case SemiringId::qplus: return "qplus";
    case SemiringId::nat: return "nat";
  }
  return "?";
}

std::string_view to_string(Property p) {
  switch (p) {
    case Property::positive: return "positive";
    case Property::semifield: return "semifield";
    case Property::refinable: return "refinable";
    case Property::A: return "A";
    case Property::B: return "B";
    case Property::C: return "C";
    case Property::D: return "D";
    case Property::E: return "E";
  }
  return "?";
}

SemiringId parse_semiring_id(std::string_view text) {
  if (text == "bool") return SemiringId::boolean;
  if (text == "qplus") return SemiringId::qplus;
  if (text == "nat") return SemiringId::nat;
  throw Error("unknown semiring '" + std::string(text) + "'");
}

Property parse_property(std::string_view text) {
  for (Property p : {Property::positive, Property::semifield, Property::refinable, Property::A,
                     Property::B, Property::C, Property::D, Property::E}) {
    if (to_string(p) == text) return p;
  }
  throw Error("unknown property '" + std::string(text) + "'");
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const {
  if (id_ == SemiringId::boolean) return Scalar(a.is_zero() && b.is_zero() ? 0 : 1);
  return Scalar(Rational(a.value() + b.value()));
}

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  if (id_ == SemiringId::boolean) return Scalar(a.is_zero() || b.is_zero() ? 0 : 1);
  return Scalar(Rational(a.value() * b.value()));
}

Scalar Semiring::div(const Scalar& a, const Scalar& b) const {
  if (id_ == SemiringId::nat) throw Error("not a semifield");
  if (b.is_zero()) throw Error("not invertible");
  if (id_ == SemiringId::boolean) return a;
  return Scalar(Rational(a.value() / b.value()));
}

bool Semiring::contains(const Scalar& s) const {
  if (sgn(s.value()) < 0) return false;
  switch (id_) {
    case SemiringId::boolean: return s.is_zero() || s == Scalar(1);
    case SemiringId::nat: return s.is_integer();
    case SemiringId::qplus: return true;
  }
  return false;
}

const Scalar& Semiring::check(const Scalar& s) const {
  if (!contains(s)) throw Error("'" + s.str() + "' is not a " + std::string(name()) + " scalar");
  return s;
}

namespace {

bool parse_digits(std::string_view t, mpz_class& out) {
  if (t.empty()) return false;
  for (char c : t)
    if (c < '0' || c > '9') return false;
  out = mpz_class(std::string(t), 10);
  return true;
}

}  // namespace

Scalar Semiring::parse(std::string_view text) const {
  if (id_ == SemiringId::boolean) {
    if (text == "true") return Scalar(1);
    if (text == "false") return Scalar(0);
  }
  mpz_class num, den(1);
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_digits(text, num)
                : parse_digits(text.substr(0, slash), num) && parse_digits(text.substr(slash + 1), den);
  if (!ok) throw Error("bad scalar '" + std::string(text) + "'");
  if (den == 0) throw Error("bad scalar '" + std::string(text) + "': zero denominator");
  Scalar s{Rational(num, den)};
  if (!contains(s)) throw Error("bad scalar '" + std::string(text) + "' for " + std::string(name()));
  return s;
}

std::set<Property> Semiring::declared_properties() const {
  using P = Property;
  switch (id_) {
    case SemiringId::boolean: return {P::positive, P::semifield, P::refinable, P::B, P::D, P::E};
    case SemiringId::qplus:
      return {P::positive, P::semifield, P::refinable, P::B, P::C, P::D, P::E};
    case SemiringId::nat: return {P::positive, P::refinable, P::A, P::B, P::C, P::D, P::E};
  }
  return {};
}

Scalar arith(Semiring sr, ArithOp op, const Scalar& a, const Scalar& b) {
  sr.check(a);
  sr.check(b);
  switch (op) {
    case ArithOp::add: return sr.add(a, b);
    case ArithOp::mul: return sr.mul(a, b);
    case ArithOp::div: return sr.div(a, b);
  }
  throw Error("unknown operation");
}

Refinement refinement_witness(Semiring sr, const Scalar& a, const Scalar& b, const Scalar& c,
                              const Scalar& d) {
  for (const Scalar* s : {&a, &b, &c, &d}) sr.check(*s);
  Scalar total = sr.add(a, b);
  if (total != sr.add(c, d)) throw Error("not a refinement instance");
  if (total.is_zero()) return {sr.zero(), sr.zero(), sr.zero(), sr.zero()};

  if (sr.has_division()) {
    auto f = [&](const Scalar& p, const Scalar& q) { return sr.div(sr.mul(p, q), total); };
    return {f(a, c), f(a, d), f(b, c), f(b, d)};
  }
  // nat: x ranges over [0, min(a, c)], the rest is forced.
  for (Rational x = 0; x <= a.value() && x <= c.value(); ++x) {
    Rational y = a.value() - x, z = c.value() - x, t = b.value() - z;
    if (sgn(t) >= 0 && y + t == d.value())
      return {Scalar(x), Scalar(y), Scalar(z), Scalar(t)};
  }
  throw Error("not a refinement instance");
}

namespace {

std::vector<Scalar> carrier(Semiring sr, unsigned bound) {
  std::vector<Scalar> out;
  unsigned top = sr.id() == SemiringId::boolean ? 1 : bound;
  for (unsigned i = 0; i <= top; ++i) out.emplace_back(static_cast<long>(i));
  return out;
}

nlohmann::json tuple_json(std::initializer_list<std::pair<const char*, const Scalar*>> kv) {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [k, v] : kv) j[k] = v->str();
  return j;
}

// Calls `visit` on every function from `n` points into `values` and stops
// as soon as it returns true.
bool enumerate_functions(std::size_t n, const std::vector<Scalar>& values,
                         const std::function<bool(const std::vector<Scalar>&)>& visit) {
  std::vector<std::size_t> idx(n, 0);
  std::vector<Scalar> cur(n, values.front());
  while (true) {
    if (visit(cur)) return true;
    std::size_t i = 0;
    while (i < n && ++idx[i] == values.size()) {
      idx[i] = 0;
      cur[i] = values[0];
      ++i;
    }
    if (i == n) return false;
    cur[i] = values[idx[i]];
  }
}

// Same, restricted to natural-valued functions summing to `total`.
bool enumerate_compositions(std::size_t n, long total,
                            const std::function<bool(const std::vector<Scalar>&)>& visit) {
  if (n == 0) return total == 0 && visit({});
  std::vector<long> parts(n, 0);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) {
    if (i + 1 == n) {
      parts[i] = left;
      std::vector<Scalar> cur;
      for (long p : parts) cur.emplace_back(p);
      return visit(cur);
    }
    for (long v = 0; v <= left; ++v) {
      parts[i] = v;
      if (rec(i + 1, left - v)) return true;
    }
    return false;
  };
  return rec(0, total);
}

// Decides (E) for a single (a, b, c, d) over a finite carrier.
bool property_e_instance(Semiring sr, const std::vector<Scalar>& vals, const Scalar& a,
                         const Scalar& b, const Scalar& c, const Scalar& d) {
  std::vector<std::pair<Scalar, Scalar>> pairs;
  for (auto& x : vals)
    for (auto& y : vals)
      if (sr.add(x, y) == d) pairs.emplace_back(x, y);
  auto works = [&](const std::vector<Scalar>& t) {
    Scalar sa = sr.zero(), sb = sr.zero(), sc = sr.zero();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      sa = sr.add(sa, sr.mul(t[i], pairs[i].first));
      sb = sr.add(sb, sr.mul(t[i], pairs[i].second));
      sc = sr.add(sc, t[i]);
    }
    return sa == a && sb == b && sc == c;
  };
  if (sr.id() == SemiringId::boolean) return enumerate_functions(pairs.size(), vals, works);
  return enumerate_compositions(pairs.size(), c.value().get_num().get_si(), works);
}

LawReport by_theorem(Property p, std::string why) {
  LawReport r;
  r.law = "property " + std::string(to_string(p));
  r.detail = "certified: " + std::move(why);
  return r;
}

}  // namespace

LawReport check_property(Semiring sr, Property prop, unsigned bound) {
  if (sr.id() == SemiringId::nat && bound == 0) throw Error("bound must be positive");

  if (sr.id() == SemiringId::qplus) {
    switch (prop) {
      case Property::positive:
        return by_theorem(prop, "a sum of non-negative rationals is 0 only if both are 0");
      case Property::semifield: return by_theorem(prop, "a != 0 has inverse 1/a");
      case Property::refinable:
        return by_theorem(prop, "x=ac/(c+d), y=ad/(c+d), z=bc/(c+d), t=bd/(c+d)");
      case Property::B: return by_theorem(prop, "Q has no zero divisors");
      case Property::C: return by_theorem(prop, "a+c=b+c gives a=b by subtracting c in Q");
      case Property::D: return by_theorem(prop, "x=|a-b|");
      case Property::E:
        return by_theorem(prop, "t = c at the pair (a/c, b/c), t = 0 when c = 0");
      case Property::A: {
        LawReport r;
        r.law = "property A";
        r.instances = 1;
        Scalar h(1, 2);
        r.fail(tuple_json({{"a", &h}, {"b", &h}}));
        r.detail = "1/2 + 1/2 = 1";
        r.expect_holds = false;
        return r;
      }
    }
    throw Error("no decision procedure");
  }

  LawReport r;
  r.law = "property " + std::string(to_string(prop));
  r.expect_holds = sr.declared_properties().contains(prop);
  auto vals = carrier(sr, bound);
  const Scalar one = sr.one();

  for (auto& a : vals) {
    for (auto& b : vals) {
      switch (prop) {
        case Property::positive:
          ++r.instances;
          if (sr.add(a, b).is_zero() && !(a.is_zero() && b.is_zero()))
            r.fail(tuple_json({{"a", &a}, {"b", &b}}));
          break;
        case Property::semifield:
          if (b.is_zero() && !a.is_zero()) {
            ++r.instances;
            bool inv = false;
            for (auto& x : vals) inv = inv || sr.mul(a, x) == one;
            // Inverses beyond the bound are impossible on nat: a*x >= x.
            if (!inv) r.fail(tuple_json({{"a", &a}}));
          }
          break;
        case Property::A:
          ++r.instances;
          if (sr.add(a, b) == one && !a.is_zero() && !b.is_zero())
            r.fail(tuple_json({{"a", &a}, {"b", &b}}));
          break;
        case Property::B:
          ++r.instances;
          if (sr.mul(a, b).is_zero() && !a.is_zero() && !b.is_zero())
            r.fail(tuple_json({{"a", &a}, {"b", &b}}));
          break;
        case Property::D: {
          ++r.instances;
          bool ok = false;
          for (auto& x : vals) ok = ok || sr.add(a, x) == b || sr.add(b, x) == a;
          if (!ok) r.fail(tuple_json({{"a", &a}, {"b", &b}}));
          break;
        }
        case Property::C:
          for (auto& c : vals) {
            ++r.instances;
            if (sr.add(a, c) == sr.add(b, c) && a != b)
              r.fail(tuple_json({{"a", &a}, {"b", &b}, {"c", &c}}));
          }
          break;
        case Property::refinable:
        case Property::E:
          for (auto& c : vals) {
            for (auto& d : vals) {
              if (prop == Property::refinable) {
                if (sr.add(a, b) != sr.add(c, d)) continue;
                ++r.instances;
                bool ok = false;
                for (auto& x : vals)
                  for (auto& y : vals)
                    for (auto& z : vals)
                      for (auto& t : vals)
                        ok = ok || (sr.add(x, y) == a && sr.add(z, t) == b &&
                                    sr.add(x, z) == c && sr.add(y, t) == d);
                if (!ok) r.fail(tuple_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
              } else {
                if (sr.add(a, b) != sr.mul(c, d)) continue;
                ++r.instances;
                if (!property_e_instance(sr, vals, a, b, c, d))
                  r.fail(tuple_json({{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}));
              }
            }
          }
          break;
      }
    }
  }
  if (sr.id() == SemiringId::nat)
    r.detail = "carrier enumerated up to " + std::to_string(bound);
  else
    r.detail = "carrier enumerated";
  return r;
}

}  // namespace convexmod
