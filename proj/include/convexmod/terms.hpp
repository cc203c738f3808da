#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "convexmod/convex.hpp"

namespace convexmod {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Terms over ⊥, ⊔, 0, + and scalar multiplication.
struct Term {
  enum class Kind { bot, zero, var, scale, add, join };

  Kind kind;
  Symbol name;    // var
  Scalar scalar;  // scale
  TermPtr lhs, rhs;

  static TermPtr bot();
  static TermPtr zero();
  static TermPtr var(Symbol x);
  static TermPtr scale(Scalar lambda, TermPtr t);
  static TermPtr add(TermPtr a, TermPtr b);
  static TermPtr join(TermPtr a, TermPtr b);
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Grammar, loosest to tightest, all left-associative:
///   term   := sum ('|' sum)*
///   sum    := scaled ('+' scaled)*
///   scaled := scalar '.' scaled | atom
///   atom   := 'bot' | '0' | ident | '(' term ')'
TermPtr parse_term(std::string_view text, Semiring sr);

/// Prints with the fewest parentheses that parse back to the same tree.
std::string print_term(const TermPtr& t);

bool structurally_equal(const TermPtr& a, const TermPtr& b);

SymbolSet free_variables(const TermPtr& t);

/// The convex set denoted by `t`. Every free variable must be in `vars`.
ConvexSet eval(const TermPtr& t, Semiring sr, const SymbolSet& vars);

/// Equality modulo the axioms, decided on the denotations.
bool term_equal(const TermPtr& a, const TermPtr& b, Semiring sr, const SymbolSet& vars);

/// A term denoting `a`: the join over generators of Σ φ(x)·x.
TermPtr synthesize(const ConvexSet& a);

struct Interval {
  bool empty = true;
  Scalar lo, hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Interval spanned by a convex set of Q+ over the single variable `var`.
Interval render_interval(const ConvexSet& a, const Symbol& var);

using Vertex = std::pair<Scalar, Scalar>;

/// Canonical generators of a convex set of Q+ over two variables, as points
/// (x, y) in counterclockwise order around their centroid, starting from
/// the direction just above angle -π.
std::vector<Vertex> render_polygon(const ConvexSet& a, const Symbol& x, const Symbol& y);

std::string to_string(const Interval& i);

}  // namespace convexmod
