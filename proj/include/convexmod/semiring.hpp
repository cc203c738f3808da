#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "convexmod/law_report.hpp"

namespace convexmod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

/// A semiring element. All three supported semirings embed in the
/// non-negative rationals, so a scalar is stored as a reduced rational and
/// the semiring it belongs to decides which values are legal.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(long v) : value_(v) {}
  explicit Scalar(Rational v) : value_(std::move(v)) { value_.canonicalize(); }
  Scalar(long num, long den);

  const Rational& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  std::string str() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational value_{0};
};

enum class SemiringId : std::uint8_t { boolean, qplus, nat };

enum class Property { positive, semifield, refinable, A, B, C, D, E };

std::string_view to_string(SemiringId id);
std::string_view to_string(Property p);
SemiringId parse_semiring_id(std::string_view text);
Property parse_property(std::string_view text);

/// Handle on one of the supported semirings. Cheap to copy; all operations
/// are pure.
class Semiring {
 public:
  constexpr Semiring() = default;
  constexpr explicit Semiring(SemiringId id) : id_(id) {}

  static constexpr Semiring boolean() { return Semiring(SemiringId::boolean); }
  static constexpr Semiring qplus() { return Semiring(SemiringId::qplus); }
  static constexpr Semiring nat() { return Semiring(SemiringId::nat); }

  constexpr SemiringId id() const { return id_; }
  std::string_view name() const { return to_string(id_); }
  bool has_division() const { return id_ != SemiringId::nat; }
  bool is_positive_semifield() const { return id_ != SemiringId::nat; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Right division a / b. Throws for nat ("not a semifield") and for b = 0
  /// ("not invertible").
  Scalar div(const Scalar& a, const Scalar& b) const;

  /// True when the value is a legal element of this semiring's carrier.
  bool contains(const Scalar& s) const;
  /// Throws unless `contains(s)`.
  const Scalar& check(const Scalar& s) const;

  /// Parses `p`, `p/q` (qplus), `p` (nat) or `0`/`1` (bool); `true`/`false`
  /// are accepted for bool as well.
  Scalar parse(std::string_view text) const;

  std::set<Property> declared_properties() const;

  friend constexpr bool operator==(Semiring a, Semiring b) { return a.id_ == b.id_; }

 private:
  SemiringId id_ = SemiringId::qplus;
};

enum class ArithOp { add, mul, div };

Scalar arith(Semiring sr, ArithOp op, const Scalar& a, const Scalar& b);

struct Refinement {
  Scalar x, y, z, t;
};

/// Given a + b = c + d, returns x, y, z, t with x + y = a, z + t = b,
/// x + z = c and y + t = d. Uses x = ac/(c+d), y = ad/(c+d), z = bc/(c+d),
/// t = bd/(c+d) on positive semifields, and exhaustive search on nat.
Refinement refinement_witness(Semiring sr, const Scalar& a, const Scalar& b, const Scalar& c,
                              const Scalar& d);

/// Decides one of the semiring properties. Finite carriers (bool, nat cut
/// off at `bound`) are enumerated; for qplus the properties that hold are
/// certified by construction and (A) is refuted by 1/2 + 1/2 = 1.
LawReport check_property(Semiring sr, Property prop, unsigned bound = 6);

}  // namespace convexmod
