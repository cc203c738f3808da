#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "convexmod/semiring.hpp"

namespace convexmod {

/// Equality system  Σ_j λ_j · columns[j] = target,  λ ≥ 0.
///
/// For hull membership the caller appends a homogenizing row of ones to
/// every column and a 1 to the target, which forces Σ λ_j = 1.
struct FeasibilitySystem {
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> target;
};

/// Phase-1 simplex over exact rationals with Bland's rule. Returns a
/// non-negative witness, already checked by substitution, or nullopt when the
/// system has no non-negative solution. Each pivot's tableau is written to
/// `trace` when it is non-null.
std::optional<std::vector<Rational>> feasible(const FeasibilitySystem& sys,
                                              std::ostream* trace = nullptr);

}  // namespace convexmod
