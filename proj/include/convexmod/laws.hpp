#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "convexmod/composite.hpp"
#include "convexmod/law_report.hpp"

namespace convexmod {

struct SuiteOptions {
  Semiring sr;
  unsigned xsize = 2;       // |X| for exhaustive suites
  unsigned trials = 50;     // random instances for qplus
  std::uint64_t seed = 0;
  unsigned value_bound = 2; // largest nat weight enumerated
};

/// Symbols p, q, r, s, ... (then x5, x6, ...) naming a set of size n.
std::vector<Symbol> standard_vars(unsigned n);

/// The diagrams of a weak distributive law for δ: the unit triangle for P,
/// both multiplication squares, and separately the dropped unit triangle for
/// S, which is expected to hold exactly when the semiring satisfies (A).
/// Bool and nat are evaluated exhaustively over small supports with the
/// definitional δ; Q+ on random instances with the hull form.
std::vector<LawReport> check_weak_law(const SuiteOptions& opt);

/// Naturality of δ, plus the search for a non-natural instance of the bare
/// choice set c over bool, widening |X| until one is found.
std::vector<LawReport> check_naturality(const SuiteOptions& opt);

enum class AlgebraKind { free, interval };

/// a ∘ S(b) = b ∘ P(a) ∘ δ on the free δ-algebra P_cf S X with a = α and b
/// the hull of the union. The interval algebra is the case X = {x}.
LawReport pentagon_check(AlgebraKind kind, const Weighting<std::set<ConvexSet>>& phi);

std::vector<LawReport> check_pentagon(const SuiteOptions& opt);

/// The non-monotone extension of P to relations and its weak law P P → P P.
std::vector<LawReport> check_appendix_a(const SuiteOptions& opt);

}  // namespace convexmod
