#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"

namespace convexmod {

/// Outcome of checking one law, axiom or diagram on a batch of instances.
///
/// `expect_holds` records what the check is supposed to find. Some laws are
/// expected to fail (the dropped unit triangle, property (A) over Q+), and
/// such a check passes by producing a counterexample.
struct LawReport {
  std::string law;
  bool expect_holds = true;
  bool holds = true;
  std::size_t instances = 0;
  nlohmann::json witness;  // inputs and both evaluated sides of the first violation
  std::string detail;

  bool passed() const { return holds == expect_holds; }

  /// Records a violation. Only the first one is kept as the witness.
  void fail(nlohmann::json w) {
    if (holds) witness = std::move(w);
    holds = false;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"law", law},
                     {"expected", expect_holds ? "holds" : "fails"},
                     {"observed", holds ? "holds" : "fails"},
                     {"instances", instances},
                     {"pass", passed()}};
    if (!witness.is_null()) j["witness"] = witness;
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

}  // namespace convexmod
