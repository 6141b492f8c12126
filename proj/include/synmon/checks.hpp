#pragma once

// Invariant suites run by the `check` and `corpus` commands and by the
// acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include "synmon/freemon.hpp"
#include "synmon/langcore.hpp"
#include "synmon/limits.hpp"

namespace synmon {

  struct CheckResult {
    std::string name;
    bool        passed = false;
    std::string detail;  // first counterexample, or a summary
  };

  // Min(L) structure and language, Syn L laws, recognition (seeded), the
  // bounded-context equivalence on small elements, and agreement of the
  // transition-monoid and quotient routes. May throw CapacityError.
  std::vector<CheckResult> check_variety(VarietyTag    tag,
                                         Dfa const&    l0,
                                         std::uint64_t seed   = 0,
                                         Limits const& limits = {});

  // Atom count, isomorphism and containment checks for the dual monoid, and
  // the left-derivative atom count.
  std::vector<CheckResult> check_duality(Dfa const& l0, Limits const& limits = {});

  bool all_passed(std::vector<CheckResult> const& results);

}  // namespace synmon
