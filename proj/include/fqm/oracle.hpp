#pragma once

#include <vector>

#include "fqm/fqm.hpp"

namespace fqm {

inline constexpr long kDefaultOracleBudget = 2000;

enum class IsoVerdict { yes, no, unknown };

struct IsoResult {
    IsoVerdict verdict = IsoVerdict::unknown;
    std::vector<Element> witness;  // images of m1's generators in m2 (yes only)
};

// Exhaustive search for an isometric isomorphism m1 -> m2. Deterministic:
// candidates are tried in lexicographic element order, so the reported
// witness is the lexicographically first one. |M| beyond the budget gives
// unknown. The search itself only uses enumeration-level invariants
// (cardinality, elementary divisors, Q histogram), never the decomposition
// machinery it is used to certify.
IsoResult iso_oracle(const Fqm& m1, const Fqm& m2, long budget = kDefaultOracleBudget);

// Necessary-condition fast path: elementary divisors, exact sigma, and the
// Q histogram (when within budget) all agree. False certifies non-isomorphism.
bool invariants_match(const Fqm& m1, const Fqm& m2, long budget = kDefaultEnumBudget);

// Invariant factors > 1 of the underlying group, ascending divisibility.
std::vector<ZZ> elementary_divisors(const Fqm& m);

}  // namespace fqm
