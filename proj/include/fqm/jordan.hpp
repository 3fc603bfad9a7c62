#pragma once

#include <vector>

#include "fqm/fqm.hpp"

namespace fqm {

// Isomorphic presentation of a p-primary module with generator orders
// sorted descending (stable), Q and B transported along the permutation.
Fqm standard_presentation(const Fqm& m, const ZZ& p);

struct BestPair {
    int i = 0, j = 0;  // 0-based generator indices, i <= j
    int beta = 0;      // p-adic denominator exponent of Q(e_i) resp. Q(e_i + e_j)
};

// The pair minimizing max(r_i, r_j) - beta (odd p) resp.
// max(r_i, r_j) + 1 - beta (p = 2) over i <= j; ties broken
// lexicographically. Input must be a standardized p-primary presentation.
BestPair best_pair(const Fqm& m);

// Recursive splitting of a p-primary module into indecomposables.
std::vector<JordanComponent> decompose_odd(const Fqm& m, const ZZ& p);
std::vector<JordanComponent> decompose_two(const Fqm& m);

// Primary decomposition followed by the per-prime splittings; the zero
// module decomposes as the empty list.
std::vector<JordanComponent> jordan_decomposition(const Fqm& m);

}  // namespace fqm
