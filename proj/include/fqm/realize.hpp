#pragma once

#include "fqm/fqm.hpp"
#include "fqm/lattice.hpp"

namespace fqm {

// l x l tridiagonal matrix with 2 on the diagonal and 1 off it; det = l + 1.
ZMat f_chain(int l);

// Even lattice of least rank whose discriminant module is the given
// indecomposable. Every constructed lattice is self-checked: even,
// nonsingular, and its discriminant module matches the component
// (oracle-isomorphic within budget, invariant-equal beyond).
Lattice realize_even(const JordanComponent& c);

// Positive definite even lattice of least rank for the component;
// self-checked like realize_even plus an exact definiteness check.
Lattice realize_posdef(const JordanComponent& c);

// Least attainable rank for a lattice realizing the component; the value
// realize_even / realize_posdef produce.
int expected_min_rank(const JordanComponent& c, bool posdef);

// Checks the S-factorization conditions in the given basis only:
// gram = diag(p^r, 1, ..., 1) * S (or diag(2^r, 2^r, 1, ..., 1) * S for
// B/C) with S integral, |det S| = 1 and the parity/Legendre conditions.
// A false result means this basis does not exhibit the form.
bool verify_form_conditions(const Lattice& l, const JordanComponent& c);

// Jordan decomposition followed by a block-diagonal sum of per-component
// realizations; the zero module yields the 0x0 lattice.
Lattice realize_module(const Fqm& m, bool posdef);

}  // namespace fqm
