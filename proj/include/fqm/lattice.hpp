#pragma once

#include "fqm/fqm.hpp"
#include "fqm/zmatrix.hpp"

namespace fqm {

// A nondegenerate integral lattice given by its Gram matrix
// (symmetric, det != 0; the 0x0 lattice is allowed).
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(ZMat gram);

    const ZMat& gram() const { return gram_; }
    int rank() const { return gram_.rows(); }

private:
    ZMat gram_;
};

bool is_even(const Lattice& l);

// The quotient L#/L with Q(v + L) = B(v, v)/2 mod Z, presented via the
// Smith normal form of the Gram matrix. Throws odd_lattice for odd input.
Fqm discriminant_module(const Lattice& l);

Signature lattice_signature(const Lattice& l);
int sign_mod8(const Lattice& l);

// sigma(D_L) = e^{-2 pi i sign(L)/8}: exact comparison of the Mu8 exponent,
// plus a 1e-9 numeric comparison when |D_L| is within the enumeration budget.
bool milgram_check(const Lattice& l, long budget = kDefaultEnumBudget);

Lattice lattice_direct_sum(const Lattice& l1, const Lattice& l2);

}  // namespace fqm
