#pragma once

#include <complex>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fqm/rational.hpp"
#include "fqm/zmatrix.hpp"

namespace fqm {

inline constexpr long kDefaultEnumBudget = 100000;

// An element of a presented module, coefficients reduced modulo the
// generator orders.
struct Element {
    std::vector<ZZ> coeffs;

    bool operator==(const Element& o) const { return coeffs == o.coeffs; }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

// A finite quadratic module presented on independent cyclic generators
// e_1, ..., e_k of orders d_i >= 2, with Q(e_i) and B(e_i, e_j) stored in Q/Z.
// The presentation itself defines the group (+) Z/d_i; well-definedness of Q
// on it is validated at construction. Nondegeneracy is NOT an invariant of
// the type: query is_nondegenerate(), operations that need it check it.
class Fqm {
public:
    Fqm() = default;

    // Validates dimensions, d_i >= 2, symmetry, b[i][i] = 2 q[i],
    // ord(b[i][j]) | gcd(d_i, d_j) and d_i^2 q[i] = 0.
    static Fqm from_presentation(std::vector<ZZ> orders, std::vector<QZ> qdiag,
                                 std::vector<std::vector<QZ>> boff);

    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<ZZ>& orders() const { return orders_; }
    const QZ& q_gen(int i) const { return qdiag_[i]; }
    const QZ& b_gen(int i, int j) const { return boff_[i][j]; }
    ZZ order() const;  // |M|

    Element element(std::vector<ZZ> coeffs) const;  // reduces mod orders
    Element generator(int i) const;
    Element zero() const { return Element{std::vector<ZZ>(orders_.size(), ZZ(0))}; }
    Element add(const Element& x, const Element& y) const;
    Element scale(const ZZ& k, const Element& x) const;

    QZ eval_q(const Element& x) const;
    QZ eval_b(const Element& x, const Element& y) const;
    ZZ element_order(const Element& x) const;

    // Visits every element in lexicographic coefficient order together with
    // its Q value; maintained incrementally, O(|M| * rank) ring operations.
    void for_each_element(const std::function<void(const std::vector<ZZ>&, const QZ&)>& fn) const;

private:
    std::vector<ZZ> orders_;
    std::vector<QZ> qdiag_;
    std::vector<std::vector<QZ>> boff_;
};

Fqm zero_module();

// The indecomposable modules and their relatives:
//   make_A(p, r, a): Z/p^r with Q(x) = a x^2 / p^r   (p odd)
//                    Z/2^r with Q(x) = a x^2 / 2^(r+1)
//   make_B(r), make_C(r): rank-2 2-adic indecomposables
//   make_D(r, a, b, c): (Z/2^r)^2 with Q = (a x^2 + b xy + c y^2)/2^r, b odd
//   make_Am(m): Z/m with Q = x^2/m (odd m) or x^2/(2m) (even m); m = 1 gives
//   the zero module.
Fqm make_A(const ZZ& p, int r, const ZZ& a);
Fqm make_B(int r);
Fqm make_C(int r);
Fqm make_D(int r, const ZZ& a, const ZZ& b, const ZZ& c);
Fqm make_Am(const ZZ& m);

Fqm direct_sum(const Fqm& m1, const Fqm& m2);

// Generators of { x : B(x, e_j) = 0 for all j }; possibly redundant.
std::vector<Element> radical(const Fqm& m);
bool is_nondegenerate(const Fqm& m);

struct ComplementResult {
    Fqm sub;                     // gens^perp re-presented on independent cyclic generators
    std::vector<Element> embed;  // its generators as elements of the ambient module
};

// Orthogonal complement of the subgroup generated by `gens`.
ComplementResult orthogonal_complement(const Fqm& m, const std::vector<Element>& gens);

// One entry per prime dividing |M|, ascending; component at p is generated
// by the prime-to-p multiples of the generators.
std::vector<std::pair<ZZ, Fqm>> primary_decomposition(const Fqm& m);

// Normalized Gauss sum by full enumeration: |M| must not exceed the budget.
std::complex<double> sigma_numeric(const Fqm& m, long budget = kDefaultEnumBudget);

// Exact sigma invariant via Jordan decomposition and the closed forms;
// requires nondegenerate input. (Implemented with the decomposition code.)
Mu8 sigma_exact(const Fqm& m);

// Element counts by Q value; an isometry invariant.
std::map<QZ, ZZ> q_histogram(const Fqm& m, long budget = kDefaultEnumBudget);

// Canonical a-class representative: for odd p, 1 or the smallest positive
// non-residue; for p = 2, a mod 4 when r = 1 and a mod 8 when r > 1.
ZZ a_class(const ZZ& p, int r, const ZZ& a);

// A tagged indecomposable: A(p, r, a-class) | B(r) | C(r).
struct JordanComponent {
    enum class Tag { A, B, C };
    Tag tag;
    ZZ p;   // A only
    int r;
    ZZ a;   // A only, canonical class representative

    static JordanComponent A(const ZZ& p, int r, const ZZ& a);
    static JordanComponent B(int r) { return JordanComponent{Tag::B, 2, r, 0}; }
    static JordanComponent C(int r) { return JordanComponent{Tag::C, 2, r, 0}; }
    bool operator==(const JordanComponent& o) const {
        return tag == o.tag && p == o.p && r == o.r && a == o.a;
    }
    std::string str() const;
};

// D_{2^r}^{a,b,c} with b odd is B(r) when a and c are both odd, else C(r).
JordanComponent normalize_D(int r, const ZZ& a, const ZZ& b, const ZZ& c);

Fqm component_module(const JordanComponent& c);
Mu8 sigma_of_component(const JordanComponent& c);

// Canonical HNF basis (rows) of the lift to Z^k of the subgroup generated by
// `gens`; always contains the relation lattice diag(orders). Two generating
// sets span the same subgroup iff the bases are equal.
ZMat subgroup_lattice(const Fqm& m, const std::vector<Element>& gens);
ZZ subgroup_order(const Fqm& m, const std::vector<Element>& gens);

}  // namespace fqm
