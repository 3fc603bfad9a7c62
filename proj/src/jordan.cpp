#include "fqm/jordan.hpp"

#include <algorithm>
#include <numeric>

#include "fqm/number_theory.hpp"

namespace fqm {

namespace {

// p such that every generator order is a positive power of it
ZZ primary_prime(const Fqm& m) {
    if (m.rank() == 0) throw invalid_input("primary module expected, got the zero module");
    for (ZZ t = 2; ; t == 2 ? t = 3 : t += 2) {
        if (m.orders()[0] % t == 0) {
            for (const auto& d : m.orders()) {
                ZZ rest = d;
                while (rest % t == 0) rest /= t;
                if (rest != 1) throw invalid_input("module is not primary");
            }
            return t;
        }
        if (t * t > m.orders()[0]) {
            // orders[0] is prime itself
            ZZ p = m.orders()[0];
            for (const auto& d : m.orders()) {
                ZZ rest = d;
                while (rest % p == 0) rest /= p;
                if (rest != 1) throw invalid_input("module is not primary");
            }
            return p;
        }
    }
}

Fqm permute_presentation(const Fqm& m, const std::vector<int>& perm) {
    const int k = m.rank();
    std::vector<ZZ> orders(k);
    std::vector<QZ> qd(k);
    std::vector<std::vector<QZ>> b(k, std::vector<QZ>(k));
    for (int i = 0; i < k; ++i) {
        orders[i] = m.orders()[perm[i]];
        qd[i] = m.q_gen(perm[i]);
        for (int j = 0; j < k; ++j) b[i][j] = m.b_gen(perm[i], perm[j]);
    }
    return Fqm::from_presentation(std::move(orders), std::move(qd), std::move(b));
}

int order_exponent(const Fqm& m, int i, const ZZ& p) {
    return padic_valuation(m.orders()[i], p);
}

}  // namespace

Fqm standard_presentation(const Fqm& m, const ZZ& p) {
    for (const auto& d : m.orders()) {
        ZZ rest = d;
        while (rest % p == 0) rest /= p;
        if (rest != 1) throw invalid_input("standard_presentation: module is not p-primary");
    }
    std::vector<int> perm(m.rank());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return m.orders()[a] > m.orders()[b]; });
    return permute_presentation(m, perm);
}

BestPair best_pair(const Fqm& m) {
    const ZZ p = primary_prime(m);
    const int k = m.rank();
    const int two_shift = p == 2 ? 1 : 0;
    bool have = false;
    BestPair best;
    long best_defect = 0;
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            QZ q = i == j ? m.q_gen(i) : m.eval_q(m.add(m.generator(i), m.generator(j)));
            int beta = q.is_zero() ? 0 : padic_valuation(q.order(), p);
            long defect =
                std::max(order_exponent(m, i, p), order_exponent(m, j, p)) + two_shift - beta;
            if (!have || defect < best_defect) {
                have = true;
                best_defect = defect;
                best = BestPair{i, j, beta};
            }
        }
    }
    if (best_defect > two_shift)
        throw degenerate_module("best_pair: no pair within the nondegeneracy bound");
    return best;
}

namespace {

std::vector<JordanComponent> decompose_primary(const Fqm& m0, const ZZ& p) {
    std::vector<JordanComponent> out;
    Fqm work = standard_presentation(m0, p);
    while (work.rank() > 0) {
        const BestPair bp = best_pair(work);
        const int rmax = std::max(order_exponent(work, bp.i, p), order_exponent(work, bp.j, p));
        const int defect = rmax + (p == 2 ? 1 : 0) - bp.beta;
        std::vector<Element> split_gens;
        if (defect == 0) {
            // rank-1 split: <e_i> or <e_i + e_j> is A_{p^rmax}^a
            Element g = bp.i == bp.j ? work.generator(bp.i)
                                     : work.add(work.generator(bp.i), work.generator(bp.j));
            QZ q = work.eval_q(g);
            out.push_back(JordanComponent::A(p, rmax, q.num()));
            split_gens = {g};
        } else if (p == 2 && defect == 1) {
            // all beta_{ij} <= max(r_i, r_j): split the rank-2 submodule
            // <e_0, e_j1> where B(2^{r1 - 1} e_0, e_j1) != 0
            const int r1 = order_exponent(work, 0, p);
            int j1 = -1;
            for (int j = 1; j < work.rank(); ++j) {
                if (padic_valuation(work.b_gen(0, j).order(), p) == r1) {
                    j1 = j;
                    break;
                }
            }
            if (j1 < 0) throw degenerate_module("decompose_two: no partner generator found");
            ZZ n = ZZ(1) << r1;
            const QZ q0 = work.q_gen(0), qj = work.q_gen(j1);
            // G is D_{2^r1}^{a,b,c} with a = 2^r1 Q(e_0), b = 2^r1 B(e_0,e_j1), c = 2^r1 Q(e_j1)
            ZZ a = q0.num() * (n / q0.den());
            ZZ c = qj.num() * (n / qj.den());
            ZZ b = work.b_gen(0, j1).num();
            out.push_back(normalize_D(r1, a, b, c));
            split_gens = {work.generator(0), work.generator(j1)};
        } else {
            throw degenerate_module("decompose: defect outside the nondegenerate range");
        }
        work = standard_presentation(orthogonal_complement(work, split_gens).sub, p);
    }
    return out;
}

}  // namespace

std::vector<JordanComponent> decompose_odd(const Fqm& m, const ZZ& p) {
    if (p == 2 || !is_prime(p)) throw invalid_input("decompose_odd: p must be an odd prime");
    return decompose_primary(m, p);
}

std::vector<JordanComponent> decompose_two(const Fqm& m) { return decompose_primary(m, 2); }

std::vector<JordanComponent> jordan_decomposition(const Fqm& m) {
    if (m.rank() == 0) return {};
    if (!is_nondegenerate(m)) throw degenerate_module("jordan_decomposition: degenerate module");
    std::vector<JordanComponent> out;
    for (const auto& [p, comp] : primary_decomposition(m)) {
        auto part = decompose_primary(comp, p);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Mu8 sigma_exact(const Fqm& m) {
    Mu8 s;
    for (const auto& c : jordan_decomposition(m)) s = s * sigma_of_component(c);
    return s;
}

}  // namespace fqm
