#pragma once

#include <random>
#include <vector>

#include "fqm/fqm.hpp"
#include "fqm/jordan.hpp"
#include "fqm/oracle.hpp"

namespace fqm::test {

using Rng = std::mt19937_64;

inline long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// random indecomposable with |M| <= cap
inline JordanComponent random_component(Rng& rng, long cap) {
    for (;;) {
        switch (rand_in(rng, 0, 3)) {
            case 0: {  // odd A
                static const long primes[] = {3, 5, 7, 11, 13};
                ZZ p = primes[rand_in(rng, 0, 4)];
                int r = static_cast<int>(rand_in(rng, 1, 3));
                ZZ pr;
                mpz_pow_ui(pr.get_mpz_t(), p.get_mpz_t(), r);
                if (pr > cap) continue;
                ZZ a = rand_in(rng, 1, 50);
                if (a % p == 0) a += 1;
                return JordanComponent::A(p, r, a);
            }
            case 1: {  // 2-adic A
                int r = static_cast<int>(rand_in(rng, 1, 5));
                if ((ZZ(1) << r) > cap) continue;
                return JordanComponent::A(2, r, 2 * rand_in(rng, 0, 24) + 1);
            }
            case 2: {
                int r = static_cast<int>(rand_in(rng, 1, 4));
                if ((ZZ(1) << (2 * r)) > cap) continue;
                return JordanComponent::B(r);
            }
            default: {
                int r = static_cast<int>(rand_in(rng, 1, 4));
                if ((ZZ(1) << (2 * r)) > cap) continue;
                return JordanComponent::C(r);
            }
        }
    }
}

// orthogonal sum of up to max_components random indecomposables, |M| <= cap
inline Fqm random_module(Rng& rng, int max_components, long cap) {
    Fqm m = zero_module();
    const int n = static_cast<int>(rand_in(rng, 1, max_components));
    for (int i = 0; i < n; ++i) {
        JordanComponent c = random_component(rng, cap);
        Fqm part = component_module(c);
        if (m.order() * part.order() > cap) break;
        m = direct_sum(m, part);
    }
    if (m.rank() == 0) m = component_module(random_component(rng, cap));
    return m;
}

// random presentation change: shears e_i <- e_i + t e_j with t a multiple of
// d_j / gcd(d_i, d_j), plus unit rescalings; orders stay fixed
inline Fqm scramble(Rng& rng, const Fqm& m, int steps = 12) {
    const int k = m.rank();
    if (k == 0) return m;
    std::vector<Element> gens;
    for (int i = 0; i < k; ++i) gens.push_back(m.generator(i));
    for (int s = 0; s < steps; ++s) {
        int i = static_cast<int>(rand_in(rng, 0, k - 1));
        if (rand_in(rng, 0, 3) == 0) {
            // unit rescaling
            ZZ u = rand_in(rng, 1, 40);
            ZZ g;
            mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), m.orders()[i].get_mpz_t());
            if (g != 1) continue;
            gens[i] = m.scale(u, gens[i]);
            continue;
        }
        int j = static_cast<int>(rand_in(rng, 0, k - 1));
        if (i == j) continue;
        ZZ g;
        mpz_gcd(g.get_mpz_t(), m.orders()[i].get_mpz_t(), m.orders()[j].get_mpz_t());
        ZZ step = m.orders()[j] / g;
        ZZ t = step * rand_in(rng, 0, 6);
        gens[i] = m.add(gens[i], m.scale(t, gens[j]));
    }
    std::vector<QZ> qd(k);
    std::vector<std::vector<QZ>> b(k, std::vector<QZ>(k));
    for (int i = 0; i < k; ++i) {
        qd[i] = m.eval_q(gens[i]);
        for (int j = 0; j < k; ++j) b[i][j] = m.eval_b(gens[i], gens[j]);
    }
    return Fqm::from_presentation(m.orders(), std::move(qd), std::move(b));
}

inline std::vector<Element> all_elements(const Fqm& m) {
    std::vector<Element> out;
    m.for_each_element(
        [&](const std::vector<ZZ>& coords, const QZ&) { out.push_back(Element{coords}); });
    return out;
}

// sum of components as a module
inline Fqm module_of_components(const std::vector<JordanComponent>& cs) {
    Fqm m = zero_module();
    for (const auto& c : cs) m = direct_sum(m, component_module(c));
    return m;
}

// applies a generator-image witness to an arbitrary element
inline Element apply_witness(const Fqm& target, const std::vector<Element>& witness,
                             const std::vector<ZZ>& coords) {
    Element y = target.zero();
    for (size_t i = 0; i < coords.size(); ++i)
        y = target.add(y, target.scale(coords[i], witness[i]));
    return y;
}

}  // namespace fqm::test
