// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerances and budgets in code.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "fqm/jordan.hpp"
#include "fqm/number_theory.hpp"
#include "fqm/oracle.hpp"
#include "fqm/realize.hpp"

using namespace fqm;

namespace {

using Rng = std::mt19937_64;
int g_failures = 0;

void report(int number, const char* name, bool pass, double seconds) {
    std::printf("%s  criterion %d: %s  (%.2fs)\n", pass ? "PASS" : "FAIL", number, name, seconds);
    if (!pass) ++g_failures;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

long rand_in(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

JordanComponent random_component(Rng& rng, long cap) {
    for (;;) {
        switch (rand_in(rng, 0, 3)) {
            case 0: {
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
            case 1: {
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

Fqm scramble(Rng& rng, const Fqm& m, int steps = 12) {
    const int k = m.rank();
    if (k == 0) return m;
    std::vector<Element> gens;
    for (int i = 0; i < k; ++i) gens.push_back(m.generator(i));
    for (int s = 0; s < steps; ++s) {
        int i = static_cast<int>(rand_in(rng, 0, k - 1));
        if (rand_in(rng, 0, 3) == 0) {
            ZZ u = rand_in(rng, 1, 40);
            if (gcd(u, m.orders()[i]) != 1) continue;
            gens[i] = m.scale(u, gens[i]);
            continue;
        }
        int j = static_cast<int>(rand_in(rng, 0, k - 1));
        if (i == j) continue;
        ZZ step = m.orders()[j] / gcd(m.orders()[i], m.orders()[j]);
        gens[i] = m.add(gens[i], m.scale(step * rand_in(rng, 0, 6), gens[j]));
    }
    std::vector<QZ> qd(k);
    std::vector<std::vector<QZ>> b(k, std::vector<QZ>(k));
    for (int i = 0; i < k; ++i) {
        qd[i] = m.eval_q(gens[i]);
        for (int j = 0; j < k; ++j) b[i][j] = m.eval_b(gens[i], gens[j]);
    }
    return Fqm::from_presentation(m.orders(), std::move(qd), std::move(b));
}

// the full grid of criterion 2 / criterion 8
std::vector<JordanComponent> acceptance_grid() {
    std::vector<JordanComponent> grid;
    for (long p : {3, 5, 7, 11, 13})
        for (int r : {1, 2, 3})
            for (int residue : {1, -1}) {
                ZZ a = 1;
                if (residue == -1) {
                    a = 2;
                    while (kronecker(a, p) != -1) ++a;
                }
                grid.push_back(JordanComponent::A(p, r, a));
            }
    for (int r : {1, 2, 3, 4})
        for (long a : {1, 3, 5, 7}) grid.push_back(JordanComponent::A(2, r, a));
    for (int r : {1, 2, 3}) {
        grid.push_back(JordanComponent::B(r));
        grid.push_back(JordanComponent::C(r));
    }
    return grid;
}

bool matches_component(const Lattice& l, const Fqm& target) {
    Fqm d = discriminant_module(l);
    if (target.order() <= 2000) return iso_oracle(d, target, 2000).verdict == IsoVerdict::yes;
    return invariants_match(d, target, 100000);
}

bool criterion1() {
    if (realize_even(JordanComponent::A(3, 1, 1)).gram() != ZMat{{6, 3}, {3, 2}}) return false;
    for (int r = 1; r <= 3; ++r) {
        ZMat expect(2, 2);
        expect.at(0, 1) = expect.at(1, 0) = ZZ(1) << r;
        if (realize_even(JordanComponent::C(r)).gram() != expect) return false;
    }
    for (int r = 2; r <= 4; ++r) {
        ZMat plus(1, 1), minus(1, 1);
        plus.at(0, 0) = ZZ(1) << r;
        minus.at(0, 0) = -(ZZ(1) << r);
        if (realize_even(JordanComponent::A(2, r, 1)).gram() != plus) return false;
        if (realize_even(JordanComponent::A(2, r, 7)).gram() != minus) return false;
    }
    return true;
}

bool criterion2() {
    for (const auto& c : acceptance_grid()) {
        Fqm target = component_module(c);
        if (!matches_component(realize_even(c), target)) return false;
        if (!matches_component(realize_posdef(c), target)) return false;
    }
    return true;
}

bool criterion3() {
    Rng rng(1003);
    int done = 0;
    while (done < 200) {
        Lattice l{ZMat(0, 0)};
        for (;;) {
            JordanComponent c = random_component(rng, 500);
            Lattice part = rand_in(rng, 0, 1) ? realize_even(c) : realize_posdef(c);
            if (l.rank() + part.rank() > 12) break;
            Lattice next = lattice_direct_sum(l, part);
            if (abs(det(next.gram())) > 10000) break;
            l = next;
            if (rand_in(rng, 0, 2) == 0 && l.rank() > 0) break;
        }
        if (l.rank() == 0) continue;
        ++done;
        const int sgn = sign_mod8(l);
        Fqm d = discriminant_module(l);
        if (sigma_exact(d).exp != (8 - sgn) % 8) return false;
        std::complex<double> expect = Mu8(-sgn).value();
        if (std::abs(sigma_numeric(d, 100000) - expect) >= 1e-9) return false;
    }
    return true;
}

bool criterion4() {
    // all A(p, r, a) with p^r <= 2000
    for (long p = 2; p <= 2000; ++p) {
        if (!is_prime(p)) continue;
        for (int r = 1;; ++r) {
            ZZ pr;
            mpz_pow_ui(pr.get_mpz_t(), ZZ(p).get_mpz_t(), r);
            if (pr > 2000) break;
            std::vector<ZZ> classes;
            if (p == 2) {
                classes = r == 1 ? std::vector<ZZ>{1, 3} : std::vector<ZZ>{1, 3, 5, 7};
            } else {
                ZZ nonres = 2;
                while (kronecker(nonres, p) != -1) ++nonres;
                classes = {1, nonres};
            }
            for (const ZZ& a : classes) {
                Fqm m = make_A(p, r, a);
                std::complex<double> closed = sigma_of_component(JordanComponent::A(p, r, a)).value();
                if (std::abs(sigma_numeric(m, 100000) - closed) >= 1e-9) return false;
            }
        }
    }
    for (int r = 1; r <= 5; ++r) {
        Fqm b = make_B(r), c = make_C(r);
        if (sigma_exact(b) != Mu8(4L * r)) return false;  // (-1)^r
        if (sigma_exact(c) != Mu8(0)) return false;       // exactly 1
        if (std::abs(sigma_numeric(b, 2000000) - Mu8(4L * r).value()) >= 1e-9) return false;
        if (std::abs(sigma_numeric(c, 2000000) - std::complex<double>(1, 0)) >= 1e-9) return false;
    }
    return true;
}

bool criterion5() {
    Rng rng(1005);
    for (int t = 0; t < 300; ++t) {
        Fqm m = zero_module();
        const int parts = static_cast<int>(rand_in(rng, 1, 4));
        for (int i = 0; i < parts; ++i) {
            Fqm part = component_module(random_component(rng, 1000));
            if (m.order() * part.order() > 1000) break;
            m = direct_sum(m, part);
        }
        if (m.rank() == 0) m = component_module(random_component(rng, 1000));
        Fqm scrambled = scramble(rng, m);
        Fqm rebuilt = zero_module();
        for (const auto& c : jordan_decomposition(scrambled))
            rebuilt = direct_sum(rebuilt, component_module(c));
        if (iso_oracle(rebuilt, m, 2000).verdict != IsoVerdict::yes) return false;
    }
    return true;
}

bool criterion6() {
    Fqm a11 = direct_sum(make_A(3, 1, 1), make_A(3, 1, 1));
    Fqm a22 = direct_sum(make_A(3, 1, 2), make_A(3, 1, 2));
    if (iso_oracle(a11, a22, 2000).verdict != IsoVerdict::yes) return false;
    // Q(x, y) = (x^2 + y^2)/3 on (Z/3)^2
    Fqm m = Fqm::from_presentation({3, 3}, {QZ::of(1, 3), QZ::of(1, 3)},
                                   {{QZ::of(2, 3), QZ()}, {QZ(), QZ::of(2, 3)}});
    Fqm rebuilt = zero_module();
    for (const auto& c : jordan_decomposition(m))
        rebuilt = direct_sum(rebuilt, component_module(c));
    return iso_oracle(rebuilt, m, 2000).verdict == IsoVerdict::yes;
}

bool criterion7() {
    Rng rng(1007);
    for (int t = 0; t < 100; ++t) {
        Fqm m = zero_module();
        for (int i = 0; i < 3; ++i) {
            Fqm part = component_module(random_component(rng, 512));
            if (m.order() * part.order() > 512) break;
            m = direct_sum(m, part);
        }
        if (m.rank() == 0) continue;
        std::vector<Element> gens;
        const int ngen = static_cast<int>(rand_in(rng, 1, 2));
        for (int i = 0; i < ngen; ++i) {
            std::vector<ZZ> coords;
            for (int j = 0; j < m.rank(); ++j) coords.push_back(rand_in(rng, 0, 64));
            gens.push_back(m.element(coords));
        }
        ComplementResult perp = orthogonal_complement(m, gens);
        if (subgroup_order(m, gens) * perp.sub.order() != m.order()) return false;
        ComplementResult dbl = orthogonal_complement(m, perp.embed);
        if (subgroup_lattice(m, dbl.embed) != subgroup_lattice(m, gens)) return false;
    }
    return true;
}

bool criterion8() {
    for (const auto& c : acceptance_grid()) {
        Lattice l = realize_posdef(c);
        if (!is_positive_definite(l.gram())) return false;
        if (l.rank() != expected_min_rank(c, true)) return false;
        if (l.rank() % 8 != (8 - sigma_of_component(c).exp) % 8) return false;
    }
    return true;
}

bool criterion9() {
    // odd p: exactly 2 classes for p in {3, 5}, r <= 2
    for (long p : {3L, 5L})
        for (int r = 1; r <= 2; ++r) {
            ZZ pr;
            mpz_pow_ui(pr.get_mpz_t(), ZZ(p).get_mpz_t(), r);
            std::vector<Fqm> reps;
            for (ZZ a = 1; a < pr; ++a) {
                if (gcd(a, ZZ(p)) != 1) continue;
                Fqm m = make_A(p, r, a);
                bool found = false;
                for (const Fqm& rep : reps)
                    if (iso_oracle(m, rep, 2000).verdict == IsoVerdict::yes) {
                        found = true;
                        break;
                    }
                if (!found) reps.push_back(m);
            }
            if (reps.size() != 2) return false;
        }
    // p = 2: 2 classes at r = 1, 4 classes at r in {2, 3}
    for (int r = 1; r <= 3; ++r) {
        std::vector<Fqm> reps;
        for (long a = 1; a < (2L << r); a += 2) {
            Fqm m = make_A(2, r, a);
            bool found = false;
            for (const Fqm& rep : reps)
                if (iso_oracle(m, rep, 2000).verdict == IsoVerdict::yes) {
                    found = true;
                    break;
                }
            if (!found) reps.push_back(m);
        }
        if (reps.size() != static_cast<size_t>(r == 1 ? 2 : 4)) return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Entry {
        int number;
        const char* name;
        bool (*run)();
    };
    const Entry entries[] = {
        {1, "golden realization matrices", criterion1},
        {2, "round-trip grid, even and positive definite", criterion2},
        {3, "Milgram identity on 200 random block sums", criterion3},
        {4, "sigma closed forms vs numeric Gauss sums", criterion4},
        {5, "decomposition soundness on 300 scrambled modules", criterion5},
        {6, "non-uniqueness regression", criterion6},
        {7, "orthogonality laws on 100 random pairs", criterion7},
        {8, "positive definiteness and rank residues", criterion8},
        {9, "isomorphism class counts", criterion9},
    };
    for (const Entry& e : entries) {
        Timer t;
        bool pass = false;
        try {
            pass = e.run();
        } catch (const std::exception& ex) {
            std::fprintf(stderr, "criterion %d threw: %s\n", e.number, ex.what());
        }
        report(e.number, e.name, pass, t.seconds());
    }
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
