#include "fqm/number_theory.hpp"

#include <algorithm>

namespace fqm {

namespace {

ZZ floor_mod(const ZZ& a, const ZZ& m) {
    ZZ r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZZ pow_mod(const ZZ& base, const ZZ& e, const ZZ& m) {
    ZZ r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

ZZ inv_mod(const ZZ& a, const ZZ& m) {
    ZZ r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw invalid_input("inv_mod: not invertible");
    return r;
}

// smallest prime factor by trial division, then Miller-Rabin for the rest
std::pair<ZZ, int> prime_power_split(const ZZ& m) {
    if (m < 2) throw invalid_input("not a prime power: " + m.get_str());
    ZZ p = 0;
    for (ZZ t = 2; t * t <= m && t < 1000000; t == 2 ? t = 3 : t += 2) {
        if (m % t == 0) {
            p = t;
            break;
        }
    }
    if (p == 0) {
        if (is_prime(m)) return {m, 1};
        for (int k = 2; k < 64; ++k) {
            ZZ root;
            int exact = mpz_root(root.get_mpz_t(), m.get_mpz_t(), k);
            if (root < 2) break;
            if (exact && is_prime(root)) return {root, k};
        }
        throw invalid_input("not a prime power: " + m.get_str());
    }
    ZZ rest = m;
    int k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw invalid_input("not a prime power: " + m.get_str());
    return {p, k};
}

// Tonelli-Shanks for odd prime p, assumes (a|p) = 1 and a != 0 mod p
ZZ tonelli_shanks(const ZZ& a, const ZZ& p) {
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    ZZ q = p - 1;
    long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    ZZ z = 2;
    while (kronecker(z, p) != -1) ++z;
    ZZ m = s;
    ZZ c = pow_mod(z, q, p);
    ZZ t = pow_mod(a, q, p);
    ZZ r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        ZZ tt = t;
        long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        ZZ b = c;
        for (ZZ j = 0; j < m - i - 1; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

// Hensel lift: v^2 = a (mod p^k), p odd, starting from a unit solution mod p
std::optional<ZZ> sqrt_mod_odd_pk(const ZZ& a0, const ZZ& p, int k) {
    ZZ m = 1;
    for (int i = 0; i < k; ++i) m *= p;
    ZZ a = floor_mod(a0, m);
    if (a == 0) return ZZ(0);
    int val = padic_valuation(a, p);
    if (val % 2 == 1) return std::nullopt;
    ZZ phalf = 1;
    for (int i = 0; i < val / 2; ++i) phalf *= p;
    ZZ u = a;
    for (int i = 0; i < val; ++i) u /= p;
    // solve x^2 = u mod p^(k - val), then v = phalf * x
    int kk = k - val;
    ZZ mm = 1;
    for (int i = 0; i < kk; ++i) mm *= p;
    if (kronecker(u, p) != 1) return std::nullopt;
    ZZ x = tonelli_shanks(floor_mod(u, p), p);
    ZZ cur = p;
    while (cur < mm) {
        cur *= p;
        // x -> x - (x^2 - u)/(2x) mod cur
        ZZ f = floor_mod(x * x - u, cur);
        x = floor_mod(x - f * inv_mod(2 * x, cur), cur);
    }
    x = floor_mod(x, mm);
    // the least solution comes from the least residue of +-x mod p^(k-val)
    ZZ v1 = phalf * x;
    ZZ v2 = phalf * floor_mod(-x, mm);
    return std::min(v1, v2);
}

std::optional<ZZ> sqrt_mod_two_pk(const ZZ& a0, int k) {
    ZZ m = 1;
    for (int i = 0; i < k; ++i) m *= 2;
    ZZ a = floor_mod(a0, m);
    if (a == 0) return ZZ(0);
    int val = padic_valuation(a, 2);
    if (val % 2 == 1) return std::nullopt;
    ZZ u = a >> val;
    int kk = k - val;
    // odd u: square mod 2 always, mod 4 iff u=1, mod 2^j (j>=3) iff u=1 mod 8
    if (kk >= 3 && u % 8 != 1) return std::nullopt;
    if (kk == 2 && u % 4 != 1) return std::nullopt;
    ZZ mm = ZZ(1) << kk;
    ZZ x = 1;
    ZZ cur = 8;
    if (kk <= 1) {
        x = u % 2;
    } else if (kk == 2) {
        x = 1;
    } else {
        while (cur < mm) {
            // lift x with x^2 = u (mod cur) to mod 2*cur
            if (floor_mod(x * x - u, 2 * cur) != 0) x += cur / 2;
            cur *= 2;
        }
    }
    ZZ best = m;  // larger than any solution
    ZZ half = ZZ(1) << (val / 2);
    for (const ZZ& cand : {x, floor_mod(-x, mm), floor_mod(x + mm / 2, mm), floor_mod(-x + mm / 2, mm)}) {
        ZZ v = floor_mod(half * cand, m);
        if (floor_mod(v * v - a, m) == 0) best = std::min(best, v);
    }
    if (best == m) return std::nullopt;
    return best;
}

}  // namespace

int kronecker(const ZZ& a, const ZZ& n) {
    if (a == 0 && n == 0) throw invalid_input("kronecker(0,0) undefined");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

bool is_prime(const ZZ& n) {
    if (n > ZZ("330000000000000"))
        throw invalid_input("is_prime: candidate above deterministic witness range");
    if (n < 2) return false;
    for (long w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    ZZ d = n - 1;
    long s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (long w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        ZZ x = pow_mod(ZZ(w), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (long i = 0; i + 1 < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::optional<ZZ> sqrt_mod(const ZZ& a, const ZZ& m, const ZZ& search_bound) {
    auto [p, k] = prime_power_split(m);
    if (m <= search_bound) {
        ZZ am = floor_mod(a, m);
        for (ZZ v = 0; v < m; ++v)
            if (v * v % m == am) return v;
        return std::nullopt;
    }
    if (p == 2) return sqrt_mod_two_pk(a, k);
    return sqrt_mod_odd_pk(a, p, k);
}

ZZ crt(const std::vector<std::pair<ZZ, ZZ>>& pairs) {
    ZZ x = 0, m = 1;
    for (const auto& [r, mi] : pairs) {
        if (mi < 1) throw invalid_input("crt: modulus must be positive");
        ZZ g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mi.get_mpz_t());
        if (g != 1) throw invalid_input("crt: moduli not pairwise coprime");
        if (mi == 1) continue;
        // x' = x + m * t with t = (r - x)/m mod mi
        ZZ t = floor_mod((r - x) * inv_mod(m, mi), mi);
        x += m * t;
        m *= mi;
    }
    return floor_mod(x, m);
}

std::optional<ZZ> solve_quad_congruence(const ZZ& c, const ZZ& rhs, const ZZ& m,
                                        const ZZ& search_bound) {
    if (m < 1) throw invalid_input("solve_quad_congruence: modulus must be positive");
    if (m > search_bound)
        throw invalid_input("solve_quad_congruence: modulus exceeds search bound");
    ZZ cm = floor_mod(c, m), rm = floor_mod(rhs, m);
    for (ZZ v = 0; v < m; ++v)
        if (cm * v * v % m == rm) return v;
    return std::nullopt;
}

ZZ find_prime(const std::vector<std::pair<ZZ, ZZ>>& residue_conditions,
              const std::vector<std::pair<ZZ, int>>& legendre_conditions, long max_candidates) {
    // collapse residue conditions into one progression a mod M
    ZZ start = 1, step = 1;
    if (!residue_conditions.empty()) {
        start = crt(residue_conditions);
        for (const auto& rc : residue_conditions) step *= rc.second;
    }
    ZZ q = start == 0 ? step : start;
    for (long n = 0; n < max_candidates; ++n, q += step) {
        if (q < 3 || q % 2 == 0) continue;
        bool ok = true;
        for (const auto& [p, eps] : legendre_conditions)
            if (kronecker(q, p) != eps) {
                ok = false;
                break;
            }
        if (ok && is_prime(q)) return q;
    }
    throw invalid_input("find_prime: search budget exhausted (inconsistent conditions?)");
}

}  // namespace fqm
