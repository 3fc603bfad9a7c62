#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fqm/rational.hpp"

namespace fqm {

// Kronecker symbol (a|n), the multiplicative extension of the Legendre symbol.
// (0,0) is undefined and throws.
int kronecker(const ZZ& a, const ZZ& n);

// Deterministic Miller-Rabin, valid for n below 3.3e14 with the fixed
// witness set; larger candidates throw.
bool is_prime(const ZZ& n);

// Smallest nonnegative v with v^2 = a (mod m), m a prime power.
// Exhaustive scan below `search_bound`, Tonelli-Shanks with Hensel lifting above it.
std::optional<ZZ> sqrt_mod(const ZZ& a, const ZZ& m, const ZZ& search_bound = ZZ(1000000));

// Chinese remainder for pairwise coprime moduli; canonical lift in [0, prod).
ZZ crt(const std::vector<std::pair<ZZ, ZZ>>& pairs);

// Smallest v >= 0 with c*v^2 = rhs (mod m), or nullopt. Exhaustive over [0, m);
// moduli beyond the bound throw (desk-scale callers never reach it).
std::optional<ZZ> solve_quad_congruence(const ZZ& c, const ZZ& rhs, const ZZ& m,
                                        const ZZ& search_bound = ZZ(1000000));

// Smallest odd prime q with q = r (mod m) for every residue pair and
// kronecker(q, p) = eps for every legendre pair. Throws when the search
// budget is exhausted (inconsistent conditions).
ZZ find_prime(const std::vector<std::pair<ZZ, ZZ>>& residue_conditions,
              const std::vector<std::pair<ZZ, int>>& legendre_conditions,
              long max_candidates = 1000000);

}  // namespace fqm
