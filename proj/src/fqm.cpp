#include "fqm/fqm.hpp"

#include <algorithm>
#include <cmath>

#include "fqm/number_theory.hpp"

namespace fqm {

namespace {

ZZ gcd(const ZZ& a, const ZZ& b) {
    ZZ g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

ZZ lcm(const ZZ& a, const ZZ& b) {
    ZZ l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

ZZ floor_mod(const ZZ& a, const ZZ& m) {
    ZZ r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// prime factors of n, ascending; desk-scale trial division with a
// primality fallback for a large remainder
std::vector<ZZ> prime_factors(ZZ n) {
    std::vector<ZZ> ps;
    for (ZZ t = 2; t * t <= n && t < 1000000; t == 2 ? t = 3 : t += 2) {
        if (n % t == 0) {
            ps.push_back(t);
            while (n % t == 0) n /= t;
        }
    }
    if (n > 1) {
        if (!is_prime(n)) throw invalid_input("cannot factor order " + n.get_str());
        ps.push_back(n);
    }
    return ps;
}

}  // namespace

Fqm Fqm::from_presentation(std::vector<ZZ> orders, std::vector<QZ> qdiag,
                           std::vector<std::vector<QZ>> boff) {
    const size_t k = orders.size();
    if (qdiag.size() != k || boff.size() != k)
        throw invalid_input("Fqm: presentation dimension mismatch");
    for (const auto& row : boff)
        if (row.size() != k) throw invalid_input("Fqm: b matrix must be square");
    for (size_t i = 0; i < k; ++i) {
        if (orders[i] < 2) throw invalid_input("Fqm: generator orders must be >= 2");
        if (!qdiag[i].scaled(orders[i] * orders[i]).is_zero())
            throw invalid_input("Fqm: d_i^2 * Q(e_i) != 0, Q not defined on the group");
        if (boff[i][i] != qdiag[i].scaled(2))
            throw invalid_input("Fqm: B(e_i, e_i) must equal 2 Q(e_i)");
        for (size_t j = 0; j < k; ++j) {
            if (boff[i][j] != boff[j][i]) throw invalid_input("Fqm: b matrix must be symmetric");
            if (gcd(orders[i], orders[j]) % boff[i][j].order() != 0)
                throw invalid_input("Fqm: ord B(e_i, e_j) must divide gcd(d_i, d_j)");
        }
    }
    Fqm m;
    m.orders_ = std::move(orders);
    m.qdiag_ = std::move(qdiag);
    m.boff_ = std::move(boff);
    return m;
}

ZZ Fqm::order() const {
    ZZ n = 1;
    for (const auto& d : orders_) n *= d;
    return n;
}

Element Fqm::element(std::vector<ZZ> coeffs) const {
    if (coeffs.size() != orders_.size()) throw invalid_input("element: rank mismatch");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = floor_mod(coeffs[i], orders_[i]);
    return Element{std::move(coeffs)};
}

Element Fqm::generator(int i) const {
    std::vector<ZZ> c(orders_.size(), ZZ(0));
    c[i] = 1;
    return Element{std::move(c)};
}

Element Fqm::add(const Element& x, const Element& y) const {
    std::vector<ZZ> c(orders_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(x.coeffs[i] + y.coeffs[i], orders_[i]);
    return Element{std::move(c)};
}

Element Fqm::scale(const ZZ& k, const Element& x) const {
    std::vector<ZZ> c(orders_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = floor_mod(k * x.coeffs[i], orders_[i]);
    return Element{std::move(c)};
}

QZ Fqm::eval_q(const Element& x) const {
    if (x.coeffs.size() != orders_.size()) throw invalid_input("eval_q: rank mismatch");
    QZ v;
    const int k = rank();
    for (int i = 0; i < k; ++i) {
        v = v + qdiag_[i].scaled(x.coeffs[i] * x.coeffs[i]);
        for (int j = i + 1; j < k; ++j) v = v + boff_[i][j].scaled(x.coeffs[i] * x.coeffs[j]);
    }
    return v;
}

QZ Fqm::eval_b(const Element& x, const Element& y) const {
    if (x.coeffs.size() != orders_.size() || y.coeffs.size() != orders_.size())
        throw invalid_input("eval_b: rank mismatch");
    QZ v;
    const int k = rank();
    for (int i = 0; i < k; ++i) {
        if (x.coeffs[i] == 0) continue;
        for (int j = 0; j < k; ++j)
            if (y.coeffs[j] != 0) v = v + boff_[i][j].scaled(x.coeffs[i] * y.coeffs[j]);
    }
    return v;
}

ZZ Fqm::element_order(const Element& x) const {
    ZZ o = 1;
    for (size_t i = 0; i < orders_.size(); ++i) o = lcm(o, orders_[i] / gcd(orders_[i], x.coeffs[i]));
    return o;
}

void Fqm::for_each_element(
    const std::function<void(const std::vector<ZZ>&, const QZ&)>& fn) const {
    const int k = rank();
    std::vector<ZZ> x(k, ZZ(0));
    // qx = Q(x), bx[j] = B(x, e_j), both maintained incrementally
    std::function<void(int, QZ, std::vector<QZ>)> rec = [&](int i, QZ qx, std::vector<QZ> bx) {
        if (i == k) {
            fn(x, qx);
            return;
        }
        for (ZZ xi = 0; xi < orders_[i]; ++xi) {
            x[i] = xi;
            rec(i + 1, qx, bx);
            // step x_i by one: Q(x + e_i) = Q(x) + Q(e_i) + B(x, e_i)
            qx = qx + qdiag_[i] + bx[i];
            for (int j = 0; j < k; ++j) bx[j] = bx[j] + boff_[i][j];
        }
        x[i] = 0;
    };
    rec(0, QZ(), std::vector<QZ>(k));
}

Fqm zero_module() { return Fqm(); }

Fqm make_A(const ZZ& p, int r, const ZZ& a) {
    if (r < 1) throw invalid_input("make_A: r must be >= 1");
    if (!is_prime(p)) throw invalid_input("make_A: p must be prime");
    if (gcd(a, p) != 1) throw invalid_input("make_A: a must be coprime to p");
    ZZ pr;
    mpz_pow_ui(pr.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(r));
    QZ q = p == 2 ? QZ(a, 2 * pr) : QZ(a, pr);
    return Fqm::from_presentation({pr}, {q}, {{q.scaled(2)}});
}

Fqm make_B(int r) {
    if (r < 1) throw invalid_input("make_B: r must be >= 1");
    ZZ n = ZZ(1) << r;
    QZ one_n(1, n), two_n(2, n);
    return Fqm::from_presentation({n, n}, {one_n, one_n}, {{two_n, one_n}, {one_n, two_n}});
}

Fqm make_C(int r) {
    if (r < 1) throw invalid_input("make_C: r must be >= 1");
    ZZ n = ZZ(1) << r;
    QZ zero, one_n(1, n);
    return Fqm::from_presentation({n, n}, {zero, zero}, {{zero, one_n}, {one_n, zero}});
}

Fqm make_D(int r, const ZZ& a, const ZZ& b, const ZZ& c) {
    if (r < 1) throw invalid_input("make_D: r must be >= 1");
    if (b % 2 == 0) throw invalid_input("make_D: b must be odd (even b is degenerate)");
    ZZ n = ZZ(1) << r;
    QZ qa(a, n), qc(c, n), qb(b, n);
    return Fqm::from_presentation({n, n}, {qa, qc}, {{qa.scaled(2), qb}, {qb, qc.scaled(2)}});
}

Fqm make_Am(const ZZ& m) {
    if (m < 1) throw invalid_input("make_Am: m must be >= 1");
    if (m == 1) return zero_module();
    QZ q = m % 2 == 0 ? QZ(1, 2 * m) : QZ(1, m);
    return Fqm::from_presentation({m}, {q}, {{q.scaled(2)}});
}

Fqm direct_sum(const Fqm& m1, const Fqm& m2) {
    const int k1 = m1.rank(), k2 = m2.rank();
    std::vector<ZZ> orders;
    std::vector<QZ> qd;
    std::vector<std::vector<QZ>> b(k1 + k2, std::vector<QZ>(k1 + k2));
    for (int i = 0; i < k1; ++i) {
        orders.push_back(m1.orders()[i]);
        qd.push_back(m1.q_gen(i));
        for (int j = 0; j < k1; ++j) b[i][j] = m1.b_gen(i, j);
    }
    for (int i = 0; i < k2; ++i) {
        orders.push_back(m2.orders()[i]);
        qd.push_back(m2.q_gen(i));
        for (int j = 0; j < k2; ++j) b[k1 + i][k1 + j] = m2.b_gen(i, j);
    }
    return Fqm::from_presentation(std::move(orders), std::move(qd), std::move(b));
}

namespace {

// rows: one constraint per target element t, integerized as
// sum_i L_t B(e_i, t) x_i = 0 (mod L_t) with L_t the lcm of denominators
std::pair<ZMat, std::vector<ZZ>> orthogonality_constraints(const Fqm& m,
                                                           const std::vector<Element>& targets) {
    const int k = m.rank();
    ZMat a(static_cast<int>(targets.size()), k);
    std::vector<ZZ> moduli(targets.size(), ZZ(1));
    for (size_t t = 0; t < targets.size(); ++t) {
        std::vector<QZ> row(k);
        ZZ l = 1;
        for (int i = 0; i < k; ++i) {
            row[i] = m.eval_b(m.generator(i), targets[t]);
            l = lcm(l, row[i].den());
        }
        moduli[t] = l;
        for (int i = 0; i < k; ++i) a.at(int(t), i) = l / row[i].den() * row[i].num();
    }
    return {a, moduli};
}

}  // namespace

std::vector<Element> radical(const Fqm& m) {
    std::vector<Element> targets;
    for (int i = 0; i < m.rank(); ++i) targets.push_back(m.generator(i));
    auto [a, moduli] = orthogonality_constraints(m, targets);
    std::vector<Element> out;
    for (auto& v : kernel_mod(a, moduli, m.orders())) out.push_back(Element{std::move(v)});
    return out;
}

bool is_nondegenerate(const Fqm& m) {
    for (const auto& x : radical(m))
        if (!x.is_zero()) return false;
    return true;
}

ComplementResult orthogonal_complement(const Fqm& m, const std::vector<Element>& gens) {
    const int k = m.rank();
    auto [a, moduli] = orthogonality_constraints(m, gens);
    std::vector<std::vector<ZZ>> w = kernel_mod(a, moduli, m.orders());
    // drop zero vectors
    w.erase(std::remove_if(w.begin(), w.end(),
                           [](const std::vector<ZZ>& v) {
                               return std::all_of(v.begin(), v.end(),
                                                  [](const ZZ& c) { return c == 0; });
                           }),
            w.end());
    const int s = static_cast<int>(w.size());
    if (s == 0) return {zero_module(), {}};

    // relations of Z^s -> M, c |-> sum c_t w_t: one constraint per ambient
    // coordinate i, sum_t w_t[i] c_t = 0 (mod d_i)
    ZMat rel(k, s);
    for (int i = 0; i < k; ++i)
        for (int t = 0; t < s; ++t) rel.at(i, t) = w[t][i];
    ZMat big(k, s + k);
    for (int i = 0; i < k; ++i) {
        for (int t = 0; t < s; ++t) big.at(i, t) = rel.at(i, t);
        big.at(i, s + i) = m.orders()[i];
    }
    SnfResult ker = smith_normal_form(big);
    // relation lattice = projection of the kernel of [rel | diag(d)] onto c
    std::vector<std::vector<ZZ>> relations;
    for (int c = 0; c < s + k; ++c) {
        if (c < k && ker.d.at(c, c) != 0) continue;
        std::vector<ZZ> v(s);
        for (int t = 0; t < s; ++t) v[t] = ker.v.at(t, c);
        relations.push_back(std::move(v));
    }
    // quotient presentation: Z^s / column span of the relations
    ZMat relmat(s, static_cast<int>(relations.size()));
    for (size_t c = 0; c < relations.size(); ++c)
        for (int t = 0; t < s; ++t) relmat.at(t, int(c)) = relations[c][t];
    SnfResult snf = smith_normal_form(relmat);
    ZMat uinv = inverse_unimodular(snf.u);

    std::vector<ZZ> sub_orders;
    std::vector<Element> embed;
    for (int i = 0; i < s; ++i) {
        if (i >= std::min(snf.d.rows(), snf.d.cols()) || snf.d.at(i, i) == 0)
            throw invalid_input("orthogonal_complement: relation lattice not of full rank");
        if (snf.d.at(i, i) == 1) continue;
        sub_orders.push_back(snf.d.at(i, i));
        std::vector<ZZ> coords(k, ZZ(0));
        for (int t = 0; t < s; ++t)
            for (int j = 0; j < k; ++j) coords[j] += uinv.at(t, i) * w[t][j];
        embed.push_back(m.element(std::move(coords)));
    }
    const int ks = static_cast<int>(sub_orders.size());
    std::vector<QZ> qd(ks);
    std::vector<std::vector<QZ>> b(ks, std::vector<QZ>(ks));
    for (int i = 0; i < ks; ++i) {
        qd[i] = m.eval_q(embed[i]);
        for (int j = 0; j < ks; ++j) b[i][j] = m.eval_b(embed[i], embed[j]);
    }
    return {Fqm::from_presentation(std::move(sub_orders), std::move(qd), std::move(b)),
            std::move(embed)};
}

std::vector<std::pair<ZZ, Fqm>> primary_decomposition(const Fqm& m) {
    std::vector<ZZ> primes;
    for (const auto& d : m.orders())
        for (const auto& p : prime_factors(d))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    std::sort(primes.begin(), primes.end());

    std::vector<std::pair<ZZ, Fqm>> out;
    for (const auto& p : primes) {
        std::vector<ZZ> orders;
        std::vector<Element> gens;
        for (int i = 0; i < m.rank(); ++i) {
            const ZZ& d = m.orders()[i];
            if (d % p != 0) continue;
            ZZ ppart = 1;
            ZZ rest = d;
            while (rest % p == 0) {
                rest /= p;
                ppart *= p;
            }
            orders.push_back(ppart);
            gens.push_back(m.scale(rest, m.generator(i)));  // rest = d / p-part
        }
        const int ks = static_cast<int>(orders.size());
        std::vector<QZ> qd(ks);
        std::vector<std::vector<QZ>> b(ks, std::vector<QZ>(ks));
        for (int i = 0; i < ks; ++i) {
            qd[i] = m.eval_q(gens[i]);
            for (int j = 0; j < ks; ++j) b[i][j] = m.eval_b(gens[i], gens[j]);
        }
        out.emplace_back(p, Fqm::from_presentation(std::move(orders), std::move(qd), std::move(b)));
    }
    return out;
}

std::complex<double> sigma_numeric(const Fqm& m, long budget) {
    if (m.order() > budget) throw budget_exceeded("sigma_numeric: |M| exceeds budget");
    static const double pi = std::acos(-1.0);
    std::complex<double> s(0.0, 0.0);
    m.for_each_element([&](const std::vector<ZZ>&, const QZ& q) {
        s += std::polar(1.0, -2.0 * pi * q.to_double());
    });
    return s / std::sqrt(m.order().get_d());
}

std::map<QZ, ZZ> q_histogram(const Fqm& m, long budget) {
    if (m.order() > budget) throw budget_exceeded("q_histogram: |M| exceeds budget");
    std::map<QZ, ZZ> h;
    m.for_each_element([&](const std::vector<ZZ>&, const QZ& q) { h[q] += 1; });
    return h;
}

ZZ a_class(const ZZ& p, int r, const ZZ& a) {
    if (gcd(a, p) != 1) throw invalid_input("a_class: a must be coprime to p");
    if (p == 2) return floor_mod(a, r == 1 ? ZZ(4) : ZZ(8));
    if (kronecker(a, p) == 1) return 1;
    ZZ n = 2;
    while (kronecker(n, p) != -1) ++n;
    return n;
}

JordanComponent JordanComponent::A(const ZZ& p, int r, const ZZ& a) {
    return JordanComponent{Tag::A, p, r, a_class(p, r, a)};
}

std::string JordanComponent::str() const {
    switch (tag) {
        case Tag::A:
            return "A(" + p.get_str() + "," + std::to_string(r) + "," + a.get_str() + ")";
        case Tag::B:
            return "B(" + std::to_string(r) + ")";
        default:
            return "C(" + std::to_string(r) + ")";
    }
}

JordanComponent normalize_D(int r, const ZZ& a, const ZZ& b, const ZZ& c) {
    if (b % 2 == 0) throw invalid_input("normalize_D: b must be odd");
    if (a % 2 != 0 && c % 2 != 0) return JordanComponent::B(r);
    return JordanComponent::C(r);
}

Fqm component_module(const JordanComponent& c) {
    switch (c.tag) {
        case JordanComponent::Tag::A:
            return make_A(c.p, c.r, c.a);
        case JordanComponent::Tag::B:
            return make_B(c.r);
        default:
            return make_C(c.r);
    }
}

Mu8 sigma_of_component(const JordanComponent& c) {
    if (c.tag == JordanComponent::Tag::B) return Mu8(4L * c.r);
    if (c.tag == JordanComponent::Tag::C) return Mu8(0);
    if (c.p == 2) {
        // kron(a, 2^r) e^{-2 pi i a/8}
        long e = -to_long(floor_mod(c.a, 8));
        if (c.r % 2 == 1 && kronecker(c.a, 2) == -1) e += 4;
        return Mu8(e);
    }
    // kron(2a, p^r) e^{-2 pi i (1 - p^r)/8}
    ZZ pr;
    mpz_pow_ui(pr.get_mpz_t(), c.p.get_mpz_t(), static_cast<unsigned long>(c.r));
    long e = to_long(floor_mod(pr - 1, 8));
    if (c.r % 2 == 1 && kronecker(2 * c.a, c.p) == -1) e += 4;
    return Mu8(e);
}

ZMat subgroup_lattice(const Fqm& m, const std::vector<Element>& gens) {
    const int k = m.rank();
    ZMat rows(static_cast<int>(gens.size()) + k, k);
    for (size_t g = 0; g < gens.size(); ++g) {
        if (static_cast<int>(gens[g].coeffs.size()) != k)
            throw invalid_input("subgroup_lattice: rank mismatch");
        for (int j = 0; j < k; ++j) rows.at(int(g), j) = gens[g].coeffs[j];
    }
    for (int i = 0; i < k; ++i) rows.at(static_cast<int>(gens.size()) + i, i) = m.orders()[i];
    return hermite_normal_form(rows);
}

ZZ subgroup_order(const Fqm& m, const std::vector<Element>& gens) {
    ZMat h = subgroup_lattice(m, gens);
    ZZ covol = 1;
    for (int i = 0; i < h.rows(); ++i) covol *= h.at(i, i);
    return m.order() / covol;
}

}  // namespace fqm
