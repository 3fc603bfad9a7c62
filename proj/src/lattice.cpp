#include "fqm/lattice.hpp"

#include <cmath>

namespace fqm {

Lattice::Lattice(ZMat gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw invalid_input("Lattice: Gram matrix must be symmetric");
    if (gram_.rows() > 0 && det(gram_) == 0)
        throw invalid_input("Lattice: Gram matrix must be nonsingular");
}

bool is_even(const Lattice& l) {
    for (int i = 0; i < l.rank(); ++i)
        if (l.gram().at(i, i) % 2 != 0) return false;
    return true;
}

Fqm discriminant_module(const Lattice& l) {
    if (!is_even(l))
        throw odd_lattice("discriminant_module: Q is not well-defined on cosets of an odd lattice");
    const int n = l.rank();
    if (n == 0) return zero_module();
    SnfResult snf = smith_normal_form(l.gram());
    ZMat uinv = inverse_unimodular(snf.u);
    QMat ginv = inverse_rational(l.gram());

    // generator i of Z^n / G Z^n = column i of U^{-1} in dual-basis
    // coordinates, of order d_i; trivial factors are dropped
    std::vector<std::vector<ZZ>> gens;
    std::vector<ZZ> orders;
    for (int i = 0; i < n; ++i) {
        if (snf.d.at(i, i) == 1) continue;
        orders.push_back(snf.d.at(i, i));
        std::vector<ZZ> col(n);
        for (int r = 0; r < n; ++r) col[r] = uinv.at(r, i);
        gens.push_back(std::move(col));
    }
    auto pair = [&](const std::vector<ZZ>& x, const std::vector<ZZ>& y) {
        QQ v = 0;
        for (int i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (int j = 0; j < n; ++j) v += QQ(x[i]) * ginv.at(i, j) * QQ(y[j]);
        }
        return v;
    };
    const int k = static_cast<int>(orders.size());
    std::vector<QZ> qd(k);
    std::vector<std::vector<QZ>> b(k, std::vector<QZ>(k));
    for (int i = 0; i < k; ++i) {
        QQ qq = pair(gens[i], gens[i]) / 2;
        qd[i] = QZ::from_rational(qq);
        for (int j = 0; j < k; ++j) b[i][j] = QZ::from_rational(pair(gens[i], gens[j]));
    }
    return Fqm::from_presentation(std::move(orders), std::move(qd), std::move(b));
}

Signature lattice_signature(const Lattice& l) {
    if (l.rank() == 0) return Signature{0, 0};
    return signature(l.gram());
}

int sign_mod8(const Lattice& l) {
    Signature s = lattice_signature(l);
    return static_cast<int>((((s.pos - s.neg) % 8) + 8) % 8);
}

bool milgram_check(const Lattice& l, long budget) {
    Fqm d = discriminant_module(l);
    const int sgn = sign_mod8(l);
    if (sigma_exact(d) != Mu8(-sgn)) return false;
    if (d.order() <= budget) {
        std::complex<double> expected = Mu8(-sgn).value();
        if (std::abs(sigma_numeric(d, budget) - expected) > 1e-9) return false;
    }
    return true;
}

Lattice lattice_direct_sum(const Lattice& l1, const Lattice& l2) {
    const int n1 = l1.rank(), n2 = l2.rank();
    ZMat g(n1 + n2, n1 + n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) g.at(i, j) = l1.gram().at(i, j);
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) g.at(n1 + i, n1 + j) = l2.gram().at(i, j);
    return Lattice(std::move(g));
}

}  // namespace fqm
