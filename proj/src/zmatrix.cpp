#include "fqm/zmatrix.hpp"

#include <algorithm>

namespace fqm {

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_) throw invalid_input("ZMat: ragged rows");
        for (long x : r) a_.emplace_back(x);
    }
}

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::diagonal(const std::vector<ZZ>& d) {
    ZMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw invalid_input("ZMat: dimension mismatch in product");
    ZMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const ZZ& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ZMat ZMat::transpose() const {
    ZMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ZMat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void ZMat::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void ZMat::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void ZMat::add_row(int dst, int src, const ZZ& k) {
    for (int c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
}

void ZMat::add_col(int dst, int src, const ZZ& k) {
    for (int r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
}

void ZMat::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

QMat::QMat(const ZMat& m) : rows_(m.rows()), cols_(m.cols()), a_(size_t(rows_) * cols_) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) at(i, j) = QQ(m.at(i, j));
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw invalid_input("QMat: dimension mismatch in product");
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

SnfResult smith_normal_form(const ZMat& a) {
    const int m = a.rows(), n = a.cols();
    SnfResult res{ZMat::identity(m), a, ZMat::identity(n)};
    ZMat& d = res.d;
    ZMat& u = res.u;
    ZMat& v = res.v;
    const int nmin = std::min(m, n);
    for (int t = 0; t < nmin; ++t) {
        for (;;) {
            // minimal absolute value nonzero entry of the trailing block,
            // first in row-major order on ties (deterministic transforms)
            int pi = -1, pj = -1;
            ZZ best;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (d.at(i, j) == 0) continue;
                    ZZ av = abs(d.at(i, j));
                    if (pi < 0 || av < best) {
                        best = av;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) break;  // trailing block is zero
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            bool dirty = false;
            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                ZZ q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (d.at(i, t) != 0) dirty = true;
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                ZZ q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (d.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // pivot is lone; enforce divisibility of the trailing block
            int bi = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            d.add_row(t, bi, 1);
            u.add_row(t, bi, 1);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

ZZ det(const ZMat& a) {
    if (a.rows() != a.cols()) throw invalid_input("det: square matrix required");
    const int n = a.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination
    ZMat m = a;
    ZZ sign = 1, prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                ZZ t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

QMat inverse_rational(const ZMat& a) {
    if (a.rows() != a.cols()) throw invalid_input("inverse: square matrix required");
    const int n = a.rows();
    QMat m(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = QQ(a.at(i, j));
        m.at(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (m.at(r, c) != 0) {
                p = r;
                break;
            }
        if (p < 0) throw invalid_input("inverse: singular matrix");
        if (p != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(m.at(c, j), m.at(p, j));
        QQ pv = m.at(c, c);
        for (int j = 0; j < 2 * n; ++j) m.at(c, j) /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            QQ f = m.at(r, c);
            for (int j = 0; j < 2 * n; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = m.at(i, n + j);
    return inv;
}

ZMat inverse_unimodular(const ZMat& a) {
    QMat inv = inverse_rational(a);
    ZMat r(a.rows(), a.cols());
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) {
            if (inv.at(i, j).get_den() != 1)
                throw invalid_input("inverse_unimodular: matrix is not unimodular");
            r.at(i, j) = inv.at(i, j).get_num();
        }
    return r;
}

namespace {

// symmetric congruent elimination on a rational matrix, recursing on index sets
Signature signature_impl(QMat m) {
    Signature sig;
    std::vector<int> live(m.rows());
    for (size_t i = 0; i < live.size(); ++i) live[i] = int(i);
    while (!live.empty()) {
        int piv = -1;
        for (int i : live)
            if (m.at(i, i) != 0) {
                piv = i;
                break;
            }
        if (piv >= 0) {
            const QQ d = m.at(piv, piv);
            (d > 0 ? sig.pos : sig.neg)++;
            for (int r : live) {
                if (r == piv || m.at(r, piv) == 0) continue;
                QQ f = m.at(r, piv) / d;
                for (int c : live) m.at(r, c) -= f * m.at(piv, c);
                for (int c : live) m.at(c, r) = m.at(r, c);
            }
            live.erase(std::find(live.begin(), live.end(), piv));
            continue;
        }
        // zero diagonal: take the first nonzero off-diagonal pair as a
        // hyperbolic 2x2 block contributing (1,1)
        int hi = -1, hj = -1;
        for (size_t s = 0; s < live.size() && hi < 0; ++s)
            for (size_t t = s + 1; t < live.size(); ++t)
                if (m.at(live[s], live[t]) != 0) {
                    hi = live[s];
                    hj = live[t];
                    break;
                }
        if (hi < 0) throw invalid_input("signature: degenerate matrix");
        const QQ b = m.at(hi, hj);
        sig.pos++;
        sig.neg++;
        for (int r : live) {
            if (r == hi || r == hj) continue;
            QQ u = m.at(hi, r), w = m.at(hj, r);
            if (u == 0 && w == 0) continue;
            QQ alpha = -w / b, beta = -u / b;
            // x_r <- x_r + alpha x_i + beta x_j (congruence, so rows and columns)
            for (int c : live) m.at(r, c) += alpha * m.at(hi, c) + beta * m.at(hj, c);
            for (int c : live) m.at(c, r) += alpha * m.at(c, hi) + beta * m.at(c, hj);
        }
        live.erase(std::find(live.begin(), live.end(), hi));
        live.erase(std::find(live.begin(), live.end(), hj));
    }
    return sig;
}

}  // namespace

Signature signature(const ZMat& g) {
    if (!g.is_symmetric()) throw invalid_input("signature: symmetric matrix required");
    return signature_impl(QMat(g));
}

bool is_positive_definite(const ZMat& g) {
    if (!g.is_symmetric()) throw invalid_input("is_positive_definite: symmetric matrix required");
    for (int k = 1; k <= g.rows(); ++k) {
        ZMat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = g.at(i, j);
        if (det(sub) <= 0) return false;
    }
    return true;
}

std::vector<std::vector<ZZ>> kernel_mod(const ZMat& a, const std::vector<ZZ>& moduli,
                                        const std::vector<ZZ>& ambient) {
    const int m = a.rows(), k = a.cols();
    if (static_cast<int>(moduli.size()) != m) throw invalid_input("kernel_mod: one modulus per row");
    if (static_cast<int>(ambient.size()) != k) throw invalid_input("kernel_mod: ambient rank mismatch");
    std::vector<std::vector<ZZ>> gens;
    if (m == 0) {
        // no constraints: the whole ambient group
        for (int i = 0; i < k; ++i) {
            std::vector<ZZ> e(k, ZZ(0));
            e[i] = 1;
            gens.push_back(e);
        }
        return gens;
    }
    // integer lift: solutions x of A x = L y, i.e. the kernel of [A | L]
    ZMat big(m, k + m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) big.at(i, j) = a.at(i, j);
        big.at(i, k + i) = moduli[i];
    }
    SnfResult s = smith_normal_form(big);
    for (int c = 0; c < k + m; ++c) {
        // D is diagonal, so column c of D vanishes iff it is past the
        // diagonal or its diagonal entry is zero
        if (c < m && s.d.at(c, c) != 0) continue;
        std::vector<ZZ> x(k);
        bool nonzero = false;
        for (int r = 0; r < k; ++r) {
            ZZ red;
            mpz_fdiv_r(red.get_mpz_t(), s.v.at(r, c).get_mpz_t(), ambient[r].get_mpz_t());
            x[r] = red;
            if (red != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(x));
    }
    return gens;
}

ZMat hermite_normal_form(const ZMat& a) {
    const int m = a.rows(), n = a.cols();
    ZMat h = a;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // gcd the column below `row` into the pivot position via row ops
        for (;;) {
            int p = -1;
            ZZ best;
            for (int i = row; i < m; ++i) {
                if (h.at(i, col) == 0) continue;
                ZZ av = abs(h.at(i, col));
                if (p < 0 || av < best) {
                    best = av;
                    p = i;
                }
            }
            if (p < 0) break;
            h.swap_rows(row, p);
            bool done = true;
            for (int i = row + 1; i < m; ++i) {
                if (h.at(i, col) == 0) continue;
                ZZ q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
                h.add_row(i, row, -q);
                if (h.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0) h.negate_row(row);
        // reduce the entries above the pivot into [0, pivot)
        for (int i = 0; i < row; ++i) {
            ZZ q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(row, col).get_mpz_t());
            if (q != 0) h.add_row(i, row, -q);
        }
        ++row;
    }
    ZMat out(row, n);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

}  // namespace fqm
