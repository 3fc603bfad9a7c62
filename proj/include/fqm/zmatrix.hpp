#pragma once

#include <initializer_list>
#include <vector>

#include "fqm/rational.hpp"

namespace fqm {

// Dense exact integer matrix.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, ZZ(0)) {}
    ZMat(std::initializer_list<std::initializer_list<long>> rows);

    static ZMat identity(int n);
    static ZMat diagonal(const std::vector<ZZ>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    ZZ& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const ZZ& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    ZMat operator*(const ZMat& o) const;
    ZMat transpose() const;
    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const ZMat& o) const { return !(*this == o); }
    bool is_symmetric() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row(int dst, int src, const ZZ& k);  // row dst += k * row src
    void add_col(int dst, int src, const ZZ& k);
    void negate_row(int i);

private:
    int rows_, cols_;
    std::vector<ZZ> a_;
};

// Dense exact rational matrix (used for inverses and congruent diagonalization).
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, QQ(0)) {}
    explicit QMat(const ZMat& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    QQ& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const QQ& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    QMat operator*(const QMat& o) const;

private:
    int rows_, cols_;
    std::vector<QQ> a_;
};

// U * A * V = D with U, V unimodular and d1 | d2 | ... >= 0 on the diagonal.
struct SnfResult {
    ZMat u, d, v;
};

SnfResult smith_normal_form(const ZMat& a);

ZZ det(const ZMat& a);
QMat inverse_rational(const ZMat& a);  // throws on singular input
ZMat inverse_unimodular(const ZMat& a);  // |det| must be 1

struct Signature {
    int pos = 0, neg = 0;
    bool operator==(const Signature& o) const { return pos == o.pos && neg == o.neg; }
};

// Exact congruent diagonalization of a nonsingular symmetric matrix.
Signature signature(const ZMat& g);

// All leading principal minors positive (exact).
bool is_positive_definite(const ZMat& g);

// Generators of { x in (+) Z/ambient[i] : sum_i a[j][i] * x[i] = 0 (mod moduli[j]) for all j },
// via an integer lift and SNF. The generating set may be redundant.
std::vector<std::vector<ZZ>> kernel_mod(const ZMat& a, const std::vector<ZZ>& moduli,
                                        const std::vector<ZZ>& ambient);

// Canonical row-style Hermite normal form of the row lattice of a
// (full row rank not required). Zero rows are dropped; pivots positive,
// entries above each pivot reduced into [0, pivot).
ZMat hermite_normal_form(const ZMat& a);

}  // namespace fqm
