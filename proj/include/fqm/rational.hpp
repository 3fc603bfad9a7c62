#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "fqm/errors.hpp"

namespace fqm {

using ZZ = mpz_class;
using QQ = mpq_class;

// An element of Q/Z stored as the canonical lift num/den with
// 0 <= num < den and gcd(num, den) = 1 (zero is 0/1).
class QZ {
public:
    QZ() : num_(0), den_(1) {}
    QZ(const ZZ& num, const ZZ& den);

    static QZ of(long num, long den) { return QZ(ZZ(num), ZZ(den)); }
    static QZ from_rational(const QQ& q) { return QZ(q.get_num(), q.get_den()); }

    const ZZ& num() const { return num_; }
    const ZZ& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    // additive order in Q/Z, equals the canonical denominator
    const ZZ& order() const { return den_; }

    QZ operator+(const QZ& o) const;
    QZ operator-() const;
    QZ operator-(const QZ& o) const { return *this + (-o); }
    QZ scaled(const ZZ& k) const;  // k times this element

    bool operator==(const QZ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QZ& o) const { return !(*this == o); }
    bool operator<(const QZ& o) const {
        return num_ * o.den_ < o.num_ * den_;  // compare as rationals in [0,1)
    }

    double to_double() const;
    std::string str() const;  // "num/den" with the canonical lift
    static QZ parse(const std::string& s);

private:
    ZZ num_;
    ZZ den_;
};

inline QZ qz_make(const ZZ& num, const ZZ& den) { return QZ(num, den); }
inline QZ qz_add(const QZ& a, const QZ& b) { return a + b; }
inline QZ qz_scale(const ZZ& k, const QZ& a) { return a.scaled(k); }
inline ZZ qz_order(const QZ& a) { return a.order(); }

// e^{2*pi*i*exp/8}; the value space of sigma invariants
struct Mu8 {
    int exp = 0;  // in [0, 8)

    Mu8() = default;
    explicit Mu8(long e) : exp(static_cast<int>(((e % 8) + 8) % 8)) {}

    Mu8 operator*(const Mu8& o) const { return Mu8(exp + o.exp); }
    bool operator==(const Mu8& o) const { return exp == o.exp; }
    bool operator!=(const Mu8& o) const { return exp != o.exp; }

    std::complex<double> value() const;
};

// exponent of the largest power of p dividing n (n != 0)
int padic_valuation(const ZZ& n, const ZZ& p);

// checked narrowing, throws invalid_input when out of range
long to_long(const ZZ& n);

}  // namespace fqm
