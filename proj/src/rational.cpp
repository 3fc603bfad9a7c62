#include "fqm/rational.hpp"

#include <cmath>

namespace fqm {

QZ::QZ(const ZZ& num, const ZZ& den) {
    if (den == 0) throw invalid_input("QZ: zero denominator");
    ZZ n = den < 0 ? ZZ(-num) : num;
    ZZ d = den < 0 ? ZZ(-den) : den;
    mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());  // lift into [0, d)
    ZZ g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    num_ = n / g;
    den_ = d / g;
    if (num_ == 0) den_ = 1;
}

QZ QZ::operator+(const QZ& o) const {
    return QZ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QZ QZ::operator-() const { return QZ(-num_, den_); }

QZ QZ::scaled(const ZZ& k) const { return QZ(k * num_, den_); }

double QZ::to_double() const { return mpq_class(num_, den_).get_d(); }

std::string QZ::str() const { return num_.get_str() + "/" + den_.get_str(); }

QZ QZ::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw invalid_input("QZ: expected \"num/den\", got \"" + s + "\"");
    ZZ n, d;
    if (n.set_str(s.substr(0, slash), 10) != 0 || d.set_str(s.substr(slash + 1), 10) != 0)
        throw invalid_input("QZ: bad integer in \"" + s + "\"");
    return QZ(n, d);
}

std::complex<double> Mu8::value() const {
    static const double pi = std::acos(-1.0);
    return std::polar(1.0, 2.0 * pi * exp / 8.0);
}

int padic_valuation(const ZZ& n, const ZZ& p) {
    if (n == 0) throw invalid_input("padic_valuation of zero");
    ZZ rest;
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long to_long(const ZZ& n) {
    if (!n.fits_slong_p()) throw invalid_input("integer out of long range: " + n.get_str());
    return n.get_si();
}

}  // namespace fqm
