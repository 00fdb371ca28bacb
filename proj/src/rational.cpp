#include "dq/rational.hpp"

#include <cctype>
#include <ostream>

namespace dq {

namespace {

void require_nonzero_den(const mpz_class& d) {
    if (d == 0) throw DivisionByZero("rational with zero denominator");
}

}  // namespace

Rational::Rational(long n, long d) : v_(n, d) {
    require_nonzero_den(v_.get_den());
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(0) {
    require_nonzero_den(d);
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::parse(std::string_view s) {
    auto fail = [&] { throw ParseError("not a rational: \"" + std::string(s) + "\""); };
    size_t i = 0;
    auto scan_int = [&](std::string& out) {
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') out.push_back(s[i]);  // mpz_set_str takes no '+'
            ++i;
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
        if (i == start) fail();
    };
    std::string num, den;
    scan_int(num);
    if (i < s.size() && s[i] == '/') {
        ++i;
        scan_int(den);
    }
    if (i != s.size()) fail();

    mpz_class n(num);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den);
    if (d == 0) fail();
    return Rational(n, d);
}

std::string Rational::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
}

mpz_class height(const Rational& r) {
    mpz_class n = abs(r.num());
    const mpz_class d = r.den();
    return n >= d ? n : d;
}

bool is_square(const Rational& r) {
    if (r.sign() < 0) return false;
    const mpz_class n = r.num();
    const mpz_class d = r.den();
    return mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t());
}

Rational sqrt_exact(const Rational& r) {
    if (!is_square(r)) throw NotASquare("not a rational square: " + r.str());
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), r.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.den().get_mpz_t());
    return Rational(n, d);
}

}  // namespace dq
