#include "sasaki/rational.hpp"

#include <cctype>
#include <ostream>

#include "sasaki/errors.hpp"

namespace sasaki {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw Error("Rational: empty string");
    const std::string text(s);
    for (char ch : text) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw Error("Rational: malformed literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw Error("Rational: malformed literal '" + text + "'");
    if (q.get_den() == 0)
        throw Error("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::abs() const {
    Rational r(*this);
    if (r.sign() < 0) r.q_ = -r.q_;
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("Rational: inverse of zero");
    return Rational(1) / *this;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.q_.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.q_.get_den().get_mpz_t(), n);
    mpq_class out(num, den);
    out.canonicalize();
    return Rational(out);
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.q_ = -r.q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_;
}

Rational floor(const Rational& r) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
    return Rational(f);
}

Rational ceil(const Rational& r) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), r.raw().get_num().get_mpz_t(), r.raw().get_den().get_mpz_t());
    return Rational(c);
}

} // namespace sasaki
