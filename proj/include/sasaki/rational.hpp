#ifndef SASAKI_RATIONAL_HPP
#define SASAKI_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace sasaki {

/* Exact rational scalar. Thin value wrapper around GMP's mpq_class that
 * keeps the canonical form invariant (lowest terms, denominator > 0) and
 * fixes the external string format "p/q" ("p" when q = 1).
 */
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class& z) : q_(z) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Parses "p/q" or "p"; throws sasaki::Error on malformed input or q = 0.
    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;
    Rational inverse() const; // throws on zero
    Rational pow(long e) const; // integer exponent, e < 0 requires nonzero

    // Nearest double (GMP rounding); used only for reporting.
    double to_double() const { return q_.get_d(); }

    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

// Floor of a rational as an exact integer-valued Rational.
Rational floor(const Rational& r);
Rational ceil(const Rational& r);

} // namespace sasaki

#endif
