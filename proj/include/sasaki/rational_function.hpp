#ifndef SASAKI_RATIONAL_FUNCTION_HPP
#define SASAKI_RATIONAL_FUNCTION_HPP

#include <string>
#include <string_view>

#include "sasaki/polynomial.hpp"

namespace sasaki {

/* Quotient of two polynomials kept in reduced form: gcd(num, den) = 1 and
 * den monic, never identically zero. Field arithmetic is exact.
 */
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // pre: is_polynomial()
    Polynomial as_polynomial() const { return num_ / den_.coeff(0); }

    // pre: den(x) != 0
    Rational operator()(const Rational& x) const;

    RationalFunction derivative() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o); // throws on zero divisor

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    bool operator==(const RationalFunction&) const = default;

    std::string to_string(std::string_view var = "z") const;

  private:
    Polynomial num_, den_;
    void reduce();
};

} // namespace sasaki

#endif
