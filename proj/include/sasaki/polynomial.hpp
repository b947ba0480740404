#ifndef SASAKI_POLYNOMIAL_HPP
#define SASAKI_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sasaki/rational.hpp"

namespace sasaki {

/* Univariate polynomial over Rational, dense coefficient representation.
 * coeff(k) is the coefficient of z^k. The zero polynomial has degree -1;
 * otherwise the leading coefficient is nonzero. All arithmetic is exact.
 */
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(int constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial variable();                                        // z
    static Polynomial affine(const Rational& slope, const Rational& intercept);
    static Polynomial monomial(const Rational& c, unsigned k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rational& coeff(int k) const;
    const Rational& leading() const { return c_.back(); } // pre: !is_zero()
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;   // exact Horner evaluation
    double eval_double(double x) const;

    Polynomial derivative() const;
    Polynomial antiderivative() const;              // integration constant 0

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    Polynomial& operator/=(const Rational& s);
    Polynomial pow(unsigned e) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const Rational& s) { return a /= s; }

    bool operator==(const Polynomial&) const = default;

    // Leading coefficient scaled to one. pre: !is_zero().
    Polynomial monic() const;

    std::string to_string(std::string_view var = "z") const;

  private:
    std::vector<Rational> c_;
    void trim();
};

// Exact integral of p over [lo, hi].
Rational definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi);

// Euclidean division: num = q*den + r with deg r < deg den. Throws on den = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

// Quotient of an exact division; throws NotDivisible when the remainder is nonzero.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

// Monic gcd over the rationals; gcd(0, 0) = 0.
Polynomial gcd(Polynomial p, Polynomial q);

// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/* Coefficients q_s with p(z) = sum_s q_s (a z + b)^s, length deg(p)+1.
 * Throws ZeroScale when a = 0.
 */
std::vector<Rational> shift_basis(const Polynomial& p, const Rational& a, const Rational& b);

// Inverse of shift_basis: expands sum_s q_s (a z + b)^s in the monomial basis.
Polynomial from_shift_basis(std::span<const Rational> q, const Rational& a, const Rational& b);

/* Number of distinct real roots of p in the half-open interval (lo, hi],
 * by Sturm's theorem. p must be square-free (divide by gcd(p, p') first)
 * and nonzero; throws ZeroPolynomial otherwise.
 */
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);

struct RootInterval {
    Rational lo, hi; // exactly one distinct root of p in (lo, hi]
};

/* Isolating intervals for the distinct real roots of p in (lo, hi], refined
 * until their width is at most `width`. Square-free reduction is internal.
 */
std::vector<RootInterval> isolate_roots(const Polynomial& p, Rational lo, Rational hi,
                                        const Rational& width = Rational(1, 1 << 24));

struct PositivityCertificate {
    bool positive = false;
    // When !positive: a rational point with p(witness) <= 0, if one exists.
    // It can fail to exist only when p touches zero at an irrational point
    // of even multiplicity without ever going negative.
    std::optional<Rational> witness;
    std::vector<RootInterval> roots; // isolating intervals of roots in [lo, hi]
};

/* Decides p(z) > 0 for all z in [lo, hi]: explicit endpoint and midpoint
 * sign checks plus a square-free Sturm root count of zero on the interval.
 */
PositivityCertificate certify_positive_on_closed(const Polynomial& p, const Rational& lo,
                                                 const Rational& hi);
bool is_positive_on_closed(const Polynomial& p, const Rational& lo, const Rational& hi);

// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/* Exact rational root of p inside an isolating interval, found by refining
 * the bracket and probing smallest-denominator candidates. Returns nullopt
 * when the root is irrational or its denominator exceeds the refinement cap.
 */
std::optional<Rational> rational_root_in(const Polynomial& p, const RootInterval& bracket);

} // namespace sasaki

#endif
