#ifndef SASAKI_LOG_VALUE_HPP
#define SASAKI_LOG_VALUE_HPP

#include <string>
#include <vector>

#include "sasaki/interval.hpp"
#include "sasaki/rational.hpp"

namespace sasaki {

enum class Sign { Negative = -1, Zero = 0, Positive = 1, Undetermined = 2 };

std::string to_string(Sign s);

/* Exact value of the form
 *
 *     c  +  sum_i  q_i * log(r_{i,1}) * ... * log(r_{i,k_i})
 *
 * with c, q_i rational and the log arguments rationals > 1 (an argument in
 * (0,1) is flipped to its reciprocal, negating the coefficient; log 1 never
 * appears). Terms are keyed by the sorted multiset of their arguments and
 * merged, so the representation is canonical: two values built from the
 * same argument set are equal iff their coefficients coincide. These carry
 * the closed forms of the momentum-interval integrals behind the Futaki
 * pairings, where genuinely transcendental terms appear.
 */
class LogPolynomialValue {
  public:
    struct Term {
        Rational coeff;
        std::vector<Rational> logs; // sorted, each argument > 1
        bool operator==(const Term&) const = default;
    };

    LogPolynomialValue() = default;
    LogPolynomialValue(const Rational& c) : constant_(c) {}
    LogPolynomialValue(int c) : constant_(Rational(c)) {}

    // coeff * log(arg); arg must be positive. log 1 gives the zero value.
    static LogPolynomialValue log_term(const Rational& coeff, const Rational& arg);

    const Rational& constant() const { return constant_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return constant_.is_zero() && terms_.empty(); }
    bool is_rational() const { return terms_.empty(); }

    LogPolynomialValue operator-() const;
    LogPolynomialValue& operator+=(const LogPolynomialValue& o);
    LogPolynomialValue& operator-=(const LogPolynomialValue& o);
    LogPolynomialValue& operator*=(const LogPolynomialValue& o);
    LogPolynomialValue& operator*=(const Rational& s);

    friend LogPolynomialValue operator+(LogPolynomialValue a, const LogPolynomialValue& b) { return a += b; }
    friend LogPolynomialValue operator-(LogPolynomialValue a, const LogPolynomialValue& b) { return a -= b; }
    friend LogPolynomialValue operator*(LogPolynomialValue a, const LogPolynomialValue& b) { return a *= b; }
    friend LogPolynomialValue operator*(LogPolynomialValue a, const Rational& s) { return a *= s; }
    friend LogPolynomialValue operator*(const Rational& s, LogPolynomialValue a) { return a *= s; }

    bool operator==(const LogPolynomialValue&) const = default;

    // Certified enclosure at the given working precision.
    Interval enclosure(mpfr_prec_t prec) const;

    /* Sign certification: symbolic zero first, then interval evaluation at
     * 53, 128, 256, ... bits until the enclosure excludes zero, giving up
     * as Undetermined at max_bits (0 selects the configured cap).
     */
    Sign certified_sign(unsigned max_bits = 0) const;

    double to_double() const; // midpoint of a 128-bit enclosure

    std::string to_string() const;

  private:
    Rational constant_;
    std::vector<Term> terms_;
    void add_term(Term t);
};

/* Cap on certified-sign refinement, in bits: the SASAKI_MAX_PREC
 * environment variable when set, 4096 otherwise.
 */
unsigned sign_precision_cap();

/* Exact closed form of the moment integral
 *
 *     integral_{-1}^{1} z^k (a z + b)^{-n} dz ,   k, n >= 0.
 *
 * Computed by the substitution u = az+b and binomial expansion; the log
 * term appears exactly when the expansion hits exponent -1. Throws
 * PoleOnInterval when az+b vanishes somewhere on [-1, 1] (and n >= 1).
 */
LogPolynomialValue moment(unsigned k, unsigned n, const Rational& a, const Rational& b);

} // namespace sasaki

#endif
