#ifndef SASAKI_INTERVAL_HPP
#define SASAKI_INTERVAL_HPP

#include <mpfr.h>

#include "sasaki/rational.hpp"

namespace sasaki {

/* Closed floating interval [lo, hi] with outward (directed) rounding at a
 * fixed working precision. Just enough operations to evaluate sums of
 * products of logarithms of rationals with a certified enclosure.
 */
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(Interval o);
    ~Interval();

    static Interval from_rational(const Rational& q, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    Interval& operator+=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o); // pre: o excludes zero
    Interval log() const; // pre: lower endpoint > 0

    bool strictly_positive() const;
    bool strictly_negative() const;
    bool contains_zero() const { return !strictly_positive() && !strictly_negative(); }

    double midpoint() const;
    double radius() const; // rounded up

  private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

} // namespace sasaki

#endif
