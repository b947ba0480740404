#include "sasaki/interval.hpp"

#include <algorithm>
#include <utility>

#include "sasaki/errors.hpp"

namespace sasaki {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval& Interval::operator+=(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator*=(const Interval& o) {
    mpfr_t cand, lo, hi;
    mpfr_init2(cand, prec_);
    mpfr_init2(lo, prec_);
    mpfr_init2(hi, prec_);
    bool first = true;
    const mpfr_srcptr xs[2] = {lo_, hi_};
    const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_mul(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, lo) < 0) mpfr_set(lo, cand, MPFR_RNDD);
            mpfr_mul(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, hi) > 0) mpfr_set(hi, cand, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(lo_, lo, MPFR_RNDD);
    mpfr_set(hi_, hi, MPFR_RNDU);
    mpfr_clear(cand);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return *this;
}

Interval& Interval::operator/=(const Interval& o) {
    if (o.contains_zero()) throw Error("Interval: division by interval containing zero");
    mpfr_t cand, lo, hi;
    mpfr_init2(cand, prec_);
    mpfr_init2(lo, prec_);
    mpfr_init2(hi, prec_);
    bool first = true;
    const mpfr_srcptr xs[2] = {lo_, hi_};
    const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
    for (auto x : xs) {
        for (auto y : ys) {
            mpfr_div(cand, x, y, MPFR_RNDD);
            if (first || mpfr_cmp(cand, lo) < 0) mpfr_set(lo, cand, MPFR_RNDD);
            mpfr_div(cand, x, y, MPFR_RNDU);
            if (first || mpfr_cmp(cand, hi) > 0) mpfr_set(hi, cand, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_set(lo_, lo, MPFR_RNDD);
    mpfr_set(hi_, hi, MPFR_RNDU);
    mpfr_clear(cand);
    mpfr_clear(lo);
    mpfr_clear(hi);
    return *this;
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw Error("Interval::log: nonpositive endpoint");
    Interval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Interval::strictly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::strictly_negative() const { return mpfr_sgn(hi_) < 0; }

double Interval::midpoint() const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(mid, mid, 2, MPFR_RNDN);
    const double d = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return d;
}

double Interval::radius() const {
    mpfr_t rad;
    mpfr_init2(rad, prec_);
    mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
    mpfr_div_ui(rad, rad, 2, MPFR_RNDU);
    const double d = mpfr_get_d(rad, MPFR_RNDU);
    mpfr_clear(rad);
    return d;
}

} // namespace sasaki
