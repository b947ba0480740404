#include "sasaki/rational_function.hpp"

#include "sasaki/errors.hpp"

namespace sasaki {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("RationalFunction: zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Rational lead = den_.leading();
    num_ /= lead;
    den_ /= lead;
}

Rational RationalFunction::operator()(const Rational& x) const {
    const Rational d = den_(x);
    if (d.is_zero()) throw Error("RationalFunction: evaluation at a pole");
    return num_(x) / d;
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error("RationalFunction: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    if (den_.is_zero()) throw Error("RationalFunction: division by zero");
    reduce();
    return *this;
}

std::string RationalFunction::to_string(std::string_view var) const {
    if (is_polynomial()) return as_polynomial().to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace sasaki
