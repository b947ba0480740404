#include "sasaki/log_value.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "sasaki/errors.hpp"

namespace sasaki {

std::string to_string(Sign s) {
    switch (s) {
        case Sign::Negative: return "-";
        case Sign::Zero: return "0";
        case Sign::Positive: return "+";
        default: return "?";
    }
}

LogPolynomialValue LogPolynomialValue::log_term(const Rational& coeff, const Rational& arg) {
    if (arg.sign() <= 0) throw Error("log_term: argument must be positive");
    LogPolynomialValue v;
    if (coeff.is_zero() || arg == Rational(1)) return v;
    Term t;
    t.coeff = coeff;
    if (arg < Rational(1)) {
        t.coeff = -t.coeff;
        t.logs.push_back(arg.inverse());
    } else {
        t.logs.push_back(arg);
    }
    v.terms_.push_back(std::move(t));
    return v;
}

void LogPolynomialValue::add_term(Term t) {
    if (t.coeff.is_zero()) return;
    if (t.logs.empty()) {
        constant_ += t.coeff;
        return;
    }
    std::sort(t.logs.begin(), t.logs.end());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t.logs,
                               [](const Term& a, const std::vector<Rational>& key) {
                                   return std::lexicographical_compare(
                                       a.logs.begin(), a.logs.end(), key.begin(), key.end());
                               });
    if (it != terms_.end() && it->logs == t.logs) {
        it->coeff += t.coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(t));
    }
}

LogPolynomialValue LogPolynomialValue::operator-() const {
    LogPolynomialValue r(*this);
    r.constant_ = -r.constant_;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

LogPolynomialValue& LogPolynomialValue::operator+=(const LogPolynomialValue& o) {
    constant_ += o.constant_;
    for (const auto& t : o.terms_) add_term(t);
    return *this;
}

LogPolynomialValue& LogPolynomialValue::operator-=(const LogPolynomialValue& o) {
    constant_ -= o.constant_;
    for (auto t : o.terms_) {
        t.coeff = -t.coeff;
        add_term(std::move(t));
    }
    return *this;
}

LogPolynomialValue& LogPolynomialValue::operator*=(const LogPolynomialValue& o) {
    LogPolynomialValue prod;
    prod.constant_ = constant_ * o.constant_;
    for (const auto& t : terms_) {
        Term s = t;
        s.coeff *= o.constant_;
        prod.add_term(std::move(s));
    }
    for (const auto& t : o.terms_) {
        Term s = t;
        s.coeff *= constant_;
        prod.add_term(std::move(s));
    }
    for (const auto& t1 : terms_) {
        for (const auto& t2 : o.terms_) {
            Term s;
            s.coeff = t1.coeff * t2.coeff;
            s.logs = t1.logs;
            s.logs.insert(s.logs.end(), t2.logs.begin(), t2.logs.end());
            prod.add_term(std::move(s));
        }
    }
    *this = std::move(prod);
    return *this;
}

LogPolynomialValue& LogPolynomialValue::operator*=(const Rational& s) {
    if (s.is_zero()) {
        constant_ = Rational(0);
        terms_.clear();
        return *this;
    }
    constant_ *= s;
    for (auto& t : terms_) t.coeff *= s;
    return *this;
}

Interval LogPolynomialValue::enclosure(mpfr_prec_t prec) const {
    Interval acc = Interval::from_rational(constant_, prec);
    for (const auto& t : terms_) {
        Interval term = Interval::from_rational(t.coeff, prec);
        for (const auto& arg : t.logs)
            term *= Interval::from_rational(arg, prec).log();
        acc += term;
    }
    return acc;
}

unsigned sign_precision_cap() {
    static const unsigned cap = [] {
        if (const char* env = std::getenv("SASAKI_MAX_PREC")) {
            const long v = std::atol(env);
            if (v >= 64 && v <= (1L << 20)) return static_cast<unsigned>(v);
        }
        return 4096u;
    }();
    return cap;
}

Sign LogPolynomialValue::certified_sign(unsigned max_bits) const {
    if (is_zero()) return Sign::Zero;
    if (is_rational()) return constant_.sign() > 0 ? Sign::Positive : Sign::Negative;
    if (max_bits == 0) max_bits = sign_precision_cap();
    unsigned prec = 53;
    for (;;) {
        const Interval e = enclosure(static_cast<mpfr_prec_t>(prec));
        if (e.strictly_positive()) return Sign::Positive;
        if (e.strictly_negative()) return Sign::Negative;
        if (prec >= max_bits) return Sign::Undetermined;
        prec = std::min(prec < 128 ? 128u : prec * 2, max_bits);
    }
}

double LogPolynomialValue::to_double() const {
    return enclosure(128).midpoint();
}

std::string LogPolynomialValue::to_string() const {
    std::ostringstream os;
    os << constant_.to_string();
    for (const auto& t : terms_) {
        os << (t.coeff.sign() < 0 ? " - " : " + ") << t.coeff.abs().to_string();
        for (const auto& arg : t.logs) os << "*log(" << arg.to_string() << ")";
    }
    return os.str();
}

namespace {

Rational binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

} // namespace

LogPolynomialValue moment(unsigned k, unsigned n, const Rational& a, const Rational& b) {
    // plain moment of z^k; no pole regardless of the weight line
    if (n == 0) {
        return LogPolynomialValue(k % 2 == 1 ? Rational(0)
                                             : Rational(2) / Rational(static_cast<long>(k + 1)));
    }
    if (a.is_zero()) {
        if (b.is_zero()) throw PoleOnInterval("moment: az+b identically zero");
        if (k % 2 == 1) return LogPolynomialValue(Rational(0));
        return LogPolynomialValue(b.pow(-static_cast<long>(n)) * Rational(2) /
                                  Rational(static_cast<long>(k + 1)));
    }
    if (b.abs() <= a.abs())
        throw PoleOnInterval("moment: az+b vanishes on [-1,1]");

    // u = az+b:  a^{-k-1} sum_i C(k,i) (-b)^{k-i} integral of u^{i-n} over [b-a, b+a]
    const Rational u_hi = b + a;
    const Rational u_lo = b - a;
    const Rational scale = a.pow(-static_cast<long>(k) - 1);
    LogPolynomialValue acc;
    for (unsigned i = 0; i <= k; ++i) {
        const Rational c = scale * binomial(k, i) * (-b).pow(static_cast<long>(k - i));
        const long j = static_cast<long>(i) - static_cast<long>(n);
        if (j == -1) {
            acc += LogPolynomialValue::log_term(c, u_hi / u_lo);
        } else {
            acc += LogPolynomialValue(c * (u_hi.pow(j + 1) - u_lo.pow(j + 1)) /
                                      Rational(j + 1));
        }
    }
    return acc;
}

} // namespace sasaki
