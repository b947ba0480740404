#include "sasaki/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "sasaki/errors.hpp"

namespace sasaki {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::affine(const Rational& slope, const Rational& intercept) {
    return Polynomial(std::vector<Rational>{intercept, slope});
}

Polynomial Polynomial::monomial(const Rational& c, unsigned k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double Polynomial::eval_double(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + it->to_double();
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
    if (c_.empty()) return Polynomial();
    std::vector<Rational> a(c_.size() + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k)
        a[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return Polynomial(std::move(a));
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            prod[i + j] += c_[i] * o.c_[j];
    c_ = std::move(prod);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
    if (s.is_zero()) throw Error("Polynomial: division by zero scalar");
    for (auto& c : c_) c /= s;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r(Rational(1));
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw ZeroPolynomial("monic: zero polynomial");
    return *this / leading();
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = a == Rational(1);
        if (k == 0 || !unit) os << a.to_string();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Rational definite_integral(const Polynomial& p, const Rational& lo, const Rational& hi) {
    const Polynomial a = p.antiderivative();
    return a(hi) - a(lo);
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error("divmod: division by zero polynomial");
    if (num.degree() < den.degree()) return {Polynomial(), num};
    std::vector<Rational> r(num.coeffs());
    const int dn = den.degree();
    const Rational& lead = den.leading();
    std::vector<Rational> q(static_cast<size_t>(num.degree() - dn + 1), Rational(0));
    for (int k = num.degree(); k >= dn; --k) {
        Rational f = r[static_cast<size_t>(k)] / lead;
        if (f.is_zero()) continue;
        q[static_cast<size_t>(k - dn)] = f;
        for (int j = 0; j <= dn; ++j)
            r[static_cast<size_t>(k - dn + j)] -= f * den.coeff(j);
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial divide_exact(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw NotDivisible("divide_exact: nonzero remainder");
    return q;
}

Polynomial gcd(Polynomial p, Polynomial q) {
    while (!q.is_zero()) {
        Polynomial r = divmod(p, q).second;
        p = std::move(q);
        if (!r.is_zero()) r = r.monic(); // tame coefficient growth
        q = std::move(r);
    }
    return p.is_zero() ? p : p.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree_part: zero polynomial");
    if (p.degree() == 0) return Polynomial(Rational(1));
    return divide_exact(p, gcd(p, p.derivative()));
}

std::vector<Rational> shift_basis(const Polynomial& p, const Rational& a, const Rational& b) {
    if (a.is_zero()) throw ZeroScale("shift_basis: a = 0");
    // Horner composition of p with z = (u - b)/a, coefficients in u.
    Polynomial r;
    const Polynomial u_minus_b = Polynomial::affine(Rational(1), -b);
    for (int k = p.degree(); k >= 0; --k) {
        r *= u_minus_b;
        r /= a;
        r += Polynomial(p.coeff(k));
    }
    std::vector<Rational> out(static_cast<size_t>(p.degree() + 1), Rational(0));
    for (int s = 0; s <= r.degree(); ++s) out[static_cast<size_t>(s)] = r.coeff(s);
    return out;
}

Polynomial from_shift_basis(std::span<const Rational> q, const Rational& a, const Rational& b) {
    Polynomial r;
    const Polynomial f = Polynomial::affine(a, b);
    for (size_t i = q.size(); i-- > 0;) {
        r *= f;
        r += Polynomial(q[i]);
    }
    return r;
}

namespace {

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
    std::vector<Polynomial> seq;
    seq.push_back(p);
    Polynomial d = p.derivative();
    if (!d.is_zero()) seq.push_back(d);
    while (seq.size() >= 2 && seq.back().degree() > 0) {
        Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

int sign_variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
    int vars = 0, last = 0;
    for (const auto& s : seq) {
        const int sg = s(x).sign();
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++vars;
        last = sg;
    }
    return vars;
}

} // namespace

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial("sturm_count: zero polynomial");
    if (!(lo < hi)) throw Error("sturm_count: empty interval");
    const auto seq = sturm_sequence(p);
    return sign_variations_at(seq, lo) - sign_variations_at(seq, hi);
}

std::vector<RootInterval> isolate_roots(const Polynomial& p, Rational lo, Rational hi,
                                        const Rational& width) {
    if (p.is_zero()) throw ZeroPolynomial("isolate_roots: zero polynomial");
    if (!(lo < hi)) return {};
    const Polynomial sf = squarefree_part(p);
    if (sf.degree() < 1) return {};
    const auto seq = sturm_sequence(sf);
    const auto count = [&](const Rational& a, const Rational& b) {
        return sign_variations_at(seq, a) - sign_variations_at(seq, b);
    };

    std::vector<RootInterval> out;
    struct Segment { Rational lo, hi; int n; };
    const int total = count(lo, hi);
    std::vector<Segment> stack{{std::move(lo), std::move(hi), total}};
    while (!stack.empty()) {
        Segment s = std::move(stack.back());
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1) {
            // shrink the bracket below the requested width
            while (s.hi - s.lo > width) {
                Rational mid = (s.lo + s.hi) / Rational(2);
                if (count(s.lo, mid) == 1)
                    s.hi = std::move(mid);
                else
                    s.lo = std::move(mid);
            }
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / Rational(2);
        const int left = count(s.lo, mid);
        stack.push_back({s.lo, mid, left});
        stack.push_back({mid, s.hi, s.n - left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw Error("simplest_rational_between: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (lo.sign() < 0) return -simplest_rational_between(-hi, -lo);
    // 0 < lo <= hi
    const Rational lo_ceil = ceil(lo);
    if (lo_ceil <= hi) return lo_ceil;
    const Rational n = floor(lo);
    return n + simplest_rational_between((hi - n).inverse(), (lo - n).inverse()).inverse();
}

std::optional<Rational> rational_root_in(const Polynomial& p, const RootInterval& bracket) {
    const Polynomial sf = squarefree_part(p);
    Rational lo = bracket.lo, hi = bracket.hi;
    if (sf(hi).is_zero()) return hi;
    if (sf(lo).is_zero()) return std::nullopt; // root at lo is outside (lo, hi]
    int slo = sf(lo).sign();
    if (slo == sf(hi).sign()) return std::nullopt; // even contact; not isolated by sign
    for (int iter = 0; iter < 192; ++iter) {
        Rational cand = simplest_rational_between(lo, hi);
        if (sf(cand).is_zero()) return cand;
        Rational mid = (lo + hi) / Rational(2);
        const int smid = sf(mid).sign();
        if (smid == 0) return mid;
        if (smid == slo)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    return std::nullopt;
}

PositivityCertificate certify_positive_on_closed(const Polynomial& p, const Rational& lo,
                                                 const Rational& hi) {
    if (p.is_zero()) throw ZeroPolynomial("certify_positive_on_closed: zero polynomial");
    if (hi < lo) throw Error("certify_positive_on_closed: empty interval");
    PositivityCertificate cert;

    const auto nonpositive_at = [&](const Rational& x) {
        if (p(x).sign() <= 0) {
            cert.positive = false;
            cert.witness = x;
            return true;
        }
        return false;
    };
    if (nonpositive_at(lo) || nonpositive_at(hi)) return cert;
    if (lo == hi) {
        cert.positive = true;
        return cert;
    }
    if (nonpositive_at((lo + hi) / Rational(2))) return cert;

    if (p.degree() >= 1) {
        const Polynomial sf = squarefree_part(p);
        // p(lo) > 0 and p(hi) > 0, so any remaining root lies in the open interval
        if (sf.degree() >= 1 && sturm_count(sf, lo, hi) > 0) {
            cert.positive = false;
            cert.roots = isolate_roots(p, lo, hi);
            for (const auto& r : cert.roots) {
                if (p(r.lo).sign() <= 0) { cert.witness = r.lo; break; }
                if (p(r.hi).sign() <= 0) { cert.witness = r.hi; break; }
                // sign-preserving contact root: a witness exists only if it is rational
                if (auto root = rational_root_in(p, r)) { cert.witness = *root; break; }
            }
            return cert;
        }
    }
    cert.positive = true;
    return cert;
}

bool is_positive_on_closed(const Polynomial& p, const Rational& lo, const Rational& hi) {
    return certify_positive_on_closed(p, lo, hi).positive;
}

} // namespace sasaki
