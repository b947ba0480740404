#include "sasaki/futaki.hpp"

#include <limits>

#include "sasaki/errors.hpp"
#include "sasaki/linear_solve.hpp"

namespace sasaki {

namespace {

// integral of q(z) (az+b)^{-n} over [-1,1], assembled from moments
LogPolynomialValue weighted_integral(const Polynomial& q, unsigned n, const Rational& a,
                                     const Rational& b) {
    LogPolynomialValue acc;
    for (int k = 0; k <= q.degree(); ++k)
        acc += q.coeff(k) * moment(static_cast<unsigned>(k), n, a, b);
    return acc;
}

Sign sign_product(Sign x, Sign y) {
    if (x == Sign::Zero || y == Sign::Zero) return Sign::Zero;
    if (x == Sign::Undetermined || y == Sign::Undetermined) return Sign::Undetermined;
    return x == y ? Sign::Positive : Sign::Negative;
}

} // namespace

FutakiValue make_futaki_value(LogPolynomialValue num, LogPolynomialValue den,
                              unsigned max_bits) {
    if (den.is_zero()) throw Error("FutakiValue: zero denominator");
    FutakiValue fv;
    fv.num = std::move(num);
    fv.den = std::move(den);
    if (fv.num.is_zero())
        fv.sign = Sign::Zero;
    else
        fv.sign = sign_product(fv.num.certified_sign(max_bits), fv.den.certified_sign(max_bits));

    const unsigned cap = max_bits ? max_bits : sign_precision_cap();
    for (unsigned prec = 128;; prec *= 2) {
        const Interval di = fv.den.enclosure(static_cast<mpfr_prec_t>(prec));
        if (!di.contains_zero()) {
            Interval q = fv.num.enclosure(static_cast<mpfr_prec_t>(prec));
            q /= di;
            fv.value = q.midpoint();
            fv.error = q.radius();
            break;
        }
        if (prec >= cap) {
            fv.value = 0.0;
            fv.error = std::numeric_limits<double>::infinity();
            break;
        }
    }
    return fv;
}

LogPolynomialValue pairing(const AffineFn& l1, const AffineFn& l2, const AdmissibleData& data,
                           const WeightParams& w, unsigned exponent) {
    if (!(w.b > w.a.abs()))
        throw PoleOnInterval("pairing: requires b > |a|");
    const Polynomial q = l1.as_polynomial() * l2.as_polynomial() * fiber_polynomial(data);
    return weighted_integral(q, exponent, w.a, w.b);
}

std::pair<Rational, Rational> extremal_affine_ibp(const AdmissibleData& data,
                                                  const Polynomial& v, const Polynomial& w) {
    if (v.is_zero() || !is_positive_on_closed(v, Rational(-1), Rational(1)) ||
        w.is_zero() || !is_positive_on_closed(w, Rational(-1), Rational(1)))
        throw NonPositiveWeight("extremal_affine_ibp: weights must be positive on [-1,1]");
    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial S = curvature_sum(data);
    const Polynomial z = Polynomial::variable();
    const Rational one(1), neg(-1);

    const auto I = [](const Polynomial& q) {
        return definite_integral(q, Rational(-1), Rational(1));
    };
    // boundary data from testing against z and 1
    const Rational bz = Rational(2) * v(one) * p_c(one) - Rational(2) * v(neg) * p_c(neg);
    const Rational b1 = Rational(2) * v(one) * p_c(one) + Rational(2) * v(neg) * p_c(neg);

    auto x = solve_linear_exact(
        {{I(z * z * w * p_c), I(z * w * p_c)}, {I(z * w * p_c), I(w * p_c)}},
        {I(z * v * S) + bz, I(v * S) + b1});
    if (!x) throw SingularMoments("extremal_affine_ibp: singular moment matrix");
    return {(*x)[0], (*x)[1]};
}

std::pair<FutakiValue, FutakiValue> extremal_affine_ibp(const AdmissibleData& data,
                                                        const WeightParams& w,
                                                        unsigned max_bits) {
    if (!(w.b > w.a.abs()))
        throw PoleOnInterval("extremal_affine_ibp: Sasaki weights need b > |a|");
    const unsigned m = data.m();
    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial S = curvature_sum(data);
    const Polynomial z = Polynomial::variable();
    const Rational one(1), neg(-1);

    const LogPolynomialValue P = weighted_integral(z * z * p_c, m + 3, w.a, w.b);
    const LogPolynomialValue Q = weighted_integral(z * p_c, m + 3, w.a, w.b);
    const LogPolynomialValue T = weighted_integral(p_c, m + 3, w.a, w.b);

    const Rational v1 = (w.b + w.a).pow(-static_cast<long>(m) - 1);
    const Rational vm1 = (w.b - w.a).pow(-static_cast<long>(m) - 1);
    const LogPolynomialValue R1 = weighted_integral(z * S, m + 1, w.a, w.b) +
                                  LogPolynomialValue(Rational(2) * v1 * p_c(one) -
                                                     Rational(2) * vm1 * p_c(neg));
    const LogPolynomialValue R2 = weighted_integral(S, m + 1, w.a, w.b) +
                                  LogPolynomialValue(Rational(2) * v1 * p_c(one) +
                                                     Rational(2) * vm1 * p_c(neg));

    const LogPolynomialValue det = P * T - Q * Q;
    if (det.is_zero())
        throw SingularMoments("extremal_affine_ibp: singular moment matrix");
    return {make_futaki_value(R1 * T - R2 * Q, det, max_bits),
            make_futaki_value(P * R2 - Q * R1, det, max_bits)};
}

FutakiValue c_K(const AdmissibleData& data, const WeightParams& w, const AffineFn& ell_ext,
                unsigned max_bits) {
    const unsigned m = data.m();
    const AffineFn ell_k{w.a, w.b};
    return make_futaki_value(pairing(ell_ext, ell_k, data, w, m + 3),
                             pairing(ell_k, ell_k, data, w, m + 3), max_bits);
}

bool is_scalar_flat_cone(const FutakiValue& ck, unsigned m) {
    const Rational target(static_cast<long>(m) * (static_cast<long>(m) + 1));
    return ck.equals_rational(target);
}

FutakiValue futaki(const AdmissibleData& data, const WeightParams& w, const AffineFn& ell_Z,
                   unsigned max_bits) {
    const unsigned m = data.m();
    const ExtremalSolution sol = solve_extremal(data, w);
    const AffineFn ell_ext{sol.A, sol.B};
    const AffineFn ell_k{w.a, w.b};
    const LogPolynomialValue s_ez = pairing(ell_ext, ell_Z, data, w, m + 3);
    const LogPolynomialValue s_kk = pairing(ell_k, ell_k, data, w, m + 3);
    const LogPolynomialValue s_ek = pairing(ell_ext, ell_k, data, w, m + 3);
    const LogPolynomialValue s_kz = pairing(ell_k, ell_Z, data, w, m + 3);
    return make_futaki_value(s_ez * s_kk - s_ek * s_kz, LogPolynomialValue(1), max_bits);
}

Rational df_indicator(const AdmissibleData& data, const WeightParams& w, const Rational& z0) {
    if (!(z0.abs() < Rational(1)))
        throw Error("df_indicator: |z0| < 1 required");
    const ExtremalSolution sol = solve_extremal(data, w);
    return sol.F(z0) / fiber_polynomial(data)(z0);
}

namespace {

// Exact profile sign check used to annotate a CSC ray.
std::optional<bool> theta_positive_at(const AdmissibleData& data, const Rational& a,
                                      const Rational& b) {
    try {
        return existence_verdict(solve_extremal(data, {a, b})).exists;
    } catch (const Error&) {
        return std::nullopt;
    }
}

CscResult find_csc_bisection(const AdmissibleData& data, const Rational& b, const Rational& lo,
                             const Rational& hi) {
    // pointwise exact evaluation of D(a) = A(a) b - B(a) a through the solver
    const auto d_at = [&](const Rational& a) -> std::optional<Rational> {
        try {
            const ExtremalSolution s = solve_extremal(data, {a, b});
            return s.A * b - s.B * a;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    const int n = 128;
    std::vector<std::pair<Rational, std::optional<Rational>>> grid;
    grid.reserve(n + 1);
    for (int i = 0; i <= n; ++i)
        grid.emplace_back(lo + (hi - lo) * Rational(i, n), Rational(0));
    bool all_zero = true;
    for (auto& [a, val] : grid) {
        val = d_at(a);
        if (!val || !val->is_zero()) all_zero = false;
    }
    CscResult res;
    if (all_zero) {
        res.identically_zero = true;
        return res;
    }

    const Rational width(1, 1L << 40);
    for (int i = 0; i <= n; ++i) {
        const auto& [a, val] = grid[i];
        if (val && val->is_zero()) {
            CscRay ray;
            ray.exact = a;
            ray.bracket = {a, a};
            ray.theta_positive = theta_positive_at(data, a, b);
            res.rays.push_back(std::move(ray));
        }
        if (i == n) break;
        const auto& [a2, val2] = grid[i + 1];
        if (!val || !val2 || val->is_zero() || val2->is_zero()) continue;
        if (val->sign() == val2->sign()) continue;
        Rational l = a, r = a2;
        int sl = val->sign();
        std::optional<Rational> exact;
        while (r - l > width) {
            const Rational mid = (l + r) / Rational(2);
            const auto vm = d_at(mid);
            if (!vm) break;
            if (vm->is_zero()) {
                exact = mid;
                break;
            }
            (vm->sign() == sl ? l : r) = mid;
        }
        CscRay ray;
        ray.exact = exact;
        ray.bracket = {l, r};
        const Rational probe = exact ? *exact : (l + r) / Rational(2);
        ray.theta_positive = theta_positive_at(data, probe, b);
        res.rays.push_back(std::move(ray));
    }
    return res;
}

} // namespace

CscResult find_csc(const AdmissibleData& data, const Rational& b, const Rational& search_lo,
                   const Rational& search_hi) {
    if (!(b > Rational(0)) || !(search_lo < search_hi) || !(search_lo > -b) || !(search_hi < b))
        throw Error("find_csc: search interval must lie strictly inside (-b, b)");

    const unsigned m = data.m();
    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial S = curvature_sum(data);
    const size_t cols = m + 5; // F_0..F_{m+2}, A, B
    const size_t rows = m + 7;

    /* Profile equation in the monomial basis with the slope a symbolic:
     *   (az+b)^2 F'' - 2a(m+1)(az+b) F' + a^2(m+1)(m+2) F + (Az+B) p_c = S (az+b)^2,
     * coefficient rows for z^0..z^{m+2} plus the four boundary rows. Every
     * entry is a polynomial of degree <= 2 in a.
     */
    std::vector<std::vector<Polynomial>> mat(rows, std::vector<Polynomial>(cols, Polynomial()));
    std::vector<Polynomial> rhs(rows, Polynomial());
    for (size_t k = 0; k <= m + 2; ++k) {
        const long km1 = static_cast<long>(k) - static_cast<long>(m) - 1;
        const long km2 = static_cast<long>(k) - static_cast<long>(m) - 2;
        const long kk = static_cast<long>(k);
        mat[k][k] += Polynomial::monomial(Rational(km1 * km2), 2);
        if (k >= 1)
            mat[k - 1][k] += Polynomial::monomial(Rational(2) * b * Rational(kk * km2), 1);
        if (k >= 2)
            mat[k - 2][k] += Polynomial(b * b * Rational(kk * (kk - 1)));
    }
    const Polynomial zp = Polynomial::variable() * p_c;
    for (size_t j = 0; j <= m + 2; ++j) {
        mat[j][m + 3] = Polynomial(zp.coeff(static_cast<int>(j)));
        mat[j][m + 4] = Polynomial(p_c.coeff(static_cast<int>(j)));
        rhs[j] = Polynomial(std::vector<Rational>{
            b * b * S.coeff(static_cast<int>(j)),
            Rational(2) * b * S.coeff(static_cast<int>(j) - 1),
            S.coeff(static_cast<int>(j) - 2)});
    }
    for (size_t k = 0; k <= m + 2; ++k) {
        const bool odd = k % 2 == 1;
        mat[m + 3][k] = Polynomial(Rational(1));
        mat[m + 4][k] = Polynomial(Rational(odd ? -1 : 1));
        mat[m + 5][k] = Polynomial(Rational(static_cast<long>(k)));
        mat[m + 6][k] = Polynomial(Rational(static_cast<long>(k)) * Rational(odd ? 1 : -1));
    }
    rhs[m + 5] = Polynomial(Rational(-2) * p_c(Rational(1)));
    rhs[m + 6] = Polynomial(Rational(2) * p_c(Rational(-1)));

    std::vector<RationalFunction> x;
    try {
        x = solve_poly_system(std::move(mat), std::move(rhs));
    } catch (const SymbolicEliminationOverflow&) {
        return find_csc_bisection(data, b, search_lo, search_hi);
    }
    const RationalFunction a_var(Polynomial::variable());
    const RationalFunction d = x[m + 3] * RationalFunction(Polynomial(b)) - x[m + 4] * a_var;

    CscResult res;
    if (d.is_zero()) {
        res.identically_zero = true;
        return res;
    }
    const auto brackets = isolate_roots(d.num(), search_lo, search_hi, Rational(1, 1L << 40));
    for (const auto& br : brackets) {
        CscRay ray;
        ray.bracket = br;
        ray.exact = rational_root_in(d.num(), br);
        const Rational probe = ray.exact ? *ray.exact : (br.lo + br.hi) / Rational(2);
        ray.theta_positive = theta_positive_at(data, probe, b);
        res.rays.push_back(std::move(ray));
    }
    return res;
}

std::pair<Rational, Rational> double_root_defect(const ExtremalSolution& sol) {
    const long m = static_cast<long>(sol.data.m());
    const Polynomial& F = sol.F;
    if (sol.A.is_zero())
        return {F.coeff(static_cast<int>(m) + 2), F.coeff(static_cast<int>(m) + 1)};
    const auto cleared = [&](const Polynomial& p, long power) {
        Rational acc(0);
        for (int k = 0; k <= p.degree(); ++k)
            acc += p.coeff(k) * (-sol.B).pow(k) * sol.A.pow(power - k);
        return acc;
    };
    return {cleared(F, m + 2), cleared(F.derivative(), m + 1)};
}

} // namespace sasaki
