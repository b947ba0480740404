#include "sasaki/solver.hpp"

#include <stdexcept>

#include "sasaki/errors.hpp"
#include "sasaki/linear_solve.hpp"

namespace sasaki {

namespace {

const Polynomial kOneMinusZ2(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});

// rows: F(1)=0, F(-1)=0, F'(1)=-2p_c(1), F'(-1)=+2p_c(-1);
// columns are the contributions of the four unknowns, rhs moves the rest.
std::array<Rational, 4> boundary_rhs(const Polynomial& particular, const Polynomial& p_c,
                                     const Polynomial& v) {
    const Polynomial dp = particular.derivative();
    return {-particular(Rational(1)), -particular(Rational(-1)),
            Rational(-2) * v(Rational(1)) * p_c(Rational(1)) - dp(Rational(1)),
            Rational(2) * v(Rational(-1)) * p_c(Rational(-1)) - dp(Rational(-1))};
}

void check_solution(const ExtremalSolution& sol) {
    const Polynomial p_c = fiber_polynomial(sol.data);
    const Polynomial S = curvature_sum(sol.data);
    const Polynomial f = Polynomial::affine(sol.weight.a, sol.weight.b);
    const Polynomial rhs =
        S * f * f - Polynomial::affine(sol.A, sol.B) * p_c;
    const Polynomial residual =
        extremal_operator(sol.F, sol.weight.a, sol.weight.b, sol.data.m()) - rhs;
    const Polynomial dF = sol.F.derivative();
    const bool ok = residual.is_zero() && sol.F(Rational(1)).is_zero() &&
                    sol.F(Rational(-1)).is_zero() &&
                    dF(Rational(1)) == Rational(-2) * p_c(Rational(1)) &&
                    dF(Rational(-1)) == Rational(2) * p_c(Rational(-1));
    if (!ok) throw std::logic_error("solve_extremal: exact residual check failed");
}

} // namespace

Polynomial extremal_operator(const Polynomial& F, const Rational& a, const Rational& b,
                             unsigned m) {
    const Polynomial f = Polynomial::affine(a, b);
    const Rational m1(static_cast<long>(m) + 1), m2(static_cast<long>(m) + 2);
    return f * f * F.derivative().derivative()
         - Rational(2) * a * m1 * f * F.derivative()
         + a * a * m1 * m2 * F;
}

ExtremalSolution solve_extremal(const AdmissibleData& data, const WeightParams& w,
                                bool extended) {
    require_valid(data, w, extended);
    const unsigned m = data.m();
    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial S = curvature_sum(data);
    const Polynomial z = Polynomial::variable();

    ExtremalSolution sol;
    sol.data = data;
    sol.weight = w;
    sol.extended_boundary = (w.b == w.a.abs());

    if (w.a.is_zero()) {
        // b^2 F'' = S b^2 - (Az+B) p_c: integrate twice
        const Rational b2 = w.b * w.b;
        const Polynomial d0 = S.antiderivative().antiderivative();
        const Polynomial da = ((z * p_c) / b2).antiderivative().antiderivative();
        const Polynomial db = (p_c / b2).antiderivative().antiderivative();

        const auto rhs4 = boundary_rhs(d0, p_c, Polynomial(1));
        // unknowns (c0, c1, A, B)
        std::vector<std::vector<Rational>> mat = {
            {Rational(1), Rational(1), -da(Rational(1)), -db(Rational(1))},
            {Rational(1), Rational(-1), -da(Rational(-1)), -db(Rational(-1))},
            {Rational(0), Rational(1), -da.derivative()(Rational(1)), -db.derivative()(Rational(1))},
            {Rational(0), Rational(1), -da.derivative()(Rational(-1)), -db.derivative()(Rational(-1))},
        };
        auto x = solve_linear_exact(std::move(mat), {rhs4[0], rhs4[1], rhs4[2], rhs4[3]});
        if (!x) throw SingularSystem("solve_extremal: degenerate boundary system (a = 0)");
        sol.A = (*x)[2];
        sol.B = (*x)[3];
        sol.F = d0 - (*x)[2] * da - (*x)[3] * db +
                Polynomial::affine((*x)[1], (*x)[0]);
        sol.mode = SolveMode::DoubleIntegration;
    } else {
        // expand the source in powers of (az+b) and divide by the eigenvalues
        const Polynomial f = Polynomial::affine(w.a, w.b);
        const Rational a2 = w.a * w.a;
        auto divided = [&](const Polynomial& src) {
            std::vector<Rational> q(m + 1, Rational(0));
            const auto coeffs = shift_basis(src, w.a, w.b);
            if (coeffs.size() > m + 1)
                throw std::logic_error("solve_extremal: source degree exceeds m");
            for (size_t s = 0; s < coeffs.size(); ++s) {
                const long sm1 = static_cast<long>(s) - static_cast<long>(m) - 1;
                const long sm2 = static_cast<long>(s) - static_cast<long>(m) - 2;
                q[s] = coeffs[s] / (a2 * Rational(sm1) * Rational(sm2));
            }
            return from_shift_basis(q, w.a, w.b);
        };
        const Polynomial f0 = divided(S * f * f);
        const Polynomial fa = divided(z * p_c);
        const Polynomial fb = divided(p_c);
        const Polynomial h1 = f.pow(m + 1);
        const Polynomial h2 = f.pow(m + 2);

        const auto rhs4 = boundary_rhs(f0, p_c, Polynomial(1));
        // unknowns (p_{m+1}, p_{m+2}, A, B)
        std::vector<std::vector<Rational>> mat = {
            {h1(Rational(1)), h2(Rational(1)), -fa(Rational(1)), -fb(Rational(1))},
            {h1(Rational(-1)), h2(Rational(-1)), -fa(Rational(-1)), -fb(Rational(-1))},
            {h1.derivative()(Rational(1)), h2.derivative()(Rational(1)),
             -fa.derivative()(Rational(1)), -fb.derivative()(Rational(1))},
            {h1.derivative()(Rational(-1)), h2.derivative()(Rational(-1)),
             -fa.derivative()(Rational(-1)), -fb.derivative()(Rational(-1))},
        };
        auto x = solve_linear_exact(std::move(mat), {rhs4[0], rhs4[1], rhs4[2], rhs4[3]});
        if (!x) throw SingularSystem("solve_extremal: degenerate boundary system");
        sol.A = (*x)[2];
        sol.B = (*x)[3];
        sol.F = f0 - (*x)[2] * fa - (*x)[3] * fb + (*x)[0] * h1 + (*x)[1] * h2;
        sol.mode = SolveMode::EigenBasis;
    }
    check_solution(sol);
    return sol;
}

WeightedSolution solve_weighted(const AdmissibleData& data, const Polynomial& v,
                                const Polynomial& w,
                                std::optional<std::pair<Rational, Rational>> forced) {
    for (size_t j = 0; j < data.factors.size(); ++j)
        if (!(data.factors[j].c > Rational(data.factors[j].p).abs()))
            throw ValidationError("solve_weighted: factor constraint c_j > |p_j| violated");
    if (v.is_zero() || !is_positive_on_closed(v, Rational(-1), Rational(1)))
        throw NonPositiveWeight("solve_weighted: v must be positive on [-1,1]");
    if (!forced) {
        if (w.is_zero() || !is_positive_on_closed(w, Rational(-1), Rational(1)))
            throw NonPositiveWeight("solve_weighted: w must be positive on [-1,1]");
    }

    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial S = curvature_sum(data);
    const Polynomial z = Polynomial::variable();

    // G'' = v S - A (z w p_c) - B (w p_c)
    const Polynomial d0 = (v * S).antiderivative().antiderivative();
    const Polynomial da = (z * w * p_c).antiderivative().antiderivative();
    const Polynomial db = (w * p_c).antiderivative().antiderivative();

    WeightedSolution sol;
    sol.data = data;
    sol.v = v;
    sol.w = w;

    if (forced) {
        sol.forced = true;
        sol.A = forced->first;
        sol.B = forced->second;
        const Polynomial part = d0 - sol.A * da - sol.B * db;
        // value conditions G(+-1) = 0 fix the two integration constants
        const Rational c1 = (part(Rational(-1)) - part(Rational(1))) / Rational(2);
        const Rational c0 = -(part(Rational(1)) + part(Rational(-1))) / Rational(2);
        sol.G = part + Polynomial::affine(c1, c0);
    } else {
        const auto rhs4 = boundary_rhs(d0, p_c, v);
        std::vector<std::vector<Rational>> mat = {
            {Rational(1), Rational(1), -da(Rational(1)), -db(Rational(1))},
            {Rational(1), Rational(-1), -da(Rational(-1)), -db(Rational(-1))},
            {Rational(0), Rational(1), -da.derivative()(Rational(1)), -db.derivative()(Rational(1))},
            {Rational(0), Rational(1), -da.derivative()(Rational(-1)), -db.derivative()(Rational(-1))},
        };
        auto x = solve_linear_exact(std::move(mat), {rhs4[0], rhs4[1], rhs4[2], rhs4[3]});
        if (!x) throw SingularSystem("solve_weighted: degenerate boundary system");
        sol.A = (*x)[2];
        sol.B = (*x)[3];
        sol.G = d0 - sol.A * da - sol.B * db + Polynomial::affine((*x)[1], (*x)[0]);
    }

    const Polynomial dG = sol.G.derivative();
    sol.boundary_residuals = {
        sol.G(Rational(1)), sol.G(Rational(-1)),
        dG(Rational(1)) + Rational(2) * v(Rational(1)) * p_c(Rational(1)),
        dG(Rational(-1)) - Rational(2) * v(Rational(-1)) * p_c(Rational(-1))};
    if (!sol.forced)
        for (const auto& r : sol.boundary_residuals)
            if (!r.is_zero()) throw std::logic_error("solve_weighted: nonzero boundary residual");
    return sol;
}

RationalFunction theta_profile(const ExtremalSolution& sol) {
    return RationalFunction(sol.F, fiber_polynomial(sol.data));
}

RationalFunction theta_profile(const WeightedSolution& sol) {
    return RationalFunction(sol.G, sol.v * fiber_polynomial(sol.data));
}

ExistenceReport existence_verdict(const ExtremalSolution& sol) {
    ExistenceReport rep;
    rep.deflated = divide_exact(sol.F, kOneMinusZ2);
    const auto cert = certify_positive_on_closed(rep.deflated, Rational(-1), Rational(1));
    rep.exists = cert.positive;
    rep.interior_roots = cert.roots;
    rep.witness = cert.witness;
    const Polynomial g = gcd(sol.F, sol.F.derivative());
    rep.double_root_flag =
        g.degree() >= 1 && sturm_count(squarefree_part(g), Rational(-1), Rational(1)) > 0;
    // F(+-1) = 0 simply, so any root of g lies in the open interval
    return rep;
}

RationalFunction scalar_curvature_profile(const AdmissibleData& data, const WeightParams& w,
                                          const RationalFunction& theta) {
    const unsigned m = data.m();
    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial S = curvature_sum(data);
    const RationalFunction f(Polynomial::affine(w.a, w.b));
    const Rational m1(static_cast<long>(m) + 1), m2(static_cast<long>(m) + 2);

    const RationalFunction h = theta * RationalFunction(p_c);
    const RationalFunction lh = f * f * h.derivative().derivative()
                              - RationalFunction(Rational(2) * w.a * m1) * f * h.derivative()
                              + RationalFunction(w.a * w.a * m1 * m2) * h;
    return (RationalFunction(S) * f * f - lh) / RationalFunction(p_c);
}

std::pair<RationalFunction, RationalFunction> perturbation_pair(const AdmissibleData& data,
                                                                const Polynomial& v,
                                                                const Polynomial& w,
                                                                const WeightedSolution& sol,
                                                                const Rational& t) {
    if (sol.A.is_zero() && sol.B.is_zero())
        throw DegenerateExtremalAffine("perturbation_pair: extremal affine function is zero");
    const Polynomial p_c = fiber_polynomial(data);
    const Polynomial ell = Polynomial::affine(sol.A, sol.B);
    const Polynomial bump = kOneMinusZ2 * kOneMinusZ2 * ell.pow(3);

    const RationalFunction theta_t =
        theta_profile(sol) - RationalFunction(t * bump);
    const RationalFunction w_tilde(
        (v * p_c * bump).derivative().derivative(), ell * p_c);
    const RationalFunction w_t = RationalFunction(w) + RationalFunction(Polynomial(t)) * w_tilde;

    // exact check: (v p_c theta_t)'' = v S - (Az+B) w_t p_c with unchanged (A, B)
    const RationalFunction lhs =
        (RationalFunction(v * p_c) * theta_t).derivative().derivative();
    const RationalFunction rhs = RationalFunction(v * curvature_sum(data)) -
                                 RationalFunction(ell) * w_t * RationalFunction(p_c);
    if (!(lhs - rhs).is_zero())
        throw std::logic_error("perturbation_pair: residual identity failed");
    return {theta_t, w_t};
}

} // namespace sasaki
