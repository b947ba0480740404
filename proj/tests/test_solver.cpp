#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sasaki/errors.hpp"
#include "sasaki/solver.hpp"
#include "test_support.hpp"

using namespace sasaki;
using namespace sasaki::testing;

namespace {
const Polynomial z = Polynomial::variable();
const Polynomial one_minus_z2 = Polynomial(1) - z * z;

AdmissibleData one_factor(unsigned dim, Rational scal, long p, Rational c) {
    AdmissibleData d;
    d.factors.push_back({dim, std::move(scal), p, std::move(c)});
    return d;
}
} // namespace

TEST_CASE("product-metric fixture: double integration branch") {
    // hand oracle: F'' = -(Az+B), four boundary conditions force
    // A = 0, B = 2, F = 1 - z^2
    const AdmissibleData data; // m = 1
    const auto sol = solve_extremal(data, {Rational(0), Rational(1)});
    CHECK(sol.mode == SolveMode::DoubleIntegration);
    CHECK(sol.A == Rational(0));
    CHECK(sol.B == Rational(2));
    CHECK(sol.F == one_minus_z2);
    CHECK_FALSE(sol.extended_boundary);
}

TEST_CASE("extended ray a = b = 1 on the minimal fixture") {
    // eigenbasis oracle in powers of (z+1): p0 = 0, p1 = 2, p2 = -1, p3 = 0
    const AdmissibleData data;
    CHECK_THROWS_AS(solve_extremal(data, {Rational(1), Rational(1)}), ValidationError);
    const auto sol = solve_extremal(data, {Rational(1), Rational(1)}, true);
    CHECK(sol.mode == SolveMode::EigenBasis);
    CHECK(sol.extended_boundary);
    CHECK(sol.A == Rational(-4));
    CHECK(sol.B == Rational(-4));
    CHECK(sol.F == one_minus_z2);
}

TEST_CASE("a = b = 1 pins A = B = -2m(m+1) for any admissible data") {
    const AdmissibleData fixtures[] = {
        AdmissibleData{},                                // m = 1
        one_factor(1, Rational(0), 1, Rational(2)),      // m = 2
        one_factor(2, Rational(3, 2), 1, Rational(2)),   // m = 3
        one_factor(3, Rational(-1), -1, Rational(3, 2)), // m = 4
    };
    for (const auto& data : fixtures) {
        const long m = data.m();
        const auto sol = solve_extremal(data, {Rational(1), Rational(1)}, true);
        CHECK(sol.A == Rational(-2 * m * (m + 1)));
        CHECK(sol.B == Rational(-2 * m * (m + 1)));
    }
}

TEST_CASE("mirrored extended ray a = -b") {
    // z -> -z carries the a = b anchor to A = +2m(m+1), B = -2m(m+1)
    const AdmissibleData fixtures[] = {
        AdmissibleData{},
        one_factor(1, Rational(0), 1, Rational(2)),
        one_factor(2, Rational(0), 1, Rational(2)),
    };
    for (const auto& data : fixtures) {
        const long m = data.m();
        const auto sol = solve_extremal(data, {Rational(-1), Rational(1)}, true);
        CHECK(sol.A == Rational(2 * m * (m + 1)));
        CHECK(sol.B == Rational(-2 * m * (m + 1)));
        CHECK(sol.extended_boundary);
    }
}

TEST_CASE("eigenvalue identity of the profile operator") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 50; ++iter) {
        std::uniform_int_distribution<unsigned> md(1, 4);
        const unsigned m = md(rng);
        std::uniform_int_distribution<unsigned> sd(0, m + 4);
        const unsigned s = sd(rng);
        Rational a = rand_rational(rng, 4, 3);
        if (a.is_zero()) a = Rational(1, 3);
        const Rational b = rand_rational(rng, 4, 3);
        const Polynomial fs = Polynomial::affine(a, b).pow(s);
        const Rational lambda = a * a * Rational(static_cast<long>(s) - m - 1) *
                                Rational(static_cast<long>(s) - m - 2);
        CHECK(extremal_operator(fs, a, b, m) == lambda * fs);
    }
}

TEST_CASE("profile equation and boundary conditions hold exactly on random instances") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 30; ++iter) {
        const AdmissibleData data = rand_data(rng);
        const WeightParams w = rand_weight(rng);
        const auto sol = solve_extremal(data, w);
        const Polynomial p_c = fiber_polynomial(data);
        const Polynomial f = Polynomial::affine(w.a, w.b);
        const Polynomial rhs =
            curvature_sum(data) * f * f - Polynomial::affine(sol.A, sol.B) * p_c;
        CHECK(extremal_operator(sol.F, w.a, w.b, data.m()) == rhs);
        CHECK(sol.F(Rational(1)).is_zero());
        CHECK(sol.F(Rational(-1)).is_zero());
        CHECK(sol.F.derivative()(Rational(1)) == Rational(-2) * p_c(Rational(1)));
        CHECK(sol.F.derivative()(Rational(-1)) == Rational(2) * p_c(Rational(-1)));
        CHECK(sol.F.degree() <= static_cast<int>(data.m()) + 2);
    }
}

TEST_CASE("validation failures propagate") {
    const auto bad = one_factor(1, Rational(0), 1, Rational(1));
    CHECK_THROWS_AS(solve_extremal(bad, {Rational(0), Rational(1)}), ValidationError);
}

TEST_CASE("weighted solve with unit weights matches the hand computation") {
    const AdmissibleData data; // m = 1, p_c = 1, S = 0
    const auto sol = solve_weighted(data, Polynomial(1), Polynomial(1));
    CHECK(sol.A == Rational(0));
    CHECK(sol.B == Rational(2));
    CHECK(sol.G == one_minus_z2);
    for (const auto& r : sol.boundary_residuals) CHECK(r.is_zero());
}

TEST_CASE("weighted solve coincides with the a = 0 profile solve") {
    // oracle: with v = w = 1 the weighted equation at b = 1 is the a = 0 case
    const auto data = one_factor(1, Rational(0), 0, Rational(1)); // m = 2, p_c = 1
    const auto weighted = solve_weighted(data, Polynomial(1), Polynomial(1));
    const auto profile = solve_extremal(data, {Rational(0), Rational(1)});
    CHECK(weighted.G == profile.F);
    CHECK(weighted.A == profile.A);
    CHECK(weighted.B == profile.B);
    CHECK(weighted.G.degree() <= 3); // cubic family, quartic-free
}

TEST_CASE("forced coefficients report residuals instead of failing") {
    const AdmissibleData data = one_factor(1, Rational(0), 1, Rational(2)); // S = 0
    const auto sol =
        solve_weighted(data, Polynomial(1), Polynomial(1), std::pair{Rational(0), Rational(0)});
    CHECK(sol.forced);
    // G'' = 0 and G(+-1) = 0 force G = 0; the derivative conditions fail by
    // exactly the boundary data, which is reported
    CHECK(sol.G.is_zero());
    const Polynomial p_c = fiber_polynomial(data);
    CHECK(sol.boundary_residuals[0].is_zero());
    CHECK(sol.boundary_residuals[1].is_zero());
    CHECK(sol.boundary_residuals[2] == Rational(2) * p_c(Rational(1)));
    CHECK(sol.boundary_residuals[3] == Rational(-2) * p_c(Rational(-1)));
}

TEST_CASE("nonpositive weights are rejected") {
    const AdmissibleData data;
    CHECK_THROWS_AS(solve_weighted(data, z, Polynomial(1)), NonPositiveWeight);
    CHECK_THROWS_AS(solve_weighted(data, Polynomial(1), z - Polynomial(2)), NonPositiveWeight);
    // forced mode drops the positivity requirement on w only
    CHECK_NOTHROW(
        solve_weighted(data, Polynomial(1), z, std::pair{Rational(0), Rational(2)}));
}

TEST_CASE("theta profile reduces the fiber polynomial") {
    ExtremalSolution sol;
    sol.F = one_minus_z2;
    sol.data = AdmissibleData{};
    CHECK(theta_profile(sol) == RationalFunction(one_minus_z2));

    // exact cancellation of a shared factor
    ExtremalSolution sol2;
    sol2.F = (z + Polynomial(2)) * one_minus_z2;
    sol2.data = one_factor(1, Rational(0), 1, Rational(2));
    CHECK(theta_profile(sol2) == RationalFunction(one_minus_z2));

    // no common factor: denominator (z+2)^2 stays
    ExtremalSolution sol3;
    sol3.F = one_minus_z2;
    sol3.data = one_factor(2, Rational(0), 1, Rational(2));
    const auto theta = theta_profile(sol3);
    CHECK(theta.den() == (z + Polynomial(2)) * (z + Polynomial(2)));
}

TEST_CASE("existence verdicts") {
    ExtremalSolution sol;
    sol.data = AdmissibleData{};
    sol.F = one_minus_z2;
    auto rep = existence_verdict(sol);
    CHECK(rep.exists);
    CHECK(rep.deflated == Polynomial(1));
    CHECK(rep.interior_roots.empty());
    CHECK_FALSE(rep.double_root_flag);
    CHECK_FALSE(rep.witness.has_value());

    ExtremalSolution dbl;
    dbl.data = one_factor(1, Rational(0), 0, Rational(1));
    dbl.F = one_minus_z2 * poly_with_roots({Rational(1, 2), Rational(1, 2)});
    rep = existence_verdict(dbl);
    CHECK_FALSE(rep.exists);
    CHECK(rep.double_root_flag);
    REQUIRE(rep.witness.has_value());
    CHECK(*rep.witness == Rational(1, 2));
    REQUIRE(rep.interior_roots.size() == 1);

    ExtremalSolution near;
    near.data = one_factor(1, Rational(0), 0, Rational(1));
    // deflated minimum 1/50 at z = 1/3, positive by the calculus oracle
    near.F = one_minus_z2 *
             (poly_with_roots({Rational(1, 3), Rational(1, 3)}) + Polynomial(Rational(1, 50)));
    rep = existence_verdict(near);
    CHECK(rep.exists);
}

TEST_CASE("nonexistence: strongly negative base curvature near the class wall") {
    // profile dips negative: the verdict must be false with an exact witness
    const auto data = one_factor(1, Rational(-8), 1, Rational(9, 8));
    const auto sol = solve_extremal(data, {Rational(0), Rational(1)});
    const auto rep = existence_verdict(sol);
    CHECK_FALSE(rep.exists);
    REQUIRE(rep.witness.has_value());
    const Polynomial p_c = fiber_polynomial(data);
    CHECK(sol.F(*rep.witness).sign() <= 0);
    CHECK(rep.interior_roots.size() == 2);
    CHECK_FALSE(rep.double_root_flag);
}

TEST_CASE("existence verdict agrees with a dense sign-sampling oracle") {
    const auto data = one_factor(1, Rational(-8), 1, Rational(9, 8));
    const WeightParams rays[] = {
        {Rational(0), Rational(1)},    // profile dips negative
        {Rational(3, 8), Rational(1)}, // still negative somewhere
        {Rational(1, 2), Rational(1)}, // positive throughout
        {Rational(3, 4), Rational(1)},
    };
    for (const auto& w : rays) {
        const auto sol = solve_extremal(data, w);
        const auto rep = existence_verdict(sol);
        bool sampled_nonpositive = false;
        for (long i = 1; i < 10000 && !sampled_nonpositive; ++i) {
            const Rational zi = Rational(-1) + Rational(2 * i, 10000);
            sampled_nonpositive = sol.F(zi).sign() <= 0;
        }
        if (sampled_nonpositive) CHECK_FALSE(rep.exists);
        if (!rep.exists) {
            REQUIRE(rep.witness.has_value());
            CHECK(sol.F(*rep.witness).sign() <= 0);
            CHECK(rep.witness->abs() < Rational(1));
        }
    }
}

TEST_CASE("scalar curvature profile closed forms") {
    const AdmissibleData data; // m = 1
    const RationalFunction theta(one_minus_z2);
    // -(theta)'' = 2 for the product metric
    CHECK(scalar_curvature_profile(data, {Rational(0), Rational(1)}, theta) ==
          RationalFunction(Polynomial(2)));
    // symbolic expansion oracle at a = b = 1
    CHECK(scalar_curvature_profile(data, {Rational(1), Rational(1)}, theta) ==
          RationalFunction(Rational(-4) * z - Polynomial(4)));
}

TEST_CASE("extremality identity: curvature of the solved profile is its affine function") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 20; ++iter) {
        const AdmissibleData data = rand_data(rng);
        const WeightParams w = rand_weight(rng);
        const auto sol = solve_extremal(data, w);
        const auto scal = scalar_curvature_profile(data, w, theta_profile(sol));
        CHECK(scal == RationalFunction(Polynomial::affine(sol.A, sol.B)));
    }
}

TEST_CASE("coefficients converge to the a = 0 limit") {
    const AdmissibleData data;
    const auto base = solve_extremal(data, {Rational(0), Rational(1)});
    const auto close = solve_extremal(data, {Rational(1, 1000000), Rational(1)});
    for (int k = 0; k <= 3; ++k) {
        const double diff = (close.F.coeff(k) - base.F.coeff(k)).to_double();
        CHECK(std::fabs(diff) < 1e-3);
    }
    CHECK(std::fabs((close.A - base.A).to_double()) < 1e-3);
    CHECK(std::fabs((close.B - base.B).to_double()) < 1e-3);
}

TEST_CASE("perturbation pair: unit-weight closed form") {
    const AdmissibleData data; // m = 1
    const auto sol = solve_weighted(data, Polynomial(1), Polynomial(1));
    const Rational t(1, 10);
    const auto [theta_t, w_t] = perturbation_pair(data, Polynomial(1), Polynomial(1), sol, t);

    // theta_t = (1 - z^2) - 8t (1 - z^2)^2, hand differentiation oracle
    const Polynomial bump = one_minus_z2 * one_minus_z2 * Rational(8);
    CHECK(theta_t == RationalFunction(one_minus_z2 - t * bump));
    // w_t = 1 + t (bump)''/2
    CHECK(w_t == RationalFunction(Polynomial(1) + t * divide_exact(bump.derivative().derivative(),
                                                                   Polynomial(2))));

    // t = 0 is the identity
    const auto [theta_0, w_0] = perturbation_pair(data, Polynomial(1), Polynomial(1), sol,
                                                  Rational(0));
    CHECK(theta_0 == theta_profile(sol));
    CHECK(w_0 == RationalFunction(Polynomial(1)));
}

TEST_CASE("perturbation pair: exact residual identity on random weights") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 12) {
        const AdmissibleData data = rand_data(rng);
        // positive weights: random square plus a positive constant
        std::vector<Rational> vc{rand_rational(rng), rand_rational(rng)};
        std::vector<Rational> wc{rand_rational(rng), rand_rational(rng), rand_rational(rng)};
        const Polynomial v = Polynomial(vc) * Polynomial(vc) + Polynomial(rand_positive_rational(rng));
        const Polynomial w = Polynomial(wc) * Polynomial(wc) + Polynomial(rand_positive_rational(rng));
        const auto sol = solve_weighted(data, v, w);
        if (sol.A.is_zero() && sol.B.is_zero()) continue;
        const Rational t = rand_rational(rng, 8, 5);
        const auto [theta_t, w_t] = perturbation_pair(data, v, w, sol, t);

        // independent re-check of the guaranteed identity
        const Polynomial p_c = fiber_polynomial(data);
        const RationalFunction lhs =
            (RationalFunction(v * p_c) * theta_t).derivative().derivative();
        const RationalFunction rhs =
            RationalFunction(v * curvature_sum(data)) -
            RationalFunction(Polynomial::affine(sol.A, sol.B)) * w_t * RationalFunction(p_c);
        CHECK(lhs == rhs);

        // boundary behaviour of the perturbed profile
        const Rational one(1), neg(-1);
        CHECK(theta_t(one).is_zero());
        CHECK(theta_t(neg).is_zero());
        const auto dtheta = theta_t.derivative();
        CHECK(dtheta(one) == Rational(-2));
        CHECK(dtheta(neg) == Rational(2));
        ++done;
    }
}

TEST_CASE("perturbation rejects a vanishing extremal affine function") {
    const AdmissibleData data;
    WeightedSolution sol = solve_weighted(data, Polynomial(1), Polynomial(1));
    sol.A = Rational(0);
    sol.B = Rational(0);
    CHECK_THROWS_AS(perturbation_pair(data, Polynomial(1), Polynomial(1), sol, Rational(1)),
                    DegenerateExtremalAffine);
}
