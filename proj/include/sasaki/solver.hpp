#ifndef SASAKI_SOLVER_HPP
#define SASAKI_SOLVER_HPP

#include <array>
#include <optional>
#include <utility>

#include "sasaki/admissible.hpp"
#include "sasaki/polynomial.hpp"
#include "sasaki/rational_function.hpp"

namespace sasaki {

enum class SolveMode { EigenBasis, DoubleIntegration };

/* The profile equation for F = p_c * Theta with weight line f = az+b:
 *
 *   f^2 F'' - 2a(m+1) f F' + a^2(m+1)(m+2) F  =  S f^2 - (Az+B) p_c
 *
 * subject to F(+-1) = 0, F'(+-1) = -+ 2 p_c(+-1), with S the curvature
 * source term. For a != 0 the powers (az+b)^s, s <= m, are eigenfunctions
 * of the left side with eigenvalue a^2 (s-m-1)(s-m-2), so the solve
 * reduces to a 4x4 system for (p_{m+1}, p_{m+2}, A, B); for a = 0 the left
 * side is b^2 F'' and the system is solved for two integration constants
 * instead.
 */
struct ExtremalSolution {
    Polynomial F;   // p_c * Theta, degree <= m+2
    Rational A, B;  // extremal affine function A z + B
    SolveMode mode = SolveMode::EigenBasis;
    AdmissibleData data;
    WeightParams weight;
    bool extended_boundary = false; // solved on the boundary ray b = |a|
};

/* Solution of the general-weight profile equation
 *   (v p_c Theta)'' = v S - (Az+B) w p_c,   G := v p_c Theta,
 * with G(+-1) = 0 and G'(+-1) = -+ 2 v(+-1) p_c(+-1). In forced mode only
 * the two value conditions are imposed and the residuals of all four are
 * reported.
 */
struct WeightedSolution {
    Polynomial G;
    Rational A, B;
    Polynomial v, w;
    AdmissibleData data;
    // G(1), G(-1), G'(1) + 2 v(1) p_c(1), G'(-1) - 2 v(-1) p_c(-1)
    std::array<Rational, 4> boundary_residuals{};
    bool forced = false;
};

struct ExistenceReport {
    bool exists = false;
    Polynomial deflated; // F / (1 - z^2); positive endpoint values p_c(+-1)
    std::vector<RootInterval> interior_roots;
    bool double_root_flag = false;
    std::optional<Rational> witness; // rational point with Theta <= 0
};

// Left side of the profile equation applied to an arbitrary polynomial.
Polynomial extremal_operator(const Polynomial& F, const Rational& a, const Rational& b,
                             unsigned m);

/* Solves the profile equation exactly. Throws ValidationError for
 * inadmissible input and SingularSystem when the boundary system
 * degenerates (parameters outside the solvable domain).
 */
ExtremalSolution solve_extremal(const AdmissibleData& data, const WeightParams& w,
                                bool extended = false);

/* General polynomial weights. v must be positive on [-1,1]; w as well
 * unless forced coefficients are supplied. Throws NonPositiveWeight and
 * SingularSystem.
 */
WeightedSolution solve_weighted(const AdmissibleData& data, const Polynomial& v,
                                const Polynomial& w,
                                std::optional<std::pair<Rational, Rational>> forced = {});

// Theta = F / p_c, reduced.
RationalFunction theta_profile(const ExtremalSolution& sol);
// Theta = G / (v p_c), reduced.
RationalFunction theta_profile(const WeightedSolution& sol);

/* Deflates F by (1 - z^2) and certifies strict positivity of the quotient
 * on [-1, 1]; equivalent to Theta > 0 on the open interval because the
 * quotient's endpoint values are p_c(+-1) > 0.
 */
ExistenceReport existence_verdict(const ExtremalSolution& sol);

/* Weighted scalar curvature of the metric determined by theta, as an exact
 * rational function:
 *   Scal_f = ( f^2 S - L[theta * p_c] ) / p_c ,
 * L the left side of the profile equation. Equals Az+B when theta solves it.
 */
RationalFunction scalar_curvature_profile(const AdmissibleData& data, const WeightParams& w,
                                          const RationalFunction& theta);

/* Weight perturbation used to separate profile zeroes from extremal-affine
 * zeroes: for t rational,
 *   theta_t = Theta - t (1-z^2)^2 (Az+B)^3
 *   w_t     = w + t ( v p_c (1-z^2)^2 (Az+B)^3 )'' / ((Az+B) p_c)
 * satisfies the same profile equation with weights (v, w_t) and the same
 * (A, B); the identity is checked exactly before returning. Throws
 * DegenerateExtremalAffine when A = B = 0.
 */
std::pair<RationalFunction, RationalFunction> perturbation_pair(const AdmissibleData& data,
                                                                const Polynomial& v,
                                                                const Polynomial& w,
                                                                const WeightedSolution& sol,
                                                                const Rational& t);

} // namespace sasaki

#endif
