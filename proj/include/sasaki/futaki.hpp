#ifndef SASAKI_FUTAKI_HPP
#define SASAKI_FUTAKI_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sasaki/admissible.hpp"
#include "sasaki/log_value.hpp"
#include "sasaki/solver.hpp"

namespace sasaki {

// Element of the 2-torus Lie algebra as an affine function of the momentum.
struct AffineFn {
    Rational slope;
    Rational intercept;

    Polynomial as_polynomial() const { return Polynomial::affine(slope, intercept); }
    Rational operator()(const Rational& z) const { return slope * z + intercept; }
};

/* Exact scalar carried as a ratio of log-polynomial values (denominator 1
 * for plain values), with certified sign and a numeric enclosure. All
 * Futaki-type quantities drop overall positive dimensional constants, so
 * they are meaningful in sign and in ratios only.
 */
struct FutakiValue {
    LogPolynomialValue num;
    LogPolynomialValue den = LogPolynomialValue(1);
    Sign sign = Sign::Undetermined;
    double value = 0.0;
    double error = 0.0;

    bool equals_rational(const Rational& q) const {
        return (num - q * den).is_zero();
    }
};

FutakiValue make_futaki_value(LogPolynomialValue num, LogPolynomialValue den,
                              unsigned max_bits = 0);

/* Momentum-interval pairing of two affine functions against the weight
 * (az+b)^{-exponent} and the fiber polynomial:
 *
 *   << l1, l2 >> = integral_{-1}^{1} l1 l2 (az+b)^{-exponent} p_c dz ,
 *
 * exact up to the dropped positive constant. exponent = m+3 gives the
 * pairing of torus elements. Requires b > |a|.
 */
LogPolynomialValue pairing(const AffineFn& l1, const AffineFn& l2, const AdmissibleData& data,
                           const WeightParams& w, unsigned exponent);

/* Extremal affine coefficients by integration by parts, independent of the
 * profile solve: testing the weighted profile equation against 1 and z
 * turns the left side into pure boundary data and leaves a 2x2 moment
 * system for (A, B). Polynomial-weight overload returns exact rationals.
 */
std::pair<Rational, Rational> extremal_affine_ibp(const AdmissibleData& data,
                                                  const Polynomial& v, const Polynomial& w);

/* Same with the Sasaki weight pair v = f^{-m-1}, w = f^{-m-3}; the moment
 * matrix lives in the log-value ring, so the coefficients come back as
 * certified ratios. Requires b > |a| strictly (PoleOnInterval otherwise).
 */
std::pair<FutakiValue, FutakiValue> extremal_affine_ibp(const AdmissibleData& data,
                                                        const WeightParams& w,
                                                        unsigned max_bits = 0);

/* Average transverse scalar curvature constant
 *   c_K = << l_ext, l_K >> / << l_K, l_K >>   (exponent m+3).
 */
FutakiValue c_K(const AdmissibleData& data, const WeightParams& w, const AffineFn& ell_ext,
                unsigned max_bits = 0);

// c_K = m(m+1) exactly characterizes scalar-flat cones.
bool is_scalar_flat_cone(const FutakiValue& ck, unsigned m);

/* Contact Futaki obstruction against the torus element ell_Z, as the exact
 * 2x2 determinant
 *   << l_ext, l_Z >> << l_K, l_K >> - << l_ext, l_K >> << l_K, l_Z >> ,
 * a positive multiple of Fut_K(Z). Symbolically zero for ell_Z = l_K.
 */
FutakiValue futaki(const AdmissibleData& data, const WeightParams& w, const AffineFn& ell_Z,
                   unsigned max_bits = 0);

/* Sign-faithful indicator of the degeneration-to-normal-cone invariant at
 * momentum z0: the exact value Theta_ext(z0) = F(z0)/p_c(z0). The positive
 * proportionality factor is not computed. Requires |z0| < 1.
 */
Rational df_indicator(const AdmissibleData& data, const WeightParams& w, const Rational& z0);

/* CSC rays: values of the slope a (at fixed b) where the extremal affine
 * function is proportional to the weight line, i.e. roots of
 * D(a) = A(a) b - B(a) a. A(a), B(a) are obtained symbolically from the
 * boundary system with a as an indeterminate.
 */
struct CscRay {
    std::optional<Rational> exact; // exact rational root when recovered
    RootInterval bracket;          // isolating interval for the ray
    std::optional<bool> theta_positive; // profile positivity at the ray
};

struct CscResult {
    bool identically_zero = false; // every ray is CSC (D == 0)
    std::vector<CscRay> rays;
};

CscResult find_csc(const AdmissibleData& data, const Rational& b, const Rational& search_lo,
                   const Rational& search_hi);

/* Double-root defect of F at -B/A with denominators cleared:
 *   d0 = A^{m+2} F(-B/A),   d1 = A^{m+1} F'(-B/A);
 * (0,0) iff -B/A is a root of F of multiplicity >= 2. For A = 0 the root
 * moves to infinity and the defect is the pair of leading coefficients
 * (coeff of z^{m+2}, coeff of z^{m+1}).
 */
std::pair<Rational, Rational> double_root_defect(const ExtremalSolution& sol);

} // namespace sasaki

#endif
