#ifndef SASAKI_ADMISSIBLE_HPP
#define SASAKI_ADMISSIBLE_HPP

#include <string>
#include <vector>

#include "sasaki/polynomial.hpp"
#include "sasaki/rational.hpp"

namespace sasaki {

/* One constant-scalar-curvature factor of the base product: complex
 * dimension, scalar curvature, twist degree and class constant. The class
 * constant must dominate the twist, c > |p|, so that p z + c > 0 on the
 * momentum interval [-1, 1].
 */
struct BaseFactor {
    unsigned dim = 1;   // complex dimension d_j >= 1
    Rational scal;      // constant scalar curvature of the factor
    long p = 0;         // twist degree
    Rational c;         // class constant, c > |p|
};

/* Fibration data for an admissible P^1-bundle over a product of polarized
 * CSC factors. m = 1 + sum of the factor dimensions is the complex
 * dimension of the total space. An empty factor list is the degenerate
 * m = 1 case (the bundle over a point), kept as an analytically checkable
 * fixture.
 */
struct AdmissibleData {
    std::vector<BaseFactor> factors;

    unsigned m() const {
        unsigned s = 1;
        for (const auto& f : factors) s += f.dim;
        return s;
    }
};

/* Weight line a z + b over the momentum interval. The open cone of lines
 * positive on [-1,1] is b > |a|; the boundary rays b = |a| > 0 are only
 * admitted behind the explicit extended-domain flag of validate().
 */
struct WeightParams {
    Rational a;
    Rational b;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    std::vector<std::string> warnings; // e.g. "ExtendedDomain"
};

/* Checks every factor constraint c_j > |p_j| and the weight-cone condition
 * b > |a| (with the extended flag, additionally b = |a| > 0, flagged with an
 * ExtendedDomain warning). Report-style: never throws.
 */
ValidationReport validate(const AdmissibleData& data, const WeightParams& w,
                          bool extended = false);

// Throwing wrapper around validate() for internal preconditions.
void require_valid(const AdmissibleData& data, const WeightParams& w, bool extended = false);

/* Fiber polynomial p_c(z) = prod_j (p_j z + c_j)^{d_j}, exactly expanded.
 * Degree sum_{p_j != 0} d_j <= m - 1, strictly positive on [-1, 1];
 * the empty product is the constant 1.
 */
Polynomial fiber_polynomial(const AdmissibleData& data);

/* Curvature source term S(z) = p_c(z) * sum_j Scal_j / (p_j z + c_j).
 * Always a polynomial (each linear factor divides p_c), degree <= m - 2;
 * identically zero when there are no factors.
 */
Polynomial curvature_sum(const AdmissibleData& data);

} // namespace sasaki

#endif
