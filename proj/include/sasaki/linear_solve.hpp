#ifndef SASAKI_LINEAR_SOLVE_HPP
#define SASAKI_LINEAR_SOLVE_HPP

#include <optional>
#include <vector>

#include "sasaki/polynomial.hpp"
#include "sasaki/rational.hpp"
#include "sasaki/rational_function.hpp"

namespace sasaki {

/* Exact solution of a square rational system by fraction-free (Bareiss)
 * elimination on the denominator-cleared integer matrix. Returns nullopt
 * when a pivot completion is exactly zero, i.e. the system is singular.
 */
std::optional<std::vector<Rational>> solve_linear_exact(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> rhs);

/* Unique solution of a consistent, possibly overdetermined linear system
 * whose entries are polynomials in one parameter, by fraction-free
 * elimination over the polynomial ring followed by back-substitution in
 * the fraction field. Rows beyond the rank must reduce to zero; a nonzero
 * residual row throws SingularSystem. Degree / coefficient-size caps guard
 * against elimination blowup (SymbolicEliminationOverflow).
 */
std::vector<RationalFunction> solve_poly_system(std::vector<std::vector<Polynomial>> a,
                                                std::vector<Polynomial> rhs,
                                                unsigned max_degree = 64,
                                                unsigned max_coeff_bits = 1u << 16);

} // namespace sasaki

#endif
