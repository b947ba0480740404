#ifndef SASAKI_TEST_SUPPORT_HPP
#define SASAKI_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "sasaki/admissible.hpp"
#include "sasaki/polynomial.hpp"
#include "sasaki/rational.hpp"

namespace sasaki::testing {

inline Rational rand_rational(std::mt19937_64& rng, long max_num = 6, long max_den = 6) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Rational rand_positive_rational(std::mt19937_64& rng, long max_num = 6,
                                       long max_den = 6) {
    std::uniform_int_distribution<long> num(1, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

// admissible data with m = 1 + sum(dim) <= max_m
inline AdmissibleData rand_data(std::mt19937_64& rng, unsigned max_m = 4) {
    AdmissibleData data;
    std::uniform_int_distribution<int> nfac(0, 2);
    std::uniform_int_distribution<long> twist(-2, 2);
    unsigned budget = max_m - 1;
    const int k = nfac(rng);
    for (int j = 0; j < k && budget > 0; ++j) {
        BaseFactor f;
        std::uniform_int_distribution<unsigned> dim(1, budget);
        f.dim = dim(rng);
        budget -= f.dim;
        f.scal = rand_rational(rng, 4, 3);
        f.p = twist(rng);
        f.c = Rational(f.p).abs() + rand_positive_rational(rng, 3, 2);
        data.factors.push_back(std::move(f));
    }
    return data;
}

// weight parameters with b >= |a| + 1/10
inline WeightParams rand_weight(std::mt19937_64& rng) {
    WeightParams w;
    w.a = rand_rational(rng, 4, 3);
    w.b = w.a.abs() + Rational(1, 10) + rand_positive_rational(rng, 3, 2);
    return w;
}

// monic polynomial with the given rational roots
inline Polynomial poly_with_roots(const std::vector<Rational>& roots) {
    Polynomial p(Rational(1));
    for (const auto& r : roots) p *= Polynomial::affine(Rational(1), -r);
    return p;
}

/* Adaptive Simpson quadrature; plenty for the smooth weight integrands the
 * tests compare against.
 */
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-14, int depth = 48) {
    struct Impl {
        const std::function<double(double)>& f;
        double recurse(double a, double m, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) const {
            const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
                return left + right + (left + right - whole) / 15.0;
            return recurse(a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
                   recurse(m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    } impl{f};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return impl.recurse(a, m, b, fa, fm, fb, whole, tol, depth);
}

} // namespace sasaki::testing

#endif
