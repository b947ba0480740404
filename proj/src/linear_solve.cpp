#include "sasaki/linear_solve.hpp"

#include <algorithm>
#include <utility>

#include "sasaki/errors.hpp"

namespace sasaki {

std::optional<std::vector<Rational>> solve_linear_exact(std::vector<std::vector<Rational>> a,
                                                        std::vector<Rational> rhs) {
    const size_t n = a.size();
    if (n == 0 || rhs.size() != n) throw Error("solve_linear_exact: shape mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw Error("solve_linear_exact: shape mismatch");

    // clear denominators row by row
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].denominator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), rhs[i].denominator().get_mpz_t());
        for (size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j].numerator() * (l / a[i][j].denominator());
        m[i][n] = rhs[i].numerator() * (l / rhs[i].denominator());
    }

    mpz_class prev(1);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) std::swap(m[pivot], m[k]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                mpz_class t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }

    std::vector<Rational> x(n);
    for (size_t k = n; k-- > 0;) {
        Rational acc(mpz_class(m[k][n]));
        for (size_t j = k + 1; j < n; ++j)
            acc -= Rational(mpz_class(m[k][j])) * x[j];
        x[k] = acc / Rational(mpz_class(m[k][k]));
    }
    return x;
}

namespace {

size_t coeff_bits(const Polynomial& p) {
    size_t bits = 0;
    for (const auto& c : p.coeffs()) {
        bits = std::max(bits, mpz_sizeinbase(c.numerator().get_mpz_t(), 2));
        bits = std::max(bits, mpz_sizeinbase(c.denominator().get_mpz_t(), 2));
    }
    return bits;
}

void check_caps(const Polynomial& p, unsigned max_degree, unsigned max_coeff_bits) {
    if (p.degree() > static_cast<int>(max_degree) || coeff_bits(p) > max_coeff_bits)
        throw SymbolicEliminationOverflow("symbolic elimination exceeded degree/size caps");
}

} // namespace

std::vector<RationalFunction> solve_poly_system(std::vector<std::vector<Polynomial>> a,
                                                std::vector<Polynomial> rhs,
                                                unsigned max_degree,
                                                unsigned max_coeff_bits) {
    const size_t rows = a.size();
    if (rows == 0 || rhs.size() != rows) throw Error("solve_poly_system: shape mismatch");
    const size_t cols = a[0].size();
    if (cols == 0 || cols > rows) throw Error("solve_poly_system: need rows >= cols");
    for (auto& row : a)
        if (row.size() != cols) throw Error("solve_poly_system: ragged matrix");
    for (size_t i = 0; i < rows; ++i) a[i].push_back(std::move(rhs[i]));

    Polynomial prev(Rational(1));
    for (size_t k = 0; k < cols; ++k) {
        // lowest-degree nonzero pivot keeps the minors small
        size_t pivot = rows;
        for (size_t i = k; i < rows; ++i) {
            if (a[i][k].is_zero()) continue;
            if (pivot == rows || a[i][k].degree() < a[pivot][k].degree()) pivot = i;
        }
        if (pivot == rows) throw SingularSystem("solve_poly_system: rank-deficient column");
        if (pivot != k) std::swap(a[pivot], a[k]);
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j <= cols; ++j) {
                Polynomial t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = divide_exact(t, prev);
                check_caps(a[i][j], max_degree, max_coeff_bits);
            }
            a[i][k] = Polynomial();
        }
        prev = a[k][k];
    }

    // surplus rows of a consistent system must have been eliminated to zero
    for (size_t i = cols; i < rows; ++i)
        for (size_t j = 0; j <= cols; ++j)
            if (!a[i][j].is_zero())
                throw SingularSystem("solve_poly_system: inconsistent surplus row");

    std::vector<RationalFunction> x(cols);
    for (size_t k = cols; k-- > 0;) {
        RationalFunction acc(a[k][cols]);
        for (size_t j = k + 1; j < cols; ++j)
            acc -= RationalFunction(a[k][j]) * x[j];
        x[k] = acc / RationalFunction(a[k][k]);
    }
    return x;
}

} // namespace sasaki
