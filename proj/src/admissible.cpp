#include "sasaki/admissible.hpp"

#include <sstream>

#include "sasaki/errors.hpp"

namespace sasaki {

ValidationReport validate(const AdmissibleData& data, const WeightParams& w, bool extended) {
    ValidationReport rep;
    for (size_t j = 0; j < data.factors.size(); ++j) {
        const BaseFactor& f = data.factors[j];
        if (f.dim < 1) {
            std::ostringstream os;
            os << "factor " << j << ": dim >= 1 violated";
            rep.violations.push_back(os.str());
        }
        if (!(f.c > Rational(f.p).abs())) {
            std::ostringstream os;
            os << "factor " << j << ": c_j > |p_j| violated (c = " << f.c.to_string()
               << ", p = " << f.p << ")";
            rep.violations.push_back(os.str());
        }
    }
    const Rational abs_a = w.a.abs();
    if (w.b > abs_a) {
        // interior of the cone
    } else if (extended && w.b == abs_a && !w.a.is_zero()) {
        rep.warnings.push_back("ExtendedDomain");
    } else {
        std::ostringstream os;
        os << "weight: b > |a| violated (a = " << w.a.to_string() << ", b = " << w.b.to_string()
           << (extended ? ", extended ray b = |a| > 0 also fails)" : ")");
        rep.violations.push_back(os.str());
    }
    rep.ok = rep.violations.empty();
    return rep;
}

void require_valid(const AdmissibleData& data, const WeightParams& w, bool extended) {
    const ValidationReport rep = validate(data, w, extended);
    if (rep.ok) return;
    std::string msg = "invalid admissible data:";
    for (const auto& v : rep.violations) msg += " [" + v + "]";
    throw ValidationError(msg);
}

Polynomial fiber_polynomial(const AdmissibleData& data) {
    Polynomial p(Rational(1));
    for (const auto& f : data.factors)
        p *= Polynomial::affine(Rational(f.p), f.c).pow(f.dim);
    return p;
}

Polynomial curvature_sum(const AdmissibleData& data) {
    Polynomial s; // zero for the empty product
    for (size_t j = 0; j < data.factors.size(); ++j) {
        if (data.factors[j].scal.is_zero()) continue;
        Polynomial term(data.factors[j].scal);
        for (size_t i = 0; i < data.factors.size(); ++i) {
            const BaseFactor& f = data.factors[i];
            const unsigned e = (i == j) ? f.dim - 1 : f.dim;
            term *= Polynomial::affine(Rational(f.p), f.c).pow(e);
        }
        s += term;
    }
    return s;
}

} // namespace sasaki
