#include "legendrian/laurent.hpp"

#include "legendrian/roots.hpp"

namespace legendrian {

namespace {

// Taylor coefficients 0..len-1 of n1/d1 with d1(0) != 0, by series division.
std::vector<GaussianRational> series_quotient(const Polynomial& n1, const Polynomial& d1, int len) {
    std::vector<GaussianRational> c(static_cast<std::size_t>(std::max(len, 0)));
    if (len <= 0) return c;
    GaussianRational d0_inv = d1.coeff(0).inverse();
    for (int k = 0; k < len; ++k) {
        GaussianRational acc = n1.coeff(k);
        for (int j = 0; j < k; ++j) acc -= c[static_cast<std::size_t>(j)] * d1.coeff(k - j);
        c[static_cast<std::size_t>(k)] = acc * d0_inv;
    }
    return c;
}

// num/den recentred so the expansion point sits at the origin of the local
// coordinate.  At infinity the coordinate is w = 1/z.
void localize(const RationalFunction& r, const DomainPoint& a, Polynomial& num, Polynomial& den) {
    if (a.at_infinity) {
        RationalFunction s = r.at_inverse_variable();
        num = s.num();
        den = s.den();
    } else if (a.value.is_zero()) {
        num = r.num();
        den = r.den();
    } else {
        num = r.num().shifted(a.value);
        den = r.den().shifted(a.value);
    }
}

}  // namespace

LaurentExpansion laurent_expand(const RationalFunction& r, const DomainPoint& a, int k_max) {
    LaurentExpansion e;
    e.center = a;
    e.k_max = k_max;
    if (r.is_zero()) {
        e.zero_function = true;
        return e;
    }
    Polynomial num, den;
    localize(r, a, num, den);
    int vn = num.valuation(), vd = den.valuation();
    e.order = vn - vd;
    if (k_max < e.order) {
        e.empty_window = true;
        return e;
    }
    // Strip the common power of the local coordinate, then divide the series.
    std::vector<GaussianRational> n1(num.coeffs().begin() + vn, num.coeffs().end());
    std::vector<GaussianRational> d1(den.coeffs().begin() + vd, den.coeffs().end());
    auto taylor = series_quotient(Polynomial(std::move(n1)), Polynomial(std::move(d1)),
                                  k_max - e.order + 1);
    for (int k = 0; k < static_cast<int>(taylor.size()); ++k)
        e.coeffs[e.order + k] = taylor[static_cast<std::size_t>(k)];
    return e;
}

LaurentExpansion laurent_expand(const RationalFunction& r, const DomainPoint& a) {
    if (r.is_zero()) return laurent_expand(r, a, 0);
    int ord = order_at(r, a);
    return laurent_expand(r, a, ord + 8);
}

int order_at(const RationalFunction& r, const DomainPoint& a) {
    if (r.is_zero()) throw Undefined("order of the zero function");
    Polynomial num, den;
    localize(r, a, num, den);
    return num.valuation() - den.valuation();
}

GaussianRational residue_at(const RationalFunction& r, const DomainPoint& a) {
    if (r.is_zero()) return {};
    if (a.at_infinity) {
        // Res_inf (r dz) = Res_0 ( -r(1/w)/w^2 dw ).
        RationalFunction s = r.at_inverse_variable();
        RationalFunction form(-s.num(), s.den() * Polynomial::monomial(GaussianRational(1), 2));
        return residue_at(form, DomainPoint(GaussianRational(0)));
    }
    int ord = order_at(r, a);
    if (ord > -1) return {};
    return laurent_expand(r, a, -1).coeff(-1);
}

std::vector<PoleInfo> pole_set(const RationalFunction& r) {
    std::vector<PoleInfo> out;
    if (r.is_zero()) return out;
    if (r.den().degree() > 0) {
        for (const auto& root : find_roots(r.den())) {
            PoleInfo p;
            p.location = root.location;
            p.multiplicity = root.multiplicity;
            out.push_back(p);
        }
    }
    if (r.num().degree() > r.den().degree()) {
        PoleInfo p;
        p.location.at_infinity = true;
        p.location.exact = true;
        p.location.point = DomainPoint::infinity();
        p.multiplicity = r.num().degree() - r.den().degree();
        out.push_back(p);
    }
    return out;
}

}  // namespace legendrian
