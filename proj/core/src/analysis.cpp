#include "legendrian/analysis.hpp"

#include "legendrian/roots.hpp"

#include <algorithm>

namespace legendrian {

namespace {

std::complex<double> complex_eval(const Polynomial& p, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * z + p.coeffs()[k].to_complex();
    return acc;
}

int poly_order_at(const Polynomial& p, const GaussianRational& a) {
    if (p.is_zero()) return kOrderInfinity;
    return p.shifted(a).valuation();
}

// The six Wronskians Ci Cj' - Cj Ci', (i, j) lexicographic.
std::vector<Polynomial> wronskians(const PolyTuple4& C) {
    std::vector<Polynomial> w;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            w.push_back(C[static_cast<std::size_t>(i)] * C[static_cast<std::size_t>(j)].derivative() -
                        C[static_cast<std::size_t>(j)] * C[static_cast<std::size_t>(i)].derivative());
    return w;
}

bool rank2_at(const PolyTuple4& C, const GaussianRational& p) {
    std::array<GaussianRational, 4> v, d;
    for (int i = 0; i < 4; ++i) {
        v[static_cast<std::size_t>(i)] = C[static_cast<std::size_t>(i)].evaluate(p);
        d[static_cast<std::size_t>(i)] = C[static_cast<std::size_t>(i)].derivative().evaluate(p);
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            GaussianRational minor = v[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)] -
                                     v[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(i)];
            if (!minor.is_zero()) return true;
        }
    return false;
}

bool rank2_at_numeric(const PolyTuple4& C, std::complex<double> p) {
    std::array<std::complex<double>, 4> v, d;
    double scale_v = 0, scale_d = 0;
    for (int i = 0; i < 4; ++i) {
        v[static_cast<std::size_t>(i)] = complex_eval(C[static_cast<std::size_t>(i)], p);
        d[static_cast<std::size_t>(i)] = complex_eval(C[static_cast<std::size_t>(i)].derivative(), p);
        scale_v = std::max(scale_v, std::abs(v[static_cast<std::size_t>(i)]));
        scale_d = std::max(scale_d, std::abs(d[static_cast<std::size_t>(i)]));
    }
    double tol = 1e-8 * std::max(scale_v * scale_d, 1e-300);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            auto minor = v[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(j)] -
                         v[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(i)];
            if (std::abs(minor) > tol) return true;
        }
    return false;
}

bool immersed_at_point(const ProjectiveCurve& C, const AlgebraicPoint& pt) {
    if (pt.at_infinity || (pt.exact && pt.point.at_infinity))
        return is_immersed_at(C, DomainPoint::infinity());
    if (pt.exact) return is_immersed_at(C, pt.point);
    return rank2_at_numeric(C.components(), pt.approx);
}

int pole_order_of(const RationalFunction& r, const AlgebraicPoint& pt) {
    if (r.is_zero()) return 0;
    if (pt.at_infinity) {
        int ord = order_at(r, DomainPoint::infinity());
        return ord < 0 ? -ord : 0;
    }
    if (pt.exact) {
        int ord = order_at(r, pt.point);
        return ord < 0 ? -ord : 0;
    }
    // Numeric pole: read the multiplicity off the squarefree structure.
    for (const auto& [factor, mult] : squarefree_decomposition(r.den())) {
        double v = std::abs(complex_eval(factor, pt.approx));
        if (v < 1e-7) return mult;
    }
    return 0;
}

// Poles of the pair, merged (union of locations, exact ones deduplicated).
std::vector<AlgebraicPoint> merged_pole_locations(const RationalFunction& a,
                                                  const RationalFunction& b) {
    std::vector<AlgebraicPoint> out;
    auto add = [&out](const AlgebraicPoint& p) {
        for (const auto& q : out) {
            if (p.at_infinity && q.at_infinity) return;
            if (p.exact && q.exact && !p.at_infinity && !q.at_infinity &&
                p.point.value == q.point.value)
                return;
            if (!p.exact && !q.exact && std::abs(p.approx - q.approx) < 1e-9) return;
        }
        out.push_back(p);
    };
    for (const auto& r : {a, b})
        for (const auto& pole : pole_set(r)) add(pole.location);
    return out;
}

}  // namespace

std::array<int, 4> component_orders(const ProjectiveCurve& C, const DomainPoint& p) {
    std::array<int, 4> out{};
    PolyTuple4 local = p.at_infinity ? C.reversed_components() : C.components();
    GaussianRational at = p.at_infinity ? GaussianRational(0) : p.value;
    for (int i = 0; i < 4; ++i)
        out[static_cast<std::size_t>(i)] = poly_order_at(local[static_cast<std::size_t>(i)], at);
    return out;
}

std::array<int, 4> bryant_formula_orders(const RationalFunction& f, const RationalFunction& g,
                                         const DomainPoint& p) {
    RationalFunction gp = g.derivative();
    RationalFunction fp = f.derivative();
    RationalFunction half(make_rational(1, 2));
    RationalTuple4 tuple{gp, f * gp - half * fp * g, g * gp, half * fp};
    std::array<int, 4> out{};
    for (int i = 0; i < 4; ++i) {
        const RationalFunction& r = tuple[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = r.is_zero() ? kOrderInfinity : order_at(r, p);
    }
    return out;
}

bool order_gap_immersed(const std::array<int, 4>& orders) {
    int m = *std::min_element(orders.begin(), orders.end());
    if (m == kOrderInfinity) return false;
    return std::any_of(orders.begin(), orders.end(),
                       [m](int k) { return k != kOrderInfinity && k == m + 1; });
}

bool is_immersed_at(const ProjectiveCurve& C, const DomainPoint& p) {
    if (C.is_constant()) throw Undefined("immersion test on a constant curve");
    if (p.at_infinity) return rank2_at(C.reversed_components(), GaussianRational(0));
    return rank2_at(C.components(), p.value);
}

CurveAnalysisReport analyze(const ProjectiveCurve& C) {
    CurveAnalysisReport rep;
    bool constant = C.is_constant();

    if (C.cleared_factor().degree() > 0) {
        for (const auto& root : find_roots(C.cleared_factor())) {
            BasePointReport b;
            b.location = root.location;
            b.multiplicity = root.multiplicity;
            rep.base_points.push_back(b);
        }
    }

    const Polynomial& z0 = C.components()[0];
    if (!z0.is_zero()) {
        if (z0.degree() > 0) {
            for (const auto& root : find_roots(z0)) {
                HyperplanePoint hp;
                hp.location = root.location;
                hp.z0_contact_order = root.multiplicity;
                hp.transverse = root.multiplicity == 1;
                hp.immersed = constant ? false : immersed_at_point(C, root.location);
                rep.hyperplane_points.push_back(hp);
            }
        }
        int inf_order = C.top_degree() - z0.degree();
        if (inf_order > 0) {
            HyperplanePoint hp;
            hp.location.at_infinity = true;
            hp.location.exact = true;
            hp.location.point = DomainPoint::infinity();
            hp.z0_contact_order = inf_order;
            hp.transverse = inf_order == 1;
            hp.immersed = constant ? false : is_immersed_at(C, DomainPoint::infinity());
            rep.hyperplane_points.push_back(hp);
        }
    }

    const CurveProvenance& prov = C.provenance();
    if (prov.kind == CurveProvenance::Kind::bryant || prov.kind == CurveProvenance::Kind::fcurve) {
        const RationalFunction& first =
            prov.kind == CurveProvenance::Kind::bryant ? *prov.f : *prov.h;
        const RationalFunction& second = *prov.g;
        for (const auto& loc : merged_pole_locations(first, second)) {
            DataPoleReport dp;
            dp.location = loc;
            dp.order_first = pole_order_of(first, loc);
            dp.order_second = pole_order_of(second, loc);
            dp.simple = dp.order_first <= 1 && dp.order_second <= 1;
            dp.immersed = constant ? false : immersed_at_point(C, loc);
            rep.data_poles.push_back(dp);
        }
    }

    if (!constant) {
        std::vector<Polynomial> ws = wronskians(C.components());
        Polynomial g;
        bool first = true;
        for (const auto& w : ws) {
            if (w.is_zero()) continue;
            g = first ? w.monic() : poly_gcd(g, w);
            first = false;
            if (g.degree() == 0) break;
        }
        if (!first && g.degree() > 0)
            for (const auto& root : find_roots(g)) rep.immersion_failures.push_back(root.location);
        if (!is_immersed_at(C, DomainPoint::infinity())) {
            AlgebraicPoint inf;
            inf.at_infinity = true;
            inf.exact = true;
            inf.point = DomainPoint::infinity();
            rep.immersion_failures.push_back(inf);
        }
        rep.immersed_everywhere = rep.immersion_failures.empty();
    }
    return rep;
}

ExactnessReport exactness_check(const RationalFunction& h, const RationalFunction& g) {
    ExactnessReport rep;
    RationalFunction w = h * g.derivative();
    HermiteResult hr = hermite_reduce(w);
    rep.pass = hr.log_part.is_zero();
    if (w.is_zero()) return rep;

    for (const auto& pole : pole_set(w)) {
        ResidueEntry e;
        e.pole = pole.location;
        if (pole.location.exact) {
            DomainPoint p = pole.location.at_infinity ? DomainPoint::infinity() : pole.location.point;
            e.residue_exact = true;
            e.residue = residue_at(w, p);
            e.residue_approx = e.residue.to_complex();
            e.vanishes = e.residue.is_zero();

            int oh = h.is_zero() ? kOrderInfinity : order_at(h, p);
            int og = g.is_zero() ? kOrderInfinity : order_at(g, p);
            bool simple_pole_of_either = (oh == -1 || og == -1) && oh >= -1 && og >= -1;
            if (simple_pole_of_either) {
                e.fast_path_checked = true;
                LaurentExpansion eh = laurent_expand(h, p, 1);
                LaurentExpansion eg = laurent_expand(g, p, 1);
                e.fast_path_value =
                    eh.coeff(-1) * eg.coeff(1) - eg.coeff(-1) * eh.coeff(1);
                e.fast_path_agrees = e.fast_path_value == e.residue;
            }
        } else if (!hr.log_part.is_zero()) {
            auto num = complex_eval(hr.log_part.num(), pole.location.approx);
            auto den = complex_eval(hr.log_part.den().derivative(), pole.location.approx);
            e.residue_approx = num / den;
            e.vanishes = std::abs(e.residue_approx) < 1e-9;
        } else {
            e.vanishes = true;
        }
        rep.entries.push_back(e);
    }
    return rep;
}

PairImmersionResult hg_immersion_check(const RationalFunction& h, const RationalFunction& g) {
    // The hypothesis concerns the finite polar locus; behaviour at infinity
    // is read off the reciprocal chart below, whatever the pole order.
    auto finite_poles_simple = [](const RationalFunction& r) {
        if (r.den().degree() == 0) return true;
        return poly_gcd(r.den(), r.den().derivative()).degree() == 0;
    };
    if (!finite_poles_simple(h) || !finite_poles_simple(g))
        throw HypothesisViolation("pair immersion test requires simple finite poles");
    PairImmersionResult out;
    RationalFunction hp = h.derivative();
    RationalFunction gp = g.derivative();

    if (hp.is_zero() && gp.is_zero()) {
        out.immersion = false;
        return out;
    }

    // Finite critical points common to both coordinates.  Zeros of a
    // derivative are zeros of its numerator, and simple poles never qualify:
    // the reciprocal coordinate has a simple zero there.
    Polynomial common;
    if (hp.is_zero()) common = gp.num();
    else if (gp.is_zero()) common = hp.num();
    else common = poly_gcd(hp.num(), gp.num());
    if (common.degree() > 0)
        for (const auto& root : find_roots(common)) out.failures.push_back(root.location);

    // At infinity, chart each coordinate through w = 1/z and through the
    // reciprocal when it has a pole there.
    auto critical_at_inf = [](const RationalFunction& r) {
        if (r.is_constant()) return true;
        RationalFunction local = r.at_inverse_variable();
        if (order_at(local, DomainPoint(GaussianRational(0))) < 0) local = local.inverse();
        ExtendedValue d = local.derivative().evaluate(DomainPoint(GaussianRational(0)));
        return d.is_zero();
    };
    if (critical_at_inf(h) && critical_at_inf(g)) {
        AlgebraicPoint inf;
        inf.at_infinity = true;
        inf.exact = true;
        inf.point = DomainPoint::infinity();
        out.failures.push_back(inf);
    }
    out.immersion = out.failures.empty();
    return out;
}

bool simple_pole_certificate(const RationalFunction& a, const RationalFunction& b) {
    auto simple = [](const RationalFunction& r) {
        if (r.den().degree() > 0) {
            Polynomial g = poly_gcd(r.den(), r.den().derivative());
            if (g.degree() > 0) return false;
        }
        return r.num().degree() - r.den().degree() <= 1;
    };
    return simple(a) && simple(b);
}

}  // namespace legendrian
