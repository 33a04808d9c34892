#include "legendrian/projective_curve.hpp"

#include <sstream>

namespace legendrian {

std::string CurveProvenance::kind_name() const {
    switch (kind) {
        case Kind::raw: return "raw";
        case Kind::bryant: return "bryant";
        case Kind::fcurve: return "fcurve";
        case Kind::exceptional: return "exceptional";
    }
    return "raw";
}

ProjectiveCurve::ProjectiveCurve(const RationalTuple4& tuple, CurveProvenance prov)
    : prov_(std::move(prov)) {
    Polynomial lcd = Polynomial::one();
    for (const auto& r : tuple) lcd = poly_lcm(lcd, r.den());
    for (int i = 0; i < 4; ++i) {
        const RationalFunction& r = tuple[static_cast<std::size_t>(i)];
        comp_[static_cast<std::size_t>(i)] = r.num() * Polynomial::exact_divide(lcd, r.den());
    }
    canonicalize();
}

ProjectiveCurve::ProjectiveCurve(PolyTuple4 tuple, CurveProvenance prov)
    : comp_(std::move(tuple)), prov_(std::move(prov)) {
    canonicalize();
}

ProjectiveCurve ProjectiveCurve::restore(PolyTuple4 tuple, CurveProvenance prov, Polynomial cleared) {
    ProjectiveCurve c(std::move(tuple), std::move(prov));
    c.cleared_ = std::move(cleared);
    return c;
}

void ProjectiveCurve::canonicalize() {
    bool all_zero = true;
    for (const auto& p : comp_) all_zero = all_zero && p.is_zero();
    if (all_zero) throw InvalidInput("all four curve components vanish identically");

    Polynomial g;
    bool first = true;
    for (const auto& p : comp_) {
        if (p.is_zero()) continue;
        g = first ? p.monic() : poly_gcd(g, p);
        first = false;
        if (g.degree() == 0) break;
    }
    cleared_ = g.monic();
    if (g.degree() > 0)
        for (auto& p : comp_) p = p.is_zero() ? p : Polynomial::exact_divide(p, g);

    for (const auto& p : comp_) {
        if (p.is_zero()) continue;
        GaussianRational s = p.leading().inverse();
        if (!s.is_one())
            for (auto& q : comp_) q = q * s;
        break;
    }
}

bool ProjectiveCurve::is_constant() const {
    // Constant exactly when all components are pairwise proportional, i.e.
    // every Wronskian vanishes identically.
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Polynomial& a = comp_[static_cast<std::size_t>(i)];
            const Polynomial& b = comp_[static_cast<std::size_t>(j)];
            if (!(a * b.derivative() - b * a.derivative()).is_zero()) return false;
        }
    return true;
}

int ProjectiveCurve::top_degree() const {
    int d = 0;
    for (const auto& p : comp_)
        if (!p.is_zero()) d = std::max(d, p.degree());
    return d;
}

PolyTuple4 ProjectiveCurve::reversed_components() const {
    int d = top_degree();
    PolyTuple4 out;
    for (int i = 0; i < 4; ++i) {
        const Polynomial& p = comp_[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)] = p.is_zero() ? p : p.reversed(d);
    }
    return out;
}

CP3Value ProjectiveCurve::evaluate(const DomainPoint& p) const {
    CP3Value v{};
    if (!p.at_infinity) {
        for (int i = 0; i < 4; ++i)
            v[static_cast<std::size_t>(i)] = comp_[static_cast<std::size_t>(i)].evaluate(p.value);
    } else {
        PolyTuple4 rev = reversed_components();
        for (int i = 0; i < 4; ++i)
            v[static_cast<std::size_t>(i)] = rev[static_cast<std::size_t>(i)].coeff(0);
    }
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        GaussianRational s = x.inverse();
        for (auto& y : v) y *= s;
        break;
    }
    return v;
}

ProjectiveCurve ProjectiveCurve::transformed(const Mat4& m) const {
    PolyTuple4 out;
    for (int i = 0; i < 4; ++i) {
        Polynomial acc;
        for (int j = 0; j < 4; ++j) acc = acc + comp_[static_cast<std::size_t>(j)] * m[i][j];
        out[static_cast<std::size_t>(i)] = acc;
    }
    CurveProvenance prov;  // a linear image is generic data
    return ProjectiveCurve(std::move(out), prov);
}

RationalTuple4 ProjectiveCurve::rational_tuple() const {
    RationalTuple4 out;
    for (int i = 0; i < 4; ++i)
        out[static_cast<std::size_t>(i)] =
            RationalFunction(comp_[static_cast<std::size_t>(i)], Polynomial::one());
    return out;
}

std::string ProjectiveCurve::str(const std::string& var) const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        if (i) os << " : ";
        os << comp_[static_cast<std::size_t>(i)].str(var);
    }
    os << "]";
    return os.str();
}

LegendrianCheck is_legendrian(const ProjectiveCurve& C) {
    LegendrianCheck out;
    out.witness = pullback_alpha0(C.components());
    out.legendrian = out.witness.is_zero();
    return out;
}

ProjectiveCurve bryant_curve(const RationalFunction& f, const RationalFunction& g) {
    if (g.is_constant()) throw ConstantG("Bryant curve requires nonconstant g");
    RationalFunction gp = g.derivative();
    RationalFunction fp = f.derivative();
    RationalFunction half(make_rational(1, 2));
    RationalTuple4 tuple{gp, f * gp - half * fp * g, g * gp, half * fp};
    CurveProvenance prov;
    prov.kind = CurveProvenance::Kind::bryant;
    prov.f = f;
    prov.g = g;
    return ProjectiveCurve(tuple, std::move(prov));
}

ProjectiveCurve f_curve(const RationalFunction& h, const RationalFunction& g,
                        const GaussianRational& c) {
    RationalFunction integral = rational_primitive(h * g.derivative());
    RationalFunction half(make_rational(1, 2));
    RationalTuple4 tuple{RationalFunction(GaussianRational(1)),
                         half * h * g - (integral + RationalFunction(c)), g, -(half * h)};
    CurveProvenance prov;
    prov.kind = CurveProvenance::Kind::fcurve;
    prov.h = h;
    prov.g = g;
    prov.c = c;
    return ProjectiveCurve(tuple, std::move(prov));
}

FormComparison compare_forms(const RationalFunction& h, const RationalFunction& g,
                             const GaussianRational& c) {
    FormComparison out;
    RationalFunction integral = rational_primitive(h * g.derivative());
    out.f = -(integral + RationalFunction(c));
    bool equal_curves = bryant_curve(out.f, g) == f_curve(h, g, c);
    bool h_matches = (-(out.f.derivative()) / g.derivative()) == h;
    out.equal = equal_curves && h_matches;
    return out;
}

ProjectiveCurve exceptional_line(const GaussianRational& a, const GaussianRational& b) {
    Polynomial t = Polynomial::variable();
    PolyTuple4 tuple{Polynomial::one(), Polynomial(a) + t * b, Polynomial(b), -t};
    CurveProvenance prov;
    prov.kind = CurveProvenance::Kind::exceptional;
    prov.a = a;
    prov.b = b;
    return ProjectiveCurve(std::move(tuple), std::move(prov));
}

BryantData invert_bryant(const ProjectiveCurve& C) {
    const PolyTuple4& Z = C.components();
    if (Z[0].is_zero()) throw DegenerateCurve("curve lies in the hyperplane {z0 = 0}");
    BryantData out;
    out.g = RationalFunction(Z[2], Z[0]);
    if (out.g.is_constant())
        throw NotRepresentable("recovered g is constant; the curve is an exceptional line");
    out.f = RationalFunction(Z[0] * Z[1] + Z[2] * Z[3], Z[0] * Z[0]);
    return out;
}

Mat4 swap_z2_z3_matrix() {
    Mat4 m{};
    m[0][0] = GaussianRational(1);
    m[1][1] = GaussianRational(1);
    m[2][3] = GaussianRational(-1);  // z2' = -z3
    m[3][2] = GaussianRational(1);   // z3' = z2
    return m;
}

}  // namespace legendrian
