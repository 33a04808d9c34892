#pragma once

// Holomorphic curves CP^1 -> CP^3 as coprime polynomial 4-tuples, plus the
// two representation formulas
//   B(f, g) = [dg : f dg - g df / 2 : g dg : df / 2]
//   F(h, g) = [1 : h g / 2 - int h dg : g : -h / 2]
// their comparison, the exceptional line family [1 : a + b t : b : -t], and
// the inversion g = z2/z0, f = (z0 z1 + z2 z3)/z0^2.

#include <optional>
#include <string>

#include "legendrian/contact.hpp"
#include "legendrian/integrate.hpp"

namespace legendrian {

struct CurveProvenance {
    enum class Kind { raw, bryant, fcurve, exceptional };
    Kind kind = Kind::raw;
    std::optional<RationalFunction> f, g, h;
    GaussianRational c;  // integration constant of the fcurve family
    GaussianRational a, b;  // exceptional line parameters

    static CurveProvenance raw() { return {}; }
    std::string kind_name() const;
};

// Projective point of C^4, normalized so the first nonzero entry is 1.
using CP3Value = std::array<GaussianRational, 4>;

class ProjectiveCurve {
public:
    // Clears denominators, divides out the common polynomial factor and
    // scales the first nonzero component to be monic.
    ProjectiveCurve(const RationalTuple4& tuple, CurveProvenance prov = CurveProvenance::raw());
    ProjectiveCurve(PolyTuple4 tuple, CurveProvenance prov = CurveProvenance::raw());

    // Rebuilds a curve from serialized canonical data, keeping the recorded
    // cleared factor.
    static ProjectiveCurve restore(PolyTuple4 tuple, CurveProvenance prov, Polynomial cleared);

    const PolyTuple4& components() const { return comp_; }
    const CurveProvenance& provenance() const { return prov_; }
    // Common polynomial factor divided out during construction (monic).
    const Polynomial& cleared_factor() const { return cleared_; }

    bool is_constant() const;
    int top_degree() const;
    // Components of w^D C(1/w), the representative in the chart at infinity.
    PolyTuple4 reversed_components() const;

    // Value at a point, normalized so the first nonzero coordinate is 1.
    CP3Value evaluate(const DomainPoint& p) const;

    ProjectiveCurve transformed(const Mat4& m) const;
    RationalTuple4 rational_tuple() const;

    friend bool operator==(const ProjectiveCurve& a, const ProjectiveCurve& b) {
        return a.comp_ == b.comp_;
    }
    friend bool operator!=(const ProjectiveCurve& a, const ProjectiveCurve& b) { return !(a == b); }

    std::string str(const std::string& var = "z") const;

private:
    void canonicalize();
    PolyTuple4 comp_{};
    Polynomial cleared_ = Polynomial::one();
    CurveProvenance prov_;
};

struct LegendrianCheck {
    bool legendrian = false;
    Polynomial witness;  // the nonzero pullback when the check fails
};

// Exact test: the alpha0 pullback of the coprime lift vanishes identically.
LegendrianCheck is_legendrian(const ProjectiveCurve& C);

// Bryant curve of a pair (f, g); g must be nonconstant.
ProjectiveCurve bryant_curve(const RationalFunction& f, const RationalFunction& g);

// F(h, g) with integration constant c; throws ExactnessViolation when h dg
// has a nonvanishing residue.
ProjectiveCurve f_curve(const RationalFunction& h, const RationalFunction& g,
                        const GaussianRational& c);

struct FormComparison {
    RationalFunction f;  // -(int h dg + c)
    bool equal = false;  // B(f, g) == F(h, g, c) and -f'/g' == h
};
FormComparison compare_forms(const RationalFunction& h, const RationalFunction& g,
                             const GaussianRational& c);

ProjectiveCurve exceptional_line(const GaussianRational& a, const GaussianRational& b);

struct BryantData {
    RationalFunction f, g;
};
// Recovers (f, g) with bryant_curve(f, g) == C for curves in the image of
// the Bryant construction.  DegenerateCurve if C lies in {z0 = 0},
// NotRepresentable if the recovered g is constant (the exceptional family).
BryantData invert_bryant(const ProjectiveCurve& C);

// The coordinate swap z2' = -z3, z3' = z2 (extended by the identity), which
// preserves alpha0 and carries the exceptional lines into Bryant range.
Mat4 swap_z2_z3_matrix();

}  // namespace legendrian
