#pragma once

// Order and immersion analysis of projective curves: component vanishing
// orders, the order-gap diagnostic, the exact rank test for immersedness,
// hyperplane contact orders, pole diagnostics of the defining data, and the
// residue (exactness) report for pairs (h, g).

#include <optional>
#include <vector>

#include "legendrian/projective_curve.hpp"

namespace legendrian {

// Order sentinel for identically zero components.
inline constexpr int kOrderInfinity = INT_MAX;

// Vanishing orders of the four coprime components at p (minimum is 0 except
// at points where a component vanishes identically).
std::array<int, 4> component_orders(const ProjectiveCurve& C, const DomainPoint& p);

// Orders at p of the four rational components (dg, f dg - g df/2, g dg, df/2)
// before clearing; these can be negative at poles of the data.
std::array<int, 4> bryant_formula_orders(const RationalFunction& f, const RationalFunction& g,
                                         const DomainPoint& p);

// The order-gap reading: immersed when some component vanishes to order
// exactly min+1.  Valid for tuples written in coordinates centred at the
// image point (as in the order tables); see is_immersed_at for the
// coordinate-free test.
bool order_gap_immersed(const std::array<int, 4>& orders);

// Exact immersion test: the 2x4 matrix [C(p); C'(p)] has rank 2, i.e. some
// Wronskian Ci Cj' - Cj Ci' is nonzero at p.  Throws Undefined on constant
// curves.
bool is_immersed_at(const ProjectiveCurve& C, const DomainPoint& p);

struct HyperplanePoint {
    AlgebraicPoint location;
    int z0_contact_order = 0;  // order of the z0 component there
    bool transverse = false;   // contact order exactly 1
    bool immersed = false;
};

struct DataPoleReport {
    AlgebraicPoint location;
    int order_first = 0;   // pole order of f (or h) there, 0 if regular
    int order_second = 0;  // pole order of g there
    bool simple = false;   // no pole order above 1
    bool immersed = false;
};

struct BasePointReport {
    AlgebraicPoint location;
    int multiplicity = 0;
};

struct CurveAnalysisReport {
    std::vector<BasePointReport> base_points;        // roots of the cleared factor
    std::vector<HyperplanePoint> hyperplane_points;  // intersections with {z0 = 0}
    std::vector<DataPoleReport> data_poles;          // from the defining (f,g)/(h,g)
    std::vector<AlgebraicPoint> immersion_failures;
    bool immersed_everywhere = false;
};

CurveAnalysisReport analyze(const ProjectiveCurve& C);

// Exactness report for the 1-form h dg.
struct ResidueEntry {
    AlgebraicPoint pole;
    bool residue_exact = false;
    GaussianRational residue;
    std::complex<double> residue_approx{0.0, 0.0};
    bool vanishes = false;
    // Populated at simple poles of h or g with exact location: the value
    // c_{-1}(h) c_1(g) - c_{-1}(g) c_1(h) and its agreement with the residue.
    bool fast_path_checked = false;
    GaussianRational fast_path_value;
    bool fast_path_agrees = false;
};

struct ExactnessReport {
    bool pass = false;  // all residues of h dg vanish (decided exactly)
    std::vector<ResidueEntry> entries;
};

ExactnessReport exactness_check(const RationalFunction& h, const RationalFunction& g);

// Cor-style immersion test for the pair (h, g) as a map into (CP^1)^2.
// Requires simple poles only (HypothesisViolation otherwise).
struct PairImmersionResult {
    bool immersion = false;
    std::vector<AlgebraicPoint> failures;
};
PairImmersionResult hg_immersion_check(const RationalFunction& h, const RationalFunction& g);

// True when every pole of both functions on CP^1 (infinity included) is
// simple.  Decided exactly via squarefree tests.
bool simple_pole_certificate(const RationalFunction& a, const RationalFunction& b);

}  // namespace legendrian
