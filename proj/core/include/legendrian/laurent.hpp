#pragma once

// Laurent expansions of rational functions at points of CP^1, with exact
// orders, coefficients and residues.  Expansions at infinity are taken in
// the local coordinate w = 1/z.

#include <map>
#include <vector>

#include "legendrian/rational_function.hpp"

namespace legendrian {

struct LaurentExpansion {
    DomainPoint center;
    int order = 0;   // index of the first nonzero coefficient
    int k_max = 0;
    std::map<int, GaussianRational> coeffs;  // indices order..k_max
    bool zero_function = false;
    bool empty_window = false;  // k_max < order: no coefficients to report

    GaussianRational coeff(int k) const {
        auto it = coeffs.find(k);
        return it == coeffs.end() ? GaussianRational() : it->second;
    }
    GaussianRational residue() const { return coeff(-1); }
};

// Exact expansion through index k_max.
LaurentExpansion laurent_expand(const RationalFunction& r, const DomainPoint& a, int k_max);
// Window defaults to order..order+8.
LaurentExpansion laurent_expand(const RationalFunction& r, const DomainPoint& a);

// Vanishing order at a (negative at poles).  Throws Undefined on the zero
// function.
int order_at(const RationalFunction& r, const DomainPoint& a);

// Residue of the 1-form r dz at a.  At infinity this is the residue of
// -r(1/w)/w^2 dw at w = 0, so that residues over all of CP^1 sum to zero.
GaussianRational residue_at(const RationalFunction& r, const DomainPoint& a);

// Location of a pole (or any root): exact when the point lies in Q(i),
// otherwise a double-precision approximation with the exact flag cleared.
struct AlgebraicPoint {
    bool exact = false;
    DomainPoint point;                    // meaningful when exact
    std::complex<double> approx{0.0, 0.0};  // always filled for finite points
    bool at_infinity = false;

    std::string str() const;
};

struct PoleInfo {
    AlgebraicPoint location;
    int multiplicity = 0;
};

// All poles of r on CP^1 with multiplicities, infinity included.  Q(i)
// poles are certified exactly; the rest are located numerically and flagged.
std::vector<PoleInfo> pole_set(const RationalFunction& r);

}  // namespace legendrian
