#pragma once

// Root extraction for polynomials over Q(i).  Linear factors over Q(i) are
// split off exactly (numeric location, rational reconstruction, exact
// verification, exact deflation); whatever remains is solved numerically
// and flagged as non-exact.

#include <complex>
#include <vector>

#include "legendrian/laurent.hpp"
#include "legendrian/polynomial.hpp"

namespace legendrian {

struct RootInfo {
    AlgebraicPoint location;
    int multiplicity = 0;
};

// All complex roots of f with multiplicities.  f must be nonzero.
std::vector<RootInfo> find_roots(const Polynomial& f);

// Numeric roots of a squarefree polynomial (Aberth-Ehrlich iteration).
std::vector<std::complex<double>> numeric_roots(const Polynomial& f);

// Best rational p/q with |x - p/q| minimal among continued-fraction
// convergents with q <= den_bound.
Rational reconstruct_rational(double x, long den_bound = 100000000L);

}  // namespace legendrian
