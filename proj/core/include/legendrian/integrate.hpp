#pragma once

// Exact antiderivatives of rational functions.  A rational function has a
// rational primitive exactly when every residue of r dz vanishes; the
// obstruction is detected exactly (no root finding) through the logarithmic
// part of the Hermite reduction, and offending poles are then located for
// the error report.

#include <vector>

#include "legendrian/laurent.hpp"

namespace legendrian {

struct ResidueViolation {
    AlgebraicPoint pole;
    bool residue_exact = false;
    GaussianRational residue;              // valid when residue_exact
    std::complex<double> residue_approx{0.0, 0.0};
};

class ExactnessViolation : public Error {
public:
    explicit ExactnessViolation(std::vector<ResidueViolation> violations);
    const std::vector<ResidueViolation>& violations() const { return violations_; }

private:
    static std::string describe(const std::vector<ResidueViolation>& v);
    std::vector<ResidueViolation> violations_;
};

struct HermiteResult {
    RationalFunction primitive;   // d/dz primitive = input - log_part
    RationalFunction log_part;    // proper, squarefree denominator; zero iff exact
};

// Decompose r = d/dz(primitive) + log_part.
HermiteResult hermite_reduce(const RationalFunction& r);

// The primitive with zero constant term, or ExactnessViolation listing each
// pole with nonvanishing residue.
RationalFunction rational_primitive(const RationalFunction& r);

// Residues of the log part, one entry per pole of it.
std::vector<ResidueViolation> log_part_residues(const RationalFunction& log_part);

}  // namespace legendrian
