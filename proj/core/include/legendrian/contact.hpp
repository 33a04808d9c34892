#pragma once

// Contact geometry of CP^3: the homogeneous contact form
//   alpha0 = z0 dz1 - z1 dz0 + z2 dz3 - z3 dz2,
// the affine forms alpha = dz1 + z2 dz3 - z3 dz2 and beta = dz1 + z2 dz3,
// the polynomial automorphism psi with psi^* alpha = beta, and hyperplane
// coordinate changes that put the contact structure into the standard
// affine form.

#include <array>

#include "legendrian/rational_function.hpp"

namespace legendrian {

using AffineTriple = std::array<RationalFunction, 3>;
using RationalTuple4 = std::array<RationalFunction, 4>;
using PolyTuple4 = std::array<Polynomial, 4>;

template <int N>
using ExactMatrix = std::array<std::array<GaussianRational, N>, N>;
using Mat3 = ExactMatrix<3>;
using Mat4 = ExactMatrix<4>;

Mat3 mat3_identity();
Mat4 mat4_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat3 mat3_inverse(const Mat3& m);
Mat4 mat4_inverse(const Mat4& m);

// Pullback of alpha0 along a curve lift: Z0 Z1' - Z1 Z0' + Z2 Z3' - Z3 Z2'.
RationalFunction pullback_alpha0(const RationalTuple4& Z);
Polynomial pullback_alpha0(const PolyTuple4& Z);

// Pullback of alpha = dz1 + z2 dz3 - z3 dz2 along an affine curve.
RationalFunction pullback_affine_alpha(const AffineTriple& T);
// Pullback of beta = dz1 + z2 dz3.
RationalFunction pullback_affine_beta(const AffineTriple& T);

// alpha0 restricted to the section {z0 = 1 + a1 z1 + a2 z2 + a3 z3}:
//   (1 + a2 z2 + a3 z3) dz1 - (z3 + a2 z1) dz2 + (z2 - a3 z1) dz3.
// Independent of a1.
RationalFunction pullback_restricted_alpha(const AffineTriple& T, const GaussianRational& a2,
                                           const GaussianRational& a3);

// psi(z1, z2, z3) = (z1 + z2 z3 / 2, z3, -z2 / 2).
AffineTriple psi_map(const AffineTriple& T);
std::array<GaussianRational, 3> psi_map(const std::array<GaussianRational, 3>& p);

// Coordinates adapted to the hyperplane {z0 = a1 z1 + a2 z2 + a3 z3}.
// The affine maps realize z1' = z1, z2' = z2 - a3 z1, z3' = z3 + a2 z1 on
// the chart; the homogeneous matrix additionally sends the hyperplane to
// {z0 = 0} and preserves alpha0 exactly, so it preserves the Legendrian
// class of every curve.
struct ContactChart {
    GaussianRational a1, a2, a3;
    Mat3 affine_forward, affine_inverse;
    Mat4 projective_forward, projective_inverse;

    AffineTriple apply_affine(const AffineTriple& T) const;
    RationalTuple4 apply_projective(const RationalTuple4& Z) const;
};

ContactChart chart_change(const GaussianRational& a1, const GaussianRational& a2,
                          const GaussianRational& a3);

}  // namespace legendrian
