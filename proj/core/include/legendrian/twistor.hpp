#pragma once

// The Penrose twistor projection pi: CP^3 -> S^4.  A point [z0:z1:z2:z3]
// determines the quaternion pair (q1, q2) = (z0 + j z1, z2 + j z3); complex
// scaling acts by right quaternion multiplication, so the quaternionic
// projective point [q1 : q2] (right scalars) is well defined and the chart
// value q = q2 q1^{-1} in H u {inf} identifies the fibre.  Inverse
// stereographic projection with q = 0 at the south pole (0,0,0,0,-1) fixes
// the S^4 coordinates.

#include "legendrian/quaternion.hpp"

namespace legendrian {

template <class Real>
using CP3PointT = std::array<std::complex<Real>, 4>;
template <class Real>
using S4PointT = std::array<Real, 5>;

using CP3Point = CP3PointT<double>;
using S4Point = S4PointT<double>;

template <class Real>
S4PointT<Real> twistor_project(const CP3PointT<Real>& p) {
    Quaternion<Real> q1 = Quaternion<Real>::from_pair(p[0], p[1]);
    Quaternion<Real> q2 = Quaternion<Real>::from_pair(p[2], p[3]);
    Real n1 = q1.norm2(), n2 = q2.norm2();
    S4PointT<Real> out{};
    if (n1 >= n2) {
        // q = q2 q1^{-1}; chart value of the fibre through p.
        Quaternion<Real> q = q2 * q1.inverse();
        Real n = q.norm2();
        Real d = Real(1) + n;
        out = {Real(2) * q.x / d, Real(2) * q.y / d, Real(2) * q.u / d, Real(2) * q.v / d,
               (n - Real(1)) / d};
    } else {
        // Reciprocal chart r = q1 q2^{-1} = q^{-1}; stable when q1 is small.
        Quaternion<Real> r = q1 * q2.inverse();
        Real n = r.norm2();
        Real d = Real(1) + n;
        Quaternion<Real> rc = r.conj();
        out = {Real(2) * rc.x / d, Real(2) * rc.y / d, Real(2) * rc.u / d, Real(2) * rc.v / d,
               (Real(1) - n) / d};
    }
    return out;
}

// iota[z0:z1:z2:z3] = [-conj(z1) : conj(z0) : -conj(z3) : conj(z2)], the
// antiholomorphic involution covering the identity on S^4 (it is right
// multiplication by j on the quaternion pair).
template <class Real>
CP3PointT<Real> involution_iota(const CP3PointT<Real>& p) {
    return {-std::conj(p[1]), std::conj(p[0]), -std::conj(p[3]), std::conj(p[2])};
}

// The fibre of pi over a point of S^4, spanned by two orthogonal points of
// CP^3; parametrize(t0, t1) sweeps it.
template <class Real>
struct TwistorFibreT {
    CP3PointT<Real> a, b;
    CP3PointT<Real> parametrize(const std::complex<Real>& t0, const std::complex<Real>& t1) const {
        CP3PointT<Real> out;
        for (int i = 0; i < 4; ++i)
            out[static_cast<std::size_t>(i)] =
                t0 * a[static_cast<std::size_t>(i)] + t1 * b[static_cast<std::size_t>(i)];
        return out;
    }
};
using TwistorFibre = TwistorFibreT<double>;

template <class Real>
TwistorFibreT<Real> fibre_of(const S4PointT<Real>& s) {
    using C = std::complex<Real>;
    TwistorFibreT<Real> f;
    Real denom = Real(1) - s[4];
    if (denom <= Real(0) || denom < Real(1e-14)) {
        // North pole: the line {z0 = z1 = 0}.
        f.a = {C(0), C(0), C(1), C(0)};
        f.b = {C(0), C(0), C(0), C(1)};
        return f;
    }
    // Chart value q = (s1 + i s2 + j s3 + k s4) / (1 - s5) = z + j w.
    C z(s[0] / denom, s[1] / denom);
    C w(s[2] / denom, -s[3] / denom);
    f.a = {C(1), C(0), z, w};
    f.b = {C(0), C(1), -std::conj(w), std::conj(z)};
    return f;
}

// Squared chordal distance between projective points (Fubini-Study style):
// 1 - |<p, q>|^2 / (|p|^2 |q|^2).
template <class Real>
Real projective_distance2(const CP3PointT<Real>& p, const CP3PointT<Real>& q) {
    std::complex<Real> inner{};
    Real np{}, nq{};
    for (int i = 0; i < 4; ++i) {
        inner += p[static_cast<std::size_t>(i)] * std::conj(q[static_cast<std::size_t>(i)]);
        np += std::norm(p[static_cast<std::size_t>(i)]);
        nq += std::norm(q[static_cast<std::size_t>(i)]);
    }
    return Real(1) - std::norm(inner) / (np * nq);
}

template <class Real>
Real s4_distance(const S4PointT<Real>& a, const S4PointT<Real>& b) {
    Real acc{};
    for (int i = 0; i < 5; ++i) {
        Real d = a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
        acc += d * d;
    }
    using std::sqrt;
    return sqrt(acc);
}

}  // namespace legendrian
