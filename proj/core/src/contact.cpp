#include "legendrian/contact.hpp"

namespace legendrian {

namespace {

template <int N>
ExactMatrix<N> identity() {
    ExactMatrix<N> m{};
    for (int i = 0; i < N; ++i) m[i][i] = GaussianRational(1);
    return m;
}

template <int N>
ExactMatrix<N> mul(const ExactMatrix<N>& a, const ExactMatrix<N>& b) {
    ExactMatrix<N> m{};
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            GaussianRational acc;
            for (int k = 0; k < N; ++k) acc += a[i][k] * b[k][j];
            m[i][j] = acc;
        }
    return m;
}

template <int N>
ExactMatrix<N> inverse(ExactMatrix<N> m) {
    ExactMatrix<N> inv = identity<N>();
    for (int col = 0; col < N; ++col) {
        int pivot = -1;
        for (int row = col; row < N; ++row)
            if (!m[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw InvalidInput("singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        GaussianRational d = m[col][col].inverse();
        for (int j = 0; j < N; ++j) {
            m[col][j] *= d;
            inv[col][j] *= d;
        }
        for (int row = 0; row < N; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            GaussianRational f = m[row][col];
            for (int j = 0; j < N; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

Mat3 mat3_identity() { return identity<3>(); }
Mat4 mat4_identity() { return identity<4>(); }
Mat3 mat3_mul(const Mat3& a, const Mat3& b) { return mul<3>(a, b); }
Mat4 mat4_mul(const Mat4& a, const Mat4& b) { return mul<4>(a, b); }
Mat3 mat3_inverse(const Mat3& m) { return inverse<3>(m); }
Mat4 mat4_inverse(const Mat4& m) { return inverse<4>(m); }

RationalFunction pullback_alpha0(const RationalTuple4& Z) {
    return Z[0] * Z[1].derivative() - Z[1] * Z[0].derivative() + Z[2] * Z[3].derivative() -
           Z[3] * Z[2].derivative();
}

Polynomial pullback_alpha0(const PolyTuple4& Z) {
    return Z[0] * Z[1].derivative() - Z[1] * Z[0].derivative() + Z[2] * Z[3].derivative() -
           Z[3] * Z[2].derivative();
}

RationalFunction pullback_affine_alpha(const AffineTriple& T) {
    return T[0].derivative() + T[1] * T[2].derivative() - T[2] * T[1].derivative();
}

RationalFunction pullback_affine_beta(const AffineTriple& T) {
    return T[0].derivative() + T[1] * T[2].derivative();
}

RationalFunction pullback_restricted_alpha(const AffineTriple& T, const GaussianRational& a2,
                                           const GaussianRational& a3) {
    RationalFunction one(GaussianRational(1));
    RationalFunction c1 = one + RationalFunction(a2) * T[1] + RationalFunction(a3) * T[2];
    RationalFunction c2 = T[2] + RationalFunction(a2) * T[0];
    RationalFunction c3 = T[1] - RationalFunction(a3) * T[0];
    return c1 * T[0].derivative() - c2 * T[1].derivative() + c3 * T[2].derivative();
}

AffineTriple psi_map(const AffineTriple& T) {
    RationalFunction half(make_rational(1, 2));
    return {T[0] + half * T[1] * T[2], T[2], -(half * T[1])};
}

std::array<GaussianRational, 3> psi_map(const std::array<GaussianRational, 3>& p) {
    GaussianRational half(make_rational(1, 2));
    return {p[0] + half * p[1] * p[2], p[2], -(half * p[1])};
}

AffineTriple ContactChart::apply_affine(const AffineTriple& T) const {
    AffineTriple out;
    for (int i = 0; i < 3; ++i) {
        RationalFunction acc;
        for (int j = 0; j < 3; ++j) acc = acc + RationalFunction(affine_forward[i][j]) * T[j];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

RationalTuple4 ContactChart::apply_projective(const RationalTuple4& Z) const {
    RationalTuple4 out;
    for (int i = 0; i < 4; ++i) {
        RationalFunction acc;
        for (int j = 0; j < 4; ++j) acc = acc + RationalFunction(projective_forward[i][j]) * Z[j];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

ContactChart chart_change(const GaussianRational& a1, const GaussianRational& a2,
                          const GaussianRational& a3) {
    ContactChart c;
    c.a1 = a1;
    c.a2 = a2;
    c.a3 = a3;

    c.affine_forward = mat3_identity();
    c.affine_forward[1][0] = -a3;  // z2' = z2 - a3 z1
    c.affine_forward[2][0] = a2;   // z3' = z3 + a2 z1
    c.affine_inverse = mat3_inverse(c.affine_forward);

    c.projective_forward = mat4_identity();
    c.projective_forward[0][1] = -a1;
    c.projective_forward[0][2] = -a2;
    c.projective_forward[0][3] = -a3;
    c.projective_forward[2][1] = -a3;
    c.projective_forward[3][1] = a2;
    c.projective_inverse = mat4_inverse(c.projective_forward);
    return c;
}

}  // namespace legendrian
