#include "legendrian/reports.hpp"

#include <cmath>

namespace legendrian {

namespace {

template <class Real>
using Vec5 = std::array<Real, 5>;

template <class Real>
Vec5<Real> sub(const Vec5<Real>& a, const Vec5<Real>& b) {
    Vec5<Real> o;
    for (int i = 0; i < 5; ++i) o[i] = a[i] - b[i];
    return o;
}
template <class Real>
Vec5<Real> scale(const Vec5<Real>& a, Real s) {
    Vec5<Real> o;
    for (int i = 0; i < 5; ++i) o[i] = a[i] * s;
    return o;
}
template <class Real>
Vec5<Real> axpy(Real a, const Vec5<Real>& x, const Vec5<Real>& y) {
    Vec5<Real> o;
    for (int i = 0; i < 5; ++i) o[i] = a * x[i] + y[i];
    return o;
}
template <class Real>
Real dot(const Vec5<Real>& a, const Vec5<Real>& b) {
    Real s{};
    for (int i = 0; i < 5; ++i) s += a[i] * b[i];
    return s;
}
template <class Real>
Real norm(const Vec5<Real>& a) {
    using std::sqrt;
    return sqrt(dot(a, a));
}

// Central first differences of the S^4 values.
template <class Real>
void first_differences(const SurfaceSampleT<Real>& s, int i, int j, Vec5<Real>& xu, Vec5<Real>& xv) {
    Real inv2h = Real(1) / (Real(2) * Real(s.h));
    xu = scale(sub(s.points[s.index(i + 1, j)], s.points[s.index(i - 1, j)]), inv2h);
    xv = scale(sub(s.points[s.index(i, j + 1)], s.points[s.index(i, j - 1)]), inv2h);
}

template <class Real>
int require_stencil(const SurfaceSampleT<Real>& s) {
    if (s.nu < 3 || s.nv < 3) throw GridTooSmall("need at least a 3x3 grid");
    int interior = 0;
    for (int j = 1; j + 1 < s.nv; ++j)
        for (int i = 1; i + 1 < s.nu; ++i) interior += s.is_interior(i, j);
    if (interior == 0) throw GridTooSmall("no interior grid point supports a stencil");
    return interior;
}

// det of a 5x5 with given columns; used to orient the normal frame.
template <class Real>
Real det5(const std::array<Vec5<Real>, 5>& col) {
    std::array<std::array<Real, 5>, 5> m;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[i][j] = col[j][i];
    Real det = Real(1);
    for (int c = 0; c < 5; ++c) {
        int pivot = c;
        Real best = std::abs(static_cast<double>(m[c][c]));
        for (int r = c + 1; r < 5; ++r) {
            Real cand = std::abs(static_cast<double>(m[r][c]));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (m[pivot][c] == Real(0)) return Real(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Real inv = Real(1) / m[c][c];
        for (int r = c + 1; r < 5; ++r) {
            Real f = m[r][c] * inv;
            if (f == Real(0)) continue;
            for (int k = c; k < 5; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

}  // namespace

std::string spin_sign_name(SpinSign s) {
    switch (s) {
        case SpinSign::positive: return "+1";
        case SpinSign::negative: return "-1";
        case SpinSign::mixed: return "mixed";
        case SpinSign::degenerate: return "degenerate";
    }
    return "degenerate";
}

template <class Real>
ConformalityReport conformality_report(const SurfaceSampleT<Real>& s) {
    require_stencil(s);
    ConformalityReport rep;
    rep.per_vertex.assign(s.valid.size(), 0.0);
    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            if (!s.is_interior(i, j)) continue;
            Vec5<Real> xu, xv;
            first_differences(s, i, j, xu, xv);
            Real E = dot(xu, xu), G = dot(xv, xv), F = dot(xu, xv);
            Real denom = E + G;
            if (!(static_cast<double>(denom) > 1e-300)) continue;
            using std::abs;
            Real r = std::max(abs(F), abs(E - G)) / denom;
            double rd = static_cast<double>(r);
            rep.per_vertex[static_cast<std::size_t>(s.index(i, j))] = rd;
            rep.max_residual = std::max(rep.max_residual, rd);
        }
    }
    return rep;
}

template <class Real>
MinimalityReport minimality_report(const SurfaceSampleT<Real>& s) {
    require_stencil(s);
    MinimalityReport rep;
    rep.per_vertex.assign(s.valid.size(), 0.0);
    Real inv_h2 = Real(1) / (Real(s.h) * Real(s.h));
    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            if (!s.is_interior(i, j)) continue;
            const auto& X = s.points[s.index(i, j)];
            Vec5<Real> xu, xv;
            first_differences(s, i, j, xu, xv);
            Real grad2 = dot(xu, xu) + dot(xv, xv);
            Vec5<Real> lap;
            for (int c = 0; c < 5; ++c) {
                lap[c] = (s.points[s.index(i + 1, j)][c] + s.points[s.index(i - 1, j)][c] +
                          s.points[s.index(i, j + 1)][c] + s.points[s.index(i, j - 1)][c] -
                          Real(4) * X[c]) *
                         inv_h2;
            }
            // Conformal harmonic maps into the unit sphere satisfy
            // lap X + |grad X|^2 X = 0.
            Vec5<Real> res = axpy(grad2, X, lap);
            double rd = static_cast<double>(norm(res));
            rep.per_vertex[static_cast<std::size_t>(s.index(i, j))] = rd;
            rep.max_residual = std::max(rep.max_residual, rd);
        }
    }
    return rep;
}

template <class Real>
SuperminimalityReport superminimality_report(const SurfaceSampleT<Real>& s,
                                             const ReportOptions& options) {
    require_stencil(s);
    SuperminimalityReport rep;
    rep.per_vertex.assign(s.valid.size(), 0.0);
    Real inv_h2 = Real(1) / (Real(s.h) * Real(s.h));
    Real inv_4h2 = inv_h2 / Real(4);
    bool seen_pos = false, seen_neg = false;

    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            if (!s.is_interior(i, j)) continue;
            const auto& X = s.points[s.index(i, j)];
            Vec5<Real> xu, xv;
            first_differences(s, i, j, xu, xv);
            Real E = dot(xu, xu), G = dot(xv, xv), F = dot(xu, xv);
            if (!(static_cast<double>(E) > 1e-30)) continue;

            // Orthonormal tangent frame from (X_u, X_v).
            using std::sqrt;
            Real sE = sqrt(E);
            Vec5<Real> e1 = scale(xu, Real(1) / sE);
            Real mu2 = G - F * F / E;
            if (!(static_cast<double>(mu2) > 1e-30)) continue;
            Real mu = sqrt(mu2);
            Vec5<Real> e2 = scale(axpy(-F / E, xu, xv), Real(1) / mu);

            // Orthonormal normal frame: complete {X, e1, e2} inside R^5.
            // Greedy axis choice: the largest residual is at least 1/2 by a
            // dimension count, so no candidate is ever built from noise.
            std::array<Vec5<Real>, 2> n;
            int found = 0;
            for (; found < 2; ++found) {
                Vec5<Real> best{};
                Real best_len{};
                for (int axis = 0; axis < 5; ++axis) {
                    Vec5<Real> cand{};
                    cand[axis] = Real(1);
                    cand = axpy(-dot(cand, X), X, cand);
                    cand = axpy(-dot(cand, e1), e1, cand);
                    cand = axpy(-dot(cand, e2), e2, cand);
                    for (int k = 0; k < found; ++k) cand = axpy(-dot(cand, n[k]), n[k], cand);
                    Real len = norm(cand);
                    if (len > best_len) {
                        best_len = len;
                        best = cand;
                    }
                }
                if (static_cast<double>(best_len) < 1e-3) break;
                n[found] = scale(best, Real(1) / best_len);
            }
            if (found < 2) continue;
            // Positive orientation: det(X, e1, e2, n1, n2) > 0.
            if (static_cast<double>(det5<Real>({X, e1, e2, n[0], n[1]})) < 0) std::swap(n[0], n[1]);

            // Second differences.
            Vec5<Real> xuu, xvv, xuv;
            for (int c = 0; c < 5; ++c) {
                xuu[c] = (s.points[s.index(i + 1, j)][c] + s.points[s.index(i - 1, j)][c] -
                          Real(2) * X[c]) *
                         inv_h2;
                xvv[c] = (s.points[s.index(i, j + 1)][c] + s.points[s.index(i, j - 1)][c] -
                          Real(2) * X[c]) *
                         inv_h2;
                xuv[c] = (s.points[s.index(i + 1, j + 1)][c] - s.points[s.index(i + 1, j - 1)][c] -
                          s.points[s.index(i - 1, j + 1)][c] + s.points[s.index(i - 1, j - 1)][c]) *
                         inv_4h2;
            }

            // w_a = S(n_a) e1 expressed in the (e1, e2) frame.
            Real c_u = -F / (E * mu), d_v = Real(1) / mu;
            std::array<std::array<Real, 2>, 2> w;
            for (int a = 0; a < 2; ++a) {
                Real L = dot(xuu, n[a]), M = dot(xuv, n[a]);
                w[a][0] = L / E;
                w[a][1] = (c_u * L + d_v * M) / sE;
            }
            Real n1sq = w[0][0] * w[0][0] + w[0][1] * w[0][1];
            Real n2sq = w[1][0] * w[1][0] + w[1][1] * w[1][1];
            Real cross = w[0][0] * w[1][0] + w[0][1] * w[1][1];
            using std::abs;
            Real violation = std::max(abs(n1sq - n2sq), Real(2) * abs(cross)) /
                             (Real(1) + n1sq + n2sq);
            double vd = static_cast<double>(violation);
            rep.per_vertex[static_cast<std::size_t>(s.index(i, j))] = vd;
            rep.max_residual = std::max(rep.max_residual, vd);
            ++rep.evaluated_points;

            if (static_cast<double>(n1sq + n2sq) < options.degenerate_threshold) {
                ++rep.degenerate_points;
                continue;
            }
            Real det2 = w[0][0] * w[1][1] - w[0][1] * w[1][0];
            if (det2 > Real(0)) seen_pos = true;
            else if (det2 < Real(0)) seen_neg = true;
        }
    }
    if (seen_pos && seen_neg) rep.spin = SpinSign::mixed;
    else if (seen_pos) rep.spin = SpinSign::positive;
    else if (seen_neg) rep.spin = SpinSign::negative;
    else rep.spin = SpinSign::degenerate;
    return rep;
}

template <class Real>
IsometryReport isometry_ratio(const SurfaceSampleT<Real>& s) {
    if (!s.has_lift) throw InvalidInput("isometry ratio needs lift values");
    if (s.nu < 5 || s.nv < 5) throw GridTooSmall("need at least a 5x5 grid");
    IsometryReport rep;
    std::vector<double> ratios;
    Real inv12h = Real(1) / (Real(12) * Real(s.h));
    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            if (!s.is_interior2(i, j)) continue;
            // Fourth order X_u keeps the ratio spread at the rounding floor.
            Vec5<Real> xu;
            for (int c = 0; c < 5; ++c) {
                xu[c] = (-s.points[s.index(i + 2, j)][c] + Real(8) * s.points[s.index(i + 1, j)][c] -
                         Real(8) * s.points[s.index(i - 1, j)][c] + s.points[s.index(i - 2, j)][c]) *
                        inv12h;
            }
            const auto& Z = s.lift[s.index(i, j)];
            const auto& dZ = s.dlift[s.index(i, j)];
            Real zz{}, dzdz{};
            std::complex<Real> zdz{};
            for (int c = 0; c < 4; ++c) {
                zz += std::norm(Z[c]);
                dzdz += std::norm(dZ[c]);
                zdz += Z[c] * std::conj(dZ[c]);
            }
            // Pullback of the Fubini-Study metric along the u direction.
            Real fs = (zz * dzdz - std::norm(zdz)) / (zz * zz);
            if (!(static_cast<double>(fs) > 1e-300)) continue;
            ratios.push_back(static_cast<double>(dot(xu, xu) / fs));
        }
    }
    if (ratios.empty()) throw GridTooSmall("no interior point for the isometry ratio");
    double sum = 0;
    for (double r : ratios) sum += r;
    rep.mean_ratio = sum / static_cast<double>(ratios.size());
    double dev = 0;
    for (double r : ratios) dev = std::max(dev, std::abs(r - rep.mean_ratio));
    rep.relative_deviation = dev / std::abs(rep.mean_ratio);
    rep.points = static_cast<int>(ratios.size());
    return rep;
}

template <class Real>
GeometryReport geometry_report(const SurfaceSampleT<Real>& s, const ReportOptions& options) {
    GeometryReport rep;
    rep.h = s.h;
    rep.conformality_max = conformality_report(s).max_residual;
    rep.minimality_max = minimality_report(s).max_residual;
    SuperminimalityReport sm = superminimality_report(s, options);
    rep.supermin_circle_max = sm.max_residual;
    rep.spin = sm.spin;
    if (s.has_lift) {
        IsometryReport iso = isometry_ratio(s);
        rep.isometry_ratio_mean = iso.mean_ratio;
        rep.isometry_ratio_reldev = iso.relative_deviation;
    }
    return rep;
}

template ConformalityReport conformality_report<double>(const SurfaceSampleT<double>&);
template ConformalityReport conformality_report<long double>(const SurfaceSampleT<long double>&);
template MinimalityReport minimality_report<double>(const SurfaceSampleT<double>&);
template MinimalityReport minimality_report<long double>(const SurfaceSampleT<long double>&);
template SuperminimalityReport superminimality_report<double>(const SurfaceSampleT<double>&,
                                                              const ReportOptions&);
template SuperminimalityReport superminimality_report<long double>(const SurfaceSampleT<long double>&,
                                                                   const ReportOptions&);
template IsometryReport isometry_ratio<double>(const SurfaceSampleT<double>&);
template IsometryReport isometry_ratio<long double>(const SurfaceSampleT<long double>&);
template GeometryReport geometry_report<double>(const SurfaceSampleT<double>&, const ReportOptions&);
template GeometryReport geometry_report<long double>(const SurfaceSampleT<long double>&,
                                                     const ReportOptions&);

}  // namespace legendrian
