#pragma once

// Sampling of a projective curve over a planar grid: lift values, their
// exact z-derivatives, and the twistor images on S^4.  The scalar type is a
// template parameter; double and long double are supported (PRECISION_BITS
// 53 and 64).

#include <cstdint>
#include <string>
#include <vector>

#include "legendrian/domain.hpp"
#include "legendrian/projective_curve.hpp"
#include "legendrian/twistor.hpp"

namespace legendrian {

struct Exclusion {
    double x = 0, y = 0, r = 0;
};

struct SampleOptions {
    // Exclusion radius around data poles and cleared base points, in grid
    // steps.  Derivative stencils must not straddle such points.
    double exclusion_factor = 10.0;
    std::vector<Exclusion> extra_exclusions;
};

// Poles of the defining data plus base points cleared at construction.
std::vector<Exclusion> curve_singular_points(const ProjectiveCurve& C);

template <class Real>
struct SurfaceSampleT {
    double x0 = 0, y0 = 0, h = 0;
    int nu = 0, nv = 0;
    std::vector<std::uint8_t> valid;
    std::vector<CP3PointT<Real>> lift;    // curve values (coprime tuple)
    std::vector<CP3PointT<Real>> dlift;   // exact z-derivative of the tuple
    std::vector<S4PointT<Real>> points;   // X = pi o F
    DomainSpec domain;
    std::vector<Exclusion> exclusions;
    std::string provenance;
    bool has_lift = true;  // false for samples built from raw S^4 values

    int index(int i, int j) const { return j * nu + i; }
    bool is_valid(int i, int j) const {
        return i >= 0 && j >= 0 && i < nu && j < nv && valid[static_cast<std::size_t>(index(i, j))];
    }
    // All eight neighbours present: first and second difference stencils fit.
    bool is_interior(int i, int j) const {
        for (int dj = -1; dj <= 1; ++dj)
            for (int di = -1; di <= 1; ++di)
                if (!is_valid(i + di, j + dj)) return false;
        return true;
    }
    // Two full rings: wide stencils (fourth order differences) fit.
    bool is_interior2(int i, int j) const {
        for (int dj = -2; dj <= 2; ++dj)
            for (int di = -2; di <= 2; ++di)
                if (!is_valid(i + di, j + dj)) return false;
        return true;
    }
    double x_at(int i) const { return x0 + h * i; }
    double y_at(int j) const { return y0 + h * j; }
    std::size_t count_valid() const {
        std::size_t n = 0;
        for (auto v : valid) n += v;
        return n;
    }
};

using SurfaceSample = SurfaceSampleT<double>;

template <class Real>
Real to_real(const Rational& q);
template <class Real>
std::complex<Real> to_complex_real(const GaussianRational& c);

template <class Real>
SurfaceSampleT<Real> sample_surface(const ProjectiveCurve& C, const DomainSpec& domain, double h,
                                    const SampleOptions& options = {});

SurfaceSample to_double_sample(const SurfaceSampleT<long double>& s);

extern template struct SurfaceSampleT<double>;
extern template struct SurfaceSampleT<long double>;
extern template SurfaceSampleT<double> sample_surface<double>(const ProjectiveCurve&,
                                                              const DomainSpec&, double,
                                                              const SampleOptions&);
extern template SurfaceSampleT<long double> sample_surface<long double>(const ProjectiveCurve&,
                                                                        const DomainSpec&, double,
                                                                        const SampleOptions&);

}  // namespace legendrian
