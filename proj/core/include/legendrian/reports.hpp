#pragma once

// Numerical certificates on sampled surfaces: conformality, the minimal
// surface equation, the superminimality circle condition with spin, and the
// horizontal isometry ratio against the Fubini-Study metric of the lift.
// All reductions run in a fixed sequential order, so reports are
// deterministic for a given sample.

#include "legendrian/surface.hpp"

namespace legendrian {

struct ConformalityReport {
    double max_residual = 0;
    std::vector<double> per_vertex;  // grid-sized; 0 where undefined
};

struct MinimalityReport {
    double max_residual = 0;
    std::vector<double> per_vertex;
};

enum class SpinSign { positive, negative, mixed, degenerate };
std::string spin_sign_name(SpinSign s);

struct SuperminimalityReport {
    double max_residual = 0;
    SpinSign spin = SpinSign::degenerate;
    int evaluated_points = 0;
    int degenerate_points = 0;  // second fundamental form below threshold
    std::vector<double> per_vertex;
};

struct IsometryReport {
    double mean_ratio = 0;
    double relative_deviation = 0;
    int points = 0;
};

struct ReportOptions {
    // Points where |S(n1)e1|^2 + |S(n2)e1|^2 falls below this are treated as
    // degenerate circles (they satisfy the condition trivially).
    double degenerate_threshold = 1e-4;
};

template <class Real>
ConformalityReport conformality_report(const SurfaceSampleT<Real>& s);
template <class Real>
MinimalityReport minimality_report(const SurfaceSampleT<Real>& s);
template <class Real>
SuperminimalityReport superminimality_report(const SurfaceSampleT<Real>& s,
                                             const ReportOptions& options = {});
template <class Real>
IsometryReport isometry_ratio(const SurfaceSampleT<Real>& s);

// The Fubini-Study normalization under which the horizontal isometry ratio
// is 1: |X_u|^2 = kFubiniStudyScale * ds_FS^2(F_u).  Calibrated once on
// Legendrian fixtures and pinned.
inline constexpr double kFubiniStudyScale = 4.0;

struct GeometryReport {
    double h = 0;
    double conformality_max = 0;
    double minimality_max = 0;
    double supermin_circle_max = 0;
    SpinSign spin = SpinSign::degenerate;
    double isometry_ratio_mean = 0;
    double isometry_ratio_reldev = 0;
};

template <class Real>
GeometryReport geometry_report(const SurfaceSampleT<Real>& s, const ReportOptions& options = {});

extern template ConformalityReport conformality_report<double>(const SurfaceSampleT<double>&);
extern template ConformalityReport conformality_report<long double>(const SurfaceSampleT<long double>&);
extern template MinimalityReport minimality_report<double>(const SurfaceSampleT<double>&);
extern template MinimalityReport minimality_report<long double>(const SurfaceSampleT<long double>&);
extern template SuperminimalityReport superminimality_report<double>(const SurfaceSampleT<double>&,
                                                                     const ReportOptions&);
extern template SuperminimalityReport superminimality_report<long double>(
    const SurfaceSampleT<long double>&, const ReportOptions&);
extern template IsometryReport isometry_ratio<double>(const SurfaceSampleT<double>&);
extern template IsometryReport isometry_ratio<long double>(const SurfaceSampleT<long double>&);
extern template GeometryReport geometry_report<double>(const SurfaceSampleT<double>&,
                                                       const ReportOptions&);
extern template GeometryReport geometry_report<long double>(const SurfaceSampleT<long double>&,
                                                            const ReportOptions&);

}  // namespace legendrian
