#include "legendrian/surface.hpp"

#include <cmath>
#include <cstdlib>

#include "legendrian/roots.hpp"

namespace legendrian {

template <>
double to_real<double>(const Rational& q) {
    return q.get_d();
}

template <>
long double to_real<long double>(const Rational& q) {
    // Round numerator and denominator through decimal strings; strtold
    // rounds correctly, so the quotient carries long double precision.
    long double n = strtold(q.get_num().get_str().c_str(), nullptr);
    long double d = strtold(q.get_den().get_str().c_str(), nullptr);
    return n / d;
}

template <class Real>
std::complex<Real> to_complex_real(const GaussianRational& c) {
    return {to_real<Real>(c.re()), to_real<Real>(c.im())};
}

template std::complex<double> to_complex_real<double>(const GaussianRational&);
template std::complex<long double> to_complex_real<long double>(const GaussianRational&);

std::vector<Exclusion> curve_singular_points(const ProjectiveCurve& C) {
    std::vector<Exclusion> out;
    auto add_roots = [&out](const Polynomial& p) {
        if (p.degree() <= 0) return;
        for (const auto& root : find_roots(p))
            out.push_back({root.location.approx.real(), root.location.approx.imag(), 0});
    };
    add_roots(C.cleared_factor());
    const CurveProvenance& prov = C.provenance();
    auto add_poles = [&out](const RationalFunction& r) {
        for (const auto& pole : pole_set(r))
            if (!pole.location.at_infinity)
                out.push_back({pole.location.approx.real(), pole.location.approx.imag(), 0});
    };
    if (prov.f) add_poles(*prov.f);
    if (prov.g) add_poles(*prov.g);
    if (prov.h) add_poles(*prov.h);
    return out;
}

template <class Real>
SurfaceSampleT<Real> sample_surface(const ProjectiveCurve& C, const DomainSpec& domain, double h,
                                    const SampleOptions& options) {
    if (!(h > 0)) throw InvalidInput("grid step must be positive");
    SurfaceSampleT<Real> s;
    s.domain = domain;
    s.h = h;
    auto bb = domain.bounding_box();
    s.x0 = bb[0];
    s.y0 = bb[2];
    s.nu = static_cast<int>(std::round((bb[1] - bb[0]) / h)) + 1;
    s.nv = static_cast<int>(std::round((bb[3] - bb[2]) / h)) + 1;
    if (s.nu < 1 || s.nv < 1) throw InvalidInput("empty grid");

    s.exclusions = options.extra_exclusions;
    for (auto e : curve_singular_points(C)) {
        e.r = options.exclusion_factor * h;
        s.exclusions.push_back(e);
    }
    s.provenance = C.provenance().kind_name() + " " + C.str();

    std::array<std::vector<std::complex<Real>>, 4> coeffs, dcoeffs;
    for (int c = 0; c < 4; ++c) {
        const Polynomial& p = C.components()[static_cast<std::size_t>(c)];
        Polynomial dp = p.derivative();
        for (const auto& a : p.coeffs()) coeffs[static_cast<std::size_t>(c)].push_back(to_complex_real<Real>(a));
        for (const auto& a : dp.coeffs())
            dcoeffs[static_cast<std::size_t>(c)].push_back(to_complex_real<Real>(a));
    }
    auto horner = [](const std::vector<std::complex<Real>>& cs, const std::complex<Real>& z) {
        std::complex<Real> acc{};
        for (std::size_t k = cs.size(); k-- > 0;) acc = acc * z + cs[k];
        return acc;
    };

    std::size_t n = static_cast<std::size_t>(s.nu) * static_cast<std::size_t>(s.nv);
    s.valid.assign(n, 0);
    s.lift.resize(n);
    s.dlift.resize(n);
    s.points.resize(n);

    std::size_t kept = 0;
    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            double x = s.x_at(i), y = s.y_at(j);
            if (!domain.contains(x, y)) continue;
            bool excluded = false;
            for (const auto& e : s.exclusions) {
                double dx = x - e.x, dy = y - e.y;
                if (dx * dx + dy * dy < e.r * e.r) {
                    excluded = true;
                    break;
                }
            }
            if (excluded) continue;
            std::complex<Real> z(static_cast<Real>(x), static_cast<Real>(y));
            CP3PointT<Real> F, dF;
            for (int c = 0; c < 4; ++c) {
                F[static_cast<std::size_t>(c)] = horner(coeffs[static_cast<std::size_t>(c)], z);
                dF[static_cast<std::size_t>(c)] = horner(dcoeffs[static_cast<std::size_t>(c)], z);
            }
            std::size_t idx = static_cast<std::size_t>(s.index(i, j));
            s.lift[idx] = F;
            s.dlift[idx] = dF;
            s.points[idx] = twistor_project<Real>(F);
            s.valid[idx] = 1;
            ++kept;
        }
    }
    if (kept == 0) throw EmptyDomain("no grid point survives the domain and exclusion constraints");
    return s;
}

SurfaceSample to_double_sample(const SurfaceSampleT<long double>& s) {
    SurfaceSample out;
    out.x0 = s.x0;
    out.y0 = s.y0;
    out.h = s.h;
    out.nu = s.nu;
    out.nv = s.nv;
    out.valid = s.valid;
    out.domain = s.domain;
    out.exclusions = s.exclusions;
    out.provenance = s.provenance;
    out.has_lift = s.has_lift;
    out.lift.resize(s.lift.size());
    out.dlift.resize(s.dlift.size());
    out.points.resize(s.points.size());
    for (std::size_t k = 0; k < s.points.size(); ++k) {
        for (int c = 0; c < 4; ++c) {
            out.lift[k][static_cast<std::size_t>(c)] = {
                static_cast<double>(s.lift[k][static_cast<std::size_t>(c)].real()),
                static_cast<double>(s.lift[k][static_cast<std::size_t>(c)].imag())};
            out.dlift[k][static_cast<std::size_t>(c)] = {
                static_cast<double>(s.dlift[k][static_cast<std::size_t>(c)].real()),
                static_cast<double>(s.dlift[k][static_cast<std::size_t>(c)].imag())};
        }
        for (int c = 0; c < 5; ++c)
            out.points[k][static_cast<std::size_t>(c)] =
                static_cast<double>(s.points[k][static_cast<std::size_t>(c)]);
    }
    return out;
}

template struct SurfaceSampleT<double>;
template struct SurfaceSampleT<long double>;
template SurfaceSampleT<double> sample_surface<double>(const ProjectiveCurve&, const DomainSpec&,
                                                       double, const SampleOptions&);
template SurfaceSampleT<long double> sample_surface<long double>(const ProjectiveCurve&,
                                                                 const DomainSpec&, double,
                                                                 const SampleOptions&);

}  // namespace legendrian
