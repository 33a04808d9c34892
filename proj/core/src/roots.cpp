#include "legendrian/roots.hpp"

#include <algorithm>
#include <cmath>

namespace legendrian {

std::string AlgebraicPoint::str() const {
    if (at_infinity) return "inf";
    if (exact) return point.value.str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", approx.real(), approx.imag());
    return {buf};
}

Rational reconstruct_rational(double x, long den_bound) {
    // Continued fraction expansion, stopping at the denominator bound.
    if (!std::isfinite(x) || std::abs(x) > 1e12) return Rational(0);
    double rem = x;
    long h0 = 1, h1 = static_cast<long>(std::floor(rem));
    long k0 = 0, k1 = 1;
    rem -= std::floor(rem);
    const long numerator_bound = 1L << 52;
    for (int iter = 0; iter < 64; ++iter) {
        if (rem < 1e-15) break;
        rem = 1.0 / rem;
        double a = std::floor(rem);
        if (a > static_cast<double>(den_bound)) break;
        long ai = static_cast<long>(a);
        if (std::abs(h1) > numerator_bound / std::max(ai, 1L)) break;
        long h2 = ai * h1 + h0;
        long k2 = ai * k1 + k0;
        if (k2 > den_bound || k2 < 0) break;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
        rem -= a;
    }
    Rational q(h1, k1);
    q.canonicalize();
    return q;
}

std::vector<std::complex<double>> numeric_roots(const Polynomial& f) {
    using C = std::complex<double>;
    int n = f.degree();
    if (n <= 0) return {};
    std::vector<C> c(static_cast<std::size_t>(n) + 1);
    double scale = 0;
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = f.coeff(k).to_complex();
        scale = std::max(scale, std::abs(c[static_cast<std::size_t>(k)]));
    }
    for (auto& v : c) v /= scale;

    auto eval = [&](const C& z, C& p, C& dp) {
        p = c[static_cast<std::size_t>(n)];
        dp = 0.0;
        for (int k = n - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + c[static_cast<std::size_t>(k)];
        }
    };

    // Initial guesses on a circle sized by the Cauchy bound.
    double radius = 0.0;
    double an = std::abs(c[static_cast<std::size_t>(n)]);
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(k)]) / an, 1.0 / (n - k)));
    radius = 2.0 * std::max(radius, 0.5);
    std::vector<C> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * M_PI * (k + 0.25) / n + 0.42;
        z[static_cast<std::size_t>(k)] = radius * C(std::cos(th), std::sin(th));
    }

    for (int iter = 0; iter < 400; ++iter) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            C p, dp;
            eval(z[static_cast<std::size_t>(k)], p, dp);
            C newton = (dp == C(0.0)) ? C(0.0) : p / dp;
            C sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) sum += 1.0 / (z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)]);
            C denom = 1.0 - newton * sum;
            C step = (std::abs(denom) < 1e-30) ? newton : newton / denom;
            z[static_cast<std::size_t>(k)] -= step;
            worst = std::max(worst, std::abs(step));
        }
        if (worst < 1e-14 * std::max(1.0, radius)) break;
    }
    // Newton polish.
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            C p, dp;
            eval(r, p, dp);
            if (std::abs(dp) < 1e-300) break;
            r -= p / dp;
        }
    }
    return z;
}

namespace {

// Attempt an exact linear split of f at a Q(i) candidate; on success divide
// it out (with multiplicity) and record the root.
bool try_exact_root(Polynomial& f, const GaussianRational& cand, std::vector<RootInfo>& out) {
    if (!f.evaluate(cand).is_zero()) return false;
    Polynomial lin(std::vector<GaussianRational>{-cand, GaussianRational(1)});
    int mult = 0;
    while (true) {
        auto [q, r] = Polynomial::divmod(f, lin);
        if (!r.is_zero()) break;
        f = q;
        ++mult;
        if (f.degree() <= 0) break;
    }
    RootInfo info;
    info.location.exact = true;
    info.location.point = DomainPoint(cand);
    info.location.approx = cand.to_complex();
    info.multiplicity = mult;
    out.push_back(info);
    return true;
}

}  // namespace

std::vector<RootInfo> find_roots(const Polynomial& f) {
    if (f.is_zero()) throw InvalidInput("roots of the zero polynomial");
    std::vector<RootInfo> out;
    if (f.degree() == 0) return out;

    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        Polynomial g = factor;
        // Degree-1 factors split exactly without any numerics.
        if (g.degree() == 1) {
            GaussianRational root = -g.coeff(0) / g.coeff(1);
            RootInfo info;
            info.location.exact = true;
            info.location.point = DomainPoint(root);
            info.location.approx = root.to_complex();
            info.multiplicity = mult;
            out.push_back(info);
            continue;
        }
        std::vector<RootInfo> local;
        for (const auto& z : numeric_roots(g)) {
            if (g.degree() <= 0) break;
            GaussianRational cand(reconstruct_rational(z.real()), reconstruct_rational(z.imag()));
            try_exact_root(g, cand, local);
        }
        // Whatever failed exact verification stays numeric.
        if (g.degree() > 0) {
            for (const auto& z : numeric_roots(g)) {
                RootInfo info;
                info.location.exact = false;
                info.location.approx = z;
                local.push_back(info);
            }
        }
        for (auto& info : local) {
            info.multiplicity = mult;  // the factor is squarefree
            out.push_back(info);
        }
    }
    return out;
}

}  // namespace legendrian
