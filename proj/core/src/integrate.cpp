#include "legendrian/integrate.hpp"

#include "legendrian/roots.hpp"

#include <sstream>

namespace legendrian {

namespace {

// Monic extended gcd: g = s*a + t*b.
struct ExtGcd {
    Polynomial g, s, t;
};

ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::one(), s1 = Polynomial::zero();
    Polynomial t0 = Polynomial::zero(), t1 = Polynomial::one();
    while (!r1.is_zero()) {
        auto [q, r2] = Polynomial::divmod(r0, r1);
        Polynomial s2 = s0 - q * s1;
        Polynomial t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    GaussianRational lead_inv = r0.leading().inverse();
    return {r0 * lead_inv, s0 * lead_inv, t0 * lead_inv};
}

// B = (a * inverse(m) mod q), assuming gcd(m, q) = 1.
Polynomial mod_divide(const Polynomial& a, const Polynomial& m, const Polynomial& q) {
    ExtGcd e = ext_gcd(m, q);
    // e.g == 1, e.s = m^{-1} mod q
    Polynomial prod = a * e.s;
    return Polynomial::divmod(prod, q).second;
}

Polynomial integrate_polynomial(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<GaussianRational> v(p.coeffs().size() + 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        v[k + 1] = p.coeffs()[k] / GaussianRational(static_cast<long>(k) + 1);
    return Polynomial(std::move(v));
}

}  // namespace

ExactnessViolation::ExactnessViolation(std::vector<ResidueViolation> violations)
    : Error("ExactnessViolation", describe(violations)), violations_(std::move(violations)) {}

std::string ExactnessViolation::describe(const std::vector<ResidueViolation>& v) {
    std::ostringstream os;
    os << "nonvanishing residue at";
    for (const auto& e : v) {
        os << " {pole " << e.pole.str() << ", residue ";
        if (e.residue_exact) os << e.residue.str();
        else os << e.residue_approx.real() << "+" << e.residue_approx.imag() << "i";
        os << "}";
    }
    return os.str();
}

HermiteResult hermite_reduce(const RationalFunction& r) {
    HermiteResult out;
    auto [poly_part, rem] = Polynomial::divmod(r.num(), r.den());
    out.primitive = RationalFunction(integrate_polynomial(poly_part), Polynomial::one());
    if (rem.is_zero()) {
        out.log_part = RationalFunction();
        return out;
    }

    // Split A/D over the pairwise coprime moduli Q_i^i of the squarefree
    // decomposition: A/(M*R) = B/M + C/R with B = A*R^{-1} mod M.
    Polynomial A = rem;
    Polynomial D = r.den();
    auto factors = squarefree_decomposition(D);
    RationalFunction log_part;
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        const auto& [Q, i] = factors[idx];
        Polynomial M = Q.pow(static_cast<unsigned>(i));
        Polynomial R = Polynomial::exact_divide(D, M);
        Polynomial B;
        if (R.degree() == 0) {
            B = A * R.leading().inverse();
        } else {
            B = mod_divide(A, R, M);
            A = Polynomial::exact_divide(A - B * R, M);
            D = R;
        }

        // Lower the pole order of B/Q^i one step at a time.
        Polynomial Ai = B;
        Polynomial Qp = Q.derivative();
        for (int j = i; j >= 2; --j) {
            Polynomial Bj = mod_divide(Ai, Qp, Q);
            Polynomial Cj = Polynomial::exact_divide(Ai - Bj * Qp, Q);
            GaussianRational inv(make_rational(1, j - 1));
            out.primitive =
                out.primitive +
                RationalFunction(-Bj * inv, Q.pow(static_cast<unsigned>(j - 1)));
            Ai = Cj + Bj.derivative() * inv;
        }
        log_part = log_part + RationalFunction(Ai, Q);
    }
    out.log_part = log_part;
    return out;
}

std::vector<ResidueViolation> log_part_residues(const RationalFunction& log_part) {
    std::vector<ResidueViolation> out;
    if (log_part.is_zero()) return out;
    const Polynomial& N = log_part.num();
    const Polynomial& D = log_part.den();
    Polynomial Dp = D.derivative();
    for (const auto& root : find_roots(D)) {
        ResidueViolation v;
        v.pole = root.location;
        if (root.location.exact) {
            v.residue_exact = true;
            v.residue = N.evaluate(root.location.point.value) / Dp.evaluate(root.location.point.value);
            v.residue_approx = v.residue.to_complex();
        } else {
            auto ev = [&](const Polynomial& p, std::complex<double> z) {
                std::complex<double> acc = 0.0;
                for (std::size_t k = p.coeffs().size(); k-- > 0;)
                    acc = acc * z + p.coeffs()[k].to_complex();
                return acc;
            };
            v.residue_approx = ev(N, root.location.approx) / ev(Dp, root.location.approx);
        }
        out.push_back(v);
    }
    return out;
}

RationalFunction rational_primitive(const RationalFunction& r) {
    HermiteResult h = hermite_reduce(r);
    if (!h.log_part.is_zero()) throw ExactnessViolation(log_part_residues(h.log_part));
    return h.primitive;
}

}  // namespace legendrian
