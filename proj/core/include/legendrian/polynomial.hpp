#pragma once

// Dense univariate polynomials over Q(i), lowest-degree coefficient first.
// The zero polynomial has an empty coefficient vector and reports the
// sentinel degree kZeroDegree.

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "legendrian/gaussian.hpp"

namespace legendrian {

inline constexpr int kZeroDegree = INT_MIN;  // degree of the zero polynomial

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { strip(); }
    Polynomial(const GaussianRational& constant) {  // NOLINT(google-explicit-constructor)
        c_.push_back(constant);
        strip();
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(GaussianRational(1)); }
    // c * z^k
    static Polynomial monomial(const GaussianRational& c, int k);
    static Polynomial variable() { return monomial(GaussianRational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }

    const std::vector<GaussianRational>& coeffs() const { return c_; }
    // Coefficient of z^k, zero outside the stored range.
    GaussianRational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return GaussianRational();
        return c_[static_cast<std::size_t>(k)];
    }
    const GaussianRational& leading() const { return c_.back(); }

    // Order of vanishing at 0 (index of the first nonzero coefficient).
    // Undefined for the zero polynomial.
    int valuation() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const GaussianRational& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const;
    GaussianRational evaluate(const GaussianRational& z) const;

    // Quotient and remainder; the divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    // Division known to be exact; throws InvalidInput if a remainder appears.
    static Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

    Polynomial monic() const;
    Polynomial pow(unsigned e) const;

    // p(z + a), the Taylor shift.
    Polynomial shifted(const GaussianRational& a) const;
    // w^deg_hint * p(1/w); deg_hint >= degree() (used when a tuple of
    // polynomials is reversed with a shared top degree).
    Polynomial reversed(int deg_hint) const;

    std::string str(const std::string& var = "z") const;

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

// Monic greatest common divisor.  Both inputs zero is an error.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

// Yun squarefree decomposition: f = lc * prod factors[k].first ^ factors[k].second
// with the factors monic, squarefree and pairwise coprime.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

}  // namespace legendrian
