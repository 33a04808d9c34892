#pragma once

// Rational functions over Q(i) in one variable, kept in canonical form:
// numerator and denominator coprime, denominator monic.  These model the
// meromorphic functions on CP^1, so evaluation takes values in C u {inf}
// and accepts the point at infinity.

#include <optional>
#include <string>
#include <utility>

#include "legendrian/polynomial.hpp"

namespace legendrian {

// A point of CP^1: either a finite Gaussian rational or infinity.
struct DomainPoint {
    static DomainPoint infinity() {
        DomainPoint p;
        p.at_infinity = true;
        return p;
    }
    static DomainPoint finite(GaussianRational v) {
        DomainPoint p;
        p.value = std::move(v);
        return p;
    }
    DomainPoint() = default;
    DomainPoint(GaussianRational v) : value(std::move(v)) {}  // NOLINT

    bool at_infinity = false;
    GaussianRational value;

    friend bool operator==(const DomainPoint& a, const DomainPoint& b) {
        if (a.at_infinity != b.at_infinity) return false;
        return a.at_infinity || a.value == b.value;
    }
    std::string str() const { return at_infinity ? "inf" : value.str(); }
};

// Value in C u {inf}.
struct ExtendedValue {
    bool infinite = false;
    GaussianRational value;

    bool is_zero() const { return !infinite && value.is_zero(); }
    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(const GaussianRational& c) : num_(c), den_(Polynomial::one()) {}  // NOLINT
    RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial::one()) {}  // NOLINT
    // Canonicalizes num/den; den must be nonzero.
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable() {
        return RationalFunction(Polynomial::variable(), Polynomial::one());
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator-() const { return compose_raw(-num_, den_); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction derivative() const;
    RationalFunction inverse() const;

    ExtendedValue evaluate(const DomainPoint& p) const;

    // The function r(1/w) of w, exact.
    RationalFunction at_inverse_variable() const;

    std::string str(const std::string& var = "z") const;

private:
    static RationalFunction compose_raw(Polynomial n, Polynomial d) {
        RationalFunction r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    Polynomial num_, den_;
};

enum class RatOp { add, sub, mul, div };
RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, RatOp op);

}  // namespace legendrian
