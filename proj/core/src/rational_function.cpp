#include "legendrian/rational_function.hpp"

namespace legendrian {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::one();
        return;
    }
    Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = Polynomial::exact_divide(num, g);
        den = Polynomial::exact_divide(den, g);
    }
    GaussianRational lead_inv = den.leading().inverse();
    num_ = num * lead_inv;
    den_ = den * lead_inv;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero function");
    return RationalFunction(den_, num_);
}

ExtendedValue RationalFunction::evaluate(const DomainPoint& p) const {
    ExtendedValue out;
    if (!p.at_infinity) {
        GaussianRational d = den_.evaluate(p.value);
        if (d.is_zero()) {
            // Coprimality rules out 0/0.
            out.infinite = true;
            return out;
        }
        out.value = num_.evaluate(p.value) / d;
        return out;
    }
    if (is_zero()) return out;
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) {
        out.infinite = true;
    } else if (dn == dd) {
        out.value = num_.leading() / den_.leading();
    }
    return out;
}

RationalFunction RationalFunction::at_inverse_variable() const {
    if (is_zero()) return *this;
    int d = std::max(num_.degree(), den_.degree());
    return RationalFunction(num_.reversed(d), den_.reversed(d));
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    std::string n = num_.is_constant() || num_.coeffs().size() == 1
                        ? num_.str(var)
                        : "(" + num_.str(var) + ")";
    return n + "/(" + den_.str(var) + ")";
}

RationalFunction ratfunc_arith(const RationalFunction& a, const RationalFunction& b, RatOp op) {
    switch (op) {
        case RatOp::add: return a + b;
        case RatOp::sub: return a - b;
        case RatOp::mul: return a * b;
        case RatOp::div: return a / b;
    }
    throw InvalidInput("unknown arithmetic op");
}

}  // namespace legendrian
