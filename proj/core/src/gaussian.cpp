#include "legendrian/gaussian.hpp"

namespace legendrian {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw InvalidInput("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

double rational_to_double(const Rational& q) { return q.get_d(); }

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational acc(1);
    GaussianRational base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_to_string(re_);
    std::string imag = rational_to_string(im_) + "*i";
    if (re_ == 0) return imag;
    if (im_ > 0) return rational_to_string(re_) + "+" + imag;
    return rational_to_string(re_) + imag;  // im negative carries its sign
}

GaussianRational gaussian_from_strings(const std::string& re, const std::string& im) {
    return {rational_from_string(re), rational_from_string(im)};
}

}  // namespace legendrian
