#pragma once

// Exact arithmetic over the Gaussian rationals Q(i).  Every symbolic check in
// the library (contact-form vanishing, residues, curve identities) runs over
// this field, so all operations here are exact.

#include <gmpxx.h>

#include <complex>
#include <string>

#include "legendrian/errors.hpp"

namespace legendrian {

using Rational = mpq_class;

// mpq_class(n, d) does not reduce; this does.
Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& s);  // "p/q" or "p"
std::string rational_to_string(const Rational& q);
double rational_to_double(const Rational& q);

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw DivisionByZero("division by zero in Q(i)");
        Rational n = o.norm2();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    GaussianRational inverse() const {
        GaussianRational one(1);
        one /= *this;
        return one;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational pow(long e) const;

    std::complex<double> to_complex() const {
        return {rational_to_double(re_), rational_to_double(im_)};
    }

    std::string str() const;

private:
    Rational re_, im_;
};

GaussianRational gaussian_from_strings(const std::string& re, const std::string& im);

}  // namespace legendrian
