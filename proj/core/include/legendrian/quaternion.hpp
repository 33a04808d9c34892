#pragma once

// Quaternions q = x + iy + ju + kv, templated over the scalar so the
// algebraic identities can be verified exactly over the rationals while the
// twistor pipeline runs in floating point.  The complex pair encoding is
// q = z + j w with z = x + iy and w = u - iv.

#include <array>
#include <cmath>
#include <complex>

namespace legendrian {

template <class T>
struct Quaternion {
    T x{}, y{}, u{}, v{};

    static Quaternion from_pair(const std::complex<T>& z, const std::complex<T>& w) {
        return {z.real(), z.imag(), w.real(), -w.imag()};
    }
    std::complex<T> z_part() const { return {x, y}; }
    std::complex<T> w_part() const { return {u, -v}; }

    Quaternion conj() const { return {x, -y, -u, -v}; }
    T norm2() const { return x * x + y * y + u * u + v * v; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.x + b.x, a.y + b.y, a.u + b.u, a.v + b.v};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.x - b.x, a.y - b.y, a.u - b.u, a.v - b.v};
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.x * b.x - a.y * b.y - a.u * b.u - a.v * b.v,
                a.x * b.y + a.y * b.x + a.u * b.v - a.v * b.u,
                a.x * b.u - a.y * b.v + a.u * b.x + a.v * b.y,
                a.x * b.v + a.y * b.u - a.u * b.y + a.v * b.x};
    }
    Quaternion operator*(const T& s) const { return {x * s, y * s, u * s, v * s}; }

    Quaternion inverse() const {
        T n = norm2();
        Quaternion c = conj();
        return {c.x / n, c.y / n, c.u / n, c.v / n};
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.x == b.x && a.y == b.y && a.u == b.u && a.v == b.v;
    }
};

using Quat = Quaternion<double>;

}  // namespace legendrian
