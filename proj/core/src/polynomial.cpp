#include "legendrian/polynomial.hpp"

#include <sstream>

namespace legendrian {

Polynomial Polynomial::monomial(const GaussianRational& c, int k) {
    if (c.is_zero()) return Polynomial();
    std::vector<GaussianRational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

int Polynomial::valuation() const {
    if (is_zero()) throw Undefined("valuation of the zero polynomial");
    int k = 0;
    while (c_[static_cast<std::size_t>(k)].is_zero()) ++k;
    return k;
}

Polynomial Polynomial::operator-() const {
    std::vector<GaussianRational> v(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) v[k] = -c_[k];
    return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<GaussianRational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.c_.size()) v[k] += a.c_[k];
        if (k < b.c_.size()) v[k] += b.c_[k];
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<GaussianRational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const GaussianRational& s) const {
    if (s.is_zero()) return Polynomial();
    std::vector<GaussianRational> v(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) v[k] = c_[k] * s;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<GaussianRational> v(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * GaussianRational(static_cast<long>(k));
    return Polynomial(std::move(v));
}

GaussianRational Polynomial::evaluate(const GaussianRational& z) const {
    GaussianRational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<GaussianRational> rem = a.c_;
    std::vector<GaussianRational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    GaussianRational lead_inv = b.leading().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        GaussianRational q = rem[static_cast<std::size_t>(k + b.degree())] * lead_inv;
        quo[static_cast<std::size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_divide(const Polynomial& a, const Polynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InvalidInput("polynomial division is not exact");
    return q;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = Polynomial::one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Polynomial Polynomial::shifted(const GaussianRational& a) const {
    if (a.is_zero() || is_zero()) return *this;
    // Repeated synthetic division by (z - (-a)) accumulates p(z + a).
    std::vector<GaussianRational> v = c_;
    std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) v[j] += a * v[j + 1];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::reversed(int deg_hint) const {
    if (is_zero()) return *this;
    if (deg_hint < degree()) throw InvalidInput("reversal degree below actual degree");
    std::vector<GaussianRational> v(static_cast<std::size_t>(deg_hint) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k)
        v[static_cast<std::size_t>(deg_hint) - k] = c_[k];
    return Polynomial(std::move(v));
}

namespace {

// Coefficient as a factor: "3/2", "i", "5*i", "(1+2*i)".
std::string coeff_str(const GaussianRational& c) {
    if (c.is_real()) return rational_to_string(c.re());
    if (c.re() == 0) {
        if (c.im() == 1) return "i";
        return rational_to_string(c.im()) + "*i";
    }
    std::string sign = c.im() > 0 ? "+" : "-";
    std::string im_abs = c.im() == 1 || c.im() == -1
                             ? "i"
                             : rational_to_string(Rational(abs(c.im()))) + "*i";
    return "(" + rational_to_string(c.re()) + sign + im_abs + ")";
}

}  // namespace

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        // Pull an overall minus out of real or purely imaginary coefficients.
        bool negate = (c_[k].is_real() && c_[k].re() < 0) ||
                      (c_[k].re() == 0 && c_[k].im() < 0);
        GaussianRational shown = negate ? -c_[k] : c_[k];
        if (first) {
            if (negate) os << "-";
        } else {
            os << (negate ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << coeff_str(shown);
            continue;
        }
        if (!shown.is_one()) os << coeff_str(shown) << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw InvalidInput("gcd of two zero polynomials");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        Polynomial r = Polynomial::divmod(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : r.monic();  // monic remainders tame coefficient growth
    }
    return x.monic();
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    return Polynomial::exact_divide(a * b, poly_gcd(a, b)).monic();
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
    std::vector<std::pair<Polynomial, int>> out;
    if (f.is_zero() || f.degree() == 0) return out;
    Polynomial fm = f.monic();
    Polynomial fp = fm.derivative();
    Polynomial a0 = poly_gcd(fm, fp);
    Polynomial b = Polynomial::exact_divide(fm, a0);
    Polynomial c = Polynomial::exact_divide(fp, a0);
    Polynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        Polynomial ai = d.is_zero() ? b : poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = Polynomial::exact_divide(b, ai);
        c = Polynomial::exact_divide(d, ai);
        d = c - b.derivative();
    }
    return out;
}

}  // namespace legendrian
