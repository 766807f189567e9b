#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "tpoly.hpp"

namespace binforms {

/// Homogeneous polynomial of fixed degree l in X0, X1; coeff(j) multiplies
/// X0^(l-j) X1^j. The coefficient ring R is a field for plain forms and
/// Poly<K> for one-parameter families.
template <class R>
class BinaryForm {
  public:
    BinaryForm() : degree_(0), c_(1) {}
    explicit BinaryForm(int degree) : degree_(degree), c_(degree + 1) {
        if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    }
    BinaryForm(int degree, std::vector<R> coeffs) : degree_(degree), c_(std::move(coeffs)) {
        if (degree < 0 || c_.size() != static_cast<std::size_t>(degree + 1))
            throw std::invalid_argument("BinaryForm: coefficient count != degree+1");
    }

    static BinaryForm monomial(int degree, int j, R c = R(1)) {
        BinaryForm f(degree);
        if (j < 0 || j > degree) throw std::invalid_argument("BinaryForm: bad monomial index");
        f.c_[j] = std::move(c);
        return f;
    }

    int degree() const { return degree_; }
    const R& coeff(int j) const { return c_[j]; }
    R& coeff(int j) { return c_[j]; }
    const std::vector<R>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const R& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Smallest j with coeff(j) != 0 (X0-descending order); -1 for zero.
    int first_nonzero() const {
        for (int j = 0; j <= degree_; ++j)
            if (!c_[j].is_zero()) return j;
        return -1;
    }

    /// Largest j with coeff(j) != 0; -1 for zero.
    int last_nonzero() const {
        for (int j = degree_; j >= 0; --j)
            if (!c_[j].is_zero()) return j;
        return -1;
    }

    R eval(const R& x0, const R& x1) const {
        std::vector<R> pow0(degree_ + 1, R(1));
        for (int i = 1; i <= degree_; ++i) pow0[i] = pow0[i - 1] * x0;
        std::vector<R> pow1(degree_ + 1, R(1));
        for (int i = 1; i <= degree_; ++i) pow1[i] = pow1[i - 1] * x1;
        R acc(0);
        for (int j = 0; j <= degree_; ++j) acc += c_[j] * pow0[degree_ - j] * pow1[j];
        return acc;
    }

    BinaryForm& operator+=(const BinaryForm& o) {
        check_same_degree(o);
        for (int j = 0; j <= degree_; ++j) c_[j] += o.c_[j];
        return *this;
    }
    BinaryForm& operator-=(const BinaryForm& o) {
        check_same_degree(o);
        for (int j = 0; j <= degree_; ++j) c_[j] -= o.c_[j];
        return *this;
    }
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    BinaryForm operator-() const {
        BinaryForm r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend BinaryForm operator*(const R& s, BinaryForm f) {
        for (auto& c : f.c_) c = s * c;
        return f;
    }

    /// Product of forms: coefficient convolution, degree a+b.
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
        BinaryForm r(a.degree_ + b.degree_);
        for (int i = 0; i <= a.degree_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j <= b.degree_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }
    friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int j = 0; j <= degree_; ++j) {
            if (c_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c_[j].str();
            int a = degree_ - j, b = j;
            if (a > 0) { s += "*X0"; if (a > 1) s += "^" + std::to_string(a); }
            if (b > 0) { s += "*X1"; if (b > 1) s += "^" + std::to_string(b); }
        }
        return s;
    }

  private:
    void check_same_degree(const BinaryForm& o) const {
        if (degree_ != o.degree_) throw std::invalid_argument("BinaryForm: degree mismatch");
    }

    int degree_;
    std::vector<R> c_;
};

template <class R>
BinaryForm<R> pow_form(const BinaryForm<R>& f, int n) {
    BinaryForm<R> r(0, {R(1)});
    for (int i = 0; i < n; ++i) r = r * f;
    return r;
}

/// Scale so the first nonzero coefficient (X0-descending) is 1.
template <class K>
BinaryForm<K> normalized(const BinaryForm<K>& f) {
    int j = f.first_nonzero();
    if (j < 0) return f;
    return f.coeff(j).inv() * f;
}

/// Exact division of forms; throws if g does not divide f.
template <class K>
BinaryForm<K> form_divexact(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (g.is_zero()) throw std::domain_error("form_divexact: division by zero form");
    if (f.is_zero()) {
        if (f.degree() < g.degree()) throw std::domain_error("form_divexact: degree mismatch");
        return BinaryForm<K>(f.degree() - g.degree());
    }
    int dq = f.degree() - g.degree();
    if (dq < 0) throw std::domain_error("form_divexact: degree mismatch");
    // long division on X0-descending coefficients
    std::vector<K> rem = f.coeffs();
    int jg = g.first_nonzero();
    if (f.first_nonzero() < jg) throw std::domain_error("form_divexact: not divisible");
    BinaryForm<K> q(dq);
    for (int j = f.first_nonzero(); j <= f.degree(); ++j) {
        if (rem[j].is_zero()) continue;
        int jq = j - jg;
        if (jq > dq) throw std::domain_error("form_divexact: not divisible");
        K c = rem[j] / g.coeff(jg);
        q.coeff(jq) = c;
        for (int k = jg; k <= g.degree(); ++k) rem[jq + k] -= c * g.coeff(k);
    }
    for (const K& c : rem)
        if (!c.is_zero()) throw std::domain_error("form_divexact: not divisible");
    return q;
}

namespace detail {

/// Dehomogenize in x = X0/X1: u[k] = coefficient of x^k, so u has the
/// reversed coefficient vector. X0-multiplicity of the form survives as the
/// x-valuation.
template <class K>
std::vector<K> to_univariate(const BinaryForm<K>& f) {
    std::vector<K> u(f.degree() + 1);
    for (int j = 0; j <= f.degree(); ++j) u[f.degree() - j] = f.coeff(j);
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    return u;
}

template <class K>
std::vector<K> uni_rem(std::vector<K> a, const std::vector<K>& b) {
    const K lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        K c = a.back() / lb;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

template <class K>
std::vector<K> uni_gcd(std::vector<K> a, std::vector<K> b) {
    while (!b.empty()) {
        auto r = uni_rem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

/// Monic gcd of two binary forms (first nonzero coefficient normalized
/// to 1). Common X1-powers are factored out first; the rest is a Euclid run
/// on the dehomogenizations.
template <class K>
BinaryForm<K> form_gcd(const BinaryForm<K>& f, const BinaryForm<K>& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("form_gcd: undefined gcd of zero forms");
    if (f.is_zero()) return normalized(g);
    if (g.is_zero()) return normalized(f);
    int x1f = f.first_nonzero();   // X1-multiplicity
    int x1g = g.first_nonzero();
    int x1 = x1f < x1g ? x1f : x1g;
    std::vector<K> uf = detail::to_univariate(f);
    std::vector<K> ug = detail::to_univariate(g);
    std::vector<K> u = detail::uni_gcd(uf, ug);
    // rehomogenize u (degree = u.size()-1) and append the common X1 power
    int du = static_cast<int>(u.size()) - 1;
    BinaryForm<K> h(du + x1);
    for (int k = 0; k <= du; ++k) h.coeff(du - k + x1) = u[k];
    return normalized(h);
}

/// Determinant of the Sylvester matrix of F (degree a >= 1) and G (degree
/// b >= 1): the a rows of G-coefficient shifts come first, then the b rows
/// of F-coefficient shifts. With this row order the value is (-1)^(a*b)
/// times the classical resultant, e.g. resultant(X0, X1) = -1. It vanishes
/// exactly when F and G have a common projective root.
template <class R>
R resultant(const BinaryForm<R>& f, const BinaryForm<R>& g) {
    int a = f.degree(), b = g.degree();
    if (a < 1 || b < 1) throw std::invalid_argument("resultant: degrees must be >= 1");
    Matrix<R> m(a + b, a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j <= b; ++j) m(i, i + j) = g.coeff(j);
    for (int i = 0; i < b; ++i)
        for (int j = 0; j <= a; ++j) m(a + i, i + j) = f.coeff(j);
    return m.det_bareiss();
}

// --- forms with t-polynomial coefficients ---------------------------------

template <class K>
using TForm = BinaryForm<Poly<K>>;

template <class K>
BinaryForm<K> tform_eval(const TForm<K>& h, const K& t0) {
    BinaryForm<K> f(h.degree());
    for (int j = 0; j <= h.degree(); ++j) f.coeff(j) = h.coeff(j).eval(t0);
    return f;
}

/// Minimal t-valuation across coefficients; errors on the zero family.
template <class K>
int tform_content(const TForm<K>& h) {
    int v = -1;
    for (int j = 0; j <= h.degree(); ++j) {
        if (h.coeff(j).is_zero()) continue;
        int w = h.coeff(j).valuation();
        if (v < 0 || w < v) v = w;
    }
    if (v < 0) throw std::domain_error("tform_content: zero form");
    return v;
}

template <class K>
TForm<K> tform_clear_content(const TForm<K>& h) {
    int v = tform_content(h);
    TForm<K> r(h.degree());
    for (int j = 0; j <= h.degree(); ++j)
        if (!h.coeff(j).is_zero()) r.coeff(j) = h.coeff(j).shifted_down(v);
    return r;
}

template <class K>
TForm<K> tform_shift(const TForm<K>& h, const K& tau) {
    TForm<K> r(h.degree());
    for (int j = 0; j <= h.degree(); ++j) r.coeff(j) = h.coeff(j).shifted(tau);
    return r;
}

/// Chart swap t -> 1/s: multiply by s^M with M the maximal coefficient
/// degree, then clear the s-content.
template <class K>
TForm<K> tform_infinity_chart(const TForm<K>& h) {
    int m = 0;
    for (int j = 0; j <= h.degree(); ++j)
        if (h.coeff(j).deg() > m) m = h.coeff(j).deg();
    TForm<K> r(h.degree());
    for (int j = 0; j <= h.degree(); ++j)
        if (!h.coeff(j).is_zero()) r.coeff(j) = h.coeff(j).reversed(m);
    return tform_clear_content(r);
}

template <class K>
int tform_max_tdeg(const TForm<K>& h) {
    int m = -1;
    for (int j = 0; j <= h.degree(); ++j)
        if (h.coeff(j).deg() > m) m = h.coeff(j).deg();
    return m;
}

}  // namespace binforms
