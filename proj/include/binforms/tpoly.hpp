#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace binforms {

/// Univariate polynomial over an exact field K, coefficients ascending in
/// the parameter t, trailing zeros trimmed. deg() of the zero polynomial
/// is -1.
template <class K>
class Poly {
  public:
    Poly() {}
    Poly(long long n) { c_.assign(1, K(n)); trim(); }
    explicit Poly(K c) { c_.assign(1, std::move(c)); trim(); }
    explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

    static Poly t() { return monomial(1, K(1)); }
    static Poly monomial(int k, K c) {
        std::vector<K> v(k + 1);
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return K(0);
        return c_[k];
    }
    const std::vector<K>& coeffs() const { return c_; }
    K leading() const {
        if (is_zero()) throw std::domain_error("Poly: leading of zero");
        return c_.back();
    }

    /// t-adic valuation; the zero polynomial reports -1.
    int valuation() const {
        if (is_zero()) return -1;
        int v = 0;
        while (c_[v].is_zero()) ++v;
        return v;
    }

    /// Divide by t^k (requires valuation >= k).
    Poly shifted_down(int k) const {
        if (k == 0) return *this;
        if (is_zero()) return *this;
        if (valuation() < k) throw std::domain_error("Poly: t-valuation too small");
        return Poly(std::vector<K>(c_.begin() + k, c_.end()));
    }

    K eval(const K& x) const {
        K r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    /// Composition p(t + tau), by Horner in t + tau.
    Poly shifted(const K& tau) const {
        Poly acc;
        Poly x = Poly::t() + Poly(tau);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + Poly(c_[i]);
        return acc;
    }

    /// Reversal s^n * p(1/s) for n >= deg(p): the degree-n chart swap.
    Poly reversed(int n) const {
        if (deg() > n) throw std::invalid_argument("Poly: reversal degree too small");
        std::vector<K> v(n + 1);
        for (int i = 0; i <= deg(); ++i) v[n - i] = c_[i];
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Euclidean division; requires K a field.
    friend std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly q;
        K lb = b.leading();
        while (!a.is_zero() && a.deg() >= b.deg()) {
            int k = a.deg() - b.deg();
            K c = a.leading() / lb;
            Poly m = Poly::monomial(k, c);
            q += m;
            a -= m * b;
        }
        return {q, a};
    }

    /// Exact division (throws if the remainder is nonzero); this is what the
    /// Bareiss elimination uses.
    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divrem(a, b);
        if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
        return q;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = 0; k <= deg(); ++k) {
            if (c_[k].is_zero()) continue;
            if (!s.empty()) s += " + ";
            if (k == 0) { s += c_[k].str(); continue; }
            s += c_[k].str() + "*" + var;
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd over K[t].
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    K li = a.leading().inv();
    return a * Poly<K>(li);
}

}  // namespace binforms
