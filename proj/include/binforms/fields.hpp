#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace binforms {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (mpq_class canonical form).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        v.canonicalize();
        return Rat(std::move(v));
    }

    bool is_zero() const { return v_ == 0; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(1 / v_);
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { return Rat(mpq_class(-v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.get_str(); }

    const mpq_class& value() const { return v_; }

  private:
    mpq_class v_;
};

/// Prime-field residue, value in [0,p). Elements with modulus 0 act as plain
/// integers (used for literals like 0 and 1 inside generic code); any
/// operation with a modular element promotes them.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(long long v) : v_(v), p_(0) {}
    Fp(long long v, long long p) : v_(v), p_(p) { reduce(); }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp inv() const {
        if (p_ == 0) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("Fp: inverse of non-unit integer");
        }
        if (v_ == 0) throw std::domain_error("Fp: division by zero");
        long long r0 = p_, r1 = v_, s0 = 0, s1 = 1;
        while (r1 != 0) {
            long long q = r0 / r1;
            long long r2 = r0 - q * r1; r0 = r1; r1 = r2;
            long long s2 = s0 - q * s1; s0 = s1; s1 = s2;
        }
        if (r0 != 1) throw std::domain_error("Fp: modulus not prime?");
        return Fp(s0, p_);
    }

    Fp& operator+=(const Fp& o) { promote(o); v_ += o.v_; reduce(); return *this; }
    Fp& operator-=(const Fp& o) { promote(o); v_ -= o.v_; reduce(); return *this; }
    Fp& operator*=(const Fp& o) { promote(o); v_ *= o.v_; reduce(); return *this; }
    Fp& operator/=(const Fp& o) {
        promote(o);
        Fp i = Fp(o.v_, p_).inv();
        v_ *= i.v_;
        reduce();
        return *this;
    }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    Fp operator-() const { return p_ == 0 ? Fp(-v_) : Fp(p_ - v_, p_); }

    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ == b.p_) return a.v_ == b.v_;
        long long p = a.p_ ? a.p_ : b.p_;
        return Fp(a.v_, p).v_ == Fp(b.v_, p).v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

  private:
    void reduce() {
        if (p_ == 0) return;
        v_ %= p_;
        if (v_ < 0) v_ += p_;
    }
    void promote(const Fp& o) {
        if (p_ == 0) { p_ = o.p_; reduce(); }
        else if (o.p_ != 0 && o.p_ != p_)
            throw std::domain_error("Fp: mixed moduli");
    }

    long long v_;
    long long p_;
};

inline long long pow_mod(long long b, long long e, long long p) {
    long long r = 1 % p;
    b %= p; if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

/// Reduction rule for the canonical degree-2 extension of GF(p):
/// w^2 = s*w + t.  For odd p take w^2 = n with n the least non-residue;
/// for p = 2 take w^2 = w + 1.
struct Fp2Params { long long s, t; };

inline Fp2Params fp2_params(long long p) {
    if (p == 2) return {1, 1};
    for (long long n = 2; n < p; ++n)
        if (pow_mod(n, (p - 1) / 2, p) == p - 1) return {0, n};
    throw std::domain_error("fp2_params: no non-residue (p not an odd prime?)");
}

/// Element a + b*w of GF(p^2), with w as in fp2_params. Modulus 0 keeps
/// integer semantics exactly as in Fp.
class Fp2 {
  public:
    Fp2() : a_(0), b_(0), p_(0) {}
    Fp2(long long a) : a_(a), b_(0), p_(0) {}
    Fp2(long long a, long long b, long long p) : a_(a), b_(b), p_(p) { reduce(); }
    static Fp2 embed(const Fp& x, long long p) { return Fp2(x.value(), 0, p); }
    static Fp2 gen(long long p) { return Fp2(0, 1, p); }

    long long re() const { return a_; }
    long long im() const { return b_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool in_prime_field() const { return b_ == 0; }

    Fp2 inv() const {
        if (p_ == 0) {
            if (b_ == 0 && (a_ == 1 || a_ == -1)) return *this;
            throw std::domain_error("Fp2: inverse of non-unit integer");
        }
        if (is_zero()) throw std::domain_error("Fp2: division by zero");
        // (a+bw)(x+yw) = ax + tby + (bx + (a+sb)y) w = 1
        auto [s, t] = fp2_params(p_);
        Fp A(a_, p_), B(b_, p_), S(s, p_), T(t, p_);
        Fp det = A * (A + S * B) - T * B * B;   // determinant of the 2x2 system
        Fp di = det.inv();
        Fp x = (A + S * B) * di;
        Fp y = (-B) * di;
        return Fp2(x.value(), y.value(), p_);
    }

    Fp2& operator+=(const Fp2& o) { promote(o); a_ += o.a_; b_ += o.b_; reduce(); return *this; }
    Fp2& operator-=(const Fp2& o) { promote(o); a_ -= o.a_; b_ -= o.b_; reduce(); return *this; }
    Fp2& operator*=(const Fp2& o) {
        promote(o);
        if (p_ == 0) {
            if (b_ != 0 || o.b_ != 0) throw std::domain_error("Fp2: integer semantics");
            a_ *= o.a_;
            return *this;
        }
        auto [s, t] = fp2_params(p_);
        long long a1 = a_ % p_, b1 = b_ % p_, a2 = o.a_ % p_, b2 = o.b_ % p_;
        long long bb = (b1 * b2) % p_;
        long long na = ((a1 * a2) % p_ + (t % p_) * bb % p_) % p_;
        long long nb = (((a1 * b2) % p_ + (a2 * b1) % p_) % p_ + (s % p_) * bb % p_) % p_;
        a_ = na; b_ = nb;
        reduce();
        return *this;
    }
    Fp2& operator/=(const Fp2& o) { return *this *= o.inv(); }
    friend Fp2 operator+(Fp2 a, const Fp2& b) { return a += b; }
    friend Fp2 operator-(Fp2 a, const Fp2& b) { return a -= b; }
    friend Fp2 operator*(Fp2 a, const Fp2& b) { return a *= b; }
    friend Fp2 operator/(Fp2 a, const Fp2& b) { return a /= b; }
    Fp2 operator-() const { return p_ == 0 ? Fp2(-a_) : Fp2(p_ - a_, p_ - b_, p_); }

    friend bool operator==(const Fp2& a, const Fp2& b) {
        long long p = a.p_ ? a.p_ : b.p_;
        if (p == 0) return a.a_ == b.a_ && a.b_ == b.b_;
        return Fp2(a.a_, a.b_, p) .a_ == Fp2(b.a_, b.b_, p).a_ &&
               Fp2(a.a_, a.b_, p).b_ == Fp2(b.a_, b.b_, p).b_;
    }
    friend bool operator!=(const Fp2& a, const Fp2& b) { return !(a == b); }

    std::string str() const {
        if (b_ == 0) return std::to_string(a_);
        std::string s = std::to_string(a_) + "+" + std::to_string(b_) + "*w";
        return s;
    }

  private:
    void reduce() {
        if (p_ == 0) return;
        a_ %= p_; if (a_ < 0) a_ += p_;
        b_ %= p_; if (b_ < 0) b_ += p_;
    }
    void promote(const Fp2& o) {
        if (p_ == 0) { p_ = o.p_; reduce(); }
        else if (o.p_ != 0 && o.p_ != p_)
            throw std::domain_error("Fp2: mixed moduli");
    }

    long long a_, b_, p_;
};

/// Per-field context needed to materialize scalars from integers or strings
/// (GF(p) needs its modulus; the rationals need nothing).
template <class K> struct FieldCtx;

template <> struct FieldCtx<Rat> {
    Rat from_int(long long n) const { return Rat(n); }
    Rat from_string(const std::string& s) const { return Rat::from_string(s); }
    std::string name() const { return "q"; }
};

inline long long parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("bad integer literal '" + s + "'");
    return std::stoll(s);
}

template <> struct FieldCtx<Fp> {
    long long p = 0;
    Fp from_int(long long n) const { return Fp(n, p); }
    Fp from_string(const std::string& s) const { return Fp(parse_decimal(s), p); }
    std::string name() const { return "fp:" + std::to_string(p); }
};

template <> struct FieldCtx<Fp2> {
    long long p = 0;
    Fp2 from_int(long long n) const { return Fp2(n, 0, p); }
    Fp2 from_string(const std::string& s) const { return Fp2(parse_decimal(s), 0, p); }
    std::string name() const { return "fp2:" + std::to_string(p); }
};

}  // namespace binforms
