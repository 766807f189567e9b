#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fields.hpp"
#include "matrix.hpp"

namespace binforms {

/// Integer divisor class on the blow-up tower of P_{d,e}, in the basis
/// O(1,0), O(0,1), E^1..E^{d-2}. The strict transform of the last
/// exceptional locus (the resultant divisor) is not a basis element: it is
/// the derived combination delta_class below. For d = 1 the relation
/// O(0,-1) = O(e,0) is applied eagerly, so xi = 0 always and the lattice
/// has rank 1.
struct PicClass {
    int d = 0, e = 0;
    long long h = 0, xi = 0;
    std::vector<long long> exc;  // coefficient of E^u at index u-1, u = 1..d-2

    friend bool operator==(const PicClass&, const PicClass&) = default;

    bool is_zero() const {
        if (h != 0 || xi != 0) return false;
        for (long long x : exc)
            if (x != 0) return false;
        return true;
    }
};

inline PicClass pic_zero(int d, int e) {
    if (d < 1 || d >= e) throw std::invalid_argument("pic: need 1 <= d < e");
    PicClass c;
    c.d = d;
    c.e = e;
    c.exc.assign(d >= 2 ? d - 2 : 0, 0);
    return c;
}

inline void pic_normalize(PicClass& c) {
    if (c.d == 1 && c.xi != 0) {
        c.h -= static_cast<long long>(c.e) * c.xi;  // O(0,1) = O(-e,0)
        c.xi = 0;
    }
}

inline PicClass pic_make(int d, int e, long long h, long long xi, std::vector<long long> exc = {}) {
    PicClass c = pic_zero(d, e);
    c.h = h;
    c.xi = xi;
    if (!exc.empty()) {
        if (exc.size() != c.exc.size())
            throw std::invalid_argument("pic: exceptional part must have length max(d-2,0)");
        c.exc = std::move(exc);
    }
    pic_normalize(c);
    return c;
}

inline void pic_check_same(const PicClass& a, const PicClass& b) {
    if (a.d != b.d || a.e != b.e) throw std::invalid_argument("pic: mixed lattices");
}

inline PicClass operator+(PicClass a, const PicClass& b) {
    pic_check_same(a, b);
    a.h += b.h;
    a.xi += b.xi;
    for (std::size_t i = 0; i < a.exc.size(); ++i) a.exc[i] += b.exc[i];
    pic_normalize(a);
    return a;
}

inline PicClass operator-(PicClass a, const PicClass& b) {
    pic_check_same(a, b);
    a.h -= b.h;
    a.xi -= b.xi;
    for (std::size_t i = 0; i < a.exc.size(); ++i) a.exc[i] -= b.exc[i];
    pic_normalize(a);
    return a;
}

inline PicClass operator*(long long n, PicClass a) {
    a.h *= n;
    a.xi *= n;
    for (auto& x : a.exc) x *= n;
    return a;
}

/// Class of the strict transform of the resultant divisor:
/// O(e,d)(-sum (d-u) E^u). Defined for d >= 2 (the divisor is empty for
/// d = 1).
inline PicClass delta_class(int d, int e) {
    if (d < 2) throw std::invalid_argument("delta_class: resultant divisor is empty for d = 1");
    PicClass c = pic_zero(d, e);
    c.h = e;
    c.xi = d;
    for (int u = 1; u <= d - 2; ++u) c.exc[u - 1] = -(d - u);
    return c;
}

/// Add n * E^v on the (d,e) lattice; v = d-1 is expanded through
/// delta_class.
inline void pic_add_exc(PicClass& c, int v, long long n) {
    if (n == 0) return;
    if (v < 1 || v > c.d - 1) throw std::invalid_argument("pic_add_exc: index out of range");
    if (v == c.d - 1) {
        c = c + n * delta_class(c.d, c.e);
    } else {
        c.exc[v - 1] += n;
    }
}

/// The semi-ample classes L^i = O(e-d+i, i)(-sum_{u<i} (i-u) E^u) for
/// 0 <= i <= d; L^d expands to the zero class (the triviality relation).
inline PicClass l_class(int d, int e, int i) {
    if (i < 0 || i > d) throw std::invalid_argument("l_class: need 0 <= i <= d");
    PicClass c = pic_zero(d, e);
    c.h = e - d + i;
    c.xi = i;
    pic_normalize(c);
    for (int u = 1; u <= i - 1; ++u) pic_add_exc(c, u, -(i - u));
    return c;
}

/// Restriction of a class to the u-th exceptional divisor, written on the
/// lattices of the two factors (d-u, e+u) and (u, e-d+u):
///   O(l,m)    -> (O(l+m,0), O(l,m))
///   E^v, v<u  -> (0, E^v)
///   E^v, v>u  -> (E^{v-u}, 0)
///   E^u       -> (O(1,-1), O(1,1) - sum_{w<u} E^w)
inline std::pair<PicClass, PicClass> restrict_class(int u, const PicClass& c) {
    int d = c.d, e = c.e;
    if (u < 1 || u > d - 1) throw std::invalid_argument("restrict_class: need 1 <= u <= d-1");
    PicClass first = pic_zero(d - u, e + u);
    PicClass second = pic_zero(u, e - d + u);

    first.h = c.h + c.xi;
    second.h = c.h;
    second.xi = c.xi;
    pic_normalize(first);
    pic_normalize(second);

    for (int v = 1; v <= d - 2; ++v) {
        long long n = c.exc[v - 1];
        if (n == 0) continue;
        if (v < u) {
            pic_add_exc(second, v, n);
        } else if (v > u) {
            pic_add_exc(first, v - u, n);
        } else {
            first = first + n * pic_make(d - u, e + u, 1, -1);
            second = second + n * pic_make(u, e - d + u, 1, 1);
            for (int w = 1; w <= u - 1; ++w) pic_add_exc(second, w, -n);
        }
    }
    return {first, second};
}

/// Coordinates of a class in the basis {L^0, ..., L^(d-1)}; exact rational
/// solve (the basis matrix is nonsingular for every 1 <= d < e).
inline std::vector<Rat> nef_coords(const PicClass& c) {
    int d = c.d;
    int n = d == 1 ? 1 : d;  // lattice rank
    Matrix<Rat> m(n, n + 1);
    auto coord = [&](const PicClass& x, int row) -> long long {
        if (row == 0) return x.h;
        if (row == 1) return x.xi;
        return x.exc[row - 2];
    };
    for (int i = 0; i < n; ++i) {
        PicClass li = l_class(c.d, c.e, i);
        for (int r = 0; r < n; ++r) m(r, i) = Rat(coord(li, r));
    }
    for (int r = 0; r < n; ++r) m(r, n) = Rat(coord(c, r));
    auto piv = m.rref();
    if (piv.size() != static_cast<std::size_t>(n) || piv.back() == static_cast<std::size_t>(n))
        throw std::domain_error("nef_coords: singular L-basis");
    std::vector<Rat> lambda(n);
    for (int r = 0; r < n; ++r) lambda[r] = m(r, n);
    return lambda;
}

inline bool is_nef(const PicClass& c) {
    for (const Rat& x : nef_coords(c))
        if (x.value() < 0) return false;
    return true;
}

/// Generators of the effective cone: the fibration class O(1,0) and the
/// resultant divisor class.
inline std::pair<PicClass, PicClass> eff_generators(int d, int e) {
    return {pic_make(d, e, 1, 0), delta_class(d, e)};
}

}  // namespace binforms
