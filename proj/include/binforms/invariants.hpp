#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fields.hpp"
#include "matrix.hpp"

namespace binforms {

/// Sparse multivariate polynomial over the rationals; exponent vectors have
/// a fixed length shared by all terms. Only what the derivation-kernel
/// computations need: ring operations and partial derivatives.
class MultiPoly {
  public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly variable(int idx, int nvars) {
        MultiPoly p(nvars);
        std::vector<int> exp(nvars, 0);
        exp[idx] = 1;
        p.terms_[exp] = Rat(1);
        return p;
    }
    static MultiPoly constant(const Rat& c, int nvars) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[std::vector<int>(nvars, 0)] = c;
        return p;
    }
    static MultiPoly monomial(std::vector<int> exp, const Rat& c) {
        MultiPoly p(static_cast<int>(exp.size()));
        if (!c.is_zero()) p.terms_[std::move(exp)] = c;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& o) {
        merge_with(o, Rat(1));
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        merge_with(o, Rat(-1));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend MultiPoly operator*(const Rat& s, MultiPoly p) {
        if (s.is_zero()) return MultiPoly(p.nvars_);
        for (auto& [e, c] : p.terms_) c = s * c;
        return p;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars_ ? a.nvars_ : b.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                Rat& slot = r.terms_[e];
                slot += ca * cb;
                if (slot.is_zero()) r.terms_.erase(e);
            }
        return r;
    }

    MultiPoly derivative(int idx) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            std::vector<int> f = e;
            f[idx] -= 1;
            r.terms_[f] = c * Rat(e[idx]);
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

  private:
    void merge_with(const MultiPoly& o, const Rat& s) {
        if (nvars_ == 0) nvars_ = o.nvars_;
        for (const auto& [e, c] : o.terms_) {
            Rat& slot = terms_[e];
            slot += s * c;
            if (slot.is_zero()) terms_.erase(e);
        }
    }

    int nvars_;
    std::map<std::vector<int>, Rat> terms_;
};

/// Coordinate ring of V_d x V_e over the rationals: variables a_0..a_d then
/// b_0..b_e. The additive action G -> G + H F of H = X0^{e-d-j} X1^j has
/// infinitesimal generator D_j = sum_m a_{m-j} d/db_m.
struct CoordRing {
    int d, e;
    int nvars() const { return d + e + 2; }
    int a_var(int i) const { return i; }
    int b_var(int m) const { return d + 1 + m; }

    MultiPoly a(int i) const { return MultiPoly::variable(a_var(i), nvars()); }
    MultiPoly b(int m) const { return MultiPoly::variable(b_var(m), nvars()); }

    MultiPoly derivation(int j, const MultiPoly& p) const {
        if (j < 0 || j > e - d) throw std::invalid_argument("derivation: need 0 <= j <= e-d");
        MultiPoly out(nvars());
        for (int m = j; m <= e && m - j <= d; ++m)
            out += a(m - j) * p.derivative(b_var(m));
        return out;
    }
};

/// Monomial basis of the bidegree-(adeg, bdeg) slice, ordered
/// lexicographically on the exponent vectors.
inline std::vector<std::vector<int>> slice_basis(const CoordRing& R, int adeg, int bdeg) {
    std::vector<std::vector<int>> amons, bmons;
    std::vector<int> cur(R.d + 1, 0);
    auto rec_a = [&](auto&& self, int pos, int left) -> void {
        if (pos == R.d) {
            cur[pos] = left;
            amons.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec_a(rec_a, 0, adeg);
    std::vector<int> curb(R.e + 1, 0);
    auto rec_b = [&](auto&& self, int pos, int left) -> void {
        if (pos == R.e) {
            curb[pos] = left;
            bmons.push_back(curb);
            return;
        }
        for (int k = left; k >= 0; --k) {
            curb[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec_b(rec_b, 0, bdeg);

    std::vector<std::vector<int>> basis;
    for (const auto& am : amons)
        for (const auto& bm : bmons) {
            std::vector<int> exp(R.nvars(), 0);
            for (int i = 0; i <= R.d; ++i) exp[R.a_var(i)] = am[i];
            for (int m = 0; m <= R.e; ++m) exp[R.b_var(m)] = bm[m];
            basis.push_back(std::move(exp));
        }
    return basis;
}

inline long long slice_dimension(const CoordRing& R, int adeg, int bdeg) {
    auto binom = [](long long n, long long k) {
        long long r = 1;
        for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    return binom(adeg + R.d, R.d) * binom(bdeg + R.e, R.e);
}

/// Matrix of D_j from the (adeg, bdeg) slice to the (adeg+1, bdeg-1) slice,
/// rows indexed by the source monomials, columns by the target monomials.
/// Characteristic zero only: the derivation-kernel criterion for invariance
/// needs it.
inline Matrix<Rat> derivation_matrix(const CoordRing& R, int j, int adeg, int bdeg) {
    auto src = slice_basis(R, adeg, bdeg);
    auto dst = slice_basis(R, adeg + 1, bdeg - 1);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t k = 0; k < dst.size(); ++k) index[dst[k]] = k;
    Matrix<Rat> m(src.size(), dst.size());
    for (std::size_t r = 0; r < src.size(); ++r) {
        MultiPoly img = R.derivation(j, MultiPoly::monomial(src[r], Rat(1)));
        for (const auto& [exp, c] : img.terms()) {
            auto it = index.find(exp);
            if (it == index.end()) throw std::domain_error("derivation_matrix: image out of slice");
            m(r, it->second) = c;
        }
    }
    return m;
}

/// Dimension of the joint kernel of all the D_j on the (adeg, bdeg) slice.
inline int invariant_dimension(int d, int e, int adeg, int bdeg) {
    if (d < 1 || d >= e) throw std::invalid_argument("invariant_dimension: need 1 <= d < e");
    CoordRing R{d, e};
    auto src = slice_basis(R, adeg, bdeg);
    if (bdeg == 0) return static_cast<int>(src.size());  // the action fixes the a-variables
    std::vector<Matrix<Rat>> blocks;
    std::size_t total = 0;
    for (int j = 0; j <= e - d; ++j) {
        blocks.push_back(derivation_matrix(R, j, adeg, bdeg));
        total += blocks.back().cols();
    }
    Matrix<Rat> m(src.size(), total);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) m(r, off + c) = b(r, c);
        off += b.cols();
    }
    return static_cast<int>(src.size() - m.rank());
}

/// Invariant dimensions for d = 1 against the free commutative ring on two
/// generators of bidegree (1,0) and one of bidegree (e,1): the count of
/// monomials x^i y^j R^b with i+j = a - e*b.
inline bool series_vs_free_ring(int e, int amax, int bmax) {
    for (int a = 0; a <= amax; ++a)
        for (int b = 0; b <= bmax; ++b) {
            int expect = a - e * b >= 0 ? a - e * b + 1 : 0;
            if (invariant_dimension(1, e, a, b) != expect) return false;
        }
    return true;
}

/// Sylvester resultant with symbolic coefficients, same row convention as
/// the scalar version (the d rows of b-coefficients first).
inline MultiPoly resultant_sym(int d, int e) {
    CoordRing R{d, e};
    int n = d + e;
    std::vector<std::vector<MultiPoly>> m(n, std::vector<MultiPoly>(n, MultiPoly(R.nvars())));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= e; ++j) m[i][i + j] = R.b(j);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j <= d; ++j) m[d + i][i + j] = R.a(j);

    // Laplace expansion along the first rows; fine at the desk sizes used
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i;
    auto rec = [&](auto&& self, int row, std::vector<int>& live) -> MultiPoly {
        if (live.empty()) return MultiPoly::constant(Rat(1), R.nvars());
        MultiPoly acc(R.nvars());
        for (std::size_t k = 0; k < live.size(); ++k) {
            const MultiPoly& entry = m[row][live[k]];
            if (entry.is_zero()) continue;
            std::vector<int> rest;
            for (std::size_t i = 0; i < live.size(); ++i)
                if (i != k) rest.push_back(live[i]);
            MultiPoly sub = self(self, row + 1, rest);
            MultiPoly term = entry * sub;
            acc += (k % 2 == 0) ? term : -term;
        }
        return acc;
    };
    return rec(rec, 0, cols);
}

/// D_j annihilates the resultant: checked symbolically.
inline bool resultant_is_invariant(int d, int e) {
    CoordRing R{d, e};
    MultiPoly res = resultant_sym(d, e);
    for (int j = 0; j <= e - d; ++j)
        if (!R.derivation(j, res).is_zero()) return false;
    return true;
}

}  // namespace binforms
