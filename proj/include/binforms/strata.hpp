#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fields.hpp"
#include "forms.hpp"
#include "subspace.hpp"

namespace binforms {

/// Point [F,G] of P_{d,e}: F nonzero of degree d, monic-normalized; G the
/// canonical representative of its class modulo <F>_e (zero entries at the
/// pivot columns of the RREF basis of <F>_e, first nonzero coefficient 1).
/// Equality of points is bit-equality of the representatives.
template <class K>
struct ParamPoint {
    int d = 0, e = 0;
    BinaryForm<K> F, G;

    friend bool operator==(const ParamPoint& a, const ParamPoint& b) {
        return a.d == b.d && a.e == b.e && a.F == b.F && a.G == b.G;
    }
};

template <class K>
ParamPoint<K> canonicalize(const BinaryForm<K>& F, const BinaryForm<K>& G) {
    if (F.is_zero()) throw std::invalid_argument("canonicalize: F must be nonzero");
    if (G.degree() <= F.degree())
        throw std::invalid_argument("canonicalize: need deg F < deg G");
    BinaryForm<K> r = multiples_of(F, G.degree()).reduce(G);
    if (r.is_zero()) throw std::domain_error("canonicalize: zero class (G is a multiple of F)");
    ParamPoint<K> p;
    p.d = F.degree();
    p.e = G.degree();
    p.F = normalized(F);
    p.G = normalized(r);
    return p;
}

struct Stratum {
    int g = 0;  // deg gcd(F, G)
    int u = 0;  // = d - g
    bool in_delta() const { return g >= 1; }
};

template <class K>
Stratum stratum(const ParamPoint<K>& p) {
    Stratum s;
    s.g = form_gcd(p.F, p.G).degree();
    s.u = p.d - s.g;
    return s;
}

/// mu^u([A],[B,C]) = [AB, AC].
template <class K>
ParamPoint<K> mu(int u, const BinaryForm<K>& A, const ParamPoint<K>& BC) {
    if (A.is_zero()) throw std::invalid_argument("mu: A must be nonzero");
    if (BC.d != u) throw std::invalid_argument("mu: point must lie in P_{u, e-d+u}");
    return canonicalize(A * BC.F, A * BC.G);
}

/// The differential of the multiplication map at (A,B,C): the matrix of
/// (H,I,J) -> (BH+AI, CH+AJ) from V_{d-u}/<A> + V_u/<B> + V_{e-d+u}/<C>
/// into V_d/<AB> + V_e/<AC>, in the canonical monomial quotient bases.
template <class K>
struct DmuResult {
    Matrix<K> matrix;  // rows = domain quotient basis, cols = target quotient coordinates
    int rank = 0;
    int kernel_dim = 0;
    int corank = 0;
};

namespace detail {

/// Quotient coordinates of a vector modulo the span of a single form: the
/// entries of the residue at the non-pivot columns.
template <class K>
std::vector<K> quotient_coords(const Subspace<K>& span1, const BinaryForm<K>& v) {
    BinaryForm<K> r = span1.reduce(v);
    std::vector<K> out;
    std::size_t piv = span1.pivots().empty() ? static_cast<std::size_t>(-1) : span1.pivots()[0];
    for (int j = 0; j <= v.degree(); ++j)
        if (static_cast<std::size_t>(j) != piv) out.push_back(r.coeff(j));
    return out;
}

}  // namespace detail

template <class K>
DmuResult<K> dmu_matrix(int u, const BinaryForm<K>& A, const BinaryForm<K>& B,
                        const BinaryForm<K>& C) {
    if (A.is_zero() || B.is_zero() || C.is_zero())
        throw std::invalid_argument("dmu_matrix: forms must be nonzero");
    int d = A.degree() + B.degree();
    int e = A.degree() + C.degree();
    if (B.degree() != u || d <= u || e <= d)
        throw std::invalid_argument("dmu_matrix: degenerate degrees");

    auto spanA = Subspace<K>::span(A.degree(), {A});
    auto spanB = Subspace<K>::span(B.degree(), {B});
    auto spanC = Subspace<K>::span(C.degree(), {C});
    auto spanAB = Subspace<K>::span(d, {A * B});
    auto spanAC = Subspace<K>::span(e, {A * C});

    // domain quotient bases: monomials away from the pivot of each line
    struct DomEntry { int which; int j; };
    std::vector<DomEntry> dom;
    auto add_dom = [&dom](int which, const Subspace<K>& s, int deg) {
        std::size_t piv = s.pivots()[0];
        for (int j = 0; j <= deg; ++j)
            if (static_cast<std::size_t>(j) != piv) dom.push_back({which, j});
    };
    add_dom(0, spanA, A.degree());
    add_dom(1, spanB, B.degree());
    add_dom(2, spanC, C.degree());

    DmuResult<K> out;
    out.matrix = Matrix<K>(dom.size(), d + e);
    for (std::size_t r = 0; r < dom.size(); ++r) {
        BinaryForm<K> img_d(d), img_e(e);
        if (dom[r].which == 0) {
            auto H = BinaryForm<K>::monomial(A.degree(), dom[r].j);
            img_d = B * H;
            img_e = C * H;
        } else if (dom[r].which == 1) {
            auto I = BinaryForm<K>::monomial(B.degree(), dom[r].j);
            img_d = A * I;
        } else {
            auto J = BinaryForm<K>::monomial(C.degree(), dom[r].j);
            img_e = A * J;
        }
        std::vector<K> cd = detail::quotient_coords(spanAB, img_d);
        std::vector<K> ce = detail::quotient_coords(spanAC, img_e);
        for (std::size_t k = 0; k < cd.size(); ++k) out.matrix(r, k) = cd[k];
        for (std::size_t k = 0; k < ce.size(); ++k) out.matrix(r, cd.size() + k) = ce[k];
    }
    out.rank = static_cast<int>(out.matrix.rank());
    out.kernel_dim = static_cast<int>(dom.size()) - out.rank;
    out.corank = d + e - out.rank;
    return out;
}

/// True when (F,G) lies in the image of the differential at (A,B,C):
/// appending the quotient coordinates of (F,G) does not raise the rank.
template <class K>
bool dmu_image_contains(int u, const BinaryForm<K>& A, const BinaryForm<K>& B,
                        const BinaryForm<K>& C, const BinaryForm<K>& F,
                        const BinaryForm<K>& G) {
    int d = A.degree() + B.degree();
    int e = A.degree() + C.degree();
    if (F.degree() != d || G.degree() != e)
        throw std::invalid_argument("dmu_image_contains: degree mismatch");
    DmuResult<K> base = dmu_matrix(u, A, B, C);
    auto spanAB = Subspace<K>::span(d, {A * B});
    auto spanAC = Subspace<K>::span(e, {A * C});
    std::vector<K> cd = detail::quotient_coords(spanAB, F);
    std::vector<K> ce = detail::quotient_coords(spanAC, G);
    cd.insert(cd.end(), ce.begin(), ce.end());
    Matrix<K> aug = base.matrix;
    aug.append_row(cd);
    return static_cast<int>(aug.rank()) == base.rank;
}

/// Do the multiples of A, B, C span V_m? (m = e+u in the spanning lemma.)
template <class K>
bool koszul_span_check(const BinaryForm<K>& A, const BinaryForm<K>& B, const BinaryForm<K>& C,
                       int m) {
    Subspace<K> s = multiples_of(A, m);
    s = sum(s, multiples_of(B, m));
    s = sum(s, multiples_of(C, m));
    return s.is_full();
}

/// Count the monic degree-(d-v) factors of a split degree-(d-u) form with
/// distinct roots, and compare with binomial(d-u, d-v); the factor count is
/// an honest enumeration of root subsets with divisibility and distinctness
/// verified.
template <class K>
bool fiber_degree_check(int d, int u, int v, const FieldCtx<K>& ctx) {
    if (!(1 <= u && u <= v && v < d)) throw std::invalid_argument("fiber_degree_check: need u <= v < d");
    int n = d - u;   // number of distinct roots
    int k = d - v;   // factor degree
    // split form with roots 0, 1, ..., n-1 (needs n distinct field elements)
    std::vector<BinaryForm<K>> lin;
    for (int r = 0; r < n; ++r) {
        BinaryForm<K> f(1);
        f.coeff(0) = ctx.from_int(1);
        f.coeff(1) = -ctx.from_int(r);
        lin.push_back(f);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (lin[i] == lin[j]) throw std::domain_error("fiber_degree_check: field too small");
    BinaryForm<K> split(0, {ctx.from_int(1)});
    for (const auto& f : lin) split = split * f;

    std::set<std::string> factors;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    long long count = 0;
    for (;;) {
        BinaryForm<K> prod(0, {ctx.from_int(1)});
        for (int i : idx) prod = prod * lin[i];
        prod = normalized(prod);
        form_divexact(split, prod);  // throws if not a factor
        factors.insert(prod.str());
        ++count;
        // next subset
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    return count == binom && static_cast<long long>(factors.size()) == binom;
}

/// Dimensions of the strata of the i-th contracted model: i strata
/// isomorphic to open parts of P_{d-j,e+j} (dimension 2(d-j)-1) and a final
/// stratum P_{d-i} (dimension d-i).
inline std::vector<int> pbar_stratum_dims(int d, int e, int i) {
    if (!(0 <= i && i < d) || d >= e) throw std::invalid_argument("pbar_stratum_dims: bad (d,e,i)");
    std::vector<int> dims;
    for (int j = 0; j < i; ++j) dims.push_back(2 * (d - j) - 1);
    dims.push_back(d - i);
    return dims;
}

/// Boundary codimension of the final model (i = d-1): the ambient has
/// dimension 2d-1 and the largest boundary stratum 2d-3.
inline int compactification_boundary_codim(int d, int e) {
    auto dims = pbar_stratum_dims(d, e, d - 1);
    int ambient = dims[0];
    int best = -1;
    for (std::size_t j = 1; j < dims.size(); ++j)
        if (dims[j] > best) best = dims[j];
    return ambient - best;
}

// --- exhaustive census over GF(p) ------------------------------------------

struct CensusResult {
    int d = 0, e = 0;
    long long p = 0;
    long long total = 0;
    std::vector<long long> stratum_counts;  // index u = 1..d (entry u-1)
    long long delta_by_gcd = 0;
    long long delta_by_resultant = -1;  // only when requested

    long long w_count(int u) const {  // |W^u| = # points with stratum <= u
        long long c = 0;
        for (int v = 1; v <= u; ++v) c += stratum_counts[v - 1];
        return c;
    }
};

namespace detail {

inline long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/// Enumerate canonical projective representatives in GF(p)^{n}: first
/// nonzero coordinate equal to 1. Calls fn(coeffs).
template <class Fn>
void enumerate_projective(long long p, int n, Fn&& fn) {
    std::vector<long long> c(n, 0);
    for (int lead = 0; lead < n; ++lead) {
        // c[lead] = 1, c[i] = 0 for i < lead, free above
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        int free = n - lead - 1;
        long long count = ipow(p, free);
        for (long long idx = 0; idx < count; ++idx) {
            long long x = idx;
            for (int i = lead + 1; i < n; ++i) {
                c[i] = x % p;
                x /= p;
            }
            fn(c);
        }
    }
}

}  // namespace detail

/// Exhaustive stratum census of P_{d,e}(GF(p)): canonical representatives
/// are enumerated exactly once. When with_resultant is set, the resultant
/// oracle is run alongside the gcd oracle.
inline CensusResult census(int d, int e, long long p, int threads = 1,
                           bool with_resultant = false) {
    if (d < 1 || d >= e) throw std::invalid_argument("census: need 1 <= d < e");
    if (p < 2) throw std::invalid_argument("census: p must be a prime");
    CensusResult out;
    out.d = d;
    out.e = e;
    out.p = p;
    out.stratum_counts.assign(d, 0);
    if (with_resultant) out.delta_by_resultant = 0;

    // collect the canonical F list first, then scan fibers (parallel over F)
    std::vector<BinaryForm<Fp>> Fs;
    detail::enumerate_projective(p, d + 1, [&](const std::vector<long long>& c) {
        BinaryForm<Fp> F(d);
        for (int j = 0; j <= d; ++j) F.coeff(j) = Fp(c[j], p);
        Fs.push_back(F);
    });

    int nthreads = threads < 1 ? 1 : threads;
    std::vector<CensusResult> parts(nthreads, out);
    auto work = [&](int tid) {
        CensusResult& acc = parts[tid];
        for (std::size_t fi = tid; fi < Fs.size(); fi += nthreads) {
            const BinaryForm<Fp>& F = Fs[fi];
            Subspace<Fp> multF = multiples_of(F, e);
            std::vector<bool> is_pivot(e + 1, false);
            for (std::size_t c : multF.pivots()) is_pivot[c] = true;
            std::vector<int> free_cols;
            for (int j = 0; j <= e; ++j)
                if (!is_pivot[j]) free_cols.push_back(j);
            // canonical G representatives: projective vectors in the free columns
            detail::enumerate_projective(p, static_cast<int>(free_cols.size()),
                                         [&](const std::vector<long long>& c) {
                BinaryForm<Fp> G(e);
                for (std::size_t i = 0; i < free_cols.size(); ++i)
                    G.coeff(free_cols[i]) = Fp(c[i], p);
                ++acc.total;
                int g = form_gcd(F, G).degree();
                int u = d - g;
                ++acc.stratum_counts[u - 1];
                if (g >= 1) ++acc.delta_by_gcd;
                if (acc.delta_by_resultant >= 0 && resultant(F, G).is_zero())
                    ++acc.delta_by_resultant;
            });
        }
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& part : parts) {
        out.total += part.total;
        out.delta_by_gcd += part.delta_by_gcd;
        if (out.delta_by_resultant >= 0) out.delta_by_resultant += part.delta_by_resultant;
        for (int u = 1; u <= d; ++u) out.stratum_counts[u - 1] += part.stratum_counts[u - 1];
    }
    return out;
}

}  // namespace binforms
