#pragma once

#include <stdexcept>
#include <vector>

#include "ideals.hpp"
#include "strata.hpp"
#include "tpoly.hpp"

namespace binforms {

/// One-parameter family [F_t, G_t] of pairs; coefficients are polynomials
/// in t. The family is expected to be interior at generic t.
template <class K>
struct TFamily {
    int d = 0, e = 0;
    TForm<K> F, G;
};

namespace tlin {

template <class K>
using PRow = std::vector<Poly<K>>;

template <class K>
bool row_is_zero(const PRow<K>& r) {
    for (const auto& p : r)
        if (!p.is_zero()) return false;
    return true;
}

template <class K>
void row_clear_content(PRow<K>& r) {
    Poly<K> g;
    for (const auto& p : r) {
        g = poly_gcd(g, p);
        if (g.deg() == 0) break;
    }
    if (g.is_zero() || g.deg() == 0) return;
    for (auto& p : r) p = p / g;
}

template <class K>
int row_lead(const PRow<K>& r) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (!r[j].is_zero()) return static_cast<int>(j);
    return -1;
}

/// Fraction-free echelon pass: returns rows independent over k(t) spanning
/// the same k(t)-row space, with strictly distinct leading columns, sorted
/// by leading column and content-cleared. Incoming rows are reduced against
/// every accepted row before insertion, so leads stay distinct.
template <class K>
std::vector<PRow<K>> echelon_spanning(std::vector<PRow<K>> rows) {
    std::vector<PRow<K>> ech;  // kept sorted by leading column
    for (auto& w : rows) {
        row_clear_content(w);
        for (const auto& e : ech) {
            int c = row_lead(e);
            if (c < 0 || w[c].is_zero()) continue;
            Poly<K> piv = e[c], coef = w[c];
            for (std::size_t j = 0; j < w.size(); ++j) w[j] = piv * w[j] - coef * e[j];
            row_clear_content(w);
        }
        if (row_is_zero(w)) continue;
        auto pos = ech.begin();
        while (pos != ech.end() && row_lead(*pos) < row_lead(w)) ++pos;
        ech.insert(pos, std::move(w));
    }
    return ech;
}

/// Full fraction-free Gauss-Jordan: after the echelon pass, clear the
/// entries above each pivot, walking the pivots from last to first so that
/// already-final rows never get re-polluted.
template <class K>
std::vector<PRow<K>> jordan(std::vector<PRow<K>> rows) {
    auto ech = echelon_spanning(std::move(rows));
    for (std::size_t ii = ech.size(); ii-- > 0;) {
        for (std::size_t j = ii + 1; j < ech.size(); ++j) {
            int c = row_lead(ech[j]);
            if (ech[ii][c].is_zero()) continue;
            Poly<K> piv = ech[j][c], coef = ech[ii][c];
            for (std::size_t k = 0; k < ech[ii].size(); ++k)
                ech[ii][k] = piv * ech[ii][k] - coef * ech[j][k];
            row_clear_content(ech[ii]);
        }
    }
    return ech;
}

/// Reduce a vector against Jordan-form rows by cross-multiplication; the
/// result (defined up to scalars of k(t)) has zero entries at the pivots.
template <class K>
PRow<K> reduce_against(PRow<K> v, const std::vector<PRow<K>>& jordan_rows) {
    for (const auto& r : jordan_rows) {
        int c = row_lead(r);
        if (v[c].is_zero()) continue;
        Poly<K> piv = r[c], coef = v[c];
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = piv * v[j] - coef * r[j];
        row_clear_content(v);
    }
    return v;
}

template <class K>
PRow<K> tform_to_row(const TForm<K>& f) {
    PRow<K> r(f.degree() + 1);
    for (int j = 0; j <= f.degree(); ++j) r[j] = f.coeff(j);
    return r;
}

/// Rows of all monomial multiples of f in degree l.
template <class K>
void append_multiple_rows(std::vector<PRow<K>>& rows, const TForm<K>& f, int l) {
    int k = l - f.degree();
    if (k < 0) return;
    for (int beta = 0; beta <= k; ++beta) {
        PRow<K> r(l + 1);
        for (int j = 0; j <= f.degree(); ++j) r[j + beta] = f.coeff(j);
        rows.push_back(std::move(r));
    }
}

template <class K>
BinaryForm<K> eval0_row(const PRow<K>& r) {
    BinaryForm<K> f(static_cast<int>(r.size()) - 1);
    for (std::size_t j = 0; j < r.size(); ++j) f.coeff(j) = r[j].coeff(0);
    return f;
}

}  // namespace tlin

/// t-saturated limit of the span of the given k[t]-rows at t=0: repeatedly
/// replace a generator by a vanishing k-combination divided by t, until the
/// t=0 evaluations are independent. Returns a subspace of the same
/// dimension as the generic rank (flatness), or throws when the iteration
/// guard trips (non-flat input such as identically proportional rows).
template <class K>
Subspace<K> saturated_limit(std::vector<tlin::PRow<K>> rows, int degree) {
    using tlin::PRow;
    auto gens = tlin::echelon_spanning(std::move(rows));
    int r = static_cast<int>(gens.size());
    if (r == 0) return Subspace<K>::zero(degree);

    int maxdeg = 0;
    for (const auto& row : gens)
        for (const auto& p : row)
            if (p.deg() > maxdeg) maxdeg = p.deg();
    long long guard = static_cast<long long>(r) * (maxdeg + 1) + 8;

    for (long long step = 0;; ++step) {
        if (step > guard)
            throw std::domain_error("saturated_limit: valuation bound exceeded (non-flat input)");
        Matrix<K> ev(r, degree + 1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j <= degree; ++j) ev(i, j) = gens[i][j].coeff(0);
        auto kern = ev.left_kernel();
        if (kern.empty()) break;
        const std::vector<K>& c = kern.front();
        PRow<K> w(degree + 1);
        for (int i = 0; i < r; ++i) {
            if (c[i].is_zero()) continue;
            for (int j = 0; j <= degree; ++j) w[j] += Poly<K>(c[i]) * gens[i][j];
        }
        int repl = -1;
        for (int i = r - 1; i >= 0; --i)
            if (!c[i].is_zero()) { repl = i; break; }
        if (repl < 0 || tlin::row_is_zero(w))
            throw std::domain_error("saturated_limit: degenerate kernel combination");
        for (auto& p : w) p = p.is_zero() ? p : p.shifted_down(1);
        tlin::row_clear_content(w);
        gens[repl] = std::move(w);
    }

    std::vector<BinaryForm<K>> evs;
    for (const auto& row : gens) evs.push_back(tlin::eval0_row(row));
    Subspace<K> lim = Subspace<K>::span(degree, evs);
    if (lim.dim() != r)
        throw std::domain_error("saturated_limit: flatness assertion failed");
    return lim;
}

template <class K>
Poly<K> resultant_profile(const TFamily<K>& fam) {
    return resultant(fam.F, fam.G);
}

/// Exact generic-fiber check: the resultant profile is not identically zero
/// and the class of G_t modulo <F_t> is nonzero over k(t).
template <class K>
bool generic_interior(const TFamily<K>& fam) {
    if (resultant_profile(fam).is_zero()) return false;
    std::vector<tlin::PRow<K>> rows;
    tlin::append_multiple_rows(rows, fam.F, fam.e);
    auto jd = tlin::jordan(std::move(rows));
    auto rep = tlin::reduce_against(tlin::tform_to_row(fam.G), jd);
    return !tlin::row_is_zero(rep);
}

/// Flat limit at t=0 of the ideal (F_t, G_t), degree by degree.
template <class K>
GradedIdeal<K> flat_limit(const TFamily<K>& fam, int window = -1) {
    if (window < 0) window = fam.d + fam.e;
    if (!generic_interior(fam))
        throw std::domain_error("flat_limit: family is not generically interior");
    GradedIdeal<K> L;
    L.d = fam.d;
    L.e = fam.e;
    for (int l = 0; l <= window; ++l) {
        std::vector<tlin::PRow<K>> rows;
        tlin::append_multiple_rows(rows, fam.F, l);
        tlin::append_multiple_rows(rows, fam.G, l);
        L.layers.push_back(saturated_limit(std::move(rows), l));
    }
    return L;
}

template <class K>
TFamily<K> shift_family(const TFamily<K>& fam, const K& tau) {
    TFamily<K> out = fam;
    out.F = tform_shift(fam.F, tau);
    out.G = tform_shift(fam.G, tau);
    return out;
}

template <class K>
TFamily<K> infinity_chart_family(const TFamily<K>& fam) {
    TFamily<K> out = fam;
    out.F = tform_infinity_chart(fam.F);
    out.G = tform_infinity_chart(fam.G);
    return out;
}

/// Degeneration formula: the flat limit of [AB+tF, AC+tG] at t=0 agrees,
/// layer by layer, with psi(u, Z, Z') for Z' = (B,C) and Z the point with
/// lowest equation A and extra equations the multiples of BG-CF.
template <class K>
bool limit_vs_psi(const BinaryForm<K>& A, const BinaryForm<K>& B, const BinaryForm<K>& C,
                  const BinaryForm<K>& F, const BinaryForm<K>& G) {
    int u = B.degree();
    int d = A.degree() + u;
    int e = A.degree() + C.degree();
    if (F.degree() != d || G.degree() != e)
        throw std::invalid_argument("limit_vs_psi: F, G must have degrees d, e");
    if (form_gcd(B, C).degree() != 0)
        throw std::invalid_argument("limit_vs_psi: B and C must be coprime");
    if (dmu_image_contains(u, A, B, C, F, G))
        throw std::invalid_argument("limit_vs_psi: (F,G) lies in the image of the differential");

    TFamily<K> fam;
    fam.d = d;
    fam.e = e;
    fam.F = TForm<K>(d);
    fam.G = TForm<K>(e);
    BinaryForm<K> AB = A * B, AC = A * C;
    for (int j = 0; j <= d; ++j)
        fam.F.coeff(j) = Poly<K>(std::vector<K>{AB.coeff(j), F.coeff(j)});
    for (int j = 0; j <= e; ++j)
        fam.G.coeff(j) = Poly<K>(std::vector<K>{AC.coeff(j), G.coeff(j)});

    GradedIdeal<K> lim = flat_limit(fam, d + e);

    BinaryForm<K> H = B * G - C * F;  // degree e+u
    GradedIdeal<K> Z = ideal_from_forms<K>(d - u, e + u, {A, H}, d + e);
    if (!is_hilb_point(Z))
        throw std::domain_error("limit_vs_psi: [A, BG-CF] is not generic enough");
    GradedIdeal<K> Zp = ideal_from_forms<K>(u, e - d + u, {B, C});
    GradedIdeal<K> predicted = psi(u, Z, Zp);
    return lim == predicted;
}

/// Limit of the parameter point itself at t=0 (or at infinity via the
/// s-chart). The t-content is cleared from F_t, which pins the limit in
/// P_d; the class limit is read off the t-saturated limit of the degree-e
/// layer <F_t>_e + k(t) G_t, whose dimension e-d+2 always exceeds that of
/// <F_0>_e, so a representative off <F_0> exists. A plain canonical
/// representative of G_t would not do: its quotient coordinates can
/// collapse at special parameter values where the generic pivot structure
/// of <F_t>_e degenerates.
template <class K>
ParamPoint<K> limit_param_point(const TFamily<K>& fam, bool at_infinity = false) {
    TFamily<K> f = at_infinity ? infinity_chart_family(fam) : fam;
    TForm<K> Fc = tform_clear_content(f.F);

    std::vector<tlin::PRow<K>> rows;
    tlin::append_multiple_rows(rows, Fc, f.e);
    rows.push_back(tlin::tform_to_row(f.G));
    Subspace<K> layer = saturated_limit(std::move(rows), f.e);
    if (layer.dim() != f.e - f.d + 2)
        throw std::domain_error("limit_param_point: class vanishes identically");

    BinaryForm<K> F0 = tform_eval(Fc, K(0));
    Subspace<K> multF0 = multiples_of(F0, f.e);
    for (int i = 0; i < layer.dim(); ++i) {
        BinaryForm<K> r = multF0.reduce(layer.basis_form(i));
        if (!r.is_zero()) return canonicalize(F0, r);
    }
    throw std::domain_error("limit_param_point: base point");
}

}  // namespace binforms
