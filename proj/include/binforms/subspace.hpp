#pragma once

#include <stdexcept>
#include <vector>

#include "forms.hpp"
#include "matrix.hpp"

namespace binforms {

/// Linear subspace of V_l with a canonical reduced-row-echelon basis, rows
/// in the monomial coordinates of V_l (ascending X1-power). Two subspaces
/// are equal iff their basis matrices are identical.
template <class K>
class Subspace {
  public:
    static Subspace zero(int degree) { return Subspace(degree, Matrix<K>(0, degree + 1), {}); }

    static Subspace full(int degree) {
        Matrix<K> m(degree + 1, degree + 1);
        std::vector<std::size_t> piv;
        for (int i = 0; i <= degree; ++i) {
            m(i, i) = K(1);
            piv.push_back(i);
        }
        return Subspace(degree, std::move(m), std::move(piv));
    }

    static Subspace span(int degree, const std::vector<BinaryForm<K>>& forms) {
        Matrix<K> m(forms.size(), degree + 1);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            if (forms[i].degree() != degree)
                throw std::invalid_argument("Subspace::span: mixed degrees");
            for (int j = 0; j <= degree; ++j) m(i, j) = forms[i].coeff(j);
        }
        auto piv = m.rref();
        return Subspace(degree, std::move(m), std::move(piv));
    }

    static Subspace from_rows(int degree, Matrix<K> rows) {
        if (rows.rows() > 0 && rows.cols() != static_cast<std::size_t>(degree + 1))
            throw std::invalid_argument("Subspace::from_rows: bad width");
        auto piv = rows.rref();
        return Subspace(degree, std::move(rows), std::move(piv));
    }

    int degree() const { return degree_; }
    int ambient_dim() const { return degree_ + 1; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    int quotient_dim() const { return ambient_dim() - dim(); }
    bool is_full() const { return dim() == ambient_dim(); }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    BinaryForm<K> basis_form(int i) const {
        BinaryForm<K> f(degree_);
        for (int j = 0; j <= degree_; ++j) f.coeff(j) = basis_(i, j);
        return f;
    }

    std::vector<BinaryForm<K>> basis_forms() const {
        std::vector<BinaryForm<K>> out;
        for (int i = 0; i < dim(); ++i) out.push_back(basis_form(i));
        return out;
    }

    /// Residue of g after reduction against the RREF basis: zero entries at
    /// every pivot column. The class of g mod this subspace.
    BinaryForm<K> reduce(const BinaryForm<K>& g) const {
        if (g.degree() != degree_) throw std::invalid_argument("Subspace::reduce: degree mismatch");
        BinaryForm<K> r = g;
        for (std::size_t i = 0; i < pivots_.size(); ++i) {
            K c = r.coeff(static_cast<int>(pivots_[i]));
            if (c.is_zero()) continue;
            for (int j = 0; j <= degree_; ++j) r.coeff(j) -= c * basis_(i, j);
        }
        return r;
    }

    bool contains(const BinaryForm<K>& g) const { return reduce(g).is_zero(); }

    bool contains_subspace(const Subspace& o) const {
        if (o.degree_ != degree_) return false;
        for (int i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_form(i))) return false;
        return true;
    }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.degree_ != b.degree_) throw std::invalid_argument("Subspace::sum: degree mismatch");
        Matrix<K> m(a.dim() + b.dim(), a.degree_ + 1);
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j <= a.degree_; ++j) m(i, j) = a.basis_(i, j);
        for (int i = 0; i < b.dim(); ++i)
            for (int j = 0; j <= a.degree_; ++j) m(a.dim() + i, j) = b.basis_(i, j);
        auto piv = m.rref();
        return Subspace(a.degree_, std::move(m), std::move(piv));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.degree_ == b.degree_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    Subspace(int degree, Matrix<K> basis, std::vector<std::size_t> pivots)
        : degree_(degree), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    int degree_;
    Matrix<K> basis_;
    std::vector<std::size_t> pivots_;
};

/// span{F*s : s in S} inside V_{deg F + deg S}.
template <class K>
Subspace<K> mul_into(const BinaryForm<K>& f, const Subspace<K>& s) {
    std::vector<BinaryForm<K>> prods;
    for (int i = 0; i < s.dim(); ++i) prods.push_back(f * s.basis_form(i));
    return Subspace<K>::span(f.degree() + s.degree(), prods);
}

/// The space <F>_m of degree-m multiples of F.
template <class K>
Subspace<K> multiples_of(const BinaryForm<K>& f, int m) {
    if (f.is_zero()) throw std::domain_error("multiples_of: zero form");
    if (m < f.degree()) return Subspace<K>::zero(m);
    return mul_into(f, Subspace<K>::full(m - f.degree()));
}

}  // namespace binforms
