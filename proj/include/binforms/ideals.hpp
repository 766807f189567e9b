#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "subspace.hpp"

namespace binforms {

/// The model Hilbert function of a pair of degrees 1 <= d < e, in the
/// equation convention: the value at l is the dimension of the space of
/// degree-l equations.
inline int model_hf(int d, int e, int l) {
    if (d < 1 || d >= e) throw std::invalid_argument("model_hf: need 1 <= d < e");
    if (l <= d - 1) return 0;
    if (l <= e - 1) return l + 1 - d;
    if (l <= d + e - 1) return 2 * l + 2 - d - e;
    return l + 1;
}

/// Degreewise dimension table of an ideal on a window, with the sanity
/// bounds a graded ideal forces: values[l] <= l+1 and monotone growth
/// (multiplication by X0 is injective).
struct HilbertFunction {
    std::vector<int> values;  // index = degree

    void validate() const {
        for (std::size_t l = 0; l < values.size(); ++l) {
            if (values[l] < 0 || values[l] > static_cast<int>(l) + 1)
                throw std::domain_error("HilbertFunction: value out of range at degree " +
                                        std::to_string(l));
            if (l > 0 && values[l] < values[l - 1])
                throw std::domain_error("HilbertFunction: not weakly increasing at degree " +
                                        std::to_string(l));
        }
    }
    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
};

template <class K>
BinaryForm<K> shift_x0(const BinaryForm<K>& f) {
    BinaryForm<K> r(f.degree() + 1);
    for (int j = 0; j <= f.degree(); ++j) r.coeff(j) = f.coeff(j);
    return r;
}

template <class K>
BinaryForm<K> shift_x1(const BinaryForm<K>& f) {
    BinaryForm<K> r(f.degree() + 1);
    for (int j = 0; j <= f.degree(); ++j) r.coeff(j + 1) = f.coeff(j);
    return r;
}

/// G_m-invariant graded ideal of k[X0,X1] presented by its degree layers on
/// the window [0, window]; (d, e) is the type of the Hilbert-scheme model
/// the ideal is compared against.
template <class K>
struct GradedIdeal {
    int d = 0, e = 0;
    std::vector<Subspace<K>> layers;  // size window+1

    int window() const { return static_cast<int>(layers.size()) - 1; }
    int layer_dim(int l) const { return layers[l].dim(); }

    friend bool operator==(const GradedIdeal& a, const GradedIdeal& b) {
        return a.d == b.d && a.e == b.e && a.layers == b.layers;
    }
};

/// Degreewise span of all multiples of the generators.
template <class K>
GradedIdeal<K> ideal_from_forms(int d, int e, const std::vector<BinaryForm<K>>& gens,
                                int window = -1) {
    if (window < 0) window = d + e;
    for (const auto& g : gens)
        if (g.is_zero()) throw std::invalid_argument("ideal_from_forms: zero generator");
    GradedIdeal<K> I;
    I.d = d;
    I.e = e;
    for (int l = 0; l <= window; ++l) {
        Subspace<K> s = Subspace<K>::zero(l);
        for (const auto& g : gens)
            if (g.degree() <= l) s = sum(s, multiples_of(g, l));
        I.layers.push_back(std::move(s));
    }
    return I;
}

template <class K>
HilbertFunction hilbert_function(const GradedIdeal<K>& I) {
    HilbertFunction hf;
    for (const auto& s : I.layers) hf.values.push_back(s.dim());
    hf.validate();
    return hf;
}

/// Ideal closure: every layer multiplied by X0 and by X1 lands in the next.
template <class K>
bool closure_holds(const GradedIdeal<K>& I) {
    for (int l = 0; l < I.window(); ++l) {
        for (int i = 0; i < I.layers[l].dim(); ++i) {
            auto b = I.layers[l].basis_form(i);
            if (!I.layers[l + 1].contains(shift_x0(b))) return false;
            if (!I.layers[l + 1].contains(shift_x1(b))) return false;
        }
    }
    return true;
}

/// Membership in the model: the layer dimensions match the model Hilbert
/// function on the whole window (window at least d+e) and the closure
/// invariant holds.
template <class K>
bool is_hilb_point(const GradedIdeal<K>& I) {
    if (I.d < 1 || I.d >= I.e) return false;
    if (I.window() < I.d + I.e) return false;
    for (int l = 0; l <= I.window(); ++l)
        if (I.layer_dim(l) != model_hf(I.d, I.e, l)) return false;
    return closure_holds(I);
}

/// Koszul dimension count: dim layers[l] = dim V_{l-d} + dim V_{l-e}
/// - dim V_{l-d-e}, with dim V_m = max(0, m+1).
template <class K>
bool koszul_dimension_identity(const GradedIdeal<K>& I, int l) {
    auto dv = [](int m) { return m < 0 ? 0 : m + 1; };
    return I.layer_dim(l) == dv(l - I.d) + dv(l - I.e) - dv(l - I.d - I.e);
}

/// The pair of minimal equations: the unique degree-d equation (normalized)
/// and a canonical representative of the degree-e equation modulo multiples
/// of the first.
template <class K>
std::pair<BinaryForm<K>, BinaryForm<K>> min_generators(const GradedIdeal<K>& Y) {
    if (Y.layer_dim(Y.d) != 1)
        throw std::domain_error("min_generators: degree-d layer is not a line");
    BinaryForm<K> F = Y.layers[Y.d].basis_form(0);
    Subspace<K> multF = multiples_of(F, Y.e);
    for (int i = 0; i < Y.layers[Y.e].dim(); ++i) {
        BinaryForm<K> r = multF.reduce(Y.layers[Y.e].basis_form(i));
        if (!r.is_zero()) return {normalized(F), normalized(r)};
    }
    throw std::domain_error("min_generators: no independent degree-e equation");
}

/// Boundary construction: the ideal spanned degreewise by F*K for the
/// equations K of Zp below degree e+u, glued to the layers of Z from degree
/// e+u on. F is the unique lowest-degree equation of Z.
template <class K>
GradedIdeal<K> psi(int u, const GradedIdeal<K>& Z, const GradedIdeal<K>& Zp) {
    int d = Z.d + u, e = Z.e - u;
    if (u < 1 || u >= d) throw std::invalid_argument("psi: need 1 <= u < d");
    if (Zp.d != u || Zp.e != e - d + u)
        throw std::invalid_argument("psi: type of Zp must be (u, e-d+u)");
    if (!is_hilb_point(Z) || !is_hilb_point(Zp))
        throw std::domain_error("psi: inputs must be Hilbert-scheme points");
    if (Z.layer_dim(d - u) != 1)
        throw std::domain_error("psi: lowest layer of Z is not a line");
    BinaryForm<K> F = Z.layers[d - u].basis_form(0);
    GradedIdeal<K> R;
    R.d = d;
    R.e = e;
    for (int l = 0; l <= d + e; ++l) {
        if (l >= e + u) {
            R.layers.push_back(Z.layers[l]);
        } else if (l - (d - u) < 0) {
            R.layers.push_back(Subspace<K>::zero(l));
        } else {
            R.layers.push_back(mul_into(F, Zp.layers[l - (d - u)]));
        }
    }
    return R;
}

template <class K>
struct BoundaryDecomposition {
    int u = 0;
    GradedIdeal<K> Z, Zp;
};

/// Inverse of psi on the boundary: recover F as the gcd of the equations of
/// degrees < e+u, divide them out to get Zp, and read Z off the high
/// degrees.
template <class K>
BoundaryDecomposition<K> psi_inverse(const GradedIdeal<K>& Y) {
    if (!is_hilb_point(Y)) throw std::domain_error("psi_inverse: not a Hilbert-scheme point");
    int d = Y.d, e = Y.e;
    auto [Fmin, Gmin] = min_generators(Y);
    int g = form_gcd(Fmin, Gmin).degree();
    if (g == 0) throw std::domain_error("psi_inverse: interior point");
    int u = d - g;

    // F = gcd of all equations of degrees < e+u
    BinaryForm<K> F;
    bool have = false;
    for (int l = d; l < e + u; ++l) {
        for (int i = 0; i < Y.layers[l].dim(); ++i) {
            BinaryForm<K> b = Y.layers[l].basis_form(i);
            F = have ? form_gcd(F, b) : normalized(b);
            have = true;
        }
    }
    if (!have || F.degree() != d - u)
        throw std::domain_error("psi_inverse: gcd of low equations has unexpected degree");

    BoundaryDecomposition<K> out;
    out.u = u;

    out.Zp.d = u;
    out.Zp.e = e - d + u;
    int wzp = out.Zp.d + out.Zp.e;  // = e - d + 2u
    for (int m = 0; m <= wzp; ++m) {
        if (m == wzp) {
            out.Zp.layers.push_back(Subspace<K>::full(m));
            continue;
        }
        std::vector<BinaryForm<K>> divided;
        const Subspace<K>& layer = Y.layers[m + d - u];
        for (int i = 0; i < layer.dim(); ++i)
            divided.push_back(form_divexact(layer.basis_form(i), F));
        out.Zp.layers.push_back(Subspace<K>::span(m, divided));
    }

    out.Z.d = d - u;
    out.Z.e = e + u;
    for (int l = 0; l <= d + e; ++l) {
        Subspace<K> s = multiples_of(F, l);
        if (l >= e + u) s = sum(s, Y.layers[l]);
        out.Z.layers.push_back(std::move(s));
    }

    if (!is_hilb_point(out.Z) || !is_hilb_point(out.Zp))
        throw std::domain_error("psi_inverse: decomposition failed the model check");
    return out;
}

/// u = d for ideals of coprime pairs, otherwise the boundary index.
template <class K>
int classify_boundary(const GradedIdeal<K>& Y) {
    auto [Fmin, Gmin] = min_generators(Y);
    int g = form_gcd(Fmin, Gmin).degree();
    return Y.d - g;
}

/// Projective Plücker coordinates of the degree-l layer: all maximal minors
/// of the RREF basis matrix, column subsets in lexicographic order, first
/// nonzero entry normalized to 1.
template <class K>
std::vector<K> pluecker(const GradedIdeal<K>& I, int l) {
    if (I.layer_dim(l) != model_hf(I.d, I.e, l))
        throw std::domain_error("pluecker: layer dimension does not match the model");
    std::vector<K> minors = maximal_minors(I.layers[l].basis());
    for (std::size_t k = 0; k < minors.size(); ++k) {
        if (minors[k].is_zero()) continue;
        K inv = minors[k].inv();
        for (K& x : minors) x = x * inv;
        break;
    }
    return minors;
}

}  // namespace binforms
