#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "limits.hpp"

namespace binforms {

inline long long characteristic(const FieldCtx<Rat>&) { return 0; }
inline long long characteristic(const FieldCtx<Fp>& c) { return c.p; }
inline long long characteristic(const FieldCtx<Fp2>& c) { return c.p; }

/// The e = d+1 family
///   F_t = X0^d + t X0^{d-1}X1 + ... + t^d X1^d,
///   G_t = X0X1 (X0^{d-1} + t X0^{d-2}X1 + ... + t^{d-1} X1^{d-1}).
template <class K>
TFamily<K> explicit_curve(int d, const FieldCtx<K>& ctx) {
    if (d < 1) throw std::invalid_argument("explicit_curve: need d >= 1");
    TFamily<K> fam;
    fam.d = d;
    fam.e = d + 1;
    fam.F = TForm<K>(d);
    for (int j = 0; j <= d; ++j) fam.F.coeff(j) = Poly<K>::monomial(j, ctx.from_int(1));
    fam.G = TForm<K>(d + 1);
    for (int j = 1; j <= d; ++j) fam.G.coeff(j) = Poly<K>::monomial(j - 1, ctx.from_int(1));
    return fam;
}

struct SpecialPointInfo {
    std::string location;  // parameter value, or "inf"
    std::string limit_F, limit_G;
    int gcd_degree = -1;
    bool coprime = false;
};

/// Verification record for a one-parameter family: the resultant profile,
/// the saturated limit at every special parameter value (and at infinity),
/// and the verdict that all of them stay coprime.
struct CurveCertificateInfo {
    int d = 0, e = 0;
    std::string field;
    std::string resultant_profile;
    bool profile_monomial = false;
    std::vector<SpecialPointInfo> special_points;
    std::string unresolved_factor;  // nonempty when roots could not be enumerated
    std::string note;
    bool verdict = false;
};

namespace detail {

template <class K>
SpecialPointInfo check_special_point(const TFamily<K>& fam, const K& tau, const std::string& label) {
    SpecialPointInfo out;
    out.location = label;
    ParamPoint<K> lim = limit_param_point(shift_family(fam, tau));
    out.limit_F = lim.F.str();
    out.limit_G = lim.G.str();
    out.gcd_degree = stratum(lim).g;
    out.coprime = out.gcd_degree == 0;
    return out;
}

template <class K>
SpecialPointInfo check_infinity(const TFamily<K>& fam) {
    SpecialPointInfo out;
    out.location = "inf";
    ParamPoint<K> lim = limit_param_point(fam, true);
    out.limit_F = lim.F.str();
    out.limit_G = lim.G.str();
    out.gcd_degree = stratum(lim).g;
    out.coprime = out.gcd_degree == 0;
    return out;
}

template <class K>
CurveCertificateInfo certify(const TFamily<K>& fam, const FieldCtx<K>& ctx,
                             const std::vector<K>& field_elements, bool exhaustive) {
    CurveCertificateInfo cert;
    cert.d = fam.d;
    cert.e = fam.e;
    cert.field = ctx.name();
    if (!generic_interior(fam)) {
        cert.note = "family is generically degenerate (lies in the resultant divisor)";
        cert.verdict = false;
        return cert;
    }
    Poly<K> profile = resultant_profile(fam);
    cert.resultant_profile = profile.str();
    int val = profile.valuation();
    Poly<K> core = profile.shifted_down(val);
    cert.profile_monomial = core.is_constant();

    std::vector<K> roots;
    if (val >= 1) roots.push_back(K(0));
    if (!core.is_constant()) {
        if (exhaustive) {
            for (const K& x : field_elements) {
                if (!core.eval(x).is_zero()) continue;
                if (x.is_zero()) continue;  // already recorded
                roots.push_back(x);
                // strip the full multiplicity of this root
                Poly<K> lin(std::vector<K>{-x, K(1)});
                for (;;) {
                    auto [q, r] = divrem(core, lin);
                    if (!r.is_zero()) break;
                    core = q;
                }
            }
            if (!core.is_constant()) cert.unresolved_factor = core.str();
        } else {
            cert.unresolved_factor = core.str();
        }
    }

    bool all_coprime = true;
    for (const K& tau : roots) {
        cert.special_points.push_back(check_special_point(fam, tau, tau.str()));
        all_coprime = all_coprime && cert.special_points.back().coprime;
    }
    cert.special_points.push_back(check_infinity(fam));
    all_coprime = all_coprime && cert.special_points.back().coprime;

    cert.verdict = all_coprime && cert.unresolved_factor.empty();
    if (!cert.unresolved_factor.empty())
        cert.note = "resultant profile has roots outside the enumerated field";
    return cert;
}

}  // namespace detail

/// Over the rationals, roots are only certified when the profile is a
/// monomial times a unit (true for the explicit curves); a leftover factor
/// is reported symbolically and blocks the verdict.
inline CurveCertificateInfo verify_complete_curve(const TFamily<Rat>& fam) {
    return detail::certify(fam, FieldCtx<Rat>{}, {}, false);
}

inline TFamily<Fp2> embed_family(const TFamily<Fp>& fam, long long p) {
    TFamily<Fp2> out;
    out.d = fam.d;
    out.e = fam.e;
    out.F = TForm<Fp2>(fam.d);
    out.G = TForm<Fp2>(fam.e);
    auto conv = [p](const Poly<Fp>& q) {
        std::vector<Fp2> c;
        for (const Fp& x : q.coeffs()) c.emplace_back(x.value(), 0, p);
        return Poly<Fp2>(std::move(c));
    };
    for (int j = 0; j <= fam.d; ++j) out.F.coeff(j) = conv(fam.F.coeff(j));
    for (int j = 0; j <= fam.e; ++j) out.G.coeff(j) = conv(fam.G.coeff(j));
    return out;
}

/// Over GF(p) the whole check runs in GF(p^2): every parameter value of the
/// quadratic extension is scanned, so all roots of profile factors of
/// degree <= 2 are certified.
inline CurveCertificateInfo verify_complete_curve(const TFamily<Fp>& fam, long long p) {
    TFamily<Fp2> ext = embed_family(fam, p);
    FieldCtx<Fp2> ctx{p};
    std::vector<Fp2> elems;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) elems.emplace_back(a, b, p);
    return detail::certify(ext, ctx, elems, true);
}

/// Frobenius image of a point of P_{1,e}: [F^p, G^p] in P_{p,pe}.
template <class K>
ParamPoint<K> frobenius_point(const ParamPoint<K>& base, const FieldCtx<K>& ctx) {
    long long p = characteristic(ctx);
    if (p == 0) throw std::domain_error("frobenius_point: requires positive characteristic");
    return canonicalize(pow_form(base.F, static_cast<int>(p)),
                        pow_form(base.G, static_cast<int>(p)));
}

/// Sweep of the line t -> [X0 + t X1, X1^e] in P_{1,e} over GF(p^2),
/// including the chart end: every Frobenius image must be interior in
/// P_{p,pe}.
inline bool frobenius_line_verdict(long long p, int e) {
    if (e < 2) throw std::invalid_argument("frobenius_line_verdict: need e >= 2");
    FieldCtx<Fp2> ctx{p};
    auto X1e = BinaryForm<Fp2>::monomial(e, e, ctx.from_int(1));
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) {
            BinaryForm<Fp2> F(1);
            F.coeff(0) = ctx.from_int(1);
            F.coeff(1) = Fp2(a, b, p);
            auto base = canonicalize(F, X1e);
            auto img = frobenius_point(base, ctx);
            if (img.d != p || img.e != p * e) return false;
            if (stratum(img).g != 0) return false;
        }
    // t = infinity: the base point is [X1, <unique class>]
    auto baseInf = canonicalize(BinaryForm<Fp2>::monomial(1, 1, ctx.from_int(1)),
                                BinaryForm<Fp2>::monomial(e, 0, ctx.from_int(1)));
    auto imgInf = frobenius_point(baseInf, ctx);
    return stratum(imgInf).g == 0;
}

/// Degree of the i-th Grassmannian bundle pulled back along the family:
/// Pluecker coordinates of the degree-(e+i-1) equation layer over k(t),
/// with the common polynomial content cleared; the degree is the maximal
/// remaining t-degree. The reversed coordinates are checked to leave no
/// base point at the chart end.
template <class K>
long long mdegree(const TFamily<K>& fam, int i) {
    int d = fam.d, e = fam.e;
    if (i < 0 || i > d) throw std::invalid_argument("mdegree: need 0 <= i <= d");
    int l = e + i - 1;
    std::vector<tlin::PRow<K>> rows;
    tlin::append_multiple_rows(rows, fam.F, l);
    tlin::append_multiple_rows(rows, fam.G, l);
    if (static_cast<int>(rows.size()) != model_hf(d, e, l))
        throw std::domain_error("mdegree: generator count does not match the model dimension");
    Matrix<Poly<K>> m(rows.size(), l + 1);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j <= l; ++j) m(r, j) = rows[r][j];
    std::vector<Poly<K>> minors = maximal_minors(m);

    Poly<K> g;
    for (const auto& q : minors) g = poly_gcd(g, q);
    if (g.is_zero()) throw std::domain_error("mdegree: layer dimension drop at generic t");
    long long deg = 0;
    for (auto& q : minors) {
        q = q / g;
        if (q.deg() > deg) deg = q.deg();
    }
    // chart end: after clearing the content, the degree-deg homogenization
    // has a nonzero coordinate at s=0 and no common s factor
    Poly<K> ginf;
    bool top = false;
    for (const auto& q : minors) {
        if (q.deg() == deg) top = true;
        if (!q.is_zero()) ginf = poly_gcd(ginf, q.reversed(static_cast<int>(deg)));
    }
    if (!top || (!ginf.is_zero() && ginf.valuation() > 0))
        throw std::domain_error("mdegree: base point at the chart end");
    return deg;
}

}  // namespace binforms
