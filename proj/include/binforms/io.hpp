#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curves.hpp"
#include "ideals.hpp"
#include "limits.hpp"
#include "parse.hpp"
#include "pic.hpp"
#include "strata.hpp"

namespace binforms {

using json = nlohmann::ordered_json;

template <class K>
std::string scalar_str(const K& x) { return x.str(); }

// BinaryForm: {"degree": l, "coeffs": [c_0, ..., c_l]} ascending in the
// X1-power; rationals as "num/den" strings, prime-field residues decimal.
template <class K>
json form_to_json(const BinaryForm<K>& f) {
    json j;
    j["degree"] = f.degree();
    json cs = json::array();
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(scalar_str(f.coeff(i)));
    j["coeffs"] = cs;
    return j;
}

template <class K>
BinaryForm<K> form_from_json(const json& j, const FieldCtx<K>& ctx) {
    if (!j.contains("degree") || !j.contains("coeffs"))
        throw ParseError("form JSON needs 'degree' and 'coeffs'");
    int deg = j.at("degree").get<int>();
    const json& cs = j.at("coeffs");
    if (!cs.is_array() || static_cast<int>(cs.size()) != deg + 1)
        throw ParseError("form JSON: coeffs length must be degree+1");
    BinaryForm<K> f(deg);
    for (int i = 0; i <= deg; ++i)
        f.coeff(i) = scalar_from_literal(cs.at(i).get<std::string>(), ctx);
    return f;
}

template <class K>
json tform_to_json(const TForm<K>& f) {
    json j;
    j["degree"] = f.degree();
    json cs = json::array();
    for (int i = 0; i <= f.degree(); ++i) cs.push_back(f.coeff(i).str());
    j["coeffs"] = cs;
    return j;
}

template <class K>
TForm<K> tform_from_json(const json& j, const FieldCtx<K>& ctx) {
    if (!j.contains("degree") || !j.contains("coeffs"))
        throw ParseError("t-form JSON needs 'degree' and 'coeffs'");
    int deg = j.at("degree").get<int>();
    const json& cs = j.at("coeffs");
    if (!cs.is_array() || static_cast<int>(cs.size()) != deg + 1)
        throw ParseError("t-form JSON: coeffs length must be degree+1");
    TForm<K> f(deg);
    for (int i = 0; i <= deg; ++i)
        f.coeff(i) = parse_tpoly(cs.at(i).get<std::string>(), ctx);
    return f;
}

template <class K>
json family_to_json(const TFamily<K>& fam) {
    json j;
    j["d"] = fam.d;
    j["e"] = fam.e;
    j["F"] = tform_to_json(fam.F);
    j["G"] = tform_to_json(fam.G);
    return j;
}

template <class K>
TFamily<K> family_from_json(const json& j, const FieldCtx<K>& ctx) {
    TFamily<K> fam;
    fam.d = j.at("d").get<int>();
    fam.e = j.at("e").get<int>();
    fam.F = tform_from_json(j.at("F"), ctx);
    fam.G = tform_from_json(j.at("G"), ctx);
    if (fam.F.degree() != fam.d || fam.G.degree() != fam.e)
        throw ParseError("family JSON: degrees of F, G must be d, e");
    return fam;
}

// GradedIdeal: {"d":, "e":, "layers": [[form, ...], ...]}; each layer is a
// list of basis forms, re-spanned (hence re-canonicalized) on input.
template <class K>
json ideal_to_json(const GradedIdeal<K>& I) {
    json j;
    j["d"] = I.d;
    j["e"] = I.e;
    json layers = json::array();
    for (const auto& s : I.layers) {
        json layer = json::array();
        for (int i = 0; i < s.dim(); ++i) layer.push_back(form_to_json(s.basis_form(i)));
        layers.push_back(layer);
    }
    j["layers"] = layers;
    return j;
}

template <class K>
GradedIdeal<K> ideal_from_json(const json& j, const FieldCtx<K>& ctx) {
    GradedIdeal<K> I;
    I.d = j.at("d").get<int>();
    I.e = j.at("e").get<int>();
    const json& layers = j.at("layers");
    if (!layers.is_array()) throw ParseError("ideal JSON: layers must be an array");
    for (int l = 0; l < static_cast<int>(layers.size()); ++l) {
        std::vector<BinaryForm<K>> forms;
        for (const json& f : layers.at(l)) forms.push_back(form_from_json(f, ctx));
        for (const auto& f : forms)
            if (f.degree() != l) throw ParseError("ideal JSON: layer " + std::to_string(l) +
                                                  " holds a form of the wrong degree");
        I.layers.push_back(Subspace<K>::span(l, forms));
    }
    return I;
}

template <class K>
json param_point_to_json(const ParamPoint<K>& p) {
    json j;
    j["d"] = p.d;
    j["e"] = p.e;
    j["F"] = form_to_json(p.F);
    j["G"] = form_to_json(p.G);
    return j;
}

inline json pic_to_json(const PicClass& c) {
    json j;
    j["h"] = c.h;
    j["xi"] = c.xi;
    j["exc"] = c.exc;
    return j;
}

/// Comma-separated lattice coordinates "h,xi,e1,...".
inline PicClass pic_from_string(int d, int e, const std::string& s) {
    std::vector<long long> vals;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item.empty()) throw ParseError("empty coordinate in lattice class");
        vals.push_back(parse_decimal(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    int want = 2 + (d >= 2 ? d - 2 : 0);
    if (static_cast<int>(vals.size()) != want)
        throw ParseError("lattice class needs " + std::to_string(want) + " coordinates (h,xi,e1,...)");
    return pic_make(d, e, vals[0], vals[1],
                    std::vector<long long>(vals.begin() + 2, vals.end()));
}

inline json certificate_to_json(const CurveCertificateInfo& c) {
    json j;
    j["d"] = c.d;
    j["e"] = c.e;
    j["field"] = c.field;
    j["resultant_profile"] = c.resultant_profile;
    j["profile_monomial"] = c.profile_monomial;
    json sp = json::array();
    for (const auto& s : c.special_points) {
        json one;
        one["t"] = s.location;
        one["limit_F"] = s.limit_F;
        one["limit_G"] = s.limit_G;
        one["gcd_degree"] = s.gcd_degree;
        one["coprime"] = s.coprime;
        sp.push_back(one);
    }
    j["special_points"] = sp;
    if (!c.unresolved_factor.empty()) j["unresolved_factor"] = c.unresolved_factor;
    if (!c.note.empty()) j["note"] = c.note;
    j["verdict"] = c.verdict;
    return j;
}

inline json census_to_json(const CensusResult& c) {
    json j;
    j["d"] = c.d;
    j["e"] = c.e;
    j["p"] = c.p;
    j["total"] = c.total;
    j["stratum_counts"] = c.stratum_counts;
    j["delta_by_gcd"] = c.delta_by_gcd;
    if (c.delta_by_resultant >= 0) j["delta_by_resultant"] = c.delta_by_resultant;
    return j;
}

inline std::string census_to_csv(const CensusResult& c) {
    std::string out = "u,count\n";
    for (int u = 1; u <= c.d; ++u)
        out += std::to_string(u) + "," + std::to_string(c.stratum_counts[u - 1]) + "\n";
    return out;
}

}  // namespace binforms
