#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "curves.hpp"
#include "ideals.hpp"
#include "invariants.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "pic.hpp"
#include "rng.hpp"
#include "strata.hpp"

namespace binforms {

struct CheckResult {
    std::string suite;
    bool pass = true;
    long long checks = 0;
    long long rejected = 0;
    std::string counterexample;  // serialized failing input, for replay
};

struct VerifyConfig {
    std::uint64_t seed = 1;
    long long p = 101;  // prime field for the randomized suites
    int samples_hf = 200;
    int samples_psi = 100;
    int samples_degeneration = 100;
    int samples_immersion = 100;
    int samples_koszul = 200;
    int threads = 1;
    std::string inject_fault;  // "hf-third-branch-sign" flips a sign in the model
    std::vector<std::pair<int, int>> grid = {{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 7}};
};

namespace suites {

inline int model_hf_cfg(const VerifyConfig& cfg, int d, int e, int l) {
    if (cfg.inject_fault == "hf-third-branch-sign" && e <= l && l <= d + e - 1)
        return 2 * l + 2 - d + e;
    return model_hf(d, e, l);
}

inline CheckResult hilbert_function_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "hilbert-function";
    SuiteRng rng(cfg.seed, r.suite);
    FieldCtx<Fp> fp{cfg.p};
    for (auto [d, e] : cfg.grid) {
        for (int it = 0; it < cfg.samples_hf && r.pass; ++it) {
            auto fs = random_coprime_tuple(rng, fp, {d, e});
            auto I = ideal_from_forms<Fp>(d, e, fs);
            for (int l = 0; l <= d + e; ++l) {
                ++r.checks;
                if (I.layer_dim(l) != model_hf_cfg(cfg, d, e, l)) {
                    r.pass = false;
                    json cx;
                    cx["d"] = d;
                    cx["e"] = e;
                    cx["l"] = l;
                    cx["F"] = form_to_json(fs[0]);
                    cx["G"] = form_to_json(fs[1]);
                    cx["computed"] = I.layer_dim(l);
                    cx["expected"] = model_hf_cfg(cfg, d, e, l);
                    r.counterexample = cx.dump();
                    break;
                }
            }
        }
    }
    r.rejected = rng.rejected();
    return r;
}

inline CheckResult psi_roundtrip_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "psi-roundtrip";
    SuiteRng rng(cfg.seed, r.suite);
    FieldCtx<Fp> fp{cfg.p};
    for (auto [d, e] : cfg.grid) {
        for (int u = 1; u < d && r.pass; ++u) {
            for (int it = 0; it < cfg.samples_psi && r.pass; ++it) {
                auto zf = random_coprime_tuple(rng, fp, {d - u, e + u});
                auto zpf = random_coprime_tuple(rng, fp, {u, e - d + u});
                auto Z = ideal_from_forms<Fp>(d - u, e + u, zf);
                auto Zp = ideal_from_forms<Fp>(u, e - d + u, zpf);
                auto Y = psi(u, Z, Zp);
                ++r.checks;
                bool ok = is_hilb_point(Y);
                if (ok) {
                    auto dec = psi_inverse(Y);
                    ok = dec.u == u && dec.Z == Z && dec.Zp == Zp;
                }
                if (!ok) {
                    r.pass = false;
                    json cx;
                    cx["d"] = d;
                    cx["e"] = e;
                    cx["u"] = u;
                    cx["Z"] = ideal_to_json(Z);
                    cx["Zp"] = ideal_to_json(Zp);
                    r.counterexample = cx.dump();
                }
            }
        }
    }
    r.rejected = rng.rejected();
    return r;
}

inline CheckResult degeneration_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "degeneration";
    SuiteRng rng(cfg.seed, r.suite);
    FieldCtx<Fp> fp{cfg.p};
    const std::vector<std::array<int, 3>> cells = {{2, 3, 1}, {3, 4, 1}, {3, 4, 2}, {3, 5, 2}};
    for (auto [d, e, u] : cells) {
        int done = 0;
        while (done < cfg.samples_degeneration && r.pass) {
            auto A = random_nonzero_form(rng, fp, d - u);
            auto B = random_nonzero_form(rng, fp, u);
            auto C = random_nonzero_form(rng, fp, e - d + u);
            auto F = random_form(rng, fp, d);
            auto G = random_form(rng, fp, e);
            if (form_gcd(B, C).degree() != 0) { rng.count_rejection(); continue; }
            bool ok;
            try {
                ok = limit_vs_psi(A, B, C, F, G);
            } catch (const std::exception&) {
                rng.count_rejection();
                continue;  // inadmissible draw
            }
            ++r.checks;
            ++done;
            if (!ok) {
                r.pass = false;
                json cx;
                cx["d"] = d;
                cx["e"] = e;
                cx["u"] = u;
                cx["A"] = form_to_json(A);
                cx["B"] = form_to_json(B);
                cx["C"] = form_to_json(C);
                cx["F"] = form_to_json(F);
                cx["G"] = form_to_json(G);
                r.counterexample = cx.dump();
            }
        }
    }
    r.rejected = rng.rejected();
    return r;
}

inline CheckResult immersion_corank_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "immersion-corank";
    SuiteRng rng(cfg.seed, r.suite);
    FieldCtx<Fp> fp{cfg.p};
    auto record = [&r](int d, int e, int u, const BinaryForm<Fp>& A, const BinaryForm<Fp>& B,
                       const BinaryForm<Fp>& C, const std::string& what) {
        r.pass = false;
        json cx;
        cx["d"] = d;
        cx["e"] = e;
        cx["u"] = u;
        cx["A"] = form_to_json(A);
        cx["B"] = form_to_json(B);
        cx["C"] = form_to_json(C);
        cx["violated"] = what;
        r.counterexample = cx.dump();
    };
    for (auto [d, e] : cfg.grid) {
        for (int u = 1; u < d && r.pass; ++u) {
            for (int it = 0; it < cfg.samples_immersion && r.pass; ++it) {
                auto t = random_coprime_tuple(rng, fp, {d - u, u, e - d + u});
                auto res = dmu_matrix(u, t[0], t[1], t[2]);
                ++r.checks;
                if (res.kernel_dim != 0)
                    record(d, e, u, t[0], t[1], t[2], "kernel_dim != 0 on a coprime triple");
                else if (res.corank != d - u)
                    record(d, e, u, t[0], t[1], t[2], "corank != d-u on a coprime triple");
            }
            // planted common factors must produce an explicit kernel witness
            for (int it = 0; it < 10 && r.pass; ++it) {
                if (d - u - 1 < 0 || u - 1 < 0) break;
                auto g = random_nonzero_form(rng, fp, 1);
                auto Ap = random_nonzero_form(rng, fp, d - u - 1);
                auto Bp = random_nonzero_form(rng, fp, u - 1);
                auto Cp = random_nonzero_form(rng, fp, e - d + u - 1);
                auto A = g * Ap, B = g * Bp, C = g * Cp;
                auto res = dmu_matrix(u, A, B, C);
                ++r.checks;
                if (res.kernel_dim < 1) {
                    record(d, e, u, A, B, C, "planted factor but trivial kernel");
                    break;
                }
                auto i_form = BinaryForm<Fp>::monomial(1, 0, Fp(1, cfg.p));
                if (normalized(i_form) == normalized(g))
                    i_form = BinaryForm<Fp>::monomial(1, 1, Fp(1, cfg.p));
                auto H = Ap * (g - i_form);
                auto I = Bp * i_form;
                auto J = Cp * i_form;
                bool in_kernel = multiples_of(A * B, d).contains(B * H + A * I) &&
                                 multiples_of(A * C, e).contains(C * H + A * J);
                bool trivial = multiples_of(A, d - u).contains(H) &&
                               multiples_of(B, u).contains(I) &&
                               multiples_of(C, e - d + u).contains(J);
                if (!in_kernel || trivial)
                    record(d, e, u, A, B, C, "explicit kernel witness failed");
            }
        }
    }
    r.rejected = rng.rejected();
    return r;
}

inline CheckResult koszul_span_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "koszul-span";
    SuiteRng rng(cfg.seed, r.suite);
    FieldCtx<Fp> fp{cfg.p};
    for (auto [d, e] : cfg.grid) {
        for (int u = 1; u < d && r.pass; ++u) {
            for (int it = 0; it < cfg.samples_koszul && r.pass; ++it) {
                auto t = random_coprime_tuple(rng, fp, {d - u, u, e - d + u});
                ++r.checks;
                if (!koszul_span_check(t[0], t[1], t[2], e + u)) {
                    r.pass = false;
                    json cx;
                    cx["d"] = d;
                    cx["e"] = e;
                    cx["u"] = u;
                    cx["A"] = form_to_json(t[0]);
                    cx["B"] = form_to_json(t[1]);
                    cx["C"] = form_to_json(t[2]);
                    r.counterexample = cx.dump();
                }
            }
        }
    }
    r.rejected = rng.rejected();
    return r;
}

inline CheckResult pic_identities_suite(const VerifyConfig& cfg) {
    (void)cfg;
    CheckResult r;
    r.suite = "pic-identities";
    for (int d = 2; d <= 8 && r.pass; ++d)
        for (int e = d + 1; e <= 12 && r.pass; ++e) {
            ++r.checks;
            if (!l_class(d, e, d).is_zero()) {
                r.pass = false;
                r.counterexample = "triviality relation fails at d=" + std::to_string(d) +
                                   ", e=" + std::to_string(e);
                break;
            }
            for (int u = 1; u <= d - 1 && r.pass; ++u)
                for (int i = 0; i <= d && r.pass; ++i) {
                    auto [p1, p2] = restrict_class(u, l_class(d, e, i));
                    bool ok = true;
                    if (i >= u) ok = p1 == l_class(d - u, e + u, i - u) && p2.is_zero();
                    if (ok && i <= u)
                        ok = p1 == pic_make(d - u, e + u, e - d + 2 * i, 0) &&
                             p2 == l_class(u, e - d + u, i);
                    ++r.checks;
                    if (!ok) {
                        r.pass = false;
                        r.counterexample = "restriction identity fails at (d,e,u,i)=(" +
                                           std::to_string(d) + "," + std::to_string(e) + "," +
                                           std::to_string(u) + "," + std::to_string(i) + ")";
                    }
                }
        }
    return r;
}

inline CheckResult cone_shadow_suite(const VerifyConfig& cfg) {
    (void)cfg;
    CheckResult r;
    r.suite = "cone-shadow";
    for (int d = 2; d <= 8 && r.pass; ++d)
        for (int e = d + 1; e <= 12 && r.pass; ++e) {
            bool ok = true;
            for (int i = 0; i < d && ok; ++i) {
                auto lam = nef_coords(l_class(d, e, i));  // throws if not a basis
                for (int j = 0; j < d && ok; ++j) ok = lam[j] == (i == j ? Rat(1) : Rat(0));
                ok = ok && is_nef(l_class(d, e, i));
            }
            ok = ok && is_nef(pic_make(d, e, 1, 0));
            ok = ok && !is_nef(delta_class(d, e));
            auto [g1, g2] = eff_generators(d, e);
            ok = ok && g1 == pic_make(d, e, 1, 0) && g2 == delta_class(d, e);
            ++r.checks;
            if (!ok) {
                r.pass = false;
                r.counterexample = "cone shadow fails at (d,e)=(" + std::to_string(d) + "," +
                                   std::to_string(e) + ")";
            }
        }
    return r;
}

inline CheckResult complete_curves_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "complete-curves";
    FieldCtx<Rat> q;
    FieldCtx<Fp> fp{cfg.p};
    for (int d = 1; d <= 4 && r.pass; ++d) {
        auto certQ = verify_complete_curve(explicit_curve(d, q));
        ++r.checks;
        if (!certQ.verdict) {
            r.pass = false;
            r.counterexample = certificate_to_json(certQ).dump();
            break;
        }
        auto certP = verify_complete_curve(explicit_curve(d, fp), cfg.p);
        ++r.checks;
        if (!certP.verdict) {
            r.pass = false;
            r.counterexample = certificate_to_json(certP).dump();
            break;
        }
    }
    for (long long p : {2LL, 3LL}) {
        if (!r.pass) break;
        ++r.checks;
        if (!frobenius_line_verdict(p, 2)) {
            r.pass = false;
            r.counterexample = "frobenius sweep failed at p=" + std::to_string(p);
        }
    }
    return r;
}

inline CheckResult mdegree_profile_suite(const VerifyConfig& cfg) {
    (void)cfg;
    CheckResult r;
    r.suite = "mdegree-profile";
    FieldCtx<Rat> q;
    for (int d : {2, 3}) {
        auto fam = explicit_curve(d, q);
        std::vector<long long> m;
        for (int i = 0; i <= d; ++i) m.push_back(mdegree(fam, i));
        long long slope = m[1] - m[0];
        bool ok = m[d] == 0;
        for (int i = 0; i <= d; ++i) ok = ok && m[i] == m[0] + slope * i && m[i] >= 0;
        ++r.checks;
        if (!ok) {
            r.pass = false;
            json cx;
            cx["d"] = d;
            cx["profile"] = m;
            r.counterexample = cx.dump();
        }
    }
    return r;
}

inline CheckResult fiber_degree_suite(const VerifyConfig& cfg) {
    (void)cfg;
    CheckResult r;
    r.suite = "fiber-degree";
    FieldCtx<Rat> q;
    for (int d = 2; d <= 5 && r.pass; ++d)
        for (int u = 1; u < d && r.pass; ++u)
            for (int v = u; v < d && r.pass; ++v) {
                ++r.checks;
                if (!fiber_degree_check(d, u, v, q)) {
                    r.pass = false;
                    r.counterexample = "factor count mismatch at (d,u,v)=(" + std::to_string(d) +
                                       "," + std::to_string(u) + "," + std::to_string(v) + ")";
                }
            }
    return r;
}

inline CheckResult invariant_slices_suite(const VerifyConfig& cfg) {
    (void)cfg;
    CheckResult r;
    r.suite = "invariant-slices";
    for (int e : {2, 3}) {
        ++r.checks;
        if (!series_vs_free_ring(e, 4, 3)) {
            r.pass = false;
            r.counterexample = "invariant table differs from the free ring at e=" +
                               std::to_string(e);
            return r;
        }
    }
    ++r.checks;
    if (!resultant_is_invariant(2, 3)) {
        r.pass = false;
        r.counterexample = "derivations do not annihilate the (2,3) resultant";
    }
    return r;
}

inline CheckResult census_suite(const VerifyConfig& cfg) {
    CheckResult r;
    r.suite = "census";
    for (long long p : {3LL, 5LL}) {
        auto c = census(2, 3, p, cfg.threads, true);
        ++r.checks;
        bool ok = c.delta_by_gcd == c.delta_by_resultant;
        for (int u = 1; u <= 2 && ok; ++u) {
            long long w = c.w_count(u);
            long long scale = 1;
            for (int i = 0; i < 2 + u - 1; ++i) scale *= p;
            ok = w * 8 >= scale && w <= 8 * scale;
        }
        if (!ok) {
            r.pass = false;
            r.counterexample = census_to_json(c).dump();
        }
    }
    return r;
}

}  // namespace suites

/// Runs every suite (alphabetical order) and reports each result to the
/// callback together with its wall time; timings are for logging only and
/// never enter the deterministic report.
template <class Cb>
std::vector<CheckResult> verify_all_cb(const VerifyConfig& cfg, Cb&& after) {
    using SuiteFn = CheckResult (*)(const VerifyConfig&);
    const std::pair<const char*, SuiteFn> table[] = {
        {"census", suites::census_suite},
        {"complete-curves", suites::complete_curves_suite},
        {"cone-shadow", suites::cone_shadow_suite},
        {"degeneration", suites::degeneration_suite},
        {"fiber-degree", suites::fiber_degree_suite},
        {"hilbert-function", suites::hilbert_function_suite},
        {"immersion-corank", suites::immersion_corank_suite},
        {"invariant-slices", suites::invariant_slices_suite},
        {"koszul-span", suites::koszul_span_suite},
        {"mdegree-profile", suites::mdegree_profile_suite},
        {"pic-identities", suites::pic_identities_suite},
        {"psi-roundtrip", suites::psi_roundtrip_suite},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : table) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = fn(cfg);
        auto t1 = std::chrono::steady_clock::now();
        after(r, std::chrono::duration<double>(t1 - t0).count());
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> verify_all(const VerifyConfig& cfg) {
    return verify_all_cb(cfg, [](const CheckResult&, double) {});
}

/// Deterministic report: same config, same bytes. Timings deliberately stay
/// out of this document (they go to stderr in the CLI).
inline json report_json(const std::vector<CheckResult>& results, const VerifyConfig& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["p"] = cfg.p;
    j["grid"] = json::array();
    for (auto [d, e] : cfg.grid) j["grid"].push_back(json::array({d, e}));
    if (!cfg.inject_fault.empty()) j["inject_fault"] = cfg.inject_fault;
    bool all = true;
    json suites_json = json::array();
    for (const auto& r : results) {
        json s;
        s["suite"] = r.suite;
        s["pass"] = r.pass;
        s["checks"] = r.checks;
        s["rejected_draws"] = r.rejected;
        if (!r.counterexample.empty()) {
            json cx;
            if (json::accept(r.counterexample)) cx = json::parse(r.counterexample);
            else cx = r.counterexample;
            s["counterexample"] = cx;
        }
        suites_json.push_back(s);
        all = all && r.pass;
    }
    j["suites"] = suites_json;
    j["pass"] = all;
    return j;
}

}  // namespace binforms
