#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <binforms/curves.hpp>
#include <binforms/ideals.hpp>
#include <binforms/invariants.hpp>
#include <binforms/io.hpp>
#include <binforms/limits.hpp>
#include <binforms/parse.hpp>
#include <binforms/pic.hpp>
#include <binforms/strata.hpp>
#include <binforms/verify.hpp>

using namespace binforms;

namespace {

struct FieldChoice {
    bool rational = true;
    long long p = 0;
};

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

FieldChoice parse_field_descriptor(const std::string& s) {
    if (s == "q" || s == "Q") return {true, 0};
    if (s.rfind("fp:", 0) == 0) {
        long long p = parse_decimal(s.substr(3));
        if (p < 3 || p % 2 == 0 || p >= (1LL << 31) || !is_prime(p))
            throw ParseError("--field fp:p needs an odd prime below 2^31");
        return {false, p};
    }
    throw ParseError("--field must be 'q' or 'fp:p'");
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    in >> j;
    return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

template <class Fn>
int with_field(const FieldChoice& fc, Fn&& fn) {
    if (fc.rational) return fn(FieldCtx<Rat>{});
    return fn(FieldCtx<Fp>{fc.p});
}

int run(int argc, char** argv) {
    CLI::App app{"exact computations with pairs of binary forms"};
    app.require_subcommand(1);
    app.fallthrough();  // --field may follow the subcommand name

    std::string field_str = "q";
    app.add_option("--field", field_str, "scalar field: q (rationals) or fp:p")
        ->envname("BINFORMS_FIELD");

    // ---- gcd / res / classify ----
    struct PairArgs {
        int d = 0, e = 0;
        std::string F, G;
    } pa;
    auto add_pair_opts = [&pa](CLI::App* c) {
        c->add_option("--d", pa.d, "degree of F")->required();
        c->add_option("--e", pa.e, "degree of G")->required();
        c->add_option("--F", pa.F, "form of degree d, e.g. \"X0^2 + 3*X0*X1\"")->required();
        c->add_option("--G", pa.G, "form of degree e")->required();
    };
    CLI::App* cmd_gcd = app.add_subcommand("gcd", "gcd of two binary forms");
    add_pair_opts(cmd_gcd);
    CLI::App* cmd_res = app.add_subcommand("res", "Sylvester resultant of two binary forms");
    add_pair_opts(cmd_res);
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "gcd stratum of the point [F,G] of P_{d,e}");
    add_pair_opts(cmd_classify);

    // ---- hf ----
    CLI::App* cmd_hf = app.add_subcommand("hf", "Hilbert function of an ideal, or the model table");
    std::string hf_ideal, hf_gens;
    bool hf_model = false, hf_emit = false;
    int hf_d = 0, hf_e = 0, hf_window = -1;
    cmd_hf->add_option("--ideal", hf_ideal, "graded ideal JSON file");
    cmd_hf->add_option("--gens", hf_gens, "generator forms separated by ';' (needs --d, --e)");
    cmd_hf->add_flag("--model", hf_model, "print the model table for (--d, --e)");
    cmd_hf->add_flag("--emit-ideal", hf_emit, "print the graded ideal JSON instead");
    cmd_hf->add_option("--d", hf_d, "d for --model / --gens");
    cmd_hf->add_option("--e", hf_e, "e for --model / --gens");
    cmd_hf->add_option("--window", hf_window, "top degree of the table");

    // ---- psi / psi-inv ----
    CLI::App* cmd_psi = app.add_subcommand("psi", "boundary construction from (Z, Z')");
    int psi_u = 0;
    std::string psi_z, psi_zp;
    cmd_psi->add_option("--u", psi_u, "boundary index")->required();
    cmd_psi->add_option("--Z", psi_z, "ideal JSON of type (d-u, e+u)")->required();
    cmd_psi->add_option("--Zp", psi_zp, "ideal JSON of type (u, e-d+u)")->required();
    CLI::App* cmd_psi_inv = app.add_subcommand("psi-inv", "boundary decomposition of an ideal");
    std::string psi_inv_ideal;
    cmd_psi_inv->add_option("--ideal", psi_inv_ideal, "ideal JSON file")->required();

    // ---- limit ----
    CLI::App* cmd_limit = app.add_subcommand("limit", "flat limit of a one-parameter family");
    std::string limit_family, limit_at = "0";
    int limit_window = -1;
    bool limit_param = false;
    cmd_limit->add_option("--family", limit_family, "family JSON file")->required();
    cmd_limit->add_option("--at", limit_at, "0 or inf");
    cmd_limit->add_option("--window", limit_window, "top degree of the limit ideal");
    cmd_limit->add_flag("--param-point", limit_param, "emit the limit parameter point instead");

    // ---- curve ----
    CLI::App* cmd_curve = app.add_subcommand("curve", "complete-curve certificates and degrees");
    CLI::App* cmd_curve_verify =
        cmd_curve->add_subcommand("verify", "certify a family avoids the resultant divisor");
    int curve_d = 0;
    std::string curve_family;
    cmd_curve_verify->add_option("--d", curve_d, "use the explicit e=d+1 curve");
    cmd_curve_verify->add_option("--family", curve_family, "family JSON file");
    CLI::App* cmd_curve_mdeg = cmd_curve->add_subcommand("mdeg", "degree of the i-th bundle");
    std::string mdeg_family;
    int mdeg_i = 0, mdeg_d = 0;
    cmd_curve_mdeg->add_option("--family", mdeg_family, "family JSON file");
    cmd_curve_mdeg->add_option("--d", mdeg_d, "use the explicit e=d+1 curve");
    cmd_curve_mdeg->add_option("--i", mdeg_i, "bundle index")->required();
    CLI::App* cmd_mdeg = app.add_subcommand("mdeg", "alias of 'curve mdeg'");
    std::string mdeg2_family;
    int mdeg2_i = 0, mdeg2_d = 0;
    cmd_mdeg->add_option("--family", mdeg2_family, "family JSON file");
    cmd_mdeg->add_option("--d", mdeg2_d, "use the explicit e=d+1 curve");
    cmd_mdeg->add_option("--i", mdeg2_i, "bundle index")->required();

    // ---- pic ----
    CLI::App* cmd_pic = app.add_subcommand("pic", "Picard-lattice calculus of the blow-up tower");
    int pic_d = 0, pic_e = 0, pic_i = 0, pic_u = 0;
    std::string pic_class;
    CLI::App* pic_lclass = cmd_pic->add_subcommand("lclass", "the class L^i");
    pic_lclass->add_option("--d", pic_d)->required();
    pic_lclass->add_option("--e", pic_e)->required();
    pic_lclass->add_option("--i", pic_i)->required();
    CLI::App* pic_delta = cmd_pic->add_subcommand("delta", "the resultant divisor class");
    pic_delta->add_option("--d", pic_d)->required();
    pic_delta->add_option("--e", pic_e)->required();
    CLI::App* pic_restrict =
        cmd_pic->add_subcommand("restrict", "restriction to the u-th exceptional divisor");
    pic_restrict->add_option("--d", pic_d)->required();
    pic_restrict->add_option("--e", pic_e)->required();
    pic_restrict->add_option("--u", pic_u)->required();
    pic_restrict->add_option("--class", pic_class, "coordinates h,xi,e1,...")->required();
    CLI::App* pic_nef = cmd_pic->add_subcommand("nef", "coordinates in the L-basis");
    pic_nef->add_option("--d", pic_d)->required();
    pic_nef->add_option("--e", pic_e)->required();
    pic_nef->add_option("--class", pic_class, "coordinates h,xi,e1,...")->required();

    // ---- census ----
    CLI::App* cmd_census = app.add_subcommand("census", "exhaustive stratum census over GF(p)");
    int census_d = 0, census_e = 0, census_threads = 1;
    long long census_p = 0;
    bool census_res = false, census_json = false;
    cmd_census->add_option("--d", census_d)->required();
    cmd_census->add_option("--e", census_e)->required();
    cmd_census->add_option("--p", census_p)->required();
    cmd_census->add_option("--parallel", census_threads, "worker threads");
    cmd_census->add_flag("--resultant-crosscheck", census_res,
                         "also count resultant vanishing");
    cmd_census->add_flag("--json", census_json, "emit JSON instead of CSV");

    // ---- inv ----
    CLI::App* cmd_inv = app.add_subcommand("inv", "invariant slices of the additive action");
    CLI::App* inv_dim = cmd_inv->add_subcommand("dim", "dimension of one bidegree slice");
    int inv_d = 0, inv_e = 0, inv_a = 0, inv_b = 0, inv_amax = 0, inv_bmax = 0;
    inv_dim->add_option("--d", inv_d)->required();
    inv_dim->add_option("--e", inv_e)->required();
    inv_dim->add_option("--a", inv_a)->required();
    inv_dim->add_option("--b", inv_b)->required();
    CLI::App* inv_table = cmd_inv->add_subcommand("table", "CSV table of slice dimensions");
    inv_table->add_option("--d", inv_d)->required();
    inv_table->add_option("--e", inv_e)->required();
    inv_table->add_option("--amax", inv_amax)->required();
    inv_table->add_option("--bmax", inv_bmax)->required();

    // ---- verify-all ----
    CLI::App* cmd_verify = app.add_subcommand("verify-all", "run the whole acceptance battery");
    VerifyConfig vcfg;
    std::string verify_out, verify_grid;
    cmd_verify->add_option("--seed", vcfg.seed, "PRNG seed (determines every draw)");
    cmd_verify->add_option("--p", vcfg.p, "prime field for the randomized suites");
    cmd_verify->add_option("--samples-hf", vcfg.samples_hf);
    cmd_verify->add_option("--samples-psi", vcfg.samples_psi);
    cmd_verify->add_option("--samples-degeneration", vcfg.samples_degeneration);
    cmd_verify->add_option("--samples-immersion", vcfg.samples_immersion);
    cmd_verify->add_option("--samples-koszul", vcfg.samples_koszul);
    cmd_verify->add_option("--threads", vcfg.threads, "census worker threads");
    cmd_verify->add_option("--grid", verify_grid, "pairs d:e separated by commas");
    cmd_verify->add_option("--inject-fault", vcfg.inject_fault,
                           "mutation smoke test, e.g. hf-third-branch-sign");
    cmd_verify->add_option("--out", verify_out, "write the JSON report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    FieldChoice fc = parse_field_descriptor(field_str);

    if (*cmd_gcd) {
        return with_field(fc, [&](auto ctx) {
            auto F = parse_form(pa.F, ctx, pa.d);
            auto G = parse_form(pa.G, ctx, pa.e);
            auto g = form_gcd(F, G);
            json j;
            j["gcd"] = g.str();
            j["degree"] = g.degree();
            emit(j);
            return 0;
        });
    }
    if (*cmd_res) {
        return with_field(fc, [&](auto ctx) {
            auto F = parse_form(pa.F, ctx, pa.d);
            auto G = parse_form(pa.G, ctx, pa.e);
            json j;
            j["resultant"] = resultant(F, G).str();
            emit(j);
            return 0;
        });
    }
    if (*cmd_classify) {
        return with_field(fc, [&](auto ctx) {
            auto F = parse_form(pa.F, ctx, pa.d);
            auto G = parse_form(pa.G, ctx, pa.e);
            auto p = canonicalize(F, G);
            auto s = stratum(p);
            json j;
            j["g"] = s.g;
            j["u"] = s.u;
            j["in_delta"] = s.in_delta();
            emit(j);
            return 0;
        });
    }
    if (*cmd_hf) {
        if (hf_model) {
            if (hf_d < 1 || hf_e <= hf_d) throw ParseError("--model needs 1 <= d < e");
            int top = hf_window < 0 ? hf_d + hf_e : hf_window;
            json j;
            j["d"] = hf_d;
            j["e"] = hf_e;
            json vals = json::array();
            for (int l = 0; l <= top; ++l) vals.push_back(model_hf(hf_d, hf_e, l));
            j["hf"] = vals;
            emit(j);
            return 0;
        }
        if (hf_ideal.empty() && hf_gens.empty())
            throw ParseError("hf needs --ideal, --gens or --model");
        return with_field(fc, [&](auto ctx) {
            using K = decltype(ctx.from_int(0));
            GradedIdeal<K> I;
            if (!hf_ideal.empty()) {
                I = ideal_from_json(load_json(hf_ideal), ctx);
            } else {
                if (hf_d < 1 || hf_e <= hf_d) throw ParseError("--gens needs 1 <= d < e");
                std::vector<BinaryForm<K>> gens;
                std::size_t pos = 0;
                while (pos <= hf_gens.size()) {
                    std::size_t semi = hf_gens.find(';', pos);
                    std::string item = hf_gens.substr(
                        pos, semi == std::string::npos ? std::string::npos : semi - pos);
                    gens.push_back(parse_form(item, ctx));
                    if (semi == std::string::npos) break;
                    pos = semi + 1;
                }
                I = ideal_from_forms<K>(hf_d, hf_e, gens, hf_window);
            }
            if (hf_emit) {
                emit(ideal_to_json(I));
                return 0;
            }
            json j;
            j["d"] = I.d;
            j["e"] = I.e;
            j["hf"] = hilbert_function(I).values;
            j["is_hilb_point"] = is_hilb_point(I);
            emit(j);
            return 0;
        });
    }
    if (*cmd_psi) {
        return with_field(fc, [&](auto ctx) {
            auto Z = ideal_from_json(load_json(psi_z), ctx);
            auto Zp = ideal_from_json(load_json(psi_zp), ctx);
            emit(ideal_to_json(psi(psi_u, Z, Zp)));
            return 0;
        });
    }
    if (*cmd_psi_inv) {
        return with_field(fc, [&](auto ctx) {
            auto Y = ideal_from_json(load_json(psi_inv_ideal), ctx);
            auto dec = psi_inverse(Y);
            json j;
            j["u"] = dec.u;
            j["Z"] = ideal_to_json(dec.Z);
            j["Zp"] = ideal_to_json(dec.Zp);
            emit(j);
            return 0;
        });
    }
    if (*cmd_limit) {
        if (limit_at != "0" && limit_at != "inf") throw ParseError("--at must be 0 or inf");
        return with_field(fc, [&](auto ctx) {
            auto fam = family_from_json(load_json(limit_family), ctx);
            bool at_inf = limit_at == "inf";
            if (limit_param) {
                emit(param_point_to_json(limit_param_point(fam, at_inf)));
                return 0;
            }
            auto shifted = at_inf ? infinity_chart_family(fam) : fam;
            emit(ideal_to_json(flat_limit(shifted, limit_window)));
            return 0;
        });
    }
    if (*cmd_curve_verify) {
        if (curve_d == 0 && curve_family.empty())
            throw ParseError("curve verify needs --d or --family");
        CurveCertificateInfo cert;
        if (fc.rational) {
            FieldCtx<Rat> ctx;
            auto fam = curve_d > 0 ? explicit_curve(curve_d, ctx)
                                   : family_from_json(load_json(curve_family), ctx);
            cert = verify_complete_curve(fam);
        } else {
            FieldCtx<Fp> ctx{fc.p};
            auto fam = curve_d > 0 ? explicit_curve(curve_d, ctx)
                                   : family_from_json(load_json(curve_family), ctx);
            cert = verify_complete_curve(fam, fc.p);
        }
        emit(certificate_to_json(cert));
        return cert.verdict ? 0 : 1;
    }
    if (*cmd_curve_mdeg || *cmd_mdeg) {
        std::string fam_path = *cmd_curve_mdeg ? mdeg_family : mdeg2_family;
        int i = *cmd_curve_mdeg ? mdeg_i : mdeg2_i;
        int dd = *cmd_curve_mdeg ? mdeg_d : mdeg2_d;
        if (dd == 0 && fam_path.empty()) throw ParseError("mdeg needs --d or --family");
        return with_field(fc, [&](auto ctx) {
            auto fam = dd > 0 ? explicit_curve(dd, ctx)
                              : family_from_json(load_json(fam_path), ctx);
            json j;
            j["i"] = i;
            j["degree"] = mdegree(fam, i);
            emit(j);
            return 0;
        });
    }
    if (*pic_lclass) {
        emit(pic_to_json(l_class(pic_d, pic_e, pic_i)));
        return 0;
    }
    if (*pic_delta) {
        emit(pic_to_json(delta_class(pic_d, pic_e)));
        return 0;
    }
    if (*pic_restrict) {
        auto c = pic_from_string(pic_d, pic_e, pic_class);
        auto [p1, p2] = restrict_class(pic_u, c);
        json j;
        j["first"] = pic_to_json(p1);
        j["first_type"] = json::array({pic_d - pic_u, pic_e + pic_u});
        j["second"] = pic_to_json(p2);
        j["second_type"] = json::array({pic_u, pic_e - pic_d + pic_u});
        emit(j);
        return 0;
    }
    if (*pic_nef) {
        auto c = pic_from_string(pic_d, pic_e, pic_class);
        auto lam = nef_coords(c);
        json j;
        json coords = json::array();
        for (const auto& x : lam) coords.push_back(x.str());
        j["coords"] = coords;
        j["is_nef"] = is_nef(c);
        emit(j);
        return 0;
    }
    if (*cmd_census) {
        auto c = census(census_d, census_e, census_p, census_threads, census_res);
        if (census_json) {
            emit(census_to_json(c));
        } else {
            std::cout << census_to_csv(c);
        }
        if (census_res && c.delta_by_gcd != c.delta_by_resultant) return 1;
        return 0;
    }
    if (*inv_dim) {
        if (!fc.rational)
            throw ParseError("derivation criterion invalid in char p; use --field q");
        json j;
        j["d"] = inv_d;
        j["e"] = inv_e;
        j["a"] = inv_a;
        j["b"] = inv_b;
        j["dimension"] = invariant_dimension(inv_d, inv_e, inv_a, inv_b);
        emit(j);
        return 0;
    }
    if (*inv_table) {
        if (!fc.rational)
            throw ParseError("derivation criterion invalid in char p; use --field q");
        std::cout << "a,b,dim\n";
        for (int a = 0; a <= inv_amax; ++a)
            for (int b = 0; b <= inv_bmax; ++b)
                std::cout << a << "," << b << ","
                          << invariant_dimension(inv_d, inv_e, a, b) << "\n";
        return 0;
    }
    if (*cmd_verify) {
        if (!verify_grid.empty()) {
            vcfg.grid.clear();
            std::size_t pos = 0;
            while (pos < verify_grid.size()) {
                std::size_t comma = verify_grid.find(',', pos);
                std::string item = verify_grid.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw ParseError("--grid items look like d:e");
                int d = static_cast<int>(parse_decimal(item.substr(0, colon)));
                int e = static_cast<int>(parse_decimal(item.substr(colon + 1)));
                vcfg.grid.emplace_back(d, e);
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
        double total = 0;
        auto results = verify_all_cb(vcfg, [&total](const CheckResult& r, double secs) {
            total += secs;
            std::cerr << (r.pass ? "[pass] " : "[FAIL] ") << r.suite << "  (" << r.checks
                      << " checks, " << r.rejected << " redraws, " << secs << " s)\n";
        });
        std::cerr << "total: " << total << " s\n";
        json rep = report_json(results, vcfg);
        if (verify_out.empty()) {
            emit(rep);
        } else {
            std::ofstream out(verify_out);
            out << rep.dump(2) << "\n";
        }
        return rep["pass"].get<bool>() ? 0 : 1;
    }
    throw ParseError("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const nlohmann::json::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
