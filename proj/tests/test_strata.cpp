#include <catch2/catch_amalgamated.hpp>

#include <binforms/rng.hpp>
#include <binforms/strata.hpp>

#include "helpers.hpp"

using namespace binforms;
using testutil::pform;
using testutil::qform;

TEST_CASE("canonical representatives") {
    CHECK_THROWS_WITH(canonicalize(qform({1, 0}), qform({0, 1, 0})),
                      Catch::Matchers::ContainsSubstring("zero class"));

    auto p = canonicalize(qform({1, 0, 0}), qform({0, 1, 0, 0}) + qform({0, 0, 0, 1}));
    CHECK(p.G == qform({0, 0, 0, 1}));  // X0^2 X1 + X1^3 reduces to X1^3 mod <X0^2>

    // class invariance: G and G + H*F give the same point
    SuiteRng rng(31, "strata-canon");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 30; ++it) {
        auto F = random_nonzero_form(rng, fp, 2);
        auto G = random_nonzero_form(rng, fp, 5);
        auto H = random_form(rng, fp, 3);
        ParamPoint<Fp> a, b;
        try {
            a = canonicalize(F, G);
        } catch (const std::domain_error&) { continue; }
        b = canonicalize(F, G + H * F);
        CHECK(a == b);
        // idempotent
        CHECK(canonicalize(a.F, a.G) == a);
        // scalings do not matter
        CHECK(canonicalize(Fp(7, 101) * F, Fp(13, 101) * G) == a);
    }
}

TEST_CASE("stratum") {
    auto p = canonicalize(qform({1, 0, 0}), qform({0, 0, 0, 1}));
    CHECK(stratum(p).g == 0);
    CHECK(stratum(p).u == 2);
    CHECK_FALSE(stratum(p).in_delta());

    auto q = canonicalize(qform({0, 1, 0}), qform({1, 0, 0, 0}));
    CHECK(stratum(q).g == 1);
    CHECK(stratum(q).u == 1);
    CHECK(stratum(q).in_delta());

    // invariance under representative changes
    SuiteRng rng(37, "strata-inv");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 30; ++it) {
        auto F = random_nonzero_form(rng, fp, 3);
        auto G = random_nonzero_form(rng, fp, 4);
        ParamPoint<Fp> a;
        try {
            a = canonicalize(F, G);
        } catch (const std::domain_error&) { continue; }
        auto H = random_form(rng, fp, 1);
        int g1 = stratum(a).g;
        CHECK(form_gcd(F, G + H * F).degree() == g1);
    }
}

TEST_CASE("multiplication map mu") {
    // u = d: constant A acts as the identity
    auto base = canonicalize(qform({1, 0, 0}), qform({0, 0, 0, 1}));
    auto one = qform({5});
    CHECK(mu(2, one, base) == base);

    // mu(1, X0, [X1, X0^2]) = [X0 X1, X0^3]
    auto bc = canonicalize(qform({0, 1}), qform({1, 0, 0}));
    auto img = mu(1, qform({1, 0}), bc);
    CHECK(img.F == qform({0, 1, 0}));
    CHECK(img.G == qform({1, 0, 0, 0}));
    CHECK(stratum(img).g == 1);

    // image lands in W^u: stratum u-value <= u, with equality for
    // nondegenerate draws (B, C coprime and A coprime to B*C)
    SuiteRng rng(41, "strata-mu");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 40; ++it) {
        int u = 1 + static_cast<int>(rng.below(2));
        int dmu_ = u + 1 + static_cast<int>(rng.below(2));   // d > u
        int emu = dmu_ + 1 + static_cast<int>(rng.below(2)); // e > d
        auto A = random_nonzero_form(rng, fp, dmu_ - u);
        auto B = random_nonzero_form(rng, fp, u);
        auto C = random_nonzero_form(rng, fp, emu - dmu_ + u);
        ParamPoint<Fp> bcp;
        try {
            bcp = canonicalize(B, C);
        } catch (const std::domain_error&) { continue; }
        auto im = mu(u, A, bcp);
        CHECK(stratum(im).u <= u);
        bool clean = form_gcd(B, C).degree() == 0 && form_gcd(A, B * C).degree() == 0;
        if (clean) CHECK(stratum(im).g == dmu_ - u);
    }
}

TEST_CASE("dmu matrix: immersion and corank") {
    // (d,e,u) = (2,3,1), A = X0, B = X1, C = X0^2
    auto r = dmu_matrix(1, qform({1, 0}), qform({0, 1}), qform({1, 0, 0}));
    CHECK(r.kernel_dim == 0);
    CHECK(r.corank == 1);
    CHECK(r.rank == 4);  // e + u

    // planted common factor gives a kernel, with an explicit witness
    SuiteRng rng(43, "strata-dmu");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 25; ++it) {
        int u = 1 + static_cast<int>(rng.below(2));
        int d = u + 1 + static_cast<int>(rng.below(2));
        int e = d + 1 + static_cast<int>(rng.below(2));
        int gamma = 1;
        auto g = random_nonzero_form(rng, fp, gamma);
        auto Ap = random_nonzero_form(rng, fp, d - u - gamma >= 0 ? d - u - gamma : 0);
        if (d - u - gamma < 0) continue;
        auto Bp = random_nonzero_form(rng, fp, u - gamma >= 0 ? u - gamma : 0);
        if (u - gamma < 0) continue;
        auto Cp = random_nonzero_form(rng, fp, e - d + u - gamma);
        auto A = g * Ap, B = g * Bp, C = g * Cp;
        auto res = dmu_matrix(u, A, B, C);
        CHECK(res.kernel_dim >= 1);

        // witness (H, I, J) = (A'(g - i), B' i, C' i), i not proportional to g
        BinaryForm<Fp> i_form = BinaryForm<Fp>::monomial(gamma, 0, Fp(1, 101));
        if (normalized(i_form) == normalized(g)) i_form = BinaryForm<Fp>::monomial(gamma, gamma, Fp(1, 101));
        auto H = Ap * (g - i_form);
        auto I = Bp * i_form;
        auto J = Cp * i_form;
        auto spanAB = multiples_of(A * B, d);
        auto spanAC = multiples_of(A * C, e);
        CHECK(spanAB.contains(B * H + A * I));
        CHECK(spanAC.contains(C * H + A * J));
        bool trivial = multiples_of(A, d - u).contains(H) &&
                       multiples_of(B, u).contains(I) &&
                       multiples_of(C, e - d + u).contains(J);
        CHECK_FALSE(trivial);
    }

    // coprime triples: kernel 0 and corank exactly d-u
    for (int it = 0; it < 40; ++it) {
        int u = 1 + static_cast<int>(rng.below(2));
        int d = u + 1 + static_cast<int>(rng.below(3));
        int e = d + 1 + static_cast<int>(rng.below(3));
        auto t = random_coprime_tuple(rng, fp, {d - u, u, e - d + u});
        auto res = dmu_matrix(u, t[0], t[1], t[2]);
        CHECK(res.kernel_dim == 0);
        CHECK(res.corank == d - u);
    }
}

TEST_CASE("Koszul spanning") {
    CHECK(koszul_span_check(qform({1, 0}), qform({0, 1}), qform({1, 0, 0}), 4));
    // common zero at (0:1) obstructs
    auto X0 = qform({1, 0});
    CHECK_FALSE(koszul_span_check(X0, X0 * X0, X0 * X0 * X0, 5));

    SuiteRng rng(47, "strata-koszul");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 60; ++it) {
        int u = 1 + static_cast<int>(rng.below(2));
        int d = u + 1 + static_cast<int>(rng.below(3));
        int e = d + 1 + static_cast<int>(rng.below(3));
        auto t = random_coprime_tuple(rng, fp, {d - u, u, e - d + u});
        CHECK(koszul_span_check(t[0], t[1], t[2], e + u));
    }
}

TEST_CASE("fiber degree counts") {
    FieldCtx<Rat> q;
    CHECK(fiber_degree_check(4, 1, 2, q));  // C(3,2) = 3
    CHECK(fiber_degree_check(4, 2, 2, q));  // v = u: 1
    CHECK(fiber_degree_check(4, 1, 3, q));  // v = d-1, u = 1: d-1 = 3
    for (int d = 2; d <= 5; ++d)
        for (int u = 1; u < d; ++u)
            for (int v = u; v < d; ++v) CHECK(fiber_degree_check(d, u, v, q));

    // independent oracle over GF(11): exhaustive divisor census of the split
    // form with roots {0,1,2} matches C(3,2) for degree-2 divisors
    long long p = 11;
    {
        BinaryForm<Fp> s(0, {Fp(1, p)});
        for (int r = 0; r < 3; ++r) {
            BinaryForm<Fp> lin(1);
            lin.coeff(0) = Fp(1, p);
            lin.coeff(1) = Fp(-r, p);
            s = s * lin;
        }
        long long divisors = 0;
        // enumerate canonical degree-2 forms over GF(11)
        std::vector<long long> c(3, 0);
        for (int lead = 0; lead < 3; ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            long long count = 1;
            for (int i = lead + 1; i < 3; ++i) count *= p;
            for (long long idx = 0; idx < count; ++idx) {
                long long x = idx;
                BinaryForm<Fp> cand(2);
                cand.coeff(lead) = Fp(1, p);
                for (int i = lead + 1; i < 3; ++i) {
                    cand.coeff(i) = Fp(x % p, p);
                    x /= p;
                }
                try {
                    form_divexact(s, cand);
                    ++divisors;
                } catch (const std::domain_error&) {}
            }
        }
        CHECK(divisors == 3);
    }
}

TEST_CASE("model stratification dimensions") {
    CHECK(pbar_stratum_dims(3, 5, 2) == std::vector<int>{5, 3, 1});
    for (int d = 2; d <= 6; ++d) {
        int e = d + 1;
        CHECK(compactification_boundary_codim(d, e) == 2);
    }
}

TEST_CASE("census: exhaustive counts over small fields") {
    auto r = census(2, 3, 3, 1, true);
    // |P_{2,3}(F_3)| = (3^3-1)/2 * (3^2-1)/2 = 13*4
    CHECK(r.total == 52);
    CHECK(r.delta_by_gcd == r.delta_by_resultant);
    CHECK(r.stratum_counts[0] + r.stratum_counts[1] == r.total);

    // parallel == serial
    auto r4 = census(2, 3, 3, 4, true);
    CHECK(r4.total == r.total);
    CHECK(r4.stratum_counts == r.stratum_counts);
    CHECK(r4.delta_by_gcd == r.delta_by_gcd);
    CHECK(r4.delta_by_resultant == r.delta_by_resultant);

    // |W^u| / q^(d+u-1) stays within [1/8, 8]
    for (auto [d, e] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
        for (long long q : {3LL, 5LL, 7LL, 11LL}) {
            auto c = census(d, e, q, 2, false);
            for (int u = 1; u <= d; ++u) {
                long long w = c.w_count(u);
                long long scale = 1;
                for (int i = 0; i < d + u - 1; ++i) scale *= q;
                CHECK(w * 8 >= scale);
                CHECK(w <= 8 * scale);
            }
        }
    }
}

TEST_CASE("census totals match the closed-form point count") {
    // |P_{d,e}(F_q)| = (q^{d+1}-1)/(q-1) * (q^d-1)/(q-1)
    for (auto [d, e, q] : std::vector<std::array<long long, 3>>{
             {2, 3, 3}, {2, 3, 5}, {2, 4, 3}, {3, 4, 3}}) {
        auto c = census(static_cast<int>(d), static_cast<int>(e), q, 1, false);
        auto ip = [](long long b, long long n) {
            long long r = 1;
            for (long long i = 0; i < n; ++i) r *= b;
            return r;
        };
        long long expect = (ip(q, d + 1) - 1) / (q - 1) * ((ip(q, d) - 1) / (q - 1));
        CHECK(c.total == expect);
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(canonicalize(BinaryForm<Rat>(2), qform({1, 0, 0, 0})),
                    std::invalid_argument);
    auto bc = canonicalize(qform({0, 1}), qform({1, 0, 0}));
    CHECK_THROWS(mu(2, qform({1, 0}), bc));  // bc lives in P_{1,2}, not P_{2,.}
    CHECK_THROWS(census(3, 3, 5));
    CHECK_THROWS(census(2, 3, 1));
    CHECK_THROWS(fiber_degree_check(3, 2, 1, FieldCtx<Rat>{}));  // needs u <= v
}

TEST_CASE("census handles d = 1 (empty resultant locus)") {
    auto c = census(1, 3, 5, 1, true);
    CHECK(c.total == 6);  // (5^2-1)/4 * (5^1-1)/4 = 6 * 1
    CHECK(c.delta_by_gcd == 0);
    CHECK(c.delta_by_resultant == 0);
    CHECK(c.stratum_counts == std::vector<long long>{6});
}
