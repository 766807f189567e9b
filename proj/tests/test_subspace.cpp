#include <catch2/catch_amalgamated.hpp>

#include <binforms/rng.hpp>
#include <binforms/subspace.hpp>

#include "helpers.hpp"

using namespace binforms;
using testutil::qform;

TEST_CASE("span dimensions") {
    auto s = Subspace<Rat>::span(2, {qform({1, 0, 0}), qform({2, 0, 0})});
    CHECK(s.dim() == 1);
    CHECK(s.quotient_dim() == 2);

    auto f = Subspace<Rat>::span(2, {qform({1, 0, 0}), qform({0, 1, 0}), qform({0, 0, 1})});
    CHECK(f.is_full());

    CHECK_THROWS(Subspace<Rat>::span(2, {qform({1, 0, 0}), qform({1, 0})}));

    SuiteRng rng(5, "subspace");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 20; ++it) {
        int df = static_cast<int>(rng.below(4));
        int l = df + static_cast<int>(rng.below(4));
        auto F = random_nonzero_form(rng, fp, df);
        CHECK(multiples_of(F, l).dim() == l - df + 1);
    }
}

TEST_CASE("multiplication image, sum, membership") {
    auto X0 = qform({1, 0});
    CHECK(mul_into(X0, Subspace<Rat>::full(1)).dim() == 2);
    CHECK(mul_into(X0, Subspace<Rat>::full(1)) == multiples_of(X0, 2));

    auto a = multiples_of(qform({1, 0, 0}), 3);   // <X0^2>_3
    auto b = multiples_of(qform({0, 0, 1}), 3);   // <X1^2>_3
    CHECK(sum(a, b).dim() == 4);
    CHECK(sum(a, b).is_full());

    SuiteRng rng(6, "subspace-div");
    FieldCtx<Fp> fp{101};
    for (int it = 0; it < 30; ++it) {
        auto F = random_nonzero_form(rng, fp, 2);
        auto G = random_nonzero_form(rng, fp, 5);
        bool divides = form_gcd(F, G) == normalized(F);
        CHECK(multiples_of(F, 5).contains(G) == divides);
    }
}

TEST_CASE("RREF canonicity") {
    SuiteRng rng(9, "subspace-canon");
    FieldCtx<Rat> q;
    for (int it = 0; it < 20; ++it) {
        int l = 4;
        std::vector<BinaryForm<Rat>> gens;
        for (int i = 0; i < 3; ++i) gens.push_back(random_form(rng, q, l));
        auto s1 = Subspace<Rat>::span(l, gens);
        // shuffled, rescaled, and with linear combinations thrown in
        std::vector<BinaryForm<Rat>> gens2 = {Rat(3) * gens[2], gens[0] + gens[1],
                                              Rat(-2) * gens[1], gens[1] + gens[2], gens[0]};
        auto s2 = Subspace<Rat>::span(l, gens2);
        CHECK(s1 == s2);
        CHECK(s1.basis() == s2.basis());
    }
}

TEST_CASE("rank identity for sums and intersections") {
    SuiteRng rng(10, "subspace-rank");
    FieldCtx<Fp> fp{13};
    for (int it = 0; it < 30; ++it) {
        int l = 5;
        std::vector<BinaryForm<Fp>> ga, gb;
        for (int i = 0; i < 2 + static_cast<int>(rng.below(2)); ++i) ga.push_back(random_form(rng, fp, l));
        for (int i = 0; i < 2 + static_cast<int>(rng.below(2)); ++i) gb.push_back(random_form(rng, fp, l));
        auto S = Subspace<Fp>::span(l, ga);
        auto T = Subspace<Fp>::span(l, gb);
        auto U = sum(S, T);
        // dim(S cap T) via the rank identity
        int cap = S.dim() + T.dim() - U.dim();
        CHECK(cap >= 0);
        CHECK(cap <= std::min(S.dim(), T.dim()));
        for (int i = 0; i < S.dim(); ++i) CHECK(U.contains(S.basis_form(i)));
    }
}

TEST_CASE("reduction residue is canonical") {
    auto s = multiples_of(qform({1, 0, 0}), 3);  // <X0^2>_3, pivots X0^3, X0^2X1
    auto r = s.reduce(qform({1, 2, 3, 4}));
    CHECK(r.coeff(0).is_zero());
    CHECK(r.coeff(1).is_zero());
    CHECK(r == qform({0, 0, 3, 4}));
    CHECK_FALSE(s.contains(r));
}

TEST_CASE("kernel basis really spans the kernel") {
    SuiteRng rng(83, "subspace-kernel");
    FieldCtx<Fp> fp{13};
    for (int it = 0; it < 20; ++it) {
        std::size_t rows = 2 + rng.below(3), cols = 3 + rng.below(4);
        Matrix<Fp> m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = Fp(rng.below(13), 13);
        auto kern = m.right_kernel();
        CHECK(kern.size() == cols - m.rank());
        for (const auto& v : kern) {
            for (std::size_t i = 0; i < rows; ++i) {
                Fp acc(0, 13);
                for (std::size_t j = 0; j < cols; ++j) acc += m(i, j) * v[j];
                REQUIRE(acc.is_zero());
            }
        }
        // Bareiss determinant against cofactor expansion on a 3x3 block
        if (rows >= 3 && cols >= 3) {
            Matrix<Fp> s(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) s(i, j) = m(i, j);
            Fp cof = s(0, 0) * (s(1, 1) * s(2, 2) - s(1, 2) * s(2, 1)) -
                     s(0, 1) * (s(1, 0) * s(2, 2) - s(1, 2) * s(2, 0)) +
                     s(0, 2) * (s(1, 0) * s(2, 1) - s(1, 1) * s(2, 0));
            CHECK(s.det_bareiss() == cof);
        }
    }
}
