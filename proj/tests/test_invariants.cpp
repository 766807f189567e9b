#include <catch2/catch_amalgamated.hpp>

#include <binforms/invariants.hpp>
#include <binforms/rng.hpp>

using namespace binforms;

TEST_CASE("derivation matrices") {
    CoordRing R{1, 2};
    // slice (0,1), j = 0: D_0(b_m) = a_m for m <= 1, D_0(b_2) = 0
    auto m = derivation_matrix(R, 0, 0, 1);
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 2);
    CHECK(m(0, 0) == Rat(1));
    CHECK(m(0, 1) == Rat(0));
    CHECK(m(1, 0) == Rat(0));
    CHECK(m(1, 1) == Rat(1));
    CHECK(m(2, 0) == Rat(0));
    CHECK(m(2, 1) == Rat(0));

    // pure a-monomials are annihilated
    MultiPoly pureA = R.a(0) * R.a(1);
    for (int j = 0; j <= 1; ++j) CHECK(R.derivation(j, pureA).is_zero());

    // Leibniz rule on random slice elements
    SuiteRng rng(71, "inv-leibniz");
    for (int it = 0; it < 10; ++it) {
        auto rnd = [&] {
            MultiPoly p(R.nvars());
            for (int k = 0; k < 3; ++k) {
                MultiPoly mono = MultiPoly::constant(Rat(rng.below(9) - 4), R.nvars());
                mono = mono * R.a(rng.below(2)) * R.b(rng.below(3));
                p += mono;
            }
            return p;
        };
        MultiPoly x = rnd(), y = rnd();
        for (int j = 0; j <= 1; ++j) {
            MultiPoly lhs = R.derivation(j, x * y);
            MultiPoly rhs = R.derivation(j, x) * y + x * R.derivation(j, y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("invariant slice dimensions for d=1") {
    CHECK(invariant_dimension(1, 2, 1, 0) == 2);
    CHECK(invariant_dimension(1, 2, 0, 1) == 0);
    CHECK(invariant_dimension(1, 2, 2, 1) == 1);
    CHECK(invariant_dimension(1, 2, 0, 0) == 1);

    // the (2,1) invariant is a1^2 b0 - a0 a1 b1 + a0^2 b2
    CoordRing R{1, 2};
    MultiPoly P = R.a(1) * R.a(1) * R.b(0) - R.a(0) * R.a(1) * R.b(1) + R.a(0) * R.a(0) * R.b(2);
    for (int j = 0; j <= 1; ++j) CHECK(R.derivation(j, P).is_zero());

    // products of invariants stay invariant
    MultiPoly Q = P * P;
    for (int j = 0; j <= 1; ++j) CHECK(R.derivation(j, Q).is_zero());

    // coordinate functions of V_d are invariant in every (1,0) slice
    for (auto [d, e] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 5}})
        CHECK(invariant_dimension(d, e, 1, 0) == d + 1);
}

TEST_CASE("free-ring comparison for d=1") {
    CHECK(series_vs_free_ring(2, 4, 4));
    CHECK(series_vs_free_ring(3, 6, 2));
}

TEST_CASE("symbolic resultant is invariant") {
    // Res_{2,3} sits in bidegree (e,d) = (3,2)
    MultiPoly res = resultant_sym(2, 3);
    CHECK_FALSE(res.is_zero());
    CoordRing R{2, 3};
    for (const auto& [exp, c] : res.terms()) {
        int adeg = 0, bdeg = 0;
        for (int i = 0; i <= 2; ++i) adeg += exp[R.a_var(i)];
        for (int m = 0; m <= 3; ++m) bdeg += exp[R.b_var(m)];
        CHECK(adeg == 3);
        CHECK(bdeg == 2);
    }
    CHECK(resultant_is_invariant(2, 3));
}

TEST_CASE("symbolic resultant specializes to the scalar one") {
    // evaluate the symbolic resultant at F = X0^2 - X1^2, G = X1^3 and
    // compare against the Sylvester determinant over the rationals
    MultiPoly res = resultant_sym(2, 3);
    std::vector<Rat> vals = {Rat(1), Rat(0), Rat(-1),            // a_0..a_2
                             Rat(0), Rat(0), Rat(0), Rat(1)};    // b_0..b_3
    Rat acc(0);
    for (const auto& [exp, c] : res.terms()) {
        Rat term = c;
        for (std::size_t v = 0; v < vals.size(); ++v)
            for (int k = 0; k < exp[v]; ++k) term *= vals[v];
        acc += term;
    }
    BinaryForm<Rat> F(2, {Rat(1), Rat(0), Rat(-1)});
    BinaryForm<Rat> G(3, {Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(acc == resultant(F, G));
}
