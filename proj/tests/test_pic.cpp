#include <catch2/catch_amalgamated.hpp>

#include <binforms/pic.hpp>
#include <binforms/rng.hpp>

using namespace binforms;

TEST_CASE("L classes and the resultant class") {
    auto l2 = l_class(3, 5, 2);
    CHECK(l2.h == 4);
    CHECK(l2.xi == 2);
    CHECK(l2.exc == std::vector<long long>{-1});

    auto l0 = l_class(4, 9, 0);
    CHECK(l0.h == 5);
    CHECK(l0.xi == 0);
    CHECK(l0.exc == std::vector<long long>{0, 0});

    auto l1 = l_class(2, 7, 1);  // d=2: (e-1) h + xi, no exceptional part
    CHECK(l1.h == 6);
    CHECK(l1.xi == 1);
    CHECK(l1.exc.empty());

    auto dl = delta_class(2, 3);
    CHECK(dl.h == 3);
    CHECK(dl.xi == 2);
    auto dl2 = delta_class(3, 5);
    CHECK(dl2.h == 5);
    CHECK(dl2.xi == 3);
    CHECK(dl2.exc == std::vector<long long>{-2});
    CHECK_THROWS(delta_class(1, 5));
    CHECK_THROWS(l_class(3, 5, 4));

    // d = 1 normalization: every class is a multiple of h
    auto one = pic_make(1, 4, 2, 1);
    CHECK(one.xi == 0);
    CHECK(one.h == 2 - 4);
}

TEST_CASE("triviality relation at i = d") {
    for (int d = 2; d <= 8; ++d)
        for (int e = d + 1; e <= 12; ++e) CHECK(l_class(d, e, d).is_zero());
    CHECK(l_class(1, 5, 1).is_zero());
}

TEST_CASE("restriction rules reproduce the exceptional-divisor identities") {
    // worked case: restrict(3,5,1, L^2) = (L^1 on (2,6), trivial on (1,3))
    auto [f, s] = restrict_class(1, l_class(3, 5, 2));
    CHECK(f == l_class(2, 6, 1));
    CHECK(s.is_zero());

    // restricting zero gives zero
    auto [zf, zs] = restrict_class(1, pic_zero(3, 5));
    CHECK(zf.is_zero());
    CHECK(zs.is_zero());

    // the full grid: d <= 8, e <= 12, all admissible u, i
    for (int d = 2; d <= 8; ++d)
        for (int e = d + 1; e <= 12; ++e)
            for (int u = 1; u <= d - 1; ++u)
                for (int i = 0; i <= d; ++i) {
                    auto [p1, p2] = restrict_class(u, l_class(d, e, i));
                    if (i >= u) {
                        CHECK(p1 == l_class(d - u, e + u, i - u));
                        CHECK(p2.is_zero());
                    }
                    if (i <= u) {
                        CHECK(p1 == pic_make(d - u, e + u, e - d + 2 * i, 0));
                        CHECK(p2 == l_class(u, e - d + u, i));
                    }
                }
}

TEST_CASE("restriction is additive") {
    SuiteRng rng(61, "pic-add");
    for (int it = 0; it < 50; ++it) {
        int d = 3 + static_cast<int>(rng.below(4));
        int e = d + 1 + static_cast<int>(rng.below(4));
        int u = 1 + static_cast<int>(rng.below(d - 1));
        auto rnd = [&rng, d, e] {
            PicClass c = pic_zero(d, e);
            c.h = rng.below(9) - 4;
            c.xi = rng.below(9) - 4;
            for (auto& x : c.exc) x = rng.below(9) - 4;
            return c;
        };
        PicClass a = rnd(), b = rnd();
        auto [s1, s2] = restrict_class(u, a + b);
        auto [a1, a2] = restrict_class(u, a);
        auto [b1, b2] = restrict_class(u, b);
        CHECK(s1 == a1 + b1);
        CHECK(s2 == a2 + b2);
    }
}

TEST_CASE("nef coordinates and the cone shadow") {
    for (int d = 2; d <= 8; ++d)
        for (int e = d + 1; e <= 12; ++e) {
            // {L^i} is a basis: the solve succeeds and L^i has unit coordinates
            for (int i = 0; i < d; ++i) {
                auto lam = nef_coords(l_class(d, e, i));
                for (int j = 0; j < d; ++j) CHECK(lam[j] == (i == j ? Rat(1) : Rat(0)));
                CHECK(is_nef(l_class(d, e, i)));
            }
            // O(1,0): nonnegative multiple of L^0
            auto lh = nef_coords(pic_make(d, e, 1, 0));
            CHECK(lh[0] == Rat(1, e - d));
            for (int j = 1; j < d; ++j) CHECK(lh[j] == Rat(0));
            CHECK(is_nef(pic_make(d, e, 1, 0)));

            // delta = 2 L^{d-1} - L^{d-2}: on the effective boundary but not nef
            auto ld = nef_coords(delta_class(d, e));
            CHECK(ld[d - 1] == Rat(2));
            CHECK(ld[d - 2] == Rat(-1));
            for (int j = 0; j < d - 2; ++j) CHECK(ld[j] == Rat(0));
            CHECK_FALSE(is_nef(delta_class(d, e)));

            auto [g1, g2] = eff_generators(d, e);
            CHECK(g1 == pic_make(d, e, 1, 0));
            CHECK(g2 == delta_class(d, e));
        }

    // d = 1: rank-1 lattice, L^0 = (e-1) h
    auto lam = nef_coords(pic_make(1, 3, 4, 0));
    CHECK(lam == std::vector<Rat>{Rat(2)});  // 4 h = 2 * (2 h)
    CHECK(is_nef(pic_make(1, 3, 4, 0)));
    CHECK_FALSE(is_nef(pic_make(1, 3, -1, 0)));
}

TEST_CASE("lattice error paths") {
    CHECK_THROWS(restrict_class(0, l_class(3, 5, 1)));
    CHECK_THROWS(restrict_class(3, l_class(3, 5, 1)));
    CHECK_THROWS(pic_zero(3, 3));
    CHECK_THROWS(pic_make(3, 5, 1, 0, {1, 2}));     // wrong exc length
    PicClass a = pic_zero(3, 5), b = pic_zero(2, 5);
    CHECK_THROWS(a + b);                            // mixed lattices
}
