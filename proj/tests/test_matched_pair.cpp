#include <catch2/catch_amalgamated.hpp>

#include <bicross/matched_pair.hpp>

using namespace bicross;

namespace {

Perm perm(std::vector<int> v) { return Perm{std::move(v)}; }

// S3 with G the 3-cycles and M generated by a transposition.
MatchedPair s3_pair() {
    auto x = group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})});
    return derive_matched_pair(x, subgroup_generated(x, {1}), subgroup_generated(x, {2}));
}

// S3 x S3 factorised into two cyclic groups of order 6.
MatchedPair c6c6_pair() {
    auto x = group_from_permutations({perm({1, 2, 0, 4, 3, 5}), perm({1, 0, 2, 4, 5, 3})});
    return derive_matched_pair(x, subgroup_generated(x, {1}), subgroup_generated(x, {2}));
}

}  // namespace

TEST_CASE("derived S3 actions: M acts by conjugation, G back-reaction is trivial") {
    auto mp = s3_pair();
    REQUIRE(mp.nG() == 3);
    REQUIRE(mp.nM() == 2);
    // G is normal in S3, so su = (s u s^-1) s gives s|>u = sus^-1, s<|u = s.
    for (int s = 0; s < mp.nM(); ++s)
        for (int u = 0; u < mp.nG(); ++u) {
            int sus = mp.X->conj(mp.M.global(s), mp.G.global(u));
            CHECK(mp.G.global(mp.left(s, u)) == sus);
            CHECK(mp.right(s, u) == s);
        }
}

TEST_CASE("trivial G forces s|>e=e and s<|e=s") {
    auto x = group_from_permutations({perm({1, 0, 2}), perm({1, 2, 0})});
    auto mp = derive_matched_pair(x, trivial_subgroup(x), full_subgroup(x));
    for (int s = 0; s < mp.nM(); ++s) {
        CHECK(mp.left(s, 0) == 0);
        CHECK(mp.right(s, 0) == s);
    }
    // and the mirror case with trivial M
    auto mp2 = derive_matched_pair(x, full_subgroup(x), trivial_subgroup(x));
    for (int u = 0; u < mp2.nG(); ++u) {
        CHECK(mp2.left(0, u) == u);
        CHECK(mp2.right(0, u) == 0);
    }
}

TEST_CASE("factorisation errors carry a witness") {
    auto x = group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})});
    auto g3 = subgroup_generated(x, {1});
    CHECK_THROWS_AS(derive_matched_pair(x, g3, g3), FactorisationError);
    CHECK_THROWS_AS(derive_matched_pair(x, g3, trivial_subgroup(x)), FactorisationError);
}

TEST_CASE("C6C6 example: the generator of M negates G") {
    auto mp = c6c6_pair();
    REQUIRE(mp.X->order == 36);
    REQUIRE(mp.nG() == 6);
    REQUIRE(mp.nM() == 6);
    int oneM = mp.M.local(2);  // generator g1 has closure index 2
    int oneG_x = 1;            // generator g0 has closure index 1
    for (int k = 0; k < 6; ++k) {
        int kg = mp.G.local(mp.X->power(oneG_x, k));
        int mk = mp.G.local(mp.X->power(oneG_x, (6 - k) % 6));
        CHECK(mp.left(oneM, kg) == mk);
    }
    // mirror: the generator of G negates M
    int oneG_m = mp.G.local(1);
    for (int k = 0; k < 6; ++k) {
        int km = mp.M.local(mp.X->power(2, k));
        int mk = mp.M.local(mp.X->power(2, (6 - k) % 6));
        CHECK(mp.act_right[km][oneG_m] == mk);
    }
}

TEST_CASE("matched-pair inversion identities") {
    for (auto mp : {s3_pair(), c6c6_pair()}) {
        for (int s = 0; s < mp.nM(); ++s)
            for (int v = 0; v < mp.nG(); ++v) {
                int a = mp.m_inv(mp.right(s, v));  // (s<|v)^-1
                int b = mp.g_inv(mp.left(s, v));   // (s|>v)^-1
                CHECK(mp.left(a, b) == mp.g_inv(v));
                CHECK(mp.right(a, b) == mp.m_inv(s));
            }
    }
}

TEST_CASE("double cross product reconstructs X") {
    for (auto mp : {s3_pair(), c6c6_pair()}) {
        auto dc = build_double_cross_group(mp);
        CHECK(dc.group->order == mp.X->order);
        CHECK(order_profile(*dc.group) == order_profile(*mp.X));
    }
}

TEST_CASE("double cross product with trivial actions is the direct product law") {
    // C2 x C3 as a factorisation of C6
    auto x = group_from_permutations({perm({1, 2, 3, 4, 5, 0})});
    auto mp = derive_matched_pair(x, subgroup_generated(x, {x->power(1, 3)}),
                                  subgroup_generated(x, {x->power(1, 2)}));
    for (int s = 0; s < mp.nM(); ++s)
        for (int u = 0; u < mp.nG(); ++u) {
            CHECK(mp.left(s, u) == u);
            CHECK(mp.right(s, u) == s);
        }
    auto dc = build_double_cross_group(mp);
    CHECK(dc.group->is_abelian());
}

TEST_CASE("dressing group of the S3 example") {
    auto mp = s3_pair();
    auto d = build_y_bowtie_x(mp);
    // Y = G x M^op is cyclic of order 6
    CHECK(d.Y->order == 6);
    CHECK(d.Y->is_abelian());
    CHECK(count_elements_of_order(*d.Y, 6) == 2);
    // Y |><| X has order 36, trivial center and 15 involutions, so it is
    // S3 x S3 rather than C4 |x (C3 x C3).
    CHECK(d.YX->order == 36);
    CHECK(d.YX->center().size() == 1);
    CHECK(count_elements_of_order(*d.YX, 2) == 15);
}

TEST_CASE("the competing order-36 group has 9 involutions") {
    // C4 |x (C3 x C3) with generator action (x,y) -> (y,-x)
    auto rho = [](int c, int x, int y) {
        for (int i = 0; i < c; ++i) {
            int nx = y, ny = (3 - x) % 3;
            x = nx;
            y = ny;
        }
        return std::pair<int, int>{x, y};
    };
    auto idx = [](int c, int x, int y) { return c * 9 + x * 3 + y; };
    auto g = make_group(36, [&](int a, int b) {
        int c1 = a / 9, x1 = (a % 9) / 3, y1 = a % 3;
        int c2 = b / 9, x2 = (b % 9) / 3, y2 = b % 3;
        auto [rx, ry] = rho(c1, x2, y2);
        return idx((c1 + c2) % 4, (x1 + rx) % 3, (y1 + ry) % 3);
    });
    CHECK(count_elements_of_order(*g, 2) == 9);
}

TEST_CASE("dressing actions: trivial slots") {
    auto mp = s3_pair();
    auto d = build_y_bowtie_x(mp);
    int e = mp.X->identity;
    for (int y = 0; y < d.Y->order; ++y) {
        CHECK(d.act_y[e][y] == y);
        CHECK(d.act_x[e][y] == e);
    }
    for (int x = 0; x < mp.X->order; ++x) {
        CHECK(d.act_y[x][e] == e);
        CHECK(d.act_x[x][e] == x);
    }
}

TEST_CASE("dressing left action agrees with the expanded product formula") {
    for (auto mp : {s3_pair(), c6c6_pair()}) {
        auto d = build_y_bowtie_x(mp);
        const auto& X = *mp.X;
        for (int x = 0; x < X.order; ++x)
            for (int y = 0; y < X.order; ++y) {
                int u = mp.factor_g[x], s = mp.factor_m[x];
                int v = mp.factor_g[y], t = mp.factor_m[y];
                // u(s|>v) ((s<|v)ts^-1 |> u^-1) ((s<|v)ts^-1 <| u^-1)
                int m1 = mp.m_mul(mp.m_mul(mp.right(s, v), t), mp.m_inv(s));
                int gpart = mp.g_mul(mp.g_mul(u, mp.left(s, v)), mp.left(m1, mp.g_inv(u)));
                int mpart = mp.right(m1, mp.g_inv(u));
                CHECK(d.act_y[x][y] == mp.compose(gpart, mpart));
            }
    }
}

TEST_CASE("S3 dressing right action matches the worked table") {
    auto mp = s3_pair();
    auto d = build_y_bowtie_x(mp);
    const auto& X = *mp.X;
    int tr = mp.M.global(1);  // the transposition generating M
    for (int ui = 0; ui < 3; ++ui)
        for (int vi = 0; vi < 3; ++vi) {
            int u = mp.G.global(ui), v = mp.G.global(vi);
            int u_tr = X.mul[u][tr], v_tr = X.mul[v][tr];
            CHECK(d.act_x[u][v] == u);
            CHECK(d.act_x[u][v_tr] == X.inv[u]);
            CHECK(d.act_x[u_tr][v] == u_tr);
            CHECK(d.act_x[u_tr][v_tr] == X.mul[X.inv[u]][tr]);
        }
}
