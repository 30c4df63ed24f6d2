#include <catch2/catch_amalgamated.hpp>

#include <bicross/erep.hpp>
#include <bicross/theta.hpp>

using namespace bicross;

namespace {

Perm perm(std::vector<int> v) { return Perm{std::move(v)}; }

MatchedPair s3_pair() {
    auto x = group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})});
    return derive_matched_pair(x, subgroup_generated(x, {1}), subgroup_generated(x, {2}));
}

MatchedPair c6c6_pair() {
    auto x = group_from_permutations({perm({1, 2, 0, 4, 3, 5}), perm({1, 0, 2, 4, 5, 3})});
    return derive_matched_pair(x, subgroup_generated(x, {1}), subgroup_generated(x, {2}));
}

FactorReversingAut c6c6_theta(const MatchedPair& mp) {
    return theta_from_conjugation(mp, perm({3, 4, 5, 0, 1, 2}));  // (1,4)(2,5)(3,6)
}

}  // namespace

TEST_CASE("no factor-reversing automorphism exists when |G| != |M|") {
    CHECK(find_factor_reversing_auts(s3_pair()).empty());
}

TEST_CASE("conjugation by (1,4)(2,5)(3,6) reverses the C6C6 factorisation") {
    auto mp = c6c6_pair();
    auto th = c6c6_theta(mp);
    CHECK(th.involutive(*mp.X));
    // the search finds it
    auto all = find_factor_reversing_auts(mp);
    CHECK_FALSE(all.empty());
    bool present = false;
    for (const auto& a : all) present = present || a.images == th.images;
    CHECK(present);
    // every returned map is a valid reversal
    for (const auto& a : all) CHECK_FALSE(validate_factor_reversing(mp, a.images).has_value());
}

TEST_CASE("Theta is a semi-skew automorphism of the double (C6C6)") {
    auto mp = c6c6_pair();
    auto th = c6c6_theta(mp);
    auto rep = verify_theta_double(mp, th);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    // all-identity basis element is fixed
    DoubleBasis B(mp);
    CHECK(theta_double_index(B, th, B.index(0, 0, 0, 0)) == B.index(0, 0, 0, 0));
}

TEST_CASE("*Theta on kX|>.<k(Y) (C6C6)") {
    auto mp = c6c6_pair();
    auto th = c6c6_theta(mp);
    auto dd = build_y_bowtie_x(mp);
    auto rep = verify_star_theta_kxy(dd, th);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    auto rep2 = check_star_theta_fixed_points(dd, th);
    INFO(rep2.first_failure());
    CHECK(rep2.pass());
}

TEST_CASE("Theta flips the quasitriangular structure (C6C6)") {
    auto mp = c6c6_pair();
    auto th = c6c6_theta(mp);
    auto dd = build_y_bowtie_x(mp);
    auto rep = check_theta_on_R(dd, th);
    INFO(rep.first_failure());
    CHECK(rep.pass());
}

TEST_CASE("theta subfactorisation of C6C6 realizes the adjoint action of S3") {
    auto mp = c6c6_pair();
    auto th = c6c6_theta(mp);
    auto dd = build_y_bowtie_x(mp);
    auto ts = build_theta_subfactorisation(dd, th);
    // X^theta is isomorphic to S3: order 6, nonabelian, three involutions
    auto xg = ts.X_theta.as_group();
    CHECK(xg->order == 6);
    CHECK_FALSE(xg->is_abelian());
    CHECK(count_elements_of_order(*xg, 2) == 3);
    CHECK(ts.Y_theta.size() == 6);
    CHECK(ts.Z->order == 36);

    auto Hsub = build_theta_bicross(ts);
    REQUIRE(Hsub->dim == 36);
    auto rep = verify_hopf(*Hsub);
    INFO(rep.first_failure());
    CHECK(rep.pass());

    auto rep2 = check_theta_coalgebra_match(dd, ts);
    INFO(rep2.first_failure());
    CHECK(rep2.pass());
}

TEST_CASE("block profiles separate the theta bicrossproduct from kG|>.<k(M)") {
    auto mp = c6c6_pair();
    auto th = c6c6_theta(mp);
    auto dd = build_y_bowtie_x(mp);
    auto ts = build_theta_subfactorisation(dd, th);

    auto profile_sub = matrix_block_profile(ts.sub);
    CHECK(profile_sub == std::vector<long>({1, 1, 2, 2, 2, 2, 3, 3}));
    CHECK(*std::max_element(profile_sub.begin(), profile_sub.end()) >= 3);

    // the reversed factorisation X = MG gives kG |>.< k(M)
    auto rev = derive_matched_pair(mp.X, subgroup_generated(mp.X, {2}),
                                   subgroup_generated(mp.X, {1}));
    auto profile_rev = matrix_block_profile(rev);
    CHECK(*std::max_element(profile_rev.begin(), profile_rev.end()) <= 2);
    long sq = 0;
    for (long b : profile_rev) sq += b * b;
    CHECK(sq == 36);

    // block counts agree with the center dimensions of the actual algebras
    CHECK(center_dimension(*build_theta_bicross(ts)) == (long)profile_sub.size());
    CHECK(center_dimension(*build_H(rev)) == (long)profile_rev.size());

    // a commutative function algebra has all blocks of size one
    auto trivial_mp = derive_matched_pair(mp.X, full_subgroup(mp.X), trivial_subgroup(mp.X));
    auto prof = matrix_block_profile(trivial_mp);
    CHECK(prof == std::vector<long>(36, 1));
}

TEST_CASE("triangular example over GF(3), size 2") {
    auto tri = build_triangular_example(2, 3);
    const auto& mp = tri.mp;
    REQUIRE(mp.nG() == 3);
    REQUIRE(mp.nM() == 3);
    REQUIRE(mp.X->order == 9);
    CHECK(tri.aut.involutive(*mp.X));

    auto dd = build_y_bowtie_x(mp);
    auto ts = build_theta_subfactorisation(dd, tri.aut);

    // X(t).X(s) = X(2ts - s - t + 1) as matrices over GF(3)
    auto Xof = [&](int s) { return ts.x_of_m[s]; };
    for (int t = 0; t < mp.nM(); ++t)
        for (int s = 0; s < mp.nM(); ++s) {
            auto ts_m = tri.mat_mul(tri.m_mats[t], tri.m_mats[s]);
            std::vector<int> target(tri.n * tri.n);
            for (int i = 0; i < tri.n * tri.n; ++i) {
                int diag = (i % tri.n == i / tri.n) ? 1 : 0;
                target[i] = ((2 * ts_m[i] - tri.m_mats[s][i] - tri.m_mats[t][i] + diag) % 3 + 3) % 3;
            }
            int tgt_local = -1;
            for (int k = 0; k < mp.nM(); ++k)
                if (tri.m_mats[k] == target) tgt_local = k;
            REQUIRE(tgt_local >= 0);
            CHECK(mp.X->mul[Xof(t)][Xof(s)] == Xof(tgt_local));
        }
    // X(e) = e
    CHECK(Xof(0) == mp.X->identity);

    // alpha(s) = X((s+1)/2) is a group isomorphism T- -> X^theta
    auto half = [&](const std::vector<int>& m) {
        std::vector<int> r(tri.n * tri.n);
        int inv2 = 2;  // 1/2 = 2 mod 3
        for (int i = 0; i < tri.n * tri.n; ++i) {
            int diag = (i % tri.n == i / tri.n) ? 1 : 0;
            r[i] = ((m[i] + diag) * inv2) % 3;
        }
        return r;
    };
    auto alpha = [&](int s) {
        auto hm = half(tri.m_mats[s]);
        int local = -1;
        for (int k = 0; k < mp.nM(); ++k)
            if (tri.m_mats[k] == hm) local = k;
        REQUIRE(local >= 0);
        return Xof(local);
    };
    {
        std::set<int> image;
        for (int s = 0; s < mp.nM(); ++s) image.insert(alpha(s));
        CHECK((int)image.size() == ts.X_theta.size());
        for (int s = 0; s < mp.nM(); ++s)
            for (int t = 0; t < mp.nM(); ++t)
                CHECK(mp.X->mul[alpha(s)][alpha(t)] == alpha(tri.Mg->mul[s][t]));
    }
    // alpha(s) <|~ Y(v) = alpha(s <| v) and alpha(t) |>~ Y(v) = Y(t |> v)
    for (int s = 0; s < mp.nM(); ++s)
        for (int v = 0; v < mp.nG(); ++v) {
            CHECK(dd.act_x[alpha(s)][ts.y_of_g[v]] == alpha(mp.right(s, v)));
            CHECK(dd.act_y[alpha(s)][ts.y_of_g[v]] == ts.y_of_g[mp.left(s, v)]);
        }
}

TEST_CASE("odd prime is required") {
    CHECK_THROWS_AS(build_triangular_example(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_triangular_example(2, 9), std::invalid_argument);
}

TEST_CASE("triangular example size 3: subfactorisation action oracle") {
    auto tri = build_triangular_example(3, 3);
    const auto& mp = tri.mp;
    REQUIRE(mp.X->order == 729);
    auto dd = build_y_bowtie_x(mp);
    auto ts = build_theta_subfactorisation(dd, tri.aut);
    // X(s) |>~ Y(v) = Y(1 + (2 theta(s)^-1 - 1)^-1 (v - 1))
    for (int s = 0; s < mp.nM(); ++s) {
        // 2 s^T - 1 is upper unitriangular; invert it mod p
        auto st = tri.mat_transpose(tri.m_mats[s]);
        std::vector<int> m(tri.n * tri.n);
        for (int i = 0; i < tri.n * tri.n; ++i) {
            int diag = (i % tri.n == i / tri.n) ? 1 : 0;
            m[i] = ((2 * st[i] - diag) % 3 + 3) % 3;
        }
        auto minv = tri.mat_inv(m);
        for (int v = 0; v < mp.nG(); ++v) {
            auto vm1 = tri.g_mats[v];
            for (int i = 0; i < tri.n; ++i) vm1[i * tri.n + i] = 0;
            auto res = tri.mat_mul(minv, vm1);
            for (int i = 0; i < tri.n; ++i) res[i * tri.n + i] = (res[i * tri.n + i] + 1) % 3;
            int target = -1;
            for (int k = 0; k < mp.nG(); ++k)
                if (tri.g_mats[k] == res) target = k;
            REQUIRE(target >= 0);
            CHECK(dd.act_y[ts.x_of_m[s]][ts.y_of_g[v]] == ts.y_of_g[target]);
        }
    }
}

TEST_CASE("Theta materialized as a Hopf map on a small double") {
    auto tri = build_triangular_example(2, 3);
    auto D = build_double(tri.mp);
    DoubleBasis B(tri.mp);
    HopfMap Theta;
    Theta.src = Theta.dst = D;
    Theta.cols.resize(D->dim);
    for (long i = 0; i < D->dim; ++i)
        Theta.cols[i] = sv_unit(theta_double_index(B, tri.aut, i));
    MapFlags flags;
    flags.antialgebra = true;
    flags.coalgebra = true;
    flags.unit_counit = true;
    flags.bijective = true;
    auto rep = verify_map(Theta, flags);
    INFO(rep.first_failure());
    CHECK(rep.pass());
}
