#include <catch2/catch_amalgamated.hpp>

#include <bicross/bicross.hpp>

using namespace bicross;

namespace {

Perm perm(std::vector<int> v) { return Perm{std::move(v)}; }

MatchedPair s3_pair() {
    auto x = group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})});
    return derive_matched_pair(x, subgroup_generated(x, {1}), subgroup_generated(x, {2}));
}

HopfMap identity_like(HopfPtr H) {
    HopfMap id;
    id.src = id.dst = std::move(H);
    id.cols.resize(id.src->dim);
    for (long i = 0; i < id.src->dim; ++i) id.cols[i] = sv_unit(i);
    return id;
}

}  // namespace

TEST_CASE("bicrossproduct degenerates to the function algebra when M is trivial") {
    auto x = group_from_permutations({perm({1, 2, 0})});
    auto mp = derive_matched_pair(x, full_subgroup(x), trivial_subgroup(x));
    auto H = build_H(mp);
    CHECK(hopf_equal(*H, *function_algebra(x)));
}

TEST_CASE("bicrossproduct degenerates to the group algebra when G is trivial") {
    auto x = group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})});
    auto mp = derive_matched_pair(x, trivial_subgroup(x), full_subgroup(x));
    auto H = build_H(mp);
    CHECK(hopf_equal(*H, *group_algebra(x)));
}

TEST_CASE("S3 example: H and its dual pass all axioms") {
    auto mp = s3_pair();
    auto H = build_H(mp);
    REQUIRE(H->dim == 6);
    auto rep = verify_hopf(*H);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    auto A = build_H_dual(mp);
    auto rep2 = verify_hopf(*A);
    INFO(rep2.first_failure());
    CHECK(rep2.pass());
}

TEST_CASE("the two dual constructions agree entrywise") {
    auto mp = s3_pair();
    CHECK(hopf_equal(dual_hopf(*build_H(mp)), *build_H_dual(mp)));
}

TEST_CASE("S3 example: quantum double passes all axioms") {
    auto mp = s3_pair();
    auto D = build_double(mp);
    REQUIRE(D->dim == 36);
    auto rep = verify_hopf(*D);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    CHECK(antipode_involutive(*D));
}

TEST_CASE("double of the trivial factorisation is one dimensional") {
    auto x = group_from_permutations({});
    auto mp = derive_matched_pair(x, full_subgroup(x), trivial_subgroup(x));
    auto D = build_double(mp);
    CHECK(D->dim == 1);
    CHECK(verify_hopf(*D).pass());
}

TEST_CASE("cross relations match the closed form on all indices") {
    auto mp = s3_pair();
    DoubleBasis B(mp);
    int nM = mp.nM(), nG = mp.nG();
    auto D = build_double(mp);
    for (int t = 0; t < nM; ++t)
        for (int v = 0; v < nG; ++v)
            for (int s = 0; s < nM; ++s)
                for (int u = 0; u < nG; ++u) {
                    // (1 x t x d_v)(d_s x u x 1) in the materialized double
                    SVec left, right;
                    for (int sp = 0; sp < nM; ++sp)
                        left.emplace_back(B.index(sp, 0, t, v), CycScalar::one());
                    for (int vp = 0; vp < nG; ++vp)
                        right.emplace_back(B.index(s, u, 0, vp), CycScalar::one());
                    sv_normalize(left);
                    sv_normalize(right);
                    SVec got = hopf_mul(*D, left, right);
                    auto k = B.cross(t, v, s, u);
                    SVec expect = sv_unit(B.index(k.s, k.u, k.t, k.v));
                    CHECK(sv_equal(got, expect));
                }
}

TEST_CASE("S3 example: kX|>.<k(Y) passes all axioms") {
    auto mp = s3_pair();
    auto dd = build_y_bowtie_x(mp);
    auto K = build_kx_ky(dd);
    REQUIRE(K->dim == 36);
    auto rep = verify_hopf(*K);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    // unit = sum_y e (x) d_y
    KxKyBasis B(dd);
    SVec u;
    for (int y = 0; y < B.n; ++y) u.emplace_back(B.index(0, y), CycScalar::one());
    sv_normalize(u);
    CHECK(sv_equal(K->unit, u));
}

TEST_CASE("kX|>.<k(Y) antipode matches the worked formula") {
    auto mp = s3_pair();
    auto dd = build_y_bowtie_x(mp);
    KxKyBasis B(dd);
    const auto& X = *mp.X;
    int nM = mp.nM(), nG = mp.nG();
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            for (int t = 0; t < nM; ++t)
                for (int v = 0; v < nG; ++v) {
                    int gs = mp.M.global(s), gu = mp.G.global(u);
                    int gt = mp.M.global(t), gv = mp.G.global(v);
                    int x = X.mul[X.inv[mp.G.global(mp.left(s, u))]][gt];
                    int y = X.mul[X.mul[X.mul[gv][X.inv[mp.M.global(mp.right(t, v))]]][X.inv[gs]]][gt];
                    // S(x (x) d_y) = (t<|v)^-1 u (x) d_{u^-1 (t|>v)^-1 (s|>u)(s<|u)}
                    int xe = X.mul[X.inv[mp.M.global(mp.right(t, v))]][gu];
                    int ye = X.mul[X.mul[X.mul[X.inv[gu]][X.inv[mp.G.global(mp.left(t, v))]]]
                                        [mp.G.global(mp.left(s, u))]][mp.M.global(mp.right(s, u))];
                    CHECK(B.antipode(B.index(x, y)) == B.index(xe, ye));
                }
}

TEST_CASE("psi is a Hopf *-algebra isomorphism") {
    auto mp = s3_pair();
    auto dd = build_y_bowtie_x(mp);
    auto D = build_double(mp);
    auto K = build_kx_ky(dd);
    auto psi = build_psi(dd, D, K);
    MapFlags flags;
    flags.algebra = flags.coalgebra = flags.unit_counit = flags.antipode = flags.star =
        flags.bijective = true;
    auto rep = verify_map(psi, flags);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    // psi is a permutation of basis labels
    std::vector<bool> hit(K->dim, false);
    for (const auto& col : psi.cols) {
        REQUIRE(col.size() == 1);
        CHECK(col[0].second == CycScalar::one());
        CHECK_FALSE(hit[col[0].first]);
        hit[col[0].first] = true;
    }
    // all-identity basis element maps to e (x) d_e
    DoubleBasis B(mp);
    KxKyBasis KB(dd);
    CHECK(sv_equal(psi.cols[B.index(0, 0, 0, 0)], sv_unit(KB.index(0, 0))));
}

TEST_CASE("the R matrix of the S3 example") {
    auto mp = s3_pair();
    auto dd = build_y_bowtie_x(mp);
    auto K = build_kx_ky(dd);
    QuasiStructure Q{K, build_R(dd)};

    SECTION("quasitriangularity and Yang-Baxter") {
        auto rep = verify_quasitriangular(Q);
        INFO(rep.first_failure());
        CHECK(rep.pass());
    }
    SECTION("antireality") { CHECK(check_antireal(Q).pass()); }
    SECTION("quantum inverse Killing form: closed form, nondegeneracy") {
        SVec2 computed = hopf_mul2(*K, sv2_swap(Q.R), Q.R);
        CHECK(sv2_equal(computed, build_Q_closed_form(dd)));
        CHECK(rank(r_coefficient_matrix(*K, computed)) == 36);
    }
    SECTION("canonical element and centrality") {
        CHECK(sv_equal(u_element(Q), build_u_closed_form(dd)));
        CHECK(check_central(*K, u_element(Q), "u").pass());
        CHECK(antipode_involutive(*K));
    }
    SECTION("matches the two-sum form of the worked example") {
        KxKyBasis B(dd);
        const auto& X = *mp.X;
        int tr = mp.M.global(1);
        SVec2 direct;
        for (int ui = 0; ui < 3; ++ui)
            for (int vi = 0; vi < 3; ++vi)
                for (int ti = 0; ti < 2; ++ti) {
                    int u = mp.G.global(ui), v = mp.G.global(vi);
                    int t = mp.M.global(ti);
                    direct.push_back({B.index(X.inv[v], u), B.index(0, X.mul[v][t]),
                                      CycScalar::one()});
                    direct.push_back({B.index(X.inv[v], X.mul[u][tr]),
                                      B.index(tr, X.mul[X.inv[v]][t]), CycScalar::one()});
                }
        sv2_normalize(direct);
        CHECK(sv2_equal(direct, Q.R));
    }
    SECTION("perturbing one entry breaks verification with a witness") {
        QuasiStructure bad{K, Q.R};
        bad.R[0].c = -bad.R[0].c;
        auto rep = verify_quasitriangular(bad);
        CHECK_FALSE(rep.pass());
        CHECK_FALSE(rep.first_failure().empty());
    }
}

TEST_CASE("psi transports the canonical double R-matrix") {
    auto mp = s3_pair();
    auto dd = build_y_bowtie_x(mp);
    auto D = build_double(mp);
    auto K = build_kx_ky(dd);
    auto psi = build_psi(dd, D, K);
    DoubleBasis B(mp);
    int nM = mp.nM(), nG = mp.nG();
    // canonical R of the double: sum over the H basis of (dual x 1) (x) (1 x basis)
    SVec2 RD;
    for (int s = 0; s < nM; ++s)
        for (int u = 0; u < nG; ++u)
            for (int t = 0; t < nM; ++t)
                for (int v = 0; v < nG; ++v)
                    RD.push_back({B.index(s, u, 0, v), B.index(t, 0, s, u), CycScalar::one()});
    sv2_normalize(RD);
    QuasiStructure QD{D, RD};
    auto rep = verify_quasitriangular(QD);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    // (psi x psi)(R_D) = R
    SVec2 transported;
    for (const auto& t : RD) {
        long a = psi.cols[t.i][0].first, b = psi.cols[t.j][0].first;
        transported.push_back({a, b, t.c});
    }
    sv2_normalize(transported);
    CHECK(sv2_equal(transported, build_R(dd)));
    // psi(u_D) = sum_x x (x) d_x
    CHECK(sv_equal(map_apply(psi, u_element(QD)), build_u_closed_form(dd)));
}

TEST_CASE("Schroedinger module has quantum dimension |Y|") {
    auto mp = s3_pair();
    auto dd = build_y_bowtie_x(mp);
    auto K = build_kx_ky(dd);
    auto mod = schroedinger_module(dd);
    // module law: action(a) action(b) = action(ab) over all basis pairs
    KxKyBasis B(dd);
    for (long a = 0; a < K->dim; ++a)
        for (long b = 0; b < K->dim; ++b) {
            Mat lhs = mat_mul(module_action(dd, mod, sv_unit(a)),
                              module_action(dd, mod, sv_unit(b)));
            Mat rhs = module_action(dd, mod, K->mult[a][b]);
            if (!(lhs == rhs)) {
                INFO("module law fails at " << K->label(a) << ", " << K->label(b));
                REQUIRE(lhs == rhs);
            }
        }
    CHECK(quantum_dimension(dd, mod) == CycScalar(6));
    // grading compatibility |x |> w| = x |>~ |w|
    for (int x = 0; x < B.n; ++x)
        for (long w = 0; w < mod.dim; ++w)
            for (long r = 0; r < mod.dim; ++r)
                if (!mod.action[x].a[r][w].is_zero())
                    CHECK(mod.grade[r] == dd.act_y[x][mod.grade[w]]);
    // zero module
    YGradedModule zero;
    CHECK(quantum_dimension(dd, zero).is_zero());
}
