#include <catch2/catch_amalgamated.hpp>

#include <bicross/chartab.hpp>

using namespace bicross;

namespace {
Perm perm(std::vector<int> v) { return Perm{std::move(v)}; }
GroupPtr s3() { return group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})}); }
}  // namespace

TEST_CASE("character table of the trivial group") {
    auto ct = character_table(group_from_permutations({}));
    REQUIRE(ct.num_classes() == 1);
    CHECK(ct.degree[0] == 1);
    CHECK(ct.chi[0][0] == CycScalar::one());
}

TEST_CASE("character table of S3") {
    auto g = s3();
    auto ct = character_table(g);
    REQUIRE(ct.num_classes() == 3);
    std::vector<long> degs = ct.degree;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<long>{1, 1, 2});
    // trivial character first
    CHECK(ct.trivial_index() == 0);
    // the 2-dimensional character vanishes on transpositions and is -1 on 3-cycles
    for (long r = 0; r < 3; ++r) {
        if (ct.degree[r] != 2) continue;
        for (long c = 0; c < 3; ++c) {
            int rep = ct.classes[c][0];
            int o = g->element_order(rep);
            if (o == 2) CHECK(ct.chi[r][c].is_zero());
            if (o == 3) CHECK(ct.chi[r][c] == -CycScalar::one());
        }
    }
}

TEST_CASE("character table of a cyclic group is the Fourier basis") {
    auto g = group_from_permutations({perm({1, 2, 3, 4, 5, 0})});
    auto ct = character_table(g);
    REQUIRE(ct.num_classes() == 6);
    for (long r = 0; r < 6; ++r) CHECK(ct.degree[r] == 1);
    // each character is zeta^(j*k) on the k-th power of the generator
    for (long r = 0; r < 6; ++r) {
        // identify j by the value on the generator's class
        int genclass = ct.class_of[1];
        CycScalar v = ct.chi[r][genclass];
        long j = -1;
        for (long cand = 0; cand < 6; ++cand)
            if (v == CycScalar::zeta_pow(6, cand)) j = cand;
        REQUIRE(j >= 0);
        for (long k = 0; k < 6; ++k)
            CHECK(ct.chi[r][ct.class_of[g->power(1, k)]] == CycScalar::zeta_pow(6, (j * k) % 6));
    }
}

TEST_CASE("character table of S3 x S3") {
    auto g = group_from_permutations({perm({1, 2, 0, 4, 3, 5}), perm({1, 0, 2, 4, 5, 3})});
    auto ct = character_table(g);
    REQUIRE(ct.num_classes() == 9);
    std::map<long, int> degcount;
    for (long r = 0; r < 9; ++r) ++degcount[ct.degree[r]];
    CHECK(degcount[1] == 4);
    CHECK(degcount[2] == 4);
    CHECK(degcount[4] == 1);
}

TEST_CASE("regular representation of S3 decomposes with multiplicities equal to degrees") {
    auto g = s3();
    auto ct = character_table(g);
    std::vector<Mat> rho(g->order, Mat(6, 6));
    for (int x = 0; x < g->order; ++x)
        for (int y = 0; y < g->order; ++y) rho[x].a[g->mul[x][y]][y] = CycScalar::one();
    auto dec = decompose_rep(g, rho, ct);
    REQUIRE(dec.constituents.size() == 3);
    for (const auto& con : dec.constituents) {
        CHECK(con.multiplicity == con.degree);
        CHECK((long)con.isotypic_basis.size() == con.degree * con.multiplicity);
        REQUIRE((long)con.copies.size() == con.multiplicity);
        // every copy is rho-invariant and of the right dimension
        for (const auto& copy : con.copies) {
            CHECK((long)copy.size() == con.degree);
            for (int x = 0; x < g->order; ++x)
                for (const auto& v : copy) CHECK(span_contains(copy, mat_vec(rho[x], v)));
        }
        if (con.multiplicity == 2) {
            // aligned copies admit a nonzero intertwiner, and so does the
            // generic moduli representative
            auto T = find_intertwiner(*g, rho, con.copies[0], con.copies[1]);
            REQUIRE(T.has_value());
            std::vector<CycScalar> ones(2, CycScalar::one());
            auto diag = moduli_submodule(con, ones);
            for (int x = 0; x < g->order; ++x)
                for (const auto& v : diag) CHECK(span_contains(diag, mat_vec(rho[x], v)));
        }
    }
}

TEST_CASE("permutation representation of S3 on three points") {
    auto g = s3();
    auto ct = character_table(g);
    // realize on the ground set via the stored permutations
    std::vector<Mat> rho(g->order, Mat(3, 3));
    for (int x = 0; x < g->order; ++x)
        for (int i = 0; i < 3; ++i) rho[x].a[g->perms[x](i)][i] = CycScalar::one();
    auto dec = decompose_rep(g, rho, ct);
    REQUIRE(dec.constituents.size() == 2);
    CHECK(dec.constituents[0].char_index == ct.trivial_index());
    CHECK(dec.constituents[0].multiplicity == 1);
    CHECK(dec.constituents[1].degree == 2);
    CHECK(dec.constituents[1].multiplicity == 1);
}

TEST_CASE("decomposition of a trivial-group representation") {
    auto g = group_from_permutations({});
    auto ct = character_table(g);
    std::vector<Mat> rho{Mat::identity(4)};
    auto dec = decompose_rep(g, rho, ct);
    REQUIRE(dec.constituents.size() == 1);
    CHECK(dec.constituents[0].multiplicity == 4);
    CHECK(dec.constituents[0].degree == 1);
    CHECK(dec.constituents[0].copies.size() == 4);
}
