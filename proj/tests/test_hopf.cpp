#include <catch2/catch_amalgamated.hpp>

#include <bicross/hopf.hpp>

using namespace bicross;

namespace {
Perm perm(std::vector<int> v) { return Perm{std::move(v)}; }
GroupPtr s3() { return group_from_permutations({perm({1, 2, 0}), perm({1, 0, 2})}); }
}  // namespace

TEST_CASE("group algebra of S3 is a Hopf *-algebra") {
    auto H = group_algebra(s3());
    auto rep = verify_hopf(*H);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    CHECK(antipode_involutive(*H));
}

TEST_CASE("function algebra of S3 is a Hopf *-algebra") {
    auto A = function_algebra(s3());
    auto rep = verify_hopf(*A);
    INFO(rep.first_failure());
    CHECK(rep.pass());
}

TEST_CASE("double dual is canonically the original") {
    auto H = group_algebra(s3());
    auto DD = dual_hopf(dual_hopf(*H));
    CHECK(hopf_equal(*H, DD));
}

TEST_CASE("counit of the dual is the unit coordinates") {
    auto H = group_algebra(s3());
    auto D = dual_hopf(*H);
    for (long i = 0; i < H->dim; ++i) CHECK(D.counit[i] == sv_coeff(H->unit, i));
}

TEST_CASE("identity map passes every flag") {
    auto H = group_algebra(s3());
    HopfMap id;
    id.src = id.dst = H;
    id.cols.resize(H->dim);
    for (long i = 0; i < H->dim; ++i) id.cols[i] = sv_unit(i);
    MapFlags flags;
    flags.algebra = flags.coalgebra = flags.unit_counit = flags.antipode = flags.star =
        flags.bijective = true;
    auto rep = verify_map(id, flags);
    INFO(rep.first_failure());
    CHECK(rep.pass());
}

TEST_CASE("antipode is an antialgebra map") {
    auto H = group_algebra(s3());
    HopfMap S;
    S.src = S.dst = H;
    S.cols = H->antipode;
    MapFlags flags;
    flags.antialgebra = true;
    flags.bijective = true;
    auto rep = verify_map(S, flags);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    // and it is not an algebra map on a nonabelian group algebra
    MapFlags alg;
    alg.algebra = true;
    CHECK_FALSE(verify_map(S, alg).pass());
}

TEST_CASE("map composition tracks antilinearity") {
    auto H = group_algebra(s3());
    HopfMap st;
    st.src = st.dst = H;
    st.cols = H->star;
    st.antilinear = true;
    auto sq = compose(st, st);
    CHECK_FALSE(sq.antilinear);
    for (long i = 0; i < H->dim; ++i) CHECK(sv_equal(sq.cols[i], sv_unit(i)));
    auto inv = map_invert(st);
    REQUIRE(inv.has_value());
    CHECK(inv->antilinear);
}

TEST_CASE("trivial R on a cocommutative Hopf algebra is quasitriangular") {
    auto H = group_algebra(s3());
    QuasiStructure Q{H, unit_tensor_unit(*H)};
    auto rep = verify_quasitriangular(Q);
    INFO(rep.first_failure());
    CHECK(rep.pass());
    CHECK(check_antireal(Q).pass());
    // u = sum (S R(2)) R(1) = 1 here, central by inspection
    CHECK(sv_equal(u_element(Q), H->unit));
    CHECK(check_central(*H, u_element(Q), "u").pass());
}

TEST_CASE("perturbing one R entry produces a witnessed failure") {
    auto H = group_algebra(s3());
    SVec2 R = unit_tensor_unit(*H);
    R.push_back({2, 3, CycScalar(1)});  // stray term
    QuasiStructure Q{H, R};
    auto rep = verify_quasitriangular(Q);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(rep.first_failure().empty());
}
