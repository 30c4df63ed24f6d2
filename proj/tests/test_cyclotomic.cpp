#include <catch2/catch_amalgamated.hpp>

#include <bicross/cyclotomic.hpp>
#include <bicross/linalg.hpp>

using namespace bicross;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(rat_from_string("2/4")) == "1/2");
    CHECK(rat_to_string(rat_from_string("-6/3")) == "-2");
    CHECK(rat_to_string(Rat(0)) == "0");
    CHECK_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("sixth root of unity identities") {
    auto z = CycScalar::zeta(6);
    CHECK(z.pow(6) == CycScalar::one());
    for (int k = 1; k < 6; ++k) CHECK(z.pow(k) != CycScalar::one());
    CHECK(z.pow(3) == -CycScalar::one());
    CycScalar sum = CycScalar::zero();
    for (int k = 0; k < 6; ++k) sum += z.pow(k);
    CHECK(sum.is_zero());
}

TEST_CASE("conjugation is the inverse root") {
    for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 12L}) {
        auto z = CycScalar::zeta(n);
        CHECK(z.conj() == CycScalar::zeta_pow(n, n - 1));
        CHECK(z.conj().conj() == z);
    }
}

TEST_CASE("field axioms on sampled values") {
    auto z = CycScalar::zeta(12);
    std::vector<CycScalar> vals{
        CycScalar(Rat(0)),    CycScalar(Rat(1)),         CycScalar(rat_from_string("-3/7")),
        z,                    z.pow(5) - CycScalar(2),   z * CycScalar(rat_from_string("1/2")) + z.pow(7),
    };
    for (const auto& a : vals)
        for (const auto& b : vals) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + (-a)).is_zero());
            if (!b.is_zero()) CHECK(a / b * b == a);
            for (const auto& c : vals) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
            // conjugation is a field automorphism
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    CHECK(CycScalar(rat_from_string("5/3")).conj() == CycScalar(rat_from_string("5/3")));
}

TEST_CASE("embedding commutes with arithmetic") {
    auto z3 = CycScalar::zeta(3);
    auto a = z3 + CycScalar(2);
    auto b = z3.pow(2) - CycScalar(rat_from_string("1/3"));
    CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
    CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
    // mixed-conductor arithmetic resolves into the lcm
    auto z4 = CycScalar::zeta(4);
    auto prod = z3 * z4;
    CHECK(prod.conductor() == 12);
    CHECK(prod == CycScalar::zeta_pow(12, 7));
    CHECK_THROWS(CycScalar::one() / CycScalar::zero());
}

TEST_CASE("dft matrix over Q(zeta_6) has full rank") {
    // Vandermonde determinant of distinct sixth roots of unity is nonzero,
    // so the 6x6 matrix (zeta^(jk)) must have rank 6.
    Mat m(6, 6);
    for (long j = 0; j < 6; ++j)
        for (long k = 0; k < 6; ++k) m.a[j][k] = CycScalar::zeta_pow(6, j * k);
    CycScalar vandermonde = CycScalar::one();
    for (long i = 0; i < 6; ++i)
        for (long j = i + 1; j < 6; ++j)
            vandermonde *= (CycScalar::zeta_pow(6, j) - CycScalar::zeta_pow(6, i));
    REQUIRE(!vandermonde.is_zero());
    CHECK(rank(m) == 6);
}

TEST_CASE("linear solves are exact") {
    Mat A(3, 3);
    auto z = CycScalar::zeta(6);
    A.a[0] = {CycScalar(1), z, z.pow(2)};
    A.a[1] = {z, CycScalar(2), CycScalar(0)};
    A.a[2] = {CycScalar(0), z.pow(4), CycScalar(rat_from_string("1/2"))};
    Vec b{z, CycScalar(1), -z};
    auto x = solve(A, b);
    REQUIRE(x.has_value());
    CHECK(mat_vec(A, *x) == b);
    auto Ainv = inverse(A);
    REQUIRE(Ainv.has_value());
    CHECK(mat_mul(A, *Ainv) == Mat::identity(3));

    // inconsistent system reports failure
    Mat B(2, 1);
    B.a[0][0] = CycScalar(1);
    B.a[1][0] = CycScalar(1);
    CHECK_FALSE(solve(B, Vec{CycScalar(1), CycScalar(2)}).has_value());

    // kernel basis spans the right kernel
    Mat C(1, 3);
    C.a[0] = {CycScalar(1), z, z.pow(2)};
    auto kb = kernel_basis(C);
    REQUIRE(kb.size() == 2);
    for (const auto& v : kb) CHECK(mat_vec(C, v) == Vec{CycScalar(0)});
}
