#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qcpoly/pgl2.hpp"
#include "qcpoly/factorization.hpp"
#include "qcpoly/poly_text.hpp"

using namespace qcpoly;

namespace {

PGL2Class random_class(const FieldCtx& ctx, std::mt19937_64& rng) {
    const std::uint64_t q = ctx->cardinality().convert_to<std::uint64_t>();
    while (true) {
        FieldElement a = ctx->element_at(BigInt(rng() % q));
        FieldElement b = ctx->element_at(BigInt(rng() % q));
        FieldElement c = ctx->element_at(BigInt(rng() % q));
        FieldElement d = ctx->element_at(BigInt(rng() % q));
        if (!(a * d - b * c).is_zero()) return PGL2Class(ctx, a, b, c, d);
    }
}

} // namespace

TEST_CASE("class construction: normalization and rejection") {
    FieldCtx F5 = Field::make_prime(5);
    PGL2Class A(F5, F5->from_int(2), F5->from_int(4), F5->from_int(1), F5->from_int(3));
    CHECK(A.a() == F5->one());
    CHECK(A.b() == F5->from_int(2));
    CHECK(A.c() == F5->from_int(3));
    CHECK(A.d() == F5->from_int(4));

    PGL2Class B(F5, F5->zero(), F5->from_int(2), F5->from_int(3), F5->from_int(4));
    CHECK(B.a() == F5->zero());
    CHECK(B.b() == F5->one()); // first nonzero entry scaled to 1
    CHECK(A == A);
    CHECK(A != B);

    CHECK_THROWS_AS(PGL2Class(F5, F5->from_int(1), F5->from_int(2), F5->from_int(2), F5->from_int(4)),
                    domain_error);
    FieldCtx F2 = Field::make_prime(2);
    CHECK_THROWS_AS(PGL2Class(F5, F2->one(), F5->zero(), F5->zero(), F5->one()), domain_error);
    CHECK_THROWS_AS(A == PGL2Class(F2, F2->one(), F2->zero(), F2->zero(), F2->one()), domain_error);
}

TEST_CASE("a_c_class: shape and admissibility") {
    FieldCtx F2 = Field::make_prime(2);
    PGL2Class A = a_c_class(F2, F2->one());
    CHECK(A.a() == F2->zero());
    CHECK(A.b() == F2->one());
    CHECK(A.c() == F2->one());
    CHECK(A.d() == F2->one());

    FieldCtx F5 = Field::make_prime(5);
    CHECK_THROWS_AS(a_c_class(F5, F5->from_int(1)), domain_error); // x^2 - x - 1 = (x + 2)^2
    CHECK_THROWS_AS(a_c_class(F5, F5->zero()), domain_error);
    CHECK_NOTHROW(a_c_class(F5, F5->from_int(3)));
}

TEST_CASE("pgl2_order: frozen values and the power identity") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F5 = Field::make_prime(5);
    FieldCtx F7 = Field::make_prime(7);
    CHECK(pgl2_order(a_c_class(F2, F2->one())) == 3);
    CHECK(pgl2_order(a_c_class(F5, F5->from_int(3))) == 6);
    CHECK(pgl2_order(a_c_class(F5, F5->from_int(4))) == 3);
    CHECK(pgl2_order(a_c_class(F7, F7->from_int(1))) == 8);
    CHECK(pgl2_order(a_c_class(F7, F7->from_int(3))) == 4);

    PGL2Class diag(F7, F7->from_int(3), F7->zero(), F7->zero(), F7->one());
    CHECK(pgl2_order(diag) == 6); // ord of 3 in F_7^*

    PGL2Class id(F7, F7->from_int(4), F7->zero(), F7->zero(), F7->from_int(4));
    CHECK(id.is_identity()); // scalar matrices normalize to the identity
    CHECK(pgl2_order(id) == 1);

    PGL2Class A = a_c_class(F5, F5->from_int(3));
    PGL2Class P = A;
    for (int i = 1; i < 6; ++i) {
        CHECK_FALSE(P.is_identity());
        P = P * A;
    }
    CHECK(P.is_identity());
}

TEST_CASE("find_c: frozen values and rejections") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F5 = Field::make_prime(5);
    FieldCtx F7 = Field::make_prime(7);
    CHECK(find_c(F2, 3) == F2->one());
    CHECK(find_c(F5, 3) == F5->from_int(4));
    CHECK(find_c(F5, 6) == F5->from_int(3));
    CHECK(find_c(F7, 4) == F7->from_int(3));
    CHECK(find_c(F7, 8) == F7->one());
    CHECK_THROWS_AS(find_c(F5, 4), domain_error); // 4 does not divide q + 1 = 6
    CHECK_THROWS_AS(find_c(F2, 2), domain_error);
}

TEST_CASE("apply_pgl2: composition is a left action") {
    std::mt19937_64 rng(31);
    FieldCtx F5 = Field::make_prime(5);
    std::vector<Poly> pool;
    for (int n = 2; n <= 4; ++n)
        for (const Poly& f : oracles::irreducibles_by_sieve(F5, n)) pool.push_back(f);
    for (int i = 0; i < 30; ++i) {
        PGL2Class A = random_class(F5, rng);
        PGL2Class B = random_class(F5, rng);
        const Poly& f = pool[rng() % pool.size()];
        CHECK(apply_pgl2(B, apply_pgl2(A, f)) == apply_pgl2(B * A, f));
        CHECK(apply_pgl2(A, f).degree() == f.degree());
        CHECK(apply_pgl2(A, f).is_monic());
    }
}

TEST_CASE("apply_pgl2: fixed points and orbits of A_1 over F_2") {
    FieldCtx F2 = Field::make_prime(2);
    PGL2Class A = a_c_class(F2, F2->one());
    PGL2Class id(F2, F2->one(), F2->zero(), F2->zero(), F2->one());

    // both cubics and the quadratic are invariant
    for (const char* s : {"x^3 + x + 1", "x^3 + x^2 + 1", "x^2 + x + 1"}) {
        Poly f = parse_poly(F2, s);
        CHECK(apply_pgl2(A, f) == f);
        CHECK(apply_pgl2(id, f) == f);
    }

    // no quartic is invariant (3 does not divide 4): the three quartics form one orbit
    Poly u = parse_poly(F2, "x^4 + x + 1");
    Poly u1 = apply_pgl2(A, u, true);
    Poly u2 = apply_pgl2(A, u1, true);
    CHECK(apply_pgl2(A, u2) == u);
    std::vector<Poly> orbit{u, u1, u2};
    std::sort(orbit.begin(), orbit.end(), poly_less);
    CHECK(orbit == oracles::irreducibles_by_sieve(F2, 4));
}

TEST_CASE("apply_pgl2: input checks") {
    FieldCtx F2 = Field::make_prime(2);
    PGL2Class A = a_c_class(F2, F2->one());
    CHECK_THROWS_AS(apply_pgl2(A, parse_poly(F2, "x + 1")), domain_error);
    CHECK_THROWS_AS(apply_pgl2(A, parse_poly(F2, "x^4 + x^2 + 1"), true), domain_error);
    FieldCtx F5 = Field::make_prime(5);
    CHECK_THROWS_AS(apply_pgl2(A, parse_poly(F5, "x^2 + 2")), domain_error); // wrong field
    PGL2Class A5 = a_c_class(F5, F5->from_int(3));
    CHECK_THROWS_AS(apply_pgl2(A5, parse_poly(F5, "2x^2 + 4")), domain_error); // not monic
}

TEST_CASE("pgl2_apply_element matches the polynomial action on roots") {
    FieldCtx F2 = Field::make_prime(2);
    PGL2Class A = a_c_class(F2, F2->one());
    for (const char* s : {"x^3 + x + 1", "x^4 + x + 1", "x^4 + x^3 + 1", "x^5 + x^2 + 1"}) {
        Poly f = parse_poly(F2, s);
        FieldCtx K = extend_field(F2, f);
        FieldElement beta = pgl2_apply_element(A, K->gen());
        CHECK(min_poly(beta, F2) == apply_pgl2(A, f));
    }
    CHECK_THROWS_AS(pgl2_apply_element(A, F2->zero()), domain_error); // pole: a - b*0 = 0
    FieldCtx F5 = Field::make_prime(5);
    CHECK_THROWS_AS(pgl2_apply_element(A, F5->one()), domain_error); // wrong tower
}
