#include <doctest.h>

#include <random>

#include "qcpoly/factorization.hpp"
#include "qcpoly/field.hpp"

using namespace qcpoly;

namespace {

FieldCtx f4() {
    FieldCtx f2 = Field::make_prime(2);
    return Field::make_extension(f2, {f2->one(), f2->one(), f2->one()}); // t^2 + t + 1
}

// F_16 as F_4[y]/(y^2 + y + t).
FieldCtx f16(const FieldCtx& F4) {
    return Field::make_extension(F4, {F4->gen(), F4->one(), F4->one()});
}

} // namespace

TEST_CASE("prime field arithmetic") {
    FieldCtx F5 = Field::make_prime(5);
    FieldElement a = F5->from_int(3), b = F5->from_int(4);
    CHECK((a * b).residue() == 2);
    CHECK((a + b).residue() == 2);
    CHECK((a - b).residue() == 4);
    CHECK((a / b).residue() == 2); // 3 * 4^{-1} = 3 * 4 = 12
    CHECK(a.inverse().residue() == 2);
    CHECK((-a).residue() == 2);
    CHECK(F5->from_int(-3) == F5->from_int(2));
    CHECK(F5->characteristic() == 5);
    CHECK(F5->cardinality() == 5);
    CHECK(F5->is_prime_field());
    CHECK(pow(a, BigInt(100)).is_one()); // ord(3) = 4 divides 100
    CHECK(pow(a, BigInt(0)).is_one());
}

TEST_CASE("prime field constructor rejects bad p") {
    CHECK_THROWS_AS(Field::make_prime(1), domain_error);
    CHECK_THROWS_AS(Field::make_prime(4), domain_error);
    CHECK_THROWS_AS(Field::make_prime((std::uint64_t(1) << 31) + 11), domain_error);
}

TEST_CASE("quadratic extension") {
    FieldCtx F4 = f4();
    FieldElement t = F4->gen();
    CHECK(t * t == t + F4->one()); // t^2 = t + 1
    CHECK(pow(t, BigInt(3)).is_one());
    CHECK(mult_order(t) == 3);
    CHECK(F4->cardinality() == 4);
    CHECK(F4->step_degree() == 2);
    CHECK(F4->degree_over_prime() == 2);
    CHECK(F4->characteristic() == 2);
    CHECK_FALSE(F4->is_prime_field());
}

TEST_CASE("two-step tower shape") {
    FieldCtx F4 = f4();
    FieldCtx F16 = f16(F4);
    CHECK(F16->cardinality() == 16);
    CHECK(F16->degree_over_prime() == 4);
    CHECK(F16->step_degree() == 2);
    CHECK(F16->base().get() == F4.get());
    CHECK_THROWS_AS(element_degree(F16->gen(), Field::make_prime(2)), domain_error);
}

TEST_CASE("tower moves: lift, coerce, degrees") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F4 = Field::make_extension(F2, {F2->one(), F2->one(), F2->one()});
    FieldCtx F16 = f16(F4);
    FieldElement t = F4->gen();
    FieldElement d = F16->gen();

    FieldElement up = lift_to(t, F16);
    CHECK(element_degree(up, F2) == 2);
    CHECK(coerce_down(up, F4) == t);
    CHECK_THROWS_AS(coerce_down(d, F4), domain_error); // genuinely outside F_4

    CHECK(element_degree(d, F2) == 4);
    CHECK(element_degree(d, F4) == 2);
    CHECK(element_degree(lift_to(F2->one(), F16), F2) == 1);

    // Frobenius over the prime field: x -> x^2; fixed exactly on F_2's image.
    CHECK(frobenius(up) == up * up);
    CHECK(frobenius(d, 2) == pow(d, BigInt(4)));
    CHECK(frobenius(lift_to(F2->one(), F16)) == lift_to(F2->one(), F16));
}

TEST_CASE("frobenius is a ring morphism") {
    FieldCtx F4 = f4();
    FieldCtx F16 = f16(F4);
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        FieldElement a = F16->element_at(BigInt(rng() % 16));
        FieldElement b = F16->element_at(BigInt(rng() % 16));
        CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
        CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
    }
}

TEST_CASE("canonical enumeration round-trips and matches element_less") {
    FieldCtx F4 = f4();
    FieldCtx F16 = f16(F4);
    for (int i = 0; i < 16; ++i) {
        FieldElement a = F16->element_at(BigInt(i));
        CHECK(F16->index_of(a) == i);
        if (i > 0) CHECK(element_less(F16->element_at(BigInt(i - 1)), a));
    }
    CHECK_FALSE(element_less(F16->one(), F16->one()));
}

TEST_CASE("mixed contexts refuse to combine") {
    FieldCtx a = Field::make_prime(5);
    FieldCtx b = Field::make_prime(5); // structurally equal, different object
    CHECK_THROWS_AS(a->from_int(1) + b->from_int(1), domain_error);
    CHECK_THROWS_AS(a->from_int(2) == b->from_int(2), domain_error);
}

TEST_CASE("division and inversion guard zero") {
    FieldCtx F5 = Field::make_prime(5);
    CHECK_THROWS_AS(F5->one() / F5->zero(), domain_error);
    CHECK_THROWS_AS(F5->zero().inverse(), domain_error);
}

TEST_CASE("pow_power agrees with pow") {
    FieldCtx F5 = Field::make_prime(5);
    FieldElement a = F5->from_int(2);
    CHECK(pow_power(a, BigInt(2), 10) == pow(a, BigInt(1024)));
    FieldCtx F4 = f4();
    CHECK(pow_power(F4->gen(), BigInt(3), 4) == pow(F4->gen(), BigInt(81)));
}

TEST_CASE("multiplicative orders") {
    FieldCtx F7 = Field::make_prime(7);
    CHECK(mult_order(F7->from_int(3)) == 6);
    CHECK(mult_order(F7->from_int(2)) == 3);
    CHECK(mult_order(F7->one()) == 1);
    CHECK_THROWS_AS(mult_order(F7->zero()), domain_error);

    // the dividing variant verifies its hint
    CHECK(mult_order_dividing(F7->from_int(3), BigInt(12)) == 6);
    CHECK_THROWS_AS(mult_order_dividing(F7->from_int(3), BigInt(4)), domain_error);
}

TEST_CASE("extends walks the base chain") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F4 = Field::make_extension(F2, {F2->one(), F2->one(), F2->one()});
    FieldCtx F16 = f16(F4);
    CHECK(F16->extends(F4.get()));
    CHECK(F16->extends(F2.get()));
    CHECK(F16->extends(F16.get()));
    CHECK_FALSE(F4->extends(F16.get()));
    CHECK_FALSE(F4->extends(Field::make_prime(2).get()));
}
