#include <doctest.h>

#include <random>

#include "qcpoly/poly.hpp"
#include "qcpoly/poly_text.hpp"

using namespace qcpoly;

namespace {

Poly rand_poly(const FieldCtx& ctx, int max_deg, std::mt19937_64& rng) {
    int d = int(rng() % std::uint64_t(max_deg + 1));
    std::vector<FieldElement> c(std::size_t(d) + 1);
    std::uint64_t card = ctx->cardinality().convert_to<std::uint64_t>();
    for (auto& e : c) e = ctx->element_at(BigInt(rng() % card));
    return Poly::from_coeffs(ctx, std::move(c)); // may trim: degree <= d
}

} // namespace

TEST_CASE("construction, trimming, accessors") {
    FieldCtx F5 = Field::make_prime(5);
    Poly z(F5);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);

    Poly f = Poly::from_coeffs(F5, {F5->from_int(1), F5->from_int(2), F5->zero(), F5->zero()});
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0).residue() == 1);
    CHECK(f.coeff(7).is_zero());
    CHECK(f.leading().residue() == 2);
    CHECK_FALSE(f.is_monic());
    CHECK(f.monic() == Poly::from_coeffs(F5, {F5->from_int(3), F5->one()}));

    Poly m = Poly::monomial(F5, 3, F5->from_int(2));
    CHECK(m.degree() == 3);
    CHECK(m.coeff(3).residue() == 2);
    CHECK(Poly::x(F5).degree() == 1);
    CHECK(Poly::constant(F5, F5->zero()).is_zero());
}

TEST_CASE("ring identities on random polynomials") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2ull, 5ull, 31ull}) {
        FieldCtx F = Field::make_prime(p);
        for (int i = 0; i < 40; ++i) {
            Poly a = rand_poly(F, 8, rng), b = rand_poly(F, 8, rng), c = rand_poly(F, 5, rng);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a * b == b * a);
            CHECK(a - a == Poly(F));
            if (!b.is_zero()) {
                auto [q, r] = a.divmod(b);
                CHECK(a == q * b + r);
                CHECK(r.degree() < b.degree());
                CHECK((a * b) / b == a);
                CHECK(((a * b) % b).is_zero());
            }
        }
    }
}

TEST_CASE("division guards") {
    FieldCtx F5 = Field::make_prime(5);
    CHECK_THROWS_AS(Poly::x(F5).divmod(Poly(F5)), domain_error);
}

TEST_CASE("gcd") {
    FieldCtx F5 = Field::make_prime(5);
    // (x-1)(x+1) and (x-1)^2 share exactly x-1
    Poly a = Poly::from_coeffs(F5, {F5->from_int(-1), F5->zero(), F5->one()});
    Poly b = Poly::from_coeffs(F5, {F5->one(), F5->from_int(-2), F5->one()});
    CHECK(gcd_poly(a, b) == Poly::from_coeffs(F5, {F5->from_int(-1), F5->one()}));
    CHECK(gcd_poly(Poly(F5), Poly(F5)).is_zero());
    CHECK(gcd_poly(a, Poly(F5)) == a.monic());

    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        Poly f = rand_poly(F5, 4, rng), g = rand_poly(F5, 4, rng), h = rand_poly(F5, 4, rng);
        if (f.is_zero() || (g.is_zero() && h.is_zero())) continue;
        Poly d = gcd_poly(f * g, f * h);
        CHECK(f.monic().divides(d));
        CHECK(d.is_monic());
    }
}

TEST_CASE("derivative") {
    FieldCtx F5 = Field::make_prime(5);
    Poly f = parse_poly(F5, "x^5 + 3x^2 + 1");
    CHECK(f.derivative() == parse_poly(F5, "x")); // 5x^4 + 6x = x
    CHECK(parse_poly(F5, "x^5").derivative().is_zero());
    CHECK(Poly(F5).derivative().is_zero());
}

TEST_CASE("evaluation, including points up the tower") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F4 = Field::make_extension(F2, {F2->one(), F2->one(), F2->one()});
    Poly f = parse_poly(F2, "x^2 + x + 1");
    CHECK(f.eval(F2->one()) == F2->one());
    CHECK(f.eval(F4->gen()).is_zero()); // t^2 + t + 1 = 0 by construction
}

TEST_CASE("shift_mul and pow_mod") {
    FieldCtx F2 = Field::make_prime(2);
    Poly f = parse_poly(F2, "x^3 + x + 1");
    CHECK(parse_poly(F2, "x + 1").shift_mul(2) == parse_poly(F2, "x^3 + x^2"));

    Poly naive = Poly::constant(F2, F2->one());
    Poly x = Poly::x(F2);
    for (int i = 0; i < 13; ++i) naive = (naive * x) % f;
    CHECK(pow_mod(x, BigInt(13), f) == naive);
    CHECK(pow_mod_qk(x, BigInt(2), 4, f) == pow_mod(x, BigInt(16), f));
}

TEST_CASE("coefficient-wise tower moves and Frobenius twist") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F4 = Field::make_extension(F2, {F2->one(), F2->one(), F2->one()});
    Poly f = parse_poly(F2, "x^3 + x + 1");
    Poly up = lift_poly(f, F4);
    CHECK(up.ctx().get() == F4.get());
    CHECK(coerce_poly_down(up, F2) == f);

    Poly g = Poly::from_coeffs(F4, {F4->gen(), F4->one()}); // x + t
    CHECK_THROWS_AS(coerce_poly_down(g, F2), domain_error);
    CHECK(coeff_frobenius(g, 1) ==
          Poly::from_coeffs(F4, {F4->gen() + F4->one(), F4->one()})); // t -> t^2 = t + 1
    CHECK(coeff_frobenius(coeff_frobenius(g, 1), 1) == g);
}

TEST_CASE("canonical polynomial order") {
    FieldCtx F2 = Field::make_prime(2);
    Poly u = parse_poly(F2, "x^4 + x + 1");
    Poly v = parse_poly(F2, "x^4 + x^3 + 1");
    Poly w = parse_poly(F2, "x^4 + x^3 + x^2 + x + 1");
    CHECK(poly_less(v, u)); // c_1 decides: 0 < 1
    CHECK(poly_less(u, w));
    CHECK_FALSE(poly_less(u, u));
    CHECK(poly_less(parse_poly(F2, "x^3 + x + 1"), v)); // degree dominates
}

TEST_CASE("wire format: frozen strings") {
    FieldCtx F2 = Field::make_prime(2);
    FieldCtx F5 = Field::make_prime(5);
    CHECK(format_poly(parse_poly(F2, "x^4+x+1")) == "x^4 + x + 1");
    CHECK(format_poly(Poly(F5)) == "0");
    CHECK(format_poly(Poly::x(F5)) == "x");
    CHECK(format_poly(parse_poly(F5, "2x^2+0x+4")) == "2x^2 + 4");
    CHECK(parse_poly(F5, "0").is_zero());
}

TEST_CASE("parse: lenient and strict behavior") {
    FieldCtx F5 = Field::make_prime(5);
    CHECK(parse_poly(F5, "x^2 - x - 3") == parse_poly(F5, "x^2 + 4x + 2"));
    CHECK(parse_poly(F5, "3*x^2 + 1") == parse_poly(F5, "3x^2+1"));
    CHECK(parse_poly(F5, "x + x") == parse_poly(F5, "2x")); // repeated degrees sum
    CHECK(parse_poly(F5, "7x") == parse_poly(F5, "2x"));    // lenient reduces
    CHECK_THROWS_AS(parse_poly(F5, "7x", true), domain_error);
    CHECK_NOTHROW(parse_poly(F5, "4x", true));
    CHECK_THROWS_AS(parse_poly(F5, ""), domain_error);
    CHECK_THROWS_AS(parse_poly(F5, "x^"), domain_error);
    CHECK_THROWS_AS(parse_poly(F5, "x +"), domain_error);
    CHECK_THROWS_AS(parse_poly(F5, "+ x"), domain_error);
    CHECK_THROWS_AS(parse_poly(F5, "y + 1"), domain_error);
    FieldCtx F2 = Field::make_prime(2);
    Poly over_f2 = parse_poly(F2, "x + x");
    CHECK(over_f2.is_zero());
}

TEST_CASE("wire format round-trips on random polynomials") {
    std::mt19937_64 rng(9);
    int violations = 0;
    for (std::uint64_t p : {2ull, 5ull, 31ull}) {
        FieldCtx F = Field::make_prime(p);
        for (int i = 0; i < 350; ++i) {
            Poly f = rand_poly(F, 12, rng);
            if (parse_poly(F, format_poly(f)) != f) ++violations;
        }
    }
    CHECK(violations == 0);
}
