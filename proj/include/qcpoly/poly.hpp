#pragma once

#include <utility>
#include <vector>

#include "qcpoly/field.hpp"

namespace qcpoly {

// Dense univariate polynomial over one field context, lowest coefficient first.
// The coefficient vector never carries trailing zeros; the zero polynomial has an
// empty vector and degree() == -1 (a sentinel, not a number to compute with).
class Poly {
public:
    explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw domain_error("Poly: null field context");
    }

    static Poly from_coeffs(FieldCtx ctx, std::vector<FieldElement> coeffs);
    static Poly constant(const FieldCtx& ctx, const FieldElement& c);
    static Poly monomial(const FieldCtx& ctx, int deg, const FieldElement& c);
    static Poly x(const FieldCtx& ctx) { return monomial(ctx, 1, ctx->one()); }

    const FieldCtx& ctx() const { return ctx_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i; zero beyond the degree.
    FieldElement coeff(int i) const;
    const FieldElement& leading() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator*(const FieldElement& s) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division by a nonzero divisor: returns (quotient, remainder).
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    bool divides(const Poly& other) const { return (other % *this).is_zero(); }

    Poly derivative() const;
    Poly monic() const; // scaled by the inverse leading coefficient
    Poly shift_mul(int k) const; // * x^k

    // Horner evaluation. The point may live in any field extending ctx();
    // coefficients are lifted along the tower as needed.
    FieldElement eval(const FieldElement& point) const;

private:
    void trim();
    FieldCtx ctx_;
    std::vector<FieldElement> c_;
};

Poly gcd_poly(Poly a, Poly b); // monic gcd; gcd(0,0) = 0

// base^e mod m (binary exponentiation).
Poly pow_mod(const Poly& base, const BigInt& e, const Poly& m);
// base^(q^k) mod m built by k successive q-th powers, so the only exponent that
// is ever scanned bitwise is q itself.
Poly pow_mod_qk(const Poly& base, const BigInt& q, int k, const Poly& m);

// Coefficient-wise tower moves (see lift_to / coerce_down on elements).
Poly lift_poly(const Poly& f, const FieldCtx& target);
Poly coerce_poly_down(const Poly& f, const FieldCtx& target);

// Coefficient-wise Frobenius x -> x^(p^k) (the twist used by spins).
Poly coeff_frobenius(const Poly& f, int k);

// Canonical strict order backing every "least factor" choice: degree first, then
// the coefficient tuple (c_0, c_1, ...) compared by element_less.
bool poly_less(const Poly& a, const Poly& b);

} // namespace qcpoly
