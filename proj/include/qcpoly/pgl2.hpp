#pragma once

#include "qcpoly/poly.hpp"

namespace qcpoly {

// Class of an invertible 2x2 matrix [[a, b], [c, d]] over F_q modulo scalars,
// normalized so the first nonzero entry in reading order is 1. The class acts
// on polynomials by f -> lambda (bx + d)^deg(f) f((ax + c)/(bx + d)) with lambda
// chosen to make the result monic (the Moebius substitution reads the matrix by
// columns: numerator ax + c, denominator bx + d).
class PGL2Class {
public:
    PGL2Class(FieldCtx ctx, const FieldElement& a, const FieldElement& b,
              const FieldElement& c, const FieldElement& d);

    const FieldCtx& ctx() const { return ctx_; }
    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    friend bool operator==(const PGL2Class& x, const PGL2Class& y);
    friend bool operator!=(const PGL2Class& x, const PGL2Class& y) { return !(x == y); }

    // Representative product (normalized again); the class of the product.
    friend PGL2Class operator*(const PGL2Class& x, const PGL2Class& y);

    bool is_identity() const;

private:
    FieldCtx ctx_;
    FieldElement a_, b_, c_, d_;
};

// [[0, 1], [c, 1]]; requires x^2 - x - c irreducible over the context.
PGL2Class a_c_class(const FieldCtx& ctx, const FieldElement& c);

// Smallest d >= 1 with A^d scalar. Element orders in PGL2(F_q) divide q - 1 or
// q + 1 or equal the characteristic, so the search is capped at q + 1.
BigInt pgl2_order(const PGL2Class& A);

// [A] . f for monic irreducible f of degree >= 2; result is monic of the same
// degree. Monicity and degree are always checked; set verify_irreducible to pay
// for the full input check.
Poly apply_pgl2(const PGL2Class& A, const Poly& f, bool verify_irreducible = false);

// Least c in the canonical element order with x^2 - x - c irreducible and
// ord([A_c]) = D. Domain error when no such c exists (D must divide q + 1 and
// exceed 2, but existence is searched, not assumed).
FieldElement find_c(const FieldCtx& ctx, const BigInt& D);

// Action on elements of extension fields: [A] . beta = (d beta - c) / (a - b beta).
// Used by tests to cross the element/polynomial bridge.
FieldElement pgl2_apply_element(const PGL2Class& A, const FieldElement& beta);

} // namespace qcpoly
