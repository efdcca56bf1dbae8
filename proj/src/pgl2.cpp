#include "qcpoly/pgl2.hpp"

#include "qcpoly/factorization.hpp"
#include "qcpoly/poly_text.hpp"

namespace qcpoly {

PGL2Class::PGL2Class(FieldCtx ctx, const FieldElement& a, const FieldElement& b,
                     const FieldElement& c, const FieldElement& d)
    : ctx_(std::move(ctx)), a_(a), b_(b), c_(c), d_(d) {
    if (!ctx_) throw domain_error("PGL2Class: null context");
    for (const FieldElement* e : {&a_, &b_, &c_, &d_})
        if (!e->attached() || e->field() != ctx_.get())
            throw domain_error("PGL2Class: entries must live in the given field");
    if ((a_ * d_ - b_ * c_).is_zero())
        throw domain_error("PGL2Class: singular matrix");
    for (FieldElement* e : {&a_, &b_, &c_, &d_}) {
        if (e->is_zero()) continue;
        FieldElement s = e->inverse();
        a_ = a_ * s;
        b_ = b_ * s;
        c_ = c_ * s;
        d_ = d_ * s;
        break;
    }
}

bool operator==(const PGL2Class& x, const PGL2Class& y) {
    if (x.ctx_.get() != y.ctx_.get())
        throw domain_error("PGL2Class: comparing classes over different fields");
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

PGL2Class operator*(const PGL2Class& x, const PGL2Class& y) {
    if (x.ctx_.get() != y.ctx_.get())
        throw domain_error("PGL2Class: multiplying classes over different fields");
    return PGL2Class(x.ctx_,
                     x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                     x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

bool PGL2Class::is_identity() const {
    // normalization sends every scalar matrix to the identity representative
    return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_one();
}

PGL2Class a_c_class(const FieldCtx& ctx, const FieldElement& c) {
    Poly charpoly = Poly::from_coeffs(ctx, {-c, -ctx->one(), ctx->one()});
    if (!is_irreducible(charpoly))
        throw domain_error("a_c_class: x^2 - x - c is reducible for c = " + describe_element(c));
    return PGL2Class(ctx, ctx->zero(), ctx->one(), c, ctx->one());
}

BigInt pgl2_order(const PGL2Class& A) {
    const BigInt cap = A.ctx()->cardinality() + 1;
    PGL2Class B = A;
    BigInt d = 1;
    while (!B.is_identity()) {
        B = B * A;
        ++d;
        check_internal(d <= cap, "pgl2_order: no scalar power within q + 1 steps");
    }
    return d;
}

Poly apply_pgl2(const PGL2Class& A, const Poly& f, bool verify_irreducible) {
    if (f.ctx().get() != A.ctx().get())
        throw domain_error("apply_pgl2: polynomial over a different field");
    const int k = f.degree();
    if (k < 2) throw domain_error("apply_pgl2: degree must be >= 2");
    if (!f.is_monic()) throw domain_error("apply_pgl2: polynomial must be monic");
    if (verify_irreducible && !is_irreducible(f))
        throw domain_error("apply_pgl2: polynomial is reducible");

    const FieldCtx& ctx = f.ctx();
    Poly num = Poly::from_coeffs(ctx, {A.c(), A.a()});
    Poly den = Poly::from_coeffs(ctx, {A.d(), A.b()});
    std::vector<Poly> num_pow{Poly::constant(ctx, ctx->one())};
    std::vector<Poly> den_pow{Poly::constant(ctx, ctx->one())};
    for (int i = 1; i <= k; ++i) {
        num_pow.push_back(num_pow.back() * num);
        den_pow.push_back(den_pow.back() * den);
    }
    Poly r(ctx);
    for (int j = 0; j <= k; ++j) {
        FieldElement cj = f.coeff(j);
        if (cj.is_zero()) continue;
        r = r + (num_pow[std::size_t(j)] * den_pow[std::size_t(k - j)]) * cj;
    }
    if (r.degree() != k)
        throw domain_error("apply_pgl2: degree dropped; the input was not irreducible over the field");
    return r.monic();
}

FieldElement find_c(const FieldCtx& ctx, const BigInt& D) {
    if (D < 3) throw domain_error("find_c: order must be > 2");
    if ((ctx->cardinality() + 1) % D != 0)
        throw domain_error("find_c: order " + D.str() + " does not divide q + 1 = " +
                           BigInt(ctx->cardinality() + 1).str());
    for (BigInt i = 0; i < ctx->cardinality(); ++i) {
        FieldElement c = ctx->element_at(i);
        Poly charpoly = Poly::from_coeffs(ctx, {-c, -ctx->one(), ctx->one()});
        if (!is_irreducible(charpoly)) continue;
        if (pgl2_order(a_c_class(ctx, c)) == D) return c;
    }
    throw domain_error("find_c: no matrix of order " + D.str() + " over this field");
}

FieldElement pgl2_apply_element(const PGL2Class& A, const FieldElement& beta) {
    check_internal(beta.attached(), "pgl2_apply_element: detached element");
    FieldCtx K = beta.field()->shared_from_this();
    if (!beta.field()->extends(A.ctx().get()))
        throw domain_error("pgl2_apply_element: element's field does not extend the matrix field");
    FieldElement a = lift_to(A.a(), K), b = lift_to(A.b(), K);
    FieldElement c = lift_to(A.c(), K), d = lift_to(A.d(), K);
    FieldElement den = a - b * beta;
    if (den.is_zero()) throw domain_error("pgl2_apply_element: pole of the Moebius action");
    return (d * beta - c) / den;
}

} // namespace qcpoly
