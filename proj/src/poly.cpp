#include "qcpoly/poly.hpp"

#include <algorithm>

namespace qcpoly {

namespace {

void require_ctx(const Poly& a, const Poly& b) {
    if (a.ctx().get() != b.ctx().get())
        throw domain_error("mixed polynomial contexts: operands belong to different fields");
}

} // namespace

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_coeffs(FieldCtx ctx, std::vector<FieldElement> coeffs) {
    Poly p(std::move(ctx));
    for (const auto& c : coeffs)
        if (!c.attached() || c.field() != p.ctx_.get())
            throw domain_error("Poly: coefficient from another field context");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::constant(const FieldCtx& ctx, const FieldElement& c) {
    return from_coeffs(ctx, {c});
}

Poly Poly::monomial(const FieldCtx& ctx, int deg, const FieldElement& c) {
    if (deg < 0) throw domain_error("monomial: negative degree");
    std::vector<FieldElement> v(std::size_t(deg) + 1, ctx->zero());
    v.back() = c;
    return from_coeffs(ctx, std::move(v));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0) throw domain_error("coeff: negative index");
    if (i >= int(c_.size())) return ctx_->zero();
    return c_[std::size_t(i)];
}

const FieldElement& Poly::leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    require_ctx(a, b);
    Poly r(a.ctx_);
    const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
    const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
    r.c_ = big;
    for (std::size_t i = 0; i < small.size(); ++i) r.c_[i] = r.c_[i] + small[i];
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    require_ctx(a, b);
    Poly r(a.ctx_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.ctx_->zero());
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        FieldElement v = i < a.c_.size() ? a.c_[i] : a.ctx_->zero();
        if (i < b.c_.size()) v = v - b.c_[i];
        r.c_[i] = v;
    }
    r.trim();
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_ctx(a, b);
    Poly r(a.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.ctx_->zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const FieldElement& s) const {
    if (!s.attached() || s.field() != ctx_.get())
        throw domain_error("scalar from another field context");
    Poly r(ctx_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    require_ctx(a, b);
    return a.c_ == b.c_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    require_ctx(*this, d);
    if (d.is_zero()) throw domain_error("division by the zero polynomial");
    Poly q(ctx_), r = *this;
    int dd = d.degree();
    if (degree() < dd) return {q, r};
    q.c_.assign(std::size_t(degree() - dd) + 1, ctx_->zero());
    FieldElement lead_inv = d.leading().inverse();
    for (int i = r.degree(); i >= dd; i = std::min(i - 1, r.degree())) {
        if (i > r.degree() || r.c_[std::size_t(i)].is_zero()) continue;
        FieldElement c = r.c_[std::size_t(i)] * lead_inv;
        q.c_[std::size_t(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) {
            if (d.c_[std::size_t(j)].is_zero()) continue;
            r.c_[std::size_t(i - dd + j)] = r.c_[std::size_t(i - dd + j)] - c * d.c_[std::size_t(j)];
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

Poly Poly::derivative() const {
    Poly r(ctx_);
    if (c_.size() <= 1) return r;
    r.c_.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * ctx_->from_int(std::int64_t(i)));
    r.trim();
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) throw domain_error("monic: zero polynomial");
    if (is_monic()) return *this;
    return *this * leading().inverse();
}

Poly Poly::shift_mul(int k) const {
    if (k < 0) throw domain_error("shift_mul: negative shift");
    if (is_zero() || k == 0) return *this;
    Poly r(ctx_);
    r.c_.assign(c_.size() + std::size_t(k), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + std::size_t(k)] = c_[i];
    return r;
}

FieldElement Poly::eval(const FieldElement& point) const {
    check_internal(point.attached(), "eval at detached point");
    const Field* pf = point.field();
    if (!pf->extends(ctx_.get()))
        throw domain_error("eval: point's field does not extend the coefficient field");
    FieldElement acc = pf->zero();
    FieldCtx target = pf->shared_from_this();
    for (int i = degree(); i >= 0; --i)
        acc = acc * point + lift_to(c_[std::size_t(i)], target);
    return acc;
}

Poly gcd_poly(Poly a, Poly b) {
    require_ctx(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly pow_mod(const Poly& base, const BigInt& e, const Poly& m) {
    require_ctx(base, m);
    if (e < 0) throw domain_error("pow_mod: negative exponent");
    if (m.degree() < 1) throw domain_error("pow_mod: modulus must have degree >= 1");
    Poly r = Poly::constant(base.ctx(), base.ctx()->one()) % m;
    Poly b = base % m;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = (r * b) % m;
        k >>= 1;
        if (k > 0) b = (b * b) % m;
    }
    return r;
}

Poly pow_mod_qk(const Poly& base, const BigInt& q, int k, const Poly& m) {
    if (k < 0) throw domain_error("pow_mod_qk: negative tower exponent");
    Poly r = base % m;
    for (int i = 0; i < k; ++i) r = pow_mod(r, q, m);
    return r;
}

Poly lift_poly(const Poly& f, const FieldCtx& target) {
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(lift_to(c, target));
    return Poly::from_coeffs(target, std::move(cs));
}

Poly coerce_poly_down(const Poly& f, const FieldCtx& target) {
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(coerce_down(c, target));
    return Poly::from_coeffs(target, std::move(cs));
}

Poly coeff_frobenius(const Poly& f, int k) {
    std::vector<FieldElement> cs;
    cs.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) cs.push_back(frobenius(c, k));
    return Poly::from_coeffs(f.ctx(), std::move(cs));
}

bool poly_less(const Poly& a, const Poly& b) {
    require_ctx(a, b);
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        FieldElement ca = a.coeff(i), cb = b.coeff(i);
        if (ca == cb) continue;
        return element_less(ca, cb);
    }
    return false;
}

} // namespace qcpoly
