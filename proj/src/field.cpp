#include "qcpoly/field.hpp"

#include <algorithm>
#include <string>

namespace qcpoly {

namespace {

const Field* same_field(const FieldElement& a, const FieldElement& b) {
    check_internal(a.attached() && b.attached(), "operation on detached field element");
    if (a.field() != b.field())
        throw domain_error("mixed field contexts: operands belong to different fields");
    return a.field();
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, 0 < a < p
    std::int64_t t = 0, nt = 1, r = std::int64_t(p), nr = std::int64_t(a);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    check_internal(r == 1, "inv_mod_u64: argument not a unit");
    if (t < 0) t += std::int64_t(p);
    return std::uint64_t(t);
}

// --- dense vector arithmetic over a base field (lowest coefficient first) ---
// Used for extension-step reduction and inversion. Vectors are not kept trimmed;
// vdeg scans for the true degree.

using Vec = std::vector<FieldElement>;

int vdeg(const Vec& v) {
    for (int i = int(v.size()) - 1; i >= 0; --i)
        if (!v[i].is_zero()) return i;
    return -1;
}

// r -= c * d shifted by s (in place; r is large enough)
void vsubmul(Vec& r, const FieldElement& c, const Vec& d, int s) {
    for (std::size_t j = 0; j < d.size(); ++j) {
        if (d[j].is_zero()) continue;
        r[s + j] = r[s + j] - c * d[j];
    }
}


Vec vmul(const Vec& a, const Vec& b, const FieldElement& zero) {
    int da = vdeg(a), db = vdeg(b);
    if (da < 0 || db < 0) return Vec{zero};
    Vec r(std::size_t(da + db + 1), zero);
    for (int i = 0; i <= da; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j <= db; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------- FieldElement

bool FieldElement::is_zero() const {
    check_internal(attached(), "is_zero on detached element");
    if (!field_->base()) return val_ == 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool FieldElement::is_one() const {
    check_internal(attached(), "is_one on detached element");
    if (!field_->base()) return val_ == 1;
    if (!coeffs_[0].is_one()) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

std::uint64_t FieldElement::residue() const {
    check_internal(attached(), "residue on detached element");
    if (field_->base()) throw domain_error("residue: element is not at the prime level");
    return val_;
}

const std::vector<FieldElement>& FieldElement::coeffs() const {
    check_internal(attached(), "coeffs on detached element");
    if (!field_->base()) throw domain_error("coeffs: element is at the prime level");
    return coeffs_;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field* f = same_field(a, b);
    FieldElement r;
    r.field_ = f;
    if (!f->base()) {
        r.val_ = a.val_ + b.val_;
        if (r.val_ >= f->characteristic()) r.val_ -= f->characteristic();
        return r;
    }
    r.coeffs_.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field* f = same_field(a, b);
    FieldElement r;
    r.field_ = f;
    if (!f->base()) {
        r.val_ = a.val_ + f->characteristic() - b.val_;
        if (r.val_ >= f->characteristic()) r.val_ -= f->characteristic();
        return r;
    }
    r.coeffs_.reserve(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return r;
}

FieldElement FieldElement::operator-() const {
    check_internal(attached(), "negation of detached element");
    FieldElement r;
    r.field_ = field_;
    if (!field_->base()) {
        r.val_ = val_ == 0 ? 0 : field_->characteristic() - val_;
        return r;
    }
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field* f = same_field(a, b);
    FieldElement r;
    r.field_ = f;
    if (!f->base()) {
        r.val_ = (a.val_ * b.val_) % f->characteristic(); // p < 2^31: no overflow
        return r;
    }
    const int m = f->step_degree();
    FieldElement bz = f->base()->zero();
    Vec buf = vmul(a.coeffs_, b.coeffs_, bz);
    buf.resize(std::size_t(2 * m - 1), bz);
    const Vec& mod = f->modulus();
    for (int i = 2 * m - 2; i >= m; --i) {
        if (buf[i].is_zero()) continue;
        FieldElement c = buf[i]; // modulus is monic
        vsubmul(buf, c, mod, i - m);
    }
    buf.resize(std::size_t(m));
    r.coeffs_ = std::move(buf);
    return r;
}

FieldElement FieldElement::inverse() const {
    check_internal(attached(), "inverse of detached element");
    if (is_zero()) throw domain_error("inverse of zero");
    const Field* f = field_;
    if (!f->base()) {
        FieldElement r;
        r.field_ = f;
        r.val_ = inv_mod_u64(val_, f->characteristic());
        return r;
    }
    // extended Euclid against the step modulus, coefficients over the base
    const Field* B = f->base().get();
    FieldElement bz = B->zero(), bo = B->one();
    Vec r0 = f->modulus(), r1 = coeffs_;
    Vec t0{bz}, t1{bo};
    while (vdeg(r1) > 0) {
        int d0 = vdeg(r0), d1 = vdeg(r1);
        // one long-division pass: r0 mod r1, tracking t
        FieldElement lead_inv = r1[std::size_t(d1)].inverse();
        Vec q(std::size_t(std::max(d0 - d1 + 1, 1)), bz);
        Vec rem = r0;
        for (int i = vdeg(rem); i >= d1; i = std::min(i - 1, vdeg(rem))) {
            if (rem[std::size_t(i)].is_zero()) continue;
            FieldElement c = rem[std::size_t(i)] * lead_inv;
            q[std::size_t(i - d1)] = c;
            vsubmul(rem, c, r1, i - d1);
        }
        Vec qt = vmul(q, t1, bz);
        Vec tn(std::max(t0.size(), qt.size()), bz);
        for (std::size_t i = 0; i < tn.size(); ++i) {
            FieldElement v = i < t0.size() ? t0[i] : bz;
            if (i < qt.size()) v = v - qt[i];
            tn[i] = v;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (vdeg(r1) == 0) {
        // gcd reached at r1: scale t1
        FieldElement s = r1[0].inverse();
        Vec out(std::size_t(f->step_degree()), bz);
        for (std::size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = t1[i] * s;
        for (std::size_t i = out.size(); i < t1.size(); ++i)
            check_internal(t1[i].is_zero(), "inverse: cofactor degree out of range");
        FieldElement res;
        res.field_ = f;
        res.coeffs_ = std::move(out);
        return res;
    }
    // nonzero element sharing a factor with the modulus: the modulus is reducible
    throw domain_error("inverse: extension modulus is not irreducible");
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    const Field* f = same_field(a, b);
    if (!f->base()) return a.val_ == b.val_;
    return a.coeffs_ == b.coeffs_;
}

// ------------------------------------------------------------------- Field

FieldCtx Field::make_prime(std::uint64_t p) {
    if (p < 2) throw domain_error("make_field: characteristic must be >= 2");
    if (p >= (1ull << 31))
        throw domain_error("make_field: p must be < 2^31");
    if (!is_prime(BigInt(p)))
        throw domain_error("make_field: " + std::to_string(p) + " is not prime");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->cardinality_ = p;
    return f;
}

FieldCtx Field::make_extension(FieldCtx base, std::vector<FieldElement> modulus) {
    if (!base) throw domain_error("make_extension: null base context");
    while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
    if (modulus.size() < 3)
        throw domain_error("make_extension: step modulus must have degree >= 2");
    for (const auto& c : modulus)
        if (!c.attached() || c.field() != base.get())
            throw domain_error("make_extension: modulus coefficients must live in the base field");
    if (!modulus.back().is_one())
        throw domain_error("make_extension: step modulus must be monic");
    auto f = std::shared_ptr<Field>(new Field());
    int deg = int(modulus.size()) - 1;
    f->base_ = std::move(base);
    f->p_ = f->base_->p_;
    f->step_degree_ = deg;
    f->degree_over_prime_ = f->base_->degree_over_prime_ * deg;
    f->cardinality_ = boost::multiprecision::pow(f->base_->cardinality_, unsigned(deg));
    f->modulus_ = std::move(modulus);
    return f;
}

const std::vector<FieldElement>& Field::modulus() const {
    if (!base_) throw domain_error("modulus: prime field has no step modulus");
    return modulus_;
}

FieldElement Field::zero() const {
    FieldElement e;
    e.field_ = this;
    if (base_) e.coeffs_.assign(std::size_t(step_degree_), base_->zero());
    return e;
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t v) const {
    if (!base_) {
        FieldElement e;
        e.field_ = this;
        std::int64_t m = v % std::int64_t(p_);
        if (m < 0) m += std::int64_t(p_);
        e.val_ = std::uint64_t(m);
        return e;
    }
    FieldElement e = zero();
    e.coeffs_[0] = base_->from_int(v);
    return e;
}

FieldElement Field::gen() const {
    if (!base_) throw domain_error("gen: prime field has no extension variable");
    FieldElement e = zero();
    e.coeffs_[1] = base_->one();
    return e;
}

FieldElement Field::element(std::vector<FieldElement> coeffs) const {
    if (!base_) throw domain_error("element: use from_int at the prime level");
    if (int(coeffs.size()) > step_degree_)
        throw domain_error("element: coefficient vector longer than the step degree");
    for (const auto& c : coeffs)
        if (!c.attached() || c.field() != base_.get())
            throw domain_error("element: coefficients must live in the base field");
    FieldElement e = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.coeffs_[i] = std::move(coeffs[i]);
    return e;
}

bool Field::extends(const Field* anc) const {
    for (const Field* f = this; f != nullptr; f = f->base_.get())
        if (f == anc) return true;
    return false;
}

FieldElement Field::element_at(const BigInt& index) const {
    if (index < 0 || index >= cardinality_) throw domain_error("element_at: index out of range");
    if (!base_) {
        FieldElement e;
        e.field_ = this;
        e.val_ = index.convert_to<std::uint64_t>();
        return e;
    }
    FieldElement e = zero();
    BigInt rest = index;
    const BigInt& bc = base_->cardinality_;
    // a_0 is the most significant digit so that index order matches element_less
    for (int i = step_degree_ - 1; i >= 0; --i) {
        BigInt digit = rest % bc;
        rest /= bc;
        e.coeffs_[std::size_t(i)] = base_->element_at(digit);
    }
    return e;
}

BigInt Field::index_of(const FieldElement& a) const {
    check_internal(a.attached() && a.field() == this, "index_of: element from another field");
    if (!base_) return BigInt(a.val_);
    BigInt idx = 0;
    for (int i = 0; i < step_degree_; ++i)
        idx = idx * base_->cardinality_ + base_->index_of(a.coeffs_[std::size_t(i)]);
    return idx;
}

// --------------------------------------------------------------- free helpers

bool element_less(const FieldElement& a, const FieldElement& b) {
    const Field* f = same_field(a, b);
    if (!f->base()) return a.residue() < b.residue();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == cb[i]) continue;
        return element_less(ca[i], cb[i]);
    }
    return false;
}

FieldElement pow(const FieldElement& a, const BigInt& e) {
    check_internal(a.attached(), "pow on detached element");
    if (e < 0) throw domain_error("pow: negative exponent (invert explicitly)");
    const Field* f = a.field();
    FieldElement r = f->one();
    FieldElement b = a;
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = r * b;
        k >>= 1;
        if (k > 0) b = b * b;
    }
    return r;
}

FieldElement pow_power(const FieldElement& a, const BigInt& b, int k) {
    if (k < 0) throw domain_error("pow_power: negative tower exponent");
    FieldElement r = a;
    for (int i = 0; i < k; ++i) r = pow(r, b);
    return r;
}

FieldElement frobenius(const FieldElement& a, int k) {
    check_internal(a.attached(), "frobenius on detached element");
    return pow_power(a, BigInt(a.field()->characteristic()), k);
}

FieldElement lift_to(const FieldElement& a, const FieldCtx& target) {
    check_internal(a.attached() && target != nullptr, "lift_to: detached input");
    if (a.field() == target.get()) return a;
    if (!target->extends(a.field()))
        throw domain_error("lift_to: target does not extend the element's field");
    FieldElement in_base = lift_to(a, target->base());
    return target->element({in_base});
}

FieldElement coerce_down(const FieldElement& a, const FieldCtx& target) {
    check_internal(a.attached() && target != nullptr, "coerce_down: detached input");
    if (a.field() == target.get()) return a;
    if (!a.field()->extends(target.get()))
        throw domain_error("coerce_down: element's field does not extend the target");
    if (pow(a, target->cardinality()) != a)
        throw domain_error("coerce_down: value is not fixed by the target Frobenius");
    FieldElement cur = a;
    while (cur.field() != target.get()) {
        const auto& cs = cur.coeffs();
        for (std::size_t i = 1; i < cs.size(); ++i)
            check_internal(cs[i].is_zero(), "coerce_down: Frobenius-fixed value with nonconstant step");
        cur = cs[0];
    }
    return cur;
}

namespace {

BigInt reduce_order(const FieldElement& a, const BigInt& multiple, const FactorBudget& budget) {
    BigInt d = multiple;
    for (const auto& [p, e] : factorize(multiple, budget)) {
        (void)e;
        while (d % p == 0 && pow(a, d / p).is_one()) d /= p;
    }
    return d;
}

} // namespace

BigInt mult_order(const FieldElement& a, const FactorBudget& budget) {
    check_internal(a.attached(), "mult_order on detached element");
    if (a.is_zero()) throw domain_error("mult_order: zero has no multiplicative order");
    return reduce_order(a, a.field()->cardinality() - 1, budget);
}

BigInt mult_order_dividing(const FieldElement& a, const BigInt& multiple, const FactorBudget& budget) {
    check_internal(a.attached(), "mult_order on detached element");
    if (a.is_zero()) throw domain_error("mult_order: zero has no multiplicative order");
    if (multiple < 1 || !pow(a, multiple).is_one())
        throw domain_error("mult_order_dividing: given value is not a multiple of the order");
    return reduce_order(a, multiple, budget);
}

int element_degree(const FieldElement& a, const FieldCtx& over) {
    check_internal(a.attached() && over != nullptr, "element_degree: detached input");
    if (!a.field()->extends(over.get()))
        throw domain_error("element_degree: element's field does not extend the given subfield");
    int cap = a.field()->degree_over_prime() / over->degree_over_prime();
    const BigInt& Q = over->cardinality();
    FieldElement b = pow(a, Q);
    int d = 1;
    while (b != a) {
        b = pow(b, Q);
        ++d;
        check_internal(d <= cap, "element_degree: no fixed power within the ambient degree");
    }
    return d;
}

} // namespace qcpoly
