#include "qcpoly/qc.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace qcpoly {

namespace {

namespace mp = boost::multiprecision;

Poly poly_pow(const Poly& base, int e) {
    Poly r = Poly::constant(base.ctx(), base.ctx()->one());
    Poly b = base;
    for (int k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

Poly char_quadratic(const FieldCtx& ctx, const FieldElement& c) {
    // x^2 - x - c
    return Poly::from_coeffs(ctx, {-c, -(ctx->one()), ctx->one()});
}

constexpr int kMaxDenseDegree = 1'000'000;

// Ambient field containing `own` and a root of x^2 - x - c: own itself when its
// degree over the map's base is even (theta = least root there), otherwise the
// quadratic step stacked on top of own.
std::pair<FieldCtx, FieldElement> locate_theta(const FieldCtx& own, const QcContext& qc) {
    int rel = own->degree_over_prime() / qc.ctx->degree_over_prime();
    Poly quad = lift_poly(char_quadratic(qc.ctx, qc.c), own);
    if (rel % 2 == 0) {
        Factorization fac = factor(quad);
        check_internal(fac.factors.size() == 2 && fac.factors[0].first.degree() == 1 &&
                           fac.factors[1].first.degree() == 1,
                       "locate_theta: quadratic did not split in an even-degree extension");
        FieldElement r0 = -fac.factors[0].first.coeff(0);
        FieldElement r1 = -fac.factors[1].first.coeff(0);
        return {own, element_less(r0, r1) ? r0 : r1};
    }
    FieldCtx up = extend_field(own, quad);
    FieldElement theta = up->gen();
    return {std::move(up), std::move(theta)};
}

} // namespace

RationalMap RationalMap::make(Poly num, Poly den) {
    if (num.ctx().get() != den.ctx().get())
        throw domain_error("rational map: numerator and denominator contexts differ");
    if (num.is_zero() || den.is_zero())
        throw domain_error("rational map: zero numerator or denominator");
    if (num.degree() <= den.degree())
        throw domain_error("rational map: numerator degree must exceed denominator degree");
    if (gcd_poly(num, den).degree() != 0)
        throw domain_error("rational map: numerator and denominator share a factor");
    return RationalMap{std::move(num), std::move(den)};
}

QcContext build_qc(const FieldCtx& ctx, const FieldElement& c) {
    if (!ctx) throw domain_error("build_qc: null field context");
    if (c.field() != ctx.get()) throw domain_error("build_qc: c lives in a different context");
    Poly quad_min = char_quadratic(ctx, c);
    if (!is_irreducible(quad_min))
        throw domain_error("build_qc: x^2 - x - c is reducible; c is not admissible");

    PGL2Class A = a_c_class(ctx, c);
    const BigInt& q = ctx->cardinality();
    BigInt Dbig = pgl2_order(A);
    check_internal(Dbig > 2 && (q + 1) % Dbig == 0, "build_qc: class order out of range");
    if (Dbig > kMaxDenseDegree)
        throw domain_error("build_qc: class order too large for a dense transform");
    int D = int(Dbig);

    FieldCtx quad = Field::make_extension(ctx, quad_min.coeffs());
    FieldElement theta = quad->gen();
    FieldElement theta_q = quad->one() - theta; // the roots of x^2 - x - c sum to 1
    check_internal(pow(theta, q) == theta_q, "build_qc: conjugate root mismatch");

    Poly lin_t = Poly::from_coeffs(quad, {theta, quad->one()});    // x + theta
    Poly lin_tq = Poly::from_coeffs(quad, {theta_q, quad->one()}); // x + theta^q
    Poly pow_t = poly_pow(lin_t, D);
    Poly pow_tq = poly_pow(lin_tq, D);
    FieldElement s = (theta_q - theta).inverse();
    Poly g_quad = (pow_tq * theta - pow_t * theta_q) * s;
    Poly h_quad = (pow_t - pow_tq) * s;
    for (const FieldElement& e : g_quad.coeffs())
        check_internal(pow(e, q) == e, "build_qc: numerator escaped the base field");
    for (const FieldElement& e : h_quad.coeffs())
        check_internal(pow(e, q) == e, "build_qc: denominator escaped the base field");
    Poly g = coerce_poly_down(g_quad, ctx);
    Poly h = coerce_poly_down(h_quad, ctx);
    FieldElement scale = g.leading().inverse();
    g = g * scale;
    h = h * scale;
    check_internal(g.degree() == D && h.degree() == D - 1, "build_qc: map degrees are off");
    check_internal(gcd_poly(g, h).degree() == 0, "build_qc: map components share a factor");

    // invariance under x -> c/(x + 1), compared after clearing (x + 1)^D
    std::vector<Poly> xp1_pow;
    xp1_pow.reserve(std::size_t(D) + 1);
    xp1_pow.push_back(Poly::constant(ctx, ctx->one()));
    Poly xp1 = Poly::from_coeffs(ctx, {ctx->one(), ctx->one()});
    for (int i = 1; i <= D; ++i) xp1_pow.push_back(xp1_pow.back() * xp1);
    auto cleared_substitution = [&](const Poly& f) {
        Poly acc(ctx);
        FieldElement cj = ctx->one();
        for (int j = 0; j <= f.degree(); ++j) {
            acc = acc + xp1_pow[std::size_t(D - j)] * (f.coeff(j) * cj);
            cj = cj * c;
        }
        return acc;
    };
    check_internal(cleared_substitution(g) * h == g * cleared_substitution(h),
                   "build_qc: invariance identity failed");

    RationalMap map = RationalMap::make(std::move(g), std::move(h));
    return QcContext{ctx, c, D, std::move(quad), theta, std::move(map), std::move(A)};
}

QcContext build_qc_for_order(const FieldCtx& ctx, const BigInt& D) {
    return build_qc(ctx, find_c(ctx, D));
}

RationalMap canonical_rational(const FieldCtx& ctx, const CanonicalForm& form) {
    if (!ctx) throw domain_error("canonical_rational: null field context");
    auto require_param = [&]() {
        if (form.param.field() != ctx.get())
            throw domain_error("canonical_rational: parameter lives in a different context");
    };
    switch (form.kind) {
    case CanonicalForm::diagonal: {
        require_param();
        if (form.param.is_zero())
            throw domain_error("canonical_rational: diagonal parameter must be a unit");
        BigInt Dbig = mult_order(form.param);
        if (Dbig > kMaxDenseDegree)
            throw domain_error("canonical_rational: order too large for a dense transform");
        return RationalMap::make(Poly::monomial(ctx, int(Dbig), ctx->one()),
                                 Poly::constant(ctx, ctx->one()));
    }
    case CanonicalForm::unipotent: {
        std::uint64_t p = ctx->characteristic();
        if (p > std::uint64_t(kMaxDenseDegree))
            throw domain_error("canonical_rational: characteristic too large for a dense transform");
        Poly num = Poly::monomial(ctx, int(p), ctx->one()) - Poly::x(ctx);
        return RationalMap::make(std::move(num), Poly::constant(ctx, ctx->one()));
    }
    case CanonicalForm::antidiagonal: {
        require_param();
        Poly sq = Poly::from_coeffs(ctx, {-form.param, ctx->zero(), ctx->one()});
        if (!is_irreducible(sq))
            throw domain_error("canonical_rational: x^2 - b must be irreducible");
        Poly num = Poly::from_coeffs(ctx, {form.param, ctx->zero(), ctx->one()});
        return RationalMap::make(std::move(num), Poly::x(ctx));
    }
    case CanonicalForm::a_c:
        require_param();
        return build_qc(ctx, form.param).map;
    }
    throw internal_error("canonical_rational: unknown form kind");
}

Poly q_transform(const Poly& f, const RationalMap& Q) {
    if (f.ctx().get() != Q.num.ctx().get())
        throw domain_error("q_transform: polynomial and map contexts differ");
    if (f.is_zero()) throw domain_error("q_transform: zero polynomial");
    const FieldCtx& ctx = f.ctx();
    int n = f.degree();
    std::vector<Poly> den_pow;
    den_pow.reserve(std::size_t(n) + 1);
    den_pow.push_back(Poly::constant(ctx, ctx->one()));
    for (int i = 1; i <= n; ++i) den_pow.push_back(den_pow.back() * Q.den);
    Poly r = Poly::constant(ctx, f.coeff(n));
    for (int j = n - 1; j >= 0; --j)
        r = r * Q.num + den_pow[std::size_t(n - j)] * f.coeff(j);
    check_internal(r.degree() == n * Q.num.degree(), "q_transform: degree collapsed");
    return r;
}

Poly qc_transform_monic(const Poly& f, const QcContext& qc) {
    Poly t = q_transform(f, qc.map);
    return t.is_monic() ? t : t.monic();
}

Poly spin(const Poly& f, const FieldCtx& base) {
    if (!base) throw domain_error("spin: null base context");
    if (f.is_zero()) throw domain_error("spin: zero polynomial");
    if (!f.ctx()->extends(base.get()))
        throw domain_error("spin: base is not a subfield of the coefficient field");
    const BigInt& q = base->cardinality();
    long long s = 1;
    for (const FieldElement& e : f.coeffs())
        if (!e.is_zero()) s = std::lcm(s, (long long)element_degree(e, base));
    Poly acc = Poly::constant(f.ctx(), f.ctx()->one());
    Poly cur = f;
    for (long long i = 0; i < s; ++i) {
        acc = acc * cur;
        if (i + 1 < s) {
            std::vector<FieldElement> tw;
            tw.reserve(cur.coeffs().size());
            for (const FieldElement& e : cur.coeffs()) tw.push_back(pow(e, q));
            cur = Poly::from_coeffs(f.ctx(), std::move(tw));
        }
    }
    for (const FieldElement& e : acc.coeffs())
        check_internal(pow(e, q) == e, "spin: product escaped the base field");
    return coerce_poly_down(acc, base);
}

Factorization factor_via_spins(const Poly& f, const RationalMap& Q, std::mt19937_64& rng) {
    if (f.ctx().get() != Q.num.ctx().get())
        throw domain_error("factor_via_spins: polynomial and map contexts differ");
    if (f.degree() < 1)
        throw domain_error("factor_via_spins: need a nonconstant polynomial");
    if (!is_irreducible(f))
        throw domain_error("factor_via_spins: input must be irreducible");
    const FieldCtx& ctx = f.ctx();
    int n = f.degree();
    FieldElement lambda = f.leading();
    Poly fm = f.is_monic() ? f : f.monic();

    // alpha: a root of f, in F_q[y]/(f) unless f is linear
    FieldCtx K;
    FieldElement alpha;
    if (n == 1) {
        K = ctx;
        alpha = -fm.coeff(0);
    } else {
        K = Field::make_extension(ctx, fm.coeffs());
        alpha = K->gen();
    }
    Poly root_side = lift_poly(Q.num, K) - lift_poly(Q.den, K) * alpha;
    Factorization inner = factor(root_side, rng);

    std::vector<std::pair<Poly, int>> out;
    out.reserve(inner.factors.size());
    for (const auto& [r, e] : inner.factors) {
        Poly sp = spin(r, ctx);
        check_internal(sp.is_monic(), "factor_via_spins: spin is not monic");
        out.emplace_back(std::move(sp), e);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
    std::vector<std::pair<Poly, int>> merged;
    merged.reserve(out.size());
    for (auto& pe : out) {
        if (!merged.empty() && merged.back().first == pe.first)
            merged.back().second += pe.second;
        else
            merged.push_back(std::move(pe));
    }
    long long degree_sum = 0;
    for (const auto& [sp, e] : merged) degree_sum += (long long)sp.degree() * e;
    check_internal(degree_sum == (long long)n * Q.num.degree(),
                   "factor_via_spins: spin degrees do not add up");
    FieldElement unit = lambda * pow(Q.num.leading(), BigInt(n));
    return Factorization{unit, std::move(merged)};
}

Factorization factor_via_spins(const Poly& f, const RationalMap& Q) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    return factor_via_spins(f, Q, rng);
}

PcValue p_map(const FieldElement& alpha, const QcContext& qc, const FactorBudget& budget) {
    if (!alpha.attached() || !alpha.field()->extends(qc.ctx.get()))
        throw domain_error("p_map: element does not live over the map's base field");
    int n = element_degree(alpha, qc.ctx);
    if (n < 3) throw domain_error("p_map: element degree over the base must be at least 3");
    const BigInt& q = qc.ctx->cardinality();
    int e_n = std::lcm(n, 2);

    FieldCtx own = alpha.field()->shared_from_this();
    auto [ambient, theta] = locate_theta(own, qc);
    FieldElement alpha_amb = lift_to(alpha, ambient);
    FieldElement theta_q = ambient->one() - theta;
    check_internal(pow(theta, q) == theta_q, "p_map: conjugate root mismatch");

    FieldElement den = alpha_amb + theta;
    check_internal(!den.is_zero(), "p_map: pole at an element of degree > 2");
    FieldElement value = (alpha_amb + theta_q) / den;
    check_internal(pow_power(value, q, e_n) == value, "p_map: value escaped its subfield");

    std::optional<BigInt> order;
    try {
        order = mult_order_dividing(value, mp::pow(q, unsigned(e_n)) - 1, budget);
    } catch (const budget_error&) {
        order = std::nullopt;
    }
    return PcValue{std::move(ambient), std::move(value), e_n, std::move(order)};
}

RootPairValues transform_root_values(const Poly& f, const QcContext& qc,
                                     const FactorBudget& budget) {
    if (f.ctx().get() != qc.ctx.get())
        throw domain_error("transform_root_values: polynomial and map contexts differ");
    if (f.degree() < 3)
        throw domain_error("transform_root_values: degree must be at least 3");
    if (!f.is_monic() || !is_irreducible(f))
        throw domain_error("transform_root_values: need a monic irreducible polynomial");
    const BigInt& q = qc.ctx->cardinality();
    int n = f.degree();

    FieldCtx K = Field::make_extension(qc.ctx, f.coeffs());
    FieldElement alpha = K->gen();
    Poly side = lift_poly(qc.map.num, K) - lift_poly(qc.map.den, K) * alpha;
    Factorization fac = factor(side);
    const Poly& r = fac.factors[0].first; // least factor; linear exactly when f^{Q_c} splits
    FieldCtx L;
    FieldElement gamma;
    if (r.degree() == 1) {
        L = K;
        gamma = -r.coeff(0);
    } else {
        L = Field::make_extension(K, r.coeffs());
        gamma = L->gen();
    }
    check_internal(side.eval(gamma).is_zero(), "transform_root_values: gamma is not a preimage root");

    auto [ambient, theta] = locate_theta(L, qc);
    FieldElement theta_q = ambient->one() - theta;
    check_internal(pow(theta, q) == theta_q, "transform_root_values: conjugate root mismatch");
    auto pc_of = [&](const FieldElement& x) {
        FieldElement den = x + theta;
        check_internal(!den.is_zero(), "transform_root_values: pole at a degree > 2 element");
        return (x + theta_q) / den;
    };
    RootPairValues out;
    out.K = K;
    out.L = L;
    out.p_alpha = pc_of(lift_to(alpha, ambient));
    out.p_gamma = pc_of(lift_to(gamma, ambient));
    out.ambient = std::move(ambient);
    check_internal(pow(out.p_gamma, BigInt(qc.D)) == out.p_alpha,
                   "transform_root_values: conjugation identity failed");
    int e_alpha = std::lcm(n, 2);
    int e_gamma = std::lcm(n * r.degree(), 2);
    try {
        out.ord_alpha = mult_order_dividing(out.p_alpha, mp::pow(q, unsigned(e_alpha)) - 1, budget);
    } catch (const budget_error&) {
    }
    try {
        out.ord_gamma = mult_order_dividing(out.p_gamma, mp::pow(q, unsigned(e_gamma)) - 1, budget);
    } catch (const budget_error&) {
    }
    return out;
}

bool is_qc_periodic(const Poly& f, const QcContext& qc, const FactorBudget& budget) {
    if (f.ctx().get() != qc.ctx.get())
        throw domain_error("is_qc_periodic: polynomial and map contexts differ");
    if (f.degree() < 3)
        throw domain_error("is_qc_periodic: degree must be at least 3");
    if (!is_irreducible(f))
        throw domain_error("is_qc_periodic: polynomial must be irreducible");
    Poly fm = f.is_monic() ? f : f.monic();
    FieldCtx K = Field::make_extension(qc.ctx, fm.coeffs());
    PcValue pc = p_map(K->gen(), qc, budget);
    if (!pc.order)
        throw budget_error("is_qc_periodic: root order unavailable under the factoring budget");
    return mp::gcd(*pc.order, BigInt(qc.D)) == 1;
}

int iteration_bound(const QcContext& qc, int n) {
    if (n < 1) throw domain_error("iteration_bound: degree must be positive");
    BigInt D(qc.D);
    if (!is_prime(D))
        throw domain_error("iteration_bound: only defined for prime transform order");
    int e_n = std::lcm(n, 2);
    int v = nu(D, mp::pow(qc.ctx->cardinality(), unsigned(e_n)) - 1);
    check_internal(v >= 1, "iteration_bound: order does not divide the ambient unit group");
    return v - 1;
}

std::vector<Poly> enumerate_invariants(const FieldCtx& ctx, const PGL2Class& A, int k,
                                       std::uint64_t budget, bool force_full_scan) {
    if (!ctx) throw domain_error("enumerate_invariants: null field context");
    if (A.ctx().get() != ctx.get())
        throw domain_error("enumerate_invariants: class lives in a different context");
    if (k < 2) throw domain_error("enumerate_invariants: degree must be at least 2");

    std::vector<Poly> out;
    bool ac_shape = A.a().is_zero() && A.b().is_one() && A.d().is_one() && !A.c().is_zero();
    if (ac_shape && !force_full_scan && k > 2 && is_irreducible(char_quadratic(ctx, A.c()))) {
        QcContext qc = build_qc(ctx, A.c());
        if (k % qc.D == 0) {
            // invariants of degree Dm are exactly the irreducible transforms of
            // the degree-m layer, so walk that layer instead of all q^k candidates
            for_each_monic(ctx, k / qc.D, budget, [&](const Poly& f) {
                if (!is_irreducible(f)) return;
                Poly t = qc_transform_monic(f, qc);
                if (!is_irreducible(t)) return;
                check_internal(apply_pgl2(A, t) == t, "enumerate_invariants: image not invariant");
                out.push_back(std::move(t));
            });
            std::sort(out.begin(), out.end(), poly_less);
            check_internal(std::adjacent_find(out.begin(), out.end()) == out.end(),
                           "enumerate_invariants: transform images collide");
            return out;
        }
    }
    for_each_monic(ctx, k, budget, [&](const Poly& f) {
        if (is_irreducible(f) && apply_pgl2(A, f) == f) out.push_back(f);
    });
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

BigInt count_invariants(const FieldCtx& ctx, const BigInt& D, int m) {
    if (!ctx) throw domain_error("count_invariants: null field context");
    if (m < 1) throw domain_error("count_invariants: layer index must be positive");
    const BigInt& q = ctx->cardinality();
    if (D <= 2 || (q + 1) % D != 0)
        throw domain_error("count_invariants: order must exceed 2 and divide q + 1");
    BigInt phi_d = totient(factorize(D));
    BigInt sum = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0 || mp::gcd(BigInt(d), D) != 1) continue;
        int mu = moebius(std::uint64_t(d));
        if (mu == 0) continue;
        int s = m / d;
        BigInt term = mp::pow(q, unsigned(s)) + (s % 2 == 1 ? 1 : -1);
        sum += mu * term;
    }
    BigInt total = phi_d * sum;
    BigInt denom = D * m;
    check_internal(total % denom == 0, "count_invariants: count is not integral");
    BigInt r = total / denom;
    check_internal(r >= 0, "count_invariants: negative count");
    return r;
}

} // namespace qcpoly
