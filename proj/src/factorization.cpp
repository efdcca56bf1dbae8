#include "qcpoly/factorization.hpp"

#include <algorithm>
#include <map>

#include "qcpoly/poly_text.hpp"

namespace qcpoly {

namespace {

std::vector<int> prime_factors_of_int(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

FieldElement random_element(const FieldCtx& ctx, std::mt19937_64& rng) {
    BigInt idx = 0;
    // enough 64-bit chunks to cover the cardinality; the mod bias is irrelevant
    // for splitting draws
    unsigned bits = unsigned(boost::multiprecision::msb(ctx->cardinality())) + 1;
    for (unsigned i = 0; i <= bits; i += 64) idx = (idx << 64) | BigInt(rng());
    return ctx->element_at(idx % ctx->cardinality());
}

} // namespace

FieldCtx extend_field(const FieldCtx& base, const Poly& modulus) {
    if (!base) throw domain_error("extend_field: null base context");
    if (modulus.ctx().get() != base.get())
        throw domain_error("extend_field: modulus is not over the base field");
    if (modulus.degree() < 2)
        throw domain_error("extend_field: step modulus must have degree >= 2");
    if (!modulus.is_monic())
        throw domain_error("extend_field: step modulus must be monic");
    if (!is_irreducible(modulus))
        throw domain_error("extend_field: step modulus is reducible: " + describe_poly(modulus));
    return Field::make_extension(base, modulus.coeffs());
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.degree() == 0) return false;
    if (f.degree() == 1) return true;
    const Poly fm = f.monic();
    const FieldCtx& ctx = f.ctx();
    const BigInt& Q = ctx->cardinality();
    const int n = fm.degree();

    std::vector<int> checkpoints;
    for (int r : prime_factors_of_int(n)) checkpoints.push_back(n / r);
    std::sort(checkpoints.begin(), checkpoints.end());

    const Poly x = Poly::x(ctx);
    Poly h = x % fm;
    std::size_t next = 0;
    for (int j = 1; j <= n; ++j) {
        h = pow_mod(h, Q, fm);
        while (next < checkpoints.size() && checkpoints[next] == j) {
            if (!gcd_poly(h - x, fm).is_one()) return false;
            ++next;
        }
    }
    return h == (x % fm);
}

Poly Factorization::product(const FieldCtx& ctx) const {
    Poly r = Poly::constant(ctx, unit);
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) r = r * g;
    return r;
}

namespace {

// p-th root of f, which must be of the form g(x^p) with p the characteristic.
Poly pth_root(const Poly& f) {
    const FieldCtx& ctx = f.ctx();
    const int p = int(ctx->characteristic());
    const BigInt root_exp = ctx->cardinality() / p; // a^(Q/p) is the p-th root of a
    std::vector<FieldElement> cs;
    for (int i = 0; i <= f.degree(); ++i) {
        FieldElement c = f.coeff(i);
        if (i % p != 0) {
            check_internal(c.is_zero(), "pth_root: polynomial is not a p-th power");
            continue;
        }
        cs.push_back(pow(c, root_exp));
    }
    return Poly::from_coeffs(ctx, std::move(cs));
}

// monic squarefree parts with multiplicities
void squarefree_split(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
    const FieldCtx& ctx = f.ctx();
    if (f.degree() == 0) return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_split(pth_root(f), mult * int(ctx->characteristic()), out);
        return;
    }
    Poly c = gcd_poly(f, d);
    Poly w = f / c;
    int i = 1;
    while (!w.is_one()) {
        Poly y = gcd_poly(w, c);
        Poly part = w / y;
        if (!part.is_one()) out.emplace_back(part, mult * i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one()) squarefree_split(pth_root(c), mult * int(ctx->characteristic()), out);
}

// h: product of distinct monic irreducibles, all of degree d. Splits fully.
void equal_degree_split(const Poly& h, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (h.degree() == d) {
        out.push_back(h);
        return;
    }
    const FieldCtx& ctx = h.ctx();
    Poly split(ctx);
    while (true) {
        Poly r(ctx);
        {
            std::vector<FieldElement> cs;
            for (int i = 0; i < h.degree(); ++i) cs.push_back(random_element(ctx, rng));
            r = Poly::from_coeffs(ctx, std::move(cs));
        }
        if (r.is_constant()) continue;
        Poly g = gcd_poly(r, h);
        if (!g.is_one() && g.degree() < h.degree()) {
            split = std::move(g);
            break;
        }
        if (ctx->characteristic() == 2) {
            // trace over F_2: sum of the 2^i-th powers walks each factor's root
            // trace, which is 0 or 1 per factor
            int m = ctx->degree_over_prime() * d;
            Poly t = r % h;
            Poly term = t;
            for (int i = 1; i < m; ++i) {
                term = (term * term) % h;
                t = t + term;
            }
            g = gcd_poly(t, h);
        } else {
            BigInt e = (boost::multiprecision::pow(ctx->cardinality(), unsigned(d)) - 1) / 2;
            Poly s = pow_mod(r, e, h);
            g = gcd_poly(s - Poly::constant(ctx, ctx->one()), h);
        }
        if (!g.is_one() && g.degree() < h.degree()) {
            split = std::move(g);
            break;
        }
    }
    equal_degree_split(split, d, rng, out);
    equal_degree_split(h / split, d, rng, out);
}

// g: monic squarefree. Appends (factor, mult) for each irreducible factor.
void distinct_degree_split(const Poly& g, int mult, std::mt19937_64& rng,
                           std::vector<std::pair<Poly, int>>& out) {
    const FieldCtx& ctx = g.ctx();
    const BigInt& Q = ctx->cardinality();
    const Poly x = Poly::x(ctx);
    Poly rest = g;
    Poly h = x % rest;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = pow_mod(h, Q, rest);
        Poly gd = gcd_poly(h - x, rest);
        if (!gd.is_one()) {
            std::vector<Poly> pieces;
            equal_degree_split(gd, d, rng, pieces);
            for (auto& piece : pieces) out.emplace_back(std::move(piece), mult);
            rest = rest / gd;
            if (rest.is_one()) return;
            h = h % rest;
        }
    }
    if (!rest.is_one()) out.emplace_back(rest, mult);
}

} // namespace

Factorization factor(const Poly& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw domain_error("factor: zero polynomial");
    Factorization out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;

    std::vector<std::pair<Poly, int>> squarefree;
    squarefree_split(f.monic(), 1, squarefree);
    for (const auto& [part, mult] : squarefree)
        distinct_degree_split(part, mult, rng, out.factors);

    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    int total = 0;
    for (const auto& [g, e] : out.factors) total += g.degree() * e;
    check_internal(total == f.degree(), "factor: degrees of the parts do not add up");
    return out;
}

Factorization factor(const Poly& f) {
    std::mt19937_64 rng(0x5bd1e995u);
    return factor(f, rng);
}

BigInt count_irreducibles(const FieldCtx& ctx, int n) {
    if (n < 1) throw domain_error("count_irreducibles: degree must be >= 1");
    const BigInt& Q = ctx->cardinality();
    BigInt sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = moebius(std::uint64_t(d));
        if (mu == 0) continue;
        sum += mu * boost::multiprecision::pow(Q, unsigned(n / d));
    }
    check_internal(sum % n == 0 && sum > 0, "count_irreducibles: Moebius sum not divisible");
    return sum / n;
}

void for_each_monic(const FieldCtx& ctx, int n, std::uint64_t budget,
                    const std::function<void(const Poly&)>& fn) {
    if (n < 0) throw domain_error("for_each_monic: negative degree");
    const BigInt total = boost::multiprecision::pow(ctx->cardinality(), unsigned(n));
    if (total > budget)
        throw budget_error("for_each_monic: " + total.str() + " candidates exceed budget " +
                           std::to_string(budget));
    const BigInt& Q = ctx->cardinality();
    std::uint64_t q64 = Q.convert_to<std::uint64_t>();
    std::vector<std::uint64_t> digits(std::size_t(n), 0);
    std::vector<FieldElement> coeffs(std::size_t(n) + 1, ctx->zero());
    coeffs.back() = ctx->one();
    while (true) {
        for (int i = 0; i < n; ++i) coeffs[std::size_t(i)] = ctx->element_at(BigInt(digits[std::size_t(i)]));
        fn(Poly::from_coeffs(ctx, coeffs));
        // odometer: last coefficient moves fastest, so the walk is ascending in
        // the canonical (c_0-major) order
        int pos = n - 1;
        while (pos >= 0) {
            if (++digits[std::size_t(pos)] < q64) break;
            digits[std::size_t(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

std::vector<Poly> enumerate_irreducibles(const FieldCtx& ctx, int n, std::uint64_t budget) {
    std::vector<Poly> out;
    for_each_monic(ctx, n, budget, [&](const Poly& f) {
        if (is_irreducible(f)) out.push_back(f);
    });
    return out;
}

Poly random_irreducible(const FieldCtx& ctx, int n, std::mt19937_64& rng,
                        RandomIrreducibleStrategy strategy) {
    if (n < 1) throw domain_error("random_irreducible: degree must be >= 1");
    const int cap = 256 + 200 * n;
    if (strategy == RandomIrreducibleStrategy::rejection) {
        for (int t = 0; t < cap; ++t) {
            std::vector<FieldElement> cs;
            for (int i = 0; i < n; ++i) cs.push_back(random_element(ctx, rng));
            cs.push_back(ctx->one());
            Poly f = Poly::from_coeffs(ctx, std::move(cs));
            if (is_irreducible(f)) return f;
        }
        throw budget_error("random_irreducible: no hit within the draw cap");
    }
    if (n == 1) {
        // no extension step to build; a linear monic is always irreducible
        return Poly::from_coeffs(ctx, {random_element(ctx, rng), ctx->one()});
    }
    Poly step = random_irreducible(ctx, n, rng, RandomIrreducibleStrategy::rejection);
    FieldCtx K = Field::make_extension(ctx, step.coeffs());
    for (int t = 0; t < cap; ++t) {
        FieldElement a = random_element(K, rng);
        Poly m = min_poly(a, ctx);
        if (m.degree() == n) return m;
    }
    throw budget_error("random_irreducible: no full-degree element within the draw cap");
}

Poly min_poly(const FieldElement& a, const FieldCtx& over) {
    const int d = element_degree(a, over);
    FieldCtx ambient = a.field()->shared_from_this();
    Poly r = Poly::constant(ambient, ambient->one());
    FieldElement conj = a;
    const BigInt& Q = over->cardinality();
    for (int i = 0; i < d; ++i) {
        r = r * Poly::from_coeffs(ambient, {-conj, ambient->one()});
        conj = pow(conj, Q);
    }
    check_internal(conj == a, "min_poly: Frobenius orbit did not close");
    return coerce_poly_down(r, over);
}

} // namespace qcpoly
