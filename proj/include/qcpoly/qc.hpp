#pragma once

#include <optional>
#include <random>

#include "qcpoly/factorization.hpp"
#include "qcpoly/pgl2.hpp"
#include "qcpoly/poly.hpp"

namespace qcpoly {

// Q = num/den with deg num > deg den >= 0 and gcd(num, den) = 1.
struct RationalMap {
    Poly num, den;

    static RationalMap make(Poly num, Poly den);
    int degree() const { return num.degree(); }
};

// Everything attached to one admissible c: the acting class [A_c] (order D > 2
// dividing q + 1), the quadratic step F_q[t]/(t^2 - t - c) with theta the residue
// of t, and the invariant map Q_c = g_c/h_c with g_c monic of degree D, h_c of
// degree D - 1, both over F_q with g_c(c/(x+1)) h_c(x) = g_c(x) h_c(c/(x+1))
// after clearing denominators. All of that is validated at construction time.
struct QcContext {
    FieldCtx ctx;
    FieldElement c;
    int D = 0;
    FieldCtx quad;
    FieldElement theta;
    RationalMap map;
    PGL2Class a_c;
};

QcContext build_qc(const FieldCtx& ctx, const FieldElement& c);
QcContext build_qc_for_order(const FieldCtx& ctx, const BigInt& D); // find_c, then build_qc

// The invariant rational map of each canonical class shape.
struct CanonicalForm {
    enum Kind { diagonal, unipotent, antidiagonal, a_c } kind;
    FieldElement param; // a for diagonal, b for antidiagonal, c for a_c; unused for unipotent
};
RationalMap canonical_rational(const FieldCtx& ctx, const CanonicalForm& form);

// f^Q = den^deg(f) f(num/den), by Horner in num with a den-power ladder.
// deg(f^Q) = deg(f) deg(num) exactly.
Poly q_transform(const Poly& f, const RationalMap& Q);

// Monic normalization M(f^{Q_c}); with g_c monic this is f^{Q_c} itself for
// monic f (checked rather than assumed).
Poly qc_transform_monic(const Poly& f, const QcContext& qc);

// Spin over `base`: prod_{i<s} f^(i) where f^(i) twists every coefficient by
// the base Frobenius x -> x^q, and s is the lcm of the coefficient degrees over
// base. Lands in base[x] (validated by coercion).
Poly spin(const Poly& f, const FieldCtx& base);

// Factors f^Q without ever forming it: factor num - alpha*den over F_q[y]/(f)
// (alpha the residue of y) and spin each factor down. Returns the factorization
// of f^Q up to the documented unit; the direct-path comparison lives in tests.
Factorization factor_via_spins(const Poly& f, const RationalMap& Q, std::mt19937_64& rng);
Factorization factor_via_spins(const Poly& f, const RationalMap& Q);

// P_c(alpha) = (alpha + theta^q)/(alpha + theta) for deg_q(alpha) = n >= 3,
// computed in an ambient that contains alpha and theta: the element's own field
// when its degree is even (theta located by root-finding), otherwise the
// quadratic step on top of it. The value lies in F_{q^{e(n)}}, e(n) = lcm(n, 2)
// (asserted); its order is reported when factoring q^{e(n)} - 1 fits the budget.
struct PcValue {
    FieldCtx ambient;
    FieldElement value;
    int e_n = 0;
    std::optional<BigInt> order;
};
PcValue p_map(const FieldElement& alpha, const QcContext& qc, const FactorBudget& budget = {});

// gcd(ord(P_c(alpha)), D) = 1 for alpha a root of f. Throws budget_error when
// the order is unavailable rather than guessing.
bool is_qc_periodic(const Poly& f, const QcContext& qc, const FactorBudget& budget = {});

// nu_D(q^{e(n)} - 1) - 1: the worst-case number of post-split factor picks in
// the recursive construction. Requires prime D.
int iteration_bound(const QcContext& qc, int n);

// P_c values of a transform-root pair, computed with one shared theta so they
// are comparable: alpha is the residue of y in K = F_q[y]/(f), gamma the residue
// of z in L = K[z]/(r) for r the least irreducible factor of g_c - alpha h_c
// over K, so Q_c(gamma) = alpha. Satisfies p_gamma^D = p_alpha (checked here);
// order fields resolve when factoring fits the budget. Callers assert the order
// growth law ord(p_gamma) = D ord(p_alpha) where both resolve and D | ord(p_alpha).
struct RootPairValues {
    FieldCtx K, L, ambient;
    FieldElement p_alpha, p_gamma;
    std::optional<BigInt> ord_alpha, ord_gamma;
};
RootPairValues transform_root_values(const Poly& f, const QcContext& qc,
                                     const FactorBudget& budget = {});

// All A-invariant monic irreducibles of degree k. For an [A_c] with D | k,
// k > 2, walks transforms of the degree-(k/D) layer unless force_full_scan;
// otherwise scans all q^k monic candidates (budget-capped).
std::vector<Poly> enumerate_invariants(const FieldCtx& ctx, const PGL2Class& A, int k,
                                       std::uint64_t budget = 1u << 26,
                                       bool force_full_scan = false);

// |C_{A_c}(Dm)| = (phi(D)/(Dm)) sum_{d | m, gcd(d, D) = 1} (q^{m/d} + eps(m/d)) mu(d),
// eps(s) = (-1)^(s+1).
BigInt count_invariants(const FieldCtx& ctx, const BigInt& D, int m);

} // namespace qcpoly
