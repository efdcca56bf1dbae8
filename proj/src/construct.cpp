#include "qcpoly/construct.hpp"

#include <algorithm>
#include <limits>

namespace qcpoly {

namespace {
namespace mp = boost::multiprecision;
} // namespace

TowerReport recursive_construct(const Poly& f, const QcContext& qc, const FactorBudget& budget) {
    if (f.ctx().get() != qc.ctx.get())
        throw domain_error("recursive_construct: polynomial and map contexts differ");
    int n = f.degree();
    if (n < 3) throw domain_error("recursive_construct: seed degree must be at least 3");
    if (!f.is_monic()) throw domain_error("recursive_construct: seed must be monic");
    if (!is_irreducible(f)) throw domain_error("recursive_construct: seed must be irreducible");

    TowerReport rep;
    rep.method = "recursive";
    rep.ctx = qc.ctx;
    rep.c = qc.c;
    rep.D = qc.D;
    bool d_prime = is_prime(BigInt(qc.D));
    if (d_prime) rep.bound = iteration_bound(qc, n);
    rep.steps.push_back({f, true, "seed"});

    Poly t = qc_transform_monic(f, qc);
    if (is_irreducible(t)) {
        rep.steps.push_back({t, true, "transform of the seed"});
        rep.result = std::move(t);
        rep.success = true;
        return rep;
    }
    if (!d_prime)
        throw domain_error("recursive_construct: reducible transform needs a prime transform order");
    rep.split_occurred = true;

    Factorization fac = factor(t);
    check_internal(int(fac.factors.size()) == qc.D, "recursive_construct: split width is not D");
    for (const auto& [g, e] : fac.factors)
        check_internal(g.degree() == n && e == 1, "recursive_construct: split factor shape is off");

    // one branch when the seed is certified non-periodic, else the two least factors
    bool single = false;
    try {
        single = !is_qc_periodic(f, qc, budget);
    } catch (const budget_error&) {
    }
    std::vector<Poly> branches;
    branches.push_back(fac.factors[0].first);
    rep.steps.push_back({branches.back(), true, "least factor of the split"});
    if (!single) {
        branches.push_back(fac.factors[1].first);
        rep.steps.push_back({branches.back(), true, "second factor of the split"});
    }

    int bound = *rep.bound;
    for (int round = 0;; ++round) {
        check_internal(round <= bound, "recursive_construct: iteration bound exceeded");
        std::vector<Poly> transforms;
        transforms.reserve(branches.size());
        for (const Poly& b : branches) {
            Poly tb = qc_transform_monic(b, qc);
            if (is_irreducible(tb)) {
                rep.steps.push_back({tb, true, "transform of the winning branch"});
                rep.result = std::move(tb);
                rep.success = true;
                rep.iterations_used = round;
                return rep;
            }
            transforms.push_back(std::move(tb));
        }
        for (std::size_t bi = 0; bi < branches.size(); ++bi) {
            Factorization fb = factor(transforms[bi]);
            check_internal(!fb.factors.empty() && fb.factors[0].first.degree() == n,
                           "recursive_construct: branch split shape is off");
            branches[bi] = fb.factors[0].first;
            rep.steps.push_back(
                {branches[bi], true, bi == 0 ? "next pick, first branch" : "next pick, second branch"});
        }
    }
}

TowerReport random_construct(const FieldCtx& ctx, int n, const QcContext& qc,
                             std::mt19937_64& rng, int max_trials) {
    if (ctx.get() != qc.ctx.get())
        throw domain_error("random_construct: field and map contexts differ");
    if (n < 1 || (long long)n * qc.D <= 2)
        throw domain_error("random_construct: target degree must exceed 2");
    if (max_trials < 1) throw domain_error("random_construct: max trials must be positive");

    TowerReport rep;
    rep.method = "random";
    rep.ctx = ctx;
    rep.c = qc.c;
    rep.D = qc.D;
    rep.max_trials = max_trials;
    for (int trial = 1; trial <= max_trials; ++trial) {
        Poly f = random_irreducible(ctx, n, rng);
        Poly t = qc_transform_monic(f, qc);
        bool ok = is_irreducible(t);
        rep.trials_used = trial;
        rep.steps.push_back(
            {std::move(f), true, ok ? "draw, transform irreducible" : "draw, transform reducible"});
        if (ok) {
            check_internal(t.degree() == n * qc.D, "random_construct: transform degree is off");
            rep.steps.push_back({t, true, "constructed transform"});
            rep.result = std::move(t);
            rep.success = true;
            return rep;
        }
    }
    return rep;
}

ProbabilityReport transform_probability(const FieldCtx& ctx, int n, const QcContext& qc) {
    if (ctx.get() != qc.ctx.get())
        throw domain_error("transform_probability: field and map contexts differ");
    if (n < 1 || (long long)n * qc.D <= 2)
        throw domain_error("transform_probability: target degree must exceed 2");
    const BigInt& q = ctx->cardinality();

    ProbabilityReport r;
    r.ctx = ctx;
    r.n = n;
    r.D = qc.D;
    r.p = Rational(count_invariants(ctx, BigInt(qc.D), n), count_irreducibles(ctx, n));
    BigInt root = n % 2 == 0 ? mp::pow(q, unsigned(n / 2)) : isqrt(mp::pow(q, unsigned(n)));
    r.tau = Rational(BigInt(1)) - Rational(BigInt(3), root);
    r.lower_bound = Rational(totient(factorize(BigInt(qc.D))), BigInt(qc.D)) * r.tau;
    if (r.tau > Rational(BigInt(0)))
        check_internal(r.p >= r.lower_bound, "transform_probability: probability below its bound");
    if (r.p > Rational(BigInt(0))) r.expected_trials = Rational(BigInt(1)) / r.p;
    return r;
}

TowerReport build_tower(const Poly& f0, const QcContext& qc, int depth, bool verify) {
    if (f0.ctx().get() != qc.ctx.get())
        throw domain_error("build_tower: polynomial and map contexts differ");
    int n = f0.degree();
    if (n < 3) throw domain_error("build_tower: seed degree must be at least 3");
    if (!f0.is_monic()) throw domain_error("build_tower: seed must be monic");
    if (depth < 1) throw domain_error("build_tower: depth must be positive");
    if (n % 2 != 0 && qc.D % 4 == 2)
        throw domain_error("build_tower: odd seed degree with transform order 2 mod 4 is not "
                           "guaranteed to stay irreducible; use an even-degree seed");
    if (!is_irreducible(f0)) throw domain_error("build_tower: seed must be irreducible");

    TowerReport rep;
    rep.method = "tower";
    rep.ctx = qc.ctx;
    rep.c = qc.c;
    rep.D = qc.D;
    if (BigInt(n) * mp::pow(BigInt(qc.D), unsigned(depth)) > 50'000'000)
        throw domain_error("build_tower: final tower degree is too large");

    rep.steps.push_back({f0, true, "seed"});
    Poly cur = f0;
    long long expect = n;
    for (int i = 1; i <= depth; ++i) {
        expect *= qc.D;
        cur = qc_transform_monic(cur, qc);
        check_internal(cur.degree() == expect, "build_tower: step degree is off");
        if (i == 1) {
            // hypothesis, not a library bug, when it fails
            if (!is_irreducible(cur))
                throw domain_error("build_tower: the seed's transform is reducible, "
                                   "so the tower hypothesis fails");
            rep.steps.push_back({cur, true, "step 1, verified irreducible"});
        } else if (verify) {
            check_internal(is_irreducible(cur), "build_tower: a tower step went reducible");
            rep.steps.push_back({cur, true, "step " + std::to_string(i) + ", verified irreducible"});
        } else {
            rep.steps.push_back(
                {cur, true, "step " + std::to_string(i) + ", irreducibility guaranteed, not verified"});
        }
    }
    rep.result = std::move(cur);
    rep.success = true;
    return rep;
}

std::vector<std::pair<std::size_t, std::size_t>> QcGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < succ.size(); ++i)
        if (succ[i]) out.emplace_back(i, *succ[i]);
    return out;
}

QcGraph build_graph(const FieldCtx& ctx, int n, const QcContext& qc, std::uint64_t budget,
                    const FactorBudget& order_budget) {
    if (ctx.get() != qc.ctx.get())
        throw domain_error("build_graph: field and map contexts differ");
    if (n < 3) throw domain_error("build_graph: degree must be at least 3");

    QcGraph gr;
    gr.ctx = ctx;
    gr.n = n;
    gr.nodes = enumerate_irreducibles(ctx, n, budget);
    gr.succ.assign(gr.nodes.size(), std::nullopt);
    auto find_node = [&](const Poly& f) {
        auto it = std::lower_bound(gr.nodes.begin(), gr.nodes.end(), f, poly_less);
        check_internal(it != gr.nodes.end() && *it == f, "build_graph: factor outside the node set");
        return std::size_t(it - gr.nodes.begin());
    };
    for (std::size_t j = 0; j < gr.nodes.size(); ++j) {
        Poly t = qc_transform_monic(gr.nodes[j], qc);
        if (is_irreducible(t)) continue; // no degree-n divisors
        for (const auto& [r, e] : factor(t).factors) {
            if (r.degree() != n) continue;
            std::size_t i = find_node(r);
            check_internal(!gr.succ[i] || *gr.succ[i] == j, "build_graph: out-degree exceeds one");
            gr.succ[i] = j;
        }
    }

    gr.periodic.assign(gr.nodes.size(), 0);
    std::vector<int> state(gr.nodes.size(), 0); // 0 new, 1 on current path, 2 done
    for (std::size_t s = 0; s < gr.nodes.size(); ++s) {
        if (state[s]) continue;
        std::vector<std::size_t> path;
        std::size_t u = s;
        while (true) {
            if (state[u] == 1) { // closed a cycle within the current path
                auto it = std::find(path.begin(), path.end(), u);
                for (; it != path.end(); ++it) gr.periodic[*it] = 1;
                break;
            }
            if (state[u] == 2) break;
            state[u] = 1;
            path.push_back(u);
            if (!gr.succ[u]) break;
            u = *gr.succ[u];
        }
        for (std::size_t v : path) state[v] = 2;
    }

    for (std::size_t i = 0; i < gr.nodes.size(); ++i) {
        try {
            bool by_order = is_qc_periodic(gr.nodes[i], qc, order_budget);
            check_internal(by_order == bool(gr.periodic[i]),
                           "build_graph: cycle and root-order periodicity disagree");
        } catch (const budget_error&) {
            // order out of reach; the cycle answer stands
        }
    }
    return gr;
}

ConjectureScanReport conjecture_scan(const FieldCtx& ctx, int n, const QcContext& qc,
                                     std::uint64_t budget) {
    if (ctx.get() != qc.ctx.get())
        throw domain_error("conjecture_scan: field and map contexts differ");
    if (n < 3 || n % 2 == 0)
        throw domain_error("conjecture_scan: degree must be odd and at least 3");
    if (qc.D % 4 != 2) throw domain_error("conjecture_scan: transform order must be 2 mod 4");

    ConjectureScanReport rep;
    rep.ctx = ctx;
    rep.n = n;
    rep.D = qc.D;
    rep.c = qc.c;
    long long half = (long long)n * qc.D * qc.D / 2;
    std::uint64_t examined = 0;
    struct stop_scan {};
    try {
        // The budget caps candidates walked, not an up-front size check, so an
        // interrupted scan still yields the prefix it covered.
        for_each_monic(ctx, n, std::numeric_limits<std::uint64_t>::max(), [&](const Poly& f) {
            if (examined >= budget) {
                rep.partial = true;
                throw stop_scan{};
            }
            ++examined;
            if (!is_irreducible(f)) return;
            rep.scanned += 1;
            Poly t1 = qc_transform_monic(f, qc);
            if (!is_irreducible(t1)) return;
            rep.eligible += 1;
            Poly t2 = qc_transform_monic(t1, qc);
            if (is_irreducible(t2)) {
                rep.stayed_irreducible += 1;
                rep.counterexamples.push_back(f);
                return;
            }
            Factorization fac = factor(t2);
            bool two_way = fac.factors.size() == 2 && fac.factors[0].second == 1 &&
                           fac.factors[1].second == 1 && fac.factors[0].first.degree() == half &&
                           fac.factors[1].first.degree() == half;
            check_internal(two_way, "conjecture_scan: second transform escaped the dichotomy");
            rep.two_way += 1;
        });
    } catch (const stop_scan&) {
    }
    return rep;
}

} // namespace qcpoly
