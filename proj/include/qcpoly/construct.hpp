#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcpoly/qc.hpp"

namespace qcpoly {

struct TowerStep {
    Poly poly;
    bool irreducible = false;
    std::string note;
};

// One run of a construction pipeline, with enough data to reproduce it.
struct TowerReport {
    std::string method; // recursive | random | tower
    FieldCtx ctx;
    FieldElement c;
    int D = 0;
    std::vector<TowerStep> steps;
    bool success = false;
    std::optional<Poly> result;
    int iterations_used = 0;      // recursive: factor picks on the winning branch after the split
    std::optional<int> bound;     // recursive with prime D: nu_D(q^{e(n)} - 1) - 1
    bool split_occurred = false;  // recursive: the seed's transform was reducible
    int trials_used = 0;          // random
    std::optional<int> max_trials;
    std::optional<std::uint64_t> rng_seed; // recorded by callers that seeded the rng
};

// Transform the seed; on a reducible transform, iterate factor picks on the two
// least factors (one factor once the seed is certified non-periodic) until a
// branch's transform is irreducible. Result: a monic irreducible of degree n D.
// The budget controls the periodicity certification; when it does not resolve,
// both branches are tracked, which is always safe. Exceeding the iteration
// bound is an internal error, not a retry.
TowerReport recursive_construct(const Poly& f, const QcContext& qc,
                                const FactorBudget& budget = {});

// Draw uniform irreducibles of degree n until one has an irreducible transform.
// Failure after max_trials is a non-success report, not an exception.
TowerReport random_construct(const FieldCtx& ctx, int n, const QcContext& qc,
                             std::mt19937_64& rng, int max_trials);

struct ProbabilityReport {
    FieldCtx ctx;
    int n = 0;
    int D = 0;
    Rational p;           // invariant count of degree Dn over the irreducible count of degree n
    Rational tau;         // 1 - 3/q^(n/2); odd n rounds the square root down, keeping a lower bound
    Rational lower_bound; // (phi(D)/D) tau
    std::optional<Rational> expected_trials; // 1/p when p > 0
};
ProbabilityReport transform_probability(const FieldCtx& ctx, int n, const QcContext& qc);

// f_i = transform of f_{i-1}, i = 1..depth, each monic of degree n D^i. Requires
// the seed's transform irreducible and (n even or D != 2 mod 4); under those the
// whole tower is guaranteed irreducible. Verification of each step is on by
// default (a reducible step would mean a library bug and raises internal_error);
// verify=false skips it for large depths.
TowerReport build_tower(const Poly& f0, const QcContext& qc, int depth, bool verify = true);

// Functional graph on the monic irreducibles of degree n: edge i -> j when
// nodes[i] divides the transform of nodes[j]. Out-degree is at most 1, so the
// structure is cycles with in-trees; `periodic` marks the cycle nodes.
struct QcGraph {
    FieldCtx ctx;
    int n = 0;
    std::vector<Poly> nodes; // canonical order
    std::vector<std::optional<std::size_t>> succ;
    std::vector<char> periodic;

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
};

// Cycle membership is cross-checked against the root-order periodicity
// criterion on every node where the order computation fits order_budget.
QcGraph build_graph(const FieldCtx& ctx, int n, const QcContext& qc,
                    std::uint64_t budget = std::uint64_t(1) << 26,
                    const FactorBudget& order_budget = {});

// Scan for seeds f of odd degree n (D = 2 mod 4) whose transform is irreducible,
// and classify the second transform: the expected two-way split into halves of
// degree n D^2 / 2, or irreducible (a counterexample candidate, reported with
// the seed). Any other outcome contradicts the dichotomy and is an internal
// error. The budget caps the monic candidates walked (canonical order); an
// exhausted budget stops the scan and marks the report partial.
struct ConjectureScanReport {
    FieldCtx ctx;
    int n = 0;
    int D = 0;
    FieldElement c;
    BigInt scanned = 0;  // irreducibles of degree n examined
    BigInt eligible = 0; // those whose transform is irreducible
    BigInt two_way = 0;
    BigInt stayed_irreducible = 0;
    std::vector<Poly> counterexamples;
    bool partial = false;
};
ConjectureScanReport conjecture_scan(const FieldCtx& ctx, int n, const QcContext& qc,
                                     std::uint64_t budget = std::uint64_t(1) << 26);

} // namespace qcpoly
