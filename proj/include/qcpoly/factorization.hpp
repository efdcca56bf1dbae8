#pragma once

#include <functional>
#include <random>
#include <vector>

#include "qcpoly/poly.hpp"

namespace qcpoly {

// Checked construction of one tower step: modulus must be monic, degree >= 2,
// over `base`, and irreducible (verified here; this is the public entry point,
// Field::make_extension is the trusting one).
FieldCtx extend_field(const FieldCtx& base, const Poly& modulus);

// Rabin test: x^(Q^n) = x mod f and gcd(x^(Q^(n/r)) - x, f) = 1 for primes r | n.
// Frobenius powers are built by iterated q-th powers mod f.
bool is_irreducible(const Poly& f);

// unit * prod factors[i].first ^ factors[i].second, factors monic irreducible,
// sorted by poly_less, pairwise distinct.
struct Factorization {
    FieldElement unit;
    std::vector<std::pair<Poly, int>> factors;

    Poly product(const FieldCtx& ctx) const;
};

// Square-free split, then distinct-degree, then randomized equal-degree
// (Cantor-Zassenhaus; trace splitting in characteristic 2). The rng makes the
// randomized stage reproducible; the overload seeds one deterministically.
Factorization factor(const Poly& f, std::mt19937_64& rng);
Factorization factor(const Poly& f);

// Number of monic irreducibles of degree n: (1/n) sum_{d | n} mu(d) q^(n/d).
BigInt count_irreducibles(const FieldCtx& ctx, int n);

// All monic polynomials of degree n in canonical order. q^n must stay within
// `budget` or the walk refuses up front (budget_error).
void for_each_monic(const FieldCtx& ctx, int n, std::uint64_t budget,
                    const std::function<void(const Poly&)>& fn);

// Monic irreducibles of degree n in canonical order (full scan, same budget).
std::vector<Poly> enumerate_irreducibles(const FieldCtx& ctx, int n, std::uint64_t budget);

enum class RandomIrreducibleStrategy {
    rejection, // uniform monic draws filtered by is_irreducible (default)
    minimal_poly, // random element of a degree-n step, then its minimal polynomial
};

Poly random_irreducible(const FieldCtx& ctx, int n, std::mt19937_64& rng,
                        RandomIrreducibleStrategy strategy = RandomIrreducibleStrategy::rejection);

// Minimal polynomial of a over an ancestor subfield (Frobenius orbit product).
Poly min_poly(const FieldElement& a, const FieldCtx& over);

} // namespace qcpoly
