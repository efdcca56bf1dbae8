#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "qcpoly/errors.hpp"

namespace qcpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

// prime -> multiplicity, sorted by prime
using FactorList = std::vector<std::pair<BigInt, int>>;

struct FactorBudget {
    // Pollard-rho iterations allowed in total for one factorize() call.
    // Trial division up to trial_limit always runs first.
    std::uint64_t rho_iterations = 40'000'000;
    std::uint64_t trial_limit = 1'000'000;
};

bool is_prime(const BigInt& n);

// Complete factorization of n >= 1. Throws budget_error when a cofactor
// resists splitting within the budget.
FactorList factorize(const BigInt& n, const FactorBudget& budget = {});

// r-adic valuation: largest k with r^k | m. Preconditions: r >= 2, m != 0.
int nu(const BigInt& r, const BigInt& m);

// Multiplicative order of a modulo b. Preconditions: b >= 2, gcd(a, b) = 1.
// Factors b and phi(b) internally, so it inherits factorize()'s budget behavior.
BigInt ord_mod(const BigInt& b, const BigInt& a, const FactorBudget& budget = {});

BigInt pow_mod(BigInt base, BigInt exp, const BigInt& mod);

// Euler phi and Moebius mu from a factorization.
BigInt totient(const FactorList& factors);
int moebius_from_factors(const FactorList& factors);
int moebius(std::uint64_t n);

// Largest r with r*r <= n.
BigInt isqrt(const BigInt& n);

// All divisors of the factored integer, ascending. Count is capped; exceeding it
// is a budget_error (the call sites never need more than a few thousand).
std::vector<BigInt> divisors(const FactorList& factors, std::size_t cap = 1'000'000);

} // namespace qcpoly
