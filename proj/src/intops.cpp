#include "qcpoly/intops.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace qcpoly {

BigInt pow_mod(BigInt base, BigInt exp, const BigInt& mod) {
    check_internal(mod >= 1, "pow_mod: modulus < 1");
    if (mod == 1) return 0;
    base %= mod;
    if (base < 0) base += mod;
    BigInt r = 1;
    while (exp > 0) {
        if ((exp & 1) != 0) r = (r * base) % mod;
        base = (base * base) % mod;
        exp >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin(const BigInt& n, const BigInt& a) {
    if (a % n == 0) return true;
    BigInt d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    BigInt x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

} // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic for n < 3.3e24 with this base set; beyond that the error
    // probability is far below anything else in the pipeline.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!miller_rabin(n, a)) return false;
    }
    if (n < BigInt("3317044064679887385961981")) return true;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (int i = 0; i < 24; ++i) {
        BigInt a = 2 + BigInt(rng()) % (n - 3);
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

namespace {

// Pollard rho, Brent variant. Returns a nontrivial factor of n (composite, odd,
// not a prime power handled elsewhere) or 0 when the iteration budget ran out.
BigInt pollard_brent(const BigInt& n, std::uint64_t& iterations_left, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    while (iterations_left > 0) {
        BigInt y = 1 + BigInt(rng()) % (n - 1);
        BigInt c = 1 + BigInt(rng()) % (n - 1);
        BigInt m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1 && iterations_left > 0) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1 && iterations_left > 0) {
                ys = y;
                BigInt lim = std::min(m, BigInt(r - k));
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                if (iterations_left < std::uint64_t(lim)) iterations_left = 0;
                else iterations_left -= std::uint64_t(lim);
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            }
        }
        if (g > 1 && g < n) return g;
        // g == n: cycle degenerated, retry with new parameters (budget permitting)
    }
    return 0;
}

void factor_rec(const BigInt& n, FactorList& out, std::uint64_t& iterations_left,
                std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    BigInt d = pollard_brent(n, iterations_left, rng);
    if (d == 0) throw budget_error("factorize: effort cap reached on cofactor " + n.str());
    factor_rec(d, out, iterations_left, rng);
    factor_rec(n / d, out, iterations_left, rng);
}

} // namespace

FactorList factorize(const BigInt& n, const FactorBudget& budget) {
    if (n < 1) throw domain_error("factorize: argument must be >= 1");
    FactorList out;
    BigInt m = n;
    for (std::uint64_t p = 2; p <= budget.trial_limit && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            out.emplace_back(BigInt(p), e);
        }
    }
    if (m > 1) {
        if (is_prime(m)) {
            out.emplace_back(m, 1);
        } else {
            std::uint64_t left = budget.rho_iterations;
            std::mt19937_64 rng(0xda3e39cb94b95bdbULL);
            FactorList rest;
            factor_rec(m, rest, left, rng);
            std::sort(rest.begin(), rest.end());
            for (std::size_t i = 0; i < rest.size();) {
                std::size_t j = i;
                int e = 0;
                while (j < rest.size() && rest[j].first == rest[i].first) { e += rest[j].second; ++j; }
                out.emplace_back(rest[i].first, e);
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int nu(const BigInt& r, const BigInt& m) {
    if (r < 2) throw domain_error("nu: base must be >= 2");
    if (m == 0) throw domain_error("nu: valuation of zero is undefined");
    BigInt x = abs(m);
    int k = 0;
    while (x % r == 0) { x /= r; ++k; }
    return k;
}

BigInt totient(const FactorList& factors) {
    BigInt t = 1;
    for (const auto& [p, e] : factors) {
        t *= p - 1;
        for (int i = 1; i < e; ++i) t *= p;
    }
    return t;
}

int moebius_from_factors(const FactorList& factors) {
    for (const auto& [p, e] : factors) {
        (void)p;
        if (e > 1) return 0;
    }
    return factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(std::uint64_t n) {
    check_internal(n >= 1, "moebius: argument must be >= 1");
    return moebius_from_factors(factorize(BigInt(n)));
}

BigInt ord_mod(const BigInt& b, const BigInt& a, const FactorBudget& budget) {
    if (b < 2) throw domain_error("ord_mod: modulus must be >= 2");
    BigInt ar = a % b;
    if (ar < 0) ar += b;
    if (gcd(ar, b) != 1) throw domain_error("ord_mod: argument not a unit modulo " + b.str());
    // The order divides the group exponent; phi(b) is a cheap-enough multiple.
    BigInt group = totient(factorize(b, budget));
    check_internal(pow_mod(ar, group, b) == 1, "ord_mod: phi(b) is not an exponent multiple");
    BigInt d = group;
    for (const auto& [p, e] : factorize(group, budget)) {
        (void)e;
        while (d % p == 0 && pow_mod(ar, d / p, b) == 1) d /= p;
    }
    return d;
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

std::vector<BigInt> divisors(const FactorList& factors, std::size_t cap) {
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : factors) {
        std::size_t base = out.size();
        BigInt pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pk);
                if (out.size() > cap) throw budget_error("divisors: more than cap divisors");
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qcpoly
