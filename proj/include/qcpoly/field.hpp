#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qcpoly/errors.hpp"
#include "qcpoly/intops.hpp"

namespace qcpoly {

class Field;

// Shared immutable handle. Two contexts are interchangeable only when they are the
// same object; structurally equal fields built twice do not mix.
using FieldCtx = std::shared_ptr<const Field>;

// Value type. Carries a non-owning pointer to its field; keep the FieldCtx (or a
// Poly over it) alive for as long as its elements are.
class FieldElement {
public:
    FieldElement() = default; // detached; any operation on it is an internal error

    const Field* field() const { return field_; }
    bool attached() const { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    // Prime-level residue in [0, p). Errors on extension elements.
    std::uint64_t residue() const;
    // Extension-level coefficients over the base, fixed length = extension degree.
    const std::vector<FieldElement>& coeffs() const;

    FieldElement operator-() const;
    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    friend class Field;
    const Field* field_ = nullptr;
    std::uint64_t val_ = 0;            // prime level
    std::vector<FieldElement> coeffs_; // extension level
};

class Field : public std::enable_shared_from_this<Field> {
public:
    // Prime field F_p. p must be prime and < 2^31 (products must fit in 64 bits).
    static FieldCtx make_prime(std::uint64_t p);

    // One extension step K[t]/(modulus). modulus: coefficients over base, lowest
    // first, monic, degree >= 2. Irreducibility is the caller's contract here;
    // extend_field() (factorization.hpp) is the checking entry point.
    static FieldCtx make_extension(FieldCtx base, std::vector<FieldElement> modulus);

    bool is_prime_field() const { return !base_; }
    std::uint64_t characteristic() const { return p_; }
    const FieldCtx& base() const { return base_; }
    // Degree of this one extension step (1 for a prime field).
    int step_degree() const { return step_degree_; }
    int degree_over_prime() const { return degree_over_prime_; }
    const BigInt& cardinality() const { return cardinality_; }
    const std::vector<FieldElement>& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t v) const; // embeds v mod p at the prime level, lifted
    FieldElement gen() const;                    // residue of the extension variable
    FieldElement element(std::vector<FieldElement> coeffs) const; // over base, length <= step degree

    // True when `anc` appears on this field's base chain (including itself).
    bool extends(const Field* anc) const;

    // Canonical enumeration: index runs over [0, cardinality). Order matches
    // element_less: prime residue value; extensions lexicographic on the
    // coefficient tuple (a_0, ..., a_{m-1}), a_0 compared first.
    FieldElement element_at(const BigInt& index) const;
    BigInt index_of(const FieldElement& a) const;

private:
    Field() = default;
    FieldCtx base_;
    std::uint64_t p_ = 0;
    int step_degree_ = 1;
    int degree_over_prime_ = 1;
    BigInt cardinality_;
    std::vector<FieldElement> modulus_;

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend class FieldElement;
};

// Strict total order backing every "canonical"/"least" choice in the library.
bool element_less(const FieldElement& a, const FieldElement& b);

// a^e for e >= 0.
FieldElement pow(const FieldElement& a, const BigInt& e);
// a^(b^k) without materializing b^k as a repeated-multiplication count.
FieldElement pow_power(const FieldElement& a, const BigInt& b, int k);
// Frobenius x -> x^(p^k).
FieldElement frobenius(const FieldElement& a, int k = 1);

// Embed a into a field further up the same tower (target must extend a's field).
FieldElement lift_to(const FieldElement& a, const FieldCtx& target);
// Inverse of lift_to: requires the value to actually lie in the target subfield
// (checked via Frobenius fixedness; violation is a domain error).
FieldElement coerce_down(const FieldElement& a, const FieldCtx& target);

// Multiplicative order of a != 0. Factors cardinality-1, so it can throw
// budget_error. The `dividing` variant takes a known multiple of the order
// (verified) to keep the factoring small.
BigInt mult_order(const FieldElement& a, const FactorBudget& budget = {});
BigInt mult_order_dividing(const FieldElement& a, const BigInt& multiple,
                           const FactorBudget& budget = {});

// Degree of a over an ancestor subfield: least d >= 1 with a^(|over|^d) = a.
int element_degree(const FieldElement& a, const FieldCtx& over);

} // namespace qcpoly
