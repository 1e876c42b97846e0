#pragma once

#include <vector>

namespace monocomp {

// Orders above the cap are rejected so that irreducibility testing stays
// exhaustively checkable.  Overridable per call (CLI --cap).
inline constexpr int kDefaultOrderCap = 9;

// Coefficient vector in the polynomial basis, little-endian: element
// a_0 + a_1 x + ... + a_{k-1} x^{k-1} is {a_0, ..., a_{k-1}}, each a_i in [0, p).
using FieldElement = std::vector<int>;

// Exact arithmetic in GF(p^k).  Immutable after construction; all operations
// are pure, so concurrent use needs no coordination.
//
// Elements are addressed by index in [0, order): the element with
// coefficients {a_0, ..., a_{k-1}} has index sum a_i * p^i.  This fixes a
// deterministic enumeration of the field, which the plane construction uses
// to map coordinates to rows/columns.
class Field {
public:
    // Builds GF(order).  The modulus is the lexicographically smallest monic
    // irreducible polynomial of degree k over GF(p), where candidates are
    // ordered by the index of their non-leading coefficient vector; this makes
    // field construction (and everything derived from it) reproducible.
    // Throws NotPrimePowerError if order is not a prime power,
    // UnsupportedOrderError if order exceeds cap.
    static Field make(int order, int cap = kDefaultOrderCap);

    int order() const { return order_; }
    int characteristic() const { return p_; }
    int degree() const { return k_; }

    // Monic modulus, little-endian, size k+1, modulus[k] == 1.  For k == 1
    // this is {p mod p, 1} = {0, 1}, i.e. reduction is plain mod p.
    const std::vector<int>& modulus() const { return modulus_; }

    // Index <-> coefficient-vector views of an element.
    FieldElement element(int index) const;
    int index(const FieldElement& e) const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    // Extended Euclid on polynomials; throws DivisionByZeroError for a == 0.
    int inv(int a) const;

private:
    Field() = default;

    int p_ = 0;
    int k_ = 0;
    int order_ = 0;
    std::vector<int> modulus_;
    // dense tables, order x order; affordable for capped orders
    std::vector<int> add_table_;
    std::vector<int> mul_table_;
    std::vector<int> inv_table_;
};

bool is_prime(int n);

// Factors n as p^k with p prime; returns false if n < 2 or n has two
// distinct prime factors.
bool prime_power(int n, int& p, int& k);

} // namespace monocomp
