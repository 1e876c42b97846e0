#include "monocomp/errors.hpp"
#include "monocomp/galois.hpp"

#include <doctest.h>

#include <vector>

using namespace monocomp;

namespace {

// test-side polynomial oracle: multiply then reduce by long division, all
// independent of the Field tables
std::vector<int> oracle_mulmod(std::vector<int> a, std::vector<int> b,
                               const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    const int dm = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(prod.size()) - 1; d >= dm; --d) {
        const int lead = prod[d];
        if (lead == 0) continue;
        for (int i = 0; i <= dm; ++i)
            prod[d - dm + i] = ((prod[d - dm + i] - lead * mod[i]) % p + p) % p;
    }
    prod.resize(dm);
    return prod;
}

} // namespace

TEST_CASE("prime power recognition") {
    int p = 0, k = 0;
    CHECK(prime_power(2, p, k));
    CHECK(p == 2);
    CHECK(k == 1);
    CHECK(prime_power(9, p, k));
    CHECK(p == 3);
    CHECK(k == 2);
    CHECK(prime_power(8, p, k));
    CHECK(k == 3);
    CHECK_FALSE(prime_power(6, p, k));
    CHECK_FALSE(prime_power(10, p, k));
    CHECK_FALSE(prime_power(12, p, k));
    CHECK_FALSE(prime_power(1, p, k));
    CHECK_FALSE(prime_power(0, p, k));
}

TEST_CASE("field construction basics") {
    const Field f2 = Field::make(2);
    CHECK(f2.characteristic() == 2);
    CHECK(f2.degree() == 1);
    CHECK(f2.add(1, 1) == 0);

    CHECK_THROWS_AS(Field::make(6), NotPrimePowerError);
    CHECK_THROWS_AS(Field::make(10), NotPrimePowerError);
    CHECK_THROWS_AS(Field::make(1), NotPrimePowerError);
    CHECK_THROWS_AS(Field::make(16), UnsupportedOrderError); // default cap 9
    CHECK_NOTHROW(Field::make(16, 16));
}

TEST_CASE("GF(4) modulus is the unique irreducible quadratic") {
    // oracle: of the four monic quadratics over GF(2), only x^2+x+1 lacks roots
    std::vector<std::vector<int>> irreducible;
    for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
            auto value = [&](int x) { return (c0 + c1 * x + x * x) % 2; };
            if (value(0) != 0 && value(1) != 0) irreducible.push_back({c0, c1, 1});
        }
    REQUIRE(irreducible.size() == 1);
    CHECK(irreducible[0] == std::vector<int>{1, 1, 1});

    const Field f4 = Field::make(4);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("GF(4): x * x = x + 1, against the long-division oracle") {
    const Field f4 = Field::make(4);
    const int x = f4.index({0, 1});
    const int xp1 = f4.index({1, 1});
    CHECK(f4.mul(x, x) == xp1);
    CHECK(oracle_mulmod({0, 1}, {0, 1}, f4.modulus(), 2) == std::vector<int>{1, 1});
}

TEST_CASE("GF(5): inverse of 2 is 3, by scanning") {
    const Field f5 = Field::make(5);
    int found = -1;
    for (int x = 1; x < 5; ++x)
        if (2 * x % 5 == 1) found = x;
    CHECK(found == 3);
    CHECK(f5.inv(2) == 3);
    CHECK_THROWS_AS(f5.inv(0), DivisionByZeroError);
}

TEST_CASE("deterministic moduli for the prime-power orders in range") {
    CHECK(Field::make(8).modulus() == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(Field::make(9).modulus() == std::vector<int>{1, 0, 1});     // x^2 + 1
}

TEST_CASE("field axioms hold exhaustively for all supported orders") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        const Field f = Field::make(q);
        for (int a = 0; a < q; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // multiplicative group has q-1 elements, all invertible
        int units = 0;
        for (int a = 1; a < q; ++a) {
            ++units;
            CHECK(f.mul(f.inv(a), a) == 1);
        }
        CHECK(units == q - 1);
    }
}

TEST_CASE("element/index round trip") {
    const Field f9 = Field::make(9);
    for (int a = 0; a < 9; ++a) CHECK(f9.index(f9.element(a)) == a);
}
