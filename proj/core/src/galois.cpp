#include "monocomp/galois.hpp"

#include "monocomp/errors.hpp"

#include <algorithm>
#include <string>

namespace monocomp {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(int n, int& p, int& k) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            k = 0;
            int m = n;
            while (m % d == 0) {
                m /= d;
                ++k;
            }
            return m == 1; // any leftover factor means a second prime
        }
    }
    p = n;
    k = 1;
    return true;
}

namespace {

// Polynomials over GF(p), little-endian coefficient vectors.

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return poly_trim(std::move(out));
}

// a mod m, m monic
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i)
            a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
        a = poly_trim(std::move(a));
    }
    return a;
}

// quotient and remainder of a / b, b nonzero
void poly_divmod(std::vector<int> a, const std::vector<int>& b, int p,
                 std::vector<int>& q, std::vector<int>& rem) {
    a = poly_trim(std::move(a));
    const std::vector<int> bt = poly_trim(b);
    const int db = static_cast<int>(bt.size()) - 1;
    // inverse of the leading coefficient mod p
    int lead_inv = 1;
    for (int x = 1; x < p; ++x)
        if (bt.back() * x % p == 1) { lead_inv = x; break; }
    q.assign(std::max<int>(0, static_cast<int>(a.size()) - db), 0);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int coef = a.back() * lead_inv % p;
        q[shift] = coef;
        for (int i = 0; i <= db; ++i)
            a[i + shift] = ((a[i + shift] - coef * bt[i]) % p + p) % p;
        a = poly_trim(std::move(a));
    }
    rem = std::move(a);
}

// inverse of a modulo m via extended Euclid; a nonzero mod m
std::vector<int> poly_inv_mod(const std::vector<int>& a, const std::vector<int>& m, int p) {
    // invariants: r0 = t0*a (mod m), r1 = t1*a (mod m)
    std::vector<int> r0 = m, r1 = poly_mod(a, m, p);
    std::vector<int> t0 = {}, t1 = {1};
    while (!r1.empty()) {
        std::vector<int> q, rem;
        poly_divmod(r0, r1, p, q, rem);
        std::vector<int> t2_sub = poly_mul(q, t1, p);
        // t2 = t0 - q*t1
        std::vector<int> t2(std::max(t0.size(), t2_sub.size()), 0);
        for (size_t i = 0; i < t2.size(); ++i) {
            int v = (i < t0.size() ? t0[i] : 0) - (i < t2_sub.size() ? t2_sub[i] : 0);
            t2[i] = (v % p + p) % p;
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = poly_trim(std::move(t2));
    }
    // r0 is the gcd, a nonzero constant since m is irreducible and a != 0
    internal_check(r0.size() == 1, "poly gcd with irreducible modulus must be constant");
    int c_inv = 1;
    for (int x = 1; x < p; ++x)
        if (r0[0] * x % p == 1) { c_inv = x; break; }
    std::vector<int> out(t0.size());
    for (size_t i = 0; i < t0.size(); ++i) out[i] = t0[i] * c_inv % p;
    return poly_mod(out, m, p);
}

// exhaustive trial division by every monic polynomial of degree 1..k/2
bool poly_irreducible(const std::vector<int>& f, int p) {
    const int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        // iterate monic degree-d candidates by their coefficient index
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            g[d] = 1;
            int t = idx;
            for (int i = 0; i < d; ++i) {
                g[i] = t % p;
                t /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

Field Field::make(int order, int cap) {
    int p = 0, k = 0;
    if (order < 2 || !prime_power(order, p, k))
        throw NotPrimePowerError("order " + std::to_string(order) + " is not a prime power");
    if (order > cap)
        throw UnsupportedOrderError("order " + std::to_string(order) +
                                    " exceeds the supported cap " + std::to_string(cap));

    Field f;
    f.p_ = p;
    f.k_ = k;
    f.order_ = order;

    if (k == 1) {
        f.modulus_ = {0, 1}; // x - 0 is the formal modulus; reduction is mod p
    } else {
        // smallest monic irreducible of degree k, candidates ordered by the
        // index of their low-coefficient vector
        for (int idx = 0;; ++idx) {
            internal_check(idx < order, "no irreducible modulus found");
            std::vector<int> cand(k + 1, 0);
            cand[k] = 1;
            int t = idx;
            for (int i = 0; i < k; ++i) {
                cand[i] = t % p;
                t /= p;
            }
            if (poly_irreducible(cand, p)) {
                f.modulus_ = cand;
                break;
            }
        }
    }

    auto to_poly = [&](int index) {
        std::vector<int> e(k);
        for (int i = 0; i < k; ++i) {
            e[i] = index % p;
            index /= p;
        }
        return e;
    };
    auto to_index = [&](const std::vector<int>& e) {
        int idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * p + (i < static_cast<int>(e.size()) ? e[i] : 0);
        return idx;
    };

    f.add_table_.assign(order * order, 0);
    f.mul_table_.assign(order * order, 0);
    f.inv_table_.assign(order, -1);
    for (int a = 0; a < order; ++a) {
        const auto pa = to_poly(a);
        for (int b = 0; b < order; ++b) {
            const auto pb = to_poly(b);
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
            f.add_table_[a * order + b] = to_index(s);
            f.mul_table_[a * order + b] = to_index(poly_mod(poly_mul(pa, pb, p), f.modulus_, p));
        }
    }
    for (int a = 1; a < order; ++a)
        f.inv_table_[a] = to_index(poly_inv_mod(to_poly(a), f.modulus_, p));
    return f;
}

FieldElement Field::element(int index) const {
    FieldElement e(k_);
    for (int i = 0; i < k_; ++i) {
        e[i] = index % p_;
        index /= p_;
    }
    return e;
}

int Field::index(const FieldElement& e) const {
    int idx = 0;
    for (int i = k_ - 1; i >= 0; --i)
        idx = idx * p_ + (i < static_cast<int>(e.size()) ? e[i] % p_ : 0);
    return idx;
}

int Field::add(int a, int b) const { return add_table_[a * order_ + b]; }

int Field::sub(int a, int b) const { return add_table_[a * order_ + neg(b)]; }

int Field::mul(int a, int b) const { return mul_table_[a * order_ + b]; }

int Field::neg(int a) const {
    FieldElement e = element(a);
    for (int& c : e) c = (p_ - c) % p_;
    return index(e);
}

int Field::inv(int a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(order_) + ")");
    return inv_table_[a];
}

} // namespace monocomp
