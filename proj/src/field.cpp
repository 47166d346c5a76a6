#include "unitals/field.hpp"

#include <algorithm>
#include <numeric>

namespace unitals {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense coefficient vectors over GF(p), low degree first, length deg(f).
using Poly = std::vector<uint32_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    const size_t n = f.size() - 1;  // deg f
    std::vector<uint64_t> prod(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            prod[i + j] = (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p;
    }
    // reduce by monic f: x^n = -(c_0 + ... + c_{n-1} x^{n-1})
    for (size_t k = 2 * n - 2; k >= n; --k) {
        const uint64_t c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (size_t j = 0; j < n; ++j) {
            uint64_t sub = (c * f[j]) % p;
            prod[k - n + j] = (prod[k - n + j] + p - sub) % p;
        }
    }
    Poly res(n);
    for (size_t i = 0; i < n; ++i) res[i] = static_cast<uint32_t>(prod[i]);
    return res;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    const size_t n = f.size() - 1;
    Poly res(n, 0);
    res[0] = 1;
    while (e) {
        if (e & 1) res = poly_mulmod(res, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return res;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// True iff the class of x has multiplicative order exactly m = p^{deg f} - 1
// modulo f.  When it does, every nonzero residue is a power of x, hence a
// unit, so f is irreducible and x is primitive.
bool root_is_primitive(const Poly& f, uint32_t p, uint64_t m,
                       const std::vector<uint64_t>& m_factors) {
    const size_t n = f.size() - 1;
    Poly x(n, 0);
    if (n == 1) {
        // not reachable: deg f = 2r >= 2
        return false;
    }
    x[1] = 1;
    if (!poly_is_one(poly_powmod(x, m, f, p))) return false;
    for (uint64_t ell : m_factors)
        if (poly_is_one(poly_powmod(x, m / ell, f, p))) return false;
    return true;
}

uint32_t encode(const Poly& a, uint32_t p) {
    uint32_t code = 0, pw = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        code += a[i] * pw;
        if (i + 1 < a.size()) pw *= p;
    }
    return code;
}

}  // namespace

FieldTower FieldTower::make(uint32_t p, uint32_t r) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (r == 0) throw std::invalid_argument("r must be positive");

    uint64_t q = 1, q2 = 1;
    for (uint32_t i = 0; i < r; ++i) q *= p;
    for (uint32_t i = 0; i < 2 * r; ++i) {
        q2 *= p;
        if (q2 >= (1ull << 32)) throw std::overflow_error("p^{2r} must be < 2^32");
    }

    FieldTower T;
    T.p_ = p;
    T.r_ = r;
    T.q_ = static_cast<uint32_t>(q);
    T.q2_ = static_cast<uint32_t>(q2);

    const size_t deg = 2 * r;
    const uint64_t m = q2 - 1;
    const auto m_factors = prime_factors(m);

    // Scan monic candidates in lexicographic order on (c0, ..., c_{2r-1}),
    // c0 compared first.
    Poly f(deg + 1, 0);
    f[deg] = 1;
    bool found = false;
    for (uint64_t idx = 0; idx < q2 && !found; ++idx) {
        uint64_t rest = idx;
        uint64_t place = q2 / p;
        for (size_t j = 0; j < deg; ++j) {
            f[j] = static_cast<uint32_t>(rest / place);
            rest %= place;
            place = place == 1 ? 1 : place / p;
        }
        found = root_is_primitive(f, p, m, m_factors);
    }
    if (!found) throw std::logic_error("no primitive polynomial found");  // unreachable
    T.modulus_ = f;
    T.gen_ = p;  // code of the class of x

    // Antilog/log tables from successive multiplication by x.
    T.exp_.assign(2 * m, 0);
    T.log_.assign(q2, 0);
    Poly cur(deg, 0);
    cur[0] = 1;
    Poly x(deg, 0);
    x[1] = 1;
    for (uint64_t k = 0; k < m; ++k) {
        const uint32_t code = encode(cur, p);
        T.exp_[k] = code;
        T.exp_[k + m] = code;
        T.log_[code] = static_cast<uint32_t>(k);
        cur = poly_mulmod(cur, x, f, p);
    }
    if (!poly_is_one(cur)) throw std::logic_error("antilog table inconsistent");

    T.neg_.assign(q2, 0);
    for (uint32_t a = 0; a < q2; ++a) {
        uint32_t res = 0, pw = 1, v = a;
        for (size_t i = 0; i < deg; ++i) {
            const uint32_t d = v % p;
            res += (d == 0 ? 0 : p - d) * pw;
            v /= p;
            if (i + 1 < deg) pw *= p;
        }
        T.neg_[a] = res;
    }

    T.frob_.assign(q2, 0);
    for (uint64_t k = 0; k < m; ++k)
        T.frob_[T.exp_[k]] = T.exp_[(k * q) % m];

    for (uint32_t a = 0; a < q2; ++a)
        if (T.frob_[a] == a) T.subfield_.push_back(a);
    if (T.subfield_.size() != q) throw std::logic_error("subfield size mismatch");

    return T;
}

uint32_t FieldTower::add(uint32_t a, uint32_t b) const {
    uint32_t res = 0, pw = 1;
    for (uint32_t i = 0; i < 2 * r_; ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        res += s * pw;
        a /= p_;
        b /= p_;
        if (i + 1 < 2 * r_) pw *= p_;
    }
    return res;
}

uint64_t FieldTower::order(uint32_t a) const {
    if (a == 0) throw std::domain_error("order of zero");
    const uint64_t m = q2_ - 1;
    return m / std::gcd<uint64_t>(m, log_[a]);
}

bool FieldTower::is_primitive(uint32_t a, bool subfield) const {
    if (a == 0) throw std::domain_error("is_primitive of zero");
    if (subfield) {
        if (!in_subfield(a)) throw std::invalid_argument("element not in GF(q)");
        return order(a) == q_ - 1;
    }
    return order(a) == static_cast<uint64_t>(q2_) - 1;
}

} // namespace unitals
