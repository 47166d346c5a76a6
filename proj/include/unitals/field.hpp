#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace unitals {

/// Exact arithmetic for the tower GF(p) ⊆ GF(q) ⊆ GF(q²), q = p^r.
///
/// GF(q²) is realised as a single extension GF(p)[x]/(f) where f is the
/// lexicographically smallest primitive polynomial of degree 2r over GF(p)
/// (coefficients compared low degree first), so towers are deterministic and
/// serialise as (p, r, f).  GF(q) is the fixed field of the Frobenius
/// x -> x^q; membership is a single powering test.
///
/// Elements are integer codes in [0, p^{2r}): the little-endian base-p digits
/// of a code are the coefficients of the residue polynomial.  Code 0 is the
/// additive identity, code 1 the multiplicative identity, code p the class of
/// x (a primitive root, by choice of f).
///
/// Multiplication, inversion and powering run on log/antilog tables keyed by
/// the primitive root; addition is digit-wise.  A tower is immutable after
/// construction and all operations are pure, so instances may be shared
/// across threads.
class FieldTower {
public:
    /// Builds the tower for GF(p) ⊆ GF(p^r) ⊆ GF(p^{2r}).
    /// Throws std::invalid_argument if p is not prime or r == 0, and
    /// std::overflow_error if p^{2r} >= 2^32.
    static FieldTower make(uint32_t p, uint32_t r);

    uint32_t p() const { return p_; }
    uint32_t r() const { return r_; }
    uint32_t q() const { return q_; }
    uint32_t q2() const { return q2_; }

    /// Modulus coefficients c0..c_{2r}, low degree first, c_{2r} = 1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// The class of x: a primitive element of GF(q²) by construction.
    uint32_t generator() const { return gen_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const { return neg_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg_[b]); }

    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// Throws std::domain_error on a == 0.
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return exp_[q2_ - 1 - log_[a]];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

    uint32_t pow(uint32_t a, uint64_t e) const {
        if (a == 0) return e == 0 ? 1u : 0u;
        const uint64_t m = q2_ - 1;
        return exp_[static_cast<size_t>((log_[a] * (e % m)) % m)];
    }

    /// x -> x^q.  An involution; fixes exactly the q elements of GF(q).
    uint32_t frobenius(uint32_t a) const { return frob_[a]; }
    /// x -> x^{q+1}, always in GF(q); multiplicative.
    uint32_t norm(uint32_t a) const { return mul(frob_[a], a); }
    /// x -> x^q + x, always in GF(q); additive.
    uint32_t trace(uint32_t a) const { return add(frob_[a], a); }

    bool in_subfield(uint32_t a) const { return frob_[a] == a; }

    /// Multiplicative order.  Throws std::domain_error on a == 0.
    uint64_t order(uint32_t a) const;

    /// True iff the multiplicative order is q²-1 (or q-1 with the subfield
    /// flag).  Throws std::domain_error on a == 0 and std::invalid_argument
    /// if the subfield flag is set but a is not in GF(q).
    bool is_primitive(uint32_t a, bool subfield = false) const;

    /// The q elements of GF(q), ascending by code.
    const std::vector<uint32_t>& subfield_elements() const { return subfield_; }

    /// Embeds a small non-negative integer via GF(p).
    uint32_t scalar(uint32_t n) const { return n % p_; }

    /// Validates an element code.  Throws std::out_of_range.
    void check(uint32_t a) const {
        if (a >= q2_) throw std::out_of_range("element code out of range for tower");
    }

    bool operator==(const FieldTower& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_;
    }

private:
    FieldTower() = default;

    uint32_t p_ = 0, r_ = 0, q_ = 0, q2_ = 0, gen_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> exp_;   // exp_[k] = gen^k, doubled so mul needs no reduction
    std::vector<uint32_t> log_;   // inverse of exp_ on [0, q2-1); log_[0] unused
    std::vector<uint32_t> frob_;  // frob_[a] = a^q
    std::vector<uint32_t> neg_;   // neg_[a] = -a
    std::vector<uint32_t> subfield_;
};

} // namespace unitals
