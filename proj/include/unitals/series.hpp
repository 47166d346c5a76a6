#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitals/field.hpp"

namespace unitals {

/// Formal power series over GF(q²) truncated at an explicit precision:
/// coefficients of t^0 .. t^{N-1} are known, everything from t^N on is not.
/// Arithmetic never reports coefficients at or beyond the minimum precision
/// of its operands, and the order of a series that is zero so far is
/// "at least N", never a number.
class TruncatedSeries {
public:
    TruncatedSeries(const FieldTower& F, uint32_t precision)
        : F_(&F), coeff_(precision, 0) {
        if (precision == 0) throw std::invalid_argument("series needs positive precision");
    }

    static TruncatedSeries monomial(const FieldTower& F, uint32_t exponent, uint32_t coeff,
                                    uint32_t precision);
    static TruncatedSeries constant(const FieldTower& F, uint32_t value, uint32_t precision) {
        return monomial(F, 0, value, precision);
    }

    const FieldTower& tower() const { return *F_; }
    uint32_t precision() const { return static_cast<uint32_t>(coeff_.size()); }

    /// Throws std::out_of_range at or beyond the precision.
    uint32_t coeff(uint32_t exponent) const {
        if (exponent >= coeff_.size())
            throw std::out_of_range("coefficient beyond series precision");
        return coeff_[exponent];
    }
    void set_coeff(uint32_t exponent, uint32_t value) {
        F_->check(value);
        if (exponent >= coeff_.size())
            throw std::out_of_range("coefficient beyond series precision");
        coeff_[exponent] = value;
    }

    /// Least exponent with nonzero coefficient; nullopt when zero to
    /// precision (order >= precision).
    std::optional<uint32_t> order() const;

    TruncatedSeries truncated(uint32_t precision) const;

    bool operator==(const TruncatedSeries& o) const { return coeff_ == o.coeff_; }

    /// "e0:c0 e1:c1 ..." sparse form, for reports and goldens.
    std::string to_string() const;

private:
    const FieldTower* F_;
    std::vector<uint32_t> coeff_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// s(t)^q by the characteristic-p identity (sum a_i t^i)^q = sum a_i^q t^{iq}.
/// Exact: the result's precision is q times the input's (capped at `cap`
/// when nonzero).
TruncatedSeries power_q(const TruncatedSeries& s, uint32_t cap = 0);

/// outer(inner); inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// The unique y with y(0) = 0 and y^q + y = t^{q+1}, to the given precision:
/// the fixed point of y -> t^{q+1} - y^q, reached in about log_q(N) steps
/// since each step multiplies the error's order by q.  The residual is
/// checked to vanish before returning.  Requires precision >= q+2.
struct BranchExpansion {
    TruncatedSeries y;       // x(t) = t, x3(t) = 1 implied
    uint32_t precision;
};
BranchExpansion hermitian_branch(const FieldTower& F, uint32_t precision);

} // namespace unitals
