#include "unitals/series.hpp"

#include <algorithm>

namespace unitals {

namespace {
uint32_t common_precision(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (&a.tower() != &b.tower() && !(a.tower() == b.tower()))
        throw std::invalid_argument("series over different towers");
    const uint32_t n = std::min(a.precision(), b.precision());
    if (n == 0) throw std::underflow_error("series precision underflow");
    return n;
}
}  // namespace

TruncatedSeries TruncatedSeries::monomial(const FieldTower& F, uint32_t exponent,
                                          uint32_t coeff, uint32_t precision) {
    TruncatedSeries s(F, precision);
    if (exponent < precision) s.set_coeff(exponent, coeff);
    return s;
}

std::optional<uint32_t> TruncatedSeries::order() const {
    for (uint32_t e = 0; e < coeff_.size(); ++e)
        if (coeff_[e] != 0) return e;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(uint32_t precision) const {
    TruncatedSeries s(*F_, precision);
    for (uint32_t e = 0; e < std::min<uint32_t>(precision, this->precision()); ++e)
        s.coeff_[e] = coeff_[e];
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::string out;
    for (uint32_t e = 0; e < coeff_.size(); ++e) {
        if (coeff_[e] == 0) continue;
        if (!out.empty()) out += ' ';
        out += std::to_string(e) + ":" + std::to_string(coeff_[e]);
    }
    return out.empty() ? "0" : out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const uint32_t n = common_precision(a, b);
    const FieldTower& F = a.tower();
    TruncatedSeries s(F, n);
    for (uint32_t e = 0; e < n; ++e) s.set_coeff(e, F.add(a.coeff(e), b.coeff(e)));
    return s;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const uint32_t n = common_precision(a, b);
    const FieldTower& F = a.tower();
    TruncatedSeries s(F, n);
    for (uint32_t e = 0; e < n; ++e) s.set_coeff(e, F.sub(a.coeff(e), b.coeff(e)));
    return s;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const uint32_t n = common_precision(a, b);
    const FieldTower& F = a.tower();
    TruncatedSeries s(F, n);
    for (uint32_t i = 0; i < n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (uint32_t j = 0; i + j < n; ++j) {
            if (b.coeff(j) == 0) continue;
            s.set_coeff(i + j, F.add(s.coeff(i + j), F.mul(a.coeff(i), b.coeff(j))));
        }
    }
    return s;
}

TruncatedSeries power_q(const TruncatedSeries& s, uint32_t cap) {
    const FieldTower& F = s.tower();
    const uint64_t q = F.q();
    uint64_t out_prec = static_cast<uint64_t>(s.precision()) * q;
    if (cap != 0) out_prec = std::min<uint64_t>(out_prec, cap);
    TruncatedSeries out(F, static_cast<uint32_t>(out_prec));
    for (uint32_t e = 0; e < s.precision(); ++e) {
        const uint64_t eq = static_cast<uint64_t>(e) * q;
        if (eq >= out_prec) break;
        if (s.coeff(e) != 0)
            out.set_coeff(static_cast<uint32_t>(eq), F.pow(s.coeff(e), q));
    }
    return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    const FieldTower& F = outer.tower();
    if (inner.coeff(0) != 0)
        throw std::invalid_argument("compose requires inner series with zero constant term");
    const uint32_t n = common_precision(outer, inner);
    // Horner from the top coefficient down
    TruncatedSeries acc = TruncatedSeries::constant(F, 0, n);
    const TruncatedSeries in = inner.truncated(n);
    for (uint32_t e = outer.precision(); e-- > 0;) {
        acc = mul(acc, in);
        if (e < n && outer.coeff(e) != 0)
            acc = add(acc, TruncatedSeries::constant(F, outer.coeff(e), n));
    }
    return acc;
}

BranchExpansion hermitian_branch(const FieldTower& F, uint32_t precision) {
    const uint32_t q = F.q();
    if (precision < q + 2)
        throw std::invalid_argument("branch precision must be at least q+2");
    const auto lead = TruncatedSeries::monomial(F, q + 1, 1, precision);
    TruncatedSeries y = lead;
    // y <- t^{q+1} - y^q is a t-adic contraction with factor q
    uint32_t guard = 0;
    for (;;) {
        TruncatedSeries next = sub(lead, power_q(y, precision).truncated(precision));
        if (next == y) break;
        y = next;
        if (++guard > precision + 4) throw std::logic_error("branch iteration did not settle");
    }
    const TruncatedSeries residual = sub(add(power_q(y, precision).truncated(precision), y), lead);
    if (residual.order().has_value())
        throw std::logic_error("branch residual nonzero at order " +
                               std::to_string(*residual.order()));
    return BranchExpansion{y, precision};
}

} // namespace unitals
