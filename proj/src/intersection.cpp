#include "unitals/intersection.hpp"

#include <algorithm>

namespace unitals {

TriPoly polynomial_of(const FieldTower& F, const HermitianForm& H) {
    TriPoly poly;
    const uint32_t q = F.q();
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = 0; j < 3; ++j) {
            const uint32_t c = H.at(i, j);
            if (c == 0) continue;
            std::array<uint32_t, 3> e{0, 0, 0};
            e[i] += q;
            e[j] += 1;
            poly.terms.push_back({c, e});
        }
    return poly;
}

TriPoly polynomial_of(const FieldTower&, const ProjLine& L) {
    TriPoly poly;
    for (uint32_t i = 0; i < 3; ++i) {
        if (L.c[i] == 0) continue;
        std::array<uint32_t, 3> e{0, 0, 0};
        e[i] = 1;
        poly.terms.push_back({L.c[i], e});
    }
    return poly;
}

TruncatedSeries evaluate_on_branch(const FieldTower& F, const TriPoly& poly,
                                   const BranchExpansion& branch) {
    const uint32_t n = branch.precision;
    TruncatedSeries acc = TruncatedSeries::constant(F, 0, n);
    const TruncatedSeries x1 = TruncatedSeries::monomial(F, 1, 1, n);
    const TruncatedSeries& x2 = branch.y;
    for (const auto& term : poly.terms) {
        // X3 = 1 contributes nothing; powers of t shift, powers of y multiply
        TruncatedSeries v = TruncatedSeries::constant(F, term.coeff, n);
        for (uint32_t k = 0; k < term.exp[0]; ++k) v = mul(v, x1);
        for (uint32_t k = 0; k < term.exp[1]; ++k) v = mul(v, x2);
        acc = add(acc, v);
    }
    return acc;
}

uint32_t multiplicity_at_origin(const FieldTower& F, const TriPoly& poly,
                                const BranchExpansion& branch) {
    uint32_t at_centre = 0;
    for (const auto& term : poly.terms)
        if (term.exp[0] == 0 && term.exp[1] == 0) at_centre = F.add(at_centre, term.coeff);
    if (at_centre != 0)
        throw std::invalid_argument("branch centre (0,0,1) does not lie on the polynomial");
    const auto ord = evaluate_on_branch(F, poly, branch).order();
    if (!ord)
        throw std::domain_error(
            "evaluation vanishes to full precision: shared component suspected");
    return *ord;
}

namespace {

// Carries (curve, P, tangent at P) onto the canonical configuration
// (canonical curve, (0,0,1), X2 = 0) and returns the projectivity.
Projectivity canonicalize(const FieldTower& F, const HermitianForm& curve, const ProjPoint& P) {
    const ProjLine tp = polar_line(F, curve, P);

    // a second absolute point off the tangent, with its own tangent
    ProjPoint Q{};
    bool have_q = false;
    for (const auto& R : all_points(F)) {
        if (R == P || evaluate(F, curve, R) != 0 || incident(F, R, tp)) continue;
        Q = R;
        have_q = true;
        break;
    }
    if (!have_q) throw std::logic_error("no second curve point found");
    const ProjLine tq = polar_line(F, curve, Q);
    const ProjPoint xinf = meet(F, tp, tq);

    // triangle to triangle: columns X∞', Q, P pulled back to the basis
    std::array<uint32_t, 9> cols{};
    const std::array<ProjPoint, 3> tri{xinf, Q, P};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cols[3 * i + j] = tri[j].c[i];
    if (determinant(F, cols) == 0) throw std::logic_error("degenerate tangent triangle");
    Projectivity M = make_projectivity(F, adjugate(F, cols));

    // shape after the triangle map: diag-free pattern a, beta, beta^q
    HermitianForm G = transformed(F, curve, M);
    const auto expect_zero = [&](int i, int j) {
        if (G.at(i, j) != 0) throw std::logic_error("canonicalized form has unexpected entry");
    };
    expect_zero(0, 1);
    expect_zero(0, 2);
    expect_zero(1, 0);
    expect_zero(1, 1);
    expect_zero(2, 0);
    expect_zero(2, 2);
    const uint32_t a = G.at(0, 0);
    const uint32_t beta = G.at(2, 1);
    if (a == 0 || beta == 0) throw std::logic_error("canonicalized form degenerate");

    // diagonal fix-up: G''_11 = a / N(d1) = -1 and G''_32 = beta / d2 = 1
    const uint32_t target = F.neg(a);
    uint32_t d1 = 0;
    for (uint32_t d = 1; d < F.q2(); ++d)
        if (F.norm(d) == target) {
            d1 = d;
            break;
        }
    if (d1 == 0) throw std::logic_error("norm preimage not found");
    const Projectivity D = diagonal_projectivity(F, d1, beta, 1);
    M = compose(F, D, M);

    // Gram matrices of projectivity classes carry a GF(q)* scalar, so the
    // image must be proportional to the canonical form, not equal to it.
    const HermitianForm done = transformed(F, curve, M);
    const HermitianForm canon = curve_form(F, 1);
    const uint32_t s = F.neg(done.at(0, 0));
    if (s == 0) throw std::logic_error("canonicalization failed");
    for (int k = 0; k < 9; ++k)
        if (done.gram[k] != F.mul(s, canon.gram[k]))
            throw std::logic_error("canonicalization failed to reach the canonical form");
    if (apply(F, M, P) != origin_point())
        throw std::logic_error("canonicalization failed to move P to the origin");
    return M;
}

}  // namespace

uint32_t multiplicity_at(const FieldTower& F, const HermitianForm& curve,
                         const HermitianForm& other, const ProjPoint& P) {
    if (rank(F, curve) != 3)
        throw std::invalid_argument("multiplicity_at requires a non-degenerate curve");
    if (evaluate(F, curve, P) != 0 || evaluate(F, other, P) != 0)
        throw std::invalid_argument("P is not a common point");
    const Projectivity M = canonicalize(F, curve, P);
    const HermitianForm moved = transformed(F, other, M);
    const auto branch = hermitian_branch(F, default_precision(F));
    return multiplicity_at_origin(F, polynomial_of(F, moved), branch);
}

MultiplicityReport bezout_reconcile(const FieldTower& F, const HermitianForm& curve,
                                    const HermitianForm& other) {
    if (rank(F, curve) != 3)
        throw std::invalid_argument("bezout_reconcile requires a rank-3 first form");
    const auto pts_curve = absolute_points(F, curve);
    const auto pts_other = absolute_points(F, other);
    if (pts_curve == pts_other)
        throw std::invalid_argument("forms share their absolute set: common component");

    MultiplicityReport rep;
    rep.budget = (F.q() + 1) * (F.q() + 1);
    std::vector<ProjPoint> common;
    std::set_intersection(pts_curve.begin(), pts_curve.end(), pts_other.begin(),
                          pts_other.end(), std::back_inserter(common));
    rep.common_points = common.size();
    for (const auto& P : common) {
        if (P == origin_point() || P == y_infinity()) continue;
        ++rep.common_points_affine2;
    }
    bool all_on_axis = true;
    for (const auto& P : common) {
        const uint32_t m = multiplicity_at(F, curve, other, P);
        rep.entries.push_back({P, m});
        rep.total += m;
        all_on_axis = all_on_axis && incident(F, P, line_y());
    }
    if (rep.total > rep.budget)
        throw std::logic_error("multiplicity total exceeds the degree budget");
    if (all_on_axis && common.size() == static_cast<size_t>(F.q()) + 1 &&
        rep.total != rep.budget)
        throw std::logic_error("shared-tangent family must meet the budget exactly");
    return rep;
}

} // namespace unitals
