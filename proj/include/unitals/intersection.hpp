#pragma once

#include <cstdint>
#include <vector>

#include "unitals/series.hpp"
#include "unitals/unital.hpp"

namespace unitals {

/// A homogeneous polynomial in X1, X2, X3 as a sparse monomial list.
struct TriPoly {
    struct Term {
        uint32_t coeff;
        std::array<uint32_t, 3> exp;
    };
    std::vector<Term> terms;
};

/// The defining polynomial of a Hermitian form: terms X_i^q G_ij X_j.
TriPoly polynomial_of(const FieldTower& F, const HermitianForm& H);
/// A line as a degree-one polynomial.
TriPoly polynomial_of(const FieldTower& F, const ProjLine& L);

/// F(t, y(t), 1) as a truncated series.
TruncatedSeries evaluate_on_branch(const FieldTower& F, const TriPoly& poly,
                                   const BranchExpansion& branch);

/// ord_t F(t, y(t), 1) for the canonical branch at (0,0,1): the intersection
/// multiplicity of F with the canonical curve -X1^{q+1} + X2^q X3 + X2 X3^q
/// at the origin of the branch.  Throws std::invalid_argument when (0,0,1)
/// is not on F, std::domain_error when the series vanishes to full precision
/// (shared component).
uint32_t multiplicity_at_origin(const FieldTower& F, const TriPoly& poly,
                                const BranchExpansion& branch);

/// Default working precision: one beyond the largest multiplicity the degree
/// bound permits, so ord_t is always determinate.
inline uint32_t default_precision(const FieldTower& F) {
    return (F.q() + 1) * (F.q() + 1) + 1;
}

/// Intersection multiplicity of curve and form at a common point P.  The
/// configuration is carried to the canonical frame (curve to the canonical
/// equation, P to (0,0,1), its tangent to X2 = 0) and evaluated along the
/// canonical branch.  `curve` must have rank 3.  Transversal intersections
/// return 1.
uint32_t multiplicity_at(const FieldTower& F, const HermitianForm& curve,
                         const HermitianForm& other, const ProjPoint& P);

/// Common points with their multiplicities, against the degree-product
/// budget (q+1)².
struct MultiplicityReport {
    struct Entry {
        ProjPoint point;
        uint32_t multiplicity;
    };
    std::vector<Entry> entries;  // enumeration order
    uint32_t total = 0;
    uint32_t budget = 0;
    size_t common_points = 0;          // N
    size_t common_points_affine2 = 0;  // m = N minus the two frame points, when present
};

/// Enumerates the common points of two distinct Hermitian forms (the first
/// of rank 3) and sums multiplicities.  Throws std::invalid_argument when
/// the absolute sets coincide (common component) or the first form is
/// degenerate.  The total is checked against the budget; for the
/// shared-tangent family (q+1 common points, all on X1 = 0) it must meet the
/// budget exactly.
MultiplicityReport bezout_reconcile(const FieldTower& F, const HermitianForm& curve,
                                    const HermitianForm& other);

} // namespace unitals
