#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unitals/unital.hpp"

namespace unitals {

/// One representative per multiplicative coset of GF(q)* in GF(q²)*:
/// exactly q+1 elements, smallest code per coset, ascending; 1 comes first.
std::vector<uint32_t> coset_representatives(const FieldTower& F);

/// The incidence structure with points the non-trivial G-orbits of the
/// affine plane under G = ⟨diag(lambda, lambda^{q+1}, 1)⟩ and lines the
/// G-invariant sets: the affine part of X1 = 0, the curves H_b (b over
/// GF(q²)*) and the cones C_c (c over coset representatives).  A projective
/// plane of order q.
struct QuotientPlane {
    enum class LineTag { axis_y, curve, cone };
    struct LineInfo {
        LineTag tag;
        uint32_t param;                   // unused / b / canonical c
        std::vector<uint32_t> point_ids;  // sorted
    };

    const FieldTower* F = nullptr;
    uint32_t lambda = 0;
    uint32_t order_q = 0;
    CyclicSubgroup group;
    std::vector<Orbit> points;              // id-indexed, the non-trivial orbits
    std::vector<ProjPoint> fixed_affine;    // reported, never plane points
    std::vector<LineInfo> lines;            // [axis_y] + curves (b asc) + cones (c asc)
    std::vector<std::vector<uint8_t>> incidence;  // bit-packed rows: point x line

    size_t point_count() const { return points.size(); }
    size_t line_count() const { return lines.size(); }
    bool incident(uint32_t point_id, uint32_t line_id) const {
        return (incidence[point_id][line_id >> 3] >> (line_id & 7)) & 1;
    }

    /// Plane point id of an affine point's orbit, if it lies in one.
    std::optional<uint32_t> orbit_id_of(const ProjPoint& P) const;

    std::vector<int32_t> orbit_of_point;  // dense point index -> id, -1 none
};

/// Builds the plane.  Throws std::invalid_argument when lambda is not a
/// primitive element of GF(q²).
QuotientPlane build_quotient_plane(const FieldTower& F, uint32_t lambda);

struct AxiomCheck {
    std::string name;
    bool ok = true;
    std::string witness;
};
struct PlaneCertificate {
    std::vector<AxiomCheck> axioms;
    bool all_ok() const {
        for (const auto& a : axioms)
            if (!a.ok) return false;
        return true;
    }
};

/// Checks: point/line counts, q+1 points per line, q+1 lines per point,
/// unique joins, unique meets.  Failures are reported with witnesses, never
/// thrown.
PlaneCertificate verify_projective_plane(const QuotientPlane& Pi);

/// The plane points whose orbits lie inside U.  Requires U minus the two
/// fixed points (0,0,1), (0,1,0) to be a union of non-trivial G-orbits;
/// throws std::invalid_argument otherwise.
std::vector<uint32_t> unital_trace(const Unital& U, const QuotientPlane& Pi);

/// Point and line permutations induced on the plane by a projectivity that
/// permutes the orbit set (any diagonal one does).  Throws
/// std::invalid_argument when g does not permute points or lines.
struct InducedCollineation {
    std::vector<uint32_t> point_map;
    std::vector<uint32_t> line_map;
};
InducedCollineation induced_collineation(const Projectivity& g, const QuotientPlane& Pi);

/// The weighted trace of a g-invariant point set on the plane, for
/// g ~ diag(lambda, -lambda^{q+1}, 1):  n_P counts the non-trivial
/// ⟨g⟩-orbits of the set meeting the orbit rho(P); points with n_P > 0 get
/// weight 2 when n_P = 1 and weight 1 when n_P = 2.  The weight sum is
/// checked against 2q+2 and every line's collected weight is reported; rule
/// violations are reported, not repaired.
struct WeightedPointSet {
    std::vector<uint32_t> support_ids;       // plane points with n_P > 0, sorted
    std::vector<int> n;                      // n_P per plane point id
    std::vector<int> weight;                 // nu_P per plane point id (0 off support)
    int total_weight = 0;
    int expected_total = 0;
    bool sum_ok = false;
    std::vector<int> line_weight;            // per line id
    bool blocking_ok = false;                // every line weight >= 2
    std::optional<uint32_t> witness_line;    // first line with weight < 2
};

/// Preconditions (thrown as std::invalid_argument): odd q; g diagonal with
/// mu = -lambda^{q+1} and projective order q²-1; the set closed under g.
WeightedPointSet blocking_multiset(const std::vector<ProjPoint>& invariant_set,
                                   const QuotientPlane& Pi, const Projectivity& g);

} // namespace unitals
