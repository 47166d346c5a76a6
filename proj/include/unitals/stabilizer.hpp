#pragma once

#include <cstdint>
#include <vector>

#include "unitals/unital.hpp"

namespace unitals {

/// The frame used by the stabiliser search: O = (0,0,1), Y∞ = (0,1,0),
/// X∞ = (1,0,0) with their triangle sides, plus the projectivity that maps
/// the input configuration onto it.
struct CanonicalFrame {
    ProjPoint origin = origin_point();
    ProjPoint y_inf = y_infinity();
    ProjPoint x_inf = x_infinity();
    ProjLine lx = line_x();
    ProjLine ly = line_y();
    ProjLine linf = line_infinity();
    Projectivity to_canonical;
};

/// Result of the exhaustive 2-point stabiliser computation.
struct StabilizerCertificate {
    uint64_t order = 0;
    bool cyclic = false;
    uint32_t lambda = 0;  // X1-entry of the reported generator, canonical frame
    uint32_t mu = 0;      // X2-entry
    CanonicalFrame frame;
    std::vector<std::pair<uint32_t, uint32_t>> elements;  // all (a, b), diag(a,b,1)
};

/// The full subgroup of PGL(3,q²) preserving U and fixing P and Q, P, Q ∈ U.
///
/// (P, Q, tangent at P, tangent at Q) are carried to (O, Y∞, ℓ_X, ℓ_∞); any
/// stabilising element then fixes the triangle O Y∞ X∞ (it permutes the
/// unique 1-secants), hence is diagonal, and all (q²-1)² candidates
/// diag(a,b,1) are tested against the mapped unital.  Every surviving
/// element is conjugated back and re-checked against U, P, Q, so the
/// reduction is verified rather than trusted.
///
/// The reported generator is the smallest (lambda, mu) code pair among
/// elements of maximal order.  Throws std::invalid_argument on P = Q or
/// points outside U.
StabilizerCertificate two_point_stabilizer(const Unital& U, const ProjPoint& P,
                                           const ProjPoint& Q);

} // namespace unitals
