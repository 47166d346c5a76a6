#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "unitals/field.hpp"

namespace unitals {

/// A point of PG(2,q²) in canonical homogeneous coordinates: the first
/// nonzero coordinate equals 1.  Canonical form makes set membership plain
/// bit-equality and the default ordering the enumeration order.
struct ProjPoint {
    std::array<uint32_t, 3> c{0, 0, 0};
    auto operator<=>(const ProjPoint&) const = default;
};

/// A line of PG(2,q²): the dual coefficient triple, normalised the same way.
/// P lies on L iff sum_i L.c[i] * P.c[i] = 0.
struct ProjLine {
    std::array<uint32_t, 3> c{0, 0, 0};
    auto operator<=>(const ProjLine&) const = default;
};

/// Normalises a coordinate triple.  Throws std::invalid_argument on (0,0,0).
std::array<uint32_t, 3> normalize_triple(const FieldTower& F, std::array<uint32_t, 3> v);

ProjPoint make_point(const FieldTower& F, uint32_t x, uint32_t y, uint32_t z);
ProjLine make_line(const FieldTower& F, uint32_t a, uint32_t b, uint32_t c);

bool incident(const FieldTower& F, const ProjPoint& P, const ProjLine& L);

/// The unique line through two distinct points (cross product, normalised).
/// Throws std::invalid_argument if P == Q.
ProjLine line_through(const FieldTower& F, const ProjPoint& P, const ProjPoint& Q);

/// The meet of two distinct lines.
ProjPoint meet(const FieldTower& F, const ProjLine& L, const ProjLine& M);

/// All q⁴+q²+1 points, each once, in lexicographic order on canonical coords.
std::vector<ProjPoint> all_points(const FieldTower& F);

/// The q⁴ points off the line X3 = 0, in enumeration order.
std::vector<ProjPoint> affine_points(const FieldTower& F);

/// The q²+1 points of a line.
std::vector<ProjPoint> points_on_line(const FieldTower& F, const ProjLine& L);

/// The q²+1 lines through a point.
std::vector<ProjLine> lines_through(const FieldTower& F, const ProjPoint& P);

/// Dense index over canonical points: (0,0,1) -> 0, (0,1,z) -> 1+z,
/// (1,y,z) -> 1+q² + y·q² + z.  Index order equals enumeration order.
/// Lines share the same coordinate space and use the same indexing.
class PointIndex {
public:
    explicit PointIndex(const FieldTower& F) : F_(&F) {}

    uint32_t size() const {
        const uint64_t s = F_->q2();
        return static_cast<uint32_t>(1 + s + s * s);
    }
    uint32_t of(const ProjPoint& P) const { return of_triple(P.c); }
    uint32_t of(const ProjLine& L) const { return of_triple(L.c); }
    ProjPoint at(uint32_t idx) const;

private:
    uint32_t of_triple(const std::array<uint32_t, 3>& c) const;
    const FieldTower* F_;
};

// The standard frame of reference.
inline ProjPoint origin_point() { return ProjPoint{{0, 0, 1}}; }   // O
inline ProjPoint y_infinity() { return ProjPoint{{0, 1, 0}}; }     // Y∞
inline ProjPoint x_infinity() { return ProjPoint{{1, 0, 0}}; }     // X∞
inline ProjLine line_x() { return ProjLine{{0, 1, 0}}; }           // X2 = 0
inline ProjLine line_y() { return ProjLine{{1, 0, 0}}; }           // X1 = 0
inline ProjLine line_infinity() { return ProjLine{{0, 0, 1}}; }    // X3 = 0

/// "x:y:z" with decimal element codes.
std::string to_string(const ProjPoint& P);
ProjPoint point_from_string(const FieldTower& F, const std::string& s);

} // namespace unitals
