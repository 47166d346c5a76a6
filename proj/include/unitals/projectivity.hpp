#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "unitals/plane.hpp"

namespace unitals {

/// An element of PGL(3,q²): an invertible 3x3 matrix of element codes,
/// row-major, normalised so the first nonzero entry is 1 (the scalar class
/// is then unique and comparison is bit-equality).
struct Projectivity {
    std::array<uint32_t, 9> m{};
    auto operator<=>(const Projectivity&) const = default;

    uint32_t at(int row, int col) const { return m[3 * row + col]; }
};

/// Normalises and checks invertibility.  Throws std::invalid_argument on a
/// singular matrix.
Projectivity make_projectivity(const FieldTower& F, const std::array<uint32_t, 9>& m);

Projectivity identity_projectivity();

/// diag(a, b, c), entries nonzero.
Projectivity diagonal_projectivity(const FieldTower& F, uint32_t a, uint32_t b, uint32_t c);

/// Recovers (lambda, mu) with g ~ diag(lambda, mu, 1), if g is diagonal.
std::optional<std::pair<uint32_t, uint32_t>> diagonal_entries(const FieldTower& F,
                                                              const Projectivity& g);

uint32_t determinant(const FieldTower& F, const std::array<uint32_t, 9>& m);

/// Matrix of cofactors transposed; projectively the inverse, with no division.
std::array<uint32_t, 9> adjugate(const FieldTower& F, const std::array<uint32_t, 9>& m);

Projectivity compose(const FieldTower& F, const Projectivity& g, const Projectivity& h);
Projectivity inverse(const FieldTower& F, const Projectivity& g);

ProjPoint apply(const FieldTower& F, const Projectivity& g, const ProjPoint& P);
/// Image of a line: coefficients transform by the inverse transpose.
ProjLine apply(const FieldTower& F, const Projectivity& g, const ProjLine& L);

/// The unique projectivity carrying one ordered frame (four points, no three
/// collinear) to another.  Throws std::invalid_argument on degenerate input.
Projectivity projectivity_from_frames(const FieldTower& F,
                                      const std::array<ProjPoint, 4>& src,
                                      const std::array<ProjPoint, 4>& dst);

/// ⟨g⟩ with its elements listed as g⁰, g¹, ..., g^{n-1}.
struct CyclicSubgroup {
    Projectivity generator;
    std::vector<Projectivity> elements;
    uint64_t order = 0;
};

/// Powers of g until the identity recurs.  `max_order` guards runaway input.
CyclicSubgroup cyclic_group(const FieldTower& F, const Projectivity& g,
                            uint64_t max_order = 1 << 22);

/// ⟨diag(lambda, mu, 1)⟩.  Throws std::invalid_argument on zero entries.
CyclicSubgroup diagonal_generator(const FieldTower& F, uint32_t lambda, uint32_t mu);

struct Orbit {
    uint32_t id = 0;
    std::vector<ProjPoint> points;  // sorted, enumeration order
    size_t length() const { return points.size(); }
};

/// Partition of `domain` into G-orbits.  Ids are assigned by the smallest
/// contained point in enumeration order.  Throws std::invalid_argument if an
/// image escapes the domain (domain not closed under G).
std::vector<Orbit> orbits(const FieldTower& F, const CyclicSubgroup& G,
                          const std::vector<ProjPoint>& domain);

} // namespace unitals
