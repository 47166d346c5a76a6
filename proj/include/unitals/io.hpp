#pragma once

#include <iosfwd>
#include <string>

#include "unitals/quotient.hpp"
#include "unitals/unital.hpp"

namespace unitals {

/// Malformed or mismatched files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unital file: a tower header (p, r, modulus coefficients low degree
/// first), a kind annotation, a count, one "x:y:z" point per line in
/// canonical sorted order.
void write_unital(std::ostream& os, const Unital& U);
void write_unital_file(const std::string& path, const Unital& U);

/// Reads and validates.  When `expect` is given, a tower mismatch is a hard
/// error.  Throws IoError.
Unital read_unital(std::istream& is, const FieldTower& expect);
Unital read_unital_file(const std::string& path, const FieldTower& expect);

/// Reads only the (p, r) of a file header.
std::pair<uint32_t, uint32_t> peek_unital_tower(const std::string& path);

/// Quotient plane file: tower header, lambda, orbit table (id -> sorted
/// points), line table (tag + parameter), incidence bitmatrix as lowercase
/// hex rows (row = plane point; byte k holds lines 8k..8k+7, LSB first).
void write_plane(std::ostream& os, const QuotientPlane& Pi);
void write_plane_file(const std::string& path, const QuotientPlane& Pi);

/// Raw re-read of a plane file, for round-trip checks.
struct PlaneFile {
    uint32_t p = 0, r = 0;
    std::vector<uint32_t> modulus;
    uint32_t lambda = 0;
    std::vector<std::vector<std::string>> orbit_points;
    std::vector<std::string> line_tags;
    std::vector<std::string> incidence_rows;
};
PlaneFile read_plane_file(const std::string& path);

} // namespace unitals
