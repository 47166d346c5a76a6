#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "unitals/io.hpp"

using namespace unitals;

namespace {
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("io_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("unital files round-trip byte-identically") {
    const auto F = FieldTower::make(3, 1);
    const auto U = hermitian_curve(F, 2);
    TempFile tmp("unital.unital");
    write_unital_file(tmp.path, U);
    const auto V = read_unital_file(tmp.path, F);
    CHECK(V.points() == U.points());
    CHECK(V.kind() == U.kind());
    std::ostringstream first, second;
    write_unital(first, U);
    write_unital(second, V);
    CHECK(first.str() == second.str());
}

TEST_CASE("unital reader enforces the tower header") {
    const auto F3 = FieldTower::make(3, 1);
    const auto F5 = FieldTower::make(5, 1);
    TempFile tmp("mismatch.unital");
    write_unital_file(tmp.path, hermitian_curve(F3, 1));
    CHECK_THROWS_AS(read_unital_file(tmp.path, F5), IoError);
    CHECK(peek_unital_tower(tmp.path) == std::pair{3u, 1u});
}

TEST_CASE("unital reader rejects malformed content") {
    const auto F = FieldTower::make(3, 1);
    TempFile tmp("broken.unital");
    {
        std::ofstream os(tmp.path);
        os << "unital-file 1\np 3\nr 1\nmodulus 2 1 1\nkind custom\npoints 2\n0:0:1\nbroken\n";
    }
    CHECK_THROWS_AS(read_unital_file(tmp.path, F), IoError);
    CHECK_THROWS_AS(read_unital_file("does-not-exist.unital", F), IoError);
}

TEST_CASE("plane files round-trip") {
    const auto F = FieldTower::make(3, 1);
    const auto Pi = build_quotient_plane(F, F.generator());
    TempFile tmp("plane.plane");
    write_plane_file(tmp.path, Pi);
    const auto raw = read_plane_file(tmp.path);
    CHECK(raw.p == 3);
    CHECK(raw.r == 1);
    CHECK(raw.modulus == F.modulus());
    CHECK(raw.lambda == Pi.lambda);
    CHECK(raw.orbit_points.size() == Pi.point_count());
    for (uint32_t i = 0; i < Pi.point_count(); ++i) {
        REQUIRE(raw.orbit_points[i].size() == Pi.points[i].length());
        for (size_t k = 0; k < Pi.points[i].points.size(); ++k)
            CHECK(raw.orbit_points[i][k] == to_string(Pi.points[i].points[k]));
    }
    CHECK(raw.line_tags.size() == Pi.line_count());
    CHECK(raw.line_tags[0] == "axis_y");
    CHECK(raw.incidence_rows.size() == Pi.point_count());
    // hex rows encode the incidence bits
    for (uint32_t i = 0; i < Pi.point_count(); ++i) {
        const auto& row = raw.incidence_rows[i];
        REQUIRE(row.size() == 2 * Pi.incidence[i].size());
        for (uint32_t l = 0; l < Pi.line_count(); ++l) {
            const std::string byte_hex = row.substr(2 * (l / 8), 2);
            const int byte = std::stoi(byte_hex, nullptr, 16);
            CHECK(((byte >> (l % 8)) & 1) == (Pi.incident(i, l) ? 1 : 0));
        }
    }
    // writing twice is byte-stable
    std::ostringstream a, b;
    write_plane(a, Pi);
    write_plane(b, Pi);
    CHECK(a.str() == b.str());
}
