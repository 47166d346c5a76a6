#include "doctest.h"

#include <map>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "unitals/stabilizer.hpp"

using namespace unitals;
using namespace testutil;

TEST_CASE("hermitian two-point stabilisers at q=3: all pairs reach order q²-1, cyclic") {
    const auto F = FieldTower::make(3, 1);
    const auto U = hermitian_curve(F, 1);
    const auto& pts = U.points();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            const auto cert = two_point_stabilizer(U, pts[i], pts[j]);
            CHECK(cert.order == 8);
            CHECK(cert.cyclic);
            // generator relation: mu = lambda^{q+1} in the canonical frame
            CHECK(cert.mu == F.pow(cert.lambda, F.q() + 1));
            CHECK(F.is_primitive(cert.lambda));
            CHECK(F.is_primitive(cert.mu, true));
        }
}

TEST_CASE("hermitian two-point stabilisers at q=4 and q=5 on sampled pairs") {
    std::mt19937 rng(53);
    for (auto [p, r] : {std::pair{2u, 2u}, std::pair{5u, 1u}}) {
        const auto F = FieldTower::make(p, r);
        const auto U = hermitian_curve(F, 1);
        const uint64_t expect = static_cast<uint64_t>(F.q2()) - 1;
        std::uniform_int_distribution<size_t> d(0, U.size() - 1);
        for (int t = 0; t < 200; ++t) {
            const size_t i = d(rng), j = d(rng);
            if (i == j) continue;
            const auto cert = two_point_stabilizer(U, U.points()[i], U.points()[j]);
            CHECK(cert.order == expect);
            CHECK(cert.cyclic);
            CHECK(F.is_primitive(cert.lambda));
            CHECK(F.is_primitive(cert.mu, true));
        }
    }
}

TEST_CASE("no pair of a non-classical buekenhout-metz unital reaches order q²-1, q=3") {
    const auto F = FieldTower::make(3, 1);
    const auto [a, b] = nonclassical_bm_params(F);
    const auto U = buekenhout_metz(F, a, b);
    REQUIRE(U.verify().ok);
    std::map<uint64_t, int> histogram;
    const auto& pts = U.points();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            ++histogram[two_point_stabilizer(U, pts[i], pts[j]).order];
    CHECK(histogram.count(8) == 0);
    size_t pairs = 0;
    for (auto [o, n] : histogram) pairs += n;
    CHECK(pairs == 378);
}

TEST_CASE("stabiliser order is invariant under conjugating the unital") {
    const auto F = FieldTower::make(3, 1);
    const auto U = hermitian_curve(F, 1);
    const ProjPoint P = U.points()[2], Q = U.points()[17];
    const auto base = two_point_stabilizer(U, P, Q);
    std::mt19937 rng(59);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_projectivity(F, rng);
        std::vector<ProjPoint> img;
        for (const auto& R : U.points()) img.push_back(apply(F, g, R));
        Unital Ug(F, std::move(img));
        const auto cert = two_point_stabilizer(Ug, apply(F, g, P), apply(F, g, Q));
        CHECK(cert.order == base.order);
        CHECK(cert.cyclic == base.cyclic);
    }
}

TEST_CASE("stabiliser argument errors") {
    const auto F = FieldTower::make(3, 1);
    const auto U = hermitian_curve(F, 1);
    const ProjPoint P = U.points()[0];
    CHECK_THROWS_AS(two_point_stabilizer(U, P, P), std::invalid_argument);
    const ProjPoint off = make_point(F, 1, 1, 1);
    REQUIRE_FALSE(U.contains(off));
    CHECK_THROWS_AS(two_point_stabilizer(U, P, off), std::invalid_argument);
}
