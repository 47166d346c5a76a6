#include "doctest.h"

#include <algorithm>

#include "helpers.hpp"
#include "unitals/intersection.hpp"

using namespace unitals;
using namespace testutil;

TEST_CASE("tangent line meets the canonical branch with multiplicity q+1") {
    for (auto [p, r] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
        const auto F = FieldTower::make(p, r);
        const auto branch = hermitian_branch(F, default_precision(F));
        CHECK(multiplicity_at_origin(F, polynomial_of(F, line_x()), branch) == F.q() + 1);
    }
}

TEST_CASE("sibling curves through the origin meet the branch with multiplicity q+1") {
    const auto F = FieldTower::make(3, 1);
    const auto branch = hermitian_branch(F, default_precision(F));
    for (uint32_t d = 2; d < F.q2(); ++d)
        CHECK(multiplicity_at_origin(F, polynomial_of(F, curve_form(F, d)), branch) == 4);
}

TEST_CASE("cones through the origin meet the branch with multiplicity q+1 for all representatives") {
    for (auto [p, r] : {std::pair{3u, 1u}, std::pair{5u, 1u}}) {
        const auto F = FieldTower::make(p, r);
        const auto branch = hermitian_branch(F, default_precision(F));
        for (uint32_t c = 1; c < F.q2(); ++c)
            CHECK(multiplicity_at_origin(F, polynomial_of(F, cone_form(F, c)), branch) ==
                  F.q() + 1);
    }
}

TEST_CASE("multiplicity_at_origin argument errors") {
    const auto F = FieldTower::make(3, 1);
    const auto branch = hermitian_branch(F, default_precision(F));
    // a line missing the centre
    CHECK_THROWS_AS(multiplicity_at_origin(F, polynomial_of(F, line_infinity()), branch),
                    std::invalid_argument);
    // the canonical curve against its own branch: zero to full precision
    CHECK_THROWS_AS(multiplicity_at_origin(F, polynomial_of(F, curve_form(F, 1)), branch),
                    std::domain_error);
}

TEST_CASE("transversal intersections have multiplicity one") {
    const auto F = FieldTower::make(3, 1);
    const auto H1 = curve_form(F, 1);
    std::mt19937 rng(61);
    int checked = 0;
    while (checked < 5) {
        const auto g = random_projectivity(F, rng);
        const auto H2 = transformed(F, H1, g);
        const auto p1 = absolute_points(F, H1);
        const auto p2 = absolute_points(F, H2);
        if (p1 == p2) continue;
        std::vector<ProjPoint> common;
        std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(),
                              std::back_inserter(common));
        for (const auto& P : common) {
            const auto t1 = polar_line(F, H1, P);
            const auto t2 = polar_line(F, H2, P);
            if (t1 == t2) continue;
            CHECK(multiplicity_at(F, H1, H2, P) == 1);
            ++checked;
        }
    }
}

TEST_CASE("multiplicity is frame invariant") {
    const auto F = FieldTower::make(3, 1);
    const auto H1 = curve_form(F, 1);
    const auto H2 = curve_form(F, 2);
    const ProjPoint P = origin_point();
    const uint32_t base = multiplicity_at(F, H1, H2, P);
    CHECK(base == 4);
    std::mt19937 rng(67);
    for (int t = 0; t < 10; ++t) {
        const auto g = random_projectivity(F, rng);
        CHECK(multiplicity_at(F, transformed(F, H1, g), transformed(F, H2, g), apply(F, g, P)) ==
              base);
    }
}

TEST_CASE("curve-cone configuration with both special points in place") {
    const auto F = FieldTower::make(3, 1);
    const auto H = curve_form(F, 1);
    const auto C = cone_form(F, 1);
    // the cone contains the tangents at (0,0,1) and (0,1,0)
    CHECK(evaluate(F, C, origin_point()) == 0);
    CHECK(evaluate(F, C, y_infinity()) == 0);
    CHECK(multiplicity_at(F, H, C, origin_point()) == 4);
    CHECK(multiplicity_at(F, H, C, y_infinity()) == 4);
}

TEST_CASE("multiplicity_at argument errors") {
    const auto F = FieldTower::make(3, 1);
    const auto H1 = curve_form(F, 1);
    CHECK_THROWS_AS(multiplicity_at(F, H1, curve_form(F, 2), make_point(F, 1, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(multiplicity_at(F, cone_form(F, 1), H1, origin_point()),
                    std::invalid_argument);
}

TEST_CASE("budget reconciliation for the shared-axis family: q+1 points of multiplicity q+1") {
    for (auto [p, r] : {std::pair{3u, 1u}, std::pair{2u, 2u}}) {
        const auto F = FieldTower::make(p, r);
        // partner parameter in the same GF(q)* coset, so the axis points are shared
        uint32_t d = 0;
        for (uint32_t s : F.subfield_elements())
            if (s > 1) { d = s; break; }
        REQUIRE(d != 0);
        const auto rep = bezout_reconcile(F, curve_form(F, 1), curve_form(F, d));
        CHECK(rep.budget == (F.q() + 1) * (F.q() + 1));
        CHECK(rep.total == rep.budget);
        CHECK(rep.common_points == F.q() + 1);
        for (const auto& e : rep.entries) {
            CHECK(e.multiplicity == F.q() + 1);
            CHECK(incident(F, e.point, line_y()));
        }
    }
}

TEST_CASE("cross-coset curve pairs spread the same budget over q²+1 points") {
    const auto F = FieldTower::make(3, 1);
    // b = 1 and the generator lie in different GF(q)* cosets
    const auto rep = bezout_reconcile(F, curve_form(F, 1), curve_form(F, F.generator()));
    CHECK(rep.common_points == F.q2() + 1);
    CHECK(rep.total == rep.budget);
    size_t transversal = 0;
    for (const auto& e : rep.entries) transversal += e.multiplicity == 1;
    CHECK(transversal == F.q2() - 1);
}

TEST_CASE("budget reconciliation for curve against cone") {
    const auto F = FieldTower::make(3, 1);
    // pick the cone sharing the axis points of the b=1 curve: the two always
    // share (0,0,1) and (0,1,0); total must again fill the budget when all
    // common points sit on the axis
    for (uint32_t c = 1; c < F.q2(); ++c) {
        const auto rep = bezout_reconcile(F, curve_form(F, 1), cone_form(F, c));
        CHECK(rep.total <= rep.budget);
        if (rep.common_points == 4) {
            bool all_axis = true;
            for (const auto& e : rep.entries) all_axis = all_axis && incident(F, e.point, line_y());
            if (all_axis) CHECK(rep.total == 16);
        }
    }
}

TEST_CASE("fifty random curve pairs at q=3 stay within the budget and avoid two-point meets") {
    const auto F = FieldTower::make(3, 1);
    const auto H1 = curve_form(F, 1);
    std::mt19937 rng(71);
    int done = 0;
    while (done < 50) {
        const auto g = random_projectivity(F, rng);
        const auto h = random_projectivity(F, rng);
        const auto A = transformed(F, H1, g);
        const auto B = transformed(F, H1, h);
        if (absolute_points(F, A) == absolute_points(F, B)) continue;
        const auto rep = bezout_reconcile(F, A, B);
        CHECK(rep.total <= 16);
        CHECK(rep.common_points != 2);
        CHECK(rep.common_points >= 1);
        ++done;
    }
}

TEST_CASE("bezout_reconcile rejects shared absolute sets and degenerate first forms") {
    const auto F = FieldTower::make(3, 1);
    CHECK_THROWS_AS(bezout_reconcile(F, curve_form(F, 1), curve_form(F, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(bezout_reconcile(F, cone_form(F, 1), curve_form(F, 1)),
                    std::invalid_argument);
}
