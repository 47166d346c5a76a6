#include "doctest.h"

#include "helpers.hpp"
#include "unitals/field.hpp"

using namespace unitals;
using namespace testutil;

TEST_CASE("tower parameters for the supported desk sizes") {
    const auto t3 = FieldTower::make(3, 1);
    CHECK(t3.q() == 3);
    CHECK(t3.q2() == 9);
    const auto t4 = FieldTower::make(2, 2);
    CHECK(t4.q() == 4);
    CHECK(t4.q2() == 16);
    const auto t5 = FieldTower::make(5, 1);
    CHECK(t5.q() == 5);
    CHECK(t5.q2() == 25);
}

TEST_CASE("modulus is the lex-smallest primitive polynomial, root order checked by powering") {
    const auto t5 = FieldTower::make(5, 1);
    // oracle: the root (code p) must have order q²-1 = 24 under repeated multiplication
    CHECK(slow_order(t5, t5.generator()) == 24);
    CHECK(t5.modulus() == std::vector<uint32_t>{2, 1, 1});  // x² + x + 2

    const auto t3 = FieldTower::make(3, 1);
    CHECK(slow_order(t3, t3.generator()) == 8);
    CHECK(t3.modulus() == std::vector<uint32_t>{2, 1, 1});

    const auto t4 = FieldTower::make(2, 2);
    CHECK(slow_order(t4, t4.generator()) == 15);
    CHECK(t4.modulus() == std::vector<uint32_t>{1, 0, 0, 1, 1});  // x⁴ + x³ + 1
}

TEST_CASE("repeated construction returns byte-identical towers") {
    const auto a = FieldTower::make(3, 1);
    const auto b = FieldTower::make(3, 1);
    CHECK(a == b);
    for (uint32_t x = 0; x < a.q2(); ++x) {
        CHECK(a.frobenius(x) == b.frobenius(x));
        for (uint32_t y = 0; y < a.q2(); ++y) CHECK(a.mul(x, y) == b.mul(x, y));
    }
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(FieldTower::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldTower::make(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(FieldTower::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(FieldTower::make(65521, 2), std::overflow_error);
    CHECK_THROWS_AS(FieldTower::make(2, 16), std::overflow_error);
}

TEST_CASE("field axioms hold exhaustively at q=3 and q=4") {
    for (auto [p, r] : {std::pair{3u, 1u}, std::pair{2u, 2u}}) {
        const auto F = FieldTower::make(p, r);
        const uint32_t n = F.q2();
        bool ok = true;
        for (uint32_t a = 0; a < n && ok; ++a) {
            ok = ok && F.add(a, 0) == a && F.mul(a, 1) == a && F.add(a, F.neg(a)) == 0;
            if (a != 0) ok = ok && F.mul(a, F.inv(a)) == 1;
            for (uint32_t b = 0; b < n && ok; ++b) {
                ok = ok && F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
                for (uint32_t c = 0; c < n && ok; ++c) {
                    ok = ok && F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
                    ok = ok && F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
                    ok = ok && F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("frobenius: fixed points, subfield fixed field, involution") {
    const auto F = FieldTower::make(3, 1);
    CHECK(F.frobenius(0) == 0);
    CHECK(F.frobenius(1) == 1);
    for (uint32_t x : F.subfield_elements()) CHECK(F.frobenius(x) == x);
    // oracles: x^q by repeated multiplication, involution via x^{q²}
    for (uint32_t x = 1; x < F.q2(); ++x) {
        CHECK(F.frobenius(x) == slow_pow(F, x, F.q()));
        CHECK(F.frobenius(F.frobenius(x)) == slow_pow(F, x, F.q() * F.q()));
        CHECK(F.frobenius(F.frobenius(x)) == x);
    }
}

TEST_CASE("the subfield test carves out exactly q elements closed under the operations") {
    for (auto [p, r] : {std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}}) {
        const auto F = FieldTower::make(p, r);
        const auto& S = F.subfield_elements();
        CHECK(S.size() == F.q());
        for (uint32_t a : S)
            for (uint32_t b : S) {
                CHECK(F.in_subfield(F.add(a, b)));
                CHECK(F.in_subfield(F.mul(a, b)));
                if (b != 0) CHECK(F.in_subfield(F.div(a, b)));
            }
    }
}

TEST_CASE("norm and trace land in GF(q); norm multiplicative, trace additive") {
    for (auto [p, r] : {std::pair{3u, 1u}, std::pair{2u, 2u}}) {
        const auto F = FieldTower::make(p, r);
        CHECK(F.norm(0) == 0);
        CHECK(F.trace(0) == 0);
        CHECK(F.norm(1) == 1);
        CHECK(F.trace(1) == F.scalar(2));
        for (uint32_t x = 0; x < F.q2(); ++x) {
            CHECK(F.in_subfield(F.norm(x)));
            CHECK(F.in_subfield(F.trace(x)));
            for (uint32_t y = 0; y < F.q2(); ++y) {
                CHECK(F.norm(F.mul(x, y)) == F.mul(F.norm(x), F.norm(y)));
                CHECK(F.trace(F.add(x, y)) == F.add(F.trace(x), F.trace(y)));
            }
        }
    }
    // sampled at q=5
    const auto F5 = FieldTower::make(5, 1);
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        const uint32_t x = random_element(F5, rng), y = random_element(F5, rng);
        CHECK(F5.norm(F5.mul(x, y)) == F5.mul(F5.norm(x), F5.norm(y)));
        CHECK(F5.trace(F5.add(x, y)) == F5.add(F5.trace(x), F5.trace(y)));
    }
}

TEST_CASE("at q=3 the norm is (q+1)-to-1 from GF(9)* onto GF(3)*") {
    const auto F = FieldTower::make(3, 1);
    std::vector<int> fibre(F.q2(), 0);
    for (uint32_t x = 1; x < F.q2(); ++x) ++fibre[F.norm(x)];
    for (uint32_t v : F.subfield_elements())
        if (v != 0) CHECK(fibre[v] == 4);
    CHECK(fibre[0] == 0);
}

TEST_CASE("primitivity testing") {
    const auto F4 = FieldTower::make(2, 2);
    CHECK_FALSE(F4.is_primitive(1));
    CHECK(F4.is_primitive(F4.generator()));
    // oracle: exhaustive order computation; phi(15) = 8 primitive elements
    int prim = 0;
    for (uint32_t x = 1; x < F4.q2(); ++x) {
        const bool expected = slow_order(F4, x) == 15;
        CHECK(F4.is_primitive(x) == expected);
        prim += expected;
    }
    CHECK(prim == 8);

    CHECK_THROWS_AS(F4.is_primitive(0), std::domain_error);
    const auto F3 = FieldTower::make(3, 1);
    int sub_prim = 0;
    for (uint32_t x : F3.subfield_elements())
        if (x != 0 && F3.is_primitive(x, true)) ++sub_prim;
    CHECK(sub_prim == 1);  // in GF(3)* only 2 has order 2
    CHECK_THROWS_AS(F3.is_primitive(F3.generator(), true), std::invalid_argument);
}

TEST_CASE("element ops edge cases") {
    const auto F = FieldTower::make(3, 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
    CHECK_THROWS_AS(F.div(1, 0), std::domain_error);
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
    CHECK_THROWS_AS(F.check(9), std::out_of_range);
}
