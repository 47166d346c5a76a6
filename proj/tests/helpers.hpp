#pragma once

#include <random>
#include <vector>

#include "unitals/plane.hpp"
#include "unitals/projectivity.hpp"

namespace testutil {

using namespace unitals;

inline uint32_t random_element(const FieldTower& F, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> d(0, F.q2() - 1);
    return d(rng);
}

inline uint32_t random_nonzero(const FieldTower& F, std::mt19937& rng) {
    std::uniform_int_distribution<uint32_t> d(1, F.q2() - 1);
    return d(rng);
}

inline ProjPoint random_point(const FieldTower& F, std::mt19937& rng) {
    for (;;) {
        std::array<uint32_t, 3> v{random_element(F, rng), random_element(F, rng),
                                  random_element(F, rng)};
        if (v[0] || v[1] || v[2]) return ProjPoint{normalize_triple(F, v)};
    }
}

inline Projectivity random_projectivity(const FieldTower& F, std::mt19937& rng) {
    for (;;) {
        std::array<uint32_t, 9> m;
        for (auto& x : m) x = random_element(F, rng);
        if (determinant(F, m) != 0) return make_projectivity(F, m);
    }
}

inline Projectivity random_diagonal(const FieldTower& F, std::mt19937& rng) {
    return diagonal_projectivity(F, random_nonzero(F, rng), random_nonzero(F, rng),
                                 random_nonzero(F, rng));
}

// slow independent powering, for order oracles
inline uint32_t slow_pow(const FieldTower& F, uint32_t a, uint64_t e) {
    uint32_t acc = 1;
    for (uint64_t i = 0; i < e; ++i) acc = F.mul(acc, a);
    return acc;
}

inline uint64_t slow_order(const FieldTower& F, uint32_t a) {
    uint32_t acc = a;
    uint64_t n = 1;
    while (acc != 1) {
        acc = F.mul(acc, a);
        ++n;
    }
    return n;
}

}  // namespace testutil
