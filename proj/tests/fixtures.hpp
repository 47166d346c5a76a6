#pragma once

#include <algorithm>

#include "unitals/quotient.hpp"
#include "unitals/unital.hpp"

namespace testutil {

using namespace unitals;

// Smallest non-classical Buekenhout-Metz parameters: alpha nonzero with
// (beta^q - beta)² + 4 alpha^{q+1} a non-square in GF(q).
inline std::pair<uint32_t, uint32_t> nonclassical_bm_params(const FieldTower& F) {
    for (uint32_t alpha = 1; alpha < F.q2(); ++alpha)
        for (uint32_t beta = 0; beta < F.q2(); ++beta) {
            const uint32_t d = F.sub(F.frobenius(beta), beta);
            const uint32_t disc = F.add(F.mul(d, d), F.mul(F.scalar(4), F.norm(alpha)));
            if (disc != 0 && F.pow(disc, (F.q() - 1) / 2) == F.neg(1)) return {alpha, beta};
        }
    throw std::logic_error("no non-classical parameters found");
}

// All affine points off both coordinate axes plus the two fixed points: the
// union of every generic orbit, closed under any diagonal projectivity.
// Under g ~ diag(lambda, -lambda^{q+1}, 1) at q=3 every plane point it
// touches receives halves of two different ⟨g⟩-orbits (n_P = 2).
inline std::vector<ProjPoint> generic_mirror_fixture(const FieldTower& F) {
    std::vector<ProjPoint> pts{origin_point(), y_infinity()};
    for (uint32_t x = 1; x < F.q2(); ++x)
        for (uint32_t y = 1; y < F.q2(); ++y) pts.push_back(make_point(F, x, y, 1));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// The full axis X1 = 0: at q ≡ 1 (mod 4) its short orbits are shared by the
// norm-coupled and mirror diagonal groups, and each carries weight 2.
inline std::vector<ProjPoint> axis_fixture(const FieldTower& F) {
    std::vector<ProjPoint> pts{y_infinity()};
    for (const auto& P : points_on_line(F, line_y()))
        if (!incident(F, P, line_infinity())) pts.push_back(P);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace testutil
