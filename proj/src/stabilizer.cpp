#include "unitals/stabilizer.hpp"

#include <algorithm>
#include <numeric>

namespace unitals {

StabilizerCertificate two_point_stabilizer(const Unital& U, const ProjPoint& P,
                                           const ProjPoint& Q) {
    const FieldTower& F = U.tower();
    if (P == Q) throw std::invalid_argument("two_point_stabilizer: P and Q must differ");
    if (!U.contains(P) || !U.contains(Q))
        throw std::invalid_argument("two_point_stabilizer: points must lie on the unital");

    const ProjLine tp = U.tangent_at(P);
    const ProjLine tq = U.tangent_at(Q);
    const ProjPoint xinf = meet(F, tp, tq);
    const ProjLine chord = line_through(F, P, Q);

    // auxiliary frame point: smallest unital point off both tangents and off
    // the chord PQ (off the chord keeps the four points in general position)
    const ProjPoint* aux = nullptr;
    for (const auto& R : U.points()) {
        if (incident(F, R, tp) || incident(F, R, tq) || incident(F, R, chord)) continue;
        aux = &R;
        break;
    }
    if (!aux) throw std::logic_error("no auxiliary frame point found");

    CanonicalFrame frame;
    frame.to_canonical = projectivity_from_frames(
        F, {P, Q, xinf, *aux},
        {origin_point(), y_infinity(), x_infinity(), make_point(F, 1, 1, 1)});
    const Projectivity& M = frame.to_canonical;

    // mapped unital, indexed for O(1) membership
    PointIndex index(F);
    std::vector<uint8_t> member(index.size(), 0);
    std::vector<ProjPoint> mapped;
    mapped.reserve(U.size());
    for (const auto& R : U.points()) {
        const ProjPoint img = apply(F, M, R);
        member[index.of(img)] = 1;
        mapped.push_back(img);
    }
    if (!member[index.of(origin_point())] || !member[index.of(y_infinity())])
        throw std::logic_error("frame map lost the fixed points");

    // all diagonal candidates diag(a, b, 1)
    std::vector<std::pair<uint32_t, uint32_t>> found;
    for (uint32_t a = 1; a < F.q2(); ++a) {
        for (uint32_t b = 1; b < F.q2(); ++b) {
            bool preserves = true;
            for (const auto& R : mapped) {
                const ProjPoint img =
                    ProjPoint{normalize_triple(F, {F.mul(a, R.c[0]), F.mul(b, R.c[1]), R.c[2]})};
                if (!member[index.of(img)]) {
                    preserves = false;
                    break;
                }
            }
            if (preserves) found.emplace_back(a, b);
        }
    }

    // the reduction is checked, not trusted: conjugate back and re-verify
    const Projectivity Minv = inverse(F, M);
    for (const auto& [a, b] : found) {
        const Projectivity h =
            compose(F, Minv, compose(F, diagonal_projectivity(F, a, b, 1), M));
        if (apply(F, h, P) != P || apply(F, h, Q) != Q)
            throw std::logic_error("stabiliser element does not fix the base points");
        for (const auto& R : U.points())
            if (!U.contains(apply(F, h, R)))
                throw std::logic_error("stabiliser element does not preserve the unital");
    }

    StabilizerCertificate cert;
    cert.frame = frame;
    cert.elements = found;
    cert.order = found.size();
    const uint64_t bound = static_cast<uint64_t>(F.q2() - 1) * (F.q2() - 1);
    if (cert.order == 0 || bound % cert.order != 0)
        throw std::logic_error("stabiliser order does not divide (q^2-1)^2");

    // diag(a,b,1) has projective order lcm(ord a, ord b)
    uint64_t max_order = 0;
    std::pair<uint32_t, uint32_t> best{0, 0};
    for (const auto& [a, b] : found) {
        const uint64_t o = std::lcm(F.order(a), F.order(b));
        if (o > max_order || (o == max_order && std::pair{a, b} < best)) {
            max_order = o;
            best = {a, b};
        }
    }
    cert.cyclic = max_order == cert.order;
    cert.lambda = best.first;
    cert.mu = best.second;
    return cert;
}

} // namespace unitals
