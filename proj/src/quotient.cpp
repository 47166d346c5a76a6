#include "unitals/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unitals {

std::vector<uint32_t> coset_representatives(const FieldTower& F) {
    std::vector<uint8_t> taken(F.q2(), 0);
    std::vector<uint32_t> reps;
    for (uint32_t c = 1; c < F.q2(); ++c) {
        if (taken[c]) continue;
        reps.push_back(c);
        for (uint32_t s : F.subfield_elements())
            if (s != 0) taken[F.mul(c, s)] = 1;
    }
    if (reps.size() != F.q() + 1) throw std::logic_error("coset count mismatch");
    return reps;
}

std::optional<uint32_t> QuotientPlane::orbit_id_of(const ProjPoint& P) const {
    PointIndex index(*F);
    const int32_t id = orbit_of_point[index.of(P)];
    if (id < 0) return std::nullopt;
    return static_cast<uint32_t>(id);
}

namespace {

void set_bit(std::vector<uint8_t>& row, uint32_t j) { row[j >> 3] |= uint8_t(1u << (j & 7)); }

// collects the sorted orbit ids covering a G-invariant affine set
std::vector<uint32_t> ids_of_invariant_set(const QuotientPlane& Pi,
                                           const std::vector<ProjPoint>& pts) {
    PointIndex index(*Pi.F);
    std::set<uint32_t> ids;
    size_t covered = 0;
    for (const auto& P : pts) {
        const int32_t id = Pi.orbit_of_point[index.of(P)];
        if (id < 0) throw std::logic_error("line set contains a point outside all orbits");
        ids.insert(static_cast<uint32_t>(id));
    }
    for (uint32_t id : ids) covered += Pi.points[id].points.size();
    if (covered != pts.size())
        throw std::logic_error("line set is not a union of orbits");
    return {ids.begin(), ids.end()};
}

}  // namespace

QuotientPlane build_quotient_plane(const FieldTower& F, uint32_t lambda) {
    if (lambda == 0 || !F.is_primitive(lambda))
        throw std::invalid_argument("lambda must be primitive in GF(q^2)");
    const uint32_t q = F.q();

    QuotientPlane Pi;
    Pi.F = &F;
    Pi.lambda = lambda;
    Pi.order_q = q;
    Pi.group = diagonal_generator(F, lambda, F.pow(lambda, q + 1));
    if (Pi.group.order != static_cast<uint64_t>(F.q2()) - 1)
        throw std::logic_error("orbit group has unexpected order");

    const auto domain = affine_points(F);
    auto all_orbits = orbits(F, Pi.group, domain);

    size_t n_long = 0, n_short = 0;
    for (auto& orb : all_orbits) {
        if (orb.length() == 1) {
            Pi.fixed_affine.push_back(orb.points.front());
        } else if (orb.length() == static_cast<size_t>(F.q2()) - 1) {
            ++n_long;
            Pi.points.push_back(std::move(orb));
        } else if (orb.length() == static_cast<size_t>(q) - 1) {
            ++n_short;
            Pi.points.push_back(std::move(orb));
        } else {
            throw std::logic_error("unexpected orbit length " + std::to_string(orb.length()));
        }
    }
    if (n_long != static_cast<size_t>(q) * q || n_short != static_cast<size_t>(q) + 1)
        throw std::logic_error("orbit census mismatch");
    std::sort(Pi.points.begin(), Pi.points.end(),
              [](const Orbit& a, const Orbit& b) { return a.points.front() < b.points.front(); });
    for (size_t i = 0; i < Pi.points.size(); ++i) Pi.points[i].id = static_cast<uint32_t>(i);

    PointIndex index(F);
    Pi.orbit_of_point.assign(index.size(), -1);
    for (const auto& orb : Pi.points)
        for (const auto& P : orb.points) Pi.orbit_of_point[index.of(P)] = static_cast<int32_t>(orb.id);

    // line: affine part of X1 = 0, minus the fixed point (0,0,1)
    {
        std::vector<ProjPoint> pts;
        for (const auto& P : points_on_line(F, line_y()))
            if (P.c[2] != 0 && P != origin_point()) pts.push_back(P);
        QuotientPlane::LineInfo li{QuotientPlane::LineTag::axis_y, 0, ids_of_invariant_set(Pi, pts)};
        if (li.point_ids.size() != static_cast<size_t>(q) + 1)
            throw std::logic_error("axis line of the quotient has wrong point count");
        Pi.lines.push_back(std::move(li));
    }
    // curve lines, b ascending over GF(q²)*
    for (uint32_t b = 1; b < F.q2(); ++b) {
        const auto H = curve_form(F, b);
        std::vector<ProjPoint> pts;
        for (const auto& P : affine_points(F))
            if (P != origin_point() && evaluate(F, H, P) == 0) pts.push_back(P);
        Pi.lines.push_back({QuotientPlane::LineTag::curve, b, ids_of_invariant_set(Pi, pts)});
    }
    // cone lines, canonical c ascending
    for (uint32_t c : coset_representatives(F)) {
        const auto H = cone_form(F, c);
        std::vector<ProjPoint> pts;
        for (const auto& P : affine_points(F))
            if (P != origin_point() && evaluate(F, H, P) == 0) pts.push_back(P);
        Pi.lines.push_back({QuotientPlane::LineTag::cone, c, ids_of_invariant_set(Pi, pts)});
    }
    if (Pi.lines.size() != Pi.points.size())
        throw std::logic_error("line count differs from point count");
    // all lines distinct as id sets
    {
        auto sets = Pi.lines;
        std::sort(sets.begin(), sets.end(),
                  [](const auto& a, const auto& b) { return a.point_ids < b.point_ids; });
        for (size_t i = 1; i < sets.size(); ++i)
            if (sets[i].point_ids == sets[i - 1].point_ids)
                throw std::logic_error("duplicate line in the quotient plane");
    }

    const size_t row_bytes = (Pi.lines.size() + 7) / 8;
    Pi.incidence.assign(Pi.points.size(), std::vector<uint8_t>(row_bytes, 0));
    for (uint32_t lid = 0; lid < Pi.lines.size(); ++lid)
        for (uint32_t pid : Pi.lines[lid].point_ids) set_bit(Pi.incidence[pid], lid);
    return Pi;
}

PlaneCertificate verify_projective_plane(const QuotientPlane& Pi) {
    PlaneCertificate cert;
    const size_t n = Pi.order_q;
    const size_t expect = n * n + n + 1;

    AxiomCheck counts{"point and line counts", true, ""};
    if (Pi.point_count() != expect || Pi.line_count() != expect) {
        counts.ok = false;
        counts.witness = "points=" + std::to_string(Pi.point_count()) +
                         " lines=" + std::to_string(Pi.line_count()) +
                         " expected=" + std::to_string(expect);
    }
    cert.axioms.push_back(counts);

    AxiomCheck per_line{"every line has q+1 points", true, ""};
    for (uint32_t l = 0; l < Pi.line_count() && per_line.ok; ++l) {
        size_t c = 0;
        for (uint32_t p = 0; p < Pi.point_count(); ++p) c += Pi.incident(p, l);
        if (c != n + 1) {
            per_line.ok = false;
            per_line.witness = "line " + std::to_string(l) + " has " + std::to_string(c);
        }
    }
    cert.axioms.push_back(per_line);

    AxiomCheck per_point{"every point is on q+1 lines", true, ""};
    for (uint32_t p = 0; p < Pi.point_count() && per_point.ok; ++p) {
        size_t c = 0;
        for (uint32_t l = 0; l < Pi.line_count(); ++l) c += Pi.incident(p, l);
        if (c != n + 1) {
            per_point.ok = false;
            per_point.witness = "point " + std::to_string(p) + " is on " + std::to_string(c);
        }
    }
    cert.axioms.push_back(per_point);

    AxiomCheck joins{"two points lie on exactly one common line", true, ""};
    for (uint32_t p = 0; p < Pi.point_count() && joins.ok; ++p)
        for (uint32_t r = p + 1; r < Pi.point_count() && joins.ok; ++r) {
            size_t common = 0;
            for (uint32_t l = 0; l < Pi.line_count(); ++l)
                common += Pi.incident(p, l) && Pi.incident(r, l);
            if (common != 1) {
                joins.ok = false;
                joins.witness = "points " + std::to_string(p) + "," + std::to_string(r) +
                                " share " + std::to_string(common) + " lines";
            }
        }
    cert.axioms.push_back(joins);

    AxiomCheck meets{"two lines meet in exactly one common point", true, ""};
    for (uint32_t l = 0; l < Pi.line_count() && meets.ok; ++l)
        for (uint32_t m = l + 1; m < Pi.line_count() && meets.ok; ++m) {
            size_t common = 0;
            for (uint32_t p = 0; p < Pi.point_count(); ++p)
                common += Pi.incident(p, l) && Pi.incident(p, m);
            if (common != 1) {
                meets.ok = false;
                meets.witness = "lines " + std::to_string(l) + "," + std::to_string(m) +
                                " share " + std::to_string(common) + " points";
            }
        }
    cert.axioms.push_back(meets);
    return cert;
}

std::vector<uint32_t> unital_trace(const Unital& U, const QuotientPlane& Pi) {
    const FieldTower& F = *Pi.F;
    PointIndex index(F);
    std::set<uint32_t> ids;
    for (const auto& P : U.points()) {
        if (P == origin_point() || P == y_infinity()) continue;
        const int32_t id = Pi.orbit_of_point[index.of(P)];
        if (id < 0)
            throw std::invalid_argument("unital point " + to_string(P) +
                                        " lies in no non-trivial orbit");
        ids.insert(static_cast<uint32_t>(id));
    }
    for (uint32_t id : ids)
        for (const auto& P : Pi.points[id].points)
            if (!U.contains(P))
                throw std::invalid_argument("unital is not a union of orbits off the fixed points");
    return {ids.begin(), ids.end()};
}

InducedCollineation induced_collineation(const Projectivity& g, const QuotientPlane& Pi) {
    const FieldTower& F = *Pi.F;
    PointIndex index(F);
    InducedCollineation out;
    out.point_map.assign(Pi.point_count(), 0);
    std::vector<uint8_t> hit(Pi.point_count(), 0);
    for (const auto& orb : Pi.points) {
        const ProjPoint img = apply(F, g, orb.points.front());
        const uint32_t img_idx = index.of(img);
        if (img_idx >= Pi.orbit_of_point.size() || Pi.orbit_of_point[img_idx] < 0)
            throw std::invalid_argument("projectivity does not permute the orbit set");
        const uint32_t target = static_cast<uint32_t>(Pi.orbit_of_point[img_idx]);
        if (Pi.points[target].length() != orb.length())
            throw std::invalid_argument("projectivity does not permute the orbit set");
        out.point_map[orb.id] = target;
        hit[target] = 1;
    }
    for (auto h : hit)
        if (!h) throw std::invalid_argument("induced point map is not a bijection");

    std::map<std::vector<uint32_t>, uint32_t> line_of_ids;
    for (uint32_t l = 0; l < Pi.line_count(); ++l) line_of_ids[Pi.lines[l].point_ids] = l;
    out.line_map.assign(Pi.line_count(), 0);
    for (uint32_t l = 0; l < Pi.line_count(); ++l) {
        std::vector<uint32_t> img;
        img.reserve(Pi.lines[l].point_ids.size());
        for (uint32_t pid : Pi.lines[l].point_ids) img.push_back(out.point_map[pid]);
        std::sort(img.begin(), img.end());
        const auto it = line_of_ids.find(img);
        if (it == line_of_ids.end())
            throw std::invalid_argument("projectivity does not permute the line set");
        out.line_map[l] = it->second;
    }
    return out;
}

WeightedPointSet blocking_multiset(const std::vector<ProjPoint>& invariant_set,
                                   const QuotientPlane& Pi, const Projectivity& g) {
    const FieldTower& F = *Pi.F;
    if (F.p() == 2) throw std::invalid_argument("blocking_multiset requires odd q");

    const auto diag = diagonal_entries(F, g);
    if (!diag) throw std::invalid_argument("g must be diagonal");
    const auto [lambda, mu] = *diag;
    const uint32_t expected_mu = F.neg(F.pow(lambda, F.q() + 1));
    if (mu != expected_mu || mu == F.pow(lambda, F.q() + 1))
        throw std::invalid_argument("g must have mu = -lambda^{q+1} distinct from lambda^{q+1}");
    const auto G = cyclic_group(F, g);
    if (G.order != static_cast<uint64_t>(F.q2()) - 1)
        throw std::invalid_argument("⟨g⟩ must have order q^2-1");

    // the set must be closed under g
    PointIndex index(F);
    std::vector<uint8_t> member(index.size(), 0);
    for (const auto& P : invariant_set) member[index.of(P)] = 1;
    for (const auto& P : invariant_set)
        if (!member[index.of(apply(F, g, P))])
            throw std::invalid_argument("set is not preserved by g");

    // non-trivial ⟨g⟩-orbits inside the set
    const auto set_orbits = orbits(F, G, invariant_set);

    WeightedPointSet W;
    W.n.assign(Pi.point_count(), 0);
    W.weight.assign(Pi.point_count(), 0);
    for (const auto& orb : set_orbits) {
        if (orb.length() <= 1) continue;
        std::set<uint32_t> touched;
        for (const auto& P : orb.points) {
            const uint32_t pidx = index.of(P);
            if (pidx < Pi.orbit_of_point.size() && Pi.orbit_of_point[pidx] >= 0)
                touched.insert(static_cast<uint32_t>(Pi.orbit_of_point[pidx]));
        }
        for (uint32_t id : touched) ++W.n[id];
    }

    for (uint32_t id = 0; id < Pi.point_count(); ++id) {
        if (W.n[id] == 0) continue;
        if (W.n[id] > 2) throw std::logic_error("n_P exceeds 2");
        W.support_ids.push_back(id);
        W.weight[id] = W.n[id] == 1 ? 2 : 1;
        W.total_weight += W.weight[id];
    }
    W.expected_total = 2 * static_cast<int>(F.q()) + 2;
    W.sum_ok = W.total_weight == W.expected_total;

    W.line_weight.assign(Pi.line_count(), 0);
    W.blocking_ok = true;
    for (uint32_t l = 0; l < Pi.line_count(); ++l) {
        int w = 0;
        for (uint32_t id : W.support_ids)
            if (Pi.incident(id, l)) w += W.weight[id];
        W.line_weight[l] = w;
        if (w < 2 && W.blocking_ok) {
            W.blocking_ok = false;
            W.witness_line = l;
        }
    }
    return W;
}

} // namespace unitals
