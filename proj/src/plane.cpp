#include "unitals/plane.hpp"

#include <charconv>

namespace unitals {

std::array<uint32_t, 3> normalize_triple(const FieldTower& F, std::array<uint32_t, 3> v) {
    for (auto x : v) F.check(x);
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
        if (v[i] != 0) { pivot = i; break; }
    if (pivot < 0) throw std::invalid_argument("zero triple has no projective class");
    const uint32_t s = F.inv(v[pivot]);
    for (auto& x : v) x = F.mul(x, s);
    return v;
}

ProjPoint make_point(const FieldTower& F, uint32_t x, uint32_t y, uint32_t z) {
    return ProjPoint{normalize_triple(F, {x, y, z})};
}

ProjLine make_line(const FieldTower& F, uint32_t a, uint32_t b, uint32_t c) {
    return ProjLine{normalize_triple(F, {a, b, c})};
}

bool incident(const FieldTower& F, const ProjPoint& P, const ProjLine& L) {
    uint32_t acc = 0;
    for (int i = 0; i < 3; ++i) acc = F.add(acc, F.mul(L.c[i], P.c[i]));
    return acc == 0;
}

namespace {
std::array<uint32_t, 3> cross(const FieldTower& F, const std::array<uint32_t, 3>& a,
                              const std::array<uint32_t, 3>& b) {
    return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
            F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
            F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

// Two independent solutions of c · v = 0, spanning the incidence set.
std::pair<std::array<uint32_t, 3>, std::array<uint32_t, 3>>
null_basis(const FieldTower& F, const std::array<uint32_t, 3>& c) {
    if (c[0] != 0) {
        return {{F.neg(F.div(c[1], c[0])), 1, 0}, {F.neg(F.div(c[2], c[0])), 0, 1}};
    }
    if (c[1] != 0) {
        return {{1, 0, 0}, {0, F.neg(F.div(c[2], c[1])), 1}};
    }
    return {{1, 0, 0}, {0, 1, 0}};
}
}  // namespace

ProjLine line_through(const FieldTower& F, const ProjPoint& P, const ProjPoint& Q) {
    if (P == Q) throw std::invalid_argument("line_through requires distinct points");
    const auto v = cross(F, P.c, Q.c);
    return ProjLine{normalize_triple(F, v)};
}

ProjPoint meet(const FieldTower& F, const ProjLine& L, const ProjLine& M) {
    if (L == M) throw std::invalid_argument("meet requires distinct lines");
    const auto v = cross(F, L.c, M.c);
    return ProjPoint{normalize_triple(F, v)};
}

std::vector<ProjPoint> all_points(const FieldTower& F) {
    const uint32_t s = F.q2();
    std::vector<ProjPoint> pts;
    pts.reserve(1 + s + static_cast<size_t>(s) * s);
    pts.push_back(ProjPoint{{0, 0, 1}});
    for (uint32_t z = 0; z < s; ++z) pts.push_back(ProjPoint{{0, 1, z}});
    for (uint32_t y = 0; y < s; ++y)
        for (uint32_t z = 0; z < s; ++z) pts.push_back(ProjPoint{{1, y, z}});
    return pts;
}

std::vector<ProjPoint> affine_points(const FieldTower& F) {
    const uint32_t s = F.q2();
    std::vector<ProjPoint> pts;
    pts.reserve(static_cast<size_t>(s) * s);
    pts.push_back(ProjPoint{{0, 0, 1}});
    for (uint32_t z = 1; z < s; ++z) pts.push_back(ProjPoint{{0, 1, z}});
    for (uint32_t y = 0; y < s; ++y)
        for (uint32_t z = 1; z < s; ++z) pts.push_back(ProjPoint{{1, y, z}});
    return pts;
}

std::vector<ProjPoint> points_on_line(const FieldTower& F, const ProjLine& L) {
    const auto [a, b] = null_basis(F, L.c);
    std::vector<ProjPoint> pts;
    pts.reserve(F.q2() + 1);
    pts.push_back(ProjPoint{normalize_triple(F, a)});
    for (uint32_t t = 0; t < F.q2(); ++t) {
        std::array<uint32_t, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = F.add(F.mul(t, a[i]), b[i]);
        pts.push_back(ProjPoint{normalize_triple(F, v)});
    }
    return pts;
}

std::vector<ProjLine> lines_through(const FieldTower& F, const ProjPoint& P) {
    const auto [a, b] = null_basis(F, P.c);
    std::vector<ProjLine> ls;
    ls.reserve(F.q2() + 1);
    ls.push_back(ProjLine{normalize_triple(F, a)});
    for (uint32_t t = 0; t < F.q2(); ++t) {
        std::array<uint32_t, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = F.add(F.mul(t, a[i]), b[i]);
        ls.push_back(ProjLine{normalize_triple(F, v)});
    }
    return ls;
}

uint32_t PointIndex::of_triple(const std::array<uint32_t, 3>& c) const {
    const uint32_t s = F_->q2();
    if (c[0] == 0) {
        if (c[1] == 0) return 0;  // (0,0,1)
        return 1 + c[2];          // (0,1,z)
    }
    return 1 + s + c[1] * s + c[2];  // (1,y,z)
}

ProjPoint PointIndex::at(uint32_t idx) const {
    const uint32_t s = F_->q2();
    if (idx == 0) return ProjPoint{{0, 0, 1}};
    if (idx < 1 + s) return ProjPoint{{0, 1, idx - 1}};
    const uint32_t rest = idx - 1 - s;
    return ProjPoint{{1, rest / s, rest % s}};
}

std::string to_string(const ProjPoint& P) {
    return std::to_string(P.c[0]) + ":" + std::to_string(P.c[1]) + ":" + std::to_string(P.c[2]);
}

ProjPoint point_from_string(const FieldTower& F, const std::string& s) {
    std::array<uint32_t, 3> v{};
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        size_t end = i < 2 ? s.find(':', pos) : s.size();
        if (end == std::string::npos) throw std::invalid_argument("malformed point: " + s);
        const char* first = s.data() + pos;
        const char* last = s.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, v[i]);
        if (ec != std::errc() || ptr != last) throw std::invalid_argument("malformed point: " + s);
        pos = end + 1;
    }
    ProjPoint p{v};
    if (ProjPoint{normalize_triple(F, v)} != p)
        throw std::invalid_argument("point not in canonical form: " + s);
    return p;
}

} // namespace unitals
