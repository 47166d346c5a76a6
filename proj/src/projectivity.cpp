#include "unitals/projectivity.hpp"

#include <algorithm>

namespace unitals {

namespace {
std::array<uint32_t, 9> normalize_matrix(const FieldTower& F, std::array<uint32_t, 9> m) {
    int pivot = -1;
    for (int i = 0; i < 9; ++i)
        if (m[i] != 0) { pivot = i; break; }
    if (pivot < 0) throw std::invalid_argument("zero matrix");
    const uint32_t s = F.inv(m[pivot]);
    for (auto& x : m) x = F.mul(x, s);
    return m;
}

std::array<uint32_t, 9> matmul(const FieldTower& F, const std::array<uint32_t, 9>& a,
                               const std::array<uint32_t, 9>& b) {
    std::array<uint32_t, 9> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < 3; ++k)
                acc = F.add(acc, F.mul(a[3 * i + k], b[3 * k + j]));
            c[3 * i + j] = acc;
        }
    return c;
}
}  // namespace

Projectivity make_projectivity(const FieldTower& F, const std::array<uint32_t, 9>& m) {
    for (auto x : m) F.check(x);
    if (determinant(F, m) == 0) throw std::invalid_argument("singular matrix");
    return Projectivity{normalize_matrix(F, m)};
}

Projectivity identity_projectivity() {
    return Projectivity{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
}

Projectivity diagonal_projectivity(const FieldTower& F, uint32_t a, uint32_t b, uint32_t c) {
    if (a == 0 || b == 0 || c == 0)
        throw std::invalid_argument("diagonal projectivity needs nonzero entries");
    return make_projectivity(F, {a, 0, 0, 0, b, 0, 0, 0, c});
}

std::optional<std::pair<uint32_t, uint32_t>> diagonal_entries(const FieldTower& F,
                                                              const Projectivity& g) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && g.at(i, j) != 0) return std::nullopt;
    if (g.at(0, 0) == 0 || g.at(1, 1) == 0 || g.at(2, 2) == 0) return std::nullopt;
    return std::make_pair(F.div(g.at(0, 0), g.at(2, 2)), F.div(g.at(1, 1), g.at(2, 2)));
}

uint32_t determinant(const FieldTower& F, const std::array<uint32_t, 9>& m) {
    const auto mm = [&](int i, int j) { return m[3 * i + j]; };
    uint32_t det = 0;
    det = F.add(det, F.mul(mm(0, 0), F.sub(F.mul(mm(1, 1), mm(2, 2)), F.mul(mm(1, 2), mm(2, 1)))));
    det = F.sub(det, F.mul(mm(0, 1), F.sub(F.mul(mm(1, 0), mm(2, 2)), F.mul(mm(1, 2), mm(2, 0)))));
    det = F.add(det, F.mul(mm(0, 2), F.sub(F.mul(mm(1, 0), mm(2, 1)), F.mul(mm(1, 1), mm(2, 0)))));
    return det;
}

std::array<uint32_t, 9> adjugate(const FieldTower& F, const std::array<uint32_t, 9>& m) {
    const auto mm = [&](int i, int j) { return m[3 * i + j]; };
    const auto cof = [&](int i, int j) {
        const int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        const int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return F.sub(F.mul(mm(r0, c0), mm(r1, c1)), F.mul(mm(r0, c1), mm(r1, c0)));
    };
    std::array<uint32_t, 9> adj{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            adj[3 * i + j] = cof(j, i);
    return adj;
}

Projectivity compose(const FieldTower& F, const Projectivity& g, const Projectivity& h) {
    return Projectivity{normalize_matrix(F, matmul(F, g.m, h.m))};
}

Projectivity inverse(const FieldTower& F, const Projectivity& g) {
    return Projectivity{normalize_matrix(F, adjugate(F, g.m))};
}

ProjPoint apply(const FieldTower& F, const Projectivity& g, const ProjPoint& P) {
    std::array<uint32_t, 3> v{};
    for (int i = 0; i < 3; ++i) {
        uint32_t acc = 0;
        for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(g.at(i, j), P.c[j]));
        v[i] = acc;
    }
    return ProjPoint{normalize_triple(F, v)};
}

ProjLine apply(const FieldTower& F, const Projectivity& g, const ProjLine& L) {
    // coefficients transform by g^{-T}; the adjugate differs by a scalar only
    const auto adj = adjugate(F, g.m);
    std::array<uint32_t, 3> v{};
    for (int j = 0; j < 3; ++j) {
        uint32_t acc = 0;
        for (int i = 0; i < 3; ++i) acc = F.add(acc, F.mul(L.c[i], adj[3 * i + j]));
        v[j] = acc;
    }
    return ProjLine{normalize_triple(F, v)};
}

Projectivity projectivity_from_frames(const FieldTower& F,
                                      const std::array<ProjPoint, 4>& src,
                                      const std::array<ProjPoint, 4>& dst) {
    // Matrix sending the standard frame e1, e2, e3, (1,1,1) to (P1..P4):
    // columns P1, P2, P3, scaled so their sum is P4.
    const auto basis_to = [&](const std::array<ProjPoint, 4>& f) {
        std::array<uint32_t, 9> a{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[3 * i + j] = f[j].c[i];
        const uint32_t det = determinant(F, a);
        if (det == 0) throw std::invalid_argument("frame points collinear");
        const auto adj = adjugate(F, a);
        std::array<uint32_t, 3> w{};
        for (int i = 0; i < 3; ++i) {
            uint32_t acc = 0;
            for (int j = 0; j < 3; ++j) acc = F.add(acc, F.mul(adj[3 * i + j], f[3].c[j]));
            w[i] = F.div(acc, det);
        }
        if (w[0] == 0 || w[1] == 0 || w[2] == 0)
            throw std::invalid_argument("frame unit point on a side of the triangle");
        std::array<uint32_t, 9> scaled{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) scaled[3 * i + j] = F.mul(a[3 * i + j], w[j]);
        return scaled;
    };
    const auto ms = basis_to(src);
    const auto md = basis_to(dst);
    return Projectivity{normalize_matrix(F, matmul(F, md, adjugate(F, ms)))};
}

CyclicSubgroup cyclic_group(const FieldTower& F, const Projectivity& g, uint64_t max_order) {
    CyclicSubgroup G;
    G.generator = g;
    Projectivity cur = identity_projectivity();
    do {
        G.elements.push_back(cur);
        if (G.elements.size() > max_order)
            throw std::invalid_argument("group order exceeds bound");
        cur = compose(F, g, cur);
    } while (cur != identity_projectivity());
    G.order = G.elements.size();
    return G;
}

CyclicSubgroup diagonal_generator(const FieldTower& F, uint32_t lambda, uint32_t mu) {
    if (lambda == 0 || mu == 0) throw std::invalid_argument("zero diagonal entry");
    return cyclic_group(F, diagonal_projectivity(F, lambda, mu, 1));
}

std::vector<Orbit> orbits(const FieldTower& F, const CyclicSubgroup& G,
                          const std::vector<ProjPoint>& domain) {
    PointIndex index(F);
    std::vector<int32_t> pos(index.size(), -1);
    for (size_t i = 0; i < domain.size(); ++i) pos[index.of(domain[i])] = static_cast<int32_t>(i);

    std::vector<uint8_t> seen(domain.size(), 0);
    std::vector<Orbit> res;
    for (size_t i = 0; i < domain.size(); ++i) {
        if (seen[i]) continue;
        Orbit orb;
        ProjPoint cur = domain[i];
        do {
            const int32_t at = pos[index.of(cur)];
            if (at < 0) throw std::invalid_argument("domain not closed under the group");
            if (seen[at]) break;  // reached via a shorter cycle
            seen[at] = 1;
            orb.points.push_back(cur);
            cur = apply(F, G.generator, cur);
        } while (cur != domain[i]);
        std::sort(orb.points.begin(), orb.points.end());
        res.push_back(std::move(orb));
    }
    std::sort(res.begin(), res.end(),
              [](const Orbit& a, const Orbit& b) { return a.points.front() < b.points.front(); });
    for (size_t i = 0; i < res.size(); ++i) res[i].id = static_cast<uint32_t>(i);
    return res;
}

} // namespace unitals
