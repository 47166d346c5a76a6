#include "unitals/unital.hpp"

#include <algorithm>

namespace unitals {

bool is_conjugate_symmetric(const FieldTower& F, const std::array<uint32_t, 9>& gram) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (gram[3 * j + i] != F.frobenius(gram[3 * i + j])) return false;
    return true;
}

HermitianForm curve_form(const FieldTower& F, uint32_t b) {
    if (b == 0) throw std::invalid_argument("curve parameter b must be nonzero");
    F.check(b);
    HermitianForm H;
    H.gram = {F.neg(1), 0, 0, 0, 0, b, 0, F.frobenius(b), 0};
    return H;
}

HermitianForm cone_form(const FieldTower& F, uint32_t c) {
    if (c == 0) throw std::invalid_argument("cone parameter c must be nonzero");
    F.check(c);
    HermitianForm H;
    H.gram = {0, 0, 0, 0, 0, c, 0, F.frobenius(c), 0};
    return H;
}

uint32_t evaluate(const FieldTower& F, const HermitianForm& H, const ProjPoint& P) {
    uint32_t acc = 0;
    for (int i = 0; i < 3; ++i) {
        uint32_t row = 0;
        for (int j = 0; j < 3; ++j) row = F.add(row, F.mul(H.at(i, j), P.c[j]));
        acc = F.add(acc, F.mul(F.frobenius(P.c[i]), row));
    }
    return acc;
}

int rank(const FieldTower& F, const HermitianForm& H) {
    if (determinant(F, H.gram) != 0) return 3;
    const auto adj = adjugate(F, H.gram);
    for (auto x : adj)
        if (x != 0) return 2;
    for (auto x : H.gram)
        if (x != 0) return 1;
    return 0;
}

std::vector<ProjPoint> absolute_points(const FieldTower& F, const HermitianForm& H) {
    std::vector<ProjPoint> pts;
    for (const auto& P : all_points(F))
        if (evaluate(F, H, P) == 0) pts.push_back(P);
    return pts;
}

HermitianForm transformed(const FieldTower& F, const HermitianForm& H, const Projectivity& g) {
    // G' = Frob(M^{-1})^T G M^{-1}; the adjugate stands in for the inverse,
    // its scalar slack multiplies G' by a norm, which stays in GF(q).
    const auto minv = adjugate(F, g.m);
    std::array<uint32_t, 9> tmp{};  // G * Minv
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < 3; ++k)
                acc = F.add(acc, F.mul(H.at(i, k), minv[3 * k + j]));
            tmp[3 * i + j] = acc;
        }
    HermitianForm out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint32_t acc = 0;
            for (int k = 0; k < 3; ++k)
                acc = F.add(acc, F.mul(F.frobenius(minv[3 * k + i]), tmp[3 * k + j]));
            out.gram[3 * i + j] = acc;
        }
    if (!is_conjugate_symmetric(F, out.gram))
        throw std::logic_error("transformed form lost conjugate symmetry");
    return out;
}

ProjLine polar_line(const FieldTower& F, const HermitianForm& H, const ProjPoint& P) {
    std::array<uint32_t, 3> v{};
    for (int j = 0; j < 3; ++j) {
        uint32_t acc = 0;
        for (int i = 0; i < 3; ++i)
            acc = F.add(acc, F.mul(F.frobenius(P.c[i]), H.at(i, j)));
        v[j] = acc;
    }
    if (v[0] == 0 && v[1] == 0 && v[2] == 0)
        throw std::invalid_argument("point is in the radical: polar undefined");
    return ProjLine{normalize_triple(F, v)};
}

Unital::Unital(const FieldTower& F, std::vector<ProjPoint> pts, std::string kind)
    : F_(&F), points_(std::move(pts)), kind_(std::move(kind)), index_(F) {
    for (const auto& P : points_) {
        for (auto x : P.c) F.check(x);
        if (ProjPoint{normalize_triple(F, P.c)} != P)
            throw std::invalid_argument("unital point not in canonical form");
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    member_.assign(index_.size(), 0);
    for (const auto& P : points_) member_[index_.of(P)] = 1;
    secants_ = std::make_unique<std::atomic<int32_t>[]>(index_.size());
    for (uint32_t i = 0; i < index_.size(); ++i)
        secants_[i].store(-1, std::memory_order_relaxed);
}

int Unital::secants_on_line(const ProjLine& L) const {
    const uint32_t li = index_.of(L);
    int32_t cached = secants_[li].load(std::memory_order_relaxed);
    if (cached >= 0) return cached;
    int32_t n = 0;
    for (const auto& P : points_on_line(*F_, L))
        n += member_[index_.of(P)];
    secants_[li].store(n, std::memory_order_relaxed);
    return n;
}

UnitalCheck Unital::verify() const {
    UnitalCheck chk;
    chk.size_found = points_.size();
    chk.size_expected = static_cast<size_t>(F_->q()) * F_->q() * F_->q() + 1;
    if (chk.size_found != chk.size_expected) {
        chk.reason = "wrong cardinality";
        return chk;
    }
    const int long_secant = static_cast<int>(F_->q()) + 1;
    // every line: running over all normalized coefficient triples
    PointIndex idx(*F_);
    for (uint32_t li = 0; li < idx.size(); ++li) {
        const ProjLine L{idx.at(li).c};
        const int n = secants_on_line(L);
        if (n != 1 && n != long_secant) {
            chk.witness_line = L;
            chk.witness_count = n;
            chk.reason = "secant spectrum violation";
            return chk;
        }
    }
    chk.ok = true;
    return chk;
}

ProjLine Unital::tangent_at(const ProjPoint& P) const {
    if (!contains(P)) throw std::invalid_argument("tangent_at: point not on the unital");
    std::optional<ProjLine> tangent;
    int found = 0;
    for (const auto& L : lines_through(*F_, P)) {
        if (secants_on_line(L) == 1) {
            ++found;
            tangent = L;
        }
    }
    if (found != 1)
        throw std::logic_error("point has " + std::to_string(found) +
                               " 1-secants; set is not a unital");
    return *tangent;
}

UnitalCheck is_unital(const FieldTower& F, const std::vector<ProjPoint>& pts) {
    if (pts.empty()) throw std::invalid_argument("is_unital: empty set");
    return Unital(F, pts).verify();
}

Unital hermitian_curve(const FieldTower& F, uint32_t b) {
    const auto H = curve_form(F, b);
    Unital U(F, absolute_points(F, H), "hermitian b=" + std::to_string(b));
    const size_t expect = static_cast<size_t>(F.q()) * F.q() * F.q() + 1;
    if (U.size() != expect) throw std::logic_error("hermitian curve has wrong cardinality");
    return U;
}

HermitianCone hermitian_cone(const FieldTower& F, uint32_t c) {
    HermitianCone cone;
    cone.c = c;
    cone.form = cone_form(F, c);
    cone.center = x_infinity();
    cone.points = absolute_points(F, cone.form);
    cone.lines.push_back(line_infinity());
    // affine components X2 = t X3 with c^q t^q + c t = 0 (t = 0 gives X2 = 0)
    for (uint32_t t = 0; t < F.q2(); ++t) {
        const uint32_t lhs = F.add(F.mul(F.frobenius(c), F.frobenius(t)), F.mul(c, t));
        if (lhs == 0) cone.lines.push_back(make_line(F, 0, 1, F.neg(t)));
    }
    if (cone.lines.size() != F.q() + 1)
        throw std::logic_error("cone decomposition has wrong line count");
    if (evaluate(F, cone.form, cone.center) != 0)
        throw std::logic_error("cone radical not absolute");
    return cone;
}

std::vector<ProjPoint> buekenhout_metz_points(const FieldTower& F, uint32_t alpha,
                                              uint32_t beta) {
    F.check(alpha);
    F.check(beta);
    std::vector<ProjPoint> pts;
    pts.reserve(static_cast<size_t>(F.q2()) * F.q() + 1);
    pts.push_back(y_infinity());
    for (uint32_t x = 0; x < F.q2(); ++x) {
        const uint32_t base = F.add(F.mul(alpha, F.mul(x, x)), F.mul(beta, F.norm(x)));
        for (uint32_t rr : F.subfield_elements())
            pts.push_back(make_point(F, x, F.add(base, rr), 1));
    }
    return pts;
}

Unital buekenhout_metz(const FieldTower& F, uint32_t alpha, uint32_t beta) {
    if (F.p() == 2) throw std::invalid_argument("buekenhout_metz requires odd q");
    const uint32_t d = F.sub(F.frobenius(beta), beta);
    const uint32_t disc = F.add(F.mul(d, d), F.mul(F.scalar(4), F.norm(alpha)));
    if (!F.in_subfield(disc)) throw std::logic_error("discriminant not in GF(q)");
    // non-square test in GF(q) by the Euler criterion
    const bool nonsquare = disc != 0 && F.pow(disc, (F.q() - 1) / 2) == F.neg(1);
    if (!nonsquare)
        throw BmRejection("discriminant (beta^q-beta)^2 + 4 alpha^{q+1} is a square in GF(q)");
    return Unital(F, buekenhout_metz_points(F, alpha, beta),
                  "bm alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta));
}

namespace {
// GF(q)-basis of the space of conjugate-symmetric forms: three diagonal
// units and, per off-diagonal pair, the two forms  E_ij + E_ji  and
// w E_ij + w^q E_ji  with w the tower generator (so {1, w} spans GF(q²)
// over GF(q)).
std::array<HermitianForm, 9> hermitian_basis(const FieldTower& F) {
    const uint32_t w = F.generator();
    std::array<HermitianForm, 9> B{};
    auto set = [](HermitianForm& H, int i, int j, uint32_t v) { H.gram[3 * i + j] = v; };
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        set(B[k], i, i, 1);
        ++k;
    }
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        set(B[k], i, j, 1);
        set(B[k], j, i, 1);
        ++k;
        set(B[k], i, j, w);
        set(B[k], j, i, F.frobenius(w));
        ++k;
    }
    return B;
}
}  // namespace

std::optional<HermitianForm> classicality_check(const Unital& U) {
    const FieldTower& F = U.tower();
    const auto B = hermitian_basis(F);

    // one GF(q)-linear condition per point
    std::vector<std::array<uint32_t, 9>> rows;
    rows.reserve(U.size());
    for (const auto& P : U.points()) {
        std::array<uint32_t, 9> row{};
        bool nonzero = false;
        for (int k = 0; k < 9; ++k) {
            row[k] = evaluate(F, B[k], P);
            if (!F.in_subfield(row[k])) throw std::logic_error("condition value outside GF(q)");
            nonzero = nonzero || row[k] != 0;
        }
        if (nonzero) rows.push_back(row);
    }

    // Gaussian elimination over GF(q)
    std::vector<int> pivot_col;
    size_t rank_rows = 0;
    for (int col = 0; col < 9 && rank_rows < rows.size(); ++col) {
        size_t sel = rank_rows;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank_rows], rows[sel]);
        const uint32_t s = F.inv(rows[rank_rows][col]);
        for (int j = 0; j < 9; ++j) rows[rank_rows][j] = F.mul(rows[rank_rows][j], s);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank_rows || rows[i][col] == 0) continue;
            const uint32_t f = rows[i][col];
            for (int j = 0; j < 9; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank_rows][j]));
        }
        pivot_col.push_back(col);
        ++rank_rows;
    }

    std::vector<int> free_cols;
    for (int col = 0; col < 9; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
            free_cols.push_back(col);
    const size_t d = free_cols.size();
    if (d == 0) return std::nullopt;
    if (d > 3) throw std::logic_error("classicality kernel unexpectedly large");

    // kernel basis: one vector per free column
    std::vector<std::array<uint32_t, 9>> kernel;
    for (int fc : free_cols) {
        std::array<uint32_t, 9> v{};
        v[fc] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = F.neg(rows[i][fc]);
        kernel.push_back(v);
    }

    // projective representatives of the kernel: first nonzero coefficient 1
    const auto& S = F.subfield_elements();
    std::vector<uint32_t> coef(d, 0);
    const auto next = [&]() {
        for (size_t i = d; i-- > 0;) {
            size_t at = static_cast<size_t>(
                std::find(S.begin(), S.end(), coef[i]) - S.begin());
            if (at + 1 < S.size()) {
                coef[i] = S[at + 1];
                for (size_t j = i + 1; j < d; ++j) coef[j] = 0;
                return true;
            }
        }
        return false;
    };

    const auto plane_pts = all_points(F);
    while (next()) {
        size_t lead = 0;
        while (lead < d && coef[lead] == 0) ++lead;
        if (lead == d || coef[lead] != 1) continue;
        // coefficients over the 9 basis forms, then expansion into a Gram matrix
        std::array<uint32_t, 9> w{};
        for (int k = 0; k < 9; ++k)
            for (size_t j = 0; j < d; ++j) w[k] = F.add(w[k], F.mul(coef[j], kernel[j][k]));
        HermitianForm gram{};
        for (int k = 0; k < 9; ++k) {
            if (w[k] == 0) continue;
            for (int e = 0; e < 9; ++e)
                gram.gram[e] = F.add(gram.gram[e], F.mul(w[k], B[k].gram[e]));
        }
        if (!is_conjugate_symmetric(F, gram.gram)) throw std::logic_error("kernel form not Hermitian");
        if (rank(F, gram) != 3) continue;
        bool match = true;
        for (const auto& P : plane_pts) {
            const bool absolute = evaluate(F, gram, P) == 0;
            if (absolute != U.contains(P)) {
                match = false;
                break;
            }
        }
        if (match) return gram;
    }
    return std::nullopt;
}

std::pair<size_t, bool> curve_intersection_congruence(const Unital& U, const HermitianForm& H) {
    const FieldTower& F = U.tower();
    size_t n = 0;
    for (const auto& P : U.points())
        if (evaluate(F, H, P) == 0) ++n;
    return {n, n % F.p() == 1};
}

} // namespace unitals
