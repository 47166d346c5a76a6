#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitals/plane.hpp"
#include "unitals/projectivity.hpp"

namespace unitals {

/// Conjugate-symmetric 3x3 Gram matrix over GF(q²): entry (j,i) is the
/// Frobenius image of entry (i,j).  Rank 3 describes a non-degenerate
/// Hermitian curve (q³+1 absolute points), rank 2 a Hermitian cone (a pencil
/// of q+1 lines through its radical).  A point x is absolute when
/// x^{(q)T} G x = 0.
struct HermitianForm {
    std::array<uint32_t, 9> gram{};
    auto operator<=>(const HermitianForm&) const = default;
    uint32_t at(int row, int col) const { return gram[3 * row + col]; }
};

bool is_conjugate_symmetric(const FieldTower& F, const std::array<uint32_t, 9>& gram);

/// Gram matrix of the curve -X1^{q+1} + b X3 X2^q + b^q X3^q X2 = 0.
/// Throws std::invalid_argument on b == 0.
HermitianForm curve_form(const FieldTower& F, uint32_t b);

/// Gram matrix of the cone c^q X2^q X3 + c X2 X3^q = 0 (radical (1,0,0)).
HermitianForm cone_form(const FieldTower& F, uint32_t c);

uint32_t evaluate(const FieldTower& F, const HermitianForm& H, const ProjPoint& P);
int rank(const FieldTower& F, const HermitianForm& H);
std::vector<ProjPoint> absolute_points(const FieldTower& F, const HermitianForm& H);

/// Pushforward: the form whose absolute set is the g-image of H's.
HermitianForm transformed(const FieldTower& F, const HermitianForm& H, const Projectivity& g);

/// The polar line of P: tangent when P is absolute and the form is smooth
/// there.  Throws std::invalid_argument if the polar vanishes identically.
ProjLine polar_line(const FieldTower& F, const HermitianForm& H, const ProjPoint& P);

/// Outcome of a full secant census over a candidate point set.
struct UnitalCheck {
    bool ok = false;
    size_t size_found = 0;
    size_t size_expected = 0;
    std::optional<ProjLine> witness_line;  // a line meeting in neither 1 nor q+1
    int witness_count = 0;
    std::string reason;
};

/// A set of q³+1 points meeting every line in 1 or q+1 points.  Instances
/// are move-only (the secant index is shared-state-free but atomic).  The
/// constructor sorts and indexes; it does not verify — call verify() or use
/// is_unital for the census.
class Unital {
public:
    Unital(const FieldTower& F, std::vector<ProjPoint> pts, std::string kind = "custom");

    Unital(Unital&&) noexcept = default;
    Unital& operator=(Unital&&) noexcept = default;
    Unital(const Unital&) = delete;
    Unital& operator=(const Unital&) = delete;
    Unital clone() const { return Unital(*F_, points_, kind_); }

    const FieldTower& tower() const { return *F_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    size_t size() const { return points_.size(); }
    const std::string& kind() const { return kind_; }
    bool contains(const ProjPoint& P) const { return member_[index_.of(P)]; }

    /// Full secant census; fills the secant index as a side effect.
    UnitalCheck verify() const;

    /// |L ∩ U|, cached per line (idempotent concurrent fill).
    int secants_on_line(const ProjLine& L) const;

    /// The unique 1-secant at P.  Throws std::invalid_argument if P ∉ U and
    /// std::logic_error if the count of 1-secants through P is not 1.
    ProjLine tangent_at(const ProjPoint& P) const;

private:
    const FieldTower* F_;
    std::vector<ProjPoint> points_;
    std::string kind_;
    PointIndex index_;
    std::vector<uint8_t> member_;
    mutable std::unique_ptr<std::atomic<int32_t>[]> secants_;  // -1 = unknown
};

/// Secant census over an arbitrary point set (codes validated against F).
/// Throws std::invalid_argument on invalid coordinates.
UnitalCheck is_unital(const FieldTower& F, const std::vector<ProjPoint>& pts);

/// The absolute points of curve_form(F, b); contains (0,0,1) and (0,1,0).
Unital hermitian_curve(const FieldTower& F, uint32_t b);

/// A Hermitian cone: point set plus its decomposition into q+1 lines
/// through the radical (1,0,0); includes X2 = 0 and X3 = 0.
struct HermitianCone {
    uint32_t c = 0;
    HermitianForm form;
    ProjPoint center;
    std::vector<ProjPoint> points;
    std::vector<ProjLine> lines;
};
HermitianCone hermitian_cone(const FieldTower& F, uint32_t c);

/// Raised when Buekenhout-Metz parameters fail the discriminant condition
/// (the point set is then not a unital).
class BmRejection : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The unchecked point set {(x, a x² + b x^{q+1} + r, 1)} ∪ {(0,1,0)}.
std::vector<ProjPoint> buekenhout_metz_points(const FieldTower& F, uint32_t alpha,
                                              uint32_t beta);

/// Buekenhout-Metz unital for odd q.  Classical iff alpha == 0.  Throws
/// std::invalid_argument for even q, BmRejection when
/// (beta^q - beta)² + 4 alpha^{q+1} is a square in GF(q).
Unital buekenhout_metz(const FieldTower& F, uint32_t alpha, uint32_t beta);

/// Decides classicality by exact linear algebra: Hermitian forms make a
/// 9-dimensional GF(q)-space and each point of U imposes one GF(q)-linear
/// condition; any rank-3 kernel form whose absolute set equals U exactly is
/// returned.  Independent of the stabiliser machinery.
std::optional<HermitianForm> classicality_check(const Unital& U);

/// N = |U ∩ absolute set| and whether N ≡ 1 (mod p).
std::pair<size_t, bool> curve_intersection_congruence(const Unital& U, const HermitianForm& H);

} // namespace unitals
