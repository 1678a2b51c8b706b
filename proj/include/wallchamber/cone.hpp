#pragma once

#include "wallchamber/arith.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wallchamber {

/// Rational polyhedral cone in R^n, carried in both descriptions at once:
///
///   generators:  cone(rays) + span(lineality)
///   constraints: { x : v.x >= 0 for v in ineqs, e.x = 0 for e in eqs }
///
/// Every vector is primitive integral. The presentation is canonical: lineality
/// and eqs are primitive rows of a reduced echelon basis, rays are taken
/// orthogonal to the lineality space, ineqs orthogonal to span(eqs), and each
/// list is lexicographically sorted. Two equal cones therefore print the same,
/// but equality is still decided by mutual containment (cones_equal).
class Cone {
  public:
    static Cone from_generators(std::size_t n, const std::vector<RatVec>& rays, const std::vector<RatVec>& lineality);
    static Cone from_generators(std::size_t n, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality);
    static Cone from_constraints(std::size_t n, const std::vector<RatVec>& ineqs, const std::vector<RatVec>& eqs);
    static Cone from_constraints(std::size_t n, const std::vector<IntVec>& ineqs, const std::vector<IntVec>& eqs);

    static Cone zero(std::size_t n);
    static Cone whole(std::size_t n);

    std::size_t ambient_dim() const { return n_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& lineality() const { return lineality_; }
    const std::vector<IntVec>& ineqs() const { return ineqs_; }
    const std::vector<IntVec>& eqs() const { return eqs_; }

    std::size_t dim() const { return n_ - eqs_.size(); }
    std::size_t lineality_dim() const { return lineality_.size(); }
    bool strongly_convex() const { return lineality_.empty(); }
    bool is_zero() const { return rays_.empty() && lineality_.empty(); }

    bool contains(std::span<const Rational> p) const;
    bool contains(std::span<const Integer> p) const;
    bool contains(const Cone& other) const;

    /// Every generator satisfies every constraint; throws InternalError otherwise.
    void verify() const;

  private:
    Cone(std::size_t n, std::vector<IntVec> rays, std::vector<IntVec> lineality, std::vector<IntVec> ineqs,
         std::vector<IntVec> eqs);

    friend Cone dual_cone(const Cone& c);

    std::size_t n_ = 0;
    std::vector<IntVec> rays_;
    std::vector<IntVec> lineality_;
    std::vector<IntVec> ineqs_;
    std::vector<IntVec> eqs_;
};

struct DimensionInfo {
    std::size_t dim;
    std::size_t lineality_dim;
    bool strongly_convex;
};

DimensionInfo dimension_info(const Cone& c);

/// { u : u.v >= 0 for every v in c }.
Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
/// Smallest polyhedral cone containing every member. Throws on an empty list.
Cone conic_hull(std::span<const Cone> cones);
bool contains_cone(const Cone& a, const Cone& b);
bool cones_equal(const Cone& a, const Cone& b);

/// Sum of the rays: a point of the relative interior (the origin for a
/// linear subspace).
RatVec relative_interior_point(const Cone& c);

enum class HitKind { empty, point, subsegment, full };

const char* to_string(HitKind kind);

/// Intersection of the segment (1-t)p + tq, t in [0,1], with a cone.
/// t_lo/t_hi are meaningful for point and subsegment hits only.
struct SegmentHit {
    HitKind kind = HitKind::empty;
    Rational t_lo;
    Rational t_hi;

    bool operator==(const SegmentHit&) const = default;
};

SegmentHit segment_intersection(const Cone& c, std::span<const Rational> p, std::span<const Rational> q);

} // namespace wallchamber
