#pragma once

#include "film/norms.hpp"
#include "film/types.hpp"

#include <functional>
#include <memory>
#include <optional>

namespace film {

/// Parameterized boundary piece with unit outward (Euclidean) normal.
struct Curve2 {
    std::function<Vec2(double)> point;
    std::function<Vec2(double)> normal;
    std::function<double(double)> speed;
    double a = 0.0, b = 1.0;
};

Curve2 segment_curve(const Vec2& p0, const Vec2& p1, const Vec2& outward_normal);
Curve2 arc_curve(const Vec2& center, double radius, double theta0, double theta1);

/// Convex planar domain (the plate cross-section omega). Constructed from a
/// rectangle or a convex polygon; provides membership and the Euclidean
/// distance to its boundary.
class Domain2 {
public:
    static Domain2 rectangle(const Vec2& lo, const Vec2& hi);
    static Domain2 convex_polygon(std::vector<Vec2> ccw_vertices);

    bool contains(const Vec2& p) const;
    double boundary_distance(const Vec2& p) const; // >= 0 inside, 0 outside
    const std::vector<Vec2>& vertices() const { return verts_; }
    Box2 bounding_box() const;
    double area() const;

private:
    std::vector<Vec2> verts_; // counterclockwise
};

/// Finite-perimeter planar set assembled as a union of analytic primitives.
/// Supplies exact membership, anisotropic distance predicates and boundary
/// parameterizations with outward normals.
class PlanarSet {
public:
    PlanarSet() = default;

    static PlanarSet empty() { return PlanarSet{}; }
    static PlanarSet disk(const Vec2& center, double radius);
    static PlanarSet half_plane(const Vec2& outward_normal, double offset); // {n.x <= d}
    static PlanarSet convex_polygon(std::vector<Vec2> ccw_vertices);
    static PlanarSet rounded_polygon(std::vector<Vec2> ccw_vertices, double radius);
    /// Anisotropic stadium {dist_N(., segment) <= t}; N is the tube metric
    /// (the dual of the surface norm when building Wulff tubes).
    static PlanarSet segment_tube(const Vec2& p0, const Vec2& p1, double t,
                                  const PlanarNorm& N);
    /// Dilation of a disk by t times the unit ball of N.
    static PlanarSet dilated_disk(const Vec2& center, double radius, double t,
                                  const PlanarNorm& N);

    PlanarSet unite(const PlanarSet& other) const;

    bool is_empty() const { return prims_.empty(); }
    bool contains(const Vec2& p) const;        // closed membership
    bool exterior(const Vec2& p) const { return !contains(p); }

    /// dist_N(p, set): 0 inside, else the exact minimum over primitives.
    double distance(const PlanarNorm& N, const Vec2& p) const;

    /// Conservative box classification: +1 fully inside, -1 fully outside,
    /// 0 undecided.
    int classify_box(const Box2& box) const;

    /// Boundary curves of every primitive. Portions covered by other
    /// primitives of the union must be masked by the caller (see
    /// boundary_integral).
    std::vector<Curve2> primitive_boundaries() const;

    /// Integral over the essential boundary of the union of
    /// g(point, unit outward normal), restricted by the caller's weight
    /// predicate (e.g. open membership of omega). Overlap seams are removed
    /// by open-membership masking against the other primitives.
    double boundary_integral(const std::function<double(const Vec2&, const Vec2&)>& g,
                             const std::function<bool(const Vec2&)>& weight = nullptr) const;

    size_t primitive_count() const { return prims_.size(); }

    struct Primitive;
    const std::vector<std::shared_ptr<const Primitive>>& primitives() const { return prims_; }

private:
    std::vector<std::shared_ptr<const Primitive>> prims_;
};

/// Area of {x in box : S.contains(x)} by quadtree subdivision with exact
/// column slicing at the leaves.
double planar_area(const PlanarSet& S, const Box2& box, double rel_tol = 1e-8);

/// Integral of f over {x in domain-box : inside(x)} where inside may be an
/// arbitrary indicator; transitions are resolved by per-column bisection, f
/// is assumed smooth on each membership component of a column.
double sliced_integral_2d(const std::function<double(const Vec2&)>& f,
                          const std::function<int(const Vec2&)>& column_signature,
                          const std::function<bool(int)>& keep, const Box2& box,
                          double rel_tol = 1e-8, int nx_base = 48);

} // namespace film
