#pragma once

#include "film/types.hpp"

namespace film {

/// Norm on R^3. Families: Euclidean, weighted l1, weighted linf (plain linf
/// is weights (1,1,1)) and ellipsoidal sqrt(x^T M x) with SPD M. All carry
/// closed-form duals within the same family set.
class Norm3 {
public:
    enum class Family { Euclidean, WeightedL1, WeightedLinf, Ellipsoidal };

    static Norm3 euclidean();
    static Norm3 weighted_l1(const Vec3& w);
    static Norm3 linf() { return weighted_linf(Vec3::Ones()); }
    static Norm3 weighted_linf(const Vec3& w);
    static Norm3 ellipsoidal(const Mat3& M);

    double operator()(const Vec3& x) const;

    /// Closed-form dual norm as a Norm3 (Euclidean -> Euclidean, weighted l1
    /// <-> weighted linf with inverse weights, ellipsoidal M -> M^{-1}).
    Norm3 dual() const;

    Family family() const { return family_; }
    const Vec3& weights() const { return w_; }
    const Mat3& matrix() const { return M_; }

private:
    Family family_ = Family::Euclidean;
    Vec3 w_ = Vec3::Ones();
    Mat3 M_ = Mat3::Identity();
};

/// psi°(u) = max{ <u,v> : psi(v) <= 1 } through the closed-form dual.
double dual_eval(const Norm3& psi, const Vec3& u);

/// Norm on R^2 with the same family set; arises as the planar relaxation of
/// a Norm3 and as the metric of planar tubular neighborhoods.
class PlanarNorm {
public:
    enum class Family { Euclidean, WeightedL1, WeightedLinf, Ellipsoidal };

    static PlanarNorm euclidean();
    static PlanarNorm weighted_l1(const Vec2& w);
    static PlanarNorm weighted_linf(const Vec2& w);
    static PlanarNorm ellipsoidal(const Mat2& M);

    double operator()(const Vec2& x) const;
    PlanarNorm dual() const;

    Family family() const { return family_; }
    const Vec2& weights() const { return w_; }
    const Mat2& matrix() const { return M_; }

    /// Boundary of the unit ball {norm <= 1} as a polyline (dense for the
    /// smooth families); points ordered counterclockwise.
    std::vector<Vec2> unit_ball_polygon(int segments_per_arc = 256) const;

private:
    Family family_ = Family::Euclidean;
    Vec2 w_ = Vec2::Ones();
    Mat2 M_ = Mat2::Identity();
};

struct Psi0Result {
    double value = 0.0;
    double argmin_c = 0.0;
};

/// psi0(x') = min_c psi(x', c) by ternary search on the convex section
/// (bracket [-psi(x',0)/m, +psi(x',0)/m], m = psi(e3)), tolerance 1e-10.
Psi0Result psi0(const Norm3& psi, const Vec2& xp);

/// Closed-form planar relaxation of psi as a PlanarNorm. For the ellipsoidal
/// family this is the Schur complement of M33.
PlanarNorm psi0_norm(const Norm3& psi);

/// Minimizing third component as a function of the planar argument
/// (c*(x') with psi(x', c*) = psi0(x')).
double psi0_argmin(const Norm3& psi, const Vec2& xp);

/// Voxel grid holding dist_{psi_dual}(., A) for a rasterized source set.
struct DistanceField {
    Vec3 origin;
    Vec3 spacing;
    Eigen::Vector3i dims;
    std::vector<double> values; // x fastest, then y, then z

    double& at(int i, int j, int k) { return values[(size_t(k) * dims.y() + j) * dims.x() + i]; }
    double at(int i, int j, int k) const {
        return values[(size_t(k) * dims.y() + j) * dims.x() + i];
    }
    Vec3 center(int i, int j, int k) const {
        return origin + Vec3((i + 0.5) * spacing.x(), (j + 0.5) * spacing.y(),
                             (k + 0.5) * spacing.z());
    }
    /// Trilinear interpolation of the stored field at an arbitrary point.
    double sample(const Vec3& p) const;
    size_t size() const { return values.size(); }
};

struct VoxelGridSpec {
    Vec3 origin;
    Vec3 spacing;
    Eigen::Vector3i dims;
};

/// Anisotropic distance transform: Dijkstra over the 26-neighbor stencil
/// with edge weights psi_dual(voxel offset). Mask marks source voxels
/// (distance 0). Throws on an empty mask.
DistanceField distance_transform(const Norm3& psi_dual, const std::vector<uint8_t>& mask,
                                 const VoxelGridSpec& grid);

/// Worst-case stencil overestimation factor of the 26-neighbor metric
/// relative to the exact anisotropic distance (documented bound used in
/// error estimates).
constexpr double kStencilAnisotropyFactor = 1.1;

} // namespace film
