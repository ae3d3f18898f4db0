#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace film {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Axis-aligned boxes used as quadrature domains and clip regions.
struct Box2 {
    Vec2 lo{0, 0}, hi{0, 0};
    Vec2 extent() const { return hi - lo; }
    double area() const { return (hi - lo).prod(); }
    bool contains(const Vec2& p) const {
        return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() && p.y() <= hi.y();
    }
    Vec2 center() const { return 0.5 * (lo + hi); }
};

struct Box3 {
    Vec3 lo{0, 0, 0}, hi{0, 0, 0};
    Vec3 extent() const { return hi - lo; }
    double volume() const { return (hi - lo).prod(); }
    bool contains(const Vec3& p) const {
        for (int i = 0; i < 3; ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }
    Vec3 center() const { return 0.5 * (lo + hi); }
    Box3 inflated(double m) const { return {lo - Vec3::Constant(m), hi + Vec3::Constant(m)}; }
    Box3 intersect(const Box3& o) const {
        return {lo.cwiseMax(o.lo), hi.cwiseMin(o.hi)};
    }
    bool empty() const { return (hi - lo).minCoeff() <= 0; }
};

inline Mat3 skew(const Vec3& w) {
    Mat3 S;
    S << 0, -w.z(), w.y(), w.z(), 0, -w.x(), -w.y(), w.x(), 0;
    return S;
}

inline Mat3 sym(const Mat3& X) { return 0.5 * (X + X.transpose()); }

/// Nearest rotation in the Frobenius sense (orthogonal polar factor with
/// determinant correction).
inline Mat3 nearest_rotation(const Mat3& F) {
    Eigen::JacobiSVD<Mat3> svd(F, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Mat3 U = svd.matrixU(), V = svd.matrixV();
    Mat3 R = U * V.transpose();
    if (R.determinant() < 0) {
        U.col(2) *= -1.0;
        R = U * V.transpose();
    }
    return R;
}

/// Squared Frobenius distance to SO(3); exact for singular and
/// orientation-reversing arguments.
inline double dist2_SO3(const Mat3& X) {
    Eigen::JacobiSVD<Mat3> svd(X);
    Vec3 s = svd.singularValues();
    double sgn = X.determinant() < 0 ? -1.0 : 1.0;
    double d0 = s[0] - 1.0, d1 = s[1] - 1.0, d2 = sgn * s[2] - 1.0;
    return d0 * d0 + d1 * d1 + d2 * d2;
}

inline bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace film
