#pragma once

#include "film/types.hpp"

#include <array>
#include <functional>

namespace film {

/// Gauss-Legendre nodes/weights on [-1,1].
struct GaussRule {
    std::vector<double> x, w;
};

const GaussRule& gauss_rule(int n);

/// Integrate f over [a,b] with an n-point Gauss rule.
double gauss_1d(const std::function<double(double)>& f, double a, double b, int n = 16);

/// Adaptive 1D quadrature (Gauss with interval bisection) to relative
/// tolerance rel_tol; abs floor avoids chasing exact zeros.
double adaptive_1d(const std::function<double(double)>& f, double a, double b,
                   double rel_tol = 1e-10, double abs_floor = 1e-14, int max_depth = 30);

/// Tensor Gauss on a 2D box.
double gauss_2d(const std::function<double(const Vec2&)>& f, const Box2& box, int n = 4);

/// Tensor Gauss on a 3D box.
double gauss_3d(const std::function<double(const Vec3&)>& f, const Box3& box, int n = 4);

/// Classification callback for adaptive region quadrature: +1 box fully in
/// the integration region, -1 fully outside, 0 undecided (subdivide).
using BoxClass2 = std::function<int(const Box2&)>;
using BoxClass3 = std::function<int(const Box3&)>;

/// Adaptive quadtree integration of f over {x in box : inside(x)}.
/// classify provides conservative box classification; boxes still undecided
/// at max_depth are weighted by the sampled inside-fraction (4x4).
double adaptive_region_2d(const std::function<double(const Vec2&)>& f,
                          const std::function<bool(const Vec2&)>& inside,
                          const BoxClass2& classify, const Box2& box,
                          double rel_tol = 1e-6, int max_depth = 12, int gauss_n = 4);

/// Octree analogue of adaptive_region_2d (boundary cells resolved to
/// max_depth, then sample-fraction weighted with a 3x3x3 stencil).
double adaptive_region_3d(const std::function<double(const Vec3&)>& f,
                          const std::function<bool(const Vec3&)>& inside,
                          const BoxClass3& classify, const Box3& box,
                          double rel_tol = 1e-5, int max_depth = 7, int gauss_n = 3);

} // namespace film
