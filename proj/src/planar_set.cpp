#include "film/planar_set.hpp"

#include "film/slicing.hpp"

#include <Eigen/Eigenvalues>

namespace film {

namespace {

Vec2 rot90(const Vec2& v) { return Vec2(-v.y(), v.x()); }

double polygon_twice_area(const std::vector<Vec2>& v) {
    double s = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Vec2& p = v[i];
        const Vec2& q = v[(i + 1) % v.size()];
        s += p.x() * q.y() - q.x() * p.y();
    }
    return s;
}

/// Largest value of N on the Euclidean unit circle (norm equivalence
/// constant used for conservative box margins).
double norm_upper_equiv(const PlanarNorm& N) {
    switch (N.family()) {
        case PlanarNorm::Family::Euclidean: return 1.0;
        case PlanarNorm::Family::WeightedL1: return N.weights().norm();
        case PlanarNorm::Family::WeightedLinf: return N.weights().maxCoeff();
        case PlanarNorm::Family::Ellipsoidal: {
            Eigen::SelfAdjointEigenSolver<Mat2> es(N.matrix(), Eigen::EigenvaluesOnly);
            return std::sqrt(es.eigenvalues().maxCoeff());
        }
    }
    return 1.0;
}

bool same_norm(const PlanarNorm& a, const PlanarNorm& b) {
    if (a.family() != b.family()) return false;
    switch (a.family()) {
        case PlanarNorm::Family::Euclidean: return true;
        case PlanarNorm::Family::WeightedL1:
        case PlanarNorm::Family::WeightedLinf:
            return (a.weights() - b.weights()).cwiseAbs().maxCoeff() == 0.0;
        case PlanarNorm::Family::Ellipsoidal:
            return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0;
    }
    return false;
}

double segment_distance(const PlanarNorm& N, const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 e = b - a;
    auto f = [&](double t) { return N(p - a - t * e); };
    double lo = 0, hi = 1;
    while (hi - lo > 1e-13) {
        double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
        if (f(m1) <= f(m2)) hi = m2;
        else lo = m1;
    }
    return f(0.5 * (lo + hi));
}

/// Support point of the unit ball of N in direction u (any maximizer).
Vec2 support_point(const PlanarNorm& N, const Vec2& u) {
    switch (N.family()) {
        case PlanarNorm::Family::Euclidean: return u.normalized();
        case PlanarNorm::Family::Ellipsoidal: {
            Vec2 v = N.matrix().inverse() * u;
            return v / std::sqrt(u.dot(v));
        }
        case PlanarNorm::Family::WeightedL1: {
            // ball is the diamond; maximizer at a vertex
            Vec2 best(1.0 / N.weights().x(), 0);
            double bv = -1e300;
            for (const Vec2& v : std::vector<Vec2>{{1.0 / N.weights().x(), 0},
                                                   {-1.0 / N.weights().x(), 0},
                                                   {0, 1.0 / N.weights().y()},
                                                   {0, -1.0 / N.weights().y()}})
                if (u.dot(v) > bv) {
                    bv = u.dot(v);
                    best = v;
                }
            return best;
        }
        case PlanarNorm::Family::WeightedLinf: {
            return Vec2((u.x() >= 0 ? 1 : -1) / N.weights().x(),
                        (u.y() >= 0 ? 1 : -1) / N.weights().y());
        }
    }
    return u.normalized();
}

bool norm_ball_is_smooth(const PlanarNorm& N) {
    return N.family() == PlanarNorm::Family::Euclidean ||
           N.family() == PlanarNorm::Family::Ellipsoidal;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec2& a, const Vec2& b) { return a == b; }),
              pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const Vec2& o, const Vec2& a, const Vec2& b) {
        return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
    };
    std::vector<Vec2> hull(2 * pts.size());
    size_t k = 0;
    for (const Vec2& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

} // namespace

Curve2 segment_curve(const Vec2& p0, const Vec2& p1, const Vec2& outward_normal) {
    Curve2 c;
    double len = (p1 - p0).norm();
    Vec2 n = outward_normal.normalized();
    c.point = [p0, p1](double t) { return Vec2(p0 + t * (p1 - p0)); };
    c.normal = [n](double) { return n; };
    c.speed = [len](double) { return len; };
    return c;
}

Curve2 arc_curve(const Vec2& center, double radius, double theta0, double theta1) {
    Curve2 c;
    c.a = theta0;
    c.b = theta1;
    c.point = [center, radius](double t) {
        return Vec2(center + radius * Vec2(std::cos(t), std::sin(t)));
    };
    c.normal = [](double t) { return Vec2(std::cos(t), std::sin(t)); };
    c.speed = [radius](double) { return radius; };
    return c;
}

Domain2 Domain2::rectangle(const Vec2& lo, const Vec2& hi) {
    return convex_polygon({lo, {hi.x(), lo.y()}, hi, {lo.x(), hi.y()}});
}

Domain2 Domain2::convex_polygon(std::vector<Vec2> v) {
    if (v.size() < 3) throw std::invalid_argument("domain needs at least 3 vertices");
    if (polygon_twice_area(v) < 0) std::reverse(v.begin(), v.end());
    Domain2 d;
    d.verts_ = std::move(v);
    return d;
}

bool Domain2::contains(const Vec2& p) const {
    for (size_t i = 0; i < verts_.size(); ++i) {
        Vec2 a = verts_[i], b = verts_[(i + 1) % verts_.size()];
        Vec2 n = -rot90(b - a); // outward for ccw
        if (n.dot(p - a) > 0) return false;
    }
    return true;
}

double Domain2::boundary_distance(const Vec2& p) const {
    double d = std::numeric_limits<double>::infinity();
    PlanarNorm e = PlanarNorm::euclidean();
    for (size_t i = 0; i < verts_.size(); ++i)
        d = std::min(d, segment_distance(e, p, verts_[i], verts_[(i + 1) % verts_.size()]));
    return d;
}

Box2 Domain2::bounding_box() const {
    Box2 b{verts_[0], verts_[0]};
    for (const Vec2& v : verts_) {
        b.lo = b.lo.cwiseMin(v);
        b.hi = b.hi.cwiseMax(v);
    }
    return b;
}

double Domain2::area() const { return 0.5 * std::abs(polygon_twice_area(verts_)); }

// ---------------------------------------------------------------------------

struct PlanarSet::Primitive {
    virtual ~Primitive() = default;
    virtual bool contains(const Vec2& p) const = 0;
    virtual bool contains_open(const Vec2& p) const = 0;
    virtual double distance(const PlanarNorm& N, const Vec2& p) const = 0;
    /// Lower bound on the Euclidean distance from p to the boundary.
    virtual double boundary_margin(const Vec2& p) const = 0;
    virtual std::vector<Curve2> boundary() const = 0;
};

namespace {

using Prim = PlanarSet::Primitive;

struct DiskPrim : Prim {
    Vec2 c;
    double r;
    DiskPrim(const Vec2& c_, double r_) : c(c_), r(r_) {}
    bool contains(const Vec2& p) const override { return (p - c).norm() <= r; }
    bool contains_open(const Vec2& p) const override { return (p - c).norm() < r; }
    double distance(const PlanarNorm& N, const Vec2& p) const override {
        if (contains(p)) return 0.0;
        if (N.family() == PlanarNorm::Family::Euclidean) return (p - c).norm() - r;
        // quasi-convex along the circle: coarse scan plus golden refinement
        auto f = [&](double th) { return N(p - c - r * Vec2(std::cos(th), std::sin(th))); };
        double best_t = 0, best = std::numeric_limits<double>::infinity();
        const int n = 64;
        for (int i = 0; i < n; ++i) {
            double th = 2 * M_PI * i / n;
            double v = f(th);
            if (v < best) {
                best = v;
                best_t = th;
            }
        }
        double lo = best_t - 2 * M_PI / n, hi = best_t + 2 * M_PI / n;
        while (hi - lo > 1e-12) {
            double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (f(m1) <= f(m2)) hi = m2;
            else lo = m1;
        }
        return f(0.5 * (lo + hi));
    }
    double boundary_margin(const Vec2& p) const override { return std::abs((p - c).norm() - r); }
    std::vector<Curve2> boundary() const override { return {arc_curve(c, r, 0, 2 * M_PI)}; }
};

struct HalfPlanePrim : Prim {
    Vec2 n; // unit outward
    double d;
    double span;
    HalfPlanePrim(const Vec2& n_, double d_, double span_) : n(n_.normalized()), d(d_), span(span_) {
        this->d = d_ / n_.norm();
    }
    bool contains(const Vec2& p) const override { return n.dot(p) <= d; }
    bool contains_open(const Vec2& p) const override { return n.dot(p) < d; }
    double distance(const PlanarNorm& N, const Vec2& p) const override {
        double c = n.dot(p) - d;
        if (c <= 0) return 0.0;
        return c / N.dual()(n);
    }
    double boundary_margin(const Vec2& p) const override { return std::abs(n.dot(p) - d); }
    std::vector<Curve2> boundary() const override {
        Vec2 p0 = d * n, tau = rot90(n);
        return {segment_curve(p0 - span * tau, p0 + span * tau, n)};
    }
};

struct PolygonPrim : Prim {
    std::vector<Vec2> v; // ccw
    explicit PolygonPrim(std::vector<Vec2> verts) : v(std::move(verts)) {
        if (v.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
        if (polygon_twice_area(v) < 0) std::reverse(v.begin(), v.end());
    }
    double edge_signed(const Vec2& p, size_t i) const {
        Vec2 a = v[i], b = v[(i + 1) % v.size()];
        Vec2 n = -rot90((b - a).normalized());
        return n.dot(p - a); // positive outside this edge
    }
    bool contains(const Vec2& p) const override {
        for (size_t i = 0; i < v.size(); ++i)
            if (edge_signed(p, i) > 0) return false;
        return true;
    }
    bool contains_open(const Vec2& p) const override {
        for (size_t i = 0; i < v.size(); ++i)
            if (edge_signed(p, i) >= 0) return false;
        return true;
    }
    double distance(const PlanarNorm& N, const Vec2& p) const override {
        if (contains(p)) return 0.0;
        double d = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < v.size(); ++i)
            d = std::min(d, segment_distance(N, p, v[i], v[(i + 1) % v.size()]));
        return d;
    }
    double boundary_margin(const Vec2& p) const override {
        PlanarNorm e = PlanarNorm::euclidean();
        double d = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < v.size(); ++i)
            d = std::min(d, segment_distance(e, p, v[i], v[(i + 1) % v.size()]));
        return d;
    }
    std::vector<Curve2> boundary() const override {
        std::vector<Curve2> cs;
        for (size_t i = 0; i < v.size(); ++i) {
            Vec2 a = v[i], b = v[(i + 1) % v.size()];
            cs.push_back(segment_curve(a, b, -rot90((b - a).normalized())));
        }
        return cs;
    }
};

struct RoundedPolygonPrim : Prim {
    std::vector<Vec2> v; // ccw core polygon
    double r;
    RoundedPolygonPrim(std::vector<Vec2> verts, double r_) : v(std::move(verts)), r(r_) {
        if (polygon_twice_area(v) < 0) std::reverse(v.begin(), v.end());
        if (r <= 0) throw std::invalid_argument("rounding radius must be positive");
    }
    double core_distance(const Vec2& p) const {
        PolygonPrim core(v);
        if (core.contains(p)) return 0.0;
        PlanarNorm e = PlanarNorm::euclidean();
        double d = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < v.size(); ++i)
            d = std::min(d, segment_distance(e, p, v[i], v[(i + 1) % v.size()]));
        return d;
    }
    bool contains(const Vec2& p) const override { return core_distance(p) <= r; }
    bool contains_open(const Vec2& p) const override { return core_distance(p) < r; }
    double distance(const PlanarNorm& N, const Vec2& p) const override {
        if (N.family() == PlanarNorm::Family::Euclidean)
            return std::max(core_distance(p) - r, 0.0);
        if (contains(p)) return 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (const Curve2& c : boundary())
            for (int i = 0; i <= 256; ++i) {
                double t = c.a + (c.b - c.a) * i / 256.0;
                best = std::min(best, N(p - c.point(t)));
            }
        return best;
    }
    double boundary_margin(const Vec2& p) const override {
        return std::abs(core_distance(p) - r);
    }
    std::vector<Curve2> boundary() const override {
        std::vector<Curve2> cs;
        size_t m = v.size();
        for (size_t i = 0; i < m; ++i) {
            Vec2 a = v[i], b = v[(i + 1) % m];
            Vec2 n = -rot90((b - a).normalized());
            cs.push_back(segment_curve(a + r * n, b + r * n, n));
            Vec2 c2 = v[(i + 2) % m];
            Vec2 n2 = -rot90((c2 - b).normalized());
            double t0 = std::atan2(n.y(), n.x());
            double t1 = std::atan2(n2.y(), n2.x());
            while (t1 < t0) t1 += 2 * M_PI;
            if (t1 > t0) cs.push_back(arc_curve(b, r, t0, t1));
        }
        return cs;
    }
};

struct SegmentTubePrim : Prim {
    Vec2 a, b;
    double t;
    PlanarNorm N;
    double upper_equiv;
    SegmentTubePrim(const Vec2& a_, const Vec2& b_, double t_, const PlanarNorm& N_)
        : a(a_), b(b_), t(t_), N(N_), upper_equiv(norm_upper_equiv(N_)) {
        if (t <= 0) throw std::invalid_argument("tube half-width must be positive");
    }
    double seg_dist(const Vec2& p) const { return segment_distance(N, p, a, b); }
    bool contains(const Vec2& p) const override { return seg_dist(p) <= t; }
    bool contains_open(const Vec2& p) const override { return seg_dist(p) < t; }
    double distance(const PlanarNorm& M, const Vec2& p) const override {
        if (same_norm(M, N)) return std::max(seg_dist(p) - t, 0.0);
        if (contains(p)) return 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (const Curve2& c : boundary())
            for (int i = 0; i <= 256; ++i) {
                double s = c.a + (c.b - c.a) * i / 256.0;
                best = std::min(best, M(p - c.point(s)));
            }
        return best;
    }
    double boundary_margin(const Vec2& p) const override {
        return std::abs(seg_dist(p) - t) / upper_equiv;
    }
    std::vector<Curve2> boundary() const override {
        std::vector<Curve2> cs;
        Vec2 e = (b - a).normalized();
        Vec2 n = rot90(e);
        if (norm_ball_is_smooth(N)) {
            double th_e = std::atan2(e.y(), e.x());
            auto cap = [&](const Vec2& end, double t0, double t1) {
                Curve2 c;
                c.a = t0;
                c.b = t1;
                double tt = t;
                PlanarNorm NN = N;
                c.point = [end, tt, NN](double th) {
                    return Vec2(end + tt * support_point(NN, Vec2(std::cos(th), std::sin(th))));
                };
                c.normal = [](double th) { return Vec2(std::cos(th), std::sin(th)); };
                c.speed = [c](double th) {
                    double h = 1e-6;
                    return (c.point(th + h) - c.point(th - h)).norm() / (2 * h);
                };
                return c;
            };
            cs.push_back(cap(b, th_e - M_PI / 2, th_e + M_PI / 2));
            cs.push_back(cap(a, th_e + M_PI / 2, th_e + 3 * M_PI / 2));
            Vec2 wp = t * support_point(N, n), wm = t * support_point(N, -n);
            cs.push_back(segment_curve(a + wp, b + wp, n));
            cs.push_back(segment_curve(b + wm, a + wm, -n));
        } else {
            std::vector<Vec2> pts;
            for (const Vec2& w : N.unit_ball_polygon()) {
                pts.push_back(a + t * w);
                pts.push_back(b + t * w);
            }
            PolygonPrim poly(convex_hull(pts));
            cs = poly.boundary();
        }
        return cs;
    }
};

struct DilatedDiskPrim : Prim {
    Vec2 c;
    double r, t;
    PlanarNorm N;
    double upper_equiv;
    DilatedDiskPrim(const Vec2& c_, double r_, double t_, const PlanarNorm& N_)
        : c(c_), r(r_), t(t_), N(N_), upper_equiv(norm_upper_equiv(N_)) {}
    double disk_dist(const Vec2& p) const { return DiskPrim(c, r).distance(N, p); }
    bool contains(const Vec2& p) const override { return disk_dist(p) <= t; }
    bool contains_open(const Vec2& p) const override { return disk_dist(p) < t; }
    double distance(const PlanarNorm& M, const Vec2& p) const override {
        if (same_norm(M, N)) return std::max(disk_dist(p) - t, 0.0);
        if (contains(p)) return 0.0;
        double best = std::numeric_limits<double>::infinity();
        for (const Curve2& cc : boundary())
            for (int i = 0; i <= 256; ++i) {
                double s = cc.a + (cc.b - cc.a) * i / 256.0;
                best = std::min(best, M(p - cc.point(s)));
            }
        return best;
    }
    double boundary_margin(const Vec2& p) const override {
        return std::abs(disk_dist(p) - t) / std::max(upper_equiv, 1.0);
    }
    std::vector<Curve2> boundary() const override {
        if (N.family() == PlanarNorm::Family::Euclidean)
            return {arc_curve(c, r + t, 0, 2 * M_PI)};
        if (norm_ball_is_smooth(N)) {
            Curve2 cv;
            cv.a = 0;
            cv.b = 2 * M_PI;
            Vec2 cc = c;
            double rr = r, tt = t;
            PlanarNorm NN = N;
            cv.point = [cc, rr, tt, NN](double th) {
                Vec2 u(std::cos(th), std::sin(th));
                return Vec2(cc + rr * u + tt * support_point(NN, u));
            };
            cv.normal = [](double th) { return Vec2(std::cos(th), std::sin(th)); };
            cv.speed = [cv](double th) {
                double h = 1e-6;
                return (cv.point(th + h) - cv.point(th - h)).norm() / (2 * h);
            };
            return {cv};
        }
        // polygonal ball: disk + t*poly = rounded polygon of radius r
        std::vector<Vec2> verts;
        for (const Vec2& w : N.unit_ball_polygon()) verts.push_back(c + t * w);
        return RoundedPolygonPrim(verts, r).boundary();
    }
};

} // namespace

PlanarSet PlanarSet::disk(const Vec2& center, double radius) {
    PlanarSet s;
    s.prims_.push_back(std::make_shared<DiskPrim>(center, radius));
    return s;
}

PlanarSet PlanarSet::half_plane(const Vec2& n, double d) {
    PlanarSet s;
    s.prims_.push_back(std::make_shared<HalfPlanePrim>(n, d, 50.0));
    return s;
}

PlanarSet PlanarSet::convex_polygon(std::vector<Vec2> v) {
    PlanarSet s;
    s.prims_.push_back(std::make_shared<PolygonPrim>(std::move(v)));
    return s;
}

PlanarSet PlanarSet::rounded_polygon(std::vector<Vec2> v, double r) {
    PlanarSet s;
    s.prims_.push_back(std::make_shared<RoundedPolygonPrim>(std::move(v), r));
    return s;
}

PlanarSet PlanarSet::segment_tube(const Vec2& p0, const Vec2& p1, double t,
                                  const PlanarNorm& N) {
    PlanarSet s;
    s.prims_.push_back(std::make_shared<SegmentTubePrim>(p0, p1, t, N));
    return s;
}

PlanarSet PlanarSet::dilated_disk(const Vec2& center, double radius, double t,
                                  const PlanarNorm& N) {
    PlanarSet s;
    s.prims_.push_back(std::make_shared<DilatedDiskPrim>(center, radius, t, N));
    return s;
}

PlanarSet PlanarSet::unite(const PlanarSet& other) const {
    PlanarSet s = *this;
    for (const auto& p : other.prims_) s.prims_.push_back(p);
    return s;
}

bool PlanarSet::contains(const Vec2& p) const {
    for (const auto& prim : prims_)
        if (prim->contains(p)) return true;
    return false;
}

double PlanarSet::distance(const PlanarNorm& N, const Vec2& p) const {
    if (prims_.empty()) return std::numeric_limits<double>::infinity();
    double d = std::numeric_limits<double>::infinity();
    for (const auto& prim : prims_) {
        d = std::min(d, prim->distance(N, p));
        if (d == 0) return 0;
    }
    return d;
}

int PlanarSet::classify_box(const Box2& box) const {
    if (prims_.empty()) return -1;
    Vec2 c = box.center();
    double half_diag = 0.5 * box.extent().norm();
    bool all_out = true;
    for (const auto& prim : prims_) {
        bool in = prim->contains(c);
        double margin = prim->boundary_margin(c);
        if (in && margin > half_diag) return +1;
        if (!(!in && margin > half_diag)) all_out = false;
    }
    return all_out ? -1 : 0;
}

std::vector<Curve2> PlanarSet::primitive_boundaries() const {
    std::vector<Curve2> cs;
    for (const auto& prim : prims_) {
        auto b = prim->boundary();
        cs.insert(cs.end(), b.begin(), b.end());
    }
    return cs;
}

double PlanarSet::boundary_integral(const std::function<double(const Vec2&, const Vec2&)>& g,
                                    const std::function<bool(const Vec2&)>& weight) const {
    double total = 0;
    for (size_t i = 0; i < prims_.size(); ++i) {
        auto curves = prims_[i]->boundary();
        for (const Curve2& c : curves) {
            auto sig = [&](double t) {
                Vec2 p = c.point(t);
                int s = weight && !weight(p) ? 1 : 0;
                for (size_t j = 0; j < prims_.size() && s == 0; ++j)
                    if (j != i && prims_[j]->contains_open(p)) s = 2;
                return s;
            };
            auto f = [&](double t) { return g(c.point(t), c.normal(t)) * c.speed(t); };
            total += piecewise_integral(f, sig, [](int s) { return s == 0; }, c.a, c.b, 256);
        }
    }
    return total;
}

double sliced_integral_2d(const std::function<double(const Vec2&)>& f,
                          const std::function<int(const Vec2&)>& column_signature,
                          const std::function<bool(int)>& keep, const Box2& box,
                          double rel_tol, int nx_base) {
    auto column = [&](double x) {
        auto sig_y = [&](double y) { return column_signature(Vec2(x, y)); };
        auto fy = [&](double y) { return f(Vec2(x, y)); };
        return piecewise_integral(fy, sig_y, keep, box.lo.y(), box.hi.y(), 128, rel_tol);
    };
    // outer direction: split where the column piece structure changes, then
    // integrate adaptively on each smooth stretch
    auto outer_sig = [&](double x) {
        auto sig_y = [&](double y) { return column_signature(Vec2(x, y)); };
        auto pts = find_transitions(sig_y, box.lo.y(), box.hi.y(), 128, 1e-9);
        int kept = 0;
        for (size_t i = 0; i + 1 < pts.size(); ++i)
            if (keep(sig_y(0.5 * (pts[i] + pts[i + 1])))) ++kept;
        return int(pts.size()) * 64 + kept;
    };
    auto pieces = find_transitions(outer_sig, box.lo.x(), box.hi.x(), nx_base, 1e-10);
    double total = 0;
    for (size_t i = 0; i + 1 < pieces.size(); ++i)
        total += adaptive_1d(column, pieces[i], pieces[i + 1], rel_tol, 1e-14, 24);
    return total;
}

double planar_area(const PlanarSet& S, const Box2& box, double rel_tol) {
    if (S.is_empty()) return 0.0;
    return sliced_integral_2d([](const Vec2&) { return 1.0; },
                              [&](const Vec2& p) { return S.contains(p) ? 1 : 0; },
                              [](int s) { return s == 1; }, box, rel_tol);
}

} // namespace film
