#include "film/quadrature.hpp"

#include <map>
#include <mutex>

namespace film {

namespace {

// Newton iteration on Legendre polynomials; standard Golub-Welsch would do
// as well but this keeps it dependency-free.
GaussRule make_rule(int n) {
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[i] = x;
        r.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

} // namespace

const GaussRule& gauss_rule(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double gauss_1d(const std::function<double(double)>& f, double a, double b, int n) {
    const GaussRule& r = gauss_rule(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a), s = 0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

namespace {
double adaptive_1d_rec(const std::function<double(double)>& f, double a, double b,
                       double coarse, double rel_tol, double abs_floor, int depth) {
    double m = 0.5 * (a + b);
    double left = gauss_1d(f, a, m, 8), right = gauss_1d(f, m, b, 8);
    double fine = left + right;
    if (depth <= 0 || std::abs(fine - coarse) <= rel_tol * std::abs(fine) + abs_floor)
        return fine;
    return adaptive_1d_rec(f, a, m, left, rel_tol, abs_floor, depth - 1) +
           adaptive_1d_rec(f, m, b, right, rel_tol, abs_floor, depth - 1);
}
} // namespace

double adaptive_1d(const std::function<double(double)>& f, double a, double b,
                   double rel_tol, double abs_floor, int max_depth) {
    return adaptive_1d_rec(f, a, b, gauss_1d(f, a, b, 8), rel_tol, abs_floor, max_depth);
}

double gauss_2d(const std::function<double(const Vec2&)>& f, const Box2& box, int n) {
    const GaussRule& r = gauss_rule(n);
    Vec2 mid = box.center(), half = 0.5 * box.extent();
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s += r.w[i] * r.w[j] *
                 f(Vec2(mid.x() + half.x() * r.x[i], mid.y() + half.y() * r.x[j]));
    return s * half.prod();
}

double gauss_3d(const std::function<double(const Vec3&)>& f, const Box3& box, int n) {
    const GaussRule& r = gauss_rule(n);
    Vec3 mid = box.center(), half = 0.5 * box.extent();
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s += r.w[i] * r.w[j] * r.w[k] *
                     f(Vec3(mid.x() + half.x() * r.x[i], mid.y() + half.y() * r.x[j],
                            mid.z() + half.z() * r.x[k]));
    return s * half.prod();
}

namespace {

double region_2d_rec(const std::function<double(const Vec2&)>& f,
                     const std::function<bool(const Vec2&)>& inside,
                     const BoxClass2& classify, const Box2& box, double rel_tol,
                     int depth, int gauss_n) {
    int c = classify(box);
    if (c < 0) return 0.0;
    if (c > 0) {
        double coarse = gauss_2d(f, box, gauss_n);
        double fine = 0;
        Vec2 m = box.center();
        const Box2 kids[4] = {{box.lo, m},
                              {{m.x(), box.lo.y()}, {box.hi.x(), m.y()}},
                              {{box.lo.x(), m.y()}, {m.x(), box.hi.y()}},
                              {m, box.hi}};
        for (const auto& k : kids) fine += gauss_2d(f, k, gauss_n);
        if (depth <= 0 || std::abs(fine - coarse) <= rel_tol * (std::abs(fine) + 1e-300) + 1e-14)
            return fine;
        double s = 0;
        for (const auto& k : kids)
            s += region_2d_rec(f, inside, classify, k, rel_tol, depth - 1, gauss_n);
        return s;
    }
    if (depth <= 0) {
        // sample-fraction weighting on the unresolved sliver
        double s = 0;
        int nin = 0;
        const int m = 4;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Vec2 p = box.lo + Vec2((i + 0.5) / m * box.extent().x(),
                                       (j + 0.5) / m * box.extent().y());
                if (inside(p)) {
                    s += f(p);
                    ++nin;
                }
            }
        return s * box.area() / (m * m);
    }
    Vec2 m = box.center();
    const Box2 kids[4] = {{box.lo, m},
                          {{m.x(), box.lo.y()}, {box.hi.x(), m.y()}},
                          {{box.lo.x(), m.y()}, {m.x(), box.hi.y()}},
                          {m, box.hi}};
    double s = 0;
    for (const auto& k : kids)
        s += region_2d_rec(f, inside, classify, k, rel_tol, depth - 1, gauss_n);
    return s;
}

double region_3d_rec(const std::function<double(const Vec3&)>& f,
                     const std::function<bool(const Vec3&)>& inside,
                     const BoxClass3& classify, const Box3& box, double rel_tol,
                     int depth, int gauss_n) {
    int c = classify(box);
    if (c < 0) return 0.0;
    std::array<Box3, 8> kids;
    Vec3 m = box.center();
    for (int i = 0; i < 8; ++i) {
        Vec3 lo = box.lo, hi = m;
        if (i & 1) { lo.x() = m.x(); hi.x() = box.hi.x(); }
        if (i & 2) { lo.y() = m.y(); hi.y() = box.hi.y(); }
        if (i & 4) { lo.z() = m.z(); hi.z() = box.hi.z(); }
        kids[i] = {lo, hi};
    }
    if (c > 0) {
        double coarse = gauss_3d(f, box, gauss_n);
        double fine = 0;
        for (const auto& k : kids) fine += gauss_3d(f, k, gauss_n);
        if (depth <= 0 || std::abs(fine - coarse) <= rel_tol * (std::abs(fine) + 1e-300) + 1e-14)
            return fine;
        double s = 0;
        for (const auto& k : kids)
            s += region_3d_rec(f, inside, classify, k, rel_tol, depth - 1, gauss_n);
        return s;
    }
    if (depth <= 0) {
        double s = 0;
        const int m3 = 3;
        for (int i = 0; i < m3; ++i)
            for (int j = 0; j < m3; ++j)
                for (int k = 0; k < m3; ++k) {
                    Vec3 p = box.lo + Vec3((i + 0.5) / m3 * box.extent().x(),
                                           (j + 0.5) / m3 * box.extent().y(),
                                           (k + 0.5) / m3 * box.extent().z());
                    if (inside(p)) s += f(p);
                }
        return s * box.volume() / (m3 * m3 * m3);
    }
    double s = 0;
    for (const auto& k : kids)
        s += region_3d_rec(f, inside, classify, k, rel_tol, depth - 1, gauss_n);
    return s;
}

} // namespace

double adaptive_region_2d(const std::function<double(const Vec2&)>& f,
                          const std::function<bool(const Vec2&)>& inside,
                          const BoxClass2& classify, const Box2& box, double rel_tol,
                          int max_depth, int gauss_n) {
    return region_2d_rec(f, inside, classify, box, rel_tol, max_depth, gauss_n);
}

double adaptive_region_3d(const std::function<double(const Vec3&)>& f,
                          const std::function<bool(const Vec3&)>& inside,
                          const BoxClass3& classify, const Box3& box, double rel_tol,
                          int max_depth, int gauss_n) {
    return region_3d_rec(f, inside, classify, box, rel_tol, max_depth, gauss_n);
}

} // namespace film
