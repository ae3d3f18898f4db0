#include "film/norms.hpp"

#include <Eigen/Eigenvalues>

#include <queue>

namespace film {

namespace {

void check_spd(const Mat3& M) {
    Eigen::SelfAdjointEigenSolver<Mat3> es(M, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0) throw std::invalid_argument("ellipsoidal norm needs SPD M");
}

void check_spd2(const Mat2& M) {
    Eigen::SelfAdjointEigenSolver<Mat2> es(M, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0) throw std::invalid_argument("ellipsoidal norm needs SPD M");
}

void check_weights(const Vec3& w) {
    if (w.minCoeff() <= 0) throw std::invalid_argument("norm weights must be positive");
}

} // namespace

Norm3 Norm3::euclidean() { return Norm3{}; }

Norm3 Norm3::weighted_l1(const Vec3& w) {
    check_weights(w);
    Norm3 n;
    n.family_ = Family::WeightedL1;
    n.w_ = w;
    return n;
}

Norm3 Norm3::weighted_linf(const Vec3& w) {
    check_weights(w);
    Norm3 n;
    n.family_ = Family::WeightedLinf;
    n.w_ = w;
    return n;
}

Norm3 Norm3::ellipsoidal(const Mat3& M) {
    Mat3 S = 0.5 * (M + M.transpose());
    check_spd(S);
    Norm3 n;
    n.family_ = Family::Ellipsoidal;
    n.M_ = S;
    return n;
}

double Norm3::operator()(const Vec3& x) const {
    switch (family_) {
        case Family::Euclidean: return x.norm();
        case Family::WeightedL1: return w_.dot(x.cwiseAbs());
        case Family::WeightedLinf: return (w_.array() * x.cwiseAbs().array()).maxCoeff();
        case Family::Ellipsoidal: return std::sqrt(x.dot(M_ * x));
    }
    return 0;
}

Norm3 Norm3::dual() const {
    switch (family_) {
        case Family::Euclidean: return euclidean();
        case Family::WeightedL1: return weighted_linf(w_.cwiseInverse());
        case Family::WeightedLinf: return weighted_l1(w_.cwiseInverse());
        case Family::Ellipsoidal: return ellipsoidal(M_.inverse());
    }
    return euclidean();
}

double dual_eval(const Norm3& psi, const Vec3& u) { return psi.dual()(u); }

PlanarNorm PlanarNorm::euclidean() { return PlanarNorm{}; }

PlanarNorm PlanarNorm::weighted_l1(const Vec2& w) {
    if (w.minCoeff() <= 0) throw std::invalid_argument("norm weights must be positive");
    PlanarNorm n;
    n.family_ = Family::WeightedL1;
    n.w_ = w;
    return n;
}

PlanarNorm PlanarNorm::weighted_linf(const Vec2& w) {
    if (w.minCoeff() <= 0) throw std::invalid_argument("norm weights must be positive");
    PlanarNorm n;
    n.family_ = Family::WeightedLinf;
    n.w_ = w;
    return n;
}

PlanarNorm PlanarNorm::ellipsoidal(const Mat2& M) {
    Mat2 S = 0.5 * (M + M.transpose());
    check_spd2(S);
    PlanarNorm n;
    n.family_ = Family::Ellipsoidal;
    n.M_ = S;
    return n;
}

double PlanarNorm::operator()(const Vec2& x) const {
    switch (family_) {
        case Family::Euclidean: return x.norm();
        case Family::WeightedL1: return w_.dot(x.cwiseAbs());
        case Family::WeightedLinf: return (w_.array() * x.cwiseAbs().array()).maxCoeff();
        case Family::Ellipsoidal: return std::sqrt(x.dot(M_ * x));
    }
    return 0;
}

PlanarNorm PlanarNorm::dual() const {
    switch (family_) {
        case Family::Euclidean: return euclidean();
        case Family::WeightedL1: return weighted_linf(w_.cwiseInverse());
        case Family::WeightedLinf: return weighted_l1(w_.cwiseInverse());
        case Family::Ellipsoidal: return ellipsoidal(M_.inverse());
    }
    return euclidean();
}

std::vector<Vec2> PlanarNorm::unit_ball_polygon(int segments_per_arc) const {
    std::vector<Vec2> pts;
    switch (family_) {
        case Family::WeightedL1: {
            // diamond with vertices on the axes
            pts = {{1.0 / w_.x(), 0}, {0, 1.0 / w_.y()}, {-1.0 / w_.x(), 0}, {0, -1.0 / w_.y()}};
            break;
        }
        case Family::WeightedLinf: {
            double a = 1.0 / w_.x(), b = 1.0 / w_.y();
            pts = {{a, b}, {-a, b}, {-a, -b}, {a, -b}};
            break;
        }
        case Family::Euclidean: {
            for (int i = 0; i < segments_per_arc; ++i) {
                double t = 2.0 * M_PI * i / segments_per_arc;
                pts.emplace_back(std::cos(t), std::sin(t));
            }
            break;
        }
        case Family::Ellipsoidal: {
            // {x : x^T M x <= 1} = L^{-T} unit disk with M = L L^T
            Eigen::LLT<Mat2> llt(M_);
            Mat2 Linv = Mat2(llt.matrixL()).inverse();
            for (int i = 0; i < segments_per_arc; ++i) {
                double t = 2.0 * M_PI * i / segments_per_arc;
                pts.emplace_back(Linv.transpose() * Vec2(std::cos(t), std::sin(t)));
            }
            // ensure counterclockwise
            double twice_area = 0;
            for (size_t i = 0; i < pts.size(); ++i) {
                const Vec2& p = pts[i];
                const Vec2& q = pts[(i + 1) % pts.size()];
                twice_area += p.x() * q.y() - q.x() * p.y();
            }
            if (twice_area < 0) std::reverse(pts.begin(), pts.end());
            break;
        }
    }
    return pts;
}

Psi0Result psi0(const Norm3& psi, const Vec2& xp) {
    Psi0Result r;
    double base = psi(Vec3(xp.x(), xp.y(), 0.0));
    if (base == 0.0) return r;
    double m = psi(Vec3(0, 0, 1));
    double lo = -base / m, hi = base / m;
    auto f = [&](double c) { return psi(Vec3(xp.x(), xp.y(), c)); };
    // widen if the section minimum sits on the bracket edge (cannot happen
    // for the builtin families, kept as a guard)
    for (int guard = 0; guard < 4; ++guard) {
        double a = lo, b = hi;
        while (b - a > 1e-10 * std::max(1.0, hi - lo)) {
            double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
            if (f(m1) <= f(m2)) b = m2;
            else a = m1;
        }
        r.argmin_c = 0.5 * (a + b);
        r.value = f(r.argmin_c);
        if (r.argmin_c > lo + 1e-9 * (hi - lo) && r.argmin_c < hi - 1e-9 * (hi - lo)) break;
        lo *= 2.0;
        hi *= 2.0;
    }
    if (std::abs(r.argmin_c) < 1e-12 * std::max(1.0, base)) r.argmin_c = 0.0;
    return r;
}

PlanarNorm psi0_norm(const Norm3& psi) {
    switch (psi.family()) {
        case Norm3::Family::Euclidean: return PlanarNorm::euclidean();
        case Norm3::Family::WeightedL1:
            return PlanarNorm::weighted_l1(psi.weights().head<2>());
        case Norm3::Family::WeightedLinf:
            return PlanarNorm::weighted_linf(psi.weights().head<2>());
        case Norm3::Family::Ellipsoidal: {
            const Mat3& M = psi.matrix();
            Mat2 S = M.topLeftCorner<2, 2>() -
                     M.topRightCorner<2, 1>() * M.bottomLeftCorner<1, 2>() / M(2, 2);
            return PlanarNorm::ellipsoidal(S);
        }
    }
    return PlanarNorm::euclidean();
}

double psi0_argmin(const Norm3& psi, const Vec2& xp) {
    if (psi.family() == Norm3::Family::Ellipsoidal) {
        const Mat3& M = psi.matrix();
        return -(M(0, 2) * xp.x() + M(1, 2) * xp.y()) / M(2, 2);
    }
    return 0.0; // diagonal families minimize the section at c = 0
}

double DistanceField::sample(const Vec3& p) const {
    Vec3 q = (p - origin).cwiseQuotient(spacing) - Vec3::Constant(0.5);
    int i = std::clamp(int(std::floor(q.x())), 0, dims.x() - 2);
    int j = std::clamp(int(std::floor(q.y())), 0, dims.y() - 2);
    int k = std::clamp(int(std::floor(q.z())), 0, dims.z() - 2);
    double fx = std::clamp(q.x() - i, 0.0, 1.0);
    double fy = std::clamp(q.y() - j, 0.0, 1.0);
    double fz = std::clamp(q.z() - k, 0.0, 1.0);
    double v = 0;
    for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj)
            for (int dk = 0; dk < 2; ++dk) {
                double w = (di ? fx : 1 - fx) * (dj ? fy : 1 - fy) * (dk ? fz : 1 - fz);
                v += w * at(i + di, j + dj, k + dk);
            }
    return v;
}

DistanceField distance_transform(const Norm3& psi_dual, const std::vector<uint8_t>& mask,
                                 const VoxelGridSpec& grid) {
    const int nx = grid.dims.x(), ny = grid.dims.y(), nz = grid.dims.z();
    if (mask.size() != size_t(nx) * ny * nz) throw std::invalid_argument("mask size mismatch");
    bool any = false;
    for (uint8_t m : mask)
        if (m) {
            any = true;
            break;
        }
    if (!any) throw std::runtime_error("empty source set");

    DistanceField f;
    f.origin = grid.origin;
    f.spacing = grid.spacing;
    f.dims = grid.dims;
    f.values.assign(mask.size(), std::numeric_limits<double>::infinity());

    struct Edge {
        int di, dj, dk;
        double w;
    };
    std::vector<Edge> stencil;
    for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj)
            for (int dk = -1; dk <= 1; ++dk) {
                if (di == 0 && dj == 0 && dk == 0) continue;
                Vec3 off(di * grid.spacing.x(), dj * grid.spacing.y(), dk * grid.spacing.z());
                stencil.push_back({di, dj, dk, psi_dual(off)});
            }

    using Node = std::pair<double, int64_t>;
    std::priority_queue<Node, std::vector<Node>, std::greater<Node>> pq;
    auto idx = [&](int i, int j, int k) { return (int64_t(k) * ny + j) * nx + i; };
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                if (mask[idx(i, j, k)]) {
                    f.values[idx(i, j, k)] = 0.0;
                    pq.push({0.0, idx(i, j, k)});
                }
    while (!pq.empty()) {
        auto [d, id] = pq.top();
        pq.pop();
        if (d > f.values[id]) continue;
        int i = int(id % nx), j = int((id / nx) % ny), k = int(id / (int64_t(nx) * ny));
        for (const Edge& e : stencil) {
            int ii = i + e.di, jj = j + e.dj, kk = k + e.dk;
            if (ii < 0 || jj < 0 || kk < 0 || ii >= nx || jj >= ny || kk >= nz) continue;
            int64_t id2 = idx(ii, jj, kk);
            double nd = d + e.w;
            if (nd < f.values[id2]) {
                f.values[id2] = nd;
                pq.push({nd, id2});
            }
        }
    }
    return f;
}

} // namespace film
