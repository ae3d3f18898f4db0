#include "film/forms.hpp"

#include <Eigen/Eigenvalues>

namespace film {

ElasticDensity ElasticDensity::squared_distance() {
    ElasticDensity d;
    d.family_ = Family::SquaredDistance;
    d.mu_ = 1.0;
    d.lambda_ = 0.0;
    return d;
}

ElasticDensity ElasticDensity::isotropic(double mu, double lambda) {
    if (mu <= 0 || lambda < 0) throw std::invalid_argument("isotropic density needs mu > 0, lambda >= 0");
    ElasticDensity d;
    d.family_ = Family::Isotropic;
    d.mu_ = mu;
    d.lambda_ = lambda;
    return d;
}

double ElasticDensity::operator()(const Mat3& X) const {
    double d2 = dist2_SO3(X);
    if (!std::isfinite(d2)) throw std::runtime_error("density evaluation failed: non-finite dist^2");
    if (family_ == Family::SquaredDistance) return d2;
    double u = X.determinant() - 1.0;
    return mu_ * d2 + 0.5 * lambda_ * (u * u / (1.0 + u * u));
}

double ElasticDensity::growth_lower() const {
    return family_ == Family::SquaredDistance ? 1.0 : mu_;
}

double ElasticDensity::growth_upper() const {
    // dist^2(X,SO(3)) <= 6 (1 + |X|^2); the det penalty is bounded by 1.
    return family_ == Family::SquaredDistance ? 6.0 : 6.0 * mu_ + 0.5 * lambda_;
}

QuadraticForm3::QuadraticForm3(const Mat6& gram) : gram_(0.5 * (gram + gram.transpose())) {}

Vec6 QuadraticForm3::vec(const Mat3& S) {
    const double s2 = std::sqrt(2.0);
    Vec6 v;
    v << S(0, 0), S(1, 1), S(2, 2), s2 * S(1, 2), s2 * S(0, 2), s2 * S(0, 1);
    return v;
}

QuadraticForm3 QuadraticForm3::isotropic(double mu, double lambda) {
    Mat6 G = Mat6::Zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) G(i, j) = lambda;
        G(i, i) += 2.0 * mu;
    }
    for (int i = 3; i < 6; ++i) G(i, i) = 2.0 * mu;
    return QuadraticForm3(G);
}

double QuadraticForm3::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Mat6> es(gram_, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

QuadraticForm3 hessian_at_identity(const ElasticDensity& W, double eta) {
    auto mixed = [&](const Mat3& U, const Mat3& V, double h) {
        double a = W(Mat3::Identity() + h * U + h * V);
        double b = W(Mat3::Identity() + h * U - h * V);
        double c = W(Mat3::Identity() - h * U + h * V);
        double d = W(Mat3::Identity() - h * U - h * V);
        double val = (a - b - c + d) / (4.0 * h * h);
        if (!std::isfinite(val))
            throw std::runtime_error("density evaluation failed: non-finite difference in direction pair");
        return val;
    };
    // Hessian on the 9 matrix directions e_i (x) e_j, Richardson-extrapolated.
    Eigen::Matrix<double, 9, 9> H9;
    std::array<Mat3, 9> dirs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Mat3 E = Mat3::Zero();
            E(i, j) = 1.0;
            dirs[3 * i + j] = E;
        }
    for (int a = 0; a < 9; ++a)
        for (int b = a; b < 9; ++b) {
            double coarse = mixed(dirs[a], dirs[b], eta);
            double fine = mixed(dirs[a], dirs[b], 0.5 * eta);
            H9(a, b) = H9(b, a) = (4.0 * fine - coarse) / 3.0;
        }
    // Restrict through the symmetrization map onto the Mandel basis.
    auto vec9 = [](const Mat3& M) {
        Eigen::Matrix<double, 9, 1> v;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) v[3 * i + j] = M(i, j);
        return v;
    };
    const double is2 = 1.0 / std::sqrt(2.0);
    std::array<Mat3, 6> basis;
    basis[0] = dirs[0];
    basis[1] = dirs[4];
    basis[2] = dirs[8];
    basis[3] = is2 * (dirs[5] + dirs[7]);
    basis[4] = is2 * (dirs[2] + dirs[6]);
    basis[5] = is2 * (dirs[1] + dirs[3]);
    Mat6 G;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) G(a, b) = vec9(basis[a]).dot(H9 * vec9(basis[b]));
    return QuadraticForm3(G);
}

Mat3 q2_completion(const Mat2& X, const Vec3& c) {
    Mat3 M = Mat3::Zero();
    M.topLeftCorner<2, 2>() = X;
    M(0, 2) = c[0];
    M(1, 2) = c[1];
    M(2, 2) = c[2];
    return M;
}

namespace {

// Stationarity data of c -> Q3(completion(X, c)): value = q0 + 2 b.c + c.K c.
struct CQuadratic {
    double q0;
    Vec3 b;
    Mat3 K;
};

CQuadratic c_quadratic(const QuadraticForm3& Q3, const Mat2& X) {
    CQuadratic q;
    Mat3 M0 = q2_completion(X, Vec3::Zero());
    std::array<Mat3, 3> A;
    for (int i = 0; i < 3; ++i) A[i] = q2_completion(Mat2::Zero(), Vec3::Unit(i));
    q.q0 = Q3(M0);
    for (int i = 0; i < 3; ++i) {
        q.b[i] = Q3.bilinear(M0, A[i]);
        for (int j = 0; j < 3; ++j) q.K(i, j) = Q3.bilinear(A[i], A[j]);
    }
    return q;
}

} // namespace

Q2Result q2_relax(const QuadraticForm3& Q3, const Mat2& X) {
    CQuadratic q = c_quadratic(Q3, X);
    Eigen::SelfAdjointEigenSolver<Mat3> es(q.K);
    if (es.eigenvalues().minCoeff() < -1e-10 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff()))
        throw std::runtime_error("form not PSD");
    // Minimum-norm stationary point; singular values below 1e-12 sigma_max
    // are treated as zero.
    Eigen::JacobiSVD<Mat3> svd(q.K, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Vec3 s = svd.singularValues();
    double cutoff = 1e-12 * std::max(s.maxCoeff(), 1e-300);
    Vec3 rhs = -svd.matrixU().transpose() * q.b;
    Vec3 y;
    for (int i = 0; i < 3; ++i) y[i] = s[i] > cutoff ? rhs[i] / s[i] : 0.0;
    Q2Result res;
    res.argmin_c = svd.matrixV() * y;
    res.value = Q3(q2_completion(X, res.argmin_c));
    return res;
}

double q2_relax_bruteforce(const QuadraticForm3& Q3, const Mat2& X, double radius,
                           double step, const Vec3& center) {
    if (radius <= 0) throw std::invalid_argument("grid radius must be positive");
    CQuadratic q = c_quadratic(Q3, X);
    const long n = std::lround(radius / step);
    auto grid = [&](int axis, long k) { return center[axis] + k * step; };
    double best = std::numeric_limits<double>::infinity();
    for (long i = -n; i <= n; ++i) {
        double c1 = grid(0, i);
        for (long j = -n; j <= n; ++j) {
            double c2 = grid(1, j);
            // 1D section in c3 is a convex parabola; the grid minimum sits at
            // the points bracketing its vertex (or at the ends).
            double a = q.K(2, 2);
            double bb = q.b[2] + q.K(0, 2) * c1 + q.K(1, 2) * c2;
            long k0 = -n, k1 = n;
            if (a > 0) {
                double v = (-bb / a - center[2]) / step;
                long kf = std::lround(std::floor(v));
                k0 = std::clamp(kf, -n, n);
                k1 = std::clamp(kf + 1, -n, n);
            } else if (bb != 0) {
                k0 = k1 = bb > 0 ? -n : n;
            } else {
                k0 = k1 = 0;
            }
            for (long k : {k0, k1}) {
                Vec3 c(c1, c2, grid(2, k));
                double val = q.q0 + 2.0 * q.b.dot(c) + c.dot(q.K * c);
                best = std::min(best, val);
            }
        }
    }
    return best;
}

double q2_isotropic_closed_form(double mu, double lambda, const Mat2& X) {
    Mat2 S = 0.5 * (X + X.transpose());
    return 2.0 * mu * S.squaredNorm() +
           (2.0 * mu * lambda / (2.0 * mu + lambda)) * S.trace() * S.trace();
}

} // namespace film
