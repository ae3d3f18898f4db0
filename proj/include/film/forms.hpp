#pragma once

#include "film/types.hpp"

namespace film {

/// Frame-indifferent stored energy density with a single well at SO(3) and
/// quadratic growth. Two builtin families:
///   - squared_distance:  W(X) = dist^2(X, SO(3))
///   - isotropic(mu,lambda): W(X) = mu dist^2(X,SO(3)) + (lambda/2) q(det X - 1)
///     with q(u) = u^2/(1+u^2), so that D^2 W(Id) is the isotropic elasticity
///     tensor 2 mu |sym X|^2 + lambda (tr X)^2 while keeping quadratic growth.
class ElasticDensity {
public:
    enum class Family { SquaredDistance, Isotropic };

    static ElasticDensity squared_distance();
    static ElasticDensity isotropic(double mu, double lambda);

    double operator()(const Mat3& X) const;

    Family family() const { return family_; }
    double mu() const { return mu_; }
    double lambda() const { return lambda_; }

    /// Growth constants with c dist^2 <= W <= C (1 + |X|^2).
    double growth_lower() const;
    double growth_upper() const;

private:
    Family family_ = Family::SquaredDistance;
    double mu_ = 1.0, lambda_ = 0.0;
};

/// Positive semidefinite quadratic form on (symmetric) 3x3 matrices, stored
/// as a 6x6 Gram matrix in the Mandel basis (11, 22, 33, 23, 13, 12 with the
/// off-diagonal basis matrices normalized by 1/sqrt(2)). Full matrices enter
/// through symmetrization, which realizes linear frame indifference.
class QuadraticForm3 {
public:
    QuadraticForm3() { gram_.setZero(); }
    explicit QuadraticForm3(const Mat6& gram);

    /// Exact Gram matrix of 2 mu |sym X|^2 + lambda (tr X)^2.
    static QuadraticForm3 isotropic(double mu, double lambda);

    double operator()(const Mat3& X) const { return vec(sym(X)).dot(gram_ * vec(sym(X))); }
    double bilinear(const Mat3& X, const Mat3& Y) const {
        return vec(sym(X)).dot(gram_ * vec(sym(Y)));
    }

    const Mat6& gram() const { return gram_; }
    double min_eigenvalue() const;
    bool positive_semidefinite(double tol = 1e-10) const { return min_eigenvalue() >= -tol; }

    /// Mandel coordinates of a symmetric matrix.
    static Vec6 vec(const Mat3& S);

private:
    Mat6 gram_;
};

/// D^2 W(Id) by central second differences with step eta on the 9 matrix
/// directions (one Richardson extrapolation), symmetrized into a Gram matrix.
QuadraticForm3 hessian_at_identity(const ElasticDensity& W, double eta = 1e-4);

struct Q2Result {
    double value = 0.0;
    Vec3 argmin_c = Vec3::Zero();
};

/// Completion of a symmetric 2x2 block X with third column (c', c3) and zero
/// bottom row, as it enters the plate relaxation.
Mat3 q2_completion(const Mat2& X, const Vec3& c);

/// Relaxation over the third column: min_c Q3 of the completed matrix,
/// solved through the 3x3 stationarity system (minimum-norm c on
/// rank-deficient systems). Throws "form not PSD" on negative curvature.
Q2Result q2_relax(const QuadraticForm3& Q3, const Mat2& X);

/// Exhaustive minimum of Q3 over the c-grid center + [-radius, radius]^3
/// with the given step. The form is quadratic in c by construction, so each
/// (c1,c2)-column is resolved exactly at its bracketing grid points; the
/// result equals the full triple-loop scan.
double q2_relax_bruteforce(const QuadraticForm3& Q3, const Mat2& X, double radius,
                           double step, const Vec3& center = Vec3::Zero());

/// Closed-form isotropic relaxation 2 mu |sym X|^2 + (2 mu lambda/(2 mu + lambda)) (tr X)^2.
double q2_isotropic_closed_form(double mu, double lambda, const Mat2& X);

} // namespace film
