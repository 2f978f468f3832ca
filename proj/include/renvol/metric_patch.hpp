#pragma once

// Coordinate-chart metric evaluators and finite-difference curvature.

#include <array>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "renvol/numerics.hpp"

namespace renvol {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

// 2D chart with a metric evaluator. The dual evaluator defaults to matrix
// inversion; scal() to finite-difference Gaussian curvature (Scal = 2K).
struct MetricPatch2 {
    std::string id;
    std::function<Mat2(double, double)> g;
    std::function<Mat2(double, double)> g_inv;
    std::function<double(double, double)> scal;
    std::function<bool(double, double)> domain = [](double, double) { return true; };

    Mat2 eval(double x1, double x2) const { return g(x1, x2); }
    Mat2 eval_inv(double x1, double x2) const {
        if (g_inv) return g_inv(x1, x2);
        return g(x1, x2).inverse();
    }
};

struct MetricPatch3 {
    std::string id;
    std::function<Mat3(const Vec3&)> g;
    std::function<Mat3(const Vec3&)> g_inv;
    std::function<bool(const Vec3&)> domain = [](const Vec3&) { return true; };

    Mat3 eval(const Vec3& x) const { return g(x); }
    Mat3 eval_inv(const Vec3& x) const {
        if (g_inv) return g_inv(x);
        return g(x).inverse();
    }
};

// Jacobian of a map R^3 -> R^3 by Richardson central differences.
template <class F>
Mat3 numeric_jacobian3(F&& f, const Vec3& x, double h = 1e-5) {
    Mat3 J;
    for (int k = 0; k < 3; ++k) {
        for (int i = 0; i < 3; ++i) {
            J(i, k) = deriv1([&](double t) {
                Vec3 y = x;
                y(k) = t;
                return f(y)(i);
            }, x(k), h);
        }
    }
    return J;
}

// pullback of a metric under a map: J^T g(f(x)) J
template <class F>
Mat3 pullback_metric(const MetricPatch3& target, F&& f, const Vec3& x, double h = 1e-5) {
    Mat3 J = numeric_jacobian3(f, x, h);
    return J.transpose() * target.eval(f(x)) * J;
}

// Gaussian curvature of a 2D metric by the Brioschi formula with
// Richardson-extrapolated finite differences.
inline double gaussian_curvature(const MetricPatch2& h, double x1, double x2, double step = 3e-3) {
    auto comp = [&](int i, int j, double a, double b) { return h.eval(a, b)(i, j); };
    auto d1 = [&](int i, int j, int dir) {
        if (dir == 0) return deriv1([&](double t) { return comp(i, j, t, x2); }, x1, step);
        return deriv1([&](double t) { return comp(i, j, x1, t); }, x2, step);
    };
    auto d2 = [&](int i, int j, int dir) {
        if (dir == 0) return deriv2([&](double t) { return comp(i, j, t, x2); }, x1, step);
        return deriv2([&](double t) { return comp(i, j, x1, t); }, x2, step);
    };
    auto d11 = [&](int i, int j) {  // mixed d^2/dx1 dx2
        return deriv1([&](double s) {
            return deriv1([&](double t) { return comp(i, j, t, s); }, x1, step);
        }, x2, step);
    };
    Mat2 g0 = h.eval(x1, x2);
    double E = g0(0, 0), F = g0(0, 1), G = g0(1, 1);
    double E1 = d1(0, 0, 0), E2 = d1(0, 0, 1);
    double F1 = d1(0, 1, 0), F2 = d1(0, 1, 1);
    double G1 = d1(1, 1, 0), G2 = d1(1, 1, 1);
    double E22 = d2(0, 0, 1), G11 = d2(1, 1, 0), F12 = d11(0, 1);

    Eigen::Matrix3d M1, M2;
    M1 << -0.5 * E22 + F12 - 0.5 * G11, 0.5 * E1, F1 - 0.5 * E2,
          F2 - 0.5 * G1, E, F,
          0.5 * G2, F, G;
    M2 << 0.0, 0.5 * E2, 0.5 * G1,
          0.5 * E2, E, F,
          0.5 * G1, F, G;
    double det = E * G - F * F;
    return (M1.determinant() - M2.determinant()) / (det * det);
}

// Christoffel symbols Gamma^a_{bc} of a 3D metric at x by finite differences.
inline std::array<Mat3, 3> christoffel(const MetricPatch3& m, const Vec3& x, double step = 1e-3) {
    std::array<Mat3, 3> dg;  // dg[k] = d g / d x_k
    for (int k = 0; k < 3; ++k) {
        dg[static_cast<std::size_t>(k)] = Mat3::Zero();
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                double val = deriv1([&](double t) {
                    Vec3 y = x;
                    y(k) = t;
                    return m.eval(y)(i, j);
                }, x(k), step);
                dg[static_cast<std::size_t>(k)](i, j) = val;
                dg[static_cast<std::size_t>(k)](j, i) = val;
            }
    }
    Mat3 gi = m.eval_inv(x);
    std::array<Mat3, 3> Gam;  // Gam[a](b,c)
    for (int a = 0; a < 3; ++a) {
        Gam[static_cast<std::size_t>(a)] = Mat3::Zero();
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                double s = 0;
                for (int d = 0; d < 3; ++d)
                    s += gi(a, d) * (dg[static_cast<std::size_t>(c)](d, b) +
                                     dg[static_cast<std::size_t>(b)](d, c) -
                                     dg[static_cast<std::size_t>(d)](b, c));
                Gam[static_cast<std::size_t>(a)](b, c) = 0.5 * s;
            }
    }
    return Gam;
}

// Coordinate-plane sectional curvatures K(e_i, e_j) of a 3D metric,
// K = R_{ijij} / (g_ii g_jj - g_ij^2), R via finite differences of Gamma.
inline std::array<double, 3> sectional_curvatures(const MetricPatch3& m, const Vec3& x,
                                                  double step_gamma = 3e-3) {
    // dGam[k][a](b,c) = d_k Gamma^a_{bc}
    std::array<std::array<Mat3, 3>, 3> dGam;
    for (int k = 0; k < 3; ++k) {
        auto dplus  = [&](double t) { Vec3 y = x; y(k) = t; return christoffel(m, y); };
        // 4th-order central difference in direction k on each entry
        double h = step_gamma;
        auto gm2 = dplus(x(k) - 2 * h), gm1 = dplus(x(k) - h);
        auto gp1 = dplus(x(k) + h), gp2 = dplus(x(k) + 2 * h);
        for (int a = 0; a < 3; ++a)
            dGam[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] =
                (gm2[static_cast<std::size_t>(a)] - 8 * gm1[static_cast<std::size_t>(a)] +
                 8 * gp1[static_cast<std::size_t>(a)] - gp2[static_cast<std::size_t>(a)]) /
                (12 * h);
    }
    auto Gam = christoffel(m, x);
    Mat3 g0 = m.eval(x);
    auto Rcomp = [&](int a, int b, int c, int d) {
        // R^e_{bcd} = d_c Gam^e_{db} - d_d Gam^e_{cb} + Gam^e_{cf}Gam^f_{db} - Gam^e_{df}Gam^f_{cb}
        double s = 0;
        for (int e = 0; e < 3; ++e) {
            double t = dGam[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)](d, b) -
                       dGam[static_cast<std::size_t>(d)][static_cast<std::size_t>(e)](c, b);
            for (int f = 0; f < 3; ++f)
                t += Gam[static_cast<std::size_t>(e)](c, f) * Gam[static_cast<std::size_t>(f)](d, b) -
                     Gam[static_cast<std::size_t>(e)](d, f) * Gam[static_cast<std::size_t>(f)](c, b);
            s += g0(a, e) * t;
        }
        return s;  // R_{abcd}
    };
    std::array<double, 3> K{};
    int idx = 0;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
        double R = Rcomp(i, j, i, j);
        double denom = g0(i, i) * g0(j, j) - g0(i, j) * g0(i, j);
        K[static_cast<std::size_t>(idx++)] = R / denom;
    }
    return K;
}

}  // namespace renvol
