#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace renvol {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// summation

// Pairwise summation: deterministic and O(eps log n) error regardless of
// evaluation order of the inputs.
inline double pairwise_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t m = n / 2;
    return pairwise_sum(x.subspan(0, m)) + pairwise_sum(x.subspan(m));
}

inline double pairwise_sum(const std::vector<double>& x) {
    return pairwise_sum(std::span<const double>(x.data(), x.size()));
}

// ---------------------------------------------------------------------------
// finite differences (Richardson-extrapolated central stencils)

// First derivative, 4th-order 5-point stencil extrapolated to 6th order.
template <class F>
double deriv1(F&& f, double x, double h) {
    auto d4 = [&](double hh) {
        return (f(x - 2 * hh) - 8 * f(x - hh) + 8 * f(x + hh) - f(x + 2 * hh)) / (12 * hh);
    };
    const double a = d4(h), b = d4(h / 2);
    return (16 * b - a) / 15;
}

// Second derivative, 4th-order stencil extrapolated to 6th order.
template <class F>
double deriv2(F&& f, double x, double h) {
    auto d4 = [&](double hh) {
        return (-f(x - 2 * hh) + 16 * f(x - hh) - 30 * f(x) + 16 * f(x + hh) - f(x + 2 * hh)) /
               (12 * hh * hh);
    };
    const double a = d4(h), b = d4(h / 2);
    return (16 * b - a) / 15;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes by Newton iteration on P_n; cached per order.
inline const GaussRule& gauss_rule(int n) {
    static thread_local std::vector<GaussRule> cache(65);
    if (n < 1 || n > 64) throw std::invalid_argument("gauss_rule: order out of range");
    GaussRule& r = cache[static_cast<std::size_t>(n)];
    if (!r.nodes.empty()) return r;
    r.nodes.resize(static_cast<std::size_t>(n));
    r.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
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
        r.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        r.weights[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

template <class F>
double gauss_integrate(F&& f, double a, double b, int n = 16) {
    const GaussRule& r = gauss_rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::vector<double> terms(r.nodes.size());
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        terms[i] = r.weights[i] * f(mid + half * r.nodes[i]);
    return half * pairwise_sum(terms);
}

// Integrate over consecutive panels [edges[0], edges[1]], ...
template <class F>
double gauss_integrate_panels(F&& f, std::span<const double> edges, int n = 16) {
    std::vector<double> parts;
    parts.reserve(edges.size());
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        parts.push_back(gauss_integrate(f, edges[i], edges[i + 1], n));
    return pairwise_sum(parts);
}

// Geometrically graded panel edges from a down to edge eps0 (a > b >= 0),
// refining toward b. Used for integrands with log-type behavior at b.
inline std::vector<double> graded_edges(double b, double a, int levels, double ratio = 0.5) {
    std::vector<double> e;
    e.push_back(a);
    double len = a - b;
    for (int k = 1; k <= levels; ++k) {
        len *= ratio;
        e.push_back(b + len);
    }
    e.push_back(b);
    std::reverse(e.begin(), e.end());
    return e;
}

// Periodic trapezoid rule on [0, period): spectrally accurate for smooth
// periodic integrands.
template <class F>
double trapezoid_periodic(F&& f, double period, int n) {
    std::vector<double> terms(static_cast<std::size_t>(n));
    const double h = period / n;
    for (int i = 0; i < n; ++i) terms[static_cast<std::size_t>(i)] = f(i * h);
    return h * pairwise_sum(terms);
}

// ---------------------------------------------------------------------------
// least squares

struct LsqFit {
    Eigen::VectorXd coeffs;
    double residual = 0.0;   // rms residual
    double cond = 0.0;       // condition estimate of the scaled design matrix
};

// Column-scaled least squares A c = y.
inline LsqFit lsq_fit(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
    Eigen::VectorXd scale(A.cols());
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
        double s = A.col(j).norm();
        scale(j) = (s > 0) ? s : 1.0;
    }
    Eigen::MatrixXd As = A * scale.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd cs = svd.solve(y);
    LsqFit out;
    out.coeffs = cs.cwiseQuotient(scale);
    out.residual = std::sqrt((A * out.coeffs - y).squaredNorm() / std::max<Eigen::Index>(1, y.size()));
    const auto& sv = svd.singularValues();
    out.cond = sv(0) / sv(sv.size() - 1);
    return out;
}

// ---------------------------------------------------------------------------
// scalar root finding

// Safeguarded Newton: falls back to bisection on a bracketing interval.
template <class F, class DF>
double newton_bisect(F&& f, DF&& df, double lo, double hi, double x0, double tol = 1e-14,
                     int maxit = 100) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0) return lo;
    if (fhi == 0) return hi;
    if (flo * fhi > 0) throw std::runtime_error("newton_bisect: root not bracketed");
    double x = std::clamp(x0, lo, hi);
    for (int it = 0; it < maxit; ++it) {
        double fx = f(x);
        if (std::abs(fx) == 0) return x;
        if ((fx < 0) == (flo < 0)) lo = x; else hi = x;
        double d = df(x);
        double step = (d != 0) ? fx / d : std::numeric_limits<double>::infinity();
        double xn = x - step;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
        if (std::abs(xn - x) < tol * (1 + std::abs(x))) return xn;
        x = xn;
    }
    return x;
}

// ---------------------------------------------------------------------------
// small random helpers (fixed-seed reproducibility)

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    double uniform(double a, double b) {
        return a + (b - a) * dist_(eng_);
    }
    cplx disk(double radius) {
        double r = radius * std::sqrt(dist_(eng_));
        double t = 2 * kPi * dist_(eng_);
        return {r * std::cos(t), r * std::sin(t)};
    }
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    std::uniform_real_distribution<double> dist_{0.0, 1.0};
};

}  // namespace renvol
