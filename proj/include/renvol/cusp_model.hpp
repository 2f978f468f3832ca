#pragma once

// Closed-form model metrics and isometries for the degenerating solid-torus
// neighborhood of a pinching geodesic / rank-1 cusp.
//
// Conventions: L = (ell, nu, lambda) with multiplier q = e^{ell(1 + i nu)} and
// fixed points p_- = 0, p_+ = lambda*ell. Model chart coordinates (u, v, w)
// on (R/(1/2)Z)_w x H^2_{v+iu}, R = sqrt(u^2 + v^2 + ell^2), U = u/R.

#include <cmath>
#include <complex>
#include <stdexcept>

#include "renvol/metric_patch.hpp"
#include "renvol/moebius.hpp"
#include "renvol/numerics.hpp"

namespace renvol {

struct CuspParams {
    double ell = 0.0;     // translation length parameter, >= 0
    double nu = 0.0;      // twist ratio
    double lambda = 1.0;  // fixed-point separation ratio, > 0
    double delta = 0.1;   // model neighborhood size
    double Ncap = 10.0;   // bound for the admissible region

    cplx q() const { return std::exp(cplx(ell, ell * nu)); }

    void validate() const {
        if (!(ell >= 0.0 && ell <= 1.0)) throw std::invalid_argument("CuspParams: ell out of [0,1]");
        if (!(std::abs(nu) <= Ncap)) throw std::invalid_argument("CuspParams: |nu| > N");
        if (!(lambda >= 1.0 / Ncap && lambda <= Ncap))
            throw std::invalid_argument("CuspParams: lambda out of [1/N, N]");
        if (!(lambda * ell < delta)) throw std::invalid_argument("CuspParams: lambda*ell >= delta");
    }

    // the degenerating generator: loxodromic for ell > 0, parabolic z/(cz+1)
    // with c = (1 + i nu)/lambda at ell = 0
    MoebiusMap generator() const {
        if (ell > 0.0) return from_fixed_points(cplx(0), cplx(lambda * ell), q());
        cplx c = cplx(1.0, nu) / lambda;
        return MoebiusMap(1.0, 0.0, c, 1.0);
    }
};

// isometry m(q): (x,z) -> (|q| x, q z) of the half-space
inline HalfSpacePoint apply_mq(cplx q, const HalfSpacePoint& p) {
    return {std::abs(q) * p.x, q * p.z};
}

// ---------------------------------------------------------------------------
// model metrics

// g_L on (u, v, w), u > 0
inline MetricPatch3 metric_gL(const CuspParams& L) {
    const double ell = L.ell, nu = L.nu;
    MetricPatch3 m;
    m.id = "gL";
    m.domain = [](const Vec3& x) { return x(0) > 0.0; };
    m.g = [ell, nu](const Vec3& x) {
        const double u = x(0), v = x(1);
        if (u <= 0.0) throw std::domain_error("gL: u <= 0");
        const double R2 = u * u + v * v + ell * ell;
        Mat3 g;
        g << 1, 0, 2 * nu * u * v,
             0, 1, nu * (R2 - 2 * u * u),
             2 * nu * u * v, nu * (R2 - 2 * u * u),
             (1 + nu * nu) * R2 * R2 - 4 * nu * nu * ell * ell * u * u;
        return Mat3(g / (u * u));
    };
    m.g_inv = [ell, nu](const Vec3& x) {
        const double u = x(0), v = x(1);
        if (u <= 0.0) throw std::domain_error("gL: u <= 0");
        const double R2 = u * u + v * v + ell * ell;
        const double A = R2 - 2 * u * u;
        Mat3 gi;
        gi << R2 * R2 + 4 * nu * nu * u * u * v * v, 2 * nu * nu * u * v * A, -2 * nu * u * v,
              2 * nu * nu * u * v * A, R2 * R2 + nu * nu * A * A, -nu * A,
              -2 * nu * u * v, -nu * A, 1;
        return Mat3(gi * (u * u / (R2 * R2)));
    };
    return m;
}

inline MetricPatch3 dual_metric_gL(const CuspParams& L) {
    MetricPatch3 base = metric_gL(L);
    MetricPatch3 m;
    m.id = "gL_dual";
    m.domain = base.domain;
    m.g = base.g_inv;
    m.g_inv = base.g;
    return m;
}

// volume density of g_L in (u,v,w): dvol = R^2/u^3 du dv dw
inline double volume_density_gL(const CuspParams& L, double u, double v) {
    const double R2 = u * u + v * v + L.ell * L.ell;
    return R2 / (u * u * u);
}

// conformal-infinity metric h_L on (v, w) (Gaussian curvature -1):
// h_L = (1+nu^2) ( dv^2/(v^2+ell^2) + (v^2+ell^2)(1+nu^2) dw^2 + 2 nu dv dw )
inline MetricPatch2 boundary_metric_hL(const CuspParams& L) {
    const double ell = L.ell, nu = L.nu;
    MetricPatch2 m;
    m.id = "hL";
    m.domain = [ell](double v, double) { return ell > 0.0 || v != 0.0; };
    m.g = [ell, nu](double v, double) {
        const double s = v * v + ell * ell;
        const double f = 1 + nu * nu;
        Mat2 h;
        h << f / s, f * nu, f * nu, f * f * s;
        return h;
    };
    m.g_inv = [ell, nu](double v, double) {
        const double s = v * v + ell * ell;
        const double f = 1 + nu * nu;
        // inverse of [[f/s, f nu],[f nu, f^2 s]] (determinant f^2)
        Mat2 hi;
        hi << s, -nu / f, -nu / f, 1 / (f * f * s);
        return hi;
    };
    m.scal = [](double, double) { return -2.0; };
    return m;
}

// the unscaled boundary metric (U^2 g_L)|_{U=0} = h_ell (curvature -(1+nu^2)),
// the one induced by the defining function U itself
inline MetricPatch2 boundary_metric_hell(const CuspParams& L) {
    const double ell = L.ell, nu = L.nu;
    MetricPatch2 m;
    m.id = "hell";
    m.domain = [ell](double v, double) { return ell > 0.0 || v != 0.0; };
    m.g = [ell, nu](double v, double) {
        const double s = v * v + ell * ell;
        Mat2 h;
        h << 1 / s, nu, nu, (1 + nu * nu) * s;
        return h;
    };
    m.g_inv = [ell, nu](double v, double) {
        const double s = v * v + ell * ell;
        Mat2 hi;
        hi << (1 + nu * nu) * s, -nu, -nu, 1 / s;
        return hi;
    };
    m.scal = [nu](double, double) { return -2.0 * (1 + nu * nu); };
    return m;
}

// |d phi|^2 with respect to h_ell from the partials (phi_v, phi_w)
inline double grad_norm2_hell(const CuspParams& L, double v, double phi_v, double phi_w) {
    const double s = v * v + L.ell * L.ell;
    return (1 + L.nu * L.nu) * s * phi_v * phi_v + phi_w * phi_w / s - 2 * L.nu * phi_v * phi_w;
}

// ---------------------------------------------------------------------------
// blow-up coordinates

struct BlowupCoords {
    double U, V, R;
};

inline BlowupCoords blowup_coords(double u, double v, double ell) {
    const double R = std::sqrt(u * u + v * v + ell * ell);
    if (R <= 0.0) throw std::domain_error("blowup_coords: R = 0 (front face)");
    return {u / R, v / R, R};
}

inline std::pair<double, double> blowup_inverse(const BlowupCoords& b) {
    return {b.U * b.R, b.V * b.R};
}

// ---------------------------------------------------------------------------
// Theta_L : Poincare extension of theta(z) = z / (lambda ell - z)

inline MoebiusMap theta_L_map(const CuspParams& L) {
    if (L.ell <= 0.0) throw std::invalid_argument("theta_L: requires ell > 0");
    return MoebiusMap(1.0, 0.0, -1.0, L.lambda * L.ell);
}

inline HalfSpacePoint theta_L(const CuspParams& L, const HalfSpacePoint& p) {
    if (!(p.x > 0.0)) throw std::invalid_argument("theta_L: boundary point");
    return poincare_extension(theta_L_map(L), p);
}

// exact excluded half-ball B(e, rho) in the model (quotientLq)
inline double model_e(const CuspParams& L) {
    const double le = L.lambda * L.ell, d2 = L.delta * L.delta;
    return -1.0 - le * le / (d2 - le * le);
}

inline double model_rho(const CuspParams& L) {
    const double le = L.lambda * L.ell, d2 = L.delta * L.delta;
    return L.delta * le / std::abs(d2 - le * le);
}

// ---------------------------------------------------------------------------
// Upsilon_L : (x, z) -> (w, zeta' = v' + i u'), for ell > 0

struct CylinderPoint {
    double w;     // in the fundamental strip, deck shift w -> w + 1/2
    cplx zeta;    // v + i u with u > 0
};

inline CylinderPoint upsilon_L(const CuspParams& L, const HalfSpacePoint& p) {
    if (L.ell <= 0.0) throw std::invalid_argument("upsilon_L: requires ell > 0");
    const double r = std::sqrt(p.x * p.x + std::norm(p.z));
    const double wx = p.x / r, w1 = p.z.real() / r, w2 = p.z.imag() / r;
    if (w1 + 1.0 <= 1e-14) throw std::domain_error("upsilon_L: stereographic pole");
    const double uh = wx / (w1 + 1.0), vh = w2 / (w1 + 1.0);
    return {std::log(r) / (2.0 * L.ell), cplx(L.ell * vh, L.ell * uh)};
}

inline HalfSpacePoint upsilon_L_inverse(const CuspParams& L, const CylinderPoint& c) {
    if (L.ell <= 0.0) throw std::invalid_argument("upsilon_L_inverse: requires ell > 0");
    const double r = std::exp(2.0 * L.ell * c.w);
    const double uh = c.zeta.imag() / L.ell, vh = c.zeta.real() / L.ell;
    const double s2 = uh * uh + vh * vh;
    const double wx = 2 * uh / (1 + s2), w2 = 2 * vh / (1 + s2), w1 = (1 - s2) / (1 + s2);
    return {r * wx, cplx(r * w1, r * w2)};
}

// metric of the Upsilon_L model: (du'^2 + dv'^2 + (ell^2+u'^2+v'^2)^2 dw^2)/u'^2
inline MetricPatch3 metric_upsilon_model(double ell) {
    MetricPatch3 m;
    m.id = "upsilon_model";
    m.domain = [](const Vec3& x) { return x(0) > 0.0; };
    m.g = [ell](const Vec3& x) {
        const double u = x(0), v = x(1);
        const double R2 = ell * ell + u * u + v * v;
        Mat3 g = Mat3::Zero();
        g(0, 0) = 1;
        g(1, 1) = 1;
        g(2, 2) = R2 * R2;
        return Mat3(g / (u * u));
    };
    return m;
}

// ---------------------------------------------------------------------------
// Xi_L : hyperbolic rotation by -2 nu ell w centered at i ell (after rescale)

namespace detail {
// real Moebius (a z + b)/(c z + d) acting on the upper half-plane
inline cplx real_moebius(double a, double b, double c, double d, cplx z) {
    return (a * z + b) / (c * z + d);
}
}  // namespace detail

inline CylinderPoint xi_L(const CuspParams& L, const CylinderPoint& c) {
    const double ell = L.ell, nu = L.nu;
    if (ell == 0.0) {
        // limiting map zeta'/(nu w zeta' + 1)
        return {c.w, c.zeta / (nu * c.w * c.zeta + 1.0)};
    }
    const double t = nu * ell * c.w;
    const double co = std::cos(t), si = std::sin(t);
    return {c.w, detail::real_moebius(co, -ell * si, si / ell, co, c.zeta)};
}

inline CylinderPoint xi_L_inverse(const CuspParams& L, const CylinderPoint& c) {
    const double ell = L.ell, nu = L.nu;
    if (ell == 0.0) {
        return {c.w, c.zeta / (-nu * c.w * c.zeta + 1.0)};
    }
    const double t = nu * ell * c.w;
    const double co = std::cos(t), si = std::sin(t);
    return {c.w, detail::real_moebius(co, ell * si, -si / ell, co, c.zeta)};
}

inline CylinderPoint phi_L(const CuspParams& L, const HalfSpacePoint& p) {
    return xi_L(L, upsilon_L(L, p));
}

// deck transformation of the Upsilon_L model (gamma_q): conjugate of m(q)
inline CylinderPoint gamma_q(const CuspParams& L, const CylinderPoint& c) {
    const double ell = L.ell, nu = L.nu;
    const double t = 0.5 * nu * ell;
    const double co = std::cos(t), si = std::sin(t);
    return {c.w + 0.5, detail::real_moebius(co, ell * si, -si / ell, co, c.zeta)};
}

// ---------------------------------------------------------------------------
// straightening isometry (ell = 0): g_0 with twist nu -> standard cusp model

struct Triple {
    double u, v, w;
};

inline Triple straighten(double nu, const Triple& p) {
    const double rho2 = p.u * p.u + p.v * p.v;
    if (rho2 <= 0.0) throw std::domain_error("straighten: origin");
    const double f = 1 + nu * nu;
    const double den = p.u * p.u * f + p.v * p.v;
    const double fac = rho2 / den;
    return {std::pow(f, 1.5) * p.u * fac, f * p.v * fac,
            p.w - (nu / f) * p.v / rho2};
}

inline Triple straighten_inverse(double nu, const Triple& p) {
    const double f = 1 + nu * nu;
    const double rp2 = p.u * p.u + p.v * p.v;
    if (rp2 <= 0.0) throw std::domain_error("straighten_inverse: origin");
    const double xp = p.u / rp2, yp = -p.v / rp2;
    const double x = xp * std::sqrt(f), y = yp * f;
    const double w = p.w - nu * y / f;
    const double r2 = x * x + y * y;
    return {x / r2, -y / r2, w};
}

// the twisted ell=0 model metric (model1g0) equals gL at ell=0; the standard
// cusp model (model2g0):
inline MetricPatch3 metric_standard_cusp() {
    MetricPatch3 m;
    m.id = "standard_cusp";
    m.domain = [](const Vec3& x) { return x(0) > 0.0; };
    m.g = [](const Vec3& x) {
        const double u = x(0), v = x(1);
        const double s = u * u + v * v;
        Mat3 g = Mat3::Zero();
        g(0, 0) = 1;
        g(1, 1) = 1;
        g(2, 2) = s * s;
        return Mat3(g / (u * u));
    };
    return m;
}

// ---------------------------------------------------------------------------
// the conformal metric gbar = U^2 g_ell in coordinates (U, v, w); smooth at
// U = 0, used as the "generic chart" presentation of the cusp model
inline MetricPatch3 metric_gbar_Uvw(const CuspParams& L) {
    const double ell = L.ell, nu = L.nu;
    MetricPatch3 m;
    m.id = "gbar_Uvw";
    m.domain = [ell](const Vec3& x) {
        return x(0) >= 0.0 && x(0) < 1.0 && (ell > 0.0 || x(1) != 0.0);
    };
    m.g = [ell, nu](const Vec3& x) {
        const double U = x(0), v = x(1);
        const double s = v * v + ell * ell;
        const double mU2 = 1 - U * U;
        Mat3 g;
        g(0, 0) = 1.0 / (mU2 * mU2);
        g(0, 1) = U * v / (mU2 * s);
        g(1, 1) = U * U * v * v / (s * s) + mU2 / s;
        g(0, 2) = 2 * nu * v * U / mU2;
        g(2, 2) = (1 + nu * nu) * s / mU2 - 4 * ell * ell * nu * nu * U * U;
        g(1, 2) = nu * (2 * v * v * U * U / s + (1 - 2 * U * U));
        g(1, 0) = g(0, 1);
        g(2, 0) = g(0, 2);
        g(2, 1) = g(1, 2);
        return g;
    };
    return m;
}

// ---------------------------------------------------------------------------
// model neighborhood boundary (W-region data): the disk |zeta - v_L(w)| <
// tau_L(w) that Phi_L maps the Theta_L model region onto

struct WRegion {
    double v_center;
    double tau;
};

inline WRegion w_region(const CuspParams& L, double w) {
    if (L.ell <= 0.0) {
        // ell -> 0 limit: r_lambda(w) = (lambda^2/(4 delta^2) - w^2)^{-1/2}
        const double q = L.lambda * L.lambda / (4 * L.delta * L.delta) - w * w;
        if (q <= 0.0) throw std::domain_error("w_region: delta too large for lambda");
        const double r = 1.0 / std::sqrt(q);
        const double vp = r / (1.0 - L.nu * w * r);
        const double vm = -r / (1.0 + L.nu * w * r);
        return {0.5 * (vp + vm), 0.5 * (vp - vm)};
    }
    const double ell = L.ell, nu = L.nu;
    const double e = model_e(L), rho = model_rho(L);
    const double E2 = std::exp(2 * ell * w), E4 = E2 * E2;
    const double kappa = (e * e + E4 - rho * rho) / (2 * e);
    const double rq = ell * std::sqrt((E2 - kappa) * E2 / (E2 + kappa));
    const double t = nu * ell * w;
    const double co = std::cos(t), si = std::sin(t);
    const double vp = (rq * co + ell * si) / (-rq * si / ell + co);
    const double vm = (-rq * co + ell * si) / (rq * si / ell + co);
    return {0.5 * (vp + vm), 0.5 * (vp - vm)};
}

}  // namespace renvol
