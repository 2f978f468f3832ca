#pragma once

// PSL2(C) acting on the boundary sphere and on the upper half-space model of
// hyperbolic 3-space: classification, fixed points, multipliers, canonical
// circles, Poincare extension.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

#include "renvol/numerics.hpp"

namespace renvol {

struct Circle {
    cplx center;
    double radius = 0.0;
};

// Point on the boundary sphere C u {inf}.
struct BoundaryPoint {
    cplx z{0.0, 0.0};
    bool at_inf = false;

    static BoundaryPoint infinity() { return {cplx{0, 0}, true}; }
    static BoundaryPoint finite(cplx w) { return {w, false}; }
};

// Point of the half-space model R^+_x x C_z.
struct HalfSpacePoint {
    double x = 1.0;  // vertical height, > 0
    cplx z{0.0, 0.0};
};

inline double hyperbolic_distance(const HalfSpacePoint& p, const HalfSpacePoint& q) {
    double num = std::norm(p.z - q.z) + (p.x - q.x) * (p.x - q.x);
    double c = 1.0 + num / (2.0 * p.x * q.x);
    return std::acosh(c);
}

enum class MoebiusClass { identity, parabolic, elliptic, loxodromic };

inline const char* to_string(MoebiusClass c) {
    switch (c) {
        case MoebiusClass::identity: return "identity";
        case MoebiusClass::parabolic: return "parabolic";
        case MoebiusClass::elliptic: return "elliptic";
        case MoebiusClass::loxodromic: return "loxodromic";
    }
    return "?";
}

// Multiplier q = e^{l + i a} of a loxodromic map, |q| > 1.
struct Multiplier {
    double l = 0.0;      // log-modulus, > 0
    double alpha = 0.0;  // holonomy angle in [0, 2pi)

    cplx q() const { return std::exp(cplx(l, alpha)); }
    double twist_ratio() const { return alpha / l; }  // nu
};

// z -> (az+b)/(cz+d), normalized to ad-bc = 1; M and -M represent the same map.
struct MoebiusMap {
    cplx a{1}, b{0}, c{0}, d{1};

    MoebiusMap() = default;
    MoebiusMap(cplx a_, cplx b_, cplx c_, cplx d_) : a(a_), b(b_), c(c_), d(d_) { normalize(); }

    void normalize() {
        cplx det = a * d - b * c;
        if (std::abs(det) < 1e-300) throw std::invalid_argument("MoebiusMap: singular matrix");
        cplx s = std::sqrt(det);
        a /= s; b /= s; c /= s; d /= s;
    }

    cplx tr() const { return a + d; }
    cplx tr2() const { cplx t = a + d; return t * t; }

    static MoebiusMap identity_map() { return {}; }
    static MoebiusMap dilation(cplx q) {
        cplx s = std::sqrt(q);
        return MoebiusMap(s, 0, 0, 1.0 / s);
    }
    static MoebiusMap translation(cplx t) { return MoebiusMap(1, t, 0, 1); }

    MoebiusMap inverse() const { return MoebiusMap(d, -b, -c, a); }

    friend MoebiusMap operator*(const MoebiusMap& A, const MoebiusMap& B) {
        return MoebiusMap(A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d,
                          A.c * B.a + A.d * B.c, A.c * B.b + A.d * B.d);
    }

    cplx operator()(cplx z) const {
        cplx den = c * z + d;
        return (a * z + b) / den;
    }

    BoundaryPoint operator()(const BoundaryPoint& p) const {
        if (p.at_inf) {
            if (std::abs(c) == 0) return BoundaryPoint::infinity();
            return BoundaryPoint::finite(a / c);
        }
        cplx den = c * p.z + d;
        if (std::abs(den) < 1e-14 * (std::abs(c * p.z) + std::abs(d) + 1))
            return BoundaryPoint::infinity();
        return BoundaryPoint::finite((a * p.z + b) / den);
    }

    // derivative (az+b)/(cz+d))' = 1/(cz+d)^2 for det 1
    cplx deriv(cplx z) const {
        cplx den = c * z + d;
        return 1.0 / (den * den);
    }

    // max entrywise distance to +/-N, whichever is smaller
    double dist_up_to_sign(const MoebiusMap& N) const {
        auto ent = [&](int sgn) {
            double s = sgn;
            return std::max({std::abs(a - s * N.a), std::abs(b - s * N.b),
                             std::abs(c - s * N.c), std::abs(d - s * N.d)});
        };
        return std::min(ent(+1), ent(-1));
    }

    bool same_up_to_sign(const MoebiusMap& N, double tol = 1e-10) const {
        return dist_up_to_sign(N) < tol;
    }
};

inline MoebiusClass classify(const MoebiusMap& M, double tol = 1e-10) {
    if (M.same_up_to_sign(MoebiusMap::identity_map(), 1e-12)) return MoebiusClass::identity;
    cplx t2 = M.tr2();
    if (std::abs(t2 - 4.0) < tol) return MoebiusClass::parabolic;
    if (std::abs(t2.imag()) < tol && t2.real() >= 0.0 && t2.real() < 4.0)
        return MoebiusClass::elliptic;
    return MoebiusClass::loxodromic;
}

// sqrt with the paper's determination: principal branch on C \ R_-, and
// +i sqrt|x| on the cut (std::sqrt already does exactly this).
inline cplx sqrt_cut(cplx z) { return std::sqrt(z); }

struct FixedPoints {
    BoundaryPoint attracting;  // p_+
    BoundaryPoint repelling;   // p_-
};

// Fixed points of a loxodromic or parabolic map; p_+ attracting, p_- repelling
// (|M'(p_+)| < 1 < |M'(p_-)|). Parabolic maps return the double point twice.
inline FixedPoints fixed_points(const MoebiusMap& M) {
    MoebiusClass cl = classify(M);
    if (cl == MoebiusClass::identity || cl == MoebiusClass::elliptic)
        throw std::invalid_argument("fixed_points: requires loxodromic or parabolic input");
    if (std::abs(M.c) < 1e-14) {
        // infinity is fixed
        if (cl == MoebiusClass::parabolic) {
            return {BoundaryPoint::infinity(), BoundaryPoint::infinity()};
        }
        cplx pfin = M.b / (M.d - M.a);
        // multiplier at infinity is (a/d); |a/d| > 1 -> infinity attracting
        if (std::abs(M.a) > std::abs(M.d))
            return {BoundaryPoint::infinity(), BoundaryPoint::finite(pfin)};
        return {BoundaryPoint::finite(pfin), BoundaryPoint::infinity()};
    }
    if (cl == MoebiusClass::parabolic) {
        cplx t = M.tr();
        // normalize representative so tr = +2 before using (a-d)/2c
        cplx sgn = (std::abs(t - 2.0) < std::abs(t + 2.0)) ? cplx(1) : cplx(-1);
        cplx p = (sgn * M.a - sgn * M.d) / (2.0 * sgn * M.c);
        return {BoundaryPoint::finite(p), BoundaryPoint::finite(p)};
    }
    cplx disc = sqrt_cut(M.tr2() - 4.0);
    cplx p1 = (M.a - M.d + disc) / (2.0 * M.c);
    cplx p2 = (M.a - M.d - disc) / (2.0 * M.c);
    double d1 = std::abs(M.deriv(p1));
    if (d1 < 1.0) return {BoundaryPoint::finite(p1), BoundaryPoint::finite(p2)};
    return {BoundaryPoint::finite(p2), BoundaryPoint::finite(p1)};
}

// Multiplier of a loxodromic map from tr(M) = q^{1/2} + q^{-1/2}.
inline Multiplier multiplier(const MoebiusMap& M) {
    if (classify(M) != MoebiusClass::loxodromic)
        throw std::invalid_argument("multiplier: requires loxodromic input");
    cplx t2 = M.tr2();
    cplx q = 0.5 * (t2 - 2.0 + sqrt_cut(t2 * (t2 - 4.0)));
    if (std::abs(q) < 1.0) q = 1.0 / q;
    Multiplier m;
    m.l = std::log(std::abs(q));
    m.alpha = std::arg(q);
    if (m.alpha < 0) m.alpha += 2 * kPi;
    return m;
}

// Euclidean distance between the two fixed points, |tr^2-4|^{1/2}/|c|.
// c = 0 means one fixed point is at infinity: returns +inf.
inline double fixed_point_distance(const MoebiusMap& M) {
    if (std::abs(M.c) < 1e-14) return std::numeric_limits<double>::infinity();
    return std::sqrt(std::abs(M.tr2() - 4.0)) / std::abs(M.c);
}

// Map sending (p_-, p_+) -> (0, inf):  theta(z) = -(z - p_-)/(z - p_+).
inline MoebiusMap normalizing_map(cplx p_minus, cplx p_plus) {
    return MoebiusMap(-1.0, p_minus, 1.0, -p_plus);
}

// Loxodromic map with prescribed fixed points and multiplier:
// theta^{-1} m(q) theta.
inline MoebiusMap from_fixed_points(cplx p_minus, cplx p_plus, cplx q) {
    MoebiusMap th = normalizing_map(p_minus, p_plus);
    return th.inverse() * MoebiusMap::dilation(q) * th;
}

// Canonical circles (tilde C_-, tilde C_+) of a loxodromic map with finite
// fixed points: common radius |p_+ - p_-| / (2 sinh(l/2)) and centers
// z_-+ = p_+- + (p_-+ - p_+-)/(1 - e^{-l}).
struct CanonicalCircles {
    Circle minus;  // paired with the repelling side
    Circle plus;
};

inline CanonicalCircles canonical_circles(const MoebiusMap& M) {
    if (classify(M) != MoebiusClass::loxodromic)
        throw std::invalid_argument("canonical_circles: requires loxodromic input");
    if (std::abs(M.c) < 1e-14)
        throw std::invalid_argument("canonical_circles: fixed point at infinity");
    FixedPoints fp = fixed_points(M);
    Multiplier m = multiplier(M);
    cplx pp = fp.attracting.z, pm = fp.repelling.z;
    double r = std::abs(pp - pm) / (2.0 * std::sinh(0.5 * m.l));
    double e = std::exp(-m.l);
    cplx z_minus = pp + (pm - pp) / (1.0 - e);
    cplx z_plus = pm + (pp - pm) / (1.0 - e);
    return {Circle{z_minus, r}, Circle{z_plus, r}};
}

// Image of a circle under a Moebius map, exact. Requires the pole -d/c to lie
// off the circle (otherwise the image is a line).
inline Circle map_circle(const MoebiusMap& M, const Circle& C) {
    if (std::abs(M.c) < 1e-14) {
        // affine map z -> (a/d) z + b/d
        cplx s = M.a / M.d;
        return {s * C.center + M.b / M.d, std::abs(s) * C.radius};
    }
    // M(z) = a/c - (1/c^2) / (z + d/c)
    cplx pole = -M.d / M.c;
    cplx w = C.center - pole;  // circle |z - w| = r around origin-shifted pole
    double nrm = std::norm(w) - C.radius * C.radius;
    if (std::abs(nrm) < 1e-14 * std::norm(w))
        throw std::invalid_argument("map_circle: pole on the circle");
    // inversion 1/z of circle |z - w| = r: center conj(w)/nrm, radius r/|nrm|
    cplx ic = std::conj(w) / nrm;
    double ir = C.radius / std::abs(nrm);
    cplx f = -1.0 / (M.c * M.c);
    return {M.a / M.c + f * ic, std::abs(f) * ir};
}

// Poincare extension of M to the upper half-space.
inline HalfSpacePoint poincare_extension(const MoebiusMap& M, const HalfSpacePoint& p) {
    cplx den = M.c * p.z + M.d;
    double D = std::norm(den) + std::norm(M.c) * p.x * p.x;
    cplx znew = ((M.a * p.z + M.b) * std::conj(den) + M.a * std::conj(M.c) * p.x * p.x) / D;
    return {p.x / D, znew};
}

}  // namespace renvol
