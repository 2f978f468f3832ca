#include <catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "renvol/moebius.hpp"
#include "renvol/numerics.hpp"

using namespace renvol;
using Catch::Approx;

namespace {

MoebiusMap random_loxodromic(Rng& rng) {
    // random fixed points and multiplier with |q| in (1.1, 8)
    cplx pm = rng.disk(3.0), pp = rng.disk(3.0);
    while (std::abs(pp - pm) < 0.2) pp = rng.disk(3.0);
    double l = rng.uniform(0.1, 2.0);
    double al = rng.uniform(0.0, 2 * kPi);
    return from_fixed_points(pm, pp, std::exp(cplx(l, al)));
}

}  // namespace

TEST_CASE("classification") {
    CHECK(classify(MoebiusMap::identity_map()) == MoebiusClass::identity);
    CHECK(classify(MoebiusMap(1, 1, 0, 1)) == MoebiusClass::parabolic);
    CHECK(classify(MoebiusMap(2, 1, 1, 1)) == MoebiusClass::loxodromic);  // tr^2 = 9
    // rotation z -> e^{i t} z is elliptic
    cplx r = std::exp(cplx(0, 0.7));
    CHECK(classify(MoebiusMap::dilation(r)) == MoebiusClass::elliptic);
    CHECK(classify(MoebiusMap::dilation(cplx(4, 0))) == MoebiusClass::loxodromic);
}

TEST_CASE("normalization and sign equivalence") {
    MoebiusMap M(4, 2, 2, 2);  // det 4 -> normalized
    CHECK(std::abs(M.a * M.d - M.b * M.c - 1.0) < 1e-12);
    MoebiusMap N(-M.a, -M.b, -M.c, -M.d);
    CHECK(M.same_up_to_sign(N));
}

TEST_CASE("fixed points: dilation and golden ratio") {
    // z -> qz, |q| > 1: attracting infinity, repelling 0
    auto fp = fixed_points(MoebiusMap::dilation(cplx(3, 1)));
    CHECK(fp.attracting.at_inf);
    CHECK(!fp.repelling.at_inf);
    CHECK(std::abs(fp.repelling.z) < 1e-14);

    // (2,1,1,1): golden ratio pair
    auto g = fixed_points(MoebiusMap(2, 1, 1, 1));
    double golden = (1 + std::sqrt(5.0)) / 2;
    CHECK(g.attracting.z.real() == Approx(golden).margin(1e-12));
    CHECK(g.repelling.z.real() == Approx(golden - std::sqrt(5.0)).margin(1e-12));

    // parabolic z -> z/(cz+1): double fixed point 0
    MoebiusMap P(1, 0, cplx(0.3, 0.2), 1);
    auto pf = fixed_points(P);
    CHECK(std::abs(pf.attracting.z) < 1e-10);
    CHECK(std::abs(pf.repelling.z) < 1e-10);

    CHECK_THROWS(fixed_points(MoebiusMap::identity_map()));
    CHECK_THROWS(fixed_points(MoebiusMap::dilation(std::exp(cplx(0, 1.0)))));
}

TEST_CASE("fixed points are fixed and correctly labeled") {
    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        MoebiusMap M = random_loxodromic(rng);
        auto fp = fixed_points(M);
        REQUIRE(!fp.attracting.at_inf);
        REQUIRE(!fp.repelling.at_inf);
        CHECK(std::abs(M(fp.attracting.z) - fp.attracting.z) < 1e-10);
        CHECK(std::abs(M(fp.repelling.z) - fp.repelling.z) < 1e-10);
        CHECK(std::abs(M.deriv(fp.attracting.z)) < 1.0);
        CHECK(std::abs(M.deriv(fp.repelling.z)) > 1.0);
    }
}

TEST_CASE("multiplier: diagonal and dilation-by-e^{1+i}") {
    auto m = multiplier(MoebiusMap::dilation(cplx(4, 0)));
    CHECK(m.l == Approx(std::log(4.0)).epsilon(1e-14));
    CHECK(m.alpha == Approx(0.0).margin(1e-14));

    auto m2 = multiplier(MoebiusMap::dilation(std::exp(cplx(1, 1))));
    CHECK(m2.l == Approx(1.0).epsilon(1e-13));
    CHECK(m2.alpha == Approx(1.0).epsilon(1e-13));

    // (2,1,1,1): q = ((3+sqrt 5)/2)^2
    auto m3 = multiplier(MoebiusMap(2, 1, 1, 1));
    double q = std::pow((3 + std::sqrt(5.0)) / 2, 2);
    CHECK(m3.l == Approx(std::log(q)).epsilon(1e-12));
    CHECK(m3.alpha == Approx(0.0).margin(1e-12));

    CHECK_THROWS(multiplier(MoebiusMap(1, 1, 0, 1)));
}

TEST_CASE("multiplier conjugation contract") {
    // conjugating by the map sending (p-, p+) -> (0, inf) yields z -> qz
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        MoebiusMap M = random_loxodromic(rng);
        auto fp = fixed_points(M);
        auto m = multiplier(M);
        MoebiusMap th = normalizing_map(fp.repelling.z, fp.attracting.z);
        MoebiusMap conj = th * M * th.inverse();
        for (int k = 0; k < 5; ++k) {
            cplx z = rng.disk(2.0) + cplx(0.1, 0.1);
            CHECK(std::abs(conj(z) - m.q() * z) < 1e-9 * (1 + std::abs(z)));
        }
    }
}

TEST_CASE("fixed point reconstruction recovers the map up to sign") {
    Rng rng(99);
    for (int i = 0; i < 25; ++i) {
        MoebiusMap M = random_loxodromic(rng);
        auto fp = fixed_points(M);
        auto m = multiplier(M);
        MoebiusMap rec = from_fixed_points(fp.repelling.z, fp.attracting.z, m.q());
        CHECK(M.dist_up_to_sign(rec) < 1e-9);
    }
}

TEST_CASE("fixed point distance") {
    MoebiusMap M(2, 1, 1, 1);
    CHECK(fixed_point_distance(M) == Approx(std::sqrt(5.0)).epsilon(1e-14));
    auto fp = fixed_points(M);
    CHECK(fixed_point_distance(M) ==
          Approx(std::abs(fp.attracting.z - fp.repelling.z)).epsilon(1e-12));
    CHECK(std::isinf(fixed_point_distance(MoebiusMap::dilation(cplx(4, 0)))));
    // parabolic: coincident fixed points
    CHECK(fixed_point_distance(MoebiusMap(1, 0, cplx(0.5, 0), 1)) == Approx(0.0).margin(1e-12));
}

TEST_CASE("canonical circles: frozen example and mapping property") {
    // p- = 0, p+ = 1, l = 1, nu = 0
    MoebiusMap M = from_fixed_points(0.0, 1.0, std::exp(cplx(1, 0)));
    auto cc = canonical_circles(M);
    CHECK(cc.minus.center.real() == Approx(-0.5819767068693265).epsilon(1e-12));
    CHECK(cc.plus.center.real() == Approx(1.5819767068693265).epsilon(1e-12));
    CHECK(cc.minus.radius == Approx(0.9595086419657783).epsilon(1e-12));
    CHECK(cc.plus.radius == Approx(cc.minus.radius).epsilon(1e-14));

    // maps the exterior of D_- onto the interior of D_+, boundary to boundary
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        MoebiusMap G = random_loxodromic(rng);
        auto c = canonical_circles(G);
        CHECK(c.minus.radius == Approx(c.plus.radius).epsilon(1e-10));
        for (int k = 0; k < 16; ++k) {
            double t = 2 * kPi * k / 16.0;
            cplx zb = c.minus.center + c.minus.radius * std::exp(cplx(0, t));
            CHECK(std::abs(std::abs(G(zb) - c.plus.center) - c.plus.radius) < 1e-8);
        }
        // far exterior point lands inside D_+
        cplx far = c.minus.center + 50.0 * (c.minus.radius + 1.0);
        CHECK(std::abs(G(far) - c.plus.center) < c.plus.radius);
    }

    CHECK_THROWS(canonical_circles(MoebiusMap(1, 1, 0, 1)));
    CHECK_THROWS(canonical_circles(MoebiusMap::dilation(cplx(4, 0))));
}

TEST_CASE("canonical circles: radius to zero as l grows, tangency in the limit") {
    // l -> large with fixed p±: radius -> 0, centers -> p-/p+
    for (double l : {2.0, 4.0, 8.0}) {
        MoebiusMap M = from_fixed_points(cplx(0), cplx(1), std::exp(cplx(l, 0)));
        auto c = canonical_circles(M);
        CHECK(c.minus.radius < 1.0 / std::sinh(l / 2));
        CHECK(std::abs(c.minus.center - cplx(0)) < 2 * std::exp(-l / 2) + 1e-12);
        CHECK(std::abs(c.plus.center - cplx(1)) < 2 * std::exp(-l / 2) + 1e-12);
    }
    // admissible family l -> 0: circles tend to tangent pair at p with
    // centers p -/+ (1+i nu)/c and radius sqrt(1+nu^2)/|c|
    double nu = 0.8, lambda = 1.7;
    cplx c0 = cplx(1.0, nu) / lambda;
    for (double l : {1e-3, 1e-4}) {
        MoebiusMap M = from_fixed_points(cplx(0), cplx(lambda * l), std::exp(cplx(l, nu * l)));
        auto cc = canonical_circles(M);
        double r_lim = std::sqrt(1 + nu * nu) / std::abs(c0);
        CHECK(std::abs(cc.minus.radius - r_lim) < 20 * l);
        CHECK(std::abs(cc.minus.center - (-cplx(1.0, nu) / c0)) < 20 * l);
        CHECK(std::abs(cc.plus.center - (cplx(1.0, nu) / c0)) < 20 * l);
        // tangency at p = 0: distance between centers equals sum of radii
        double gap = std::abs(cc.plus.center - cc.minus.center) - 2 * cc.minus.radius;
        CHECK(std::abs(gap) < 40 * l * l + 1e-10);
    }
}

TEST_CASE("poincare extension: model actions and isometry") {
    // identity
    HalfSpacePoint p{0.7, cplx(0.3, -0.2)};
    auto q = poincare_extension(MoebiusMap::identity_map(), p);
    CHECK(q.x == Approx(p.x));
    CHECK(std::abs(q.z - p.z) < 1e-14);

    // z -> qz acts as (x,z) -> (|q|x, qz)
    cplx qq(2.0, 1.0);
    auto r = poincare_extension(MoebiusMap::dilation(qq), p);
    CHECK(r.x == Approx(std::abs(qq) * p.x).epsilon(1e-12));
    CHECK(std::abs(r.z - qq * p.z) < 1e-12);

    // z -> z + c acts as (x,z) -> (x, z+c)
    cplx t(1.5, -0.4);
    auto s = poincare_extension(MoebiusMap::translation(t), p);
    CHECK(s.x == Approx(p.x));
    CHECK(std::abs(s.z - (p.z + t)) < 1e-14);

    // preserves hyperbolic distance, and boundary limit agrees with the action
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        MoebiusMap M = random_loxodromic(rng);
        HalfSpacePoint A{rng.uniform(0.05, 3.0), rng.disk(2.0)};
        HalfSpacePoint B{rng.uniform(0.05, 3.0), rng.disk(2.0)};
        double d0 = hyperbolic_distance(A, B);
        double d1 = hyperbolic_distance(poincare_extension(M, A), poincare_extension(M, B));
        CHECK(d1 == Approx(d0).margin(1e-10));

        cplx z0 = rng.disk(2.0);
        auto low = poincare_extension(M, HalfSpacePoint{1e-8, z0});
        CHECK(std::abs(low.z - M(z0)) < 1e-6);
    }
}

TEST_CASE("circle images are exact") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
        MoebiusMap M = random_loxodromic(rng);
        Circle C{rng.disk(2.0), rng.uniform(0.1, 1.5)};
        if (std::abs(M.c) > 1e-12 && std::abs(std::abs(C.center + M.d / M.c) - C.radius) < 0.05)
            continue;  // pole too close to the circle
        Circle D = map_circle(M, C);
        for (int k = 0; k < 12; ++k) {
            cplx zb = C.center + C.radius * std::exp(cplx(0, 2 * kPi * k / 12.0));
            CHECK(std::abs(std::abs(M(zb) - D.center) - D.radius) < 1e-9 * (1 + D.radius));
        }
    }
}
