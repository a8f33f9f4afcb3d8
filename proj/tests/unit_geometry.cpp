#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wforge/config.hpp"
#include "wforge/geometry.hpp"
#include "wforge/immersion.hpp"

using namespace wf;

namespace {
WeierstrassData preset_data(const char* name) { return materialize(preset(name)).data; }
}  // namespace

TEST_CASE("induced metric") {
    WeierstrassData flat = WeierstrassData::omega_triple(
        ComplexExpr::parse("1"), ComplexExpr::parse("i"), ComplexExpr::parse("0"),
        Domain::rectangle(cplx(-1, -1), cplx(1, 1)));
    CHECK(induced_metric(flat, cplx(0.3, 0.2)) == doctest::Approx(1.0));

    WeierstrassData enneper = preset_data("enneper");
    CHECK(induced_metric(enneper, cplx(0, 0)) == doctest::Approx(1.0));

    // unit multipliers keep lambda
    for (double theta : {0.4, 1.3, 2.9}) {
        WeierstrassData rot = associate_family(enneper, theta);
        for (cplx z : enneper.domain().sample(16)) {
            double l0 = induced_metric(enneper, z), l1 = induced_metric(rot, z);
            CHECK(std::abs(l0 - l1) <= 1e-12 * (1.0 + l0));
        }
    }
}

TEST_CASE("hopf coefficient") {
    WeierstrassData enneper = preset_data("enneper");
    for (cplx z : enneper.domain().sample(32))
        CHECK(std::abs(hopf_differential(enneper, z) + 2.0) < 1e-12);

    WeierstrassData plane = preset_data("plane");
    CHECK(std::abs(hopf_differential(plane, cplx(0.4, -0.2))) < 1e-14);

    WeierstrassData sphere = preset_data("sphere");
    for (cplx z : sphere.domain().sample(64))
        CHECK(std::abs(hopf_differential(sphere, z)) <= 1e-8);
}

TEST_CASE("hopf coefficient agrees across the two pair charts") {
    // reconstruct both chart expressions from the triple and compare them on
    // the overlap, where neither pair coefficient vanishes
    WeierstrassData sphere = preset_data("sphere");
    const auto& w = sphere.omega_exprs();
    ComplexExpr I = ComplexExpr::literal(cplx(0, 1));
    ComplexExpr mu_minus = w[0] - I * w[1];
    ComplexExpr mu_plus = w[0] + I * w[1];
    ComplexExpr q_minus = -(mu_minus * (w[2] / mu_minus).wirtinger(WirtingerVar::DZ));
    ComplexExpr q_plus = mu_plus * (w[2] / mu_plus).wirtinger(WirtingerVar::DZ);
    for (cplx z : sphere.domain().sample(64)) {
        if (std::abs(z) < 0.2) continue;  // stay clear of the mu_minus zero
        cplx a = q_minus.eval(z), b = q_plus.eval(z);
        CHECK(std::abs(a - b) <= 1e-10);
        CHECK(std::abs(hopf_differential(sphere, z) - b) <= 1e-10);
    }

    // same comparison via finite differences of the minus quotient
    const double h = 1e-6;
    auto nu_minus = [&](cplx z) {
        CVec3 t = sphere.omega(z);
        return t.z / (t.x - cplx(0, 1) * t.y);
    };
    for (cplx z : {cplx(0.6, 0.1), cplx(-0.4, 0.5), cplx(0.3, -0.7)}) {
        CVec3 t = sphere.omega(z);
        cplx mu = t.x - cplx(0, 1) * t.y;
        // d/dz = (d/dx - i d/dy) / 2 by central differences
        cplx dnu = ((nu_minus(z + h) - nu_minus(z - h)) -
                    cplx(0, 1) * (nu_minus(z + cplx(0, h)) - nu_minus(z - cplx(0, h)))) /
                   (4.0 * h);
        cplx manual = -mu * dnu;
        CHECK(std::abs(manual - hopf_differential(sphere, z)) < 1e-7);
    }
}

TEST_CASE("mean curvature") {
    // holomorphic data is minimal
    for (const char* name : {"plane", "enneper", "catenoid"}) {
        WeierstrassData d = preset_data(name);
        for (cplx z : d.domain().sample(32)) CHECK(std::abs(mean_curvature(d, z)) <= 1e-10);
    }
    // the unit sphere has constant curvature; with the normal used here the
    // sign comes out positive
    WeierstrassData sphere = preset_data("sphere");
    for (cplx z : sphere.domain().sample(64))
        CHECK(mean_curvature(sphere, z) == doctest::Approx(1.0).epsilon(1e-6));
    // a real dilation of the triple divides H by the same factor
    WeierstrassData big = sphere.scaled(cplx(2.5, 0));
    for (cplx z : sphere.domain().sample(16))
        CHECK(mean_curvature(big, z) == doctest::Approx(1.0 / 2.5).epsilon(1e-6));
}

TEST_CASE("gaussian curvature") {
    WeierstrassData plane = preset_data("plane");
    CHECK(std::abs(gaussian_curvature(plane, cplx(0.2, 0.2))) < 1e-14);

    // enneper at the origin: lambda = 1, q = -2, K = -(2*2/2)^2 = -4,
    // confirmed by the finite-difference shape operator below
    WeierstrassData enneper = preset_data("enneper");
    CHECK(gaussian_curvature(enneper, cplx(0, 0)) == doctest::Approx(-4.0).epsilon(1e-10));
    oracles::ShapeSample fd = oracles::fd_shape(oracles::enneper_phi, cplx(0, 0), 1e-4);
    CHECK(fd.K == doctest::Approx(-4.0).epsilon(1e-5));

    WeierstrassData sphere = preset_data("sphere");
    for (cplx z : sphere.domain().sample(64))
        CHECK(gaussian_curvature(sphere, z) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("closed-form H and K match the shape operator of the integrated surface") {
    struct Probe {
        const char* name;
        std::function<Vec3(cplx)> phi;
        std::vector<cplx> pts;
    };
    const Probe probes[] = {
        {"enneper", oracles::enneper_phi, {cplx(0.3, 0.2), cplx(-0.5, 0.4), cplx(0.1, -0.7)}},
        {"catenoid", oracles::catenoid_phi, {cplx(1.2, 0.3), cplx(0.8, -0.4), cplx(-1.1, 0.6)}},
        {"sphere", oracles::sphere_phi, {cplx(0.2, 0.1), cplx(-0.6, 0.3), cplx(0.4, -0.5)}},
    };
    for (const Probe& p : probes) {
        WeierstrassData d = preset_data(p.name);
        for (cplx z : p.pts) {
            oracles::ShapeSample fd = oracles::fd_shape(p.phi, z, 1e-4);
            GeometrySample s = geometry_sample(d, z);
            CHECK(std::abs(s.H - fd.H) <= 1e-4 * (1.0 + std::abs(fd.H)));
            CHECK(std::abs(s.K - fd.K) <= 1e-4 * (1.0 + std::abs(fd.K)));
            CHECK(std::abs(s.lambda - fd.lambda) <= 1e-4 * fd.lambda);
            CHECK(norm(s.eta - fd.normal) <= 1e-5);
        }
    }
}

TEST_CASE("curvature inequalities") {
    for (const char* name : {"enneper", "catenoid", "sphere", "perturbed"}) {
        WeierstrassData d = preset_data(name);
        for (cplx z : d.domain().sample(64)) {
            GeometrySample s = geometry_sample(d, z);
            CHECK(s.K <= s.H * s.H + 1e-12);
        }
    }
    // for minimal data K is nonpositive and vanishes exactly at umbilics
    WeierstrassData bend = WeierstrassData::munu(ComplexExpr::parse("1"),
                                                 ComplexExpr::parse("z^2"),
                                                 Domain::rectangle(cplx(-1, -1), cplx(1, 1)));
    for (cplx z : bend.domain().sample(64)) {
        GeometrySample s = geometry_sample(bend, z);
        CHECK(s.K <= 0.0);
        CHECK((s.K == 0.0) == (std::abs(s.q_coeff) == 0.0));
    }
}

TEST_CASE("umbilic detection") {
    WeierstrassData enneper = preset_data("enneper");
    CHECK(umbilics(enneper, enneper.domain().sample(128)).empty());

    WeierstrassData sphere = preset_data("sphere");
    std::vector<cplx> pts = sphere.domain().sample(128);
    CHECK(umbilics(sphere, pts).size() == pts.size());

    // q = -2z vanishes only at the origin
    WeierstrassData quad = WeierstrassData::munu(ComplexExpr::parse("1"),
                                                 ComplexExpr::parse("z^2"),
                                                 Domain::rectangle(cplx(-1, -1), cplx(1, 1)));
    std::vector<cplx> grid;
    for (int iy = -4; iy <= 4; ++iy)
        for (int ix = -4; ix <= 4; ++ix) grid.push_back(cplx(ix / 4.0, iy / 4.0));
    std::vector<cplx> hits = umbilics(quad, grid, 1e-8);
    REQUIRE(hits.size() == 1);
    CHECK(std::abs(hits[0]) == 0.0);
}

TEST_CASE("gauss map antiholomorphy at umbilics") {
    // minimal data: the direction function is holomorphic, so its
    // d/dzbar vanishes identically
    WeierstrassData enneper = preset_data("enneper");
    ComplexExpr nu_zbar = enneper.nu_expr().wirtinger(WirtingerVar::DZbar);
    CHECK(nu_zbar.is_zero_literal());

    // the sphere's direction function is purely antiholomorphic and every
    // point is umbilic; its d/dz derivative vanishes
    WeierstrassData sphere = preset_data("sphere");
    const double h = 1e-6;
    auto nu_plus = [&](cplx z) {
        CVec3 w = sphere.omega(z);
        return w.z / (w.x + cplx(0, 1) * w.y);
    };
    for (cplx z : {cplx(0.3, 0.4), cplx(-0.2, 0.6)}) {
        cplx dz = ((nu_plus(z + h) - nu_plus(z - h)) -
                   cplx(0, 1) * (nu_plus(z + cplx(0, h)) - nu_plus(z - cplx(0, h)))) /
                  (4.0 * h);
        CHECK(std::abs(dz) < 1e-8);
    }
}

TEST_CASE("imaginary leakage is reported for non-integrable data") {
    WeierstrassData pert = preset_data("perturbed");
    double max_leak = 0;
    for (cplx z : pert.domain().sample(64))
        max_leak = std::max(max_leak, geometry_sample(pert, z).imag_leak);
    CHECK(max_leak > 1e-4);  // the defect is visible, not silently dropped
    WeierstrassData enneper = preset_data("enneper");
    for (cplx z : enneper.domain().sample(16))
        CHECK(geometry_sample(enneper, z).imag_leak <= 1e-12);
}
