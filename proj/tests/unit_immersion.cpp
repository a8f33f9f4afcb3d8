#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "wforge/config.hpp"
#include "wforge/immersion.hpp"
#include "wforge/mesh.hpp"

using namespace wf;

namespace {
WeierstrassData preset_data(const char* name) { return materialize(preset(name)).data; }
}  // namespace

TEST_CASE("single-target integration") {
    WeierstrassData plane = preset_data("plane");
    // omega = (1/2, i/2, 0); real part along [0, 1] accumulates (1/2, 0, 0)
    std::vector<Vec3> pts = immerse(plane, cplx(0, 0), {0, 0, 0}, {cplx(1, 0)});
    CHECK(norm(pts[0] - Vec3{0.5, 0, 0}) < 1e-12);

    // empty path returns the base value untouched
    WeierstrassData enneper = preset_data("enneper");
    std::vector<Vec3> base = immerse(enneper, cplx(0, 0), {3, -1, 2}, {cplx(0, 0)});
    CHECK(norm(base[0] - Vec3{3, -1, 2}) == 0.0);
}

TEST_CASE("catenoid grid matches its closed form") {
    // hand values of the closed form (z + 1/z, -i(z - 1/z), -2 log z) taken
    // at five points, locking the parametrization before the sweep below
    struct Probe {
        cplx z;
        Vec3 expect;
    };
    const Probe probes[] = {
        {cplx(1, 0), {2.0, 0.0, 0.0}},
        {cplx(2, 0), {2.5, 0.0, -2.0 * std::log(2.0)}},
        {cplx(0, 1), {0.0, 2.0, 0.0}},                   // i + 1/i = 0; -i(i + i) has Re 2
        {cplx(-1, 0), {-2.0, 0.0, 0.0}},
        {cplx(0.5, 0), {2.5, 0.0, 2.0 * std::log(2.0)}},
    };
    for (const Probe& p : probes) CHECK(norm(oracles::catenoid_phi(p.z) - p.expect) < 1e-12);

    WeierstrassData cat = preset_data("catenoid");
    ParamGrid grid = sample_domain(cat.domain(), 8, 8);
    GridImmersion gi = immerse_grid(cat, grid, cplx(1, 0), {2, 0, 0});
    double worst = 0;
    for (std::size_t v = 0; v < grid.vertices.size(); ++v)
        worst = std::max(worst, norm(gi.values[v] - oracles::catenoid_phi(grid.vertices[v])));
    CHECK(worst < 1e-6);
    CHECK(gi.max_cycle_defect < 1e-8);
}

TEST_CASE("adjoint relations") {
    WeierstrassData enneper = preset_data("enneper");
    WeierstrassData adj = adjoint(enneper);
    // at the origin the triple rotates from (1, i, 0) to (-i, 1, 0)
    CVec3 w = adj.omega(cplx(0, 0));
    CHECK(std::abs(w.x - cplx(0, -1)) < 1e-14);
    CHECK(std::abs(w.y - cplx(1, 0)) < 1e-14);
    // applying it twice flips the sign of the triple
    WeierstrassData twice = adjoint(adj);
    for (cplx z : enneper.domain().sample(32)) {
        CVec3 a = twice.omega(z), b = enneper.omega(z);
        CHECK(std::abs(a.x + b.x) < 1e-13);
        CHECK(std::abs(a.y + b.y) < 1e-13);
        CHECK(std::abs(a.z + b.z) < 1e-13);
    }
    // adjoint needs holomorphic data
    CHECK_THROWS_AS(adjoint(preset_data("sphere")), NotHolomorphic);
}

TEST_CASE("the adjoint of the catenoid contains a vertical line") {
    WeierstrassData hel = adjoint(preset_data("catenoid"));
    // along the unit circle the surface runs straight up the z-axis
    std::vector<cplx> targets;
    std::vector<Vec3> expected;
    for (double t : {0.3, 0.9, 1.8, 2.6}) {
        targets.push_back(std::polar(1.0, t));
        expected.push_back({0, 0, -2.0 * t});
    }
    // integrate along the circle itself to avoid branch ambiguity of the angle
    Vec3 prev{0, 0, 0};
    cplx from(1, 0);
    auto coeff = [&](cplx z) { return hel.omega(z); };
    for (std::size_t k = 0; k < targets.size(); ++k) {
        double a0 = std::arg(from), a1 = std::arg(targets[k]);
        Vec3 value = prev + real_part(integrate_form(coeff, PathSpec::arc(cplx(0, 0), 1.0, a0, a1),
                                                     1e-11));
        CHECK(norm(value - expected[k]) < 1e-6);
        prev = value;
        from = targets[k];
    }
}

TEST_CASE("associate family") {
    WeierstrassData enneper = preset_data("enneper");
    WeierstrassData same = associate_family(enneper, 0.0);
    WeierstrassData quarter = associate_family(enneper, std::numbers::pi / 2);
    WeierstrassData adj = adjoint(enneper);
    for (cplx z : enneper.domain().sample(64)) {
        CVec3 a = same.omega(z), b = enneper.omega(z);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.z == b.z);
        // the quarter turn is the adjoint bit for bit
        CVec3 qa = quarter.omega(z), qb = adj.omega(z);
        CHECK(qa.x == qb.x);
        CHECK(qa.y == qb.y);
        CHECK(qa.z == qb.z);
        // |multiplier| = 1 keeps the metric
        double l0 = 0.5 * norm2(b), l1 = 0.5 * norm2(associate_family(enneper, 1.1).omega(z));
        CHECK(std::abs(l0 - l1) <= 1e-10 * (1.0 + l0));
    }
}

TEST_CASE("null curve splits into the surface and its adjoint") {
    WeierstrassData enneper = preset_data("enneper");
    std::vector<cplx> targets = enneper.domain().sample(24);
    std::vector<CVec3> f = null_curve(enneper, cplx(0, 0), targets, 1e-11);
    std::vector<Vec3> re = immerse(enneper, cplx(0, 0), {0, 0, 0}, targets, 1e-11);
    std::vector<Vec3> im = immerse(adjoint(enneper), cplx(0, 0), {0, 0, 0}, targets, 1e-11);
    for (std::size_t k = 0; k < targets.size(); ++k) {
        CHECK(norm(real_part(f[k]) - re[k]) == 0.0);  // same quadrature by construction
        CHECK(norm(imag_part(f[k]) - im[k]) < 2e-11);
        // the tangent triple is isotropic
        CVec3 w = enneper.omega(targets[k]);
        CHECK(std::abs(isotropy_defect(w)) <= 1e-10 * norm2(w));
    }
}

TEST_CASE("path independence on a simply connected domain") {
    WeierstrassData enneper = preset_data("enneper");
    auto coeff = [&](cplx z) { return enneper.omega(z); };
    cplx a(-0.7, -0.6), b(0.8, 0.5);
    CVec3 p1 = integrate_form(coeff, PathSpec::polyline({a, cplx(0.8, -0.6), b}), 1e-11);
    CVec3 p2 = integrate_form(coeff, PathSpec::polyline({a, cplx(-0.7, 0.5), b}), 1e-11);
    CHECK(max_abs(p1 - p2) < 2e-11);
}

TEST_CASE("integrated tangents are conformal and match the metric") {
    WeierstrassData enneper = preset_data("enneper");
    const double h = 1e-3;
    auto phi = [&](cplx z) {
        return immerse(enneper, cplx(0, 0), {0, 0, 0}, {z}, 1e-12, Exec::Serial)[0];
    };
    for (cplx z : {cplx(0.3, 0.2), cplx(-0.4, 0.5), cplx(0.1, -0.6)}) {
        Vec3 px = (phi(z + h) - phi(z - h)) / (2 * h);
        Vec3 py = (phi(z + cplx(0, h)) - phi(z - cplx(0, h))) / (2 * h);
        double nx = norm(px), ny = norm(py);
        CHECK(std::abs(nx - ny) <= 1e-4 * nx);
        CHECK(std::abs(dot(px, py)) <= 1e-4 * nx * ny);
        double lambda = 0.5 * norm2(enneper.omega(z));
        CHECK(std::abs(dot(px, px) - lambda) <= 1e-4 * lambda);
    }
}

TEST_CASE("adjoint tangents are the quarter-turned originals") {
    WeierstrassData enneper = preset_data("enneper");
    WeierstrassData adj = adjoint(enneper);
    const double h = 1e-3;
    auto phi = [&](const WeierstrassData& d, cplx z) {
        return immerse(d, cplx(0, 0), {0, 0, 0}, {z}, 1e-12, Exec::Serial)[0];
    };
    cplx z(0.25, -0.35);
    Vec3 px = (phi(enneper, z + h) - phi(enneper, z - h)) / (2 * h);
    Vec3 py = (phi(enneper, z + cplx(0, h)) - phi(enneper, z - cplx(0, h))) / (2 * h);
    Vec3 ax = (phi(adj, z + h) - phi(adj, z - h)) / (2 * h);
    Vec3 ay = (phi(adj, z + cplx(0, h)) - phi(adj, z - cplx(0, h))) / (2 * h);
    CHECK(norm(ax + py) <= 1e-4 * norm(py));
    CHECK(norm(ay - px) <= 1e-4 * norm(px));
}
