#include <cmath>

#include "doctest.h"
#include "wforge/config.hpp"
#include "wforge/immersion.hpp"

using namespace wf;

TEST_CASE("every preset materializes and validates") {
    for (const std::string& name : preset_names()) {
        Materialized m = materialize(preset(name));
        ValidationReport rep = validate(m.base_data, 1024);
        CHECK_MESSAGE(rep.verdict, name);
        CHECK(rep.max_isotropy_residual <= 1e-10);
    }
}

TEST_CASE("config documents round trip through JSON") {
    for (const std::string& name : preset_names()) {
        SurfaceConfig a = preset(name);
        SurfaceConfig b = SurfaceConfig::from_json_text(a.to_json_text());
        CHECK(a.name == b.name);
        CHECK(a.is_munu == b.is_munu);
        CHECK(a.mu == b.mu);
        CHECK(a.w1 == b.w1);
        CHECK(a.theta == b.theta);
        CHECK(a.pole_margin == b.pole_margin);
        CHECK(a.basepoint == b.basepoint);
        CHECK(a.loops.size() == b.loops.size());
        CHECK(a.grid_nx == b.grid_nx);
        // the round-tripped document materializes to the same data
        Materialized ma = materialize(a), mb = materialize(b);
        for (cplx z : ma.data.domain().sample(8)) {
            CVec3 wa = ma.data.omega(z), wb = mb.data.omega(z);
            CHECK(wa.x == wb.x);
            CHECK(wa.y == wb.y);
            CHECK(wa.z == wb.z);
        }
    }
}

TEST_CASE("malformed expressions surface as parse errors with offsets") {
    SurfaceConfig c = preset("enneper");
    c.mu = "z +";
    CHECK_THROWS_AS(materialize(c), ParseError);
    try {
        materialize(c);
    } catch (const ParseError& e) {
        CHECK(e.offset == 3);
    }
}

TEST_CASE("invalid JSON and bad fields raise config errors") {
    CHECK_THROWS_AS(SurfaceConfig::from_json_text("{"), ConfigError);
    CHECK_THROWS_AS(SurfaceConfig::from_json_text("{\"data\": {\"kind\": \"nope\"}}"),
                    ConfigError);
    CHECK_THROWS_AS(preset("does-not-exist"), ConfigError);
    CHECK_THROWS_AS(load_config("/no/such/file.json"), ConfigError);
}

TEST_CASE("helicoid preset is the quarter-turn catenoid") {
    Materialized cat = materialize(preset("catenoid"));
    Materialized hel = materialize(preset("helicoid"));
    WeierstrassData adj = adjoint(cat.data);
    for (cplx z : cat.data.domain().sample(16)) {
        CVec3 a = hel.data.omega(z), b = adj.omega(z);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.z == b.z);
    }
}

TEST_CASE("materialization is deterministic") {
    Materialized a = materialize(preset("catenoid"));
    Materialized b = materialize(preset("catenoid"));
    ValidationReport ra = validate(a.data, 512), rb = validate(b.data, 512);
    CHECK(ra.max_isotropy_residual == rb.max_isotropy_residual);
    CHECK(ra.min_omega_norm == rb.min_omega_norm);
    PeriodReport pa = periods(a.data, a.loops, 1e-8), pb = periods(b.data, b.loops, 1e-8);
    REQUIRE(pa.loops.size() == pb.loops.size());
    for (std::size_t i = 0; i < pa.loops.size(); ++i) {
        CHECK(pa.loops[i].period.x == pb.loops[i].period.x);
        CHECK(pa.loops[i].period.y == pb.loops[i].period.y);
        CHECK(pa.loops[i].period.z == pb.loops[i].period.z);
    }
}
