#include "wforge/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "wforge/immersion.hpp"

namespace wf {

using nlohmann::json;

namespace {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }
json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

cplx cplx_from(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("complex values must be two-element arrays [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Vec3 vec3_from(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError("R^3 values must be three-element arrays");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

SurfaceConfig SurfaceConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    try {
        SurfaceConfig c;
        c.schema_version = j.value("schema_version", 1);
        c.name = j.value("name", "unnamed");

        const json& data = j.at("data");
        std::string kind = data.at("kind").get<std::string>();
        if (kind == "munu") {
            c.is_munu = true;
            c.mu = data.at("mu").get<std::string>();
            c.nu = data.at("nu").get<std::string>();
        } else if (kind == "omega") {
            c.is_munu = false;
            c.w1 = data.at("w1").get<std::string>();
            c.w2 = data.at("w2").get<std::string>();
            c.w3 = data.at("w3").get<std::string>();
        } else {
            throw ConfigError("data.kind must be 'munu' or 'omega'");
        }

        const json& dom = j.at("domain");
        std::string dkind = dom.at("kind").get<std::string>();
        if (dkind == "rectangle") {
            c.is_rectangle = true;
            c.rect_lo = cplx_from(dom.at("corners").at(0));
            c.rect_hi = cplx_from(dom.at("corners").at(1));
        } else if (dkind == "annulus") {
            c.is_rectangle = false;
            if (dom.contains("center")) c.annulus_center = cplx_from(dom.at("center"));
            c.annulus_inner = dom.at("radii").at(0).get<double>();
            c.annulus_outer = dom.at("radii").at(1).get<double>();
        } else {
            throw ConfigError("domain.kind must be 'rectangle' or 'annulus'");
        }
        if (dom.contains("punctures")) {
            for (const json& p : dom.at("punctures")) {
                SurfaceConfig::PunctureConfig pc;
                pc.point = cplx_from(p.at("point"));
                pc.nu_pole_order = p.value("nu_pole_order", 0);
                c.punctures.push_back(pc);
            }
        }
        c.pole_margin = dom.value("pole_margin", 0.05);

        if (j.contains("basepoint")) c.basepoint = cplx_from(j.at("basepoint"));
        if (j.contains("base_value")) c.base_value = vec3_from(j.at("base_value"));
        if (j.contains("loops")) {
            for (const json& l : j.at("loops")) {
                LoopConfig lc;
                lc.label = l.value("label", "loop");
                std::string lkind = l.at("kind").get<std::string>();
                if (lkind == "circle") {
                    lc.is_circle = true;
                    lc.center = cplx_from(l.at("center"));
                    lc.radius = l.at("radius").get<double>();
                } else if (lkind == "polyline") {
                    lc.is_circle = false;
                    for (const json& v : l.at("vertices")) lc.vertices.push_back(cplx_from(v));
                } else {
                    throw ConfigError("loop kind must be 'circle' or 'polyline'");
                }
                c.loops.push_back(std::move(lc));
            }
        }
        if (j.contains("grid")) {
            c.grid_nx = j.at("grid").value("nx", 32);
            c.grid_ny = j.at("grid").value("ny", 32);
        }
        if (j.contains("tolerances")) {
            const json& t = j.at("tolerances");
            c.tol.quadrature = t.value("quadrature", c.tol.quadrature);
            c.tol.isotropy = t.value("isotropy", c.tol.isotropy);
            c.tol.nonvanishing = t.value("nonvanishing", c.tol.nonvanishing);
            c.tol.period = t.value("period", c.tol.period);
            c.tol.integrability = t.value("integrability", c.tol.integrability);
        }
        c.theta = j.value("theta", 0.0);
        if (j.contains("moebius")) {
            const json& m = j.at("moebius");
            c.moebius = std::array<cplx, 4>{cplx_from(m.at(0).at(0)), cplx_from(m.at(0).at(1)),
                                            cplx_from(m.at(1).at(0)), cplx_from(m.at(1).at(1))};
        }
        if (j.contains("chart")) {
            c.chart_box = {cplx_from(j.at("chart").at("corners").at(0)),
                           cplx_from(j.at("chart").at("corners").at(1))};
        }
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
}

SurfaceConfig SurfaceConfig::from_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << file.rdbuf();
    return from_json_text(ss.str());
}

std::string SurfaceConfig::to_json_text() const {
    json j;
    j["schema_version"] = schema_version;
    j["name"] = name;
    if (is_munu) {
        j["data"] = {{"kind", "munu"}, {"mu", mu}, {"nu", nu}};
    } else {
        j["data"] = {{"kind", "omega"}, {"w1", w1}, {"w2", w2}, {"w3", w3}};
    }
    json dom;
    if (is_rectangle) {
        dom["kind"] = "rectangle";
        dom["corners"] = json::array({to_json(rect_lo), to_json(rect_hi)});
    } else {
        dom["kind"] = "annulus";
        dom["center"] = to_json(annulus_center);
        dom["radii"] = json::array({annulus_inner, annulus_outer});
    }
    dom["pole_margin"] = pole_margin;
    if (!punctures.empty()) {
        json ps = json::array();
        for (const auto& p : punctures)
            ps.push_back({{"point", to_json(p.point)}, {"nu_pole_order", p.nu_pole_order}});
        dom["punctures"] = ps;
    }
    j["domain"] = dom;
    j["basepoint"] = to_json(basepoint);
    j["base_value"] = to_json(base_value);
    if (!loops.empty()) {
        json ls = json::array();
        for (const auto& l : loops) {
            json lj;
            lj["label"] = l.label;
            if (l.is_circle) {
                lj["kind"] = "circle";
                lj["center"] = to_json(l.center);
                lj["radius"] = l.radius;
            } else {
                lj["kind"] = "polyline";
                json vs = json::array();
                for (cplx v : l.vertices) vs.push_back(to_json(v));
                lj["vertices"] = vs;
            }
            ls.push_back(lj);
        }
        j["loops"] = ls;
    }
    j["grid"] = {{"nx", grid_nx}, {"ny", grid_ny}};
    j["tolerances"] = {{"quadrature", tol.quadrature},
                       {"isotropy", tol.isotropy},
                       {"nonvanishing", tol.nonvanishing},
                       {"period", tol.period},
                       {"integrability", tol.integrability}};
    j["theta"] = theta;
    if (moebius) {
        const auto& m = *moebius;
        j["moebius"] = json::array({json::array({to_json(m[0]), to_json(m[1])}),
                                    json::array({to_json(m[2]), to_json(m[3])})});
    }
    if (chart_box) {
        j["chart"] = {
            {"corners", json::array({to_json(chart_box->first), to_json(chart_box->second)})}};
    }
    return j.dump(2) + "\n";
}

SurfaceConfig preset(const std::string& name) {
    SurfaceConfig c;
    c.name = name;
    if (name == "plane") {
        c.mu = "1";
        c.nu = "0";
        c.loops.push_back({"contractible", true, cplx(0, 0), 0.5, {}});
    } else if (name == "enneper") {
        c.mu = "2";
        c.nu = "z";
        c.loops.push_back({"contractible", true, cplx(0, 0), 0.5, {}});
    } else if (name == "catenoid" || name == "helicoid") {
        c.mu = "-2/z^2";
        c.nu = "z";
        c.is_rectangle = false;
        c.annulus_inner = 0.5;
        c.annulus_outer = 2.0;
        c.punctures.push_back({cplx(0, 0), 0});
        c.pole_margin = 0.1;
        c.basepoint = cplx(1, 0);
        c.grid_nx = 32;
        c.grid_ny = 48;
        c.loops.push_back({"around-waist", true, cplx(0, 0), 1.0, {}});
        c.chart_box = {cplx(0.65, -0.5), cplx(1.9, 0.5)};
        if (name == "catenoid") {
            c.base_value = {2, 0, 0};  // closed-form gauge: x(1) = (2, 0, 0)
        } else {
            c.theta = std::numbers::pi / 2;
        }
    } else if (name == "sphere") {
        // Coefficients of twice the holomorphic derivative of the inverse
        // stereographic parametrization
        //   phi(z) = (z + zbar, -i(z - zbar), z zbar - 1) / (1 + z zbar):
        // differentiating in z gives the triple below, isotropic by
        // construction and nowhere vanishing.
        c.is_munu = false;
        c.w1 = "2*(1-zbar^2)/(1+z*zbar)^2";
        c.w2 = "-2*i*(1+zbar^2)/(1+z*zbar)^2";
        c.w3 = "4*zbar/(1+z*zbar)^2";
        c.base_value = {0, 0, -1};  // phi(0), the tangency point of the chart
        c.loops.push_back({"contractible", true, cplx(0, 0), 0.5, {}});
        c.grid_nx = 33;
        c.grid_ny = 33;
    } else if (name == "order-demo") {
        c.mu = "z^2";
        c.nu = "1/z";
        c.punctures.push_back({cplx(0, 0), 1});
        c.pole_margin = 0.15;
        c.basepoint = cplx(0.5, 0);
        c.loops.push_back({"around-puncture", true, cplx(0, 0), 0.4, {}});
        c.chart_box = {cplx(0.2, -0.35), cplx(0.9, 0.35)};
    } else if (name == "perturbed") {
        // The documented non-integrable example: the enneper triple scaled by
        // the real factor 1 + re(z)/10, which keeps isotropy and
        // nonvanishing but breaks closedness of the real part.
        c.is_munu = false;
        c.w1 = "(1+0.1*re(z))*(1-z^2)";
        c.w2 = "(1+0.1*re(z))*i*(1+z^2)";
        c.w3 = "(1+0.1*re(z))*2*z";
        c.grid_nx = 64;
        c.grid_ny = 64;
        c.loops.push_back({"contractible", true, cplx(0, 0), 0.5, {}});
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return c;
}

std::vector<std::string> preset_names() {
    return {"plane", "enneper", "catenoid", "helicoid", "sphere", "order-demo", "perturbed"};
}

SurfaceConfig load_config(const std::string& name_or_path) {
    for (const std::string& p : preset_names())
        if (p == name_or_path) return preset(p);
    return SurfaceConfig::from_file(name_or_path);
}

namespace {

ChartRect default_chart(const Domain& dom) {
    if (dom.kind() == Domain::Kind::Rectangle) {
        if (dom.punctures().empty()) return {dom.rect_lo(), dom.rect_hi()};
        // carve the sub-rectangle to the right of the rightmost puncture
        double x0 = dom.rect_lo().real();
        for (const Puncture& p : dom.punctures())
            x0 = std::max(x0, p.point.real() + 1.3 * dom.pole_margin());
        if (x0 >= dom.rect_hi().real())
            throw ConfigError("no default chart available; provide one in the config");
        return {cplx(x0, dom.rect_lo().imag()), dom.rect_hi()};
    }
    // inscribed rectangle on the right of the ring
    double r0 = dom.inner_radius(), r1 = dom.outer_radius();
    double h = 0.35 * (r1 - r0);
    double x0 = r0 + 0.1 * (r1 - r0);
    double x1 = std::sqrt(r1 * r1 - h * h) * 0.999;
    return {dom.center() + cplx(x0, -h), dom.center() + cplx(x1, h)};
}

}  // namespace

Materialized materialize(const SurfaceConfig& cfg) {
    std::vector<Puncture> punctures;
    for (const auto& p : cfg.punctures) punctures.push_back({p.point, p.nu_pole_order});
    Domain dom = cfg.is_rectangle
                     ? Domain::rectangle(cfg.rect_lo, cfg.rect_hi, punctures, cfg.pole_margin)
                     : Domain::annulus(cfg.annulus_center, cfg.annulus_inner, cfg.annulus_outer,
                                       punctures, cfg.pole_margin);

    if (!dom.contains(cfg.basepoint)) throw ConfigError("basepoint lies outside the domain");
    if (cfg.moebius) {
        const auto& m = *cfg.moebius;
        if (std::abs(m[0] * m[3] - m[1] * m[2]) < 1e-14)
            throw ConfigError("moebius matrix is singular");
    }

    WeierstrassData base =
        cfg.is_munu
            ? WeierstrassData::munu(ComplexExpr::parse(cfg.mu), ComplexExpr::parse(cfg.nu), dom)
            : WeierstrassData::omega_triple(ComplexExpr::parse(cfg.w1),
                                            ComplexExpr::parse(cfg.w2),
                                            ComplexExpr::parse(cfg.w3), dom);

    Materialized m{cfg.theta != 0.0 ? associate_family(base, cfg.theta) : base, base, {}, {},
                   {}, cfg};

    for (const LoopConfig& l : cfg.loops) {
        if (l.is_circle)
            m.loops.push_back(LoopSpec::circle(l.center, l.radius, l.label));
        else
            m.loops.push_back(LoopSpec::closed_polyline(l.vertices, l.label));
    }

    m.chart = cfg.chart_box ? ChartRect{cfg.chart_box->first, cfg.chart_box->second}
                            : default_chart(dom);
    m.chart_base = m.chart.contains(cfg.basepoint)
                       ? cfg.basepoint
                       : 0.5 * (m.chart.lo + m.chart.hi);
    return m;
}

}  // namespace wf
