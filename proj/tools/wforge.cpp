// wforge: drive validation, periods, integrability checks, immersion,
// geometry tables, spinor conversion, and the quaternionic action from a
// surface-definition document (JSON file or preset name).
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wforge/config.hpp"
#include "wforge/geometry.hpp"
#include "wforge/mesh.hpp"

using namespace wf;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "% .12g", v);
    return buf;
}

std::string fmt(cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "% .12g %+.12gi", z.real(), z.imag());
    return buf;
}

cplx parse_cplx_arg(const std::string& text) {
    return ComplexExpr::parse(text).eval(cplx(0, 0));
}

int run_validate(const std::string& cfg_name, bool as_json) {
    Materialized m = materialize(load_config(cfg_name));
    ValidationTolerances vt{m.config.tol.isotropy, m.config.tol.nonvanishing};
    ValidationReport rep = validate(m.data, 4096, vt);
    if (as_json) {
        json j;
        j["name"] = m.config.name;
        j["verdict"] = rep.verdict ? "pass" : "fail";
        j["max_isotropy_residual"] = rep.max_isotropy_residual;
        j["min_omega_norm"] = rep.min_omega_norm;
        j["samples"] = rep.samples_used;
        j["reasons"] = rep.reasons;
        j["notes"] = rep.notes;
        json checks = json::array();
        for (const auto& c : rep.puncture_checks) {
            json cj;
            cj["point"] = cplx_json(c.point);
            if (c.ord_mu) cj["ord_mu"] = *c.ord_mu;
            if (c.ord_nu) cj["ord_nu"] = *c.ord_nu;
            cj["applicable"] = c.applicable;
            cj["condition_met"] = c.condition_met;
            cj["note"] = c.note;
            checks.push_back(cj);
        }
        j["puncture_checks"] = checks;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surface: " << m.config.name << "\n";
        std::cout << "samples: " << rep.samples_used << "\n";
        std::cout << "max isotropy residual: " << fmt(rep.max_isotropy_residual) << "\n";
        std::cout << "min |omega|:           " << fmt(rep.min_omega_norm) << "\n";
        for (const auto& c : rep.puncture_checks) {
            std::cout << "puncture (" << c.point.real() << ", " << c.point.imag() << "): ";
            if (c.ord_mu) std::cout << "ord(mu) = " << *c.ord_mu << "  ";
            if (c.ord_nu) std::cout << "ord(nu) = " << *c.ord_nu << "  ";
            if (c.applicable)
                std::cout << (c.condition_met ? "order condition met" : "ORDER CONDITION FAILS");
            if (!c.note.empty()) std::cout << "[" << c.note << "]";
            std::cout << "\n";
        }
        for (const auto& r : rep.reasons) std::cout << "reason: " << r << "\n";
        std::cout << "verdict: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
    }
    return rep.verdict ? kExitPass : kExitFail;
}

int run_periods(const std::string& cfg_name, bool as_json) {
    Materialized m = materialize(load_config(cfg_name));
    if (m.loops.empty()) m.loops = loops_around_punctures(m.data.domain());
    PeriodReport rep = periods(m.data, m.loops, m.config.tol.period, m.config.tol.quadrature);
    if (as_json) {
        json j;
        j["name"] = m.config.name;
        j["tolerance"] = rep.tolerance;
        j["verdict"] = rep.verdict ? "pass" : "fail";
        json loops = json::array();
        for (const auto& lp : rep.loops) {
            loops.push_back({{"label", lp.label},
                             {"period", json::array({cplx_json(lp.period.x),
                                                     cplx_json(lp.period.y),
                                                     cplx_json(lp.period.z)})},
                             {"max_re", max_abs(real_part(lp.period))},
                             {"pure_imaginary", lp.pure_imaginary}});
        }
        j["loops"] = loops;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surface: " << m.config.name << "   period tolerance " << rep.tolerance
                  << "\n";
        for (const auto& lp : rep.loops) {
            std::cout << "  " << lp.label << ":\n";
            std::cout << "    period_1 = " << fmt(lp.period.x) << "\n";
            std::cout << "    period_2 = " << fmt(lp.period.y) << "\n";
            std::cout << "    period_3 = " << fmt(lp.period.z) << "\n";
            std::cout << "    max |Re| = " << fmt(max_abs(real_part(lp.period)))
                      << (lp.pure_imaginary ? "  (pure imaginary)" : "  (REAL PART PRESENT)")
                      << "\n";
        }
        std::cout << "verdict: " << (rep.verdict ? "PASS" : "FAIL") << "\n";
    }
    return rep.verdict ? kExitPass : kExitFail;
}

int run_integrability(const std::string& cfg_name, bool as_json) {
    Materialized m = materialize(load_config(cfg_name));
    double omega_res = integrability_residual(m.data, 64);
    SpinorRep sp = spinor_from_weierstrass(m.data, m.chart, m.chart_base);
    std::vector<cplx> pts;
    for (int iy = 0; iy < 16; ++iy)
        for (int ix = 0; ix < 16; ++ix) {
            cplx z(m.chart.lo.real() +
                       (m.chart.hi.real() - m.chart.lo.real()) * (ix + 0.5) / 16.0,
                   m.chart.lo.imag() +
                       (m.chart.hi.imag() - m.chart.lo.imag()) * (iy + 0.5) / 16.0);
            if (m.data.domain().admissible(z)) pts.push_back(z);
        }
    double spinor_res = spinor_integrability_residual(sp, pts);
    bool pass = omega_res <= m.config.tol.integrability &&
                spinor_res <= m.config.tol.integrability;
    if (as_json) {
        json j;
        j["name"] = m.config.name;
        j["omega_residual"] = omega_res;
        j["spinor_residual"] = spinor_res;
        j["tolerance"] = m.config.tol.integrability;
        j["verdict"] = pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surface: " << m.config.name << "\n";
        std::cout << "closedness residual (triple level): " << fmt(omega_res) << "\n";
        std::cout << "closedness residual (spinor level): " << fmt(spinor_res) << "\n";
        std::cout << "tolerance: " << m.config.tol.integrability << "\n";
        std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

int run_immerse(const std::string& cfg_name, const std::string& out_obj,
                const std::string& out_csv, bool as_json) {
    Materialized m = materialize(load_config(cfg_name));
    ParamGrid grid = sample_domain(m.data.domain(), m.config.grid_nx, m.config.grid_ny);
    SurfaceMesh mesh = build_mesh(m.data, grid, m.config.basepoint, m.config.base_value,
                                  m.config.tol.quadrature, m.config.tol.period);
    mesh.metadata.name = m.config.name;
    mesh.metadata.theta = m.config.theta;
    if (!out_obj.empty()) export_obj(mesh, out_obj);
    if (!out_csv.empty()) export_csv(mesh, out_csv);
    if (as_json) {
        json j;
        j["name"] = m.config.name;
        j["vertices"] = mesh.vertices.size();
        j["faces"] = mesh.faces.size();
        j["max_cycle_defect"] = mesh.metadata.max_cycle_defect;
        j["seam_defect"] = mesh.metadata.seam_defect;
        j["seam_welded"] = mesh.metadata.seam_welded;
        if (!out_obj.empty()) j["obj"] = out_obj;
        if (!out_csv.empty()) j["csv"] = out_csv;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surface: " << m.config.name << "\n";
        std::cout << "vertices: " << mesh.vertices.size() << "  faces: " << mesh.faces.size()
                  << "\n";
        std::cout << "max cycle defect: " << fmt(mesh.metadata.max_cycle_defect) << "\n";
        if (m.data.domain().kind() == Domain::Kind::Annulus) {
            if (mesh.metadata.seam_welded)
                std::cout << "seam: welded\n";
            else
                std::cout << "seam: left cut, defect " << fmt(mesh.metadata.seam_defect) << "\n";
        }
        if (!out_obj.empty()) std::cout << "wrote " << out_obj << "\n";
        if (!out_csv.empty()) std::cout << "wrote " << out_csv << "\n";
    }
    return kExitPass;
}

int run_geometry(const std::string& cfg_name, const std::string& at, bool use_grid,
                 bool as_json) {
    Materialized m = materialize(load_config(cfg_name));
    std::vector<cplx> pts;
    if (!at.empty()) {
        auto comma = at.find(',');
        if (comma == std::string::npos)
            throw ConfigError("--at expects re,im");
        pts.push_back(cplx(std::stod(at.substr(0, comma)), std::stod(at.substr(comma + 1))));
    } else if (use_grid) {
        ParamGrid grid = sample_domain(m.data.domain(), m.config.grid_nx, m.config.grid_ny);
        pts = grid.vertices;
    } else {
        pts = m.data.domain().sample(8);
    }
    json rows = json::array();
    if (!as_json)
        std::cout << "      re(z)          im(z)        lambda             H              K"
                     "           |q|   umbilic\n";
    for (cplx z : pts) {
        GeometrySample s = geometry_sample(m.data, z);
        if (as_json) {
            rows.push_back({{"z", cplx_json(z)},
                            {"lambda", s.lambda},
                            {"eta", json::array({s.eta.x, s.eta.y, s.eta.z})},
                            {"q", cplx_json(s.q_coeff)},
                            {"H", s.H},
                            {"K", s.K},
                            {"umbilic", s.umbilic},
                            {"imag_leak", s.imag_leak}});
        } else {
            std::cout << fmt(z.real()) << " " << fmt(z.imag()) << " " << fmt(s.lambda) << " "
                      << fmt(s.H) << " " << fmt(s.K) << " " << fmt(std::abs(s.q_coeff)) << "   "
                      << (s.umbilic ? "yes" : "no") << "\n";
        }
    }
    if (as_json) {
        json j;
        j["name"] = m.config.name;
        j["samples"] = rows;
        std::cout << j.dump(2) << "\n";
    }
    return kExitPass;
}

int run_spinor(const std::string& cfg_name, const std::string& chart_arg, bool as_json) {
    SurfaceConfig cfg = load_config(cfg_name);
    if (!chart_arg.empty()) {
        double x0, y0, x1, y1;
        if (std::sscanf(chart_arg.c_str(), "%lf,%lf,%lf,%lf", &x0, &y0, &x1, &y1) != 4)
            throw ConfigError("--chart expects x0,y0,x1,y1");
        cfg.chart_box = {cplx(x0, y0), cplx(x1, y1)};
    }
    Materialized m = materialize(cfg);
    SpinorRep sp = spinor_from_weierstrass(m.data, m.chart, m.chart_base);

    std::vector<cplx> pts;
    for (int k = 0; k < 8; ++k) {
        double t = (k + 0.5) / 8.0;
        cplx z(m.chart.lo.real() + t * (m.chart.hi.real() - m.chart.lo.real()),
               m.chart.lo.imag() + t * (m.chart.hi.imag() - m.chart.lo.imag()));
        if (m.data.domain().admissible(z)) pts.push_back(z);
    }
    if (m.loops.empty()) m.loops = loops_around_punctures(m.data.domain());
    SpinorPeriodReport prep = spinor_period_check(sp, m.loops, m.config.tol.period,
                                                  m.config.tol.quadrature);
    double res = spinor_integrability_residual(sp, pts);
    bool pass = prep.verdict && res <= m.config.tol.integrability;

    if (as_json) {
        json j;
        j["name"] = m.config.name;
        j["anchor"] = sp.anchored_on_minus() ? "minus" : "plus";
        j["chart"] = json::array({cplx_json(m.chart.lo), cplx_json(m.chart.hi)});
        json samples = json::array();
        for (cplx z : pts) {
            auto [u, v] = sp.coeffs(z);
            samples.push_back({{"z", cplx_json(z)}, {"u", cplx_json(u)}, {"v", cplx_json(v)}});
        }
        j["samples"] = samples;
        json loops = json::array();
        for (const auto& lp : prep.loops)
            loops.push_back({{"label", lp.label},
                             {"u2", cplx_json(lp.u2)},
                             {"v2", cplx_json(lp.v2)},
                             {"uv", cplx_json(lp.uv)},
                             {"ok", lp.ok}});
        j["loop_periods"] = loops;
        j["integrability_residual"] = res;
        j["verdict"] = pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surface: " << m.config.name << "  anchor: "
                  << (sp.anchored_on_minus() ? "minus" : "plus") << "\n";
        for (cplx z : pts) {
            auto [u, v] = sp.coeffs(z);
            std::cout << "  z = " << fmt(z) << "   u = " << fmt(u) << "   v = " << fmt(v)
                      << "\n";
        }
        for (const auto& lp : prep.loops) {
            std::cout << "  loop " << lp.label << ": int u^2 = " << fmt(lp.u2)
                      << "  int v^2 = " << fmt(lp.v2) << "  int uv = " << fmt(lp.uv)
                      << (lp.ok ? "  ok" : "  VIOLATION") << "\n";
        }
        std::cout << "spinor integrability residual: " << fmt(res) << "\n";
        std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

int run_transform(const std::string& cfg_name, const std::string& matrix_arg,
                  const std::string& rotation_arg, const std::string& out_path, bool as_json) {
    SurfaceConfig cfg = load_config(cfg_name);
    MoebiusAction T;
    if (!matrix_arg.empty()) {
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : matrix_arg) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        if (parts.size() == 2) {
            T = MoebiusAction::quaternion(parse_cplx_arg(parts[0]), parse_cplx_arg(parts[1]));
        } else if (parts.size() == 4) {
            T = {parse_cplx_arg(parts[0]), parse_cplx_arg(parts[1]), parse_cplx_arg(parts[2]),
                 parse_cplx_arg(parts[3])};
        } else {
            throw ConfigError("--matrix expects 'a,b' (quaternionic) or 'a,b,c,d'");
        }
    } else if (!rotation_arg.empty()) {
        auto comma = rotation_arg.find(',');
        if (comma == std::string::npos || comma == 0)
            throw ConfigError("--preset-rotation expects axis,angle");
        char axis = rotation_arg[0];
        double angle = std::stod(rotation_arg.substr(comma + 1));
        T = MoebiusAction::rotation(axis, angle);
    } else {
        throw ConfigError("transform needs --matrix or --preset-rotation");
    }

    Materialized m = materialize(cfg);
    WeierstrassData transformed = act(m.data, T);

    SurfaceConfig out = cfg;
    out.name = cfg.name + "-transformed";
    out.is_munu = false;
    out.mu.clear();
    out.nu.clear();
    out.theta = 0.0;  // already folded into the data
    const auto& w = transformed.omega_exprs();
    out.w1 = w[0].str();
    out.w2 = w[1].str();
    out.w3 = w[2].str();
    out.moebius = std::array<cplx, 4>{T.a, T.b, T.c, T.d};

    std::string doc = out.to_json_text();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot write '" + out_path + "'");
        f << doc;
    }

    if (as_json) {
        json j = json::parse(doc);
        if (T.quaternionic()) {
            Mat3 shadow = so3_shadow(T);
            json rows = json::array();
            for (int r = 0; r < 3; ++r)
                rows.push_back(json::array({shadow(r, 0), shadow(r, 1), shadow(r, 2)}));
            j["shadow"] = rows;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << doc;
        if (T.quaternionic()) {
            Mat3 shadow = so3_shadow(T);
            std::cout << "shadow matrix (scale " << fmt(std::norm(T.a) + std::norm(T.c))
                      << "):\n";
            for (int r = 0; r < 3; ++r)
                std::cout << "  [" << fmt(shadow(r, 0)) << " " << fmt(shadow(r, 1)) << " "
                          << fmt(shadow(r, 2)) << " ]\n";
        } else {
            std::cout << "note: matrix is outside R+ x SU(2); structural conditions are not "
                         "preserved in general\n";
        }
    }
    return kExitPass;
}

int run_associate(const std::string& cfg_name, double theta, const std::string& out_path) {
    SurfaceConfig cfg = load_config(cfg_name);
    cfg.theta += theta;
    cfg.name = cfg.name + "-associate";
    std::string doc = cfg.to_json_text();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ConfigError("cannot write '" + out_path + "'");
        f << doc;
    }
    std::cout << doc;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"conformal immersions from spinor/Weierstrass data"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string cfg, at, out_obj, out_csv, chart, matrix, rotation, out_path;
    bool use_grid = false;
    double theta = 0;

    auto* v = app.add_subcommand("validate", "structural checks on the data")->fallthrough();
    v->add_option("config", cfg, "config file or preset name")->required();

    auto* p = app.add_subcommand("periods", "loop periods and the period condition")->fallthrough();
    p->add_option("config", cfg)->required();

    auto* ig = app.add_subcommand("integrability", "closedness residuals at both levels")->fallthrough();
    ig->add_option("config", cfg)->required();

    auto* im = app.add_subcommand("immerse", "integrate the surface and export meshes")->fallthrough();
    im->add_option("config", cfg)->required();
    im->add_option("--out", out_obj, "OBJ output path");
    im->add_option("--csv", out_csv, "CSV output path");

    auto* g = app.add_subcommand("geometry", "pointwise geometry samples")->fallthrough();
    g->add_option("config", cfg)->required();
    g->add_option("--at", at, "single point re,im");
    g->add_flag("--grid", use_grid, "evaluate on the config grid");

    auto* s = app.add_subcommand("spinor", "spinor coefficients and checks")->fallthrough();
    s->add_option("config", cfg)->required();
    s->add_option("--chart", chart, "chart rectangle x0,y0,x1,y1");

    auto* t = app.add_subcommand("transform", "apply a 2x2 action and emit a new config")->fallthrough();
    t->add_option("config", cfg)->required();
    t->add_option("--matrix", matrix, "a,b (quaternionic) or a,b,c,d");
    t->add_option("--preset-rotation", rotation, "axis,angle");
    t->add_option("--out", out_path, "write the new config here");

    auto* a = app.add_subcommand("associate", "shift the associate-family angle")->fallthrough();
    a->add_option("config", cfg)->required();
    a->add_option("--theta", theta, "angle increment in radians")->required();
    a->add_option("--out", out_path, "write the new config here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (v->parsed()) return run_validate(cfg, as_json);
        if (p->parsed()) return run_periods(cfg, as_json);
        if (ig->parsed()) return run_integrability(cfg, as_json);
        if (im->parsed()) return run_immerse(cfg, out_obj, out_csv, as_json);
        if (g->parsed()) return run_geometry(cfg, at, use_grid, as_json);
        if (s->parsed()) return run_spinor(cfg, chart, as_json);
        if (t->parsed()) return run_transform(cfg, matrix, rotation, out_path, as_json);
        if (a->parsed()) return run_associate(cfg, theta, out_path);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ConfigError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
