// Surface-definition documents: one JSON object per surface, plus the
// built-in preset catalog. Complex numbers are two-element arrays [re, im];
// expressions are grammar strings.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wforge/paths.hpp"
#include "wforge/spinor.hpp"
#include "wforge/weierstrass.hpp"

namespace wf {

struct LoopConfig {
    std::string label;
    bool is_circle = true;
    cplx center{};
    double radius = 1.0;
    std::vector<cplx> vertices;  // polyline loops
};

struct SurfaceConfig {
    int schema_version = 1;
    std::string name;

    // data
    bool is_munu = true;
    std::string mu, nu;          // munu kind
    std::string w1, w2, w3;      // omega kind

    // domain
    bool is_rectangle = true;
    cplx rect_lo{-1, -1}, rect_hi{1, 1};
    cplx annulus_center{};
    double annulus_inner = 0.5, annulus_outer = 2.0;
    struct PunctureConfig {
        cplx point{};
        int nu_pole_order = 0;
    };
    std::vector<PunctureConfig> punctures;
    double pole_margin = 0.05;

    cplx basepoint{};
    Vec3 base_value{};
    std::vector<LoopConfig> loops;
    int grid_nx = 32, grid_ny = 32;

    struct Tolerances {
        double quadrature = 1e-10;
        double isotropy = 1e-10;
        double nonvanishing = 1e-8;
        double period = 1e-8;
        double integrability = 1e-8;
    } tol;

    double theta = 0.0;
    std::optional<std::array<cplx, 4>> moebius;      // row-major 2x2
    std::optional<std::pair<cplx, cplx>> chart_box;  // spinor chart override

    static SurfaceConfig from_json_text(const std::string& text);
    static SurfaceConfig from_file(const std::string& path);
    std::string to_json_text() const;
};

// Built-in catalog: plane, enneper, catenoid, helicoid, sphere, order-demo,
// perturbed. Throws ConfigError for unknown names.
SurfaceConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// Load either a preset name or a JSON file path.
SurfaceConfig load_config(const std::string& name_or_path);

// Everything the subcommands need, materialized from a config: the working
// data (with the associate-family angle already applied), domain, loops, and
// a default simply connected chart for spinor work.
struct Materialized {
    WeierstrassData data;            // theta applied
    WeierstrassData base_data;       // theta = 0
    std::vector<LoopSpec> loops;
    ChartRect chart{};
    cplx chart_base{};
    SurfaceConfig config;
};

Materialized materialize(const SurfaceConfig& cfg);

}  // namespace wf
