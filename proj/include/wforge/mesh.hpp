// Triangulated surface meshes with per-vertex geometry attributes, and their
// OBJ / CSV exports.
#pragma once

#include <string>
#include <vector>

#include "wforge/geometry.hpp"
#include "wforge/grid.hpp"
#include "wforge/immersion.hpp"

namespace wf {

struct MeshMetadata {
    std::string name;
    cplx basepoint{};
    double theta = 0;
    double max_cycle_defect = 0;
    double seam_defect = 0;     // 0 when no seam or the seam was welded
    bool seam_welded = false;
};

struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals;                  // unit normals from the closed form
    std::vector<std::array<int, 3>> faces;      // counterclockwise in parameter space
    // per-vertex attributes
    std::vector<cplx> parameter;                // z
    std::vector<double> lambda, H, K, abs_q;
    std::vector<unsigned char> umbilic;
    MeshMetadata metadata;
};

// Integrate the surface over the grid, attach geometry attributes, and
// handle the annulus seam: the seam is welded when the real part of the seam
// transport agrees across the cut within weld_tol; otherwise the mesh stays
// cut and the defect is reported in the metadata.
SurfaceMesh build_mesh(const WeierstrassData& d, const ParamGrid& grid, cplx basepoint,
                       Vec3 base_value, double tol = kDefaultQuadratureTol,
                       double weld_tol = 1e-8, Exec exec = Exec::Parallel);

void export_obj(const SurfaceMesh& mesh, const std::string& path);
void export_csv(const SurfaceMesh& mesh, const std::string& path);

// Minimal OBJ reader for round-trip checks: fills vertices, normals, faces.
struct ParsedObj {
    std::vector<Vec3> vertices;
    std::vector<Vec3> normals;
    std::vector<std::array<int, 3>> faces;
};
ParsedObj parse_obj(const std::string& path);

}  // namespace wf
