// Parameter-space grids: a regular rectangle lattice or a polar lattice over
// an annulus (angle seam duplicated). Cells touching a puncture's margin disk
// are dropped; unreferenced vertices are compacted away.
#pragma once

#include <array>
#include <vector>

#include "wforge/domain.hpp"
#include "wforge/numeric.hpp"

namespace wf {

struct GridEdge {
    int a = 0, b = 0;
};

struct ParamGrid {
    Domain::Kind kind = Domain::Kind::Rectangle;
    int nx = 0, ny = 0;                    // logical resolution (radial x angular for polar)
    std::vector<cplx> vertices;            // parameter positions
    std::vector<GridEdge> edges;           // unique lattice edges of kept cells
    std::vector<std::array<int, 4>> quads; // kept cells, counterclockwise
    // For polar grids: pairs (first-column vertex, duplicated seam vertex)
    // describing the same parameter angle modulo 2 pi.
    std::vector<std::pair<int, int>> seam_pairs;
};

// nx, ny >= 2. For an annulus, nx counts radial rings and ny angular steps;
// the angular seam is duplicated and carried in seam_pairs. Throws EmptyGrid
// if every cell is dropped.
ParamGrid sample_domain(const Domain& domain, int nx, int ny);

}  // namespace wf
