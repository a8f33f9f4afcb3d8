// Surface recovery by contour integration: phi = base + Re of the running
// integral of the coefficient triple, its full complex (null-curve) variant,
// and the e^{-i theta} family connecting a surface to its adjoint.
#pragma once

#include <vector>

#include "wforge/grid.hpp"
#include "wforge/paths.hpp"
#include "wforge/weierstrass.hpp"

namespace wf {

// Full complex integral from basepoint to each target along straight paths
// with automatic counterclockwise detours around punctures.
std::vector<CVec3> null_curve(const WeierstrassData& d, cplx basepoint,
                              const std::vector<cplx>& targets,
                              double tol = kDefaultQuadratureTol, Exec exec = Exec::Parallel);

// Real part of the same integrals, shifted by base_value.
std::vector<Vec3> immerse(const WeierstrassData& d, cplx basepoint, Vec3 base_value,
                          const std::vector<cplx>& targets,
                          double tol = kDefaultQuadratureTol, Exec exec = Exec::Parallel);

struct GridImmersion {
    std::vector<Vec3> values;      // one per grid vertex
    double max_cycle_defect = 0;   // max over quad plaquettes of |Re circulation|
};

// Spanning-tree accumulation over the grid edges: one quadrature per edge
// (parallel), then a breadth-first sweep per connected component rooted at
// the vertex nearest the basepoint. Cycle defects over the quad plaquettes
// are recorded as an integrability diagnostic rather than treated as errors.
GridImmersion immerse_grid(const WeierstrassData& d, const ParamGrid& grid, cplx basepoint,
                           Vec3 base_value, double tol = kDefaultQuadratureTol,
                           Exec exec = Exec::Parallel);

// Data of the adjoint surface: the coefficient triple multiplied by -i.
// Requires holomorphic (mu, nu) data.
WeierstrassData adjoint(const WeierstrassData& d);

// Member theta of the family  omega -> e^{-i theta} omega; theta = 0 is the
// identity and theta = pi/2 reproduces adjoint() exactly (the multiplier is
// snapped to the exact unit at quarter turns).
WeierstrassData associate_family(const WeierstrassData& d, double theta);

// Multiplier e^{-i theta} with exact values at quarter turns.
cplx associate_multiplier(double theta);

}  // namespace wf
