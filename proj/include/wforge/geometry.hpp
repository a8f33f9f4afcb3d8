// Pointwise differential geometry straight from the coefficient triple,
// without integrating the surface.
//
// With omega = w dz and lambda = |w|^2 / 2 the induced metric is
// lambda (dx^2 + dy^2). The Hopf coefficient is
//   q = -mu_minus * d(nu_minus)/dz        away from zeros of mu_minus,
//   q =  mu_plus  * d(nu_plus)/dz         near them,
// the two expressions agreeing on the overlap. The pointwise norm of the
// quadratic differential q dz^2 in the metric's orthonormal frame
// (|w|^2/2) dz^2 is 2|q|/|w|^2, which is where the curvature formulas get
// their normalizing factor:
//   H = -< dstar, eta >,  dstar = -2 w_zbar / |w|^2   (real-valued for
//       integrable data; the imaginary leakage is reported, not dropped),
//   K = H^2 - (2|q| / |w|^2)^2.
#pragma once

#include "wforge/parallel.hpp"
#include "wforge/weierstrass.hpp"

namespace wf {

struct GeometrySample {
    cplx z{};
    double lambda = 0;     // conformal factor of the induced metric
    Vec3 eta{};            // unit normal
    cplx q_coeff{};        // Hopf coefficient against dz^2
    double H = 0;
    double K = 0;
    bool umbilic = false;
    double imag_leak = 0;  // max |Im| of the codifferential triple
};

inline constexpr double kUmbilicTol = 1e-8;

double induced_metric(const WeierstrassData& d, cplx z);
cplx hopf_differential(const WeierstrassData& d, cplx z);
double mean_curvature(const WeierstrassData& d, cplx z);
double gaussian_curvature(const WeierstrassData& d, cplx z);

GeometrySample geometry_sample(const WeierstrassData& d, cplx z,
                               double umbilic_tol = kUmbilicTol);

// Grid points where the normalized Hopf coefficient 2|q|/|w|^2 falls below
// tol.
std::vector<cplx> umbilics(const WeierstrassData& d, const std::vector<cplx>& grid_points,
                           double tol = kUmbilicTol, Exec exec = Exec::Parallel);

}  // namespace wf
