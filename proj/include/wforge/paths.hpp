// Contour integration of coefficient functions along piecewise-smooth paths,
// loop periods, and the closedness residual of the real part.
//
// A path is a polyline or a circular arc; integration maps a coefficient
// f (of the form f dz) to  int f(gamma(t)) gamma'(t) dt  with adaptive
// Simpson quadrature, Richardson error estimate, and a hard depth cap.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wforge/parallel.hpp"
#include "wforge/weierstrass.hpp"

namespace wf {

class PathSpec {
public:
    enum class Kind { Polyline, Arc };

    static PathSpec polyline(std::vector<cplx> vertices);
    // counterclockwise full circle
    static PathSpec circle(cplx center, double radius);
    static PathSpec arc(cplx center, double radius, double angle0, double angle1);

    Kind kind() const { return kind_; }
    const std::vector<cplx>& vertices() const { return vertices_; }
    cplx center() const { return center_; }
    double radius() const { return radius_; }
    double angle0() const { return angle0_; }
    double angle1() const { return angle1_; }

    cplx start() const;
    cplx end() const;
    PathSpec reversed() const;

    // number of smooth pieces (polyline segments; 1 for an arc)
    int piece_count() const;
    // position and velocity of piece k at parameter t in [0, 1]
    void piece(int k, double t, cplx& pos, cplx& vel) const;

private:
    Kind kind_ = Kind::Polyline;
    std::vector<cplx> vertices_;
    cplx center_{};
    double radius_ = 0, angle0_ = 0, angle1_ = 0;
};

struct LoopSpec {
    PathSpec path;
    std::string label;

    static LoopSpec circle(cplx center, double radius, std::string label);
    static LoopSpec closed_polyline(std::vector<cplx> vertices, std::string label);
};

inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr int kMaxQuadratureDepth = 40;

CVec3 integrate_form(const std::function<CVec3(cplx)>& coeff, const PathSpec& path,
                     double tol = kDefaultQuadratureTol);
cplx integrate_scalar(const std::function<cplx(cplx)>& coeff, const PathSpec& path,
                      double tol = kDefaultQuadratureTol);

// A multi-piece route (used for integration paths that detour around
// punctures).
using Route = std::vector<PathSpec>;

CVec3 integrate_route(const std::function<CVec3(cplx)>& coeff, const Route& route, double tol);

// Straight path from a to b, replacing any stretch that enters a puncture's
// margin disk by the counterclockwise arc of that disk. Throws PathBlocked if
// an endpoint is inside a margin disk.
Route route_between(const Domain& domain, cplx a, cplx b);

struct LoopPeriod {
    std::string label;
    CVec3 period{};
    Vec3 re_abs{};      // componentwise |Re|
    bool pure_imaginary = false;
};

struct PeriodReport {
    std::vector<LoopPeriod> loops;
    double tolerance = 0;
    bool verdict = false;  // true iff max componentwise |Re| <= tolerance over all loops
};

PeriodReport periods(const WeierstrassData& d, const std::vector<LoopSpec>& loops,
                     double tol = 1e-8, double quad_tol = kDefaultQuadratureTol,
                     Exec exec = Exec::Parallel);

// Convenience: one counterclockwise circle of radius 2*pole_margin around
// each puncture.
std::vector<LoopSpec> loops_around_punctures(const Domain& domain);

// Max over an nx-by-nx sample grid (admissible points only) and over the
// three components of the coefficient of Re(d omega) against dx ^ dy.
//
// Derivation of the formula: with omega = w dz,
//   d omega = w_zbar dzbar ^ dz = -w_zbar dz ^ dzbar = 2i w_zbar dx ^ dy,
// since dz ^ dzbar = -2i dx ^ dy. Hence
//   Re(d omega) = -2 Im(w_zbar) dx ^ dy
// and the residual at a sample is max_i 2 |Im(w_zbar,i)|.
double integrability_residual(const WeierstrassData& d, int grid_samples,
                              Exec exec = Exec::Parallel);

}  // namespace wf
