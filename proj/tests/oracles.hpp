// Independent oracles for the test suites: closed-form parametrizations of
// the preset surfaces (obtained once by symbolic antidifferentiation of the
// preset coefficients) and a finite-difference shape operator that knows
// nothing about the closed-form curvature formulas.
#pragma once

#include <cmath>
#include <functional>

#include "wforge/numeric.hpp"

namespace oracles {

using wf::cplx;
using wf::Vec3;

// enneper preset (mu = 2, nu = z): the triple integrates to
//   (z - z^3/3, i(z + z^3/3), z^2).
inline Vec3 enneper_phi(cplx z) {
    cplx f1 = z - z * z * z / 3.0;
    cplx f2 = cplx(0, 1) * (z + z * z * z / 3.0);
    cplx f3 = z * z;
    return {f1.real(), f2.real(), f3.real()};
}

// catenoid preset (mu = -2/z^2, nu = z): antiderivatives are
//   (z + 1/z, -i(z - 1/z), -2 log z),
// whose real part is single-valued on the annulus.
inline Vec3 catenoid_phi(cplx z) {
    cplx f1 = z + 1.0 / z;
    cplx f2 = cplx(0, -1) * (z - 1.0 / z);
    return {f1.real(), f2.real(), -2.0 * std::log(std::abs(z))};
}

// helicoid = imaginary parts of the same antiderivatives; the third
// component is the (path-dependent) angle, so this form is valid for the
// principal branch only.
inline Vec3 helicoid_phi(cplx z) {
    cplx f1 = z + 1.0 / z;
    cplx f2 = cplx(0, -1) * (z - 1.0 / z);
    return {f1.imag(), f2.imag(), -2.0 * std::arg(z)};
}

// sphere preset: inverse stereographic projection from the north pole.
inline Vec3 sphere_phi(cplx z) {
    double n = std::norm(z);
    return {2.0 * z.real() / (n + 1.0), 2.0 * z.imag() / (n + 1.0), (n - 1.0) / (n + 1.0)};
}

struct ShapeSample {
    Vec3 normal{};
    double E = 0, F = 0, G = 0;  // first fundamental form
    double L = 0, M = 0, N = 0;  // second fundamental form against `normal`
    double H = 0, K = 0;
    double lambda = 0;  // |phi_x|^2 (= |phi_y|^2 for conformal maps)
};

// Plain central-difference shape operator of a parametrized surface.
inline ShapeSample fd_shape(const std::function<Vec3(cplx)>& phi, cplx z, double h) {
    Vec3 c = phi(z);
    Vec3 px = (phi(z + h) - phi(z - h)) / (2 * h);
    Vec3 py = (phi(z + cplx(0, h)) - phi(z - cplx(0, h))) / (2 * h);
    Vec3 pxx = (phi(z + h) - c * 2.0 + phi(z - h)) / (h * h);
    Vec3 pyy = (phi(z + cplx(0, h)) - c * 2.0 + phi(z - cplx(0, h))) / (h * h);
    Vec3 pxy = (phi(z + cplx(h, h)) - phi(z + cplx(h, -h)) - phi(z + cplx(-h, h)) +
                phi(z + cplx(-h, -h))) /
               (4 * h * h);

    ShapeSample s;
    Vec3 n = cross(px, py);
    s.normal = n / norm(n);
    s.E = dot(px, px);
    s.F = dot(px, py);
    s.G = dot(py, py);
    s.L = dot(pxx, s.normal);
    s.M = dot(pxy, s.normal);
    s.N = dot(pyy, s.normal);
    double det = s.E * s.G - s.F * s.F;
    s.H = (s.E * s.N - 2 * s.F * s.M + s.G * s.L) / (2 * det);
    s.K = (s.L * s.N - s.M * s.M) / det;
    s.lambda = s.E;
    return s;
}

}  // namespace oracles
