#include "wforge/geometry.hpp"

#include <cmath>

namespace wf {

namespace {

constexpr double kLimitRadius = 1e-4;

// Hopf coefficient expressions for both pair charts, built once per call
// site. For (mu, nu) data the two charts coincide symbolically; for a general
// triple they are distinct quotients that agree on the overlap.
struct HopfExprs {
    ComplexExpr q_minus, q_plus;

    explicit HopfExprs(const WeierstrassData& d) {
        if (d.kind() == WeierstrassData::Kind::MuNu) {
            ComplexExpr nu_z = d.nu_expr().wirtinger(WirtingerVar::DZ);
            q_minus = -(d.mu_expr() * nu_z);
            // mu_plus = -mu nu^2 and nu_plus = -1/nu; the product collapses
            // to the same expression, so reuse it.
            q_plus = q_minus;
        } else {
            const auto& w = d.omega_exprs();
            ComplexExpr I = ComplexExpr::literal(cplx(0, 1));
            ComplexExpr mu_minus = w[0] - I * w[1];
            ComplexExpr mu_plus = w[0] + I * w[1];
            ComplexExpr nu_minus = w[2] / mu_minus;
            ComplexExpr nu_plus = w[2] / mu_plus;
            q_minus = -(mu_minus * nu_minus.wirtinger(WirtingerVar::DZ));
            q_plus = mu_plus * nu_plus.wirtinger(WirtingerVar::DZ);
        }
    }
};

cplx eval_with_limit(const ComplexExpr& e, cplx p, bool allow_limit) {
    try {
        return e.eval(p);
    } catch (const PoleSignal&) {
        if (!allow_limit) throw;
        cplx acc{};
        const cplx dirs[4] = {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
        for (const cplx& dir : dirs) acc += e.eval(p + kLimitRadius * dir);
        return acc * 0.25;
    }
}

cplx hopf_at(const WeierstrassData& d, const HopfExprs& h, cplx z) {
    CVec3 w = d.omega(z);
    cplx mu_minus = w.x - cplx(0, 1) * w.y;
    cplx mu_plus = w.x + cplx(0, 1) * w.y;
    bool use_minus = std::abs(mu_minus) >= std::abs(mu_plus);
    const ComplexExpr& q = use_minus ? h.q_minus : h.q_plus;
    return eval_with_limit(q, z, d.domain().is_puncture(z, 1e-9));
}

}  // namespace

double induced_metric(const WeierstrassData& d, cplx z) { return 0.5 * norm2(d.omega(z)); }

cplx hopf_differential(const WeierstrassData& d, cplx z) {
    HopfExprs h(d);
    return hopf_at(d, h, z);
}

double mean_curvature(const WeierstrassData& d, cplx z) {
    return geometry_sample(d, z).H;
}

double gaussian_curvature(const WeierstrassData& d, cplx z) {
    return geometry_sample(d, z).K;
}

GeometrySample geometry_sample(const WeierstrassData& d, cplx z, double umbilic_tol) {
    GeometrySample s;
    s.z = z;
    CVec3 w = d.omega(z);
    double n2 = norm2(w);
    s.lambda = 0.5 * n2;
    s.eta = gauss_map(d, z);

    HopfExprs h(d);
    s.q_coeff = hopf_at(d, h, z);

    CVec3 wz = d.omega_zbar(z);
    CVec3 dstar = wz * (-2.0 / n2);
    s.imag_leak = std::max({std::abs(dstar.x.imag()), std::abs(dstar.y.imag()),
                            std::abs(dstar.z.imag())});
    Vec3 dstar_re = real_part(dstar);
    s.H = -dot(dstar_re, s.eta);

    double qn = 2.0 * std::abs(s.q_coeff) / n2;
    s.K = s.H * s.H - qn * qn;
    s.umbilic = qn <= umbilic_tol;
    return s;
}

std::vector<cplx> umbilics(const WeierstrassData& d, const std::vector<cplx>& grid_points,
                           double tol, Exec exec) {
    HopfExprs h(d);
    std::vector<unsigned char> flag(grid_points.size(), 0);
    for_each_index(exec, static_cast<std::ptrdiff_t>(grid_points.size()), [&](std::ptrdiff_t i) {
        try {
            cplx q = hopf_at(d, h, grid_points[i]);
            double n2 = norm2(d.omega(grid_points[i]));
            flag[i] = (2.0 * std::abs(q) / n2 <= tol) ? 1 : 0;
        } catch (const Error&) {
            flag[i] = 0;
        }
    });
    std::vector<cplx> out;
    for (std::size_t i = 0; i < grid_points.size(); ++i)
        if (flag[i]) out.push_back(grid_points[i]);
    return out;
}

}  // namespace wf
