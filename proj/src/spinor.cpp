#include "wforge/spinor.hpp"

#include <cmath>

namespace wf {

namespace {

// Anchor coefficient g with u^2 = g (minus anchor, g = mu_minus/2) or
// v^2 = g (plus anchor, g = -mu_plus/2).
cplx anchor_value(const WeierstrassData& d, cplx z, bool minus_anchor) {
    CVec3 w = d.omega(z);
    cplx mu = minus_anchor ? w.x - cplx(0, 1) * w.y : w.x + cplx(0, 1) * w.y;
    return minus_anchor ? 0.5 * mu : -0.5 * mu;
}

// Continue the square root of the anchor coefficient along the segment
// [za, zb], starting from the known value s(za) = sa. Splits until the
// anchor changes slowly enough that nearest-value sign matching is
// unambiguous.
cplx continue_sqrt(const WeierstrassData& d, bool minus_anchor, cplx za, cplx zb, cplx sa,
                   int depth = 0) {
    if (depth > 48) throw Error("square-root branch continuation failed to converge");
    cplx ga = sa * sa;
    cplx gb = anchor_value(d, zb, minus_anchor);
    // Safe when the anchor has not moved more than ~half of its modulus.
    if (std::abs(gb - ga) <= 0.5 * std::max(std::abs(ga), std::abs(gb))) {
        cplx c = std::sqrt(gb);
        return std::abs(c - sa) <= std::abs(-c - sa) ? c : -c;
    }
    cplx mid = 0.5 * (za + zb);
    cplx sm = continue_sqrt(d, minus_anchor, za, mid, sa, depth + 1);
    return continue_sqrt(d, minus_anchor, mid, zb, sm, depth + 1);
}

void check_chart(const Domain& dom, const ChartRect& chart) {
    // all four corners (and hence the whole rectangle, for a rectangle
    // domain) must lie in the domain
    const cplx corners[4] = {chart.lo, chart.hi, cplx(chart.lo.real(), chart.hi.imag()),
                             cplx(chart.hi.real(), chart.lo.imag())};
    for (const cplx& c : corners)
        if (!dom.contains(c)) throw ConfigError("chart exceeds the domain");
    if (dom.kind() == Domain::Kind::Annulus) {
        // the rectangle must also clear the inner hole
        double dx = std::max({chart.lo.real() - dom.center().real(),
                              dom.center().real() - chart.hi.real(), 0.0});
        double dy = std::max({chart.lo.imag() - dom.center().imag(),
                              dom.center().imag() - chart.hi.imag(), 0.0});
        if (std::hypot(dx, dy) < dom.inner_radius())
            throw ConfigError("chart overlaps the annulus hole");
    }
    for (const Puncture& p : dom.punctures())
        if (chart.contains(p.point)) throw NotSimplyConnected();
}

}  // namespace

bool MoebiusAction::quaternionic(double tol) const {
    double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
    if (scale == 0) return false;
    return std::abs(c + std::conj(b)) <= tol * scale && std::abs(d - std::conj(a)) <= tol * scale;
}

MoebiusAction MoebiusAction::quaternion(cplx alpha, cplx beta) {
    return {alpha, -std::conj(beta), beta, std::conj(alpha)};
}

MoebiusAction MoebiusAction::rotation(char axis, double angle) {
    double ch = std::cos(angle / 2), sh = std::sin(angle / 2);
    switch (axis) {
        case 'x': return quaternion(cplx(ch, 0), cplx(0, sh));
        case 'y': return quaternion(cplx(ch, 0), cplx(-sh, 0));
        case 'z': return quaternion(std::polar(1.0, -angle / 2), cplx(0, 0));
        default: throw ConfigError("rotation axis must be one of x, y, z");
    }
}

MoebiusAction MoebiusAction::scaling(double t) {
    if (!(t > 0)) throw ConfigError("scaling factor must be positive");
    double r = std::sqrt(t);
    return quaternion(cplx(r, 0), cplx(0, 0));
}

SpinorRep SpinorRep::from_weierstrass(const WeierstrassData& data, ChartRect chart,
                                      cplx branch_base) {
    check_chart(data.domain(), chart);
    if (!chart.contains(branch_base)) throw BranchAnchorInvalid();
    SpinorRep sp;
    sp.chart_ = chart;
    sp.base_ = branch_base;
    sp.data_ = data;

    MuNuValues mn = data.munu_at(branch_base);
    sp.minus_anchor_ = std::abs(mn.mu_minus) >= std::abs(mn.mu_plus);
    cplx g = anchor_value(data, branch_base, sp.minus_anchor_);
    if (std::abs(g) < 1e-14) throw BranchAnchorInvalid();
    return sp;
}

SpinorRep SpinorRep::from_expressions(ComplexExpr u, ComplexExpr v, ChartRect chart,
                                      cplx branch_base) {
    SpinorRep sp;
    sp.chart_ = chart;
    sp.base_ = branch_base;
    sp.u_zbar_expr_ = u.wirtinger(WirtingerVar::DZbar);
    sp.v_zbar_expr_ = v.wirtinger(WirtingerVar::DZbar);
    sp.u_expr_ = std::move(u);
    sp.v_expr_ = std::move(v);
    return sp;
}

std::pair<cplx, cplx> SpinorRep::raw_coeffs(cplx z) const {
    if (!data_) return {u_expr_.eval(z), v_expr_.eval(z)};
    if (!chart_.contains(z)) throw Error("evaluation point lies outside the chart");
    cplx s0 = std::sqrt(anchor_value(*data_, base_, minus_anchor_));
    cplx s = z == base_ ? s0 : continue_sqrt(*data_, minus_anchor_, base_, z, s0);
    cplx w3 = data_->omega(z).z;
    // second coefficient from  u v = w3 / 2
    cplx other = w3 / (2.0 * s);
    return minus_anchor_ ? std::make_pair(s, other) : std::make_pair(other, s);
}

std::pair<cplx, cplx> SpinorRep::raw_coeffs_zbar(cplx z) const {
    if (!data_) return {u_zbar_expr_.eval(z), v_zbar_expr_.eval(z)};
    // Central differences on the continued branch. The stencil values are
    // continued from the centre value, so no sign flip can slip in.
    const double h = 1e-6 * (1.0 + std::abs(z));
    cplx s0 = std::sqrt(anchor_value(*data_, base_, minus_anchor_));
    cplx sc = z == base_ ? s0 : continue_sqrt(*data_, minus_anchor_, base_, z, s0);
    auto at = [&](cplx p) {
        cplx s = continue_sqrt(*data_, minus_anchor_, z, p, sc);
        cplx other = data_->omega(p).z / (2.0 * s);
        return minus_anchor_ ? std::make_pair(s, other) : std::make_pair(other, s);
    };
    auto [upx, vpx] = at(z + h);
    auto [umx, vmx] = at(z - h);
    auto [upy, vpy] = at(z + cplx(0, h));
    auto [umy, vmy] = at(z - cplx(0, h));
    // d/dzbar = (d/dx + i d/dy) / 2
    cplx du = ((upx - umx) + cplx(0, 1) * (upy - umy)) / (4.0 * h);
    cplx dv = ((vpx - vmx) + cplx(0, 1) * (vpy - vmy)) / (4.0 * h);
    return {du, dv};
}

std::pair<cplx, cplx> SpinorRep::coeffs(cplx z) const {
    auto [u, v] = raw_coeffs(z);
    return {post_.a * u + post_.b * v, post_.c * u + post_.d * v};
}

std::pair<cplx, cplx> SpinorRep::coeffs_zbar(cplx z) const {
    auto [du, dv] = raw_coeffs_zbar(z);
    return {post_.a * du + post_.b * dv, post_.c * du + post_.d * dv};
}

double SpinorRep::omega_norm(cplx z) const {
    auto [u, v] = coeffs(z);
    return std::sqrt(2.0) * (std::norm(u) + std::norm(v));
}

std::pair<cplx, cplx> SpinorRep::dirac(cplx z) const {
    auto [du, dv] = coeffs_zbar(z);
    double n = omega_norm(z);
    return {du / n, dv / n};
}

SpinorRep SpinorRep::transformed(const MoebiusAction& T) const {
    if (std::abs(T.det()) < 1e-14) throw SingularMatrix();
    SpinorRep out = *this;
    out.post_ = T * post_;
    return out;
}

CVec3 weierstrass_from_spinor(const SpinorRep& sp, cplx z) {
    auto [u, v] = sp.coeffs(z);
    return veronese(u, v);
}

SpinorRep spinor_from_weierstrass(const WeierstrassData& d, ChartRect chart, cplx branch_base) {
    return SpinorRep::from_weierstrass(d, chart, branch_base);
}

SpinorPeriodReport spinor_period_check(const SpinorRep& sp, const std::vector<LoopSpec>& loops,
                                       double tol, double quad_tol, Exec exec) {
    SpinorPeriodReport rep;
    rep.tolerance = tol;
    rep.loops.resize(loops.size());

    // The quadratic coefficients as a triple (u^2, v^2, uv). In data mode
    // they extend over the whole domain through the omega triple (followed by
    // the quadratic representation of any accumulated 2x2 action); in
    // expression mode they are evaluated from the pair on its chart.
    std::function<CVec3(cplx)> quad;
    if (const WeierstrassData* d = sp.data()) {
        const MoebiusAction T = sp.post_action();
        quad = [d, T](cplx z) -> CVec3 {
            CVec3 w = d->omega(z);
            cplx u2 = 0.5 * (w.x - cplx(0, 1) * w.y);
            cplx v2 = -0.5 * (w.x + cplx(0, 1) * w.y);
            cplx uv = 0.5 * w.z;
            return {T.a * T.a * u2 + T.b * T.b * v2 + 2.0 * T.a * T.b * uv,
                    T.c * T.c * u2 + T.d * T.d * v2 + 2.0 * T.c * T.d * uv,
                    T.a * T.c * u2 + T.b * T.d * v2 + (T.a * T.d + T.b * T.c) * uv};
        };
    } else {
        quad = [&sp](cplx z) -> CVec3 {
            auto [u, v] = sp.coeffs(z);
            return {u * u, v * v, u * v};
        };
    }

    for_each_index(exec, static_cast<std::ptrdiff_t>(loops.size()), [&](std::ptrdiff_t i) {
        SpinorLoopPeriods lp;
        lp.label = loops[i].label;
        CVec3 p = integrate_form(quad, loops[i].path, quad_tol);
        lp.u2 = p.x;
        lp.v2 = p.y;
        lp.uv = p.z;
        lp.ok = std::abs(std::conj(lp.u2) - lp.v2) <= tol && std::abs(lp.uv.real()) <= tol;
        rep.loops[i] = std::move(lp);
    });
    rep.verdict = true;
    for (const auto& lp : rep.loops) rep.verdict = rep.verdict && lp.ok;
    return rep;
}

double spinor_integrability_residual(const SpinorRep& sp, const std::vector<cplx>& grid_points,
                                     Exec exec) {
    std::vector<double> res(grid_points.size(), 0.0);
    for_each_index(exec, static_cast<std::ptrdiff_t>(grid_points.size()), [&](std::ptrdiff_t i) {
        cplx z = grid_points[i];
        auto [u, v] = sp.coeffs(z);
        auto [du, dv] = sp.coeffs_zbar(z);
        cplx A = u * du + std::conj(v * dv);
        cplx B = u * dv + v * du;
        res[i] = 4.0 * std::max({std::abs(A.real()), std::abs(A.imag()), std::abs(B.imag())});
    });
    double out = 0;
    for (double r : res) out = std::max(out, r);
    return out;
}

SpinorRep act(const SpinorRep& sp, const MoebiusAction& T) { return sp.transformed(T); }

WeierstrassData act(const WeierstrassData& d, const MoebiusAction& T) {
    if (std::abs(T.det()) < 1e-14) throw SingularMatrix();
    const cplx a = T.a, b = T.b, c = T.c, dd = T.d;
    const cplx I(0, 1);
    // omega_T is linear in (u^2, v^2, uv) = ((w1 - i w2)/2, -(w1 + i w2)/2,
    // w3/2); collecting coefficients gives a 3x3 complex matrix.
    cplx C[3][3];
    C[0][0] = 0.5 * ((a * a - c * c) - (b * b - dd * dd));
    C[0][1] = -0.5 * I * ((a * a - c * c) + (b * b - dd * dd));
    C[0][2] = a * b - c * dd;
    C[1][0] = 0.5 * I * ((a * a + c * c) - (b * b + dd * dd));
    C[1][1] = 0.5 * ((a * a + c * c) + (b * b + dd * dd));
    C[1][2] = I * (a * b + c * dd);
    C[2][0] = a * c - b * dd;
    C[2][1] = -I * (a * c + b * dd);
    C[2][2] = a * dd + b * c;

    const auto& w = d.omega_exprs();
    ComplexExpr out[3];
    for (int r = 0; r < 3; ++r) {
        out[r] = ComplexExpr::literal(C[r][0]) * w[0] + ComplexExpr::literal(C[r][1]) * w[1] +
                 ComplexExpr::literal(C[r][2]) * w[2];
    }
    return WeierstrassData::omega_triple(out[0], out[1], out[2], d.domain());
}

Mat3 so3_shadow(const MoebiusAction& T) {
    if (!T.quaternionic()) throw NotQuaternionic();
    const cplx a = T.a, b = T.c;  // T = (a, -conj(b); b, conj(a))
    cplx amb = a * a - b * b, apb = a * a + b * b;
    cplx ab = a * b, cab = std::conj(a) * b;
    Mat3 out;
    out(0, 0) = amb.real();
    out(0, 1) = amb.imag();
    out(0, 2) = -2.0 * cab.real();
    out(1, 0) = -apb.imag();
    out(1, 1) = apb.real();
    out(1, 2) = -2.0 * cab.imag();
    out(2, 0) = 2.0 * ab.real();
    out(2, 1) = 2.0 * ab.imag();
    out(2, 2) = std::norm(a) - std::norm(b);
    return out;
}

}  // namespace wf
