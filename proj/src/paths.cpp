#include "wforge/paths.hpp"

#include <algorithm>
#include <cmath>

namespace wf {

PathSpec PathSpec::polyline(std::vector<cplx> vertices) {
    if (vertices.size() < 2) throw ConfigError("polyline needs at least two vertices");
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw ConfigError("consecutive polyline vertices must be distinct");
    PathSpec p;
    p.kind_ = Kind::Polyline;
    p.vertices_ = std::move(vertices);
    return p;
}

PathSpec PathSpec::circle(cplx center, double radius) {
    return arc(center, radius, 0.0, 2.0 * M_PI);
}

PathSpec PathSpec::arc(cplx center, double radius, double angle0, double angle1) {
    if (!(radius > 0)) throw ConfigError("arc radius must be positive");
    if (angle0 == angle1) throw ConfigError("arc must subtend a nonzero angle");
    PathSpec p;
    p.kind_ = Kind::Arc;
    p.center_ = center;
    p.radius_ = radius;
    p.angle0_ = angle0;
    p.angle1_ = angle1;
    return p;
}

cplx PathSpec::start() const {
    return kind_ == Kind::Polyline ? vertices_.front() : center_ + std::polar(radius_, angle0_);
}
cplx PathSpec::end() const {
    return kind_ == Kind::Polyline ? vertices_.back() : center_ + std::polar(radius_, angle1_);
}

PathSpec PathSpec::reversed() const {
    if (kind_ == Kind::Polyline) {
        auto v = vertices_;
        std::reverse(v.begin(), v.end());
        return polyline(std::move(v));
    }
    return arc(center_, radius_, angle1_, angle0_);
}

int PathSpec::piece_count() const {
    return kind_ == Kind::Polyline ? static_cast<int>(vertices_.size()) - 1 : 1;
}

void PathSpec::piece(int k, double t, cplx& pos, cplx& vel) const {
    if (kind_ == Kind::Polyline) {
        cplx a = vertices_[k], b = vertices_[k + 1];
        pos = a + t * (b - a);
        vel = b - a;
    } else {
        double ang = angle0_ + t * (angle1_ - angle0_);
        cplx e = std::polar(radius_, ang);
        pos = center_ + e;
        vel = cplx(0, 1) * (angle1_ - angle0_) * e;
    }
}

LoopSpec LoopSpec::circle(cplx center, double radius, std::string label) {
    return {PathSpec::circle(center, radius), std::move(label)};
}

LoopSpec LoopSpec::closed_polyline(std::vector<cplx> vertices, std::string label) {
    if (vertices.front() != vertices.back())
        throw ConfigError("loop polyline must start and end at the same vertex");
    return {PathSpec::polyline(std::move(vertices)), std::move(label)};
}

namespace {

struct Integrand {
    const std::function<CVec3(cplx)>& f;
    const PathSpec& path;
    int piece;

    CVec3 operator()(double t) const {
        cplx pos, vel;
        path.piece(piece, t, pos, vel);
        return f(pos) * vel;
    }
};

CVec3 simpson(const CVec3& fa, const CVec3& fm, const CVec3& fb, double h) {
    return (fa + fm * 4.0 + fb) * (h / 6.0);
}

// Classic adaptive Simpson with the |S2 - S1|/15 Richardson estimate,
// componentwise on the complex triple.
CVec3 adapt(const Integrand& g, double a, double b, const CVec3& fa, const CVec3& fm,
            const CVec3& fb, const CVec3& whole, double tol, int depth) {
    if (depth > kMaxQuadratureDepth) throw MaxDepthExceeded();
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    CVec3 flm = g(lm), frm = g(rm);
    CVec3 left = simpson(fa, flm, fm, m - a);
    CVec3 right = simpson(fm, frm, fb, b - m);
    CVec3 delta = left + right - whole;
    double err = 0;
    for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(delta[i]));
    if (err <= 15.0 * tol) return left + right + delta * (1.0 / 15.0);
    return adapt(g, a, m, fa, flm, fm, left, tol * 0.5, depth + 1) +
           adapt(g, m, b, fm, frm, fb, right, tol * 0.5, depth + 1);
}

CVec3 integrate_piece(const Integrand& g, double tol) {
    CVec3 fa = g(0.0), fm = g(0.5), fb = g(1.0);
    CVec3 whole = simpson(fa, fm, fb, 1.0);
    return adapt(g, 0.0, 1.0, fa, fm, fb, whole, tol, 0);
}

}  // namespace

CVec3 integrate_form(const std::function<CVec3(cplx)>& coeff, const PathSpec& path, double tol) {
    if (!(tol > 0)) throw ConfigError("quadrature tolerance must be positive");
    int pieces = path.piece_count();
    CVec3 acc{};
    double piece_tol = tol / pieces;
    for (int k = 0; k < pieces; ++k) acc += integrate_piece(Integrand{coeff, path, k}, piece_tol);
    return acc;
}

cplx integrate_scalar(const std::function<cplx(cplx)>& coeff, const PathSpec& path, double tol) {
    auto wrapped = [&coeff](cplx z) -> CVec3 { return {coeff(z), cplx{}, cplx{}}; };
    return integrate_form(wrapped, path, tol).x;
}

CVec3 integrate_route(const std::function<CVec3(cplx)>& coeff, const Route& route, double tol) {
    CVec3 acc{};
    for (const PathSpec& p : route) acc += integrate_form(coeff, p, tol);
    return acc;
}

Route route_between(const Domain& domain, cplx a, cplx b) {
    const double margin = domain.pole_margin();
    if (domain.distance_to_punctures(a) < margin || domain.distance_to_punctures(b) < margin)
        throw PathBlocked("path endpoint lies inside a puncture margin disk");
    if (a == b) throw PathBlocked("degenerate path");

    struct Crossing {
        double t_in, t_out;
        cplx center;
    };
    std::vector<Crossing> crossings;
    cplx dir = b - a;
    double len = std::abs(dir);
    for (const Puncture& p : domain.punctures()) {
        // distance from p to the segment a + t (b - a)
        cplx rel = p.point - a;
        double t0 = std::clamp((rel.real() * dir.real() + rel.imag() * dir.imag()) / (len * len),
                               0.0, 1.0);
        double dist = std::abs(a + t0 * dir - p.point);
        if (dist >= margin) continue;
        double half = std::sqrt(margin * margin - dist * dist) / len;
        double tc = (rel.real() * dir.real() + rel.imag() * dir.imag()) / (len * len);
        crossings.push_back({std::max(tc - half, 0.0), std::min(tc + half, 1.0), p.point});
    }
    if (crossings.empty()) return {PathSpec::polyline({a, b})};

    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& l, const Crossing& r) { return l.t_in < r.t_in; });
    for (std::size_t i = 1; i < crossings.size(); ++i)
        if (crossings[i].t_in < crossings[i - 1].t_out)
            throw PathBlocked("puncture margin disks overlap along the path");

    Route route;
    cplx cursor = a;
    for (const Crossing& c : crossings) {
        cplx entry = a + c.t_in * dir;
        cplx exit = a + c.t_out * dir;
        if (cursor != entry) route.push_back(PathSpec::polyline({cursor, entry}));
        double ang0 = std::arg(entry - c.center);
        double ang1 = std::arg(exit - c.center);
        // detour arcs always run counterclockwise
        while (ang1 <= ang0) ang1 += 2.0 * M_PI;
        route.push_back(PathSpec::arc(c.center, margin, ang0, ang1));
        cursor = exit;
    }
    if (cursor != b) route.push_back(PathSpec::polyline({cursor, b}));
    return route;
}

PeriodReport periods(const WeierstrassData& d, const std::vector<LoopSpec>& loops, double tol,
                     double quad_tol, Exec exec) {
    PeriodReport rep;
    rep.tolerance = tol;
    rep.loops.resize(loops.size());
    auto coeff = [&d](cplx z) { return d.omega(z); };
    for_each_index(exec, static_cast<std::ptrdiff_t>(loops.size()), [&](std::ptrdiff_t i) {
        LoopPeriod lp;
        lp.label = loops[i].label;
        lp.period = integrate_form(coeff, loops[i].path, quad_tol);
        Vec3 re = real_part(lp.period);
        lp.re_abs = {std::abs(re.x), std::abs(re.y), std::abs(re.z)};
        lp.pure_imaginary = max_abs(re) <= tol;
        rep.loops[i] = std::move(lp);
    });
    rep.verdict = true;
    for (const LoopPeriod& lp : rep.loops) rep.verdict = rep.verdict && lp.pure_imaginary;
    return rep;
}

std::vector<LoopSpec> loops_around_punctures(const Domain& domain) {
    std::vector<LoopSpec> loops;
    int k = 0;
    for (const Puncture& p : domain.punctures()) {
        loops.push_back(LoopSpec::circle(p.point, 2.0 * domain.pole_margin(),
                                         "puncture-" + std::to_string(k++)));
    }
    return loops;
}

double integrability_residual(const WeierstrassData& d, int grid_samples, Exec exec) {
    if (grid_samples < 1) throw ConfigError("grid_samples must be >= 1");
    // Regular grid over the domain bounding box, keeping admissible points.
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(grid_samples) * grid_samples);
    const Domain& dom = d.domain();
    cplx lo, hi;
    if (dom.kind() == Domain::Kind::Rectangle) {
        lo = dom.rect_lo();
        hi = dom.rect_hi();
    } else {
        lo = dom.center() - cplx(dom.outer_radius(), dom.outer_radius());
        hi = dom.center() + cplx(dom.outer_radius(), dom.outer_radius());
    }
    for (int iy = 0; iy < grid_samples; ++iy) {
        for (int ix = 0; ix < grid_samples; ++ix) {
            double fx = grid_samples == 1 ? 0.5 : static_cast<double>(ix) / (grid_samples - 1);
            double fy = grid_samples == 1 ? 0.5 : static_cast<double>(iy) / (grid_samples - 1);
            cplx z(lo.real() + fx * (hi.real() - lo.real()),
                   lo.imag() + fy * (hi.imag() - lo.imag()));
            if (dom.admissible(z)) pts.push_back(z);
        }
    }
    std::vector<double> res(pts.size(), 0.0);
    for_each_index(exec, static_cast<std::ptrdiff_t>(pts.size()), [&](std::ptrdiff_t i) {
        CVec3 wz = d.omega_zbar(pts[i]);
        res[i] = 2.0 * std::max({std::abs(wz.x.imag()), std::abs(wz.y.imag()),
                                 std::abs(wz.z.imag())});
    });
    double out = 0;
    for (double r : res) out = std::max(out, r);
    return out;
}

}  // namespace wf
