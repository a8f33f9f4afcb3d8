#include "wforge/weierstrass.hpp"

#include <algorithm>
#include <cmath>

namespace wf {

namespace {

// Limit evaluation for removable singularities: the mean over four symmetric
// points on a small circle reproduces the centre value of a holomorphic
// function up to O(r^4).
constexpr double kLimitRadius = 1e-4;

CVec3 circle_average(const std::array<ComplexExpr, 3>& t, cplx p) {
    CVec3 acc{};
    const cplx dirs[4] = {cplx(1, 0), cplx(-1, 0), cplx(0, 1), cplx(0, -1)};
    for (const cplx& d : dirs) {
        cplx z = p + kLimitRadius * d;
        acc += CVec3{t[0].eval(z), t[1].eval(z), t[2].eval(z)};
    }
    return acc * 0.25;
}

}  // namespace

WeierstrassData WeierstrassData::munu(ComplexExpr mu_tilde, ComplexExpr nu, Domain domain) {
    if (!mu_tilde.holomorphic() || !nu.holomorphic())
        throw ConfigError("(mu, nu) data requires holomorphic-flagged expressions");
    WeierstrassData d;
    d.kind_ = Kind::MuNu;
    d.domain_ = std::move(domain);
    d.holomorphic_ = true;
    d.mu_ = mu_tilde;
    d.nu_ = nu;

    ComplexExpr one = ComplexExpr::literal(1.0);
    ComplexExpr two = ComplexExpr::literal(2.0);
    ComplexExpr I = ComplexExpr::literal(cplx(0, 1));
    ComplexExpr nu2 = ComplexExpr::pow(nu, 2);
    d.omega_ = {mu_tilde * ((one - nu2) / two), mu_tilde * (I * (one + nu2) / two),
                mu_tilde * nu};

    // plus-pair recovery: mu_plus = -mu nu^2, nu_plus = -1/nu, and
    // omega = mu_plus * ((1 - nu_plus^2)/2, -i(1 + nu_plus^2)/2, nu_plus).
    ComplexExpr mu_plus = -(mu_tilde * nu2);
    ComplexExpr nu_plus = -(one / nu);
    ComplexExpr nup2 = ComplexExpr::pow(nu_plus, 2);
    d.omega_plus_ = {mu_plus * ((one - nup2) / two), mu_plus * (-(I * (one + nup2) / two)),
                     mu_plus * nu_plus};

    for (int i = 0; i < 3; ++i) d.omega_zbar_[i] = d.omega_[i].wirtinger(WirtingerVar::DZbar);
    return d;
}

WeierstrassData WeierstrassData::omega_triple(ComplexExpr w1, ComplexExpr w2, ComplexExpr w3,
                                              Domain domain) {
    WeierstrassData d;
    d.kind_ = Kind::OmegaTriple;
    d.domain_ = std::move(domain);
    d.omega_ = {std::move(w1), std::move(w2), std::move(w3)};
    d.holomorphic_ = d.omega_[0].holomorphic() && d.omega_[1].holomorphic() &&
                     d.omega_[2].holomorphic();
    for (int i = 0; i < 3; ++i) d.omega_zbar_[i] = d.omega_[i].wirtinger(WirtingerVar::DZbar);
    return d;
}

const ComplexExpr& WeierstrassData::mu_expr() const {
    if (kind_ != Kind::MuNu) throw Error("data has no (mu, nu) pair");
    return mu_;
}
const ComplexExpr& WeierstrassData::nu_expr() const {
    if (kind_ != Kind::MuNu) throw Error("data has no (mu, nu) pair");
    return nu_;
}

CVec3 WeierstrassData::eval_triple(const std::array<ComplexExpr, 3>& t, cplx z) const {
    return {t[0].eval(z), t[1].eval(z), t[2].eval(z)};
}

CVec3 WeierstrassData::omega(cplx z) const {
    try {
        return eval_triple(omega_, z);
    } catch (const PoleSignal&) {
        // At a declared puncture of (mu, nu) data the singularity may be
        // removable; the plus-pair recovery stays finite there when the
        // order condition holds, so take its limit on a small circle.
        if (kind_ == Kind::MuNu && domain_.is_puncture(z, 1e-9)) {
            return circle_average(omega_plus_, z);
        }
        throw;
    }
}

CVec3 WeierstrassData::omega_zbar(cplx z) const { return eval_triple(omega_zbar_, z); }

MuNuValues WeierstrassData::munu_at(cplx z) const {
    CVec3 w = omega(z);
    MuNuValues out;
    out.mu_minus = w.x - cplx(0, 1) * w.y;
    out.mu_plus = w.x + cplx(0, 1) * w.y;
    double scale = norm(w);
    double thr = 1e-10 * (1.0 + scale);
    if (std::abs(out.mu_minus) < thr && std::abs(out.mu_plus) < thr) throw BothMuVanish();
    if (std::abs(out.mu_minus) >= kPoleThreshold) out.nu_minus = w.z / out.mu_minus;
    if (std::abs(out.mu_plus) >= kPoleThreshold) out.nu_plus = w.z / out.mu_plus;
    // Near the zero locus of either factor the quotient is meaningless even
    // if it does not overflow; keep only well-scaled values.
    if (out.nu_minus && std::abs(out.mu_minus) < thr) out.nu_minus.reset();
    if (out.nu_plus && std::abs(out.mu_plus) < thr) out.nu_plus.reset();
    return out;
}

WeierstrassData WeierstrassData::scaled(cplx factor) const {
    ComplexExpr f = ComplexExpr::literal(factor);
    return omega_triple(f * omega_[0], f * omega_[1], f * omega_[2], domain_);
}

double isotropy_residual(const WeierstrassData& d, cplx z) {
    CVec3 w = d.omega(z);
    double n2 = norm2(w);
    if (n2 == 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(isotropy_defect(w)) / n2;
}

CVec3 omega_from_munu(const WeierstrassData& d, cplx z) { return d.omega(z); }

MuNuValues munu_from_omega(const WeierstrassData& d, cplx z) { return d.munu_at(z); }

ValidationReport validate(const WeierstrassData& d, int samples,
                          const ValidationTolerances& tol, Exec exec) {
    ValidationReport rep;
    std::vector<cplx> pts = d.domain().sample(samples);
    rep.samples_used = static_cast<int>(pts.size());

    std::vector<double> iso(pts.size(), 0.0), nrm(pts.size(), 0.0);
    std::vector<unsigned char> bad(pts.size(), 0);
    for_each_index(exec, static_cast<std::ptrdiff_t>(pts.size()), [&](std::ptrdiff_t i) {
        try {
            CVec3 w = d.omega(pts[i]);
            iso[i] = std::abs(isotropy_defect(w)) / std::max(norm2(w), 1e-300);
            nrm[i] = norm(w);
        } catch (const Error&) {
            bad[i] = 1;
        }
    });

    rep.min_omega_norm = std::numeric_limits<double>::infinity();
    int bad_count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (bad[i]) {
            ++bad_count;
            continue;
        }
        rep.max_isotropy_residual = std::max(rep.max_isotropy_residual, iso[i]);
        rep.min_omega_norm = std::min(rep.min_omega_norm, nrm[i]);
    }
    if (bad_count > 0)
        rep.reasons.push_back(std::to_string(bad_count) +
                              " sample(s) failed to evaluate despite the pole margin");

    bool ok = bad_count == 0;
    if (rep.max_isotropy_residual > tol.isotropy) {
        ok = false;
        rep.reasons.push_back("isotropy residual " + std::to_string(rep.max_isotropy_residual) +
                              " exceeds tolerance");
    }
    if (!(rep.min_omega_norm >= tol.nonvanishing)) {
        ok = false;
        rep.reasons.push_back("|omega| drops to " + std::to_string(rep.min_omega_norm) +
                              " below the nonvanishing tolerance");
    }

    if (d.kind() == WeierstrassData::Kind::MuNu) {
        for (const Puncture& p : d.domain().punctures()) {
            PunctureCheck chk;
            chk.point = p.point;
            try {
                chk.ord_mu = order_at(d.mu_expr(), p.point);
            } catch (const InconclusiveOrder&) {
            }
            try {
                chk.ord_nu = order_at(d.nu_expr(), p.point);
            } catch (const InconclusiveOrder&) {
            }
            if (chk.ord_mu && *chk.ord_mu > 0) {
                // A zero of mu_tilde must be matched by a nu pole of half the
                // order; this is the case in which the triple extends.
                chk.applicable = true;
                chk.condition_met = chk.ord_nu && *chk.ord_nu < 0 &&
                                    *chk.ord_mu == -2 * (*chk.ord_nu);
                if (!chk.condition_met) {
                    ok = false;
                    rep.reasons.push_back("order condition fails at puncture (" +
                                          std::to_string(p.point.real()) + ", " +
                                          std::to_string(p.point.imag()) + ")");
                }
                if (chk.ord_nu && p.declared_nu_pole_order > 0 &&
                    *chk.ord_nu != -p.declared_nu_pole_order) {
                    chk.note = "estimated nu order disagrees with the declared pole order";
                    rep.notes.push_back(chk.note);
                }
            } else {
                // No zero of mu_tilde: nothing to match. The point is simply
                // removed from the surface.
                chk.note = "puncture excluded from M";
                rep.notes.push_back(chk.note);
            }
            rep.puncture_checks.push_back(std::move(chk));
        }
    }

    rep.verdict = ok;
    return rep;
}

Vec3 gauss_map(const WeierstrassData& d, cplx z) {
    CVec3 w = d.omega(z);
    cplx mu_minus = w.x - cplx(0, 1) * w.y;
    cplx mu_plus = w.x + cplx(0, 1) * w.y;
    // Homogeneous coordinates [z0 : z1] of the direction on the projective
    // line, chosen from whichever pair is better scaled; the two charts agree
    // because mu_plus * mu_minus = -w3^2.
    cplx z0, z1;
    if (std::abs(mu_minus) >= std::abs(mu_plus)) {
        z0 = mu_minus;
        z1 = w.z;
    } else {
        z0 = -w.z;
        z1 = mu_plus;
    }
    double den = std::norm(z0) + std::norm(z1);
    if (den == 0.0) throw BothMuVanish();
    cplx t = std::conj(z0) * z1;
    return {2.0 * t.real() / den, 2.0 * t.imag() / den, (std::norm(z1) - std::norm(z0)) / den};
}

Vec3 cp1_to_sphere(const Cp1Point& w) {
    if (w.infinite) return {0, 0, 1};
    double n = std::norm(w.value);
    double den = n + 1.0;
    return {2.0 * w.value.real() / den, 2.0 * w.value.imag() / den, (n - 1.0) / den};
}

Cp1Point sphere_to_cp1(const Vec3& x) {
    if (std::abs(norm(x) - 1.0) > 1e-8) throw NonUnitInput();
    cplx xy(x.x, x.y);
    if (x.z <= 0.0) return Cp1Point::finite(xy / (1.0 - x.z));
    // Near the north pole 1 - z cancels; use the algebraically equivalent
    // form (1 + z) / conj(x + i y), exact on the unit sphere.
    if (std::abs(xy) < 1e-300) return Cp1Point::at_infinity();
    return Cp1Point::finite((1.0 + x.z) / std::conj(xy));
}

CVec3 veronese(cplx z0, cplx z1) {
    cplx a = z0 * z0, b = z1 * z1;
    return {a - b, cplx(0, 1) * (a + b), 2.0 * z0 * z1};
}

}  // namespace wf
