// Spinor coefficients on a simply connected chart and the GL(2,C) action.
//
// A spinor pair (u, v) holds the coefficients of the data against the frame
// sqrt(dz): the coefficient triple is recovered by the quadratic map
//   omega = (u^2 - v^2, i(u^2 + v^2), 2 u v),
// and conversely u^2 = mu_minus / 2, v^2 = -mu_plus / 2, uv = w3 / 2. The
// square root is anchored at branch_base with the principal branch and
// continued along straight paths inside the (convex) chart, which is
// single-valued because the chart is simply connected. The anchor is the
// pair coefficient that is larger at branch_base: u = sqrt(mu_minus / 2)
// normally, switching to v = sqrt(-mu_plus / 2) when |mu_minus| < |mu_plus|
// there (so charts containing zeros of one coefficient anchor on the other).
//
// The Dirac operator acts on coefficients by
//   D: f -> f_zbar / |omega|,    |omega| = sqrt(2) (|u|^2 + |v|^2).
//
// Coefficient form of the integrability equations (derived from
// omega_zbar,1 = 2(u u_zbar - v v_zbar), omega_zbar,2 = 2i(u u_zbar +
// v v_zbar), omega_zbar,3 = 2(u_zbar v + u v_zbar)): with
//   A = u u_zbar + conj(v v_zbar),   B = u v_zbar + v u_zbar,
// the closedness of Re(omega) is equivalent to A = 0 and Im(B) = 0, and the
// pointwise residual max(4|Re A|, 4|Im A|, 4|Im B|) equals the triple-level
// residual max_i 2|Im(omega_zbar,i)| identically.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wforge/paths.hpp"
#include "wforge/weierstrass.hpp"

namespace wf {

struct ChartRect {
    cplx lo, hi;

    bool contains(cplx z) const {
        return lo.real() <= z.real() && z.real() <= hi.real() && lo.imag() <= z.imag() &&
               z.imag() <= hi.imag();
    }
};

struct MoebiusAction {
    cplx a{1}, b{0}, c{0}, d{1};  // row-major 2x2

    cplx det() const { return a * d - b * c; }
    bool quaternionic(double tol = 1e-12) const;

    static MoebiusAction identity() { return {}; }
    // T = (alpha, -conj(beta); beta, conj(alpha))
    static MoebiusAction quaternion(cplx alpha, cplx beta);
    // axis in {'x','y','z'}; shadow rotates R^3 by `angle` about that axis
    static MoebiusAction rotation(char axis, double angle);
    static MoebiusAction scaling(double t);  // shadow scales by t^2

    MoebiusAction operator*(const MoebiusAction& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

class SpinorRep {
public:
    static SpinorRep from_weierstrass(const WeierstrassData& data, ChartRect chart,
                                      cplx branch_base);
    static SpinorRep from_expressions(ComplexExpr u, ComplexExpr v, ChartRect chart,
                                      cplx branch_base);

    // coefficient pair at z, branch-continued from branch_base
    std::pair<cplx, cplx> coeffs(cplx z) const;
    // d/dzbar of the coefficient pair (symbolic in expression mode, central
    // differences on the continued branch otherwise)
    std::pair<cplx, cplx> coeffs_zbar(cplx z) const;

    // |omega| reconstructed from the norm identity
    double omega_norm(cplx z) const;
    // Dirac images (Du, Dv) = (u_zbar, v_zbar) / |omega|
    std::pair<cplx, cplx> dirac(cplx z) const;

    const ChartRect& chart() const { return chart_; }
    cplx branch_base() const { return base_; }
    bool anchored_on_minus() const { return minus_anchor_; }
    const WeierstrassData* data() const { return data_ ? &*data_ : nullptr; }
    const MoebiusAction& post_action() const { return post_; }

    SpinorRep transformed(const MoebiusAction& T) const;

private:
    SpinorRep() = default;
    ChartRect chart_{};
    cplx base_{};
    bool minus_anchor_ = true;
    MoebiusAction post_;                    // accumulated action on raw coefficients
    std::optional<WeierstrassData> data_;   // data mode
    ComplexExpr u_expr_, v_expr_;           // expression mode
    ComplexExpr u_zbar_expr_, v_zbar_expr_;

    std::pair<cplx, cplx> raw_coeffs(cplx z) const;
    std::pair<cplx, cplx> raw_coeffs_zbar(cplx z) const;
    friend SpinorRep act(const SpinorRep&, const MoebiusAction&);
};

// omega triple reconstructed from the spinor pair at z (the quadratic map).
CVec3 weierstrass_from_spinor(const SpinorRep& sp, cplx z);

SpinorRep spinor_from_weierstrass(const WeierstrassData& d, ChartRect chart, cplx branch_base);

struct SpinorLoopPeriods {
    std::string label;
    cplx u2{}, v2{}, uv{};  // loop integrals of u^2, v^2, uv against dz
    bool ok = false;        // conj(u2) == v2 and Re(uv) == 0 within tolerance
};

struct SpinorPeriodReport {
    std::vector<SpinorLoopPeriods> loops;
    double tolerance = 0;
    bool verdict = false;
};

// The quadratic coefficients u^2, v^2, uv are single-valued on the whole
// domain (they are linear in the omega triple), so loops may wind around
// punctures even though (u, v) itself lives on a chart.
SpinorPeriodReport spinor_period_check(const SpinorRep& sp, const std::vector<LoopSpec>& loops,
                                       double tol = 1e-8,
                                       double quad_tol = kDefaultQuadratureTol,
                                       Exec exec = Exec::Parallel);

// Max over the sample points of the coefficient-form integrability residual
// described at the top of this header.
double spinor_integrability_residual(const SpinorRep& sp, const std::vector<cplx>& grid_points,
                                     Exec exec = Exec::Parallel);

// (u, v) -> (a u + b v, c u + d v); SingularMatrix if det = 0.
SpinorRep act(const SpinorRep& sp, const MoebiusAction& T);

// Closed-form action on the coefficient triple. The transformed triple is
// linear in (u^2, v^2, uv) and hence in omega, so no branch choice is
// involved; for quaternionic T the matrix is real and equals so3_shadow(T).
WeierstrassData act(const WeierstrassData& d, const MoebiusAction& T);

// The 3x3 real shadow of a quaternionic T = (a, -conj(b); b, conj(a)):
//   [  Re(a^2-b^2)   Im(a^2-b^2)  -2 Re(conj(a) b) ]
//   [ -Im(a^2+b^2)   Re(a^2+b^2)  -2 Im(conj(a) b) ]
//   [  2 Re(a b)     2 Im(a b)     |a|^2 - |b|^2   ]
// Columns are pairwise orthogonal of squared length (|a|^2 + |b|^2)^2 and the
// determinant is positive.
Mat3 so3_shadow(const MoebiusAction& T);

}  // namespace wf
