// Weierstrass data on a planar domain and its structural validation.
//
// Data comes in two flavours:
//   MuNu        a holomorphic coefficient pair (mu_tilde, nu); the full
//               coefficient triple is recovered as
//                 omega = mu_tilde * ((1 - nu^2)/2, i(1 + nu^2)/2, nu)
//   OmegaTriple three coefficient expressions (w1, w2, w3), allowed to
//               depend on zbar, required to be isotropic and nonvanishing
//
// Throughout, "omega" denotes the coefficient triple of the (1,0)-form
// against dz at a point. The auxiliary pair decomposition is
//   mu_pm = w1 +/- i w2,   nu_pm = w3 / mu_pm,
// with nu_plus * nu_minus = -1 wherever both are defined.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wforge/domain.hpp"
#include "wforge/expr.hpp"
#include "wforge/numeric.hpp"
#include "wforge/parallel.hpp"

namespace wf {

struct ValidationTolerances {
    double isotropy = 1e-10;      // relative to |omega|^2
    double nonvanishing = 1e-8;   // absolute lower bound on |omega|
};

struct PunctureCheck {
    cplx point{};
    std::optional<int> ord_mu;       // empty if inconclusive
    std::optional<int> ord_nu;
    bool applicable = false;         // mu_tilde has a zero here, so the order rule applies
    bool condition_met = false;      // ord_mu = -2 ord_nu with ord_nu < 0
    std::string note;
};

struct ValidationReport {
    double max_isotropy_residual = 0;  // relative
    double min_omega_norm = 0;
    int samples_used = 0;
    std::vector<PunctureCheck> puncture_checks;
    bool verdict = false;
    std::vector<std::string> reasons;
    std::vector<std::string> notes;
};

// Values of the pair decomposition at one point. Absent nu means the
// corresponding mu vanishes there (a pole of that nu).
struct MuNuValues {
    cplx mu_minus{}, mu_plus{};
    std::optional<cplx> nu_minus, nu_plus;
};

class WeierstrassData {
public:
    enum class Kind { MuNu, OmegaTriple };

    static WeierstrassData munu(ComplexExpr mu_tilde, ComplexExpr nu, Domain domain);
    static WeierstrassData omega_triple(ComplexExpr w1, ComplexExpr w2, ComplexExpr w3,
                                        Domain domain);

    Kind kind() const { return kind_; }
    const Domain& domain() const { return domain_; }
    bool holomorphic() const { return holomorphic_; }

    const ComplexExpr& mu_expr() const;  // MuNu only
    const ComplexExpr& nu_expr() const;  // MuNu only
    const std::array<ComplexExpr, 3>& omega_exprs() const { return omega_; }

    // Coefficient triple at z. At a declared puncture of MuNu data the value
    // is extended by continuity through the plus-pair form when the order
    // condition makes the singularity removable; otherwise PoleSignal.
    CVec3 omega(cplx z) const;

    // d/dzbar of the coefficient triple (symbolic; identically zero for
    // holomorphic data).
    CVec3 omega_zbar(cplx z) const;

    MuNuValues munu_at(cplx z) const;

    // Scale the coefficient triple by a constant, preserving structure.
    WeierstrassData scaled(cplx factor) const;

private:
    Kind kind_ = Kind::OmegaTriple;
    Domain domain_ = Domain::rectangle(cplx(-1, -1), cplx(1, 1));
    bool holomorphic_ = false;
    ComplexExpr mu_, nu_;                    // MuNu only
    std::array<ComplexExpr, 3> omega_;       // always present
    std::array<ComplexExpr, 3> omega_zbar_;  // symbolic d/dzbar
    std::array<ComplexExpr, 3> omega_plus_;  // plus-pair recovery (MuNu only)

    CVec3 eval_triple(const std::array<ComplexExpr, 3>& t, cplx z) const;
};

// w1^2 + w2^2 + w3^2 relative to |omega|^2 at z.
double isotropy_residual(const WeierstrassData& d, cplx z);

// Structural validation on a deterministic low-discrepancy sample: isotropy,
// nonvanishing, and (for MuNu data) the zero/pole order rule at each puncture.
ValidationReport validate(const WeierstrassData& d, int samples,
                          const ValidationTolerances& tol = {}, Exec exec = Exec::Parallel);

// Recover the coefficient triple from a (mu, nu) pair at z (delegates to
// WeierstrassData::omega, including the removable extension at punctures).
CVec3 omega_from_munu(const WeierstrassData& d, cplx z);

// Pair decomposition of the coefficient triple at z.
MuNuValues munu_from_omega(const WeierstrassData& d, cplx z);

// Unit normal at z: the sphere image of nu_minus through inverse
// stereographic projection, computed in homogeneous form so points where
// mu_minus vanishes map to the north pole (0,0,1).
Vec3 gauss_map(const WeierstrassData& d, cplx z);

// Affine coordinate on the projective line, with an explicit point at
// infinity.
struct Cp1Point {
    cplx value{};
    bool infinite = false;

    static Cp1Point at_infinity() { return {cplx{}, true}; }
    static Cp1Point finite(cplx v) { return {v, false}; }
};

// Inverse stereographic projection from the north pole N = (0,0,1):
//   w -> (2 Re w, 2 Im w, |w|^2 - 1) / (|w|^2 + 1),  infinity -> N.
Vec3 cp1_to_sphere(const Cp1Point& w);

// Forward stereographic projection; throws NonUnitInput if | |x| - 1 | > 1e-8.
Cp1Point sphere_to_cp1(const Vec3& x);

// The quadratic map (z0, z1) -> (z0^2 - z1^2, i(z0^2 + z1^2), 2 z0 z1); its
// image satisfies w1^2 + w2^2 + w3^2 = 0 identically.
CVec3 veronese(cplx z0, cplx z1);

}  // namespace wf
